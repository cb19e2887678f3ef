"""Tangles: membership, axiom checking, the natural tangle of a grid, truncation."""

import functools
import logging
import time

from tanglekit.core import defaults, errors, grid, report, separation, utils


class Tangle:
    """An order threshold theta plus a membership rule for oriented separations.

    ground: The graph whose separations are oriented.
    order_threshold: Only separations of order < theta can be members.
    members: An explicit set of Separations, or None.
    predicate: A callable Separation -> bool, used when members is None.
    """

    def __init__(self, ground, order_threshold, members=None, predicate=None):
        assert (members is None) != (predicate is None), (
            "Exactly one of members and predicate must be given."
        )
        self.ground = ground
        self.order_threshold = order_threshold
        self.members = None if members is None else frozenset(members)
        self.predicate = predicate
        self.materialized = None

    @property
    def explicit(self):
        return self.members is not None

    def __contains__(self, sep):
        if sep.order >= self.order_threshold:
            return False
        if self.members is not None:
            return sep in self.members
        return bool(self.predicate(sep))

    def materialize(self, vertex_cap=None, threads=1):
        """An explicit copy of this tangle, cached."""
        if self.members is not None:
            return self
        if self.materialized is None:
            tim_srt_s = time.time()
            seps = separation.enumerate_separations(
                self.ground, self.order_threshold - 1, vertex_cap, threads
            )
            self.materialized = Tangle(
                self.ground,
                self.order_threshold,
                members=[sep for sep in seps if sep in self],
            )
            logging.info(
                "Materialized a tangle of order %d with %d members - "
                "time: %.2f seconds",
                self.order_threshold,
                len(self.materialized.members),
                time.time() - tim_srt_s,
            )
        return self.materialized

    def sorted_members(self, vertex_cap=None, threads=1):
        return sorted(
            self.materialize(vertex_cap, threads).members,
            key=separation.Separation.sort_key,
        )


def _edges_inside(g, side):
    """Bitmask over g.edges of the edges with both ends in side."""
    mask = 0
    for idx, (src, dst) in enumerate(g.edges):
        if src in side and dst in side:
            mask |= 1 << idx
    return mask


def _t2_first(vmasks, emasks, full_v, full_e, firsts):
    """The smallest covering (i, j, k) with i <= j <= k and i in firsts, and a count.

    A triple covers G when its small sides contain every vertex and every edge.
    """
    first = None
    count = 0
    num = len(vmasks)
    for i in firsts:
        for j in range(i, num):
            v_ij, e_ij = vmasks[i] | vmasks[j], emasks[i] | emasks[j]
            need_v, need_e = full_v & ~v_ij, full_e & ~e_ij
            for k in range(j, num):
                if vmasks[k] & need_v == need_v and emasks[k] & need_e == need_e:
                    count += 1
                    if first is None:
                        first = (i, j, k)
    return first, count


def check_axioms(g, t, vertex_cap=None, threads=1):
    """Check the tangle axioms for t over every separation of g of order < theta.

    (T1) some orientation of every such separation is a member; (T2) no three members
    (repeats allowed) have G[A1] + G[A2] + G[A3] = G; (T3) no member has A = V(g).
    Explicit members that are not separations, or are of too high an order, are reported
    before the axioms.
    """
    tim_srt_s = time.time()
    rep = report.Report("check-tangle")
    theta = t.order_threshold
    if t.explicit:
        for sep in sorted(t.members, key=separation.Separation.sort_key):
            if not separation.is_separation(g, sep.side_a, sep.side_b):
                rep.add(report.ViolationKind.MEMBER_NOT_SEPARATION, str(sep), sep.key())
            elif sep.order >= theta:
                rep.add(
                    report.ViolationKind.MEMBER_ORDER_TOO_LARGE,
                    f"{sep} has order {sep.order} >= {theta}",
                    sep.key(),
                )
    seps = separation.enumerate_separations(g, theta - 1, vertex_cap, threads)
    rep.checked = len(seps)
    members = [sep for sep in seps if sep in t]
    rep.details["separations"] = len(seps)
    rep.details["members"] = len(members)
    member_set = set(members)

    # T1
    for sep in seps:
        rev = sep.reversed()
        if sep.key() <= rev.key() and sep not in member_set and rev not in member_set:
            rep.add(
                report.ViolationKind.T1,
                f"neither orientation of {sep} is a member",
                sep.key(),
            )

    # T2
    if members:
        vmasks = [utils.to_mask(sep.side_a) for sep in members]
        emasks = [_edges_inside(g, sep.side_a) for sep in members]
        full_v, full_e = (1 << g.vertex_count) - 1, (1 << g.num_edges) - 1
        res = utils.run_parallel(
            _t2_first,
            [
                (vmasks, emasks, full_v, full_e, chk)
                for chk in utils.chunk(range(len(members)), threads * 4)
            ],
            threads,
        )
        found = [first for first, _ in res if first is not None]
        if found:
            i, j, k = min(found)
            rep.add(
                report.ViolationKind.T2,
                f"the small sides of ({members[i]}), ({members[j]}), ({members[k]}) "
                f"cover G ({sum(cnt for _, cnt in res)} such triples)",
                (members[i].key(), members[j].key(), members[k].key()),
            )

    # T3
    for sep in members:
        if len(sep.side_a) == g.vertex_count:
            rep.add(report.ViolationKind.T3, f"{sep} has A = V", sep.key())

    logging.info(
        "Checked the tangle axioms over %d separations (%d members) - "
        "time: %.2f seconds",
        len(seps),
        len(members),
        time.time() - tim_srt_s,
    )
    return rep


def check_orientations(g, t, vertex_cap=None, threads=1):
    """Report separations of order < theta with both orientations in t."""
    rep = report.Report("orientations")
    seps = separation.enumerate_separations(
        g, t.order_threshold - 1, vertex_cap, threads
    )
    rep.checked = len(seps)
    for sep in seps:
        rev = sep.reversed()
        if sep.key() < rev.key() and sep in t and rev in t:
            rep.add(
                report.ViolationKind.NOT_EXACTLY_ONE_ORIENTATION,
                f"both orientations of {sep} are members",
                sep.key(),
            )
    return rep


def natural_membership(w, sep):
    """Whether sep is in the natural tangle of w: order < r and B contains a cross."""
    separation.check_separation(w.graph, sep)
    return sep.order < w.r and grid.contains_cross(w, sep.side_b)


def natural_tangle(w):
    return Tangle(w.graph, w.r, predicate=functools.partial(natural_membership, w))


class _TruncatedMembership:
    """(C, D) of G - A is a member iff (C + A, D + A) is a member of the parent."""

    def __init__(self, parent, keep, apex):
        self.parent = parent
        # keep[i]: the id in the parent's graph of vertex i of G - A.
        self.keep = tuple(keep)
        self.apex = frozenset(apex)

    def lift(self, sep):
        return separation.Separation(
            frozenset(self.keep[vtx] for vtx in sep.side_a) | self.apex,
            frozenset(self.keep[vtx] for vtx in sep.side_b) | self.apex,
        )

    def __call__(self, sep):
        return self.lift(sep) in self.parent


def truncate(g, t, apex):
    """The tangle T - A on g - apex, of order theta - |apex|."""
    apex = frozenset(apex)
    if len(apex) >= t.order_threshold:
        raise errors.ApexTooLarge(
            f"The apex set has {len(apex)} vertices, but the tangle has order "
            f"{t.order_threshold}"
        )
    keep = sorted(set(g.vertices) - apex)
    return Tangle(
        g.induced(keep),
        t.order_threshold - len(apex),
        predicate=_TruncatedMembership(t, keep, apex),
    )


def check_gridcut(w, max_order=None, vertex_cap=None, threads=1):
    """Every member (A, B) of the natural tangle of w satisfies |A| <= ord(A, B)^2."""
    tim_srt_s = time.time()
    rep = report.Report("verify-gridcut")
    max_order = w.r - 1 if max_order is None else min(max_order, w.r - 1)
    tng = natural_tangle(w)
    seps = separation.enumerate_separations(w.graph, max_order, vertex_cap, threads)
    members = [sep for sep in seps if sep in tng]
    rep.checked = len(members)
    for sep in members:
        if len(sep.side_a) > sep.order**2:
            rep.add(
                report.ViolationKind.GRIDCUT,
                f"{sep} has |A| = {len(sep.side_a)} > {sep.order}^2",
                sep.key(),
            )
    rep.details["r"] = w.r
    rep.details["max_order"] = max_order
    rep.details["separations"] = len(seps)
    rep.details["largest_small_side"] = max(
        (len(sep.side_a) for sep in members), default=0
    )
    logging.info(
        "Checked |A| <= s^2 for %d members of the natural tangle of %r - "
        "time: %.2f seconds",
        len(members),
        w,
        time.time() - tim_srt_s,
    )
    return rep


def default_gridcut_order(r):
    """r - 1 for r <= 3, else capped at DEFAULTS["gridcut_order_cap"]."""
    return r - 1 if r <= 3 else min(r - 1, defaults.DEFAULTS["gridcut_order_cap"])
