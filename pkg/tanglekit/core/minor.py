"""Minor models, induced separations, extended tangles, and a minor-search oracle."""

import logging
import time

import networkx as nx
from networkx.algorithms import isomorphism

from tanglekit.core import defaults, errors, report, separation, tangle, utils


class MinorModel:
    """Branch sets in host witnessing pattern as a minor.

    branch_sets: pattern vertex -> frozenset of host vertices. Branch sets need not
        cover the host.
    """

    def __init__(self, host, pattern, branch_sets):
        self.host = host
        self.pattern = pattern
        self.branch_sets = {h: frozenset(vs) for h, vs in branch_sets.items()}
        self._report = None

    def report(self):
        """The (cached) validate_model() report."""
        if self._report is None:
            self._report = validate_model(self)
        return self._report

    def require_valid(self):
        rep = self.report()
        if not rep.passed:
            raise errors.InvalidModel(f"Invalid minor model: {rep.first}")
        return self

    def branch_of(self, vtx):
        """The pattern vertex whose branch set contains host vertex vtx, or None."""
        for h, bset in self.branch_sets.items():
            if vtx in bset:
                return h
        return None


def validate_model(m):
    """Check the three minor-model laws: disjoint, connected, edges realized."""
    rep = report.Report("check-model")
    host, pattern = m.host, m.pattern
    rep.checked = pattern.vertex_count + pattern.num_edges
    kind = report.ViolationKind
    for h in sorted(set(m.branch_sets) - set(pattern.vertices)):
        rep.add(kind.UNKNOWN_VERTEX, f"pattern has no vertex {h}", (h, -1))
    for h in pattern.vertices:
        if h not in m.branch_sets:
            rep.add(kind.MISSING_BRANCH_SET, f"for pattern vertex {h}", (h,))
        elif not m.branch_sets[h]:
            rep.add(kind.EMPTY_BRANCH_SET, f"for pattern vertex {h}", (h,))
        else:
            for vtx in sorted(m.branch_sets[h]):
                if not 0 <= vtx < host.vertex_count:
                    rep.add(
                        kind.UNKNOWN_VERTEX,
                        f"branch set {h} contains {vtx}, which is not a host vertex",
                        (h, vtx),
                    )

    present = sorted(h for h in pattern.vertices if m.branch_sets.get(h))
    for idx, h_1 in enumerate(present):
        for h_2 in present[idx + 1 :]:
            common = m.branch_sets[h_1] & m.branch_sets[h_2]
            if common:
                rep.add(
                    kind.OVERLAPPING_BRANCH_SETS,
                    f"branch sets {h_1} and {h_2} share {utils.set_to_str(common)}",
                    (h_1, h_2),
                )

    nxg = host.to_networkx()
    for h in present:
        bset = {vtx for vtx in m.branch_sets[h] if 0 <= vtx < host.vertex_count}
        if bset and not nx.is_connected(nxg.subgraph(bset)):
            rep.add(
                kind.DISCONNECTED_BRANCH_SET,
                f"branch set {h} = {{{utils.set_to_str(bset)}}}",
                (h,),
            )

    for h_1, h_2 in pattern.edges:
        bs_1 = [
            vtx for vtx in m.branch_sets.get(h_1, ()) if 0 <= vtx < host.vertex_count
        ]
        bs_2 = m.branch_sets.get(h_2, frozenset())
        if not any(host.neighbors(vtx) & bs_2 for vtx in bs_1):
            rep.add(
                kind.MISSING_PATTERN_EDGE,
                f"no host edge joins branch sets {h_1} and {h_2}",
                (h_1, h_2),
            )
    return rep


def induced_separation(m, sep):
    """({h : V_h meets A}, {h : V_h meets B}), a separation of the pattern."""
    m.require_valid()
    separation.check_separation(m.host, sep)
    return separation.Separation(
        frozenset(h for h, bset in m.branch_sets.items() if bset & sep.side_a),
        frozenset(h for h, bset in m.branch_sets.items() if bset & sep.side_b),
    )


def extended_membership(m, pattern_tangle, sep):
    """Whether sep lies in the tangle induced on the host by pattern_tangle."""
    if sep.order >= pattern_tangle.order_threshold:
        return False
    return induced_separation(m, sep) in pattern_tangle


class _ExtendedMembership:
    def __init__(self, model, pattern_tangle):
        self.model = model
        self.pattern_tangle = pattern_tangle

    def __call__(self, sep):
        return extended_membership(self.model, self.pattern_tangle, sep)


def extended_tangle(m, pattern_tangle):
    """The tangle of the host whose members induce members of pattern_tangle."""
    m.require_valid()
    return tangle.Tangle(
        m.host,
        pattern_tangle.order_threshold,
        predicate=_ExtendedMembership(m, pattern_tangle),
    )


def branch_sets_meeting(m, vertices):
    """How many branch sets intersect vertices."""
    vertices = frozenset(vertices)
    return sum(1 for bset in m.branch_sets.values() if bset & vertices)


def check_induced(m, seps):
    """Each induced separation must be a pattern separation of no larger order."""
    rep = report.Report("induced-separations")
    for sep in seps:
        rep.checked += 1
        induced = induced_separation(m, sep)
        if not separation.is_separation(m.pattern, induced.side_a, induced.side_b):
            rep.add(
                report.ViolationKind.INDUCED_NOT_SEPARATION,
                f"{sep} induces {induced}",
                sep.key(),
            )
        elif induced.order > sep.order:
            rep.add(
                report.ViolationKind.INDUCED_ORDER_TOO_LARGE,
                f"{sep} of order {sep.order} induces {induced} "
                f"of order {induced.order}",
                sep.key(),
            )
    return rep


def check_branch_set_bound(m, tng, vertex_cap=None, threads=1):
    """Every member (A, B) of tng has A meeting at most ord(A, B)^2 branch sets."""
    rep = report.Report("branch-count")
    for sep in tng.sorted_members(vertex_cap, threads):
        rep.checked += 1
        count = branch_sets_meeting(m, sep.side_a)
        if count > sep.order**2:
            rep.add(
                report.ViolationKind.BRANCH_COUNT_EXCEEDED,
                f"{sep} meets {count} > {sep.order}^2 branch sets",
                sep.key(),
            )
    return rep


def _connected_blocks(host, root, allowed):
    """Every connected vertex set containing root and otherwise inside allowed."""

    def grow(block, frontier, excluded):
        if not frontier:
            yield block
            return
        vtx = min(frontier)
        yield from grow(
            block | {vtx},
            (frontier | (host.neighbors(vtx) & allowed)) - block - {vtx} - excluded,
            excluded,
        )
        yield from grow(block, frontier - {vtx}, excluded | {vtx})

    yield from grow(frozenset([root]), host.neighbors(root) & allowed, frozenset())


def _match(host, blocks, pattern_nx):
    """Map pattern vertices onto blocks so that every pattern edge is realized."""
    quotient = nx.Graph()
    quotient.add_nodes_from(range(len(blocks)))
    owner = {vtx: idx for idx, block in enumerate(blocks) for vtx in block}
    for src, dst in host.edges:
        if src in owner and dst in owner and owner[src] != owner[dst]:
            quotient.add_edge(owner[src], owner[dst])
    if quotient.number_of_edges() < pattern_nx.number_of_edges():
        return None
    matcher = isomorphism.GraphMatcher(quotient, pattern_nx)
    mapping = next(matcher.subgraph_monomorphisms_iter(), None)
    if mapping is None:
        return None
    return {h: blocks[idx] for idx, h in mapping.items()}


def find_minor_model(host, pattern, host_cap=None, pattern_cap=None):
    """A minor model of pattern in host, or None if none exists.

    Exhaustive: the smallest undecided host vertex is either unused or the root of a new
    connected branch set drawn from undecided vertices. Once there are as many branch
    sets as pattern vertices, the quotient graph is tested for a pattern monomorphism.
    """
    host_cap = defaults.DEFAULTS["minor_host_cap"] if host_cap is None else host_cap
    if pattern_cap is None:
        pattern_cap = defaults.DEFAULTS["minor_pattern_cap"]
    if host.vertex_count > host_cap or pattern.vertex_count > pattern_cap:
        raise errors.InstanceTooLarge(
            f"Minor search is capped at hosts of {host_cap} and patterns of "
            f"{pattern_cap} vertices, but got {host!r} and {pattern!r}"
        )
    tim_srt_s = time.time()
    num = pattern.vertex_count
    pattern_nx = pattern.to_networkx()
    blocks = []
    tried = [0]

    def search(undecided):
        if len(blocks) == num:
            tried[0] += 1
            return _match(host, blocks, pattern_nx)
        if len(undecided) < num - len(blocks):
            return None
        root = min(undecided)
        rest = undecided - {root}
        for block in _connected_blocks(host, root, rest):
            blocks.append(block)
            found = search(rest - block)
            blocks.pop()
            if found is not None:
                return found
        return search(rest)

    found = search(frozenset(host.vertices))
    logging.info(
        "Minor search for %r in %r: %s after %d candidates - time: %.2f seconds",
        pattern,
        host,
        "found" if found is not None else "none",
        tried[0],
        time.time() - tim_srt_s,
    )
    return None if found is None else MinorModel(host, pattern, found)
