"""Vortices, their decompositions, linkedness, linkages, and combs.

Every vertex in this module is named by its label, i.e., its id in the host graph. For a
standalone vortex the labels are simply the vertex ids.
"""

from dataclasses import dataclass
import itertools
import logging
import typing

from tanglekit.core import errors, graph, report, utils


class Vortex:
    """A graph with a linearly ordered society w_1, ..., w_n."""

    def __init__(self, vgraph, society):
        self.graph = vgraph
        self.society = tuple(society)
        if len(set(self.society)) != len(self.society):
            raise errors.InvalidVortex(
                f"The society repeats a vertex: {utils.ids_to_str(self.society)}"
            )
        for vtx in self.society:
            if not vgraph.has_label(vtx):
                raise errors.InvalidVortex(f"Society vertex {vtx} is not in the vortex")

    @property
    def vertices(self):
        return frozenset(self.graph.labels)

    @property
    def inner(self):
        return self.vertices - frozenset(self.society)

    @property
    def length(self):
        return len(self.society)

    def is_trivial(self):
        """A vortex without inner vertices."""
        return not self.inner

    def __repr__(self):
        society = utils.ids_to_str(self.society)
        return f"Vortex(society={society}, n={self.graph.vertex_count})"


@dataclass(frozen=True)
class VortexDecomposition:
    bags: typing.Tuple[frozenset, ...]

    @staticmethod
    def of(bags):
        return VortexDecomposition(tuple(frozenset(bag) for bag in bags))


@dataclass(frozen=True)
class Linkage:
    paths: typing.Tuple[typing.Tuple[int, ...], ...]
    adhesion: int

    @property
    def vertices(self):
        return frozenset(itertools.chain.from_iterable(self.paths))


@dataclass(frozen=True)
class Comb:
    """A spine plus teeth paths, each meeting the spine exactly in its first vertex."""

    spine: typing.Tuple[int, ...]
    teeth_paths: typing.Tuple[typing.Tuple[int, ...], ...] = ()

    @staticmethod
    def of(spine, teeth_paths=()):
        return Comb(tuple(spine), tuple(tuple(path) for path in teeth_paths))

    @property
    def teeth(self):
        return tuple(path[-1] for path in self.teeth_paths)

    @property
    def vertices(self):
        return frozenset(self.spine).union(*self.teeth_paths)


def check_vortex_decomposition(v, d):
    """Check that d is a decomposition of v: one bag per society vertex, w_i in X_i,
    bags cover V, every vertex's bags are consecutive, and every edge lies in a bag."""
    rep = report.Report("check-vortex")
    bags = d.bags
    rep.checked = len(bags) + v.graph.vertex_count + v.graph.num_edges
    if len(bags) != v.length:
        rep.add(
            report.ViolationKind.BAG_COUNT_MISMATCH,
            f"{len(bags)} bags for a society of length {v.length}",
        )
    vertices = v.vertices
    for idx, bag in enumerate(bags, start=1):
        for vtx in sorted(bag - vertices):
            rep.add(
                report.ViolationKind.UNKNOWN_BAG_VERTEX,
                f"bag {idx} contains {vtx}, which is not in the vortex",
                (idx, vtx),
            )
    for idx, (w_i, bag) in enumerate(zip(v.society, bags), start=1):
        if w_i not in bag:
            rep.add(
                report.ViolationKind.SOCIETY_VERTEX_NOT_IN_BAG,
                f"w_{idx} = {w_i} is not in bag {idx}",
                (idx,),
            )
    for vtx in sorted(vertices):
        where = [idx for idx, bag in enumerate(bags) if vtx in bag]
        if not where:
            rep.add(report.ViolationKind.VERTEX_NOT_IN_BAG, f"vertex {vtx}", (vtx,))
        elif where[-1] - where[0] + 1 != len(where):
            rep.add(
                report.ViolationKind.INTERVAL_VIOLATION,
                f"vertex {vtx} is in bags {utils.ids_to_str(idx + 1 for idx in where)}",
                (vtx,),
            )
    for src, dst in sorted(v.graph.label_edges()):
        if not any(src in bag and dst in bag for bag in bags):
            rep.add(
                report.ViolationKind.EDGE_NOT_COVERED,
                f"edge ({src}, {dst}) lies in no bag",
                (src, dst),
            )
    return rep


def adhesion_sets(v, d):
    """Z_i = (X_i & X_(i+1)) - society, for 1 <= i < n."""
    society = frozenset(v.society)
    return [(lft & rgt) - society for lft, rgt in zip(d.bags, d.bags[1:])]


def _bag_paths(sub, sources, sinks):
    """Disjoint sources-sinks paths in sub, named by labels."""
    if not sources or not sinks:
        return []
    paths = graph.max_disjoint_paths(sub, sub.locals_of(sources), sub.locals_of(sinks))
    return [tuple(sub.labels[vtx] for vtx in path) for path in paths]


def _extend(v, chains, private, at_end):
    """Greedily extend chain ends into unused vertices of private, smallest id first."""
    used = set(itertools.chain.from_iterable(chains))
    for chain in chains:
        while True:
            tip = chain[-1] if at_end else chain[0]
            nxt = sorted((v.graph.label_neighbors(tip) & private) - used)
            if not nxt:
                break
            used.add(nxt[0])
            if at_end:
                chain.append(nxt[0])
            else:
                chain.insert(0, nxt[0])


def check_linked(v, d, threads=1):
    """Check that d is linked and extract its linkage.

    Returns (report, q, linkage). Checks X_i & society = {w_(i-1), w_i} with w_0 := w_1,
    equal |Z_i|, X_i & X_(i+1) = Z_i + {w_i}, and q disjoint Z_(i-1)-Z_i paths in
    G[X_i] - society for 1 < i < n. The decomposition laws themselves are not rechecked.
    linkage is None unless the report passed.
    """
    rep = report.Report("check-linked")
    society = frozenset(v.society)
    bags = d.bags
    num = len(bags)
    if num == 0:
        return rep, 0, Linkage((), 0)
    for idx in range(1, num + 1):
        expected = {v.society[max(idx - 2, 0)], v.society[idx - 1]}
        found = bags[idx - 1] & society
        if found != expected:
            rep.add(
                report.ViolationKind.SOCIETY_INTERSECTION_VIOLATION,
                f"X_{idx} meets the society in {{{utils.set_to_str(found)}}}, "
                f"not {{{utils.set_to_str(expected)}}}",
                (idx,),
            )
    zsets = adhesion_sets(v, d)
    q = len(zsets[0]) if zsets else 0
    rep.details["q"] = q
    for idx, zset in enumerate(zsets, start=1):
        if len(zset) != q:
            rep.add(
                report.ViolationKind.UNEQUAL_ADHESION,
                f"|Z_{idx}| = {len(zset)}, but |Z_1| = {q}",
                (idx,),
            )
    for idx, zset in enumerate(zsets, start=1):
        common = bags[idx - 1] & bags[idx]
        if common != zset | {v.society[idx - 1]}:
            rep.add(
                report.ViolationKind.ADHESION_IDENTITY_VIOLATION,
                f"X_{idx} & X_{idx + 1} = {{{utils.set_to_str(common)}}} is not "
                f"Z_{idx} + w_{idx}",
                (idx,),
            )

    # Path systems for the inner bags 2..n-1.
    units = []
    for idx in range(2, num):
        sub = v.graph.induced(v.graph.locals_of(bags[idx - 1] - society))
        units.append((sub, zsets[idx - 2], zsets[idx - 1]))
    systems = utils.run_parallel(_bag_paths, units, threads)
    rep.checked = num + len(zsets) + len(systems)
    for idx, paths in enumerate(systems, start=2):
        if len(paths) < q:
            rep.add(
                report.ViolationKind.NO_DISJOINT_PATH_SYSTEM,
                f"at bag {idx}: only {len(paths)} of {q} disjoint "
                f"Z_{idx - 1}-Z_{idx} paths",
                (idx,),
            )
    if not rep.passed:
        return rep, q, None

    chains = [[vtx] for vtx in sorted(zsets[0])] if zsets else []
    for idx, paths in enumerate(systems, start=2):
        by_start = {path[0]: path for path in paths}
        for chain in chains:
            if chain[-1] not in by_start:
                rep.add(
                    report.ViolationKind.LINKAGE_COMPOSITION_FAILED,
                    f"no path of bag {idx} starts at {chain[-1]}",
                    (idx,),
                )
                return rep, q, None
            chain.extend(by_start[chain[-1]][1:])
    if num >= 2:
        _extend(v, chains, bags[0] - bags[1] - society, at_end=False)
        _extend(v, chains, bags[-1] - bags[-2] - society, at_end=True)
    linkage = Linkage(tuple(tuple(chain) for chain in chains), q)
    rep.merge(check_linkage(v, d, linkage))
    logging.debug("Linkage of %r: %s", v, linkage)
    return rep, q, (linkage if rep.passed else None)


def _label_path(vgraph, path):
    """Whether path is a path of vgraph, with vertices named by labels."""
    if not path or not all(vgraph.has_label(vtx) for vtx in path):
        return False
    return graph.is_path(vgraph, [vgraph.local_of(vtx) for vtx in path])


def check_linkage(v, d, linkage):
    """Check that linkage is q disjoint X_1-X_n paths of v.

    The paths must avoid the society and meet every Z_i exactly once.
    """
    rep = report.Report("check-linkage")
    society = frozenset(v.society)
    zsets = adhesion_sets(v, d)
    rep.checked = len(linkage.paths)
    if len(linkage.paths) != linkage.adhesion:
        rep.add(
            report.ViolationKind.INVALID_LINKAGE,
            f"{len(linkage.paths)} paths for adhesion {linkage.adhesion}",
            (-1,),
        )
    seen: typing.Set[int] = set()
    for idx, path in enumerate(linkage.paths):
        problems = []
        if not _label_path(v.graph, path):
            problems.append("is not a path")
        if set(path) & society:
            problems.append("meets the society")
        if set(path) & seen:
            problems.append("meets an earlier path")
        if d.bags and (path[0] not in d.bags[0] or path[-1] not in d.bags[-1]):
            problems.append("does not run from X_1 to X_n")
        if any(len(set(path) & zset) != 1 for zset in zsets):
            problems.append("does not meet every Z_i exactly once")
        seen.update(path)
        if problems:
            rep.add(
                report.ViolationKind.INVALID_LINKAGE,
                f"path {utils.ids_to_str(path)} " + ", ".join(problems),
                (idx,),
            )
    return rep


def comb_report(g, comb, required_teeth, allow_reversed=False):
    """Check comb in g (vertices named by labels) against required_teeth."""
    rep = report.Report("check-comb")
    rep.checked = 1 + len(comb.teeth_paths)
    if not _label_path(g, comb.spine):
        rep.add(
            report.ViolationKind.SPINE_NOT_A_PATH,
            f"spine {utils.ids_to_str(comb.spine)}",
        )
    spine = set(comb.spine)
    position = {vtx: idx for idx, vtx in enumerate(comb.spine)}
    for idx, path in enumerate(comb.teeth_paths):
        if not _label_path(g, path):
            rep.add(
                report.ViolationKind.TOOTH_NOT_A_PATH,
                f"teeth path {utils.ids_to_str(path)}",
                (idx,),
            )
        elif path[0] not in spine or set(path[1:]) & spine:
            rep.add(
                report.ViolationKind.TOOTH_NOT_ATTACHED,
                f"teeth path {utils.ids_to_str(path)} does not meet the spine in its "
                "first vertex only",
                (idx,),
            )
    for (idx_1, path_1), (idx_2, path_2) in itertools.combinations(
        enumerate(comb.teeth_paths), 2
    ):
        if set(path_1) & set(path_2):
            rep.add(
                report.ViolationKind.TEETH_PATHS_OVERLAP,
                f"teeth paths {idx_1} and {idx_2} share "
                f"{utils.set_to_str(set(path_1) & set(path_2))}",
                (idx_1, idx_2),
            )
    attached = sorted(
        (path for path in comb.teeth_paths if path and path[0] in position),
        key=lambda path: position[path[0]],
    )
    teeth = tuple(path[-1] for path in attached)
    required = tuple(required_teeth)
    if teeth != required and not (allow_reversed and teeth == required[::-1]):
        rep.add(
            report.ViolationKind.TEETH_ORDER_MISMATCH,
            f"teeth in spine order are ({utils.ids_to_str(teeth)}), "
            f"not ({utils.ids_to_str(required)})",
        )
    return rep


def check_comb(g, comb, required_teeth, allow_reversed=False):
    return comb_report(g, comb, required_teeth, allow_reversed).passed


def check_vortex(v, d, comb=None, allow_reversed=False, threads=1):
    """Decomposition, linkedness, and (if given) comb checks of a vortex certificate.

    Returns (report, q, linkage). Linkedness is checked whenever every bag is a known
    vertex set of the right count.
    """
    rep = check_vortex_decomposition(v, d)
    q, linkage = None, None
    if not (
        rep.has(report.ViolationKind.BAG_COUNT_MISMATCH)
        or rep.has(report.ViolationKind.UNKNOWN_BAG_VERTEX)
    ):
        linked, q, linkage = check_linked(v, d, threads)
        rep.merge(linked)
        rep.details["q"] = q
        if linkage is not None:
            rep.details["linkage"] = linkage
    if comb is not None:
        rep.merge(comb_report(v.graph, comb, v.society, allow_reversed))
    return rep, q, linkage
