"""Near-embedding certificates.

A certificate splits G - A into an embedded part G0 with a rotation system, large
vortices with their decompositions, linkages and combs, and small vortices. Vortices
are numbered globally, G_1, ..., G_n, across large and small ones. Vertices are named
by their ids in G throughout.
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools
import logging
import time
import typing

from tanglekit.core import (
    constants,
    defaults,
    errors,
    graph,
    minor,
    report,
    separation,
    surface,
    tangle,
    utils,
    vortex,
)


class LargeVortex:
    """A large vortex with its linked decomposition.

    comb: The comb whose teeth are the society, or None if the certificate has none.
    linkage: A supplied linkage, or None to extract one from the decomposition.
    """

    def __init__(self, index, vtx, decomposition, comb=None, linkage=None):
        self.index = index
        self.vortex = vtx
        self.decomposition = decomposition
        self.comb = comb
        self.linkage = linkage


class SmallVortex:
    def __init__(self, index, vtx):
        self.index = index
        self.vortex = vtx


@dataclass(frozen=True)
class Disc:
    """The face of G0 a vortex is glued into.

    start: A dart (u, v) of that face, in G ids; the society is read from u.
    direction: +1 to read along the face walk, -1 against it.
    """

    face: int
    start: typing.Tuple[int, int]
    direction: int


class NearEmbeddingCertificate:
    def __init__(self, apex, g0, rotation, large, small, discs):
        self.apex = frozenset(apex)
        # G0 as a labelled subgraph of G.
        self.g0 = g0
        # A rotation system on the local ids of g0.
        self.rotation = rotation
        self.large = sorted(large, key=lambda lrg: lrg.index)
        self.small = sorted(small, key=lambda sml: sml.index)
        # Vortex index -> Disc.
        self.discs = dict(discs)
        indices = [blk.index for blk in self.large + self.small]
        if len(set(indices)) != len(indices):
            raise errors.IndexOutOfRange(f"Vortex indices repeat: {sorted(indices)}")

    @property
    def g0_vertices(self):
        return frozenset(self.g0.labels)

    def vortices(self):
        """(index, Vortex, is_large) for every vortex, by index."""
        return sorted(
            [(lrg.index, lrg.vortex, True) for lrg in self.large]
            + [(sml.index, sml.vortex, False) for sml in self.small]
        )

    def large_vortex(self, index):
        for lrg in self.large:
            if lrg.index == index:
                return lrg
        raise errors.IndexOutOfRange(f"There is no large vortex with index {index}")

    def small_vertices(self):
        return frozenset().union(*(sml.vortex.vertices for sml in self.small))


def vortex_graph(g, g0, vertices, edges=None):
    """The labelled graph of a vortex on vertices.

    Without explicit edges, the vortex gets every edge of G inside vertices that is not
    an edge of G0.
    """
    vertices = frozenset(vertices)
    for vtx in vertices:
        if not 0 <= vtx < g.vertex_count:
            raise errors.VertexOutOfRange(f"Vortex vertex {vtx} is not in G")
    if edges is None:
        g0_edges = g0.label_edges()
        edges = [
            (src, dst)
            for src, dst in g.edges
            if src in vertices and dst in vertices and (src, dst) not in g0_edges
        ]
    return graph.Graph.from_labelled(vertices, edges)


def make_certificate(
    g,
    apex,
    g0_vertices,
    g0_edges,
    rotation,
    large=(),
    small=(),
    discs=None,
):
    """Assemble a certificate from plain data, all vertices named by their ids in G.

    rotation: G0 vertex -> its neighbors in cyclic order.
    large: dicts with index, society, bags, and optionally vertices, edges, spine,
        teeth (a list of paths), and linkpaths (a list of paths).
    small: dicts with index, vertices, society, and optionally edges.
    discs: vortex index -> (face, start dart, direction).
    """
    for vtx in itertools.chain(apex, g0_vertices):
        if not 0 <= vtx < g.vertex_count:
            raise errors.VertexOutOfRange(f"Vertex {vtx} is not in G")
    g0 = graph.Graph.from_labelled(g0_vertices, g0_edges)
    rot = surface.RotationSystem(
        g0,
        [
            tuple(g0.local_of(nbr) for nbr in rotation.get(label, ()))
            for label in g0.labels
        ],
    )
    large_vortices = []
    for blk in large:
        bags = vortex.VortexDecomposition.of(blk["bags"])
        vertices = blk.get("vertices") or frozenset().union(*bags.bags)
        vtx = vortex.Vortex(
            vortex_graph(g, g0, vertices, blk.get("edges")), blk["society"]
        )
        comb = None
        if blk.get("spine"):
            comb = vortex.Comb.of(blk["spine"], blk.get("teeth", ()))
        linkage = None
        if blk.get("linkpaths"):
            paths = tuple(tuple(path) for path in blk["linkpaths"])
            linkage = vortex.Linkage(paths, len(paths))
        large_vortices.append(LargeVortex(blk["index"], vtx, bags, comb, linkage))
    small_vortices = [
        SmallVortex(
            blk["index"],
            vortex.Vortex(
                vortex_graph(g, g0, blk["vertices"], blk.get("edges")), blk["society"]
            ),
        )
        for blk in small
    ]
    discs = {
        idx: Disc(face, tuple(start), direction)
        for idx, (face, start, direction) in (discs or {}).items()
    }
    return NearEmbeddingCertificate(
        apex, g0, rot, large_vortices, small_vortices, discs
    )


def _merge_prefixed(rep, sub, index):
    """Fold sub into rep, prefixing keys and messages with the vortex index."""
    for vio in sub.violations:
        rep.add(vio.kind, f"vortex {index}: {vio.message}", (index,) + vio.key)
    rep.checked += sub.checked


def _check_cover(rep, g, cert):
    parts = [("G0", cert.g0)] + [
        (f"vortex {idx}", vtx.graph) for idx, vtx, _ in cert.vortices()
    ]
    g_edges = frozenset(g.edges)
    rest_edges = frozenset(
        (src, dst)
        for src, dst in g.edges
        if src not in cert.apex and dst not in cert.apex
    )
    covered: typing.Dict[typing.Tuple[int, int], int] = {}
    seen_vertices: typing.Set[int] = set()
    for name, part in parts:
        seen_vertices.update(part.labels)
        for vtx in sorted(frozenset(part.labels) & cert.apex):
            rep.add(
                report.ViolationKind.APEX_OVERLAP,
                f"{name} contains apex vertex {vtx}",
                (vtx,),
            )
        for edge in sorted(part.label_edges()):
            if edge not in g_edges:
                rep.add(
                    report.ViolationKind.FOREIGN_EDGE,
                    f"{name} has edge {edge}, which is not in G",
                    edge,
                )
            covered[edge] = covered.get(edge, 0) + 1
    for edge in sorted(rest_edges):
        if covered.get(edge, 0) == 0:
            rep.add(report.ViolationKind.UNCOVERED_EDGE, f"edge {edge} of G - A", edge)
        elif covered[edge] > 1:
            rep.add(
                report.ViolationKind.EDGE_COVERED_TWICE,
                f"edge {edge} lies in {covered[edge]} parts",
                edge,
            )
    for vtx in sorted(set(g.vertices) - cert.apex - seen_vertices):
        rep.add(report.ViolationKind.UNCOVERED_VERTEX, f"vertex {vtx} of G - A", (vtx,))
    rep.checked += len(rest_edges) + g.vertex_count


def _check_overlaps(rep, cert):
    g0_vertices = cert.g0_vertices
    vortices = cert.vortices()
    for idx, vtx, _ in vortices:
        expected = vtx.vertices & g0_vertices
        if frozenset(vtx.society) != expected:
            rep.add(
                report.ViolationKind.SOCIETY_MISMATCH,
                f"vortex {idx} has society {{{utils.set_to_str(vtx.society)}}} "
                f"but meets G0 in {{{utils.set_to_str(expected)}}}",
                (idx,),
            )
    for (idx_1, vtx_1, _), (idx_2, vtx_2, _) in itertools.combinations(vortices, 2):
        outside = (vtx_1.vertices & vtx_2.vertices) - g0_vertices
        if outside:
            rep.add(
                report.ViolationKind.VORTEX_OVERLAP,
                f"vortices {idx_1} and {idx_2} share {utils.set_to_str(outside)} "
                "outside G0",
                (idx_1, idx_2),
            )
    for idx, vtx, _ in vortices:
        if vtx.is_trivial():
            rep.add(report.ViolationKind.TRIVIAL_VORTEX, f"vortex {idx}", (idx,))
    for lrg_1, lrg_2 in itertools.combinations(cert.large, 2):
        common = lrg_1.vortex.vertices & lrg_2.vortex.vertices
        if common:
            rep.add(
                report.ViolationKind.LARGE_VORTICES_INTERSECT,
                f"large vortices {lrg_1.index} and {lrg_2.index} share "
                f"{utils.set_to_str(common)}",
                (lrg_1.index, lrg_2.index),
            )
    rep.checked += len(vortices)


def _comb_host(g, lrg, cert):
    """G_j together with every small vortex, as one labelled graph."""
    parts = [lrg.vortex.graph] + [sml.vortex.graph for sml in cert.small]
    vertices = frozenset().union(*(part.labels for part in parts))
    edges = frozenset().union(*(part.label_edges() for part in parts))
    return graph.Graph.from_labelled(vertices, edges)


def _check_large(rep, g, cert, profile, allow_reversed, threads):
    small_vertices = cert.small_vertices()
    for lrg in cert.large:
        vrep, q, linkage = vortex.check_vortex(
            lrg.vortex,
            lrg.decomposition,
            allow_reversed=allow_reversed,
            threads=threads,
        )
        _merge_prefixed(rep, vrep, lrg.index)
        if profile is not None and q is not None and q > profile.alpha:
            rep.add(
                report.ViolationKind.ADHESION_TOO_LARGE,
                f"vortex {lrg.index} has adhesion {q} > alpha = {profile.alpha}",
                (lrg.index,),
            )
        if lrg.linkage is not None:
            lrep = vortex.check_linkage(lrg.vortex, lrg.decomposition, lrg.linkage)
            _merge_prefixed(rep, lrep, lrg.index)
            linkage = lrg.linkage
        if lrg.comb is None:
            rep.add(
                report.ViolationKind.MISSING_COMB, f"vortex {lrg.index}", (lrg.index,)
            )
            continue
        if linkage is not None and lrg.comb.vertices & linkage.vertices:
            rep.add(
                report.ViolationKind.COMB_MEETS_LINKAGE,
                f"vortex {lrg.index}: comb and linkage share "
                f"{utils.set_to_str(lrg.comb.vertices & linkage.vertices)}",
                (lrg.index,),
            )
        for vtx in sorted(lrg.comb.vertices - lrg.vortex.vertices - small_vertices):
            rep.add(
                report.ViolationKind.COMB_OUTSIDE_VORTEX,
                f"vortex {lrg.index}: comb vertex {vtx} lies outside the vortex "
                "and the small vortices",
                (lrg.index, vtx),
            )
        _merge_prefixed(
            rep,
            vortex.comb_report(
                _comb_host(g, lrg, cert), lrg.comb, lrg.vortex.society, allow_reversed
            ),
            lrg.index,
        )


def _check_small(rep, cert, max_length):
    for sml in cert.small:
        if sml.vortex.length > max_length:
            rep.add(
                report.ViolationKind.SMALL_VORTEX_TOO_LONG,
                f"vortex {sml.index} has {sml.vortex.length} > {max_length} "
                "society vertices",
                (sml.index,),
            )


def society_on_walk(walk, start, direction, society):
    """Whether society is an ordered subsequence of the cyclic walk read from position
    start in direction (+1 or -1)."""
    num = len(walk)
    order = [walk[(start + direction * step) % num] for step in range(num)]
    pos = 0
    for vtx in order:
        if pos < len(society) and vtx == society[pos]:
            pos += 1
    return pos == len(society)


def interleaved(walk, society_1, society_2):
    """Whether two societies alternate around a cyclic walk more than once each."""
    set_1, set_2 = frozenset(society_1), frozenset(society_2)
    tags = []
    for vtx in walk:
        if vtx in set_1 and vtx not in set_2:
            tags.append(1)
        elif vtx in set_2 and vtx not in set_1:
            tags.append(2)
    if not tags:
        return False
    changes = sum(1 for idx in range(len(tags)) if tags[idx] != tags[idx - 1])
    return changes > 2


def _check_discs(rep, cert):
    try:
        faces = surface.trace_faces(cert.rotation)
    except errors.DisconnectedGraph as exc:
        rep.add(report.ViolationKind.CHECK_FAILED, f"discs: {exc}")
        return
    walks = [
        [cert.g0.labels[vtx] for vtx in faces.walk(idx)] for idx in range(len(faces))
    ]
    on_face: typing.Dict[int, typing.List[typing.Tuple[int, vortex.Vortex]]] = {}
    for idx, vtx, _ in cert.vortices():
        rep.checked += 1
        disc = cert.discs.get(idx)
        if disc is None:
            rep.add(report.ViolationKind.MISSING_DISC, f"vortex {idx}", (idx,))
            continue
        if not 0 <= disc.face < len(faces):
            rep.add(
                report.ViolationKind.UNKNOWN_FACE,
                f"vortex {idx} is assigned face {disc.face} of {len(faces)}",
                (idx,),
            )
            continue
        on_face.setdefault(disc.face, []).append((idx, vtx))
        src, dst = disc.start
        face = faces.faces[disc.face]
        start = None
        if cert.g0.has_label(src) and cert.g0.has_label(dst):
            dart = (cert.g0.local_of(src), cert.g0.local_of(dst))
            start = face.index(dart) if dart in face else None
        if start is None:
            rep.add(
                report.ViolationKind.START_DART_NOT_ON_FACE,
                f"vortex {idx}: dart ({src}, {dst}) is not on face {disc.face}",
                (idx,),
            )
            continue
        if not society_on_walk(walks[disc.face], start, disc.direction, vtx.society):
            rep.add(
                report.ViolationKind.SOCIETY_NOT_ON_FACE,
                f"vortex {idx}: society ({utils.ids_to_str(vtx.society)}) "
                f"is not in order on face {disc.face}",
                (idx,),
            )
    for face, blocks in sorted(on_face.items()):
        for (idx_1, vtx_1), (idx_2, vtx_2) in itertools.combinations(blocks, 2):
            if interleaved(walks[face], vtx_1.society, vtx_2.society):
                rep.add(
                    report.ViolationKind.INTERLEAVED_SOCIETIES,
                    f"vortices {idx_1} and {idx_2} on face {face}",
                    (idx_1, idx_2),
                )


def validate_certificate(
    g, cert, profile, allow_reversed=False, threads=1, max_small_length=None
):
    """Check the near-embedding laws of cert for G.

    profile supplies alpha, the bound on each large vortex's adhesion. With no
    profile (None), that bound is skipped.
    """
    tim_srt_s = time.time()
    if max_small_length is None:
        max_small_length = defaults.DEFAULTS["small_vortex_length"]
    rep = report.Report("check-near-embedding")
    _check_cover(rep, g, cert)
    _check_overlaps(rep, cert)
    _check_large(rep, g, cert, profile, allow_reversed, threads)
    _check_small(rep, cert, max_small_length)
    _check_discs(rep, cert)
    logging.info(
        "Validated a certificate with %d large and %d small vortices - "
        "time: %.2f seconds",
        len(cert.large),
        len(cert.small),
        time.time() - tim_srt_s,
    )
    return rep


def _part_name(index, bag_idx):
    if bag_idx == 0:
        return f"small vortex {index}"
    return f"bag {bag_idx} of vortex {index}"


def _parts(cert):
    """(index, bag, vertex set) per small vortex (as bag 0) and per large vortex bag."""
    parts = [(sml.index, 0, sml.vortex.vertices) for sml in cert.small]
    for lrg in cert.large:
        parts.extend(
            (lrg.index, bag_idx, bag)
            for bag_idx, bag in enumerate(lrg.decomposition.bags, start=1)
        )
    return sorted(parts, key=lambda part: part[:2])


def respects_check(g, cert, tng, vertex_cap=None, threads=1):
    """Report members of T - A whose large side lies in a small vortex or a bag."""
    tim_srt_s = time.time()
    rep = report.Report("respects")
    apex = cert.apex
    truncated = tangle.truncate(g, tng, apex)
    if tng.explicit:
        # Members of T - A correspond to the members of T with A in their separator.
        seps = [
            separation.Separation(sep.side_a - apex, sep.side_b - apex)
            for sep in tng.members
            if apex <= sep.separator and sep.order < tng.order_threshold
        ]
    else:
        keep = truncated.predicate.keep
        seps = [
            separation.Separation(
                frozenset(keep[vtx] for vtx in sep.side_a),
                frozenset(keep[vtx] for vtx in sep.side_b),
            )
            for sep in truncated.sorted_members(vertex_cap, threads)
        ]
    seps.sort(key=separation.Separation.sort_key)
    rep.checked = len(seps)
    parts = _parts(cert)
    for sep in seps:
        for index, bag_idx, part in parts:
            if sep.side_b <= part:
                where = _part_name(index, bag_idx)
                rep.add(
                    report.ViolationKind.RESPECT_VIOLATION,
                    f"the large side of {sep} lies in {where}",
                    (sep.key(), index, bag_idx),
                )
    rep.details["order"] = truncated.order_threshold
    rep.details["members"] = len(seps)
    logging.info(
        "Checked %d members of a tangle of order %d against %d parts - "
        "time: %.2f seconds",
        len(seps),
        truncated.order_threshold,
        len(parts),
        time.time() - tim_srt_s,
    )
    return rep


def g0_degree(g, cert, vtx, neighbor_mode=None):
    """The number of neighbors of vtx in G0."""
    if neighbor_mode is None:
        neighbor_mode = defaults.DEFAULTS["neighbor_mode"]
    assert (
        neighbor_mode in defaults.NEIGHBOR_MODES
    ), f"Unknown neighbor mode: {neighbor_mode}"
    if neighbor_mode == "g0-edges":
        return len(cert.g0.label_neighbors(vtx)) if cert.g0.has_label(vtx) else 0
    if g is None:
        raise errors.TanglekitError('The "induced" neighbor mode needs the graph G')
    return len(g.neighbors(vtx) & cert.g0_vertices)


def essential_vertices(cert, g=None, neighbor_mode=None, threshold=None):
    """Society vertices with fewer than threshold neighbors in G0."""
    if threshold is None:
        threshold = defaults.DEFAULTS["essential_degree"]
    societies = frozenset().union(*(vtx.society for _, vtx, _ in cert.vortices()))
    return frozenset(
        vtx for vtx in societies if g0_degree(g, cert, vtx, neighbor_mode) < threshold
    )


def is_m_wide(cert, index, m, g=None, neighbor_mode=None, threshold=None):
    """Whether at least m society vertices of large vortex index are essential."""
    lrg = cert.large_vortex(index)
    essential = essential_vertices(cert, g, neighbor_mode, threshold)
    return sum(1 for vtx in lrg.vortex.society if vtx in essential) >= m


def wideness_report(g, cert, index, m, neighbor_mode=None, threshold=None):
    """Report the essential society vertices of large vortex index against m."""
    lrg = cert.large_vortex(index)
    essential = essential_vertices(cert, g, neighbor_mode, threshold)
    rep = report.Report("wideness")
    rep.checked = lrg.vortex.length
    for vtx in lrg.vortex.society:
        rep.lines.append(
            f"society {vtx}: g0_degree={g0_degree(g, cert, vtx, neighbor_mode)} "
            f"essential={'true' if vtx in essential else 'false'}"
        )
    count = sum(1 for vtx in lrg.vortex.society if vtx in essential)
    rep.details.update(vortex=index, essential=count, m=m)
    if count < m:
        rep.add(
            report.ViolationKind.INEQUALITY_FAILED,
            f"vortex {index} has {count} < {m} essential society vertices",
            (index,),
        )
    return rep


@dataclass(frozen=True)
class Row:
    """One evaluated (in)equality: lhs op rhs."""

    name: str
    lhs: Fraction
    operator: str
    rhs: Fraction
    holds: bool

    def __str__(self):
        lhs, rhs = utils.num_to_str(self.lhs), utils.num_to_str(self.rhs)
        holds = "true" if self.holds else "false"
        return f"{self.name}: {lhs} {self.operator} {rhs} {holds}"


def _row(name, lhs, operator, rhs):
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    holds = {
        "=": lhs == rhs,
        "<": lhs < rhs,
        "<=": lhs <= rhs,
        ">": lhs > rhs,
        ">=": lhs >= rhs,
    }[operator]
    return Row(name, lhs, operator, rhs, holds)


def euler_report(g, cert, profile, neighbor_mode=None, threshold=None):
    """Evaluate the Euler-formula argument for an n2-wide vortex on cert.

    Every row is a measurement. Only the Euler formula itself, which defines epsilon and
    so guards face tracing, is a violation when it fails.
    """
    rep = report.Report("euler")
    faces = surface.trace_faces(cert.rotation)
    eps = surface.euler_genus(cert.rotation, faces)
    num_v, num_e, num_f = cert.g0.vertex_count, cert.g0.num_edges, len(faces)
    essential = essential_vertices(cert, g, neighbor_mode, threshold)
    societies = frozenset().union(*(vtx.society for _, vtx, _ in cert.vortices()))
    g0_vertices = cert.g0_vertices
    x = len(essential & g0_vertices)
    y = len((societies - essential) & g0_vertices)
    z = num_v - x - y
    assert x + y + z == num_v, "x + y + z must equal |G0|."
    a, g_c, ask = profile.a, profile.g, profile.ask
    face_lhs, face_rhs, _, long_faces = surface.face_inequality(faces, num_e)
    bound = Fraction(num_v, 7) - 2 * (a + 1) * g_c - ask
    rows = [
        _row("|G0| - ||G0|| + l = 2 - eps", num_v - num_e + num_f, "=", 2 - eps),
        _row("3l <= 2||G0||", face_lhs, "<=", face_rhs),
        _row("eps < ask", eps, "<", ask),
        _row("|G0| + ask > ||G0||/3", num_v + ask, ">", Fraction(num_e, 3)),
        _row(
            "2/7 ||G0|| >= y + 2(a+1)(z-g)",
            Fraction(2 * num_e, 7),
            ">=",
            y + 2 * (a + 1) * (z - g_c),
        ),
        _row(
            "6/7 (|G0| + ask) > |G0| - x - 2(a+1)g",
            Fraction(6, 7) * (num_v + ask),
            ">",
            num_v - x - 2 * (a + 1) * g_c,
        ),
        _row("x > |G0|/7 - 2(a+1)g - ask", x, ">", bound),
        _row(
            "|G0|/7 - 2(a+1)g - ask >= 3g + (n2-1)alpha",
            bound,
            ">=",
            3 * g_c + (profile.n2 - 1) * profile.alpha,
        ),
    ]
    rep.checked = len(rows)
    rep.details.update(
        vertices=num_v, edges=num_e, faces=num_f, genus=eps, x=x, y=y, z=z
    )
    rep.details["faces_at_least_3"] = long_faces
    rep.details["rows"] = rows
    rep.lines.extend(f"euler {row}" for row in rows)
    if not rows[0].holds:
        rep.add(report.ViolationKind.INEQUALITY_FAILED, str(rows[0]), (0,))
    return rep


def branch_count_check(g, cert, model, profile, tng=None):
    """Count branch sets meeting each small vortex or bag (plus A) against ord^2.

    Each part P is cut off by (P + A, (V - P) + S + A), where S holds the vertices of P
    with a neighbor outside P + A. If tng is given, each such separation of order below
    its threshold must be one of its members.
    """
    model.require_valid()
    rep = report.Report("branch-count")
    apex = cert.apex
    all_vertices = frozenset(g.vertices)
    for index, bag_idx, part in _parts(cert):
        rep.checked += 1
        part = part - apex
        border = frozenset(vtx for vtx in part if not g.neighbors(vtx) <= part | apex)
        sep = separation.Separation(part | apex, (all_vertices - part) | border | apex)
        assert separation.is_separation(
            g, sep.side_a, sep.side_b
        ), f"Not a separation: {sep}"
        count = minor.branch_sets_meeting(model, sep.side_a)
        where = _part_name(index, bag_idx)
        rep.lines.append(
            f"branch-count {where}: order={sep.order} branch_sets={count}"
        )
        if count > sep.order**2:
            rep.add(
                report.ViolationKind.BRANCH_COUNT_EXCEEDED,
                f"{where} meets {count} > {sep.order}^2 branch sets",
                (index, bag_idx),
            )
        if tng is not None and sep.order < tng.order_threshold and sep not in tng:
            rep.add(
                report.ViolationKind.CLAIM_FAILED,
                f"{sep} cutting off {where} is not in the tangle",
                (3, index, bag_idx),
            )
    lhs = constants.r_bound(profile.n1, profile.g, profile.alpha)
    rep.lines.append(
        f"branch-count (n1+g)(3alpha)^2+n1 = {lhs} < r^2 = {profile.r**2} "
        f"{'true' if lhs < profile.r**2 else 'false'}"
    )
    if lhs >= profile.r**2:
        rep.add(
            report.ViolationKind.INEQUALITY_FAILED,
            f"(n1+g)(3alpha)^2+n1 = {lhs} >= r^2 = {profile.r**2}",
            (1,),
        )
    return rep


def claims_report(g, cert, profile, neighbor_mode=None, threshold=None):
    """Measure the counting claims of the wide-vortex argument against the profile.

    At most g vertices have a or more neighbors in A; at most g small vortices;
    |G0| > n1; some large vortex is n2-wide.
    """
    rep = report.Report("claims")
    apex_nbrs = sum(
        1 for vtx in g.vertices if len(g.neighbors(vtx) & cert.apex) >= profile.a
    )
    essential = essential_vertices(cert, g, neighbor_mode, threshold)
    widths = {
        lrg.index: len(essential.intersection(lrg.vortex.society)) for lrg in cert.large
    }
    claims = [
        ("apex neighbors", apex_nbrs, "<=", profile.g),
        ("small vortices", len(cert.small), "<=", profile.g),
        ("|G0|", cert.g0.vertex_count, ">", profile.n1),
        ("widest large vortex", max(widths.values(), default=0), ">=", profile.n2),
    ]
    rep.checked = len(claims)
    for idx, (name, lhs, operator, rhs) in enumerate(claims):
        row = _row(name, lhs, operator, rhs)
        rep.lines.append(f"claim {row}")
        if not row.holds:
            rep.add(report.ViolationKind.CLAIM_FAILED, str(row), (idx, 0, 0))
    rep.details["widths"] = widths
    return rep
