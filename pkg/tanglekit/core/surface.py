"""Orientable combinatorial embeddings: rotation systems, face tracing, Euler genus.

A dart is a directed edge (u, v). The face successor of (u, v) is (v, w), where w
follows u in the cyclic rotation at v.
"""

import itertools
import logging
import math
import time

from tanglekit.core import defaults, errors, report, utils


class RotationSystem:
    """A cyclic order of the neighbors around every vertex of graph."""

    def __init__(self, graph, rotation):
        self.graph = graph
        self.rotation = tuple(tuple(nbrs) for nbrs in rotation)
        if len(self.rotation) != graph.vertex_count:
            raise errors.InvalidRotation(
                f"Expected a rotation for each of {graph.vertex_count} vertices, "
                f"but got {len(self.rotation)}"
            )
        for vtx, nbrs in enumerate(self.rotation):
            if len(set(nbrs)) != len(nbrs) or set(nbrs) != graph.neighbors(vtx):
                raise errors.InvalidRotation(
                    f"The rotation at vertex {vtx} ({utils.ids_to_str(nbrs)}) is not a "
                    f"permutation of its neighbors "
                    f"({utils.set_to_str(graph.neighbors(vtx))})"
                )
        # position[v][u]: the index of u in the rotation at v.
        self.position = tuple(
            {nbr: idx for idx, nbr in enumerate(nbrs)} for nbrs in self.rotation
        )

    def successor(self, dart):
        src, dst = dart
        rot = self.rotation[dst]
        return (dst, rot[(self.position[dst][src] + 1) % len(rot)])


class FaceSet:
    """The faces of a rotation system, each a closed walk of darts."""

    def __init__(self, faces):
        self.faces = tuple(tuple(face) for face in faces)

    @property
    def lengths(self):
        return [len(face) for face in self.faces]

    def __len__(self):
        return len(self.faces)

    def walk(self, idx):
        """The boundary walk of face idx as a vertex sequence (tails of its darts)."""
        return [src for src, _ in self.faces[idx]]

    def face_of(self, dart):
        """The index of the face containing dart, or None."""
        for idx, face in enumerate(self.faces):
            if dart in face:
                return idx
        return None


def _require_connected(g):
    if g.vertex_count == 0 or not g.is_connected():
        raise errors.DisconnectedGraph(
            f"Face tracing requires a connected graph: {g!r}"
        )


def trace_faces(rs):
    """Partition the darts of rs.graph into face walks.

    A lone vertex has one empty face. Walks start at their smallest untraced dart.
    """
    _require_connected(rs.graph)
    if rs.graph.num_edges == 0:
        return FaceSet([()])
    darts = sorted(
        itertools.chain.from_iterable(((u, v), (v, u)) for u, v in rs.graph.edges)
    )
    seen = set()
    faces = []
    for start in darts:
        if start in seen:
            continue
        face = []
        dart = start
        while dart not in seen:
            seen.add(dart)
            face.append(dart)
            dart = rs.successor(dart)
        assert dart == start, f"Face walk from {start} did not close."
        faces.append(face)
    return FaceSet(faces)


def check_faces(rs, faces):
    """Report whether faces partition the darts of rs.graph, each dart exactly once."""
    rep = report.Report("faces")
    expected = set(
        itertools.chain.from_iterable(((u, v), (v, u)) for u, v in rs.graph.edges)
    )
    found = list(itertools.chain.from_iterable(faces.faces))
    rep.checked = len(found)
    if len(found) != len(set(found)) or set(found) != expected:
        rep.add(
            report.ViolationKind.DART_PARTITION,
            f"faces cover {len(set(found))} of {len(expected)} darts "
            f"with {len(found) - len(set(found))} repeats",
        )
    if sum(faces.lengths) != 2 * rs.graph.num_edges:
        rep.add(
            report.ViolationKind.DART_PARTITION,
            f"face lengths sum to {sum(faces.lengths)}, not {2 * rs.graph.num_edges}",
            key=(1,),
        )
    return rep


def euler_genus(rs, faces=None):
    """epsilon = 2 - |V| + |E| - l. Always even and non-negative here."""
    faces = trace_faces(rs) if faces is None else faces
    genus = 2 - rs.graph.vertex_count + rs.graph.num_edges - len(faces)
    assert genus >= 0 and genus % 2 == 0, f"Invalid orientable Euler genus: {genus}"
    return genus


def face_inequality(faces, num_edges):
    """3l <= 2|E|, from the actual face lengths.

    Returns (lhs, rhs, holds, all faces have length at least 3).
    """
    lhs, rhs = 3 * len(faces), 2 * num_edges
    return lhs, rhs, lhs <= rhs, all(length >= 3 for length in faces.lengths)


def _cyclic_orders(nbrs):
    """Every cyclic order of nbrs, with the smallest neighbor listed first."""
    nbrs = sorted(nbrs)
    if len(nbrs) <= 1:
        return [tuple(nbrs)]
    return [(nbrs[0],) + perm for perm in itertools.permutations(nbrs[1:])]


def _count_faces(g, rotation):
    position = [{nbr: idx for idx, nbr in enumerate(nbrs)} for nbrs in rotation]
    seen = set()
    count = 0
    for src, dst in g.edges:
        for start in ((src, dst), (dst, src)):
            if start in seen:
                continue
            count += 1
            dart = start
            while dart not in seen:
                seen.add(dart)
                tail, head = dart
                rot = rotation[head]
                dart = (head, rot[(position[head][tail] + 1) % len(rot)])
    return count


def _min_genus_given(g, first_rotation):
    """The minimum genus over rotation systems with the given rotation at vertex 0."""
    choices = [_cyclic_orders(g.neighbors(vtx)) for vtx in range(1, g.vertex_count)]
    best = None
    for rest in itertools.product(*choices):
        num_faces = _count_faces(g, (first_rotation,) + rest)
        genus = 2 - g.vertex_count + g.num_edges - num_faces
        if best is None or genus < best:
            best = genus
            if best == 0:
                break
    return best


def num_rotation_systems(g):
    return math.prod(math.factorial(max(g.degree(vtx) - 1, 0)) for vtx in g.vertices)


def minimum_euler_genus(g, rotation_cap=None, threads=1):
    """The minimum orientable Euler genus of g, by exhaustive search over rotations.

    Work is split over the cyclic orders at vertex 0.
    """
    _require_connected(g)
    if rotation_cap is None:
        rotation_cap = defaults.DEFAULTS["rotation_cap"]
    total = num_rotation_systems(g)
    if total > rotation_cap:
        raise errors.InstanceTooLarge(
            f"{g!r} has {total} rotation systems, more than the cap of {rotation_cap}"
        )
    if g.num_edges == 0:
        return 0
    tim_srt_s = time.time()
    res = utils.run_parallel(
        _min_genus_given,
        [(g, first) for first in _cyclic_orders(g.neighbors(0))],
        threads,
    )
    best = min(res)
    logging.info(
        "Minimum Euler genus of %r over %d rotation systems: %d - time: %.2f seconds",
        g,
        total,
        best,
        time.time() - tim_srt_s,
    )
    return best
