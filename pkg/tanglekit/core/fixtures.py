"""Desk-scale fixtures and their mutations, shared by the harness and the tests."""

import itertools

from tanglekit.core import (
    constants,
    graph,
    grid,
    minor,
    nearembed,
    surface,
    tangle,
    vortex,
)


def path_graph(num):
    return graph.build_graph(num, [(idx, idx + 1) for idx in range(num - 1)])


def cycle_graph(num):
    return graph.build_graph(num, [(idx, (idx + 1) % num) for idx in range(num)])


def complete_graph(num):
    return graph.build_graph(num, itertools.combinations(range(num), 2))


def cycle_rotation(num):
    """The plane rotation of the cycle 0, ..., num - 1."""
    g = cycle_graph(num)
    if num == 2:
        return surface.RotationSystem(g, [(1,), (0,)])
    return surface.RotationSystem(
        g, [((vtx + 1) % num, (vtx - 1) % num) for vtx in range(num)]
    )


def k4_planar_rotation():
    return surface.RotationSystem(
        complete_graph(4), [(1, 2, 3), (2, 0, 3), (3, 0, 1), (1, 0, 2)]
    )


def k5_torus_rotation():
    """A rotation of K5 with five quadrilateral faces, i.e., Euler genus 2."""
    return surface.RotationSystem(
        complete_graph(5),
        [tuple((vtx + step) % 5 for step in (1, 2, 4, 3)) for vtx in range(5)],
    )


def sorted_rotation(g):
    return surface.RotationSystem(
        g, [tuple(sorted(g.neighbors(vtx))) for vtx in g.vertices]
    )


# Vortices.

# The caterpillar: inner path u_1..u_4 = 0..3, society w_1..w_4 = 4..7, and w_i is
# pendant on u_i.
CATERPILLAR_U = (0, 1, 2, 3)
CATERPILLAR_W = (4, 5, 6, 7)


def caterpillar_graph(without=()):
    us, ws = CATERPILLAR_U, CATERPILLAR_W
    edges = [(us[idx], us[idx + 1]) for idx in range(3)] + list(zip(us, ws))
    return graph.build_graph(8, [edge for edge in edges if edge not in without])


def caterpillar_bags():
    """X_i = {w_(i-1), w_i, u_(i-1), u_i} with w_0 := w_1 and u_0 dropped."""
    us, ws = CATERPILLAR_U, CATERPILLAR_W
    return [
        frozenset(
            {ws[max(idx - 1, 0)], ws[idx], us[idx]} | ({us[idx - 1]} if idx else set())
        )
        for idx in range(4)
    ]


def caterpillar_comb(reverse_spine=False):
    spine = CATERPILLAR_U[::-1] if reverse_spine else CATERPILLAR_U
    return vortex.Comb.of(spine, [(u, w) for u, w in zip(CATERPILLAR_U, CATERPILLAR_W)])


def caterpillar(mutation=None):
    """(Vortex, VortexDecomposition, Comb) of the caterpillar, optionally mutated.

    Mutations: "deleted-edge" drops u_2u_3; "missing-society" drops w_2 from X_2;
    "extra-society" adds w_3 to X_1; "permuted-bags" swaps X_1/X_2 and X_3/X_4;
    "permuted-teeth" reverses the spine, so the teeth appear as w_4, ..., w_1.
    """
    us, ws = CATERPILLAR_U, CATERPILLAR_W
    without = [(us[1], us[2])] if mutation == "deleted-edge" else []
    bags = caterpillar_bags()
    if mutation == "missing-society":
        bags[1] = bags[1] - {ws[1]}
    elif mutation == "extra-society":
        bags[0] = bags[0] | {ws[2]}
    elif mutation == "permuted-bags":
        bags = [bags[1], bags[0], bags[3], bags[2]]
    else:
        assert mutation in {
            None,
            "deleted-edge",
            "permuted-teeth",
        }, f"Unknown mutation: {mutation}"
    vtx = vortex.Vortex(caterpillar_graph(without), ws)
    comb = caterpillar_comb(reverse_spine=mutation == "permuted-teeth")
    return vtx, vortex.VortexDecomposition.of(bags), comb


CATERPILLAR_MUTATIONS = [
    "deleted-edge",
    "missing-society",
    "extra-society",
    "permuted-bags",
    "permuted-teeth",
]


# Minor models.


def w3_pendant():
    """W_3 plus a vertex 9 attached to the corner 0."""
    w3 = grid.make_grid(3)
    return graph.build_graph(10, list(w3.graph.edges) + [(0, 9)])


def identity_model(host, pattern):
    return minor.MinorModel(host, pattern, {h: {h} for h in pattern.vertices})


def w2_in_w3_model():
    """A hand-built model of W_2 in W_3."""
    return minor.MinorModel(
        grid.make_grid(3).graph,
        grid.make_grid(2).graph,
        {0: {0}, 1: {1, 2}, 2: {3, 6}, 3: {4, 5, 7, 8}},
    )


def edge_in_path_model():
    """Pattern edge ab in the path 0-1-2, with V_a = {0, 1} and V_b = {2}."""
    return minor.MinorModel(path_graph(3), path_graph(2), {0: {0, 1}, 1: {2}})


def model_fixtures():
    """(name, model) pairs used by the induced-separation harness."""
    w3 = grid.make_grid(3).graph
    return [
        ("edge-in-path", edge_in_path_model()),
        ("w2-in-w3", w2_in_w3_model()),
        ("w3-identity", identity_model(w3, w3)),
        ("w3-pendant", identity_model(w3_pendant(), w3)),
    ]


# Near-embedding certificates.

# Composite fixture ids: W_3 is 0..8; the caterpillar's inner path is 9..12 and its comb
# spine vertices are 13..15; the small vortex's inner vertex is 16.
COMPOSITE_SOCIETY = (0, 1, 2, 5)
COMPOSITE_U = (9, 10, 11, 12)
COMPOSITE_C = (13, 14, 15)
COMPOSITE_SMALL = (6, 7, 8)
COMPOSITE_SMALL_INNER = 16
# The fixture has 17 vertices, above the default enumeration cap.
COMPOSITE_VERTEX_CAP = 18


def composite_graph():
    ws, us, cs = COMPOSITE_SOCIETY, COMPOSITE_U, COMPOSITE_C
    edges = list(grid.make_grid(3).graph.edges)
    edges.extend((us[idx], us[idx + 1]) for idx in range(3))
    edges.extend(zip(us, ws))
    for idx, c_i in enumerate(cs, start=1):
        edges.extend([(c_i, ws[idx - 1]), (c_i, ws[idx])])
    edges.extend((COMPOSITE_SMALL_INNER, vtx) for vtx in COMPOSITE_SMALL)
    return graph.build_graph(17, edges)


def composite_blocks():
    """The large and small vortex blocks of the composite certificate."""
    ws, us, cs = COMPOSITE_SOCIETY, COMPOSITE_U, COMPOSITE_C
    bags = [{ws[0], us[0]}]
    for idx in range(1, 4):
        bags.append({ws[idx - 1], ws[idx], us[idx - 1], us[idx], cs[idx - 1]})
    spine = [ws[0]]
    for idx in range(1, 4):
        spine.extend([cs[idx - 1], ws[idx]])
    large = {
        "index": 1,
        "society": list(ws),
        "bags": bags,
        "spine": spine,
        "teeth": [[vtx] for vtx in ws],
        "linkpaths": [list(us)],
    }
    small = {
        "index": 2,
        "vertices": list(COMPOSITE_SMALL) + [COMPOSITE_SMALL_INNER],
        "society": list(COMPOSITE_SMALL),
    }
    return large, small


def w3_rotation():
    w3 = grid.make_grid(3)
    rot = grid.planar_rotation(w3)
    return w3, {vtx: rot.rotation[vtx] for vtx in w3.graph.vertices}


def outer_face(rotation):
    """The index of the outer face of planar W_3, the one through the dart (0, 3)."""
    return surface.trace_faces(rotation).face_of((0, 3))


def composite_certificate(g=None, mutation=None):
    """Planar W_3 with a caterpillar vortex and a small vortex of society size 3.

    Mutations: "swollen" makes the small vortex contain every vertex; "long-small" gives
    the small vortex the society (5, 6, 7, 8).
    """
    g = composite_graph() if g is None else g
    w3, rotation = w3_rotation()
    face = outer_face(grid.planar_rotation(w3))
    large, small = composite_blocks()
    discs = {1: (face, (0, 3), -1), 2: (face, (6, 7), 1)}
    if mutation == "swollen":
        small["vertices"] = list(g.vertices)
    elif mutation == "long-small":
        small["vertices"] = [5] + small["vertices"]
        small["society"] = [5] + small["society"]
        discs[2] = (face, (5, 2), 1)
    else:
        assert mutation is None, f"Unknown mutation: {mutation}"
    return nearembed.make_certificate(
        g, [], w3.graph.vertices, w3.graph.edges, rotation, [large], [small], discs
    )


def composite_model(g=None):
    """Singleton branch sets of W_3 on the vertices 0..8 of the composite graph."""
    g = composite_graph() if g is None else g
    return identity_model(g, grid.make_grid(3).graph)


def trivial_certificate():
    """No apex and no vortices: G = G0 = planar W_3."""
    w3, rotation = w3_rotation()
    return w3.graph, nearembed.make_certificate(
        w3.graph, [], w3.graph.vertices, w3.graph.edges, rotation
    )


def dense_certificate():
    """G0 = K8 with one large vortex on society 0..6; the 2/7 density row fails.

    Vertex 8 is the vortex's inner vertex. Every society vertex has 7 neighbors in G0,
    so none is essential.
    """
    k8 = complete_graph(8)
    g = graph.build_graph(9, list(k8.edges) + [(vtx, 8) for vtx in range(7)])
    society = list(range(7))
    bags = [{society[max(idx - 1, 0)], society[idx], 8} for idx in range(7)]
    rotation = {vtx: tuple(sorted(k8.neighbors(vtx))) for vtx in k8.vertices}
    large = {"index": 1, "society": society, "bags": bags}
    cert = nearembed.make_certificate(g, [], k8.vertices, k8.edges, rotation, [large])
    return g, cert


def profile(a=1, s=1, k=1, alpha=2, theta=3, n2=1):
    return constants.compute_constants(a, s, k, alpha, theta, n2)


# Tangle mutations.


def dropped_orientation(w):
    """The natural tangle of w, made explicit, minus its first member."""
    members = tangle.natural_tangle(w).sorted_members()
    return tangle.Tangle(w.graph, w.r, members=members[1:])


def doubled_orientation(w):
    """The natural tangle of w, made explicit, plus the reverse of one member.

    The reversed member is the first one whose large side is not all of V, when there is
    one, so that only T2 (and not T3) breaks.
    """
    members = tangle.natural_tangle(w).sorted_members()
    proper = [sep for sep in members if len(sep.side_b) < w.graph.vertex_count]
    extra = (proper or members)[0].reversed()
    return tangle.Tangle(w.graph, w.r, members=members + [extra])
