"""The acceptance harness: exhaustive and randomized checks over the fixtures.

Each check returns a Report. An unmet expectation, such as a mutation that is not
rejected with the right kind, is a CheckFailed violation.
"""

import itertools
import logging
import time

from tanglekit.core import (
    constants,
    defaults,
    fixtures,
    graph,
    grid,
    minor,
    nearembed,
    report,
    separation,
    surface,
    tangle,
    utils,
    vortex,
)


def _expect(rep, holds, message, key=()):
    rep.checked += 1
    if not holds:
        rep.add(report.ViolationKind.CHECK_FAILED, message, key)


def _expect_kind(rep, sub, kind, name, key=()):
    """Expect sub to have failed with a violation of kind."""
    _expect(
        rep,
        sub.has(kind),
        f"{name}: expected {report.to_str(kind)}, got "
        f"{', '.join(report.to_str(knd) for knd in sub.kinds()) or 'a pass'}",
        key,
    )


def verify_gridcut(sizes=(2, 3, 4), threads=1):
    """|A| <= s^2 for every member of the natural tangle of W_r, for each r in sizes."""
    rep = report.Report("gridcut")
    for size in sizes:
        sub = tangle.check_gridcut(
            grid.make_grid(size), tangle.default_gridcut_order(size), threads=threads
        )
        rep.merge(sub)
        rep.lines.append(
            f"gridcut r={size} max_order={sub.details['max_order']} "
            f"members={sub.checked} "
            f"largest_small_side={sub.details['largest_small_side']}"
        )
    return rep


def verify_tangle_axioms(threads=1):
    """Natural tangles pass T1-T3 with one orientation each; mutations are rejected."""
    rep = report.Report("tangle-axioms")
    for size in (2, 3):
        w = grid.make_grid(size)
        tng = tangle.natural_tangle(w)
        rep.merge(tangle.check_axioms(w.graph, tng, threads=threads))
        rep.merge(tangle.check_orientations(w.graph, tng, threads=threads))
        dropped = tangle.check_axioms(
            w.graph, fixtures.dropped_orientation(w), threads=threads
        )
        _expect_kind(
            rep, dropped, report.ViolationKind.T1, f"W_{size} dropped", (size, 0)
        )
        doubled = tangle.check_axioms(
            w.graph, fixtures.doubled_orientation(w), threads=threads
        )
        _expect_kind(
            rep, doubled, report.ViolationKind.T2, f"W_{size} doubled", (size, 1)
        )
    return rep


def verify_induced(num=None, threads=1, seed=defaults.SEED):
    """Random separations of several hosts induce separations of no higher order."""
    del threads
    num = defaults.DEFAULTS["random_separations"] if num is None else num
    rng = utils.make_rng(seed)
    rep = report.Report("induced")
    models = fixtures.model_fixtures()
    seps = {name: [] for name, _ in models}
    for idx in range(num):
        name, model = models[idx % len(models)]
        host = model.host
        seps[name].append(separation.random_separation(host, rng.randint(0, 3), rng))
    for name, model in models:
        sub = minor.check_induced(model, seps[name])
        rep.merge(sub)
        rep.lines.append(f"induced {name}: separations={sub.checked}")
    return rep


def verify_extension(threads=1):
    """Extend the natural tangle to pendant W_3 and count branch sets per small side."""
    rep = report.Report("extension")
    host = fixtures.w3_pendant()
    model = fixtures.identity_model(host, grid.make_grid(3).graph)
    tng = minor.extended_tangle(model, tangle.natural_tangle(grid.make_grid(3)))
    rep.merge(tangle.check_axioms(host, tng, threads=threads))
    rep.merge(minor.check_branch_set_bound(model, tng, threads=threads))
    return rep


def random_graph(rng, max_vertices):
    num = rng.randint(2, max_vertices)
    density = rng.choice([0.2, 0.35, 0.5])
    edges = [
        edge for edge in itertools.combinations(range(num), 2) if rng.random() < density
    ]
    return graph.build_graph(num, edges)


def _random_ends(rng, g):
    picked = rng.sample(list(g.vertices), rng.randint(2, g.vertex_count))
    cut = rng.randint(1, len(picked) - 1)
    return frozenset(picked[:cut]), frozenset(picked[cut:])


def verify_menger(num_graphs=None, max_vertices=None, threads=1, seed=defaults.SEED):
    """The max-flow path count equals the exhaustive minimum separator size.

    Each random graph also checks that the components of G - S partition the rest.
    """
    del threads
    if num_graphs is None:
        num_graphs = defaults.DEFAULTS["menger_graphs"]
    if max_vertices is None:
        max_vertices = defaults.DEFAULTS["menger_max_vertices"]
    rng = utils.make_rng(seed)
    rep = report.Report("menger")
    for idx in range(num_graphs):
        g = random_graph(rng, max_vertices)
        sources, sinks = _random_ends(rng, g)
        paths = graph.max_disjoint_paths(g, sources, sinks)
        expected = graph.brute_min_separator(g, sources, sinks)
        rep.checked += 1
        if len(paths) != expected:
            rep.add(
                report.ViolationKind.MENGER_MISMATCH,
                f"graph {idx}: {len(paths)} paths but a minimum separator "
                f"of {expected}",
                (idx,),
            )
        used = list(itertools.chain.from_iterable(paths))
        if len(used) != len(set(used)) or not all(
            graph.is_path(g, path)
            and path[0] in sources
            and path[-1] in sinks
            and not set(path[1:]) & sources
            and not set(path[:-1]) & sinks
            for path in paths
        ):
            rep.add(
                report.ViolationKind.NOT_A_PATH,
                f"graph {idx}: the paths are not disjoint source-sink paths",
                (idx,),
            )
        rep.merge(graph.components_report(g, sources, graph.components(g, sources)))
    return rep


def verify_vortex(threads=1):
    """The caterpillar is linked with q = 1; each mutation fails with its own kind."""
    rep = report.Report("vortex")
    vtx, dec, comb = fixtures.caterpillar()
    sub, adhesion, linkage = vortex.check_vortex(vtx, dec, comb, threads=threads)
    rep.merge(sub)
    _expect(rep, adhesion == 1, f"caterpillar: adhesion {adhesion}, not 1", (0,))
    _expect(
        rep,
        linkage is not None and linkage.paths == (fixtures.CATERPILLAR_U,),
        f"caterpillar: linkage {linkage}",
        (1,),
    )
    expected = [
        ("deleted-edge", report.ViolationKind.NO_DISJOINT_PATH_SYSTEM),
        ("missing-society", report.ViolationKind.SOCIETY_VERTEX_NOT_IN_BAG),
        ("permuted-teeth", report.ViolationKind.TEETH_ORDER_MISMATCH),
        ("extra-society", report.ViolationKind.SOCIETY_INTERSECTION_VIOLATION),
        ("permuted-bags", report.ViolationKind.INTERVAL_VIOLATION),
    ]
    for idx, (mutation, kind) in enumerate(expected, start=2):
        mvtx, mdec, mcomb = fixtures.caterpillar(mutation)
        msub, _, _ = vortex.check_vortex(mvtx, mdec, mcomb, threads=threads)
        _expect_kind(rep, msub, kind, mutation, (idx,))
    return rep


def _check_rotation(rep, name, rs, genus):
    faces = surface.trace_faces(rs)
    rep.merge(surface.check_faces(rs, faces))
    found = surface.euler_genus(rs, faces)
    rep.lines.append(f"surface {name}: faces={len(faces)} genus={found}")
    if found != genus:
        rep.add(
            report.ViolationKind.GENUS_MISMATCH,
            f"{name}: genus {found}, expected {genus}",
            (name,),
        )


def verify_surface(threads=1):
    """Plane grids have genus 0, the K5 fixture genus 2, and K5 no smaller genus."""
    rep = report.Report("surface")
    for size in (2, 3, 4):
        _check_rotation(rep, f"W_{size}", grid.planar_rotation(grid.make_grid(size)), 0)
    _check_rotation(rep, "K4", fixtures.k4_planar_rotation(), 0)
    _check_rotation(rep, "C5", fixtures.cycle_rotation(5), 0)
    _check_rotation(rep, "K5", fixtures.k5_torus_rotation(), 2)
    best = surface.minimum_euler_genus(fixtures.complete_graph(5), threads=threads)
    rep.lines.append(f"surface K5 minimum genus={best}")
    rep.checked += 1
    if best != 2:
        rep.add(
            report.ViolationKind.GENUS_MISMATCH,
            f"K5: minimum genus {best}",
            ("K5-min",),
        )
    return rep


def verify_euler():
    """The Euler rows on planar W_3 and the x + y + z partition on every certificate."""
    rep = report.Report("euler")
    prf = fixtures.profile()
    g, cert = fixtures.trivial_certificate()
    sub = nearembed.euler_report(g, cert, prf)
    rep.merge(sub)
    rows = sub.details["rows"]
    _expect(rep, (rows[0].lhs, rows[0].rhs) == (2, 2), f"formula: {rows[0]}", (0,))
    _expect(
        rep,
        (rows[3].lhs, rows[3].rhs, rows[3].holds) == (10, 4, True),
        f"density: {rows[3]}",
        (1,),
    )
    certificates = [
        ("trivial", g, cert),
        ("composite", fixtures.composite_graph(), fixtures.composite_certificate()),
        ("dense", *fixtures.dense_certificate()),
    ]
    for idx, (name, cg, ccert) in enumerate(certificates, start=2):
        det = nearembed.euler_report(cg, ccert, prf).details
        total = det["x"] + det["y"] + det["z"]
        _expect(
            rep,
            total == det["vertices"],
            f"{name}: x + y + z = {total} != {det['vertices']}",
            (idx,),
        )
    return rep


def verify_constants():
    """The documented profiles, with n1 - 1 and r - 1 failing their inequalities."""
    rep = report.Report("constants")
    cases = [((1, 1, 1, 2, 5, 1), (0, 7, 17)), ((1, 2, 1, 2, 5, 1), (2, 112, 65))]
    for idx, (args, (g_c, n1, r)) in enumerate(cases):
        prf = constants.compute_constants(*args)
        rep.merge(constants.check_constants(prf))
        _expect(
            rep,
            (prf.g, prf.n1, prf.r) == (g_c, n1, r),
            f"{args}: got g={prf.g} n1={prf.n1} r={prf.r}",
            (idx,),
        )
    return rep


def verify_near_embedding(threads=1):
    """The composite certificate validates and respects the extended natural tangle."""
    rep = report.Report("near-embedding")
    cap = fixtures.COMPOSITE_VERTEX_CAP
    g = fixtures.composite_graph()
    cert = fixtures.composite_certificate(g)
    rep.merge(
        nearembed.validate_certificate(g, cert, fixtures.profile(), threads=threads)
    )
    tng = minor.extended_tangle(
        fixtures.composite_model(g), tangle.natural_tangle(grid.make_grid(3))
    ).materialize(cap, threads)
    rep.merge(nearembed.respects_check(g, cert, tng, cap, threads))
    swollen = nearembed.respects_check(
        g, fixtures.composite_certificate(g, "swollen"), tng, cap, threads
    )
    _expect_kind(rep, swollen, report.ViolationKind.RESPECT_VIOLATION, "swollen", (0,))
    return rep


def verify_hypotheses():
    """K6 fails the degree bound for a = 1 but not connectivity; K29 passes both."""
    rep = report.Report("hypotheses")
    k6 = constants.check_hypotheses(fixtures.complete_graph(6), 1)
    _expect(
        rep,
        [vio.key for vio in k6.sorted_violations()] == [(1,)],
        f"K6: {', '.join(str(vio) for vio in k6.sorted_violations()) or 'pass'}",
        (0,),
    )
    rep.merge(constants.check_hypotheses(fixtures.complete_graph(29), 1))
    return rep


def verify_all(threads=1):
    """Run every acceptance check, in order. Returns the list of reports."""
    checks = [
        lambda: verify_gridcut(threads=threads),
        lambda: verify_tangle_axioms(threads),
        lambda: verify_induced(threads=threads),
        lambda: verify_extension(threads),
        lambda: verify_menger(threads=threads),
        lambda: verify_vortex(threads),
        lambda: verify_surface(threads),
        verify_euler,
        verify_constants,
        lambda: verify_near_embedding(threads),
        verify_hypotheses,
    ]
    reps = []
    for check in checks:
        tim_srt_s = time.time()
        rep = check()
        logging.info(
            "Finished check %s (%s) - time: %.2f seconds",
            rep.name,
            "pass" if rep.passed else "fail",
            time.time() - tim_srt_s,
        )
        reps.append(rep)
    return reps
