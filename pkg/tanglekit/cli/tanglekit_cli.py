#! /usr/bin/env python3
"""Command line front end: every checker and the acceptance harness.

stdout carries only the line-oriented verdict: measured values as `key=value` lines,
informational lines, `VIOLATION <kind> <message>` lines, and a final
`RESULT <subcommand> <pass|fail> checked=<n>` line. Exit 0 means pass, 1 a failed
check, and 2 a usage or input error.
"""

import argparse
from fractions import Fraction
import logging
import sys
import time

from tanglekit.core import (
    cl_args,
    constants,
    defaults,
    errors,
    formats,
    grid,
    minor,
    nearembed,
    report,
    separation,
    surface,
    tangle,
    utils,
    verify,
    vortex,
)


def _write(out, text):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fil:
            fil.write(text)
        logging.info("Wrote: %s", out)


def _fmt(val):
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, Fraction):
        return utils.num_to_str(val)
    return str(val)


def _emit(rep, lines=True):
    """Print a report: details, lines, violations (in canonical order), then RESULT."""
    if lines:
        for key, val in rep.details.items():
            if isinstance(val, (bool, int, str, Fraction)):
                print(f"{key}={_fmt(val)}")
        for line in rep.lines:
            print(line)
    for vio in rep.sorted_violations():
        print(f"VIOLATION {vio}")
    print(rep.summary())


def _profile(args):
    """The constants profile from --a ... --n2, or None if they were not given."""
    if args.a is None:
        return None
    return constants.compute_constants(
        args.a, args.s, args.k, args.alpha, args.theta, args.n2
    )


# Subcommands. Each takes the parsed arguments and returns a Report, or for
# verify-all a list of them.


def run_grid(args):
    w = grid.make_grid(args.r)
    comments = [
        f"coord {vtx} {' '.join(str(idx) for idx in w.coord(vtx))}"
        for vtx in w.graph.vertices
    ]
    _write(args.out, formats.dump_graph(w.graph, comments))
    rep = report.Report("grid")
    rep.checked = w.graph.vertex_count
    return rep


def run_enum_seps(args):
    g = formats.parse_graph(args.graph)
    max_order = g.vertex_count if args.max_order is None else args.max_order
    seps = separation.enumerate_separations(g, max_order, args.vertex_cap, args.threads)
    rep = report.Report("enum-seps")
    rep.checked = len(seps)
    if args.out is None:
        rep.lines.extend(str(sep) for sep in seps)
    else:
        _write(args.out, formats.dump_separations(seps))
    return rep


def run_check_tangle(args):
    g = formats.parse_graph(args.graph)
    tng = formats.parse_tangle(args.tangle, g)
    rep = tangle.check_axioms(g, tng, args.vertex_cap, args.threads)
    if args.orientations:
        rep.merge(tangle.check_orientations(g, tng, args.vertex_cap, args.threads))
    return rep


def run_natural_tangle(args):
    w = grid.make_grid(args.r)
    max_order = w.r - 1 if args.max_order is None else min(args.max_order, w.r - 1)
    tng = tangle.natural_tangle(w)
    seps = separation.enumerate_separations(
        w.graph, max_order, args.vertex_cap, args.threads
    )
    members = [sep for sep in seps if sep in tng]
    rep = report.Report("natural-tangle")
    rep.checked = len(seps)
    rep.details.update(order=max_order + 1, members=len(members))
    if args.materialize:
        # The members of order <= s form a tangle of order s + 1.
        _write(args.out, formats.dump_tangle(max_order + 1, members))
    return rep


def run_verify_gridcut(args):
    max_order = args.max_order
    if max_order is None:
        max_order = tangle.default_gridcut_order(args.r)
    return tangle.check_gridcut(
        grid.make_grid(args.r), max_order, args.vertex_cap, args.threads
    )


def run_check_model(args):
    host = formats.parse_graph(args.host)
    model = formats.parse_model(args.model, host)
    rep = model.report()
    rep.details.update(branch_sets=len(model.branch_sets))
    return rep


def run_extend_tangle(args):
    host = formats.parse_graph(args.host)
    model = formats.parse_model(args.model, host)
    rep = report.Report("extend-tangle")
    rep.merge(model.report())
    if not rep.passed:
        return rep
    pattern_tangle = formats.parse_tangle(args.pattern_tangle, model.pattern)
    ext = minor.extended_tangle(model, pattern_tangle)
    if args.check:
        rep.merge(tangle.check_axioms(host, ext, args.vertex_cap, args.threads))
        rep.merge(
            minor.check_branch_set_bound(model, ext, args.vertex_cap, args.threads)
        )
    if args.out is not None:
        members = ext.sorted_members(args.vertex_cap, args.threads)
        rep.details["members"] = len(members)
        _write(args.out, formats.dump_tangle(ext.order_threshold, members))
    return rep


def run_check_vortex(args):
    g = formats.parse_graph(args.graph)
    vtx, dec, comb = formats.parse_vortex_cert(args.cert, g)
    rep, _, linkage = vortex.check_vortex(
        vtx, dec, comb, args.allow_reversed_comb, args.threads
    )
    if linkage is not None:
        rep.lines.extend(
            f"linkpath: {utils.ids_to_str(path)}" for path in linkage.paths
        )
    return rep


def run_genus(args):
    g = formats.parse_graph(args.graph)
    rs = formats.parse_rotation(args.rotation, g)
    faces = surface.trace_faces(rs)
    rep = surface.check_faces(rs, faces)
    rep.details.update(
        vertices=g.vertex_count,
        edges=g.num_edges,
        faces=len(faces),
        genus=surface.euler_genus(rs, faces),
    )
    rep.lines.extend(
        f"face {idx}: {utils.ids_to_str(faces.walk(idx))}" for idx in range(len(faces))
    )
    if args.minimum:
        rep.details["minimum_genus"] = surface.minimum_euler_genus(
            g, args.rotation_cap, args.threads
        )
    return rep


def _restricted(tng, max_order):
    """The members of tng of order <= max_order, as a tangle of order max_order + 1."""
    if max_order is None or max_order + 1 >= tng.order_threshold:
        return tng
    return tangle.Tangle(
        tng.ground,
        max_order + 1,
        members=[sep for sep in tng.members if sep.order <= max_order],
    )


def run_check_near_embedding(args):
    g = formats.parse_graph(args.graph)
    cert = formats.parse_certificate(args.cert, g)
    profile = _profile(args)
    rep = nearembed.validate_certificate(
        g, cert, profile, args.allow_reversed_comb, args.threads
    )
    tng = None
    if args.tangle is not None:
        tng = _restricted(formats.parse_tangle(args.tangle, g), args.max_order)
    if args.respects:
        rep.merge(
            nearembed.respects_check(g, cert, tng, args.vertex_cap, args.threads)
        )
    essential = (args.neighbor_mode, args.essential_degree)
    if args.euler:
        rep.merge(nearembed.euler_report(g, cert, profile, *essential))
    if args.claims:
        rep.merge(nearembed.claims_report(g, cert, profile, *essential))
    if args.model is not None:
        model = formats.parse_model(args.model, g)
        rep.merge(nearembed.branch_count_check(g, cert, model, profile, tng))
    return rep


def run_wideness(args):
    g = formats.parse_graph(args.graph)
    cert = formats.parse_certificate(args.cert, g)
    return nearembed.wideness_report(
        g, cert, args.vortex, args.m, args.neighbor_mode, args.essential_degree
    )


def run_constants(args):
    return constants.check_constants(_profile(args))


def run_check_hypotheses(args):
    return constants.check_hypotheses(formats.parse_graph(args.graph), args.a)


def run_verify_all(args):
    return verify.verify_all(args.threads)


# Parsing.

NEAR_EMBEDDING_HELP = "A near-embedding certificate."


def _verify_near_embedding(args):
    assert (
        not args.respects or args.tangle is not None
    ), '"--respects" requires "--tangle".'
    given = [
        getattr(args, name) is not None
        for name in ["a", "s", "k", "alpha", "theta", "n2"]
    ]
    assert all(given) or not any(given), (
        'Give all of "--a", "--s", "--k", "--alpha", "--theta", and "--n2", or none.'
    )
    assert all(given) or not (args.euler or args.claims or args.model), (
        '"--euler", "--claims", and "--model" require the constants profile.'
    )
    return args


def _add_subcommand(subs, name, hlp, func, helpers, extra=None, verify_fnc=None):
    """Add a subcommand built from cl_args helpers.

    helpers: cl_args.add_* functions (or (function, kwargs) pairs), applied in order.
    extra: A function that adds subcommand-specific arguments to the parser.
    """
    psr = subs.add_parser(name, help=hlp, description=hlp)
    psr, psr_verify = cl_args.add_common(psr)
    for helper in helpers:
        fnc, kwargs = helper if isinstance(helper, tuple) else (helper, {})
        psr, psr_verify = fnc(psr, psr_verify, **kwargs)
    if extra is not None:
        extra(psr)
    if verify_fnc is not None:
        psr.set_defaults(func=func, verify=lambda args: verify_fnc(psr_verify(args)))
    else:
        psr.set_defaults(func=func, verify=psr_verify)
    return psr


def make_parser():
    """The top-level parser with one subparser per subcommand."""
    psr = argparse.ArgumentParser(
        prog="tanglekit",
        description="Check tangles, minor models, vortices, and near-embeddings.",
    )
    subs = psr.add_subparsers(dest="command", metavar="<subcommand>")
    subs.required = True

    _add_subcommand(
        subs,
        "grid",
        "Write the r x r grid W_r.",
        run_grid,
        [cl_args.add_r, cl_args.add_out],
    )
    _add_subcommand(
        subs,
        "enum-seps",
        "List every separation of a graph up to an order.",
        run_enum_seps,
        [cl_args.add_graph, cl_args.add_max_order, cl_args.add_caps, cl_args.add_out],
    )
    _add_subcommand(
        subs,
        "check-tangle",
        "Check the tangle axioms for an explicit tangle.",
        run_check_tangle,
        [
            cl_args.add_graph,
            (cl_args.add_input, {"name": "tangle", "help": "A tangle file."}),
            cl_args.add_caps,
        ],
        extra=lambda psr: psr.add_argument(
            "--orientations",
            action="store_true",
            help="Also require at most one orientation of every separation.",
        ),
    )

    def natural_extra(psr):
        psr.add_argument(
            "--materialize",
            action="store_true",
            help="Write the members to the output file (stdout by default).",
        )

    _add_subcommand(
        subs,
        "natural-tangle",
        "Count or write the natural tangle of W_r.",
        run_natural_tangle,
        [cl_args.add_r, cl_args.add_max_order, cl_args.add_caps, cl_args.add_out],
        extra=natural_extra,
    )
    _add_subcommand(
        subs,
        "verify-gridcut",
        "Check |A| <= ord(A, B)^2 over the natural tangle of W_r.",
        run_verify_gridcut,
        [cl_args.add_r, cl_args.add_max_order, cl_args.add_caps],
    )
    _add_subcommand(
        subs,
        "check-model",
        "Validate a minor model.",
        run_check_model,
        [
            (cl_args.add_graph, {"name": "host"}),
            (cl_args.add_input, {"name": "model", "help": "A model file."}),
        ],
    )
    _add_subcommand(
        subs,
        "extend-tangle",
        "Extend a pattern tangle to the host of a minor model.",
        run_extend_tangle,
        [
            (cl_args.add_graph, {"name": "host"}),
            (cl_args.add_input, {"name": "model", "help": "A model file."}),
            (
                cl_args.add_input,
                {"name": "pattern-tangle", "help": "A tangle file on the pattern."},
            ),
            cl_args.add_caps,
            cl_args.add_out,
        ],
        extra=lambda psr: psr.add_argument(
            "--check",
            action="store_true",
            help="Check the axioms and the branch-set bound for the extended tangle.",
        ),
    )
    _add_subcommand(
        subs,
        "check-vortex",
        "Check a vortex decomposition, its linkage, and its comb.",
        run_check_vortex,
        [
            cl_args.add_graph,
            (cl_args.add_input, {"name": "cert", "help": "A vortex certificate."}),
            cl_args.add_vortex_options,
        ],
    )
    _add_subcommand(
        subs,
        "genus",
        "Trace the faces of a rotation system and compute its Euler genus.",
        run_genus,
        [
            cl_args.add_graph,
            (cl_args.add_input, {"name": "rotation", "help": "A rotation file."}),
            cl_args.add_caps,
        ],
        extra=lambda psr: psr.add_argument(
            "--minimum",
            action="store_true",
            help="Also compute the minimum Euler genus over every rotation system.",
        ),
    )

    def near_embedding_extra(psr):
        psr.add_argument(
            "--respects",
            action="store_true",
            help='Check that the certificate respects the tangle in "--tangle".',
        )
        psr.add_argument(
            "--euler", action="store_true", help="Evaluate the Euler-formula rows."
        )
        psr.add_argument(
            "--claims", action="store_true", help="Evaluate the counting claims."
        )

    _add_subcommand(
        subs,
        "check-near-embedding",
        "Validate a near-embedding certificate.",
        run_check_near_embedding,
        [
            cl_args.add_graph,
            (cl_args.add_input, {"name": "cert", "help": NEAR_EMBEDDING_HELP}),
            (
                cl_args.add_input,
                {
                    "name": "tangle",
                    "help": "A tangle file on the graph.",
                    "required": False,
                },
            ),
            (
                cl_args.add_input,
                {
                    "name": "model",
                    "help": "A minor model in the graph.",
                    "required": False,
                },
            ),
            cl_args.add_max_order,
            cl_args.add_caps,
            cl_args.add_vortex_options,
            (cl_args.add_profile, {"required": False}),
        ],
        extra=near_embedding_extra,
        verify_fnc=_verify_near_embedding,
    )

    def wideness_extra(psr):
        psr.add_argument(
            "--vortex", help="The index of the large vortex.", required=True, type=int
        )
        psr.add_argument(
            "--m", help="The wideness to test for.", required=True, type=int
        )

    _add_subcommand(
        subs,
        "wideness",
        "Count the essential society vertices of a large vortex.",
        run_wideness,
        [
            cl_args.add_graph,
            (cl_args.add_input, {"name": "cert", "help": NEAR_EMBEDDING_HELP}),
            cl_args.add_vortex_options,
        ],
        extra=wideness_extra,
    )
    _add_subcommand(
        subs,
        "constants",
        "Derive g, n1, and r and check their minimality.",
        run_constants,
        [cl_args.add_profile],
    )
    _add_subcommand(
        subs,
        "check-hypotheses",
        "Check the connectivity and minimum-degree hypotheses.",
        run_check_hypotheses,
        [cl_args.add_graph],
        extra=lambda psr: psr.add_argument(
            "--a", help="The apex-size parameter a.", required=True, type=int
        ),
    )
    _add_subcommand(
        subs,
        "verify-all",
        "Run every acceptance check.",
        run_verify_all,
        [],
    )
    return psr


def parse_args(argv=None):
    """Parse and verify arguments. Invalid arguments exit with code 2."""
    psr = make_parser()
    args = psr.parse_args(argv)
    try:
        args = args.verify(args)
        args.threads = utils.resolve_threads(args.threads)
    except (AssertionError, RuntimeError) as exc:
        psr.error(str(exc))
    return args


def main(argv=None):
    args = parse_args(argv)
    logging.basicConfig(
        filename=args.log,
        filemode="w",
        format=defaults.LOG_FORMAT,
        level=logging.DEBUG if args.debug else logging.WARNING,
    )
    utils.set_rand_seed()
    tim_srt_s = time.time()
    try:
        res = args.func(args)
    except errors.TanglekitError as exc:
        logging.debug("%s failed", args.command, exc_info=True)
        print(f"tanglekit {args.command}: error: {exc}", file=sys.stderr)
        return defaults.EXIT_USAGE
    logging.info(
        "Finished %s - time: %.2f seconds", args.command, time.time() - tim_srt_s
    )

    if isinstance(res, list):
        for rep in res:
            _emit(rep)
        overall = report.Report(args.command)
        for rep in res:
            overall.violations.extend(rep.violations)
            overall.checked += rep.checked
        print(overall.summary())
    else:
        overall = res
        overall.name = args.command
        _emit(overall)
    return defaults.EXIT_PASS if overall.passed else defaults.EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
