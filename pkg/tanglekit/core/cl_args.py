"""Common command line arguments."""

from os import path

from tanglekit.core import defaults


def add_common(psr, psr_verify=lambda args: args):
    """Add the "threads", "log", and "debug" arguments to the provided ArgumentParser.

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """

    def verify(args):
        threads = args.threads
        assert threads is None or threads >= 1, (
            f'"threads" must be at least 1, but is: {threads}'
        )
        log = args.log
        assert log is None or path.isdir(path.dirname(path.abspath(log))), (
            f'The directory of "log" does not exist: {log}'
        )
        return args

    psr.add_argument(
        "--threads",
        default=None,
        help=(
            f"The number of worker processes. Falls back to ${defaults.THREADS_ENV}, "
            f"then to {defaults.DEFAULTS['threads']}."
        ),
        type=int,
    )
    psr.add_argument(
        "--log",
        default=defaults.DEFAULTS["log"],
        help="Write the log to this file instead of stderr.",
        type=str,
    )
    psr.add_argument(
        "-d",
        "--debug",
        action="store_true",
        default=defaults.DEFAULTS["debug"],
        help="Log at the DEBUG level.",
    )
    return psr, lambda args: verify(psr_verify(args))


def _verify_files(args, names):
    for name in names:
        flp = getattr(args, name)
        assert flp is None or path.isfile(flp), (
            f'"{name.replace("_", "-")}" does not exist: {flp}'
        )
    return args


def add_graph(psr, psr_verify=lambda args: args, name="graph", required=True):
    """Add a graph file argument (e.g. "--graph" or "--host").

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """
    psr.add_argument(
        f"--{name}",
        help="A graph file (`p graph <n> <m>` header, then `e <u> <v>` lines).",
        required=required,
        type=str,
    )
    return psr, lambda args: _verify_files(psr_verify(args), [name])


def add_input(psr, psr_verify=lambda args: args, name="cert", help="", required=True):
    """Add an input file argument with an arbitrary name.

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """
    psr.add_argument(f"--{name}", help=help, required=required, type=str)
    return psr, lambda args: _verify_files(psr_verify(args), [name.replace("-", "_")])


def add_out(psr, psr_verify=lambda args: args, required=False):
    """Add an "out" argument to the provided ArgumentParser.

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """

    def verify(args):
        out = args.out
        assert out is None or path.isdir(path.dirname(path.abspath(out))), (
            f'The directory of "out" does not exist: {out}'
        )
        return args

    psr.add_argument(
        "--out",
        default=None,
        help="The output file. Defaults to stdout.",
        required=required,
        type=str,
    )
    return psr, lambda args: verify(psr_verify(args))


def add_r(psr, psr_verify=lambda args: args, default=None):
    """Add a grid size "r" argument to the provided ArgumentParser.

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """

    def verify(args):
        assert args.r >= 1, f'"r" must be at least 1, but is: {args.r}'
        return args

    psr.add_argument(
        "--r",
        default=default,
        help="The side length of the grid W_r.",
        required=default is None,
        type=int,
    )
    return psr, lambda args: verify(psr_verify(args))


def add_max_order(psr, psr_verify=lambda args: args):
    """Add a "max-order" argument to the provided ArgumentParser.

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """

    def verify(args):
        max_order = args.max_order
        assert max_order is None or max_order >= 0, (
            f'"max-order" cannot be negative, but is: {max_order}'
        )
        return args

    psr.add_argument(
        "--max-order",
        default=None,
        help="Only consider separations of at most this order.",
        type=int,
    )
    return psr, lambda args: verify(psr_verify(args))


def add_caps(psr, psr_verify=lambda args: args):
    """Add the exhaustive-search caps to the provided ArgumentParser.

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """

    def verify(args):
        for name in ["vertex_cap", "host_cap", "pattern_cap", "rotation_cap"]:
            cap = getattr(args, name)
            flag = name.replace("_", "-")
            assert cap >= 1, f'"{flag}" must be positive, but is: {cap}'
        return args

    psr.add_argument(
        "--vertex-cap",
        default=defaults.DEFAULTS["vertex_cap"],
        help="The largest graph on which separations are enumerated exhaustively.",
        type=int,
    )
    psr.add_argument(
        "--host-cap",
        default=defaults.DEFAULTS["minor_host_cap"],
        help="The largest host graph for the exhaustive minor search.",
        type=int,
    )
    psr.add_argument(
        "--pattern-cap",
        default=defaults.DEFAULTS["minor_pattern_cap"],
        help="The largest pattern graph for the exhaustive minor search.",
        type=int,
    )
    psr.add_argument(
        "--rotation-cap",
        default=defaults.DEFAULTS["rotation_cap"],
        help="The most rotation systems the exhaustive genus search may visit.",
        type=int,
    )
    return psr, lambda args: verify(psr_verify(args))


def add_vortex_options(psr, psr_verify=lambda args: args):
    """Add the vortex and essential-vertex options to the provided ArgumentParser.

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """

    def verify(args):
        assert args.essential_degree >= 0, (
            f'"essential-degree" cannot be negative, but is: {args.essential_degree}'
        )
        return args

    psr.add_argument(
        "--allow-reversed-comb",
        action="store_true",
        default=defaults.DEFAULTS["allow_reversed_comb"],
        help="Also accept combs whose teeth appear in reverse society order.",
    )
    psr.add_argument(
        "--neighbor-mode",
        choices=defaults.NEIGHBOR_MODES,
        default=defaults.DEFAULTS["neighbor_mode"],
        help=(
            'How to count neighbors in G0: "g0-edges" uses the edges of G0 only, '
            '"induced" uses every edge of G between vertices of G0.'
        ),
    )
    psr.add_argument(
        "--essential-degree",
        default=defaults.DEFAULTS["essential_degree"],
        help="Society vertices with fewer neighbors in G0 than this are essential.",
        type=int,
    )
    return psr, lambda args: verify(psr_verify(args))


def add_profile(psr, psr_verify=lambda args: args, required=True):
    """Add the arguments of a constants profile (a, s, k, alpha, theta, n2).

    Returns the provided parser, as well as a lambda to verify existing arguments.
    """

    def verify(args):
        for name in ["a", "s", "k", "alpha", "theta", "n2"]:
            val = getattr(args, name)
            assert (
                val is None or val >= 1
            ), f'"{name}" must be at least 1, but is: {val}'
        return args

    for name, hlp in [
        ("a", "The apex-size parameter a."),
        ("s", "The number s of copies of K_{a,k}."),
        ("k", "The parameter k of K_{a,k}."),
        ("alpha", "The near-embedding parameter alpha."),
        ("theta", "The tangle order threshold theta."),
        ("n2", "The wideness parameter n2."),
    ]:
        psr.add_argument(
            f"--{name}", default=None, help=hlp, required=required, type=int
        )
    return psr, lambda args: verify(psr_verify(args))
