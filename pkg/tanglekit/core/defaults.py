"""Default values."""

# Parameter defaults.
DEFAULTS = {
    "threads": 1,
    # Exhaustive separation enumeration refuses graphs larger than this.
    "vertex_cap": 16,
    # find_minor_model() limits.
    "minor_host_cap": 14,
    "minor_pattern_cap": 6,
    # The maximum number of rotation systems that minimum_euler_genus() may visit.
    "rotation_cap": 10_000_000,
    # A society vertex is essential if it has fewer than this many neighbors in G0.
    "essential_degree": 7,
    # Small vortices have at most this many society vertices.
    "small_vortex_length": 3,
    # How "neighbors in G0" is measured: "g0-edges" or "induced".
    "neighbor_mode": "g0-edges",
    "allow_reversed_comb": False,
    "random_separations": 1000,
    "menger_graphs": 200,
    "menger_max_vertices": 12,
    # Order cap for the gridcut check on grids larger than W_3.
    "gridcut_order_cap": 3,
    "log": None,
    "debug": False,
}
# Valid values for DEFAULTS["neighbor_mode"].
NEIGHBOR_MODES = ["g0-edges", "induced"]
# Environment variable consulted when --threads is not given.
THREADS_ENV = "TANGLEKIT_THREADS"
# Whether to execute synchronously or in parallel, regardless of the thread count.
SYNC = False
# The random seed.
SEED = 1337
# Log line format.
LOG_FORMAT = "%(asctime)s %(levelname)s | %(message)s"
# Exit codes of the command line front end.
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
