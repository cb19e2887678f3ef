"""Separations (A, B) of a graph and their exhaustive enumeration."""

from dataclasses import dataclass
import itertools
import logging
import time

from tanglekit.core import defaults, errors, graph, utils


@dataclass(frozen=True)
class Separation:
    """An ordered pair of vertex sets. side_b is the "large side" by convention."""

    side_a: frozenset
    side_b: frozenset

    @staticmethod
    def of(side_a, side_b):
        return Separation(frozenset(side_a), frozenset(side_b))

    @property
    def separator(self):
        return self.side_a & self.side_b

    @property
    def order(self):
        return len(self.side_a & self.side_b)

    def key(self):
        """The canonical (sorted A, sorted B) key."""
        return (utils.canonical(self.side_a), utils.canonical(self.side_b))

    def sort_key(self):
        return (self.order,) + self.key()

    def reversed(self):
        return Separation(self.side_b, self.side_a)

    def augmented(self, extra):
        """(A + extra, B + extra)."""
        extra = frozenset(extra)
        return Separation(self.side_a | extra, self.side_b | extra)

    def __str__(self):
        side_a, side_b = utils.set_to_str(self.side_a), utils.set_to_str(self.side_b)
        return f"sep A={side_a} B={side_b}"


def is_separation(g, side_a, side_b):
    """Whether (side_a, side_b) covers V(g) with no edge from A - B to B - A."""
    side_a, side_b = frozenset(side_a), frozenset(side_b)
    if len(side_a | side_b) != g.vertex_count:
        return False
    if any(not 0 <= vtx < g.vertex_count for vtx in side_a | side_b):
        return False
    only_a, only_b = side_a - side_b, side_b - side_a
    return not any(
        (src in only_a and dst in only_b) or (src in only_b and dst in only_a)
        for src, dst in g.edges
    )


def check_separation(g, sep):
    """Raise NotASeparation unless sep is a separation of g."""
    if not is_separation(g, sep.side_a, sep.side_b):
        raise errors.NotASeparation(f"Not a separation of {g!r}: {sep}")
    return sep


def _separations_for(g, separators):
    """Every separation whose separator is one of separators."""
    seps = []
    for separator in separators:
        separator = frozenset(separator)
        comps = graph.components(g, separator)
        for mask in range(1 << len(comps)):
            side_a, side_b = set(separator), set(separator)
            for idx, comp in enumerate(comps):
                (side_a if mask >> idx & 1 else side_b).update(comp)
            seps.append(Separation(frozenset(side_a), frozenset(side_b)))
    return seps


def enumerate_separations(g, max_order, vertex_cap=None, threads=1):
    """Every ordered separation of g of order at most max_order, exactly once.

    Candidate separators S = A & B are split across workers; each component of g - S
    goes to A or to B. The result is sorted by (order, canonical key), so it does not
    depend on the worker count.
    """
    vertex_cap = defaults.DEFAULTS["vertex_cap"] if vertex_cap is None else vertex_cap
    if g.vertex_count > vertex_cap:
        raise errors.InstanceTooLarge(
            f"Separation enumeration is capped at {vertex_cap} vertices, "
            f"but the graph has {g.vertex_count}"
        )
    tim_srt_s = time.time()
    separators = [
        sep
        for size in range(min(max_order, g.vertex_count) + 1)
        for sep in itertools.combinations(g.vertices, size)
    ]
    res = utils.run_parallel(
        _separations_for,
        [(g, chk) for chk in utils.chunk(separators, threads * 4)],
        threads,
    )
    seps = sorted(set(itertools.chain.from_iterable(res)), key=Separation.sort_key)
    logging.info(
        "Enumerated %d separations of order <= %d of %r - time: %.2f seconds",
        len(seps),
        max_order,
        g,
        time.time() - tim_srt_s,
    )
    return seps


def random_separation(g, max_order, rng):
    """A random separation of order at most max_order.

    Draws a separator S uniformly by size and then vertices, and assigns each component
    of g - S to a side by a coin flip.
    """
    size = rng.randint(0, min(max_order, g.vertex_count))
    separator = frozenset(rng.sample(list(g.vertices), size))
    side_a, side_b = set(separator), set(separator)
    for comp in graph.components(g, separator):
        (side_a if rng.random() < 0.5 else side_b).update(comp)
    return Separation(frozenset(side_a), frozenset(side_b))
