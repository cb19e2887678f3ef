"""Utility functions."""

from fractions import Fraction
import logging
import multiprocessing
import os
import random
import time

import numpy as np

from tanglekit.core import defaults


def set_rand_seed(seed=defaults.SEED):
    """Set the Python and numpy random seeds to seed."""
    random.seed(seed)
    np.random.seed(seed)


def make_rng(seed=defaults.SEED):
    """A private random.Random that leaves the global generators untouched."""
    return random.Random(seed)


def resolve_threads(threads=None):
    """Pick the worker count: explicit value, then $TANGLEKIT_THREADS, then default."""
    if threads is None:
        env = os.environ.get(defaults.THREADS_ENV)
        if env:
            try:
                threads = int(env)
            except ValueError as exc:
                raise RuntimeError(
                    f"{defaults.THREADS_ENV} must be an integer, but is: {env}"
                ) from exc
        else:
            threads = defaults.DEFAULTS["threads"]
    assert threads >= 1, f"Threads must be at least 1, but is: {threads}"
    return threads


def run_parallel(fnc, args_lst, threads=1):
    """Run fnc(*args) for each entry of args_lst and return the results in order.

    Runs inline when threads <= 1 (or defaults.SYNC is set). Otherwise fans out to a
    multiprocessing pool, so fnc and every argument must be picklable.
    """
    args_lst = list(args_lst)
    if threads <= 1 or defaults.SYNC or len(args_lst) <= 1:
        return [fnc(*args) for args in args_lst]
    tim_srt_s = time.time()
    with multiprocessing.Pool(processes=threads) as pol:
        res = pol.starmap(fnc, args_lst)
    logging.debug(
        "Ran %d work units on %d workers - time: %.2f seconds",
        len(args_lst),
        threads,
        time.time() - tim_srt_s,
    )
    return res


def chunk(items, num_chunks):
    """Split items into at most num_chunks contiguous, non-empty lists."""
    items = list(items)
    if not items:
        return []
    num_chunks = max(1, min(num_chunks, len(items)))
    size = -(-len(items) // num_chunks)
    return [items[idx : idx + size] for idx in range(0, len(items), size)]


def canonical(vertices):
    """The canonical (sorted tuple) form of a vertex set."""
    return tuple(sorted(vertices))


def ids_to_str(vertices):
    """Comma-separated ids, in the given order."""
    return ",".join(str(vtx) for vtx in vertices)


def set_to_str(vertices):
    """Comma-separated ids of a vertex set, sorted."""
    return ids_to_str(canonical(vertices))


def to_mask(vertices):
    """Encode a set of non-negative ints as a bitmask."""
    mask = 0
    for vtx in vertices:
        mask |= 1 << vtx
    return mask


def num_to_str(val):
    """An exact rational as "p" or "p/q"."""
    val = Fraction(val)
    if val.denominator == 1:
        return str(val.numerator)
    return f"{val.numerator}/{val.denominator}"
