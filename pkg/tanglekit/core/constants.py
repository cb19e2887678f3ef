"""Constants of the wide-vortex argument and the connectivity hypotheses."""

from dataclasses import dataclass
from fractions import Fraction
import math

from tanglekit.core import errors, graph, report


@dataclass(frozen=True)
class ConstantsProfile:
    a: int
    s: int
    k: int
    alpha: int
    theta: int
    n2: int
    # Derived.
    g: int
    n1: int
    r: int

    @property
    def ask(self):
        return self.a * self.s * self.k


def derive_g(a, s, k, alpha):
    return (s * k - 1) * math.comb(alpha, a)


def n1_holds(n1, a, s, k, alpha, n2, g):
    """n1 / 7 - 2(a + 1)g - ask >= 3g + (n2 - 1)alpha."""
    return Fraction(n1, 7) - 2 * (a + 1) * g - a * s * k >= 3 * g + (n2 - 1) * alpha


def r_bound(n1, g, alpha):
    """(n1 + g)(3 alpha)^2 + n1."""
    return (n1 + g) * (3 * alpha) ** 2 + n1


def r_holds(r, theta, alpha, n1, g):
    return r >= theta and r > 3 * alpha and r * r > r_bound(n1, g, alpha)


def compute_constants(a, s, k, alpha, theta, n2):
    """The profile with the smallest n1 and r satisfying their defining inequalities."""
    for name, val in zip(
        ["a", "s", "k", "alpha", "theta", "n2"], [a, s, k, alpha, theta, n2]
    ):
        if val < 1:
            raise errors.InvalidConstant(f'"{name}" must be at least 1, but is: {val}')
    if alpha <= 1:
        raise errors.AlphaTooSmall(f"alpha must be greater than 1, but is: {alpha}")
    g = derive_g(a, s, k, alpha)
    n1 = 7 * (3 * g + (n2 - 1) * alpha + 2 * (a + 1) * g + a * s * k)
    r = max(theta, 3 * alpha + 1, math.isqrt(r_bound(n1, g, alpha)) + 1)
    return ConstantsProfile(a, s, k, alpha, theta, n2, g, n1, r)


def check_constants(profile):
    """Check that n1 and r satisfy their inequalities, and n1 - 1 and r - 1 do not."""
    rep = report.Report("constants")
    prf = profile
    n1_args = (prf.a, prf.s, prf.k, prf.alpha, prf.n2, prf.g)
    checks = [
        ("g", prf.g == derive_g(prf.a, prf.s, prf.k, prf.alpha)),
        ("n1", n1_holds(prf.n1, *n1_args)),
        ("n1-1", not n1_holds(prf.n1 - 1, *n1_args)),
        ("r", r_holds(prf.r, prf.theta, prf.alpha, prf.n1, prf.g)),
        ("r-1", not r_holds(prf.r - 1, prf.theta, prf.alpha, prf.n1, prf.g)),
    ]
    rep.checked = len(checks)
    for idx, (name, holds) in enumerate(checks):
        if not holds:
            rep.add(
                report.ViolationKind.CONSTANTS_MISMATCH, f"condition {name}", (idx,)
            )
    rep.details.update(g=prf.g, n1=prf.n1, r=prf.r)
    rep.details["r_bound"] = r_bound(prf.n1, prf.g, prf.alpha)
    return rep


def delta_threshold(a):
    """31(a + 1)/2 - 3, exact."""
    return Fraction(31 * (a + 1), 2) - 3


def check_hypotheses(g, a):
    """kappa(G) >= 3a + 2 and delta(G) >= 31(a + 1)/2 - 3.

    The tree-width hypothesis is not evaluated.
    """
    if g.vertex_count < 2:
        raise errors.TooSmall(
            "The hypotheses need at least 2 vertices, "
            f"but the graph has {g.vertex_count}"
        )
    rep = report.Report("check-hypotheses")
    kappa = graph.vertex_connectivity(g)
    delta = g.min_degree()
    kappa_thr = 3 * a + 2
    delta_thr = delta_threshold(a)
    rep.checked = 2
    rep.details.update(
        kappa=kappa,
        kappa_threshold=kappa_thr,
        delta=delta,
        delta_threshold=math.ceil(delta_thr),
    )
    if kappa < kappa_thr:
        rep.add(
            report.ViolationKind.HYPOTHESIS_FAILED,
            f"kappa {kappa} < {kappa_thr}",
            (0,),
        )
    if delta < delta_thr:
        rep.add(
            report.ViolationKind.HYPOTHESIS_FAILED,
            f"delta {delta} < {math.ceil(delta_thr)}",
            (1,),
        )
    return rep
