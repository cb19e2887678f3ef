"""Verdicts produced by the checkers."""

from dataclasses import dataclass, field
from enum import IntEnum
import typing


class ViolationKind(IntEnum):
    """Every rule a checker can find broken.

    The order is the order in which checks run, so the "first" violation of a report
    is the one with the lowest kind and then the lowest canonical key.
    """

    # Graph core.
    NOT_A_PATH = 0
    MENGER_MISMATCH = 1
    NOT_A_PARTITION = 2
    # Tangle axioms.
    MEMBER_NOT_SEPARATION = 10
    MEMBER_ORDER_TOO_LARGE = 11
    T1 = 12
    T2 = 13
    T3 = 14
    NOT_EXACTLY_ONE_ORIENTATION = 15
    GRIDCUT = 16
    # Minor models.
    MISSING_BRANCH_SET = 20
    EMPTY_BRANCH_SET = 21
    UNKNOWN_VERTEX = 22
    OVERLAPPING_BRANCH_SETS = 23
    DISCONNECTED_BRANCH_SET = 24
    MISSING_PATTERN_EDGE = 25
    INDUCED_NOT_SEPARATION = 26
    INDUCED_ORDER_TOO_LARGE = 27
    BRANCH_COUNT_EXCEEDED = 28
    # Vortex decompositions.
    BAG_COUNT_MISMATCH = 30
    UNKNOWN_BAG_VERTEX = 31
    SOCIETY_VERTEX_NOT_IN_BAG = 32
    VERTEX_NOT_IN_BAG = 33
    INTERVAL_VIOLATION = 34
    EDGE_NOT_COVERED = 35
    # Linkedness.
    SOCIETY_INTERSECTION_VIOLATION = 40
    UNEQUAL_ADHESION = 41
    ADHESION_IDENTITY_VIOLATION = 42
    NO_DISJOINT_PATH_SYSTEM = 43
    LINKAGE_COMPOSITION_FAILED = 44
    INVALID_LINKAGE = 45
    # Combs.
    SPINE_NOT_A_PATH = 50
    TOOTH_NOT_A_PATH = 51
    TOOTH_NOT_ATTACHED = 52
    TEETH_PATHS_OVERLAP = 53
    TEETH_ORDER_MISMATCH = 54
    # Surfaces.
    DART_PARTITION = 60
    GENUS_MISMATCH = 61
    # Near-embedding certificates.
    FOREIGN_EDGE = 70
    APEX_OVERLAP = 71
    UNCOVERED_EDGE = 72
    EDGE_COVERED_TWICE = 73
    UNCOVERED_VERTEX = 74
    SOCIETY_MISMATCH = 75
    VORTEX_OVERLAP = 76
    TRIVIAL_VORTEX = 77
    LARGE_VORTICES_INTERSECT = 78
    ADHESION_TOO_LARGE = 79
    SMALL_VORTEX_TOO_LONG = 80
    MISSING_COMB = 81
    COMB_MEETS_LINKAGE = 82
    COMB_OUTSIDE_VORTEX = 83
    MISSING_DISC = 84
    UNKNOWN_FACE = 85
    START_DART_NOT_ON_FACE = 86
    SOCIETY_NOT_ON_FACE = 87
    INTERLEAVED_SOCIETIES = 88
    RESPECT_VIOLATION = 89
    # Arithmetic.
    INEQUALITY_FAILED = 90
    CLAIM_FAILED = 91
    HYPOTHESIS_FAILED = 92
    CONSTANTS_MISMATCH = 93
    CHECK_FAILED = 99


def _camel(name):
    return "".join(tok.capitalize() for tok in name.split("_"))


_KIND_TO_STR = {
    kind: (kind.name if kind.name in {"T1", "T2", "T3"} else _camel(kind.name))
    for kind in ViolationKind
}
_STR_TO_KIND = {string: kind for kind, string in _KIND_TO_STR.items()}


def to_str(kind):
    """Convert an instance of this enum to its display name."""
    if kind not in _KIND_TO_STR:
        raise KeyError(f"Unknown violation kind: {kind}")
    return _KIND_TO_STR[kind]


def to_kind(string):
    """Convert a display name to an instance of this enum."""
    if string not in _STR_TO_KIND:
        raise KeyError(f"Unknown violation kind: {string}")
    return _STR_TO_KIND[string]


@dataclass(frozen=True, order=True)
class Violation:
    """One broken rule. Ordered by (kind, key); the message is not compared."""

    kind: ViolationKind
    key: tuple = ()
    message: str = field(default="", compare=False)

    def __str__(self):
        return f"{to_str(self.kind)} {self.message}".rstrip()


class Report:
    """The outcome of a checker.

    name: The check (or subcommand) that produced this report.
    checked: How many items were examined.
    details: Measured values, keyed by name. Insertion order is the print order.
    lines: Informational output lines, printed before any violation.
    """

    def __init__(self, name):
        self.name = name
        self.violations: typing.List[Violation] = []
        self.checked = 0
        self.details: typing.Dict[str, typing.Any] = {}
        self.lines: typing.List[str] = []

    def add(self, kind, message="", key=()):
        """Record a violation."""
        self.violations.append(Violation(kind, tuple(key), message))

    def merge(self, other):
        """Fold another report's findings into this one."""
        self.violations.extend(other.violations)
        self.checked += other.checked
        self.lines.extend(other.lines)
        return self

    @property
    def passed(self):
        return not self.violations

    @property
    def first(self):
        """The lowest-ranked violation, or None."""
        return min(self.violations) if self.violations else None

    def has(self, kind):
        return any(vio.kind == kind for vio in self.violations)

    def kinds(self):
        return sorted({vio.kind for vio in self.violations})

    def sorted_violations(self):
        return sorted(self.violations)

    def summary(self):
        return (
            f"RESULT {self.name} {'pass' if self.passed else 'fail'} "
            f"checked={self.checked}"
        )

    def __str__(self):
        first = self.first
        return self.summary() + ("" if first is None else f" first={first}")
