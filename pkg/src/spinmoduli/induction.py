"""Harer vanishing, compact-support duality and Betti bookkeeping for the
inductive computation of low-degree cohomology.

For a level structure of complex dimension ``d = 3g - 3 + n`` over
``M_{g,n}``, rational homology vanishes above degree ``c(g, n)``; Poincare
duality turns this into ``H^k_c = 0`` whenever ``2d - k > c(g, n)``.  The
pairs ``(g, n)`` where that inequality fails are the base cases of the
induction and have to be checked by hand.

Only ``(g, n)`` and the dimension enter, so the planner applies to any
level structure, spin or otherwise.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .errors import StructureError

# Hand-stated vanishing ranges for H^k_c: genus -> smallest n, and the genus
# from which every n is claimed.
STATED_RANGES = {
    1: {"min_n": {0: 4, 1: 2}, "all_from_genus": 2},
    3: {"min_n": {0: 7, 1: 4, 2: 2}, "all_from_genus": 3},
}


def stated_range_text(k: int) -> str | None:
    rng = STATED_RANGES.get(k)
    if rng is None:
        return None
    parts = [f"g >= {rng['all_from_genus']}"]
    parts += [f"g = {g}, n >= {n}" for g, n in sorted(rng["min_n"].items(), reverse=True)]
    return f"H^{k}_c = 0 stated for " + "; ".join(parts)


# Base cases listed by hand, as (g, largest n) for each genus that appears.
STATED_BASE_CASES = {
    1: {0: 3, 1: 1},
    3: {0: 6, 1: 3, 2: 1},
}


def _check_stable(g: int, n: int) -> None:
    if g < 0 or n < 0 or 2 * g - 2 + n <= 0:
        raise StructureError(f"(g, n) = ({g}, {n}) is not in the stable range")


def complex_dim(g: int, n: int) -> int:
    return 3 * g - 3 + n


def harer_bound(g: int, n: int) -> int:
    """Degree above which the rational homology of any level structure over
    ``M_{g,n}`` vanishes."""
    _check_stable(g, n)
    if g == 0:
        return n - 3
    if n == 0:
        return 4 * g - 5
    return 4 * g - 4 + n


def stated_vanishing(g: int, n: int, k: int) -> bool | None:
    """Whether the hand-stated ranges claim ``H^k_c = 0`` (``None`` if no range is stated)."""
    rng = STATED_RANGES.get(k)
    if rng is None:
        return None
    if g >= rng["all_from_genus"]:
        return True
    return n >= rng["min_n"][g]


@dataclass(frozen=True)
class VanishingReport:
    g: int
    n: int
    k: int
    c_value: int
    complex_dim: int
    vanishes: bool
    flagged: bool
    inequality: str
    stated: bool | None = None
    stated_range: str | None = None

    def to_text(self) -> str:
        return json.dumps(asdict(self))


def hc_vanishes(g: int, n: int, k: int) -> VanishingReport:
    """Compact-support vanishing of ``H^k_c`` by duality with Harer's bound.

    ``flagged`` marks disagreement with the hand-stated range for ``k``; the
    computed inequality is reported either way, never overridden.
    """
    _check_stable(g, n)
    if k < 0:
        raise StructureError(f"negative degree {k}")
    c = harer_bound(g, n)
    d = complex_dim(g, n)
    vanishes = 2 * d - k > c
    stated = stated_vanishing(g, n, k)
    flagged = stated is not None and stated != vanishes
    return VanishingReport(
        g=g,
        n=n,
        k=k,
        c_value=c,
        complex_dim=d,
        vanishes=vanishes,
        flagged=flagged,
        inequality=f"2*{d} - {k} = {2 * d - k} > c({g},{n}) = {c}: {vanishes}",
        stated=stated,
        stated_range=stated_range_text(k),
    )


def stable_window(g_max: int, n_max: int):
    for g in range(g_max + 1):
        for n in range(n_max + 1):
            if 2 * g - 2 + n > 0:
                yield g, n


def base_cases(k: int, g_max: int, n_max: int, prune_trivial: bool = False):
    """Stable ``(g, n)`` in the window where duality does not give ``H^k_c = 0``.

    With ``prune_trivial`` the pairs with ``k > 2d`` are dropped, since there
    ``H^k`` of the compact space vanishes for dimension reasons.
    """
    if g_max < 0 or n_max < 0:
        raise StructureError("window bounds must be nonnegative")
    out = []
    for g, n in stable_window(g_max, n_max):
        if hc_vanishes(g, n, k).vanishes:
            continue
        if prune_trivial and k > 2 * complex_dim(g, n):
            continue
        out.append((g, n))
    return out


def stated_base_cases(k: int, g_max: int, n_max: int):
    """The hand-listed base cases for degree ``k``, restricted to the window."""
    table = STATED_BASE_CASES.get(k)
    if table is None:
        return None
    return [
        (g, n) for g, n in stable_window(g_max, n_max) if g in table and n <= table[g]
    ]


@dataclass
class InductionPlan:
    k: int
    g_max: int
    n_max: int
    base_cases: list
    stated: list | None
    flags: list = field(default_factory=list)

    @property
    def matches_stated(self) -> bool:
        return self.stated is not None and sorted(self.base_cases) == sorted(self.stated)


def plan(k: int, g_max: int, n_max: int, prune_trivial: bool = False) -> InductionPlan:
    cases = base_cases(k, g_max, n_max, prune_trivial)
    flags = [
        r for r in (hc_vanishes(g, n, k) for g, n in stable_window(g_max, n_max)) if r.flagged
    ]
    return InductionPlan(k, g_max, n_max, cases, stated_base_cases(k, g_max, n_max), flags)


# Betti sandwich ------------------------------------------------------------------


@dataclass
class BettiConstraintSystem:
    """Betti numbers ``b_0..b_{2d}`` of a smooth compact space of complex dimension ``d``.

    ``fixed``, ``lower`` and ``upper`` are keyed by degree.  Duality
    ``b_k = b_{2d-k}`` is imposed; bounds given for either degree of a dual
    pair apply to both.  ``cap`` bounds every ``b_k`` that has no upper bound.
    """

    d: int
    chi: Fraction
    fixed: dict = field(default_factory=dict)
    lower: dict = field(default_factory=dict)
    upper: dict = field(default_factory=dict)
    cap: int = 256

    @classmethod
    def from_record(cls, rec: dict) -> "BettiConstraintSystem":
        ints = lambda m: {int(k): int(v) for k, v in (m or {}).items()}  # noqa: E731
        return cls(
            d=int(rec["d"]),
            chi=Fraction(str(rec["chi"])),
            fixed=ints(rec.get("fixed")),
            lower=ints(rec.get("lower")),
            upper=ints(rec.get("upper")),
            cap=int(rec.get("cap", 256)),
        )

    def record(self) -> dict:
        return {
            "d": self.d,
            "chi": f"{self.chi.numerator}/{self.chi.denominator}",
            "fixed": {str(k): v for k, v in sorted(self.fixed.items())},
            "lower": {str(k): v for k, v in sorted(self.lower.items())},
            "upper": {str(k): v for k, v in sorted(self.upper.items())},
            "cap": self.cap,
        }

    def bounds(self, k: int) -> tuple[int, int]:
        dual = 2 * self.d - k
        keys = {k, dual}
        lo, hi = 0, self.cap
        for j in keys:
            if j in self.fixed:
                lo, hi = max(lo, self.fixed[j]), min(hi, self.fixed[j])
            if j in self.lower:
                lo = max(lo, self.lower[j])
            if j in self.upper:
                hi = min(hi, self.upper[j])
        return lo, hi

    def satisfied_by(self, b) -> bool:
        b = list(b)
        if len(b) != 2 * self.d + 1:
            return False
        if any(b[k] != b[2 * self.d - k] for k in range(len(b))):
            return False
        if any(not (self.bounds(k)[0] <= b[k] <= self.bounds(k)[1]) for k in range(len(b))):
            return False
        return sum((-1) ** k * x for k, x in enumerate(b)) == self.chi


AMBIGUOUS = "ambiguous"
INFEASIBLE = "infeasible"


def betti_solutions(sys: BettiConstraintSystem, limit: int | None = None):
    """All Betti vectors satisfying the system, by exhaustive search.

    The lower half ``b_0..b_{d-1}`` is enumerated; ``b_d`` is then forced by
    the Euler characteristic.
    """
    d = sys.d
    ranges = [range(lo, hi + 1) for lo, hi in (sys.bounds(k) for k in range(d))]
    lo_d, hi_d = sys.bounds(d)
    found = []
    for half in itertools.product(*ranges):
        rest = sum(2 * (-1) ** k * x for k, x in enumerate(half))
        middle = (sys.chi - rest) * (-1) ** d
        if middle.denominator != 1 or not lo_d <= middle <= hi_d:
            continue
        b = tuple(half) + (int(middle),) + tuple(reversed(half))
        found.append(b)
        if limit is not None and len(found) >= limit:
            break
    return found


def resolve_betti(sys: BettiConstraintSystem):
    """The unique Betti vector allowed by the system, or ``"ambiguous"`` / ``"infeasible"``."""
    found = betti_solutions(sys, limit=2)
    if not found:
        return INFEASIBLE
    if len(found) > 1:
        return AMBIGUOUS
    return found[0]
