"""Signatures of spin moduli spaces and their boundary divisor types.

A signature ``(g, n, m)`` with ``m_i in {0, 1}`` indexes the moduli space of
``n``-pointed genus ``g`` quasi-stable curves with a square root of
``omega(sum m_i p_i)``.  The space is empty unless ``sum m_i`` is even.

Boundary divisors come from one-node degenerations.  A separating node whose
side ``S1`` has odd twist sum stays an ordinary node carrying twist 1 on both
branches (``Delta``).  With even twist sum the node is blown up into an
exceptional component (twist 0 on both branches) and every positive-genus
side with identically zero twist gets a root parity; ``A`` marks an even
root on the distinguished side, ``B`` an odd one.  The non-separating node
gives ``A_irr`` (ordinary node) and ``B_irr`` (exceptional component).
"""
from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass, field

from .arf import theta_counts_closed_form
from .errors import EmptyModuliError, OutOfWindowError, StructureError

MAX_GENUS = 2
MAX_MARKINGS = 5
PARITIES = ("even", "odd")


class FreenessCaveat(UserWarning):
    """Generator count requested below the genus where freeness is known (g >= 5)."""


@dataclass(frozen=True)
class SpinSignature:
    g: int
    n: int
    m: tuple[int, ...] = ()

    def __post_init__(self):
        m = tuple(int(x) for x in self.m)
        object.__setattr__(self, "m", m)
        if self.g < 0 or self.n < 0:
            raise StructureError(f"negative genus or marking count in {self}")
        if len(m) != self.n:
            raise StructureError(f"twist vector {m} has length {len(m)}, expected n = {self.n}")
        if any(x not in (0, 1) for x in m):
            raise StructureError(f"twists must lie in {{0, 1}}, got {m}")
        if 2 * self.g - 2 + self.n <= 0:
            raise StructureError(f"(g, n) = ({self.g}, {self.n}) is not in the stable range")

    @classmethod
    def of(cls, g: int, m=()) -> "SpinSignature":
        return cls(g, len(tuple(m)), tuple(m))

    @property
    def twist_sum(self) -> int:
        return sum(self.m)


def is_nonempty(sig: SpinSignature) -> bool:
    return sig.twist_sum % 2 == 0


def _require_nonempty(sig: SpinSignature) -> None:
    if not is_nonempty(sig):
        raise EmptyModuliError(f"{sig} is empty: odd twist sum {sig.twist_sum}")


def spin_degree(sig: SpinSignature) -> int:
    """Degree of the spin line bundle, ``g - 1 + sum(m) / 2``."""
    _require_nonempty(sig)
    return sig.g - 1 + sig.twist_sum // 2


def fiber_degree(sig: SpinSignature) -> int:
    """Number of spin structures on a general smooth curve of the family."""
    _require_nonempty(sig)
    return 2 ** (2 * sig.g)


# boundary -------------------------------------------------------------------


@dataclass(frozen=True)
class Side:
    """One side of a boundary curve: genus, original marking labels, local twists.

    ``twists`` lists the twist at each marking (in label order) followed by the
    twist at the branch(es) of the node.
    """

    genus: int
    markings: tuple[int, ...]
    twists: tuple[int, ...]
    parity: str | None = None

    @property
    def num_points(self) -> int:
        return len(self.twists)

    @property
    def twist_sum(self) -> int:
        return sum(self.twists)

    @property
    def bundle_degree(self) -> int:
        return self.genus - 1 + self.twist_sum // 2

    def is_stable(self) -> bool:
        return 2 * self.genus - 2 + self.num_points > 0

    def describe(self) -> str:
        k = self.num_points
        if self.genus == 0:
            d = self.bundle_degree
            twist = {0: "", 1: "(P)", -1: "(-P)"}.get(d, f"({d}P)")
            bundle = f"the line bundle O_C{twist}"
            return f"smooth {k}-pointed rational curve C carrying {bundle}"
        curve = "elliptic curve E" if self.genus == 1 else f"genus-{self.genus} curve C"
        canonical = "O_E" if self.genus == 1 else "omega_C"
        twisted = [f"p_{i + 1}" for i, t in enumerate(self.twists) if t]
        if twisted:
            bundle = f"a square root of {canonical}({' + '.join(twisted)})"
        elif self.parity == "even":
            bundle = f"an even root of {canonical}"
        elif self.parity == "odd":
            bundle = "the line bundle O_E" if self.genus == 1 else f"an odd root of {canonical}"
        else:
            bundle = f"a square root of {canonical}"
        return f"smooth {k}-pointed {curve} carrying {bundle}"

    def record(self) -> dict:
        return {
            "genus": self.genus,
            "markings": list(self.markings),
            "twists": list(self.twists),
            "parity": self.parity,
        }


@dataclass(frozen=True)
class BoundaryDivisorType:
    kind: str  # "A_irr", "B_irr", "Delta", "A" or "B"
    sides: tuple[Side, ...]
    genus1: int | None = None
    markings1: tuple[int, ...] | None = None

    @property
    def node(self) -> str:
        return "ordinary" if self.kind in ("A_irr", "Delta") else "exceptional"

    @property
    def parity(self) -> tuple[str | None, ...]:
        return tuple(s.parity for s in self.sides)

    @property
    def label(self) -> str:
        if self.kind in ("A_irr", "B_irr"):
            return self.kind
        subset = "{" + ",".join(str(i) for i in self.markings1) + "}"
        label = f"{self.kind}_{{{self.genus1},{subset}}}"
        if sum(p is not None for p in self.parity) > 1:
            label += "[" + ",".join(self.parity) + "]"
        return label

    def describe(self) -> list[str]:
        return [s.describe() for s in self.sides]

    def check(self) -> None:
        """Raise ``AssertionError`` if the type violates its own invariants."""
        for s in self.sides:
            assert s.is_stable(), f"{self.label}: unstable side {s}"
            assert s.twist_sum % 2 == 0, f"{self.label}: odd twist on side {s}"
        if self.kind == "Delta":
            assert sum(self.sides[0].twists[:-1]) % 2 == 1
            assert self.sides[0].twists[-1] == self.sides[1].twists[-1] == 1
        if self.kind in ("A", "B"):
            assert sum(self.sides[0].twists[:-1]) % 2 == 0
            assert self.sides[0].twists[-1] == self.sides[1].twists[-1] == 0
        for s in self.sides:
            needs_parity = s.genus > 0 and not any(s.twists) and self.kind in ("A", "B")
            assert (s.parity is not None) == needs_parity, f"{self.label}: parity on {s}"

    def record(self) -> dict:
        return {
            "kind": self.kind,
            "split": None if self.genus1 is None else [self.genus1, list(self.markings1)],
            "node": self.node,
            "parity": list(self.parity),
            "sides": [s.record() for s in self.sides],
        }

    def _sort_key(self):
        split = self.genus1 is not None
        order = {"A_irr": 0, "B_irr": 1, "Delta": 2, "A": 3, "B": 4}[self.kind]
        return (split, -(self.genus1 or 0), len(self.markings1 or ()), self.markings1 or (),
                order, tuple(p or "" for p in self.parity))


def _irreducible_types(sig: SpinSignature) -> list[BoundaryDivisorType]:
    labels = tuple(range(1, sig.n + 1))
    return [
        BoundaryDivisorType("A_irr", (Side(sig.g - 1, labels, sig.m + (1, 1)),)),
        BoundaryDivisorType("B_irr", (Side(sig.g - 1, labels, sig.m + (0, 0)),)),
    ]


def stable_splits(g: int, n: int):
    """Unordered separating splits ``((g1, S1), (g2, S2))`` with both sides stable.

    The first side has the larger genus; on a tie it holds marking 1.
    """
    seen = set()
    for g1 in range(g, -1, -1):
        g2 = g - g1
        for bits in itertools.product((1, 0), repeat=n):
            s1 = tuple(i + 1 for i, b in enumerate(bits) if b)
            s2 = tuple(i + 1 for i, b in enumerate(bits) if not b)
            if 2 * g1 - 1 + len(s1) <= 0 or 2 * g2 - 1 + len(s2) <= 0:
                continue
            if g1 < g2 or (g1 == g2 and n and 1 not in s1):
                continue
            key = frozenset([(g1, s1), (g2, s2)])
            if key in seen:
                continue
            seen.add(key)
            yield (g1, s1), (g2, s2)


def _realizable(genus: int, parity: str) -> bool:
    even, odd = theta_counts_closed_form(genus)
    return (even if parity == "even" else odd) > 0


def _split_types(sig: SpinSignature, side1, side2) -> list[BoundaryDivisorType]:
    (g1, s1), (g2, s2) = side1, side2
    t1 = tuple(sig.m[i - 1] for i in s1)
    t2 = tuple(sig.m[i - 1] for i in s2)
    if sum(t1) % 2:
        sides = (Side(g1, s1, t1 + (1,)), Side(g2, s2, t2 + (1,)))
        return [BoundaryDivisorType("Delta", sides, g1, s1)]

    bare = (Side(g1, s1, t1 + (0,)), Side(g2, s2, t2 + (0,)))
    refined = [i for i, s in enumerate(bare) if s.genus > 0 and not any(s.twists)]
    choices = [
        [p for p in PARITIES if _realizable(bare[i].genus, p)] if i in refined else [None]
        for i in range(2)
    ]
    symmetric = len(refined) == 2 and (g1, len(s1), t1) == (g2, len(s2), t2) and s1 == s2
    found = {}
    for assignment in itertools.product(*choices):
        if symmetric:
            assignment = tuple(sorted(assignment, key=PARITIES.index))
        found[assignment] = None
    types = []
    for assignment in found:
        sides = tuple(
            Side(s.genus, s.markings, s.twists, p) for s, p in zip(bare, assignment)
        )
        lead = next((p for p in assignment if p is not None), "even")
        kind = "A" if lead == "even" else "B"
        types.append(BoundaryDivisorType(kind, sides, g1, s1))
    return types


def enumerate_boundary(sig: SpinSignature) -> list[BoundaryDivisorType]:
    """Boundary divisor types of the compactified spin moduli space ``sig``."""
    _require_nonempty(sig)
    if sig.g > MAX_GENUS or sig.n > MAX_MARKINGS:
        raise OutOfWindowError(
            f"boundary enumeration supports g <= {MAX_GENUS}, n <= {MAX_MARKINGS}; got {sig}"
        )
    types = _irreducible_types(sig) if sig.g >= 1 else []
    for side1, side2 in stable_splits(sig.g, sig.n):
        types.extend(_split_types(sig, side1, side2))
    return sorted(types, key=BoundaryDivisorType._sort_key)


def boundary_to_text(types: list[BoundaryDivisorType]) -> str:
    return json.dumps([t.record() for t in types], indent=2) + "\n"


def boundary_from_text(text: str) -> list[BoundaryDivisorType]:
    out = []
    for rec in json.loads(text):
        sides = tuple(
            Side(s["genus"], tuple(s["markings"]), tuple(s["twists"]), s["parity"])
            for s in rec["sides"]
        )
        split = rec["split"]
        g1, s1 = (None, None) if split is None else (split[0], tuple(split[1]))
        out.append(BoundaryDivisorType(rec["kind"], sides, g1, s1))
    return out


# Picard generators -------------------------------------------------------------


@dataclass(frozen=True)
class PicGenerators:
    labels: tuple[str, ...]
    caveat: bool = field(default=False)

    def __len__(self) -> int:
        return len(self.labels)


def pic_generators(sig: SpinSignature) -> PicGenerators:
    """Hodge class, cotangent classes and one class per boundary divisor type.

    The set is only known to be a free basis for ``g >= 5``; below that the
    result carries ``caveat=True``.
    """
    boundary = enumerate_boundary(sig)
    labels = ("lambda",) + tuple(f"psi_{i}" for i in range(1, sig.n + 1))
    labels += tuple(t.label for t in boundary)
    if len(set(labels)) != len(labels):
        raise AssertionError(f"duplicate generator labels: {labels}")
    return PicGenerators(labels, caveat=sig.g < 5)


def pic_generator_count(sig: SpinSignature) -> int:
    gens = pic_generators(sig)
    if gens.caveat:
        warnings.warn(
            f"g = {sig.g} < 5: generators counted, freeness not asserted",
            FreenessCaveat,
            stacklevel=2,
        )
    return len(gens)
