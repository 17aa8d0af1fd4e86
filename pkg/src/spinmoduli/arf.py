"""Quadratic refinements of the mod-2 intersection form and their Arf invariants.

Vectors of ``V = (Z/2)^{2g}`` are tuples of bits in the symplectic basis
order ``a_1..a_g, b_1..b_g``; the pairing has ``a_i . b_j = delta_ij`` and
``a_i . a_j = b_i . b_j = 0``.  A quadratic form is stored by its values on
the basis and extended to all of ``V`` through

    Q(x + y) = Q(x) + Q(y) + x . y.

Theta characteristics of a genus ``g`` curve correspond to such forms, with
parity given by the Arf invariant.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import OutOfWindowError, StructureError

Vector = tuple[int, ...]


@dataclass(frozen=True)
class SymplecticSpace:
    g: int

    def __post_init__(self):
        if self.g < 1:
            raise StructureError("symplectic space needs g >= 1")

    @property
    def dim(self) -> int:
        return 2 * self.g

    def basis(self) -> list[Vector]:
        return [tuple(int(i == k) for i in range(self.dim)) for k in range(self.dim)]

    def vectors(self):
        return itertools.product((0, 1), repeat=self.dim)

    def pair(self, x: Vector, y: Vector) -> int:
        g = self.g
        return sum(x[i] * y[g + i] + x[g + i] * y[i] for i in range(g)) % 2

    def gram(self) -> list[list[int]]:
        B = self.basis()
        return [[self.pair(u, v) for v in B] for u in B]

    def transvection(self, v: Vector):
        """The symplectic map ``x -> x + (x . v) v``."""
        v = tuple(v)

        def T(x: Vector) -> Vector:
            c = self.pair(x, v)
            return tuple((xi + c * vi) % 2 for xi, vi in zip(x, v))

        return T


def _add(x: Vector, y: Vector) -> Vector:
    return tuple((a + b) % 2 for a, b in zip(x, y))


@dataclass(frozen=True)
class QuadraticForm:
    """Quadratic refinement given by its values on ``a_1..a_g, b_1..b_g``."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(x) for x in self.values)
        if not vals or len(vals) % 2 or any(x not in (0, 1) for x in vals):
            raise StructureError(f"need an even-length nonempty bit vector, got {self.values}")
        object.__setattr__(self, "values", vals)

    @property
    def g(self) -> int:
        return len(self.values) // 2

    @property
    def space(self) -> SymplecticSpace:
        return SymplecticSpace(self.g)

    def __call__(self, v: Vector) -> int:
        return evaluate(self, v)

    def pullback(self, T) -> "QuadraticForm":
        """The form ``x -> Q(T x)``, which is again a refinement when ``T`` is symplectic."""
        return QuadraticForm(tuple(evaluate(self, T(e)) for e in self.space.basis()))

    def to_text(self) -> str:
        return "".join(str(x) for x in self.values)

    @classmethod
    def from_text(cls, text: str) -> "QuadraticForm":
        if not text or set(text) - {"0", "1"}:
            raise StructureError(f"not a bit string: {text!r}")
        return cls(tuple(int(c) for c in text))


def evaluate(q: QuadraticForm, v: Vector, order=None) -> int:
    """Value of ``q`` at ``v``, built up one basis vector at a time.

    ``order`` fixes the sequence in which the support of ``v`` is added; the
    result does not depend on it.
    """
    v = tuple(v)
    if len(v) != len(q.values):
        raise StructureError(f"vector of length {len(v)} for a form on {len(q.values)} bits")
    space = q.space
    basis = space.basis()
    support = [i for i, x in enumerate(v) if x % 2]
    if order is not None:
        support = [i for i in order if i in set(support)]
    acc = (0,) * len(v)
    value = 0
    for i in support:
        value = (value + q.values[i] + space.pair(acc, basis[i])) % 2
        acc = _add(acc, basis[i])
    return value


def arf(q: QuadraticForm) -> int:
    g = q.g
    return sum(q.values[i] * q.values[g + i] for i in range(g)) % 2


def all_forms(g: int):
    for bits in itertools.product((0, 1), repeat=2 * g):
        yield QuadraticForm(bits)


def count_by_arf(g: int) -> tuple[int, int]:
    """(even, odd) counts of quadratic forms on ``(Z/2)^{2g}``, by exhaustion."""
    if not 1 <= g <= 4:
        raise OutOfWindowError(f"count_by_arf supports 1 <= g <= 4, got {g}")
    odd = sum(arf(q) for q in all_forms(g))
    return 4**g - odd, odd


def theta_counts_closed_form(g: int) -> tuple[int, int]:
    """Numbers of even and odd theta characteristics on a smooth genus ``g`` curve.

    For ``g = 0`` there is a single (even) root.
    """
    if g < 0:
        raise StructureError(f"negative genus {g}")
    if g == 0:
        return 1, 0
    return 2 ** (g - 1) * (2**g + 1), 2 ** (g - 1) * (2**g - 1)


@dataclass(frozen=True)
class OrbitSummary:
    g: int
    sizes: tuple[int, ...]
    arf_values: tuple[int, ...]

    @property
    def num_orbits(self) -> int:
        return len(self.sizes)


def transvection_orbits(g: int) -> OrbitSummary:
    """Orbits of the transvection group acting on forms by pullback.

    Sizes are listed largest first, with the Arf invariant of each orbit.
    """
    if not 1 <= g <= 3:
        raise OutOfWindowError(f"transvection_orbits supports 1 <= g <= 3, got {g}")
    space = SymplecticSpace(g)
    gens = [space.transvection(v) for v in space.vectors() if any(v)]
    unseen = set(q.values for q in all_forms(g))
    orbits = []
    while unseen:
        start = QuadraticForm(min(unseen))
        orbit = {start.values}
        frontier = [start]
        while frontier:
            q = frontier.pop()
            for T in gens:
                p = q.pullback(T)
                if p.values not in orbit:
                    orbit.add(p.values)
                    frontier.append(p)
        unseen -= orbit
        arfs = {arf(QuadraticForm(x)) for x in orbit}
        if len(arfs) != 1:
            raise AssertionError("Arf invariant not constant on an orbit")
        orbits.append((len(orbit), arfs.pop()))
    orbits.sort(key=lambda t: (-t[0], t[1]))
    return OrbitSummary(g, tuple(s for s, _ in orbits), tuple(a for _, a in orbits))
