"""Independent derivations of the Euler characteristics of genus-one spin strata.

An elliptic curve is ``C / (Z + Z tau)``; points are pairs of lattice
coordinates in ``(Q / Z)^2`` and an automorphism fixing the origin is the
integer matrix of multiplication by a unit on the basis ``(1, tau)``.
Theta characteristics of ``E`` are the 2-torsion line bundles: the trivial
one is odd and the three nonzero 2-torsion classes are even.

Only two curves have automorphisms beyond ``-1``:

* ``j = 1728``: ``tau = i``, unit ``i`` of order 4;
* ``j = 0``: ``tau = omega``, unit ``-omega`` of order 6.

Since ``-1`` acts trivially on 2-torsion, everything else has a full fiber.
The j-line is the affine line, so ``chi(M_{1,1}) = 1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

Matrix = tuple[tuple[int, int], tuple[int, int]]
Point = tuple[Fraction, Fraction]

MINUS_ONE: Matrix = ((-1, 0), (0, -1))

# columns are the images of 1 and tau in the basis (1, tau)
CM_UNITS: dict[str, Matrix] = {
    "j=1728": ((0, -1), (1, 0)),   # i: 1 -> i, i -> -1
    "j=0": ((0, 1), (-1, 1)),      # -omega: 1 -> -omega, omega -> 1 + omega
}

CHI_J_LINE = Fraction(1)


def _mul(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def generated_group(gen: Matrix) -> list[Matrix]:
    group = [((1, 0), (0, 1))]
    while True:
        nxt = _mul(gen, group[-1])
        if nxt == group[0]:
            return group
        group.append(nxt)


def act(M: Matrix, p: Point) -> Point:
    return tuple((M[i][0] * p[0] + M[i][1] * p[1]) % 1 for i in range(2))


def two_torsion() -> list[Point]:
    """Nonzero 2-torsion points, i.e. the even theta characteristics."""
    return [
        (Fraction(a, 2), Fraction(b, 2))
        for a, b in itertools.product((0, 1), repeat=2)
        if (a, b) != (0, 0)
    ]


def orbit_count(group, points) -> int:
    remaining = set(points)
    count = 0
    while remaining:
        p = remaining.pop()
        remaining -= {act(h, p) for h in group}
        count += 1
    return count


def fixed_points(M: Matrix) -> list[Point]:
    """Points ``z`` of ``E`` with ``M z = z``; there are ``|det(1 - M)|`` of them."""
    a, b = 1 - M[0][0], -M[0][1]
    c, d = -M[1][0], 1 - M[1][1]
    det = abs(a * d - b * c)
    if det == 0:
        raise ValueError("the identity fixes every point")
    pts = [
        (Fraction(i, det), Fraction(j, det))
        for i in range(det)
        for j in range(det)
    ]
    return [p for p in pts if act(M, p) == p]


@dataclass(frozen=True)
class SpecialPoint:
    """A point of the coarse moduli space over which the even-root fiber shrinks."""

    curve: str
    point: Point | None
    stabilizer_order: int
    even_fiber: int


def special_points_m11() -> list[SpecialPoint]:
    out = []
    for name, unit in CM_UNITS.items():
        group = generated_group(unit)
        out.append(SpecialPoint(name, None, len(group), orbit_count(group, two_torsion())))
    return out


def special_points_m12() -> list[SpecialPoint]:
    """Points ``(E, 0, p)`` whose stabiliser in ``Aut(E, 0)`` moves 2-torsion.

    Candidates are the nonzero fixed points of group elements other than
    ``+-1``; each ``Aut(E, 0)``-orbit of candidates is one point of the moduli
    space.
    """
    out = []
    for name, unit in CM_UNITS.items():
        group = generated_group(unit)
        candidates = set()
        for h in group:
            if h in (((1, 0), (0, 1)), MINUS_ONE):
                continue
            candidates.update(p for p in fixed_points(h) if p != (0, 0))
        while candidates:
            p = min(candidates)
            orbit = {act(h, p) for h in group}
            candidates -= orbit
            stab = [h for h in group if act(h, p) == p]
            out.append(SpecialPoint(name, p, len(stab), orbit_count(stab, two_torsion())))
    return out


def _spin_chi(chi_base: Fraction, special: list[SpecialPoint]) -> tuple[Fraction, Fraction]:
    from .chi import stratified_cover_chi

    generic = chi_base - len(special)
    even = stratified_cover_chi([(3, generic)] + [(s.even_fiber, 1) for s in special])
    # the odd root is unique, so fixed by every automorphism
    odd = stratified_cover_chi([(1, generic)] + [(1, 1) for _ in special])
    return even, odd


def chi_s11_theta() -> tuple[Fraction, Fraction]:
    """``(chi(S_{1,1}^{(0),+}), chi(S_{1,1}^{(0),-}))`` over the j-line."""
    return _spin_chi(CHI_J_LINE, special_points_m11())


def chi_s12_theta(chi_m12) -> tuple[Fraction, Fraction]:
    """``(chi(S_{1,2}^{(0,0),+}), chi(S_{1,2}^{(0,0),-}))`` given ``chi(M_{1,2})``."""
    return _spin_chi(Fraction(chi_m12), special_points_m12())


def chi_double_cover_base(chi_cover, branch_points: int = 0) -> Fraction:
    """Euler characteristic of ``B`` when ``X -> B`` is a 2-sheeted covering
    away from ``branch_points`` points of ``B`` (each with one preimage)."""
    return (Fraction(chi_cover) - branch_points) / 2 + branch_points
