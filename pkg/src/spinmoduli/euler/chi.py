"""Exact Euler-characteristic arithmetic on complex algebraic strata.

Every quantity is a :class:`fractions.Fraction`.  For complex algebraic
varieties the topological and compactly supported Euler characteristics
agree, so characteristics add over locally closed stratifications and
multiply by the fiber size over strata where a finite map has constant
fiber cardinality.
"""
from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def as_rational(x) -> Fraction:
    """Parse ``int``, ``Fraction`` or a ``"p/q"`` string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


def format_rational(x) -> str:
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def chi_m0n(n: int) -> Fraction:
    """Euler characteristic of the open moduli space ``M_{0,n}``.

    Forgetting the last point presents ``M_{0,n+1}`` as a fibration over
    ``M_{0,n}`` with fiber ``P^1`` minus ``n`` points.
    """
    if n < 3:
        raise ValueError(f"M_{{0,{n}}} is not defined for n < 3")
    chi = Fraction(1)
    for k in range(3, n):
        chi *= 2 - k
    return chi


def burnside_chi(group_order: int, fixed_chis) -> Fraction:
    """Euler characteristic of ``X / G`` from the Euler characteristics of the
    fixed loci ``X^h`` (the identity entry being ``chi(X)`` itself)."""
    fixed = [as_rational(c) for c in fixed_chis]
    if not fixed:
        raise ValueError("need the fixed-locus Euler characteristic of every group element")
    if len(fixed) != group_order:
        raise ValueError(f"expected {group_order} fixed-locus values, got {len(fixed)}")
    return sum(fixed, Fraction(0)) / group_order


def transposition_fixed_chi(n: int) -> Fraction:
    """Euler characteristic of the fixed locus of a transposition of two
    markings acting on ``M_{0,n}``.

    A fixed configuration needs a Moebius map fixing the other ``n - 2``
    points and swapping the two.  For ``n >= 5`` it fixes at least three
    points, hence is the identity, which cannot swap distinct points.  For
    ``n = 4``, normalise the points to ``0, infinity, 1, t``; the swap acts as
    ``t -> 1/t`` and the fixed points ``t = +-1`` leave only ``t = -1``.
    """
    if n < 4:
        raise ValueError("need at least four markings to swap two of them freely")
    if n >= 5:
        return Fraction(0)
    fixed = [t for t in (1, -1) if t not in (0, 1)]
    return Fraction(len(fixed))


def chi_m0n_mod_swap(n: int) -> Fraction:
    """``chi(M'_{0,n})``: the quotient of ``M_{0,n}`` by swapping two markings."""
    return burnside_chi(2, [chi_m0n(n), transposition_fixed_chi(n)])


def stratified_cover_chi(terms) -> Fraction:
    """``sum(fiber_size * chi(stratum))`` for a finite map with constant fiber
    size over each stratum of a stratification of the base."""
    total = Fraction(0)
    for fiber_size, chi in terms:
        if fiber_size < 0:
            raise ValueError(f"negative fiber size {fiber_size}")
        total += fiber_size * as_rational(chi)
    return total


def rh_genus(d: int, base_genus: int, ramification_excess: int) -> Fraction:
    """Genus of a degree ``d`` cover from Riemann-Hurwitz.

    Solves ``2g - 2 = d (2 h - 2) + R``.  A non-integral or negative result
    means no connected cover with these data exists.
    """
    if d < 1:
        raise ValueError("cover degree must be positive")
    return Fraction(d * (2 * base_genus - 2) + ramification_excess + 2, 2)


def max_cover_genus(d: int, base_genus: int, branch_points: int) -> Fraction:
    """Largest genus allowed for a degree ``d`` cover branched over at most
    ``branch_points`` points (each contributing ramification at most ``d - 1``)."""
    return rh_genus(d, base_genus, branch_points * (d - 1))


def cover_forced_rational(d: int, branch_points: int) -> bool:
    """Whether every connected degree ``d`` cover of ``P^1`` branched over at
    most ``branch_points`` points must have genus 0."""
    return max_cover_genus(d, 0, branch_points) <= 0
