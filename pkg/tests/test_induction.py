import itertools
import json
from fractions import Fraction

import pytest

from spinmoduli.errors import StructureError
from spinmoduli.induction import (
    AMBIGUOUS,
    INFEASIBLE,
    BettiConstraintSystem,
    base_cases,
    betti_solutions,
    harer_bound,
    hc_vanishes,
    plan,
    resolve_betti,
    stable_window,
)


def test_harer_bound_examples():
    assert harer_bound(0, 5) == 2
    assert harer_bound(2, 0) == 3
    assert harer_bound(1, 3) == 3
    with pytest.raises(StructureError):
        harer_bound(1, 0)


def test_vanishing_examples():
    assert hc_vanishes(1, 2, 1).vanishes
    assert hc_vanishes(0, 7, 3).vanishes
    r = hc_vanishes(0, 4, 1)
    assert not r.vanishes and r.flagged and r.stated
    assert "g = 0, n >= 4" in r.stated_range
    assert json.loads(r.to_text())["flagged"] is True


def test_vanishing_monotone_in_n_and_k():
    # c grows by 1 per marking while 2d grows by 2, and higher k only helps less
    for g, n in stable_window(4, 8):
        for k in range(0, 6):
            if hc_vanishes(g, n, k).vanishes:
                assert hc_vanishes(g, n + 1, k).vanishes
            if hc_vanishes(g, n, k + 1).vanishes:
                assert hc_vanishes(g, n, k).vanishes


def test_base_cases_k3():
    assert sorted(base_cases(3, 3, 7)) == [
        (0, 3), (0, 4), (0, 5), (0, 6), (1, 1), (1, 2), (1, 3), (2, 0), (2, 1)]
    p = plan(3, 3, 7)
    assert p.matches_stated and not p.flags


def test_base_cases_k1():
    p = plan(1, 2, 5)
    assert sorted(p.base_cases) == [(0, 3), (0, 4), (1, 1)]
    assert [(r.g, r.n) for r in p.flags] == [(0, 4)]
    assert not p.matches_stated


def test_pruning():
    assert base_cases(9, 1, 4, prune_trivial=True) == []
    assert (0, 3) not in base_cases(1, 2, 5, prune_trivial=True)


def test_plan_partitions_window():
    # every stable pair is either a base case or covered by duality, never both
    for k in (1, 2, 3, 5):
        cases = set(base_cases(k, 3, 7))
        for g, n in stable_window(3, 7):
            assert ((g, n) in cases) != hc_vanishes(g, n, k).vanishes


def test_betti_examples():
    s12 = BettiConstraintSystem(2, Fraction(6), fixed={0: 1, 1: 0}, lower={2: 4})
    assert resolve_betti(s12) == (1, 0, 4, 0, 1)
    s13 = BettiConstraintSystem(3, Fraction(18), fixed={0: 1, 1: 0}, upper={2: 8})
    assert resolve_betti(s13) == (1, 0, 8, 0, 8, 0, 1)
    loose = BettiConstraintSystem(3, Fraction(18), fixed={1: 0}, lower={0: 1}, upper={2: 8})
    assert resolve_betti(loose) == AMBIGUOUS
    assert (2, 0, 7, 0, 7, 0, 2) in betti_solutions(loose)
    assert resolve_betti(BettiConstraintSystem(1, Fraction(3), fixed={0: 1, 1: 0})) == INFEASIBLE


def test_betti_solutions_are_exactly_the_feasible_vectors():
    sys = BettiConstraintSystem(2, Fraction(4), lower={0: 1}, upper={1: 3}, cap=6)
    found = set(betti_solutions(sys))
    brute = {
        b for b in itertools.product(range(7), repeat=5) if sys.satisfied_by(b)
    }
    assert found == brute and found


def test_record_round_trip():
    sys = BettiConstraintSystem(3, Fraction(18), fixed={0: 1}, upper={2: 8})
    assert BettiConstraintSystem.from_record(sys.record()) == sys
