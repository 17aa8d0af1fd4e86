import itertools
import random

import pytest

from spinmoduli.arf import (
    QuadraticForm,
    SymplecticSpace,
    all_forms,
    arf,
    count_by_arf,
    evaluate,
    theta_counts_closed_form,
    transvection_orbits,
)
from spinmoduli.errors import OutOfWindowError, StructureError


def add(x, y):
    return tuple((a + b) % 2 for a, b in zip(x, y))


def test_evaluate_examples():
    q0 = QuadraticForm((0, 0))
    assert evaluate(q0, (1, 1)) == 1
    assert evaluate(q0, (0, 0)) == 0
    assert evaluate(QuadraticForm((1, 1)), (1, 1)) == 1
    assert QuadraticForm((1, 0, 1, 0))((0, 0, 0, 0)) == 0


def test_arf_examples():
    assert arf(QuadraticForm((0, 0))) == 0
    assert arf(QuadraticForm((1, 1))) == 1
    assert arf(QuadraticForm((1, 1, 1, 1))) == 0


@pytest.mark.parametrize("g", [1, 2, 3])
def test_quadratic_identity_exhaustive(g):
    space = SymplecticSpace(g)
    vectors = list(space.vectors())
    for q in all_forms(g):
        table = {v: q(v) for v in vectors}
        for x, y in itertools.product(vectors, repeat=2):
            assert table[add(x, y)] == (table[x] + table[y] + space.pair(x, y)) % 2


def test_evaluation_order_independent():
    rng = random.Random(3)
    for g in (2, 3):
        for q in all_forms(g):
            v = tuple(rng.randint(0, 1) for _ in range(2 * g))
            order = list(range(2 * g))
            rng.shuffle(order)
            assert evaluate(q, v, order) == evaluate(q, v)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_arf_is_majority_value(g):
    # Arf 0 forms vanish on 2^{2g-1} + 2^{g-1} vectors, Arf 1 forms on 2^{2g-1} - 2^{g-1}
    vectors = list(SymplecticSpace(g).vectors())
    for q in all_forms(g):
        zeros = sum(1 - q(v) for v in vectors)
        assert zeros == 2 ** (2 * g - 1) + (-1) ** arf(q) * 2 ** (g - 1)


@pytest.mark.parametrize("g", [1, 2, 3])
def test_arf_invariant_under_transvections(g):
    space = SymplecticSpace(g)
    for v in space.vectors():
        T = space.transvection(v)
        # T is symplectic
        for x, y in itertools.combinations(list(space.vectors())[:16], 2):
            assert space.pair(T(x), T(y)) == space.pair(x, y)
        for q in itertools.islice(all_forms(g), 16):
            assert arf(q.pullback(T)) == arf(q)


def test_counts():
    assert count_by_arf(1) == (3, 1)
    assert count_by_arf(2) == (10, 6)
    assert count_by_arf(3) == (36, 28)
    for g in range(1, 5):
        assert count_by_arf(g) == theta_counts_closed_form(g)
    assert theta_counts_closed_form(0) == (1, 0)
    with pytest.raises(OutOfWindowError):
        count_by_arf(5)


def test_orbits():
    assert transvection_orbits(1).sizes == (3, 1)
    assert transvection_orbits(2).sizes == (10, 6)
    for g in (1, 2, 3):
        orbits = transvection_orbits(g)
        assert orbits.num_orbits == 2
        assert orbits.arf_values == (0, 1)
        assert orbits.sizes == theta_counts_closed_form(g)


def test_gram_is_standard():
    assert SymplecticSpace(1).gram() == [[0, 1], [1, 0]]


def test_text_round_trip_and_errors():
    q = QuadraticForm((1, 0, 0, 1))
    assert QuadraticForm.from_text(q.to_text()) == q
    with pytest.raises(StructureError):
        QuadraticForm.from_text("102")
    with pytest.raises(StructureError):
        QuadraticForm((1, 0, 1))
    with pytest.raises(StructureError):
        evaluate(q, (1, 0))
