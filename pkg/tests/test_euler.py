import math
from fractions import Fraction
from importlib import resources

import pytest

from spinmoduli.errors import LedgerError
from spinmoduli.euler import (
    BUNDLED,
    ChiLedger,
    Constant,
    Partition,
    Term,
    as_rational,
    bundled_ledger,
    bundled_ledgers,
    burnside_chi,
    chi_m0n,
    chi_m0n_mod_swap,
    cover_forced_rational,
    evaluate_ledgers,
    format_rational,
    ledger_eval,
    ledger_prerequisites,
    max_cover_genus,
    rh_genus,
    stratified_cover_chi,
    transposition_fixed_chi,
)
from spinmoduli.euler.bundled import build_bundled_ledgers, derived_constants
from spinmoduli.euler.oracles import (
    CM_UNITS,
    fixed_points,
    generated_group,
    special_points_m11,
    special_points_m12,
)


def test_chi_m0n():
    assert chi_m0n(3) == 1
    assert chi_m0n(4) == -1
    assert chi_m0n(5) == 2
    for n in range(3, 10):
        assert chi_m0n(n) == (-1) ** (n - 3) * math.factorial(n - 3)
    with pytest.raises(ValueError):
        chi_m0n(2)


def test_burnside():
    assert burnside_chi(2, [-1, 1]) == 0
    assert burnside_chi(2, [2, 0]) == 1
    assert burnside_chi(1, [Fraction(7, 3)]) == Fraction(7, 3)
    with pytest.raises(ValueError):
        burnside_chi(2, [1])


def test_swap_quotients():
    assert transposition_fixed_chi(4) == 1
    assert transposition_fixed_chi(5) == 0
    assert chi_m0n_mod_swap(4) == 0
    assert chi_m0n_mod_swap(5) == 1


def test_stratified_cover():
    assert stratified_cover_chi([(4, 0), (2, -1), (1, 1), (2, 1)]) == 1
    assert stratified_cover_chi([(4, -1), (2, 0), (2, 1)]) == -2
    assert stratified_cover_chi([(1, Fraction(5, 7))]) == Fraction(5, 7)
    with pytest.raises(ValueError):
        stratified_cover_chi([(-1, 1)])


def test_riemann_hurwitz():
    for d in range(1, 60):
        assert rh_genus(d, 0, 0) == 1 - d
        assert max_cover_genus(d, 0, 0) <= 0
        assert rh_genus(d, 0, 2 * (d - 1)) == 0
        assert cover_forced_rational(d, 2)
    assert rh_genus(1, 3, 0) == 3
    # three branch points no longer force genus 0
    assert not cover_forced_rational(3, 3)
    with pytest.raises(ValueError):
        rh_genus(0, 0, 0)


def test_rational_text():
    assert format_rational(Fraction(-2)) == "-2/1"
    assert as_rational("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_cm_groups_and_special_points():
    assert len(generated_group(CM_UNITS["j=1728"])) == 4
    assert len(generated_group(CM_UNITS["j=0"])) == 6
    for M in generated_group(CM_UNITS["j=0"])[1:]:
        det = abs((1 - M[0][0]) * (1 - M[1][1]) - M[0][1] * M[1][0])
        assert len(fixed_points(M)) == det
    assert sorted(p.even_fiber for p in special_points_m11()) == [1, 2]
    m12 = {(p.curve, p.stabilizer_order, p.even_fiber) for p in special_points_m12()}
    assert m12 == {("j=1728", 4, 2), ("j=0", 3, 1)}


def test_derived_constants():
    d = derived_constants()
    assert d["M05_prime"] == 1
    assert d["S11_plus"] == 0 and d["S11_minus"] == 1
    assert d["S12_00_plus"] == 0 and d["S12_00_minus"] == 1
    assert d["Y_minus_pt"] == -1


def test_bundled_files_are_sealed_build_output():
    directory = resources.files("spinmoduli.euler") / "data" / "ledgers"
    for ledger in build_bundled_ledgers():
        on_disk = (directory / f"{ledger.name}.json").read_text(encoding="utf-8")
        assert on_disk == ledger.to_text()


def test_bundled_values():
    results = evaluate_ledgers(bundled_ledgers())
    assert {k: v for k, (v, _) in results.items()} == {
        "chi_S12_open": 1, "chi_S13_open": -2, "chi_S12bar": 6, "chi_S13bar": 18,
    }
    assert all(ok for _, ok in results.values())
    for name in BUNDLED:
        for c in bundled_ledger(name).constants:
            assert c.provenance in ("cited", "derived", "input")
            if c.provenance == "derived":
                assert c.oracle


def test_s13bar_has_fourteen_terms():
    assert len(bundled_ledger("chi_S13bar").terms) == 14


def test_prerequisites():
    assert [lg.name for lg in ledger_prerequisites("chi_S13bar")] == [
        "chi_S12_open", "chi_S13_open", "chi_S13bar"]
    with pytest.raises(LedgerError):
        bundled_ledger("nope")


def test_round_trip_is_byte_exact():
    for ledger in bundled_ledgers():
        text = ledger.to_text()
        assert ChiLedger.from_text(text).to_text() == text


def _ledger(**kw):
    base = dict(name="t", constants=[Constant("x", Fraction(2), "input")],
                terms=[Term(Fraction(3), ("x",))], expected=Fraction(6))
    base.update(kw)
    return ChiLedger(**base)


def test_ledger_eval_basics():
    assert ledger_eval(_ledger()) == (6, True)
    assert ledger_eval(_ledger(expected=Fraction(5))) == (6, False)
    assert ledger_eval(_ledger(constants=[], terms=[], expected=Fraction(0))) == (0, True)


def test_ledger_errors():
    with pytest.raises(LedgerError, match="provenance"):
        ledger_eval(_ledger(constants=[Constant("x", Fraction(2), "")]))
    with pytest.raises(LedgerError, match="unresolved"):
        ledger_eval(_ledger(terms=[Term(Fraction(1), ("y",))]))
    with pytest.raises(LedgerError, match="requires"):
        ledger_eval(_ledger(requires=("chi_S12_open",)))
    with pytest.raises(LedgerError, match="not additive"):
        ledger_eval(_ledger(
            constants=[Constant("x", Fraction(2), "input"), Constant("a", Fraction(1), "input"),
                       Constant("b", Fraction(0), "input")],
            partitions=[Partition("x", ("a", "b"))],
        ))
    with pytest.raises(LedgerError, match="cannot resolve"):
        ledger_eval(_ledger(partitions=[Partition("x", ("a", "b"))]))
    with pytest.raises(LedgerError):
        ChiLedger.from_text('{"name": "t"}')


def test_partition_solving():
    ledger = _ledger(
        constants=[Constant("x", Fraction(2), "input"), Constant("a", Fraction(5), "input")],
        partitions=[Partition("x", ("a", "b")), Partition("b", ("c", "a"))],
        terms=[Term(Fraction(1), ("c",))],
        expected=Fraction(-8),
    )
    assert ledger_eval(ledger) == (-8, True)
