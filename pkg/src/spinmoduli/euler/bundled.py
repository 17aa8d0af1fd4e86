"""Construction of the bundled ledgers.

Derived constants are computed here from their oracles; the JSON files under
``data/ledgers`` are the sealed output of :func:`build_bundled_ledgers` and a
test checks they still agree.  Regenerate with::

    python -m spinmoduli.euler.bundled
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .chi import chi_m0n, chi_m0n_mod_swap
from .ledger import ChiLedger, Constant, Partition, Term
from .oracles import chi_double_cover_base, chi_s11_theta, chi_s12_theta

# Values imported from the literature rather than recomputed.
CHI_M12 = Fraction(1)
CHI_M13 = Fraction(0)


def derived_constants() -> dict[str, Fraction]:
    s11_plus, s11_minus = chi_s11_theta()
    s12_plus, s12_minus = chi_s12_theta(CHI_M12)
    return {
        "M_04": chi_m0n(4),
        "M04_prime": chi_m0n_mod_swap(4),
        "M05_prime": chi_m0n_mod_swap(5),
        "S11_plus": s11_plus,
        "S11_minus": s11_minus,
        "S12_00_plus": s12_plus,
        "S12_00_minus": s12_minus,
        "Y_minus_pt": chi_double_cover_base(chi_m0n(4) - 1),
    }


ORACLES = {
    "M_04": "fibration recursion chi(M_{0,n+1}) = (2 - n) chi(M_{0,n}) from chi(M_{0,3}) = 1",
    "M04_prime": "Burnside quotient of M_{0,4} by a transposition; fixed locus is the point t = -1",
    "M05_prime": "Burnside quotient of M_{0,5} by a transposition; fixed locus empty",
    "S11_plus": "orbits of Aut(E) on the three even roots over the strata of the j-line",
    "S11_minus": "the odd root is unique, so the cover of the j-line is an isomorphism",
    "S12_00_plus": "orbits of Aut(E, p_1, p_2) on the three even roots over the strata of M_{1,2}",
    "S12_00_minus": "the odd root is unique, so the cover of M_{1,2} is an isomorphism",
    "Y_minus_pt": "M_{0,4} minus a point is a 2-sheeted covering of Y minus a point",
}


def _derived(values, name, quote):
    return Constant(name, values[name], "derived", quote, ORACLES[name])


def build_bundled_ledgers() -> list[ChiLedger]:
    d = derived_constants()
    one = Fraction(1)

    s12_open = ChiLedger(
        name="chi_S12_open",
        citation="\\chi(S_{1,2}^{(1,1)}) = 4 \\chi(M_{1,2}) - 2 \\chi(M'_{0,4}) - 3 = 1",
        constants=[
            Constant("M_12", CHI_M12, "cited", "\\chi(M_{1,2}) = 1"),
            Constant("X", d["M04_prime"], "derived", "\\chi(M'_{0,4})=0",
                     "X is isomorphic to M'_{0,4}; " + ORACLES["M04_prime"]),
            Constant("pt_lambda", one, "input", "\\lambda = - 1"),
            Constant("pt_omega", one, "input", "\\lambda = - \\omega"),
        ],
        partitions=[
            Partition("X", ("X_minus_pt", "pt_lambda")),
            Partition("M_12", ("M_12_generic", "X_minus_pt", "pt_lambda", "pt_omega")),
        ],
        terms=[
            Term(Fraction(4), ("M_12_generic",)),
            Term(Fraction(2), ("X_minus_pt",)),
            Term(Fraction(1), ("pt_lambda",)),
            Term(Fraction(2), ("pt_omega",)),
        ],
        expected=Fraction(1),
    )

    s13_open = ChiLedger(
        name="chi_S13_open",
        citation="\\chi(S_{1,3}^{(1,1,0)}) = 4 \\chi(M_{1,3} \\setminus Y \\cup \\{ point \\}) "
                 "+ 2 \\chi(Y) + 2 \\chi(point) = - 2",
        constants=[
            Constant("M_13", CHI_M13, "cited", "\\chi(M_{1,3})=0"),
            _derived(d, "Y_minus_pt",
                     "\\chi(Y)= \\frac{\\chi(M_{0,4} \\setminus \\{ point \\})}{2} + 1 = 0"),
            Constant("pt_y", one, "input", "Y \\setminus \\{ point \\}"),
            Constant("pt_omega", one, "input", "- \\omega"),
        ],
        partitions=[
            Partition("Y", ("Y_minus_pt", "pt_y")),
            Partition("M_13", ("M_13_generic", "Y", "pt_omega")),
        ],
        terms=[
            Term(Fraction(4), ("M_13_generic",)),
            Term(Fraction(2), ("Y",)),
            Term(Fraction(2), ("pt_omega",)),
        ],
        expected=Fraction(-2),
    )

    s12_bar = ChiLedger(
        name="chi_S12bar",
        citation="\\chi(\\overline{S}_{1,2}^{(1,1)}) = \\chi(S_{1,2}^{(1,1)}) + 3 \\chi(M'_{0,4}) "
                 "+ \\chi(S_{1,1}^{(0),+}) + \\chi(S_{1,1}^{(0),-}) + 3 + 1 = 6",
        requires=("chi_S12_open",),
        constants=[
            _derived(d, "M04_prime", "\\chi(M'_{0,4})=0"),
            _derived(d, "S11_plus", "\\chi(S_{1,1}^{(0),+})"),
            _derived(d, "S11_minus", "\\overline{S}_{1,1}^{(0), -} \\cong \\overline{M}_{1,1}"),
        ],
        terms=[
            Term(Fraction(1), ("chi_S12_open",)),
            Term(Fraction(3), ("M04_prime",)),
            Term(Fraction(1), ("S11_plus",)),
            Term(Fraction(1), ("S11_minus",)),
            Term(Fraction(3)),
            Term(Fraction(1)),
        ],
        expected=Fraction(6),
    )

    s13_bar = ChiLedger(
        name="chi_S13bar",
        citation="\\chi(\\overline{S}_{1,3}^{(0,0,0),+}) = ... + 9 + 5 + 2 = 18; the total is the "
                 "one used with h^2(\\overline{S}_{1,3}^{(1,1,0)}) \\le 8",
        requires=("chi_S12_open", "chi_S13_open"),
        constants=[
            _derived(d, "M05_prime", "2 \\chi(M'_{0,5})"),
            _derived(d, "M_04", "3 \\chi(M_{0,4})"),
            _derived(d, "M04_prime", "12 \\chi(M'_{0,4})"),
            _derived(d, "S11_plus", "\\chi(S_{1,1}^{(0),+})\\chi(M_{0,4})"),
            _derived(d, "S11_minus", "\\chi(S_{1,1}^{(0),-})\\chi(M_{0,4})"),
            _derived(d, "S12_00_plus", "\\chi(S_{1,2}^{(0,0),+})"),
            _derived(d, "S12_00_minus", "\\chi(S_{1,2}^{(0,0),-})"),
        ],
        terms=[
            Term(Fraction(1), ("chi_S13_open",)),
            Term(Fraction(2), ("M05_prime",)),
            Term(Fraction(1), ("S11_plus", "M_04")),
            Term(Fraction(1), ("S11_minus", "M_04")),
            Term(Fraction(2), ("chi_S12_open",)),
            Term(Fraction(1), ("S12_00_plus",)),
            Term(Fraction(1), ("S12_00_minus",)),
            Term(Fraction(3), ("M_04",)),
            Term(Fraction(12), ("M04_prime",)),
            Term(Fraction(3), ("S11_plus",)),
            Term(Fraction(3), ("S11_minus",)),
            Term(Fraction(9)),
            Term(Fraction(5)),
            Term(Fraction(2)),
        ],
        expected=Fraction(18),
    )
    return [s12_open, s13_open, s12_bar, s13_bar]


def write_bundled_ledgers(directory=None) -> list[Path]:
    directory = Path(directory or Path(__file__).parent / "data" / "ledgers")
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for ledger in build_bundled_ledgers():
        path = directory / f"{ledger.name}.json"
        path.write_text(ledger.to_text(), encoding="utf-8")
        paths.append(path)
    return paths


if __name__ == "__main__":
    for p in write_bundled_ledgers():
        print(p)
