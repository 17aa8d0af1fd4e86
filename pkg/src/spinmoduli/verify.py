"""Bundled replication suites.

Every check names the formula it reproduces (``anchor``) and renders
``expected`` and ``got`` exactly; rationals appear as ``"p/q"``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import arf, induction, relations, spin
from .euler import (
    bundled_ledgers,
    evaluate_ledgers,
    format_rational,
    max_cover_genus,
    stratified_cover_chi,
)
from .euler.bundled import derived_constants

SUITES = ("boundary", "arf", "euler", "induction", "relations")


class UnknownSuiteError(ValueError):
    pass


def _render(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, tuple):
        return [_render(v) for v in x]
    if isinstance(x, list):
        return [_render(v) for v in x]
    return x


@dataclass
class VerificationReport:
    suite: str
    checks: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def add(self, name: str, anchor: str, expected, got) -> None:
        expected, got = _render(expected), _render(got)
        self.checks.append(
            {"name": name, "anchor": anchor, "expected": expected, "got": got, "pass": expected == got}
        )

    def record(self) -> dict:
        return {
            "suite": self.suite,
            "checks": self.checks,
            "pass": self.passed,
            "elapsed": round(self.elapsed, 3),
        }


# suites ------------------------------------------------------------------------

BOUNDARY_S12 = ["A_irr", "B_irr", "A_{1,{}}", "B_{1,{}}"]
BOUNDARY_S13 = BOUNDARY_S12 + ["Delta_{1,{1}}", "Delta_{1,{2}}", "A_{1,{3}}", "B_{1,{3}}"]
ELLIPTIC_PHRASE = {
    "A": "an even root of O_E",
    "B": "the line bundle O_E",
    "Delta": "a square root of O_E(p_1 + p_2)",
}


def _boundary(report: VerificationReport) -> None:
    for m, expected, anchor in (
        ((1, 1), BOUNDARY_S12, "A_\\mathrm{irr}, B_\\mathrm{irr}, A_{1, \\emptyset}, B_{1, \\emptyset}"),
        ((1, 1, 0), BOUNDARY_S13, "\\Delta_{1, \\{ 1 \\}}, \\Delta_{1, \\{ 2 \\}}, A_{1, \\{ 3 \\}}, B_{1, \\{ 3 \\}}"),
    ):
        sig = spin.SpinSignature.of(1, m)
        types = spin.enumerate_boundary(sig)
        report.add(f"boundary types {sig.g},{sig.n},{m}", anchor, expected, [t.label for t in types])
        for t in types:
            if t.kind in ELLIPTIC_PHRASE:
                want = ELLIPTIC_PHRASE[t.kind]
                report.add(
                    f"elliptic side of {t.label}",
                    "\\mathcal{O}_E",
                    want,
                    want if want in t.describe()[0] else t.describe()[0],
                )


def _arf(report: VerificationReport) -> None:
    report.add("theta counts g=1", "2^{g-1}(2^g+1)", (3, 1), arf.count_by_arf(1))
    report.add("theta counts g=2", "2^{g-1}(2^g+1)", (10, 6), arf.count_by_arf(2))
    for g in (3, 4):
        report.add(f"theta counts g={g}", "2^{g-1}(2^g \\pm 1)",
                   arf.theta_counts_closed_form(g), arf.count_by_arf(g))
    for g in (1, 2, 3):
        report.add(f"transvection orbits g={g}", "derived: Arf classifies orbits",
                   2, arf.transvection_orbits(g).num_orbits)


def _euler(report: VerificationReport) -> None:
    from .euler.bundled import CHI_M12, CHI_M13

    d = derived_constants()
    for name, expected, anchor in (
        ("M05_prime", Fraction(1), "\\chi(M'_{0,5})"),
        ("S11_plus", Fraction(0), "\\chi(S_{1,1}^{(0),+})"),
        ("S12_00_plus", Fraction(0), "\\chi(S_{1,2}^{(0,0),+})"),
        ("S12_00_minus", Fraction(1), "\\chi(S_{1,2}^{(0,0),-})"),
    ):
        report.add(f"derived {name}", anchor, expected, d[name])
    # stratified covers, strata chosen to match the ledgers
    x_minus_pt = d["M04_prime"] - 1
    s12 = stratified_cover_chi([(4, CHI_M12 - x_minus_pt - 2), (2, x_minus_pt), (1, 1), (2, 1)])
    report.add("chi S_{1,2}^{(1,1)} by stratified cover",
               "\\chi(S_{1,2}^{(1,1)}) = 1", Fraction(1), s12)
    y = d["Y_minus_pt"] + 1
    s13 = stratified_cover_chi([(4, CHI_M13 - y - 1), (2, y), (2, 1)])
    report.add("chi S_{1,3}^{(1,1,0)} by stratified cover",
               "\\chi(S_{1,3}^{(1,1,0)}) = - 2", Fraction(-2), s13)
    results = evaluate_ledgers(bundled_ledgers())
    for ledger in bundled_ledgers():
        value, _ = results[ledger.name]
        report.add(f"ledger {ledger.name}", ledger.citation, ledger.expected, value)
    # Riemann-Hurwitz gate
    rh_ok = all(max_cover_genus(deg, 0, 0) <= 0 for deg in range(1, 51))
    report.add("unramified covers of M04bar are rational (d <= 50)",
               "2g-2 = d(-2)", True, rh_ok)
    rh_ok = all(max_cover_genus(deg, 0, 2) <= 0 for deg in range(1, 51))
    report.add("covers of M11bar branched over <= 2 points are rational (d <= 50)",
               "2g-2 \\le d(-2)+2(d-1)", True, rh_ok)


def _induction(report: VerificationReport) -> None:
    report.add("harer bound c(0,n)", "n - 3", [n - 3 for n in range(3, 8)],
               [induction.harer_bound(0, n) for n in range(3, 8)])
    report.add("harer bound c(g,0)", "4g - 5", [4 * g - 5 for g in range(2, 5)],
               [induction.harer_bound(g, 0) for g in range(2, 5)])
    report.add("harer bound c(g,n), n > 0", "4g - 4 + n",
               [4 * g - 4 + n for g in range(1, 4) for n in range(1, 4)],
               [induction.harer_bound(g, n) for g in range(1, 4) for n in range(1, 4)])
    p3 = induction.plan(3, 3, 7)
    report.add("base cases k=3", "H^3_c", sorted(p3.stated), sorted(p3.base_cases))
    p1 = induction.plan(1, 3, 7)
    report.add("base cases k=1", "H^1_c",
               sorted(p1.stated + [(0, 4)]), sorted(p1.base_cases))
    report.add("flag on (0,4) at k=1", "H^1_c",
               [[0, 4]], [[r.g, r.n] for r in p1.flags])
    for name, rec, expected in (
        ("betti S12bar", {"d": 2, "chi": 6, "fixed": {"0": 1, "1": 0}, "lower": {"2": 4}},
         (1, 0, 4, 0, 1)),
        ("betti S13bar", {"d": 3, "chi": 18, "fixed": {"0": 1, "1": 0}, "upper": {"2": 8}},
         (1, 0, 8, 0, 8, 0, 1)),
        ("betti S13bar without connectedness", {"d": 3, "chi": 18, "fixed": {"1": 0},
                                                "lower": {"0": 1}, "upper": {"2": 8}},
         "ambiguous"),
    ):
        got = induction.resolve_betti(induction.BettiConstraintSystem.from_record(rec))
        report.add(name, "h^2 \\le 8", expected, got)


INDEPENDENCE_ANCHOR = (
    "a_0 \\alpha_\\mathrm{irr} + b_0 \\beta_\\mathrm{irr} + a_1 \\alpha_{1, \\emptyset} "
    "+ b_1 \\beta_{1, \\emptyset} = 0"
)
KERNEL_ANCHOR = "\\xi^*: H^2(\\overline{S}_{1,3}^{(1,1,0)}) \\to H^2(B_\\mathrm{irr})"


def _relations(report: VerificationReport) -> None:
    c = relations.replay_independence_s1211()
    report.add("independence S_{1,2}^{(1,1)} rank", INDEPENDENCE_ANCHOR, 4, c.dimension)
    report.add("independence S_{1,2}^{(1,1)} certificate", INDEPENDENCE_ANCHOR, True, c.passed)
    c = relations.replay_kernel_s13110()
    report.add("kernel S_{1,3}^{(1,1,0)} dimension", KERNEL_ANCHOR, 4, c.dimension)
    report.add("kernel S_{1,3}^{(1,1,0)} basis",
               "\\alpha_\\mathrm{irr}, \\beta_\\mathrm{irr}, \\beta_{1, \\emptyset}, \\beta_{1, \\{ 3 \\}}",
               ["alpha_irr", "beta_irr", "beta_{1,{}}", "beta_{1,{3}}"], c.basis_labels)
    report.add("kernel S_{1,3}^{(1,1,0)} certificate", KERNEL_ANCHOR, True, c.passed)


_RUNNERS = {
    "boundary": _boundary,
    "arf": _arf,
    "euler": _euler,
    "induction": _induction,
    "relations": _relations,
}


def run_verify(suite: str) -> VerificationReport:
    if suite != "all" and suite not in _RUNNERS:
        raise UnknownSuiteError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    report = VerificationReport(suite)
    start = time.perf_counter()
    for name in SUITES if suite == "all" else (suite,):
        _RUNNERS[name](report)
    report.elapsed = time.perf_counter() - start
    return report
