"""Exact Euler-characteristic calculus and the bundled ledgers."""
from .chi import (
    Rational,
    as_rational,
    burnside_chi,
    chi_m0n,
    chi_m0n_mod_swap,
    cover_forced_rational,
    format_rational,
    max_cover_genus,
    rh_genus,
    stratified_cover_chi,
    transposition_fixed_chi,
)
from .ledger import (
    BUNDLED,
    ChiLedger,
    Constant,
    Partition,
    Term,
    bundled_ledger,
    bundled_ledgers,
    evaluate_ledgers,
    ledger_eval,
    ledger_prerequisites,
    resolve,
)

__all__ = [
    "BUNDLED",
    "ChiLedger",
    "Constant",
    "Partition",
    "Rational",
    "Term",
    "as_rational",
    "bundled_ledger",
    "bundled_ledgers",
    "burnside_chi",
    "chi_m0n",
    "chi_m0n_mod_swap",
    "cover_forced_rational",
    "evaluate_ledgers",
    "format_rational",
    "ledger_eval",
    "ledger_prerequisites",
    "max_cover_genus",
    "resolve",
    "rh_genus",
    "stratified_cover_chi",
    "transposition_fixed_chi",
]
