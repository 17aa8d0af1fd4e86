"""Replayable Euler-characteristic ledgers.

A ledger holds named rational constants, declared partitions of named spaces
into named strata, and a sum of products of names.  Evaluation:

1. every constant must carry a provenance (``cited``, ``derived`` or
   ``input``);
2. partitions with exactly one unknown member are solved by additivity,
   repeatedly, and every partition is then checked exactly;
3. the terms ``sum(coeff * prod(factors))`` are evaluated and compared with
   the expected total.

Names may also refer to the results of ledgers evaluated earlier (by ledger
name).  Topological and compactly supported Euler characteristics are
identified throughout, which is valid for complex algebraic strata.

On disk a ledger is an indented JSON document with rationals written as
``"p/q"``; :meth:`ChiLedger.to_text` and :meth:`ChiLedger.from_text`
round-trip byte for byte.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from ..errors import LedgerError
from .chi import as_rational, format_rational

PROVENANCES = ("cited", "derived", "input")
ASSUMPTION = (
    "topological and compactly supported Euler characteristics agree on complex "
    "algebraic strata; characteristics add over the declared partitions"
)


@dataclass(frozen=True)
class Constant:
    name: str
    value: Fraction
    provenance: str
    quote: str = ""
    oracle: str = ""

    def record(self) -> dict:
        rec = {
            "name": self.name,
            "value": format_rational(self.value),
            "provenance": self.provenance,
            "quote": self.quote,
        }
        if self.oracle:
            rec["oracle"] = self.oracle
        return rec


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    factors: tuple[str, ...] = ()


@dataclass(frozen=True)
class Partition:
    whole: str
    parts: tuple[str, ...]


@dataclass
class ChiLedger:
    name: str
    constants: list[Constant]
    terms: list[Term]
    expected: Fraction
    citation: str = ""
    partitions: list[Partition] = field(default_factory=list)
    requires: tuple[str, ...] = ()
    assumption: str = ASSUMPTION

    def constant(self, name: str) -> Constant:
        for c in self.constants:
            if c.name == name:
                return c
        raise KeyError(name)

    def record(self) -> dict:
        return {
            "name": self.name,
            "citation": self.citation,
            "assumption": self.assumption,
            "requires": list(self.requires),
            "constants": [c.record() for c in self.constants],
            "partitions": [{"whole": p.whole, "parts": list(p.parts)} for p in self.partitions],
            "terms": [
                {"coeff": format_rational(t.coeff), "factors": list(t.factors)} for t in self.terms
            ],
            "expected": format_rational(self.expected),
        }

    def to_text(self) -> str:
        return json.dumps(self.record(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_record(cls, rec: dict) -> "ChiLedger":
        try:
            constants = [
                Constant(
                    c["name"],
                    as_rational(c["value"]),
                    c.get("provenance", ""),
                    c.get("quote", ""),
                    c.get("oracle", ""),
                )
                for c in rec.get("constants", [])
            ]
            return cls(
                name=rec["name"],
                constants=constants,
                terms=[
                    Term(as_rational(t["coeff"]), tuple(t.get("factors", ())))
                    for t in rec.get("terms", [])
                ],
                expected=as_rational(rec["expected"]),
                citation=rec.get("citation", ""),
                partitions=[
                    Partition(p["whole"], tuple(p["parts"])) for p in rec.get("partitions", [])
                ],
                requires=tuple(rec.get("requires", ())),
                assumption=rec.get("assumption", ASSUMPTION),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise LedgerError(f"malformed ledger record: {exc}") from exc

    @classmethod
    def from_text(cls, text: str) -> "ChiLedger":
        return cls.from_record(json.loads(text))

    @classmethod
    def load(cls, path) -> "ChiLedger":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))


def resolve(ledger: ChiLedger, results=None) -> dict[str, Fraction]:
    """All values known to the ledger: constants, prior results, solved strata."""
    env: dict[str, Fraction] = {}
    for c in ledger.constants:
        if c.provenance not in PROVENANCES:
            raise LedgerError(f"constant {c.name!r} has no valid provenance ({c.provenance!r})")
        if c.name in env:
            raise LedgerError(f"constant {c.name!r} defined twice")
        env[c.name] = c.value
    for name in ledger.requires:
        if results is None or name not in results:
            raise LedgerError(f"ledger {ledger.name!r} requires unevaluated ledger {name!r}")
    for name, value in (results or {}).items():
        env.setdefault(name, as_rational(value))

    pending = list(ledger.partitions)
    while pending:
        progress = False
        for p in list(pending):
            members = (p.whole,) + p.parts
            unknown = [m for m in members if m not in env]
            if len(unknown) > 1:
                continue
            pending.remove(p)
            progress = True
            if unknown:
                known_parts = sum((env[m] for m in p.parts if m in env), Fraction(0))
                if unknown[0] == p.whole:
                    env[p.whole] = known_parts
                else:
                    env[unknown[0]] = env[p.whole] - known_parts
        if not progress:
            names = sorted({m for p in pending for m in (p.whole,) + p.parts if m not in env})
            raise LedgerError(f"cannot resolve strata {names} in ledger {ledger.name!r}")

    for p in ledger.partitions:
        if env[p.whole] != sum((env[m] for m in p.parts), Fraction(0)):
            raise LedgerError(f"partition of {p.whole!r} is not additive")
    return env


def ledger_eval(ledger: ChiLedger, results=None) -> tuple[Fraction, bool]:
    env = resolve(ledger, results)
    total = Fraction(0)
    for t in ledger.terms:
        product = as_rational(t.coeff)
        for f in t.factors:
            if f not in env:
                raise LedgerError(f"unresolved name {f!r} in ledger {ledger.name!r}")
            product *= env[f]
        total += product
    return total, total == ledger.expected


def evaluate_ledgers(ledgers) -> dict[str, tuple[Fraction, bool]]:
    """Evaluate ledgers in order, feeding each result to the later ones."""
    values: dict[str, Fraction] = {}
    out = {}
    for ledger in ledgers:
        value, ok = ledger_eval(ledger, values)
        values[ledger.name] = value
        out[ledger.name] = (value, ok)
    return out


# bundled ledgers --------------------------------------------------------------

BUNDLED = ("chi_S12_open", "chi_S13_open", "chi_S12bar", "chi_S13bar")


def _data_dir():
    return resources.files("spinmoduli.euler") / "data" / "ledgers"


def bundled_ledger(name: str) -> ChiLedger:
    if name not in BUNDLED:
        raise LedgerError(f"unknown bundled ledger {name!r}; choose from {', '.join(BUNDLED)}")
    return ChiLedger.from_text((_data_dir() / f"{name}.json").read_text(encoding="utf-8"))


def bundled_ledgers() -> list[ChiLedger]:
    return [bundled_ledger(name) for name in BUNDLED]


def ledger_prerequisites(name: str) -> list[ChiLedger]:
    """The bundled ledgers ``name`` depends on (transitively), in evaluation order."""
    order: list[str] = []

    def visit(n):
        for dep in bundled_ledger(n).requires:
            visit(dep)
        if n not in order:
            order.append(n)

    visit(name)
    return [bundled_ledger(n) for n in order]
