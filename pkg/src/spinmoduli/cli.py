"""Command-line front end: ``spinmoduli <command> ...``.

Exit status is 0 when every check passes, 1 when a check fails and 2 on a
usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from . import arf, graphs, induction, spin
from .euler import ChiLedger, bundled_ledger, evaluate_ledgers, format_rational, ledger_prerequisites
from .euler.ledger import BUNDLED
from .verify import SUITES, UnknownSuiteError, VerificationReport, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _jsonable(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _signature(args) -> spin.SpinSignature:
    if len(args.m) != args.n:
        raise UsageError(f"expected {args.n} twists, got {len(args.m)}")
    return spin.SpinSignature(args.g, args.n, tuple(args.m))


# commands: each returns (inputs, results, report) -----------------------------------


def cmd_strata(args):
    strata = graphs.enumerate_strata(args.g, args.n)
    results = {
        "count": len(strata),
        "by_edges": graphs.strata_count_by_edges(args.g, args.n),
        "graphs": [
            {"edges": G.num_edges, "automorphisms": graphs.automorphism_count(G),
             "graph": json.loads(G.to_text())}
            for G in strata
        ],
    }
    return {"g": args.g, "n": args.n}, results, VerificationReport("strata")


def cmd_boundary(args):
    sig = _signature(args)
    types = spin.enumerate_boundary(sig)
    report = VerificationReport("boundary")
    for t in types:
        try:
            t.check()
            ok = True
        except AssertionError:
            ok = False
        report.add(f"invariants of {t.label}", "derived: type invariants", True, ok)
    results = {
        "count": len(types),
        "types": [dict(label=t.label, description=t.describe(), **t.record()) for t in types],
    }
    return {"g": sig.g, "n": sig.n, "m": list(sig.m)}, results, report


def cmd_arf(args):
    even, odd = arf.count_by_arf(args.g)
    report = VerificationReport("arf")
    report.add(f"theta counts g={args.g}", "2^{g-1}(2^g \\pm 1)",
               arf.theta_counts_closed_form(args.g), (even, odd))
    results = {"even": even, "odd": odd}
    if args.g <= 3:
        orbits = arf.transvection_orbits(args.g)
        results["orbit_sizes"] = list(orbits.sizes)
        results["orbit_arf"] = list(orbits.arf_values)
        report.add(f"transvection orbits g={args.g}", "derived: Arf classifies orbits",
                   2, orbits.num_orbits)
    return {"g": args.g}, results, report


def cmd_euler(args):
    if args.ledger in BUNDLED:
        chain = ledger_prerequisites(args.ledger)
    else:
        try:
            target = ChiLedger.load(args.ledger)
        except FileNotFoundError:
            raise UsageError(
                f"{args.ledger!r} is neither a file nor a bundled ledger ({', '.join(BUNDLED)})"
            ) from None
        chain = []
        for dep in target.requires:
            if dep in BUNDLED:
                chain.extend(ledger_prerequisites(dep))
        chain = list({lg.name: lg for lg in chain}.values()) + [target]
    values = evaluate_ledgers(chain)
    report = VerificationReport("euler")
    for lg in chain:
        report.add(f"ledger {lg.name}", lg.citation, lg.expected, values[lg.name][0])
    results = {name: format_rational(v) for name, (v, _) in values.items()}
    return {"ledger": args.ledger}, results, report


def cmd_plan(args):
    p = induction.plan(args.k, args.g_max, args.n_max, prune_trivial=args.prune_trivial)
    report = VerificationReport("plan")
    results = {
        "base_cases": [list(c) for c in p.base_cases],
        "stated": None if p.stated is None else [list(c) for c in p.stated],
        "flags": [json.loads(r.to_text()) for r in p.flags],
    }
    return {"k": args.k, "g_max": args.g_max, "n_max": args.n_max}, results, report


def cmd_betti(args):
    try:
        with open(args.file, encoding="utf-8") as fh:
            rec = json.load(fh)
    except FileNotFoundError:
        raise UsageError(f"no such file {args.file!r}") from None
    system = induction.BettiConstraintSystem.from_record(rec)
    got = induction.resolve_betti(system)
    report = VerificationReport("betti")
    if "expect" in rec:
        expect = rec["expect"]
        report.add("betti vector", "b_k = b_{2d-k}",
                   expect if isinstance(expect, str) else list(expect),
                   got if isinstance(got, str) else list(got))
    return {"file": args.file, "system": system.record()}, {
        "betti": got if isinstance(got, str) else list(got)}, report


def cmd_pic_rank(args):
    sig = _signature(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        count = spin.pic_generator_count(sig)
    gens = spin.pic_generators(sig)
    results = {
        "generators": count,
        "labels": list(gens.labels),
        "caveat": [str(w.message) for w in caught],
    }
    return {"g": sig.g, "n": sig.n, "m": list(sig.m)}, results, VerificationReport("pic-rank")


def cmd_verify(args):
    report = run_verify(args.suite)
    return {"suite": args.suite}, {"elapsed": round(report.elapsed, 3)}, report


# output -----------------------------------------------------------------------------


def _table(rows, headers) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(headers)]
    line = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    return "\n".join([line(headers), line(["-" * w for w in widths])] + [line(r) for r in rows])


def _plain(command, results, report) -> str:
    out = []
    if command == "strata":
        out.append(f"{results['count']} strata")
        out.append(_table(sorted(results["by_edges"].items()), ["edges", "strata"]))
    elif command == "boundary":
        out.append(_table(
            [(t["label"], t["node"], " | ".join(t["description"])) for t in results["types"]],
            ["type", "node", "sides"],
        ))
    elif command == "pic-rank":
        out.append(f"{results['generators']} generators: " + ", ".join(results["labels"]))
        out.extend(f"caveat: {c}" for c in results["caveat"])
    elif command == "plan":
        out.append("base cases: " + ", ".join(f"({g},{n})" for g, n in results["base_cases"]))
        if results["stated"] is not None:
            out.append("stated:     " + ", ".join(f"({g},{n})" for g, n in results["stated"]))
        for f in results["flags"]:
            out.append(f"flag ({f['g']},{f['n']}): {f['inequality']}; {f['stated_range']}")
    elif command == "verify":
        pass
    else:
        out.append(_table(
            [(k, json.dumps(_jsonable(v))) for k, v in results.items()], ["result", "value"]
        ))
    if report.checks:
        out.append(_table(
            [("PASS" if c["pass"] else "FAIL", c["name"], json.dumps(c["expected"]), json.dumps(c["got"]))
             for c in report.checks],
            ["status", "check", "expected", "got"],
        ))
    out.append("pass" if report.passed else "FAIL")
    return "\n".join(out)


COMMANDS = {
    "strata": cmd_strata,
    "boundary": cmd_boundary,
    "arf": cmd_arf,
    "euler": cmd_euler,
    "plan": cmd_plan,
    "betti": cmd_betti,
    "pic-rank": cmd_pic_rank,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spinmoduli", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON document")
    parser.add_argument("--quiet", action="store_true", help="print nothing; exit status only")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("strata", help="stable graphs of M_{g,n}-bar")
    p.add_argument("g", type=int)
    p.add_argument("n", type=int)

    for name, text in (("boundary", "boundary divisor types of a spin moduli space"),
                       ("pic-rank", "count of Picard generators")):
        p = sub.add_parser(name, help=text)
        p.add_argument("g", type=int)
        p.add_argument("n", type=int)
        p.add_argument("m", type=int, nargs="*", help="twists m_1 .. m_n in {0, 1}")

    p = sub.add_parser("arf", help="theta characteristics by parity")
    p.add_argument("g", type=int)

    p = sub.add_parser("euler", help="evaluate an Euler-characteristic ledger")
    p.add_argument("ledger", help=f"ledger file or one of: {', '.join(BUNDLED)}")

    p = sub.add_parser("plan", help="base cases of the vanishing induction")
    p.add_argument("k", type=int)
    p.add_argument("g_max", type=int)
    p.add_argument("n_max", type=int)
    p.add_argument("--prune-trivial", action="store_true",
                   help="drop pairs with k > 2d")

    p = sub.add_parser("betti", help="resolve a Betti constraint file")
    p.add_argument("file")

    p = sub.add_parser("verify", help="run a bundled replication suite")
    p.add_argument("suite", help=f"one of: {', '.join(SUITES + ('all',))}")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        inputs, results, report = COMMANDS[args.command](args)
    except (UsageError, UnknownSuiteError, ValueError, KeyError, TypeError, OSError) as exc:
        if not args.quiet:
            print(f"spinmoduli {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.quiet:
        if args.json:
            doc = {
                "command": args.command,
                "inputs": _jsonable(inputs),
                "results": _jsonable(results),
                "checks": report.checks,
                "pass": report.passed,
            }
            print(json.dumps(doc, indent=2, ensure_ascii=False))
        else:
            print(_plain(args.command, results, report))
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
