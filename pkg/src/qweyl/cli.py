"""Command-line surface: relation verification, operator action, crystal
graph export and witness words.

Exit codes: 0 on success, 1 when a verification suite reports residuals,
2 on usage errors.  All outputs are byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import crystal as crystal_mod
from . import iqg, modweyl, weyl
from .opcalc import (GeneratorSymbol, OperatorExpr, QPolynomial, apply,
                     poly_from_text, poly_to_text, report_failures,
                     verify_relations)
from .qscalar import LaurentPoly, ScalarQ
from .satake import SatakeDiagram, parse_spec

SUITES = ("weyl", "uqsl", "modweyl", "iqg", "all")

MUTATIONS = ("varsigma1", "xi-fold")


def _apply_mutation(diagram: SatakeDiagram, mutation: str) -> SatakeDiagram:
    if mutation == "varsigma1":
        flipped = ScalarQ(LaurentPoly({-3: -1}))
        return diagram.with_varsigma(diagram.nodes[1], flipped)
    if mutation == "xi-fold":
        slot = diagram.nslots - 1
        return diagram.with_xi(slot, 1 if diagram.xi[slot] != 1 else 2)
    raise ValueError("unknown mutation %r" % mutation)


def run_suite(diagram: SatakeDiagram, suite: str, max_degree: int):
    """Run one verification suite; returns a list of report entries."""
    report = []
    if suite in ("weyl", "all"):
        report += verify_relations(weyl.weyl_relation_instances(diagram.r),
                                   weyl.weyl_table(diagram.nslots), max_degree)
    if suite in ("uqsl", "all"):
        report += verify_relations(weyl.uqsl_relation_instances(diagram.r),
                                   weyl.weyl_table(diagram.nslots), max_degree,
                                   push=weyl.chi_map(diagram.r))
    if suite in ("modweyl", "all"):
        instances = modweyl.modweyl_relation_instances(diagram)
        report += verify_relations(instances, modweyl.modweyl_table(diagram),
                                   max_degree)
        iota_report = verify_relations(instances, modweyl.iota_table(diagram),
                                       max_degree)
        for entry in iota_report:
            entry["relation_id"] += "@iota"
        report += iota_report
        for sym, mon, _, _ in modweyl.iota_consistency(diagram, max_degree):
            report.append({"relation_id": "modweyl.iota_consistency",
                           "instance_indices": [sym, list(mon)], "ok": False})
        report.append({"relation_id": "modweyl.iota_consistency",
                       "instance_indices": [], "ok": True})
    if suite in ("iqg", "all"):
        report += iqg.verify_homomorphism(diagram, max_degree)
    return report


def _cmd_verify(args) -> int:
    diagram = parse_spec(args.diagram)
    if args.max_degree < 0:
        raise ValueError("--max-degree must be >= 0")
    if args.mutate:
        diagram = _apply_mutation(diagram, args.mutate)
    report = run_suite(diagram, args.suite, args.max_degree)
    for entry in report:
        idx = ",".join(str(i) for i in entry["instance_indices"])
        print("RELATION %s[%s] %s" % (entry["relation_id"], idx,
                                      "OK" if entry["ok"] else "FAIL"))
    failures = report_failures(report)
    print("SUITE %s %s: %d relations, %d failures"
          % (args.suite, diagram.spec_string, len(report), len(failures)))
    if args.json:
        payload = {"diagram": diagram.spec_string, "suite": args.suite,
                   "max_degree": args.max_degree,
                   "ok": not failures, "relations": report}
        with open(args.json, "w") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    return 1 if failures else 0


def parse_word(diagram: SatakeDiagram, text: str):
    """Parse space-separated operator tokens such as ``e1 f0 k1^-1 t2 d0``."""
    symbols = []
    for token in text.split():
        inv = False
        if token.endswith("^-1"):
            inv = True
            token = token[:-3]
        if len(token) < 2 or token[0] not in "efktdxm" or not token[1:].isdigit():
            raise ValueError("unknown token %r" % token)
        fam, idx = token[0], int(token[1:])
        if inv and fam not in ("k", "m"):
            raise ValueError("token %r cannot be inverted" % token)
        symbols.append(GeneratorSymbol(fam, idx, inv))
    return tuple(symbols)


def _act_table(diagram: SatakeDiagram):
    return iqg.oscillator_action(diagram).merged(modweyl.modweyl_table(diagram))


def _cmd_act(args) -> int:
    diagram = parse_spec(args.diagram)
    word = parse_word(diagram, args.word)
    table = _act_table(diagram)
    for sym in word:
        if sym not in table:
            raise ValueError("unknown token %r for diagram %s"
                             % (sym.label, diagram.spec_string))
    poly = poly_from_text(args.poly, diagram.nslots)
    result = apply(OperatorExpr.word(word), poly, table)
    print(poly_to_text(result))
    return 0


def _cmd_crystal(args) -> int:
    diagram = parse_spec(args.diagram)
    if args.s < 0:
        raise ValueError("--s must be >= 0")
    graph = crystal_mod.crystal_graph(diagram, args.s)
    sys.stdout.write(crystal_mod.export(graph, args.format))
    return 0


def _cmd_witness(args) -> int:
    diagram = parse_spec(args.diagram)
    mon = tuple(int(part) for part in args.monomial.split(","))
    if args.direction == "up":
        word, predicted = iqg.irreducibility_witness(diagram, mon)
        start = QPolynomial.monomial(mon)
        target = tuple([sum(mon)] + [0] * (diagram.nslots - 1))
    else:
        word, predicted = iqg.spanning_witness(diagram, mon)
        start = QPolynomial.monomial(tuple([sum(mon)] + [0] * (diagram.nslots - 1)))
        target = mon
    print("word: %s" % (" ".join(sym.label for sym in word) or "(empty)"))
    print("coefficient: %s" % predicted)
    result = iqg.apply_witness(diagram, word, start)
    if result == QPolynomial.monomial(target, predicted):
        print("VERIFIED")
        return 0
    print("MISMATCH: got %s" % poly_to_text(result))
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qweyl",
        description="Exact q-Weyl algebra, coideal relation verification and "
                    "crystal graph toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run relation verification suites")
    p.add_argument("--diagram", required=True, help="e.g. I:r=1 or A1AFF")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--json", help="write a machine-readable report here")
    p.add_argument("--mutate", choices=MUTATIONS,
                   help="deliberately corrupt one parameter (sensitivity check)")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("act", help="apply an operator word to a polynomial")
    p.add_argument("--diagram", required=True)
    p.add_argument("--word", required=True,
                   help="space-separated tokens, e.g. 'e1' or 'x0 d1'")
    p.add_argument("--poly", required=True, help="e.g. 'X2' or '(q)*X0^2*X1'")
    p.set_defaults(func=_cmd_act)

    p = sub.add_parser("crystal", help="emit a crystal graph")
    p.add_argument("--diagram", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json", "tikz"), default="dot")
    p.set_defaults(func=_cmd_crystal)

    p = sub.add_parser("witness", help="raising/lowering witness words")
    p.add_argument("--diagram", required=True)
    p.add_argument("--monomial", required=True, help="comma-separated, e.g. 1,2")
    p.add_argument("--direction", choices=("up", "down"), default="up")
    p.set_defaults(func=_cmd_witness)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
