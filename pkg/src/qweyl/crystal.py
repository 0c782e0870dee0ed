"""Divided-power basis, Kashiwara operators and crystal graphs.

Crystal combinatorics is available for the three ladder families whose
raising/lowering aliases run over colors 0..r: kinds I, III and A1AFF.
The divided monomial X^(a) is X^a divided by prod_i [a_i]^{xi_i}!; the
Kashiwara operators act through xi-deformed divided powers of the lowering
aliases and send divided monomials to divided monomials with coefficient
exactly 1 (or to zero), which is what the axiom checker asserts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb
from typing import Dict, Optional, Tuple

from .iqg import f_, oscillator_action
from .opcalc import Monomial, QPolynomial, apply_word, monomials_of_degree
from .qscalar import ScalarQ, q_factorial
from .satake import SatakeDiagram, parse_spec

CRYSTAL_KINDS = ("I", "III", "A1AFF")

_UNSUPPORTED_MSG = ("crystal bases are only constructed for the ladder "
                    "families I, III and A1AFF; kind %s is not supported")


def _require_crystal_kind(diagram: SatakeDiagram):
    if diagram.kind not in CRYSTAL_KINDS:
        raise ValueError(_UNSUPPORTED_MSG % diagram.kind)


def divided_factor(diagram: SatakeDiagram, mon: Monomial) -> ScalarQ:
    """The normalizer prod_i [a_i]^{xi_i}! between X^a and X^(a)."""
    out = ScalarQ.one()
    for e, xi in zip(mon, diagram.xi):
        if e:
            out = out * ScalarQ(q_factorial(e, xi))
    return out


def to_divided(diagram: SatakeDiagram, p: QPolynomial) -> Dict[Monomial, ScalarQ]:
    """Coordinates of p in the divided basis (exact change of basis)."""
    return {mon: c * divided_factor(diagram, mon) for mon, c in p.terms.items()}


def from_divided(diagram: SatakeDiagram, coords: Dict[Monomial, ScalarQ]) -> QPolynomial:
    out = QPolynomial.zero(diagram.nslots)
    for mon, c in coords.items():
        out = out + QPolynomial.monomial(mon, c / divided_factor(diagram, mon))
    return out


def _kashiwara_coords(diagram: SatakeDiagram, i: int, a: Monomial,
                      n: int) -> Dict[Monomial, ScalarQ]:
    """Apply f_i^{(n)_{xi_{i+1}}} to X^(a + a_{i+1}(e_i - e_{i+1})).

    A negative divided power is zero by convention, which makes the raising
    operator vanish at the weight boundary.
    """
    if n < 0:
        return {}
    b = tuple(e + (a[i + 1] if j == i else 0) - (a[i + 1] if j == i + 1 else 0)
              for j, e in enumerate(a))
    start = QPolynomial.monomial(b, divided_factor(diagram, b).invert())
    img = apply_word((f_(i),) * n, start, oscillator_action(diagram))
    if n:
        img = img.scale(ScalarQ(q_factorial(n, diagram.xi[i + 1])).invert())
    return to_divided(diagram, img)


def _single_basis_vector(coords: Dict[Monomial, ScalarQ]) -> Optional[Monomial]:
    if not coords:
        return None
    if len(coords) != 1:
        raise ArithmeticError("Kashiwara image is not a basis vector: %r"
                              % coords)
    mon, c = next(iter(coords.items()))
    if not c.is_one:
        raise ArithmeticError("Kashiwara image has coefficient %s != 1" % c)
    return mon


def kashiwara_f(diagram: SatakeDiagram, i: int, a: Monomial) -> Optional[Monomial]:
    """Lowering operator on divided monomials; None encodes zero."""
    _require_crystal_kind(diagram)
    _check_color(diagram, i, a)
    return _single_basis_vector(_kashiwara_coords(diagram, i, a, a[i + 1] + 1))


def kashiwara_e(diagram: SatakeDiagram, i: int, a: Monomial) -> Optional[Monomial]:
    """Raising operator on divided monomials; None encodes zero."""
    _require_crystal_kind(diagram)
    _check_color(diagram, i, a)
    return _single_basis_vector(_kashiwara_coords(diagram, i, a, a[i + 1] - 1))


def _check_color(diagram, i, a):
    if not 0 <= i <= diagram.r:
        raise ValueError("color %d out of range 0..%d" % (i, diagram.r))
    if len(a) != diagram.nslots:
        raise ValueError("exponent vector length %d != %d"
                         % (len(a), diagram.nslots))


def combinatorial_rule(i: int, a: Monomial, direction: str) -> Optional[Monomial]:
    """Closed-form arrow rule; agrees with the operator definition everywhere.

    Lowering moves one unit from slot i to slot i+1 (zero when a_i = 0);
    raising moves it back (zero when a_{i+1} = 0).
    """
    if direction == "f":
        if a[i] == 0:
            return None
        return tuple(e - (j == i) + (j == i + 1) for j, e in enumerate(a))
    if direction == "e":
        if a[i + 1] == 0:
            return None
        return tuple(e + (j == i) - (j == i + 1) for j, e in enumerate(a))
    raise ValueError("direction must be 'e' or 'f', got %r" % direction)


@dataclass(frozen=True)
class CrystalGraph:
    diagram_spec: str
    s: int
    nodes: Tuple[Monomial, ...]
    edges: Tuple[Tuple[Monomial, int, Monomial], ...]


def crystal_graph(diagram: SatakeDiagram, s: int) -> CrystalGraph:
    """Nodes are all exponent vectors of degree s; edges follow kashiwara_f."""
    _require_crystal_kind(diagram)
    if s < 0:
        raise ValueError("degree s must be >= 0")
    nodes = tuple(sorted(monomials_of_degree(diagram.nslots, s), reverse=True))
    edges = []
    for a in nodes:
        for i in range(diagram.r + 1):
            b = kashiwara_f(diagram, i, a)
            if b is not None:
                edges.append((a, i, b))
    return CrystalGraph(diagram.spec_string, s, nodes, tuple(edges))


def crystal_axioms_check(diagram: SatakeDiagram, s: int) -> dict:
    """Exhaustive axiom audit over all divided monomials of degree s.

    Checks: operators land on a basis vector or zero with coefficient exactly
    1; the lowering/raising biconditional; weight steps of exactly
    e_{i+1} - e_i; agreement with the combinatorial rule; and the basis rank
    binomial(s+r+1, r+1).
    """
    _require_crystal_kind(diagram)
    nodes = monomials_of_degree(diagram.nslots, s)
    report = {"diagram": diagram.spec_string, "s": s,
              "closure_ok": True, "b5_ok": True, "weight_ok": True,
              "rule_agreement_ok": True, "rank_ok": True, "failures": []}

    def fail(kind, detail):
        report[kind] = False
        report["failures"].append((kind, detail))

    fmap = {}
    emap = {}
    for a in nodes:
        for i in range(diagram.r + 1):
            for direction, n in (("f", a[i + 1] + 1), ("e", a[i + 1] - 1)):
                coords = _kashiwara_coords(diagram, i, a, n)
                target = None
                if coords:
                    if len(coords) != 1:
                        fail("closure_ok", (direction, i, a, "not a basis vector"))
                        continue
                    target, c = next(iter(coords.items()))
                    if not c.is_one:
                        fail("closure_ok", (direction, i, a, str(c)))
                if direction == "f":
                    fmap[(i, a)] = target
                else:
                    emap[(i, a)] = target
                if target is not None and direction == "f":
                    step = tuple(t - u for t, u in zip(target, a))
                    want = tuple((j == i + 1) - (j == i)
                                 for j in range(diagram.nslots))
                    if step != want:
                        fail("weight_ok", (i, a, target))
                if combinatorial_rule(i, a, direction) != target:
                    fail("rule_agreement_ok", (direction, i, a, target))
    for (i, a), b in fmap.items():
        if b is not None and emap.get((i, b)) != a:
            fail("b5_ok", ("f then e", i, a, b))
    for (i, b), a in emap.items():
        if a is not None and fmap.get((i, a)) != b:
            fail("b5_ok", ("e then f", i, b, a))
    if len(nodes) != comb(s + diagram.r + 1, diagram.r + 1):
        fail("rank_ok", (len(nodes),))
    report["all_ok"] = not report["failures"]
    return report


def apply_kashiwara_to_coords(diagram: SatakeDiagram, i: int,
                              coords: Dict[Monomial, ScalarQ],
                              direction: str) -> Dict[Monomial, ScalarQ]:
    """Linear extension of a Kashiwara operator to divided-basis coordinates."""
    out: Dict[Monomial, ScalarQ] = {}
    op = kashiwara_f if direction == "f" else kashiwara_e
    for mon, c in coords.items():
        tgt = op(diagram, i, mon)
        if tgt is None:
            continue
        w = out.get(tgt)
        w = c if w is None else w + c
        if w.is_zero:
            out.pop(tgt, None)
        else:
            out[tgt] = w
    return out


_PALETTE = ("red", "blue", "forestgreen", "orange", "purple", "teal",
            "magenta", "olive")


def _edge_color(i: int) -> str:
    return _PALETTE[i % len(_PALETTE)]


def _node_name(mon: Monomial) -> str:
    if all(e <= 9 for e in mon):
        return "".join(str(e) for e in mon)
    return ",".join(str(e) for e in mon)


def export(graph: CrystalGraph, fmt: str) -> str:
    """Deterministic rendering to dot, json or tikz."""
    if fmt == "dot":
        return _export_dot(graph)
    if fmt == "json":
        return _export_json(graph)
    if fmt == "tikz":
        return _export_tikz(graph)
    raise ValueError("unknown export format %r" % fmt)


def _export_dot(graph: CrystalGraph) -> str:
    lines = ["digraph crystal {"]
    for mon in graph.nodes:
        lines.append('  "%s";' % _node_name(mon))
    for src, i, tgt in graph.edges:
        lines.append('  "%s" -> "%s" [color=%s, label="f~%d"];'
                     % (_node_name(src), _node_name(tgt), _edge_color(i), i))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _export_json(graph: CrystalGraph) -> str:
    obj = {
        "diagram": graph.diagram_spec,
        "s": graph.s,
        "nodes": [list(mon) for mon in graph.nodes],
        "edges": [{"i": i, "from": list(src), "to": list(tgt)}
                  for src, i, tgt in graph.edges],
    }
    return json.dumps(obj) + "\n"


def parse_json(text: str) -> CrystalGraph:
    obj = json.loads(text)
    nodes = tuple(tuple(mon) for mon in obj["nodes"])
    edges = tuple((tuple(e["from"]), e["i"], tuple(e["to"]))
                  for e in obj["edges"])
    return CrystalGraph(obj["diagram"], obj["s"], nodes, edges)


def _tikz_position(graph: CrystalGraph, mon: Monomial):
    nslots = len(mon)
    x = sum(mon[1:nslots - 1])
    y = sum((nslots - 1 - j) * e for j, e in enumerate(mon))
    return x, y


def _export_tikz(graph: CrystalGraph) -> str:
    lines = ["\\begin{tikzpicture}[xscale=1.5,yscale=1.35]"]
    for mon in graph.nodes:
        x, y = _tikz_position(graph, mon)
        lines.append("  \\node at (%d,%d) (n%s) {$(%s)$};"
                     % (x, y, _node_name(mon), _node_name(mon)))
    for src, i, tgt in graph.edges:
        lines.append("  \\draw[thick,->,%s] (n%s) -- (n%s);"
                     % (_edge_color(i), _node_name(src), _node_name(tgt)))
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def crystal_graph_from_spec(spec: str, s: int) -> CrystalGraph:
    return crystal_graph(parse_spec(spec), s)
