"""The modified q-Weyl algebra of a Satake diagram.

Generators d_i, x_i, m_i^{+-1} act on the polynomial ring with deformation
exponents xi: d_i X^a = [xi_i a_i] X^{a-e_i}, m_i X^a = q^{xi_i a_i} X^a.
The embedding iota realizes them inside the classical q-Weyl algebra, and the
constant-reduction witness extracts the constructive content of the
irreducibility argument: hitting the lex-leading term with the matching
d-word produces an explicit nonzero multiple of 1.
"""

from __future__ import annotations

from .opcalc import (ActionTable, GeneratorSymbol, OperatorExpr, QPolynomial,
                     apply, monomials_up_to)
from .qscalar import Q_MINUS_QINV, ScalarQ, q_factorial, q_integer
from .satake import SatakeDiagram
from . import weyl


def d_(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("d", i)


def x_(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("x", i)


def m_(i: int, inv: bool = False) -> GeneratorSymbol:
    return GeneratorSymbol("m", i, inv)


def modweyl_table(diagram: SatakeDiagram) -> ActionTable:
    nvars = diagram.nslots
    xi = diagram.xi
    entries = {}
    for i in range(nvars):
        entries[d_(i)] = _d_action(i, xi[i])
        entries[x_(i)] = _x_action(i)
        entries[m_(i)] = _m_action(i, xi[i])
        entries[m_(i, True)] = _m_action(i, -xi[i])
    return ActionTable(nvars, entries)


def _d_action(i, xi_i):
    def act(mon):
        if mon[i] == 0:
            return []
        tgt = tuple(e - 1 if j == i else e for j, e in enumerate(mon))
        return [(tgt, ScalarQ(q_integer(xi_i * mon[i])))]
    return act


def _x_action(i):
    def act(mon):
        tgt = tuple(e + 1 if j == i else e for j, e in enumerate(mon))
        return [(tgt, ScalarQ.one())]
    return act


def _m_action(i, exponent):
    def act(mon):
        return [(mon, ScalarQ.q_power(exponent * mon[i]))]
    return act


def modweyl_relation_instances(diagram: SatakeDiagram):
    """All defining relation instances, with xi taken from the diagram."""
    n = diagram.nslots
    xi = diagram.xi
    one = OperatorExpr.identity()
    word = OperatorExpr.word
    qq = ScalarQ(Q_MINUS_QINV)
    out = []
    for i in range(n):
        out.append(("modweyl.mminv", [i], word([m_(i), m_(i, True)]), one))
        out.append(("modweyl.minvm", [i], word([m_(i, True), m_(i)]), one))
    for i in range(n):
        for j in range(i + 1, n):
            out.append(("modweyl.mm_comm", [i, j],
                        word([m_(i), m_(j)]), word([m_(j), m_(i)])))
            out.append(("modweyl.dd_comm", [i, j],
                        word([d_(i), d_(j)]), word([d_(j), d_(i)])))
            out.append(("modweyl.xx_comm", [i, j],
                        word([x_(i), x_(j)]), word([x_(j), x_(i)])))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            out.append(("modweyl.dm_comm", [i, j],
                        word([d_(i), m_(j)]), word([m_(j), d_(i)])))
            out.append(("modweyl.xm_comm", [i, j],
                        word([x_(i), m_(j)]), word([m_(j), x_(i)])))
            out.append(("modweyl.dx_comm", [i, j],
                        word([d_(i), x_(j)]), word([x_(j), d_(i)])))
    for i in range(n):
        out.append(("modweyl.dm_same", [i], word([d_(i), m_(i)]),
                    word([m_(i), d_(i)], ScalarQ.q_power(xi[i]))))
        out.append(("modweyl.xm_same", [i], word([x_(i), m_(i)]),
                    word([m_(i), x_(i)], ScalarQ.q_power(-xi[i]))))
        out.append(("modweyl.dx_same", [i], word([d_(i), x_(i)]),
                    (word([m_(i)], ScalarQ.q_power(xi[i]))
                     - word([m_(i, True)], ScalarQ.q_power(-xi[i])))
                    .scale(qq.invert())))
        out.append(("modweyl.xd_same", [i], word([x_(i), d_(i)]),
                    (word([m_(i)]) - word([m_(i, True)])).scale(qq.invert())))
    return out


def _m_power(i: int, p: int):
    """The word for M_i^p in the classical algebra (empty word for p = 0)."""
    if p >= 0:
        return (weyl.M(i),) * p
    return (weyl.M(i, True),) * (-p)


def iota(diagram: SatakeDiagram, sym: GeneratorSymbol) -> OperatorExpr:
    """Image of a modified generator inside the classical q-Weyl algebra.

    x_i goes to X_i, m_i^{+-1} to M_i^{+-xi_i}, and d_i to
    (sign of xi_i) D_i * sum_k M_i^{|xi_i|-1-2k}.
    """
    i = sym.idx
    if not 0 <= i < diagram.nslots:
        raise ValueError("slot index %d out of range" % i)
    xi_i = diagram.xi[i]
    if sym.fam == "x":
        return OperatorExpr.word([weyl.X(i)])
    if sym.fam == "m":
        p = xi_i if not sym.inv else -xi_i
        return OperatorExpr.word(_m_power(i, p))
    if sym.fam == "d":
        a = abs(xi_i)
        sign = 1 if xi_i > 0 else -1
        out = OperatorExpr.zero()
        for k in range(a):
            out = out + OperatorExpr.word((weyl.D(i),) + _m_power(i, a - 1 - 2 * k))
        return out.scale(sign)
    raise ValueError("unsupported symbol %s" % sym.label)


def iota_map(diagram: SatakeDiagram):
    mapping = {}
    for i in range(diagram.nslots):
        for sym in (d_(i), x_(i), m_(i), m_(i, True)):
            mapping[sym] = iota(diagram, sym)
    return mapping


def iota_table(diagram: SatakeDiagram) -> ActionTable:
    """Action table realizing each modified generator through its iota image."""
    classical = weyl.weyl_table(diagram.nslots)
    mapping = iota_map(diagram)

    def entry(expr):
        def act(mon):
            poly = apply(expr, QPolynomial.monomial(mon), classical)
            return list(poly.terms.items())
        return act

    return ActionTable(diagram.nslots,
                       {sym: entry(expr) for sym, expr in mapping.items()})


def iota_consistency(diagram: SatakeDiagram, max_s: int):
    """Compare the iota-image action with the direct action on monomials.

    Returns a list of (symbol label, monomial, via-iota, direct) discrepancies;
    empty means the pull-back action coincides with the direct one.
    """
    direct = modweyl_table(diagram)
    through = iota_table(diagram)
    report = []
    for mon in monomials_up_to(diagram.nslots, max_s):
        p = QPolynomial.monomial(mon)
        for sym in direct.symbols():
            lhs = apply(OperatorExpr.symbol(sym), p, through)
            rhs = apply(OperatorExpr.symbol(sym), p, direct)
            if lhs != rhs:
                report.append((sym.label, mon, lhs, rhs))
    return report


def constant_reduction_witness(diagram: SatakeDiagram, p: QPolynomial):
    """The d-word flattening the lex-leading term of p to a constant.

    Picks the lexicographically maximal exponent vector k with nonzero
    coefficient c_k and returns (word, c_k * prod_i [k_i]^{xi_i}!).  Applying
    the word d_0^{k_0} ... d_{r+1}^{k_{r+1}} to p yields exactly that constant
    times X^0: every other term dies against some d-power.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no reduction witness")
    k = max(p.terms)
    word = []
    predicted = p.terms[k]
    for i, e in enumerate(k):
        word.extend([d_(i)] * e)
        if e:
            predicted = predicted * ScalarQ(q_factorial(e, diagram.xi[i]))
    return tuple(word), predicted
