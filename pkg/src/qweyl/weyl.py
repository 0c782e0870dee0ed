"""The q-Weyl algebra acting on Q(q)[X_0..X_{r+1}] and its quantum-group image.

Generators D_i (q-difference), X_i (multiplication), M_i^{+-1} (q-scaling).
The map chi sends the Chevalley generators E_i, F_i, K_i of U_q(sl_{r+2})
to X_i D_{i+1}, X_{i+1} D_i and M_i M_{i+1}^{-1}.
"""

from __future__ import annotations

from .opcalc import ActionTable, GeneratorSymbol, OperatorExpr, QPolynomial
from .qscalar import Q_MINUS_QINV, ScalarQ, q_integer


def D(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("D", i)


def X(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("X", i)


def M(i: int, inv: bool = False) -> GeneratorSymbol:
    return GeneratorSymbol("M", i, inv)


def E(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("E", i)


def F(i: int) -> GeneratorSymbol:
    return GeneratorSymbol("F", i)


def K(i: int, inv: bool = False) -> GeneratorSymbol:
    return GeneratorSymbol("K", i, inv)


def weyl_table(nvars: int) -> ActionTable:
    """Monomial actions: D_i X^a = [a_i] X^{a-e_i}, X_i appends, M_i scales."""
    entries = {}
    for i in range(nvars):
        entries[D(i)] = _d_action(i, nvars)
        entries[X(i)] = _x_action(i, nvars)
        entries[M(i)] = _m_action(i, +1)
        entries[M(i, True)] = _m_action(i, -1)
    return ActionTable(nvars, entries)


def _d_action(i, nvars):
    def act(mon):
        if mon[i] == 0:
            return []
        tgt = tuple(e - 1 if j == i else e for j, e in enumerate(mon))
        return [(tgt, ScalarQ(q_integer(mon[i])))]
    return act


def _x_action(i, nvars):
    def act(mon):
        tgt = tuple(e + 1 if j == i else e for j, e in enumerate(mon))
        return [(tgt, ScalarQ.one())]
    return act


def _m_action(i, sign):
    def act(mon):
        return [(mon, ScalarQ.q_power(sign * mon[i]))]
    return act


def d_substitution(i: int, p: QPolynomial) -> QPolynomial:
    """q-differentiation as the literal difference quotient.

    (p with X_i -> qX_i) minus (p with X_i -> q^-1 X_i), divided by
    (q - q^-1) X_i.  Coincides with the monomial rule [a_i] X^{a-e_i}.
    """
    diff = p.scale_var(i, +1) - p.scale_var(i, -1)
    denom = ScalarQ(Q_MINUS_QINV)
    out = QPolynomial.zero(p.nvars)
    for mon, c in diff.terms.items():
        if mon[i] == 0:
            raise ArithmeticError("difference quotient not divisible by X_%d" % i)
        tgt = tuple(e - 1 if j == i else e for j, e in enumerate(mon))
        out = out + QPolynomial.monomial(tgt, c / denom)
    return out


def leibniz_check(i: int, f: QPolynomial, g: QPolynomial) -> bool:
    """D_i(fg) = D_i(f) g(..q^-1 X_i..) + f(..q X_i..) D_i(g), exactly."""
    lhs = d_substitution(i, f * g)
    rhs = d_substitution(i, f) * g.scale_var(i, -1) \
        + f.scale_var(i, +1) * d_substitution(i, g)
    return lhs == rhs


def weyl_relation_instances(r: int):
    """All defining relation instances of the q-Weyl algebra on r+2 slots.

    Returns tuples (group_id, indices, lhs, rhs) of operator expressions.
    """
    n = r + 2
    one = OperatorExpr.identity()
    word = OperatorExpr.word
    out = []
    for i in range(n):
        out.append(("weyl.MMinv", [i], word([M(i), M(i, True)]), one))
        out.append(("weyl.MinvM", [i], word([M(i, True), M(i)]), one))
    for i in range(n):
        for j in range(i + 1, n):
            out.append(("weyl.MM_comm", [i, j],
                        word([M(i), M(j)]), word([M(j), M(i)])))
            out.append(("weyl.DD_comm", [i, j],
                        word([D(i), D(j)]), word([D(j), D(i)])))
            out.append(("weyl.XX_comm", [i, j],
                        word([X(i), X(j)]), word([X(j), X(i)])))
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            out.append(("weyl.DM_comm", [i, j],
                        word([D(i), M(j)]), word([M(j), D(i)])))
            out.append(("weyl.XM_comm", [i, j],
                        word([X(i), M(j)]), word([M(j), X(i)])))
            out.append(("weyl.DX_comm", [i, j],
                        word([D(i), X(j)]), word([X(j), D(i)])))
    qq = ScalarQ(Q_MINUS_QINV)
    for i in range(n):
        out.append(("weyl.DM_same", [i], word([D(i), M(i)]),
                    word([M(i), D(i)], ScalarQ.q_power(1))))
        out.append(("weyl.XM_same", [i], word([X(i), M(i)]),
                    word([M(i), X(i)], ScalarQ.q_power(-1))))
        out.append(("weyl.DX_same", [i], word([D(i), X(i)]),
                    (word([M(i)], ScalarQ.q_power(1))
                     - word([M(i, True)], ScalarQ.q_power(-1))).scale(qq.invert())))
        out.append(("weyl.XD_same", [i], word([X(i), D(i)]),
                    (word([M(i)]) - word([M(i, True)])).scale(qq.invert())))
    return out


def chi_r(sym: GeneratorSymbol, r: int) -> OperatorExpr:
    """Image of a U_q(sl_{r+2}) Chevalley generator inside the q-Weyl algebra."""
    if not 0 <= sym.idx <= r:
        raise ValueError("generator index %d out of range 0..%d" % (sym.idx, r))
    i = sym.idx
    if sym.fam == "E":
        return OperatorExpr.word([X(i), D(i + 1)])
    if sym.fam == "F":
        return OperatorExpr.word([X(i + 1), D(i)])
    if sym.fam == "K" and not sym.inv:
        return OperatorExpr.word([M(i), M(i + 1, True)])
    if sym.fam == "K" and sym.inv:
        return OperatorExpr.word([M(i, True), M(i + 1)])
    raise ValueError("not a quantum-group generator: %s" % sym.label)


def chi_map(r: int):
    """The full symbol-to-expression map for chi."""
    mapping = {}
    for i in range(r + 1):
        mapping[E(i)] = chi_r(E(i), r)
        mapping[F(i)] = chi_r(F(i), r)
        mapping[K(i)] = chi_r(K(i), r)
        mapping[K(i, True)] = chi_r(K(i, True), r)
    return mapping


def cartan_entry(i: int, j: int) -> int:
    return 2 * (i == j) - (i == j + 1) - (i + 1 == j)


def uqsl_relation_instances(r: int):
    """All defining relation instances of U_q(sl_{r+2}), as E/F/K expressions."""
    word = OperatorExpr.word
    one = OperatorExpr.identity()
    qq = ScalarQ(Q_MINUS_QINV)
    out = []
    for i in range(r + 1):
        out.append(("uqsl.KKinv", [i], word([K(i), K(i, True)]), one))
        out.append(("uqsl.KinvK", [i], word([K(i, True), K(i)]), one))
    for i in range(r + 1):
        for j in range(i + 1, r + 1):
            out.append(("uqsl.KK_comm", [i, j],
                        word([K(i), K(j)]), word([K(j), K(i)])))
    for i in range(r + 1):
        for j in range(r + 1):
            c = cartan_entry(i, j)
            out.append(("uqsl.KEK", [i, j],
                        word([K(i), E(j), K(i, True)]),
                        word([E(j)], ScalarQ.q_power(c))))
            out.append(("uqsl.KFK", [i, j],
                        word([K(i), F(j), K(i, True)]),
                        word([F(j)], ScalarQ.q_power(-c))))
    for i in range(r + 1):
        for j in range(r + 1):
            lhs = word([E(i), F(j)]) - word([F(j), E(i)])
            if i == j:
                rhs = (word([K(i)]) - word([K(i, True)])).scale(qq.invert())
            else:
                rhs = OperatorExpr.zero()
            out.append(("uqsl.EF", [i, j], lhs, rhs))
    two = ScalarQ(q_integer(2))
    for i in range(r + 1):
        for j in range(r + 1):
            if abs(i - j) > 1:
                out.append(("uqsl.EE_far", [i, j],
                            word([E(i), E(j)]), word([E(j), E(i)])))
                out.append(("uqsl.FF_far", [i, j],
                            word([F(i), F(j)]), word([F(j), F(i)])))
            elif abs(i - j) == 1:
                out.append(("uqsl.serre_E", [i, j],
                            word([E(i), E(i), E(j)])
                            - word([E(i), E(j), E(i)], two)
                            + word([E(j), E(i), E(i)]),
                            OperatorExpr.zero()))
                out.append(("uqsl.serre_F", [i, j],
                            word([F(i), F(i), F(j)])
                            - word([F(i), F(j), F(i)], two)
                            + word([F(j), F(i), F(i)]),
                            OperatorExpr.zero()))
    return out
