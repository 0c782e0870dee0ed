"""Coideal presentations, the homomorphism into the modified algebra, and
the raising/lowering witness words."""

import pytest

from qweyl.iqg import (B_, H_, alias_symbols, apply_witness, e_, f_,
                       irreducibility_witness, k_, oscillator_action,
                       oscillator_matches_phi, phi, presentation,
                       relation_instances, spanning_witness, t_,
                       verify_homomorphism)
from qweyl.modweyl import d_, m_, x_
from qweyl.opcalc import (OperatorExpr, QPolynomial, monomials_of_degree,
                          monomials_up_to, operator_equal_on_degrees,
                          report_failures)
from qweyl.qscalar import LaurentPoly, Q_MINUS_QINV, ScalarQ, q_factorial, q_integer
from qweyl.satake import build_diagram

W = OperatorExpr.word

ALL_SMALL = [("I", 0), ("I", 1), ("II", 0), ("II", 1), ("III", 1),
             ("A1AFF", None), ("IV", 0), ("IV", 1), ("V", 0), ("V", 1),
             ("VI", 1)]


# --- presentation structure ---------------------------------------------------

def test_presentation_shapes():
    p = presentation(build_diagram("I", 2))
    assert p.nodes == tuple(range(1, 7))
    assert p.triples == ((0, 1, 6), (1, 2, 5), (2, 3, 4))
    assert p.tnodes == ()
    p = presentation(build_diagram("II", 1))
    assert p.nodes == tuple(range(5))
    assert p.triples == ((0, 0, 4), (1, 1, 3))
    assert p.tnodes == ((2, 2),)
    p = presentation(build_diagram("III", 1))
    assert p.nodes == tuple(range(4))
    assert p.triples == ((0, 0, 3), (1, 1, 2))
    assert p.pairing(0, 3) == -1 and p.pairing(1, 2) == -1
    p = presentation(build_diagram("V", 1))
    assert p.triples == ((1, 1, 4), (2, 2, 3))
    assert p.tnodes == ((0, 0),)
    p = presentation(build_diagram("VI", 1))
    assert p.triples == ((1, 1, 3),)
    assert p.tnodes == ((0, 0), (2, 2))
    p = presentation(build_diagram("A1AFF"))
    assert p.pairing(0, 1) == -2


def test_fold_pair_lands_on_last_triple_for_kind_I():
    # the adjacent involution pair (r+1, r+2) carries the alias triple r
    for r in (0, 1, 2):
        p = presentation(build_diagram("I", r))
        assert p.triples[-1] == (r, r + 1, r + 2)
        assert p.pairing(r + 1, r + 2) == -1


def test_long_relation_emitted_for_both_orderings():
    inst = [t for t in relation_instances(build_diagram("I", 1))
            if t[0] == "iqg.R5"]
    assert sorted(i for _, (i,), _, _ in inst) == [1, 2, 3, 4]


def test_relation_instance_counts_frozen():
    # group-by-group enumeration over the presentation node sets
    def census(kind, r):
        out = {}
        for g, _, _, _ in relation_instances(build_diagram(kind, r)):
            out[g] = out.get(g, 0) + 1
        return out

    assert census("I", 1) == {"iqg.R1_inv": 4, "iqg.R1_comm": 6, "iqg.R2": 16,
                              "iqg.R3": 2, "iqg.R4": 8, "iqg.R5": 4}
    assert census("VI", 1) == {"iqg.R1_inv": 4, "iqg.R1_comm": 6, "iqg.R2": 16,
                               "iqg.R3": 1, "iqg.R4": 4, "iqg.R5": 2,
                               "iqg.R6": 6}
    assert census("A1AFF", None) == {"iqg.R1_inv": 2, "iqg.R1_comm": 1,
                                     "iqg.R2": 4, "iqg.R5": 2}


def test_relations_numerically_at_rational_q():
    # independent cross-check: evaluate residual coefficients at q = 2 and
    # q = -3/5 instead of trusting symbolic equality alone
    from fractions import Fraction
    from qweyl.modweyl import modweyl_table
    from qweyl.opcalc import apply, expr_map

    d = build_diagram("A1AFF")
    table = modweyl_table(d)
    push = phi(d)
    for _, _, lhs, rhs in relation_instances(d):
        left = expr_map(lhs, push)
        right = expr_map(rhs, push)
        for mon in monomials_up_to(2, 3):
            p = QPolynomial.monomial(mon)
            lp = apply(left, p, table)
            rp = apply(right, p, table)
            for value in (Fraction(2), Fraction(-3, 5)):
                lvals = {m: c.eval_at(value) for m, c in lp.terms.items()}
                rvals = {m: c.eval_at(value) for m, c in rp.terms.items()}
                assert lvals == rvals


# --- specialized display identities, checked directly on the module -----------

def _check_identity(diagram, lhs, rhs, max_s=3):
    table = oscillator_action(diagram)
    assert operator_equal_on_degrees(lhs, rhs, table, max_s) == []


def test_kind_I_fold_relation_display():
    # e_r^2 f_r + f_r e_r^2 = (q+q^-1)(e_r f_r e_r - e_r(q k_r + q^-1 k_r^-1))
    d = build_diagram("I", 1)
    e, f, k, kv = e_(1), f_(1), k_(1), k_(1, True)
    lhs = W((e, e, f)) + W((f, e, e))
    inner = W((e, f, e)) - W((e, k), ScalarQ.q_power(1)) \
        - W((e, kv), ScalarQ.q_power(-1))
    rhs = inner.scale(ScalarQ(q_integer(2)))
    _check_identity(d, lhs, rhs)
    # and the lowering-side version, with the k-factors on the left
    lhs2 = W((f, f, e)) + W((e, f, f))
    inner2 = W((f, e, f)) - W((k, f), ScalarQ.q_power(1)) \
        - W((kv, f), ScalarQ.q_power(-1))
    _check_identity(d, lhs2, inner2.scale(ScalarQ(q_integer(2))))


def test_a1aff_cubic_relation_display():
    # e^3 f - [3] e^2 f e + [3] e f e^2 - f e^3
    #   = [3]!(q - q^-1) e (k - k^-1) e
    d = build_diagram("A1AFF")
    e, f, k, kv = e_(0), f_(0), k_(0), k_(0, True)
    three = ScalarQ(q_integer(3))
    lhs = W((e, e, e, f)) - W((e, e, f, e)).scale(three) \
        + W((e, f, e, e)).scale(three) - W((f, e, e, e))
    coeff = ScalarQ(q_factorial(3, 1) * Q_MINUS_QINV)
    rhs = (W((e, k, e)) - W((e, kv, e))).scale(coeff)
    _check_identity(d, lhs, rhs, max_s=4)


def test_kind_II_fixed_node_relation_display():
    # t^2 e + e t^2 = [2] t e t + e
    d = build_diagram("II", 0)
    t, e = t_(1), e_(0)
    lhs = W((t, t, e)) + W((e, t, t))
    rhs = W((t, e, t), ScalarQ(q_integer(2))) + W((e,))
    _check_identity(d, lhs, rhs)


# --- phi ----------------------------------------------------------------------

def test_phi_images():
    table = phi(build_diagram("I", 1))
    assert table[e_(1)] == W((x_(1), d_(2)))
    assert table[f_(0)] == W((x_(1), d_(0)))
    assert table[k_(1)] == W((m_(1), m_(2, True)))
    a1 = phi(build_diagram("A1AFF"))
    assert a1[k_(0)] == W((m_(0), m_(1, True)), ScalarQ.q_power(-1))
    assert a1[k_(0, True)] == W((m_(0, True), m_(1)), ScalarQ.q_power(1))
    v = phi(build_diagram("V", 1))
    assert v[f_(1)] == W((x_(1), d_(0)))
    assert v[e_(1)] == W((x_(0), d_(1)))
    assert v[t_(0)] == W((x_(0), d_(0)))
    vi = phi(build_diagram("VI", 1))
    assert vi[t_(0)] == W((x_(1), d_(1)))
    assert vi[t_(2)] == W((x_(2), d_(2)))


def test_phi_covers_all_presentation_generators():
    for kind, r in ALL_SMALL:
        d = build_diagram(kind, r)
        pres = presentation(d)
        table = phi(d)
        for n in pres.nodes:
            assert B_(n) in table and H_(n) in table


def test_phi_resolves_fixed_H_to_identity():
    table = phi(build_diagram("II", 1))
    assert table[H_(2)] == OperatorExpr.identity()


# --- homomorphism verification -------------------------------------------------

@pytest.mark.parametrize("kind,r", ALL_SMALL)
def test_verify_homomorphism_empty(kind, r):
    report = verify_homomorphism(build_diagram(kind, r), 3)
    assert report and not report_failures(report)


def test_mutation_breaks_verification():
    flipped = build_diagram("A1AFF").with_varsigma(1, ScalarQ(LaurentPoly({-3: -1})))
    assert report_failures(verify_homomorphism(flipped, 2))
    bent = build_diagram("I", 1).with_xi(2, 1)
    assert report_failures(verify_homomorphism(bent, 2))


ALL_R2 = [("I", 0), ("I", 1), ("I", 2), ("II", 0), ("II", 1), ("II", 2),
          ("III", 1), ("III", 2), ("A1AFF", None), ("IV", 0), ("IV", 1),
          ("IV", 2), ("V", 0), ("V", 1), ("V", 2), ("VI", 1), ("VI", 2)]


@pytest.mark.parametrize("kind,r", ALL_R2)
def test_oscillator_action_matches_phi(kind, r):
    assert oscillator_matches_phi(build_diagram(kind, r), 5) == []


def test_H_times_H_tau_acts_as_identity():
    for kind, r in (("I", 1), ("II", 1), ("V", 0)):
        d = build_diagram(kind, r)
        pres = presentation(d)
        table = phi(d)
        from qweyl.modweyl import modweyl_table
        mt = modweyl_table(d)
        for n in pres.nodes:
            expr = table[H_(n)] * table[H_(pres.tau[n])]
            assert operator_equal_on_degrees(
                expr, OperatorExpr.identity(), mt, 5) == []


def test_alias_images_preserve_degree():
    for kind, r in ALL_SMALL:
        d = build_diagram(kind, r)
        table = oscillator_action(d)
        for mon in monomials_up_to(d.nslots, 3):
            for sym in table.symbols():
                for tgt, _ in table.act(sym, mon):
                    assert sum(tgt) == sum(mon)


# --- oscillator action spot values --------------------------------------------

def test_oscillator_spot_values():
    d = build_diagram("I", 1)
    table = oscillator_action(d)
    assert table.act(e_(1), (0, 0, 1)) == [((0, 1, 0), ScalarQ(q_integer(2)))]
    d2 = build_diagram("II", 0)
    table2 = oscillator_action(d2)
    assert table2.act(f_(0), (0, 1)) == []
    assert table2.act(t_(1), (0, 1)) == [((0, 1), ScalarQ(-1))]
    a1 = build_diagram("A1AFF")
    t = oscillator_action(a1)
    assert t.act(k_(0), (0, 0)) == [((0, 0), ScalarQ.q_power(-1))]
    assert t.act(e_(0), (0, 1)) == [((1, 0), ScalarQ(q_integer(3)))]


def test_alias_symbols_listing():
    labels = [s.label for s in alias_symbols(build_diagram("VI", 1))]
    assert labels == ["e1", "f1", "k1", "k1^-1", "t0", "t2"]


# --- witnesses ------------------------------------------------------------------

def test_irreducibility_witness_examples():
    d = build_diagram("I", 0)
    word, predicted = irreducibility_witness(d, (3, 0))
    assert word == () and predicted == ScalarQ.one()
    word, predicted = irreducibility_witness(d, (1, 2))
    assert word == (e_(0), e_(0))
    assert predicted == ScalarQ(q_factorial(2, 2))
    assert apply_witness(d, word, QPolynomial.monomial((1, 2))) \
        == QPolynomial.monomial((3, 0), predicted)


def test_spanning_witness_examples():
    d = build_diagram("I", 0)
    word, predicted = spanning_witness(d, (3, 0))
    assert word == () and predicted == ScalarQ.one()
    word, predicted = spanning_witness(d, (1, 2))
    assert word == (f_(0), f_(0))
    assert predicted == ScalarQ(q_integer(3) * q_integer(2))
    assert apply_witness(d, word, QPolynomial.monomial((3, 0))) \
        == QPolynomial.monomial((1, 2), predicted)


@pytest.mark.parametrize("kind,r", [("I", 1), ("II", 1), ("III", 1),
                                    ("A1AFF", None), ("IV", 1), ("V", 1)])
def test_witnesses_exhaustive_small(kind, r):
    d = build_diagram(kind, r)
    n = d.nslots
    for s in range(4):
        top = tuple([s] + [0] * (n - 1))
        for a in monomials_of_degree(n, s):
            word, predicted = irreducibility_witness(d, a)
            assert not predicted.is_zero
            assert apply_witness(d, word, QPolynomial.monomial(a)) \
                == QPolynomial.monomial(top, predicted)
            word, predicted = spanning_witness(d, a)
            assert not predicted.is_zero
            assert apply_witness(d, word, QPolynomial.monomial(top)) \
                == QPolynomial.monomial(a, predicted)


def test_witness_round_trip_composes():
    d = build_diagram("III", 1)
    a, b = (1, 1, 1), (0, 2, 1)
    up_word, up_coeff = irreducibility_witness(d, a)
    down_word, down_coeff = spanning_witness(d, b)
    out = apply_witness(d, down_word + up_word, QPolynomial.monomial(a))
    assert out == QPolynomial.monomial(b, up_coeff * down_coeff)
    assert not (up_coeff * down_coeff).is_zero


def test_witnesses_reject_kind_VI():
    d = build_diagram("VI", 1)
    with pytest.raises(ValueError):
        irreducibility_witness(d, (1, 1, 1))
    with pytest.raises(ValueError):
        spanning_witness(d, (1, 1, 1))


def test_witness_vector_validation():
    d = build_diagram("I", 0)
    with pytest.raises(ValueError):
        irreducibility_witness(d, (1, 2, 3))
    with pytest.raises(ValueError):
        spanning_witness(d, (-1, 2))
