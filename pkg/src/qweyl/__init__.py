"""Exact symbolic toolkit: q-Weyl algebras, their Satake-diagram deformations,
coideal-subalgebra relation verification, oscillator actions and crystal
graphs, all over Q(q) with exact rational arithmetic."""

from .qscalar import (InexactDivisionError, LaurentPoly, QDivisionByZero,
                      ScalarQ, is_regular_at_zero, q_binomial, q_factorial,
                      q_integer, q_pochhammer)
from .opcalc import (ActionTable, GeneratorSymbol, OperatorExpr, QPolynomial,
                     apply, apply_word, divided_power, monomials_of_degree,
                     monomials_up_to, operator_equal_on_degrees,
                     poly_from_text, poly_to_text, verify_relations)
from .satake import SatakeDiagram, build_diagram, cartan_pairing, parse_spec, varsigma
from . import crystal, iqg, modweyl, weyl

__version__ = "0.1.0"

__all__ = [
    "ActionTable", "GeneratorSymbol", "InexactDivisionError", "LaurentPoly",
    "OperatorExpr", "QDivisionByZero", "QPolynomial", "SatakeDiagram",
    "apply", "apply_word", "build_diagram", "cartan_pairing", "crystal",
    "divided_power", "iqg", "is_regular_at_zero", "modweyl",
    "monomials_of_degree", "monomials_up_to", "operator_equal_on_degrees",
    "parse_spec", "poly_from_text", "poly_to_text", "q_binomial",
    "q_factorial", "q_integer", "q_pochhammer", "varsigma",
    "verify_relations", "weyl",
]
