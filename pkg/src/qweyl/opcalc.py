"""The polynomial ring Q(q)[X_0..X_{r+1}] and a free operator calculus.

Operators are formal ScalarQ-linear combinations of words in generator
symbols.  A word acts on a polynomial rightmost symbol first, through a
pluggable action table mapping each symbol to a linear endomorphism given on
monomials.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, List, NamedTuple, Tuple

from .qscalar import ScalarQ, laurent_from_text, q_factorial, scalar_from_text

Monomial = Tuple[int, ...]


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent vectors of the given total degree, lex descending."""
    if nvars == 1:
        return [(degree,)]
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def monomials_up_to(nvars: int, max_degree: int) -> List[Monomial]:
    out = []
    for s in range(max_degree + 1):
        out.extend(monomials_of_degree(nvars, s))
    return out


def unit_vector(nvars: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(nvars))


def add_vectors(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class QPolynomial:
    """Sparse polynomial: map from exponent vector to nonzero ScalarQ."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        t = {}
        if terms:
            for mon, c in terms.items():
                if len(mon) != nvars:
                    raise ValueError("exponent vector length %d != %d"
                                     % (len(mon), nvars))
                if any(e < 0 for e in mon):
                    raise ValueError("negative exponent in %r" % (mon,))
                c = c if isinstance(c, ScalarQ) else ScalarQ(c)
                if not c.is_zero:
                    t[tuple(mon)] = c
        self.terms = t

    @classmethod
    def zero(cls, nvars: int) -> "QPolynomial":
        return cls(nvars)

    @classmethod
    def monomial(cls, mon: Monomial, coeff=1) -> "QPolynomial":
        return cls(len(mon), {tuple(mon): coeff})

    @classmethod
    def variable(cls, i: int, nvars: int) -> "QPolynomial":
        return cls.monomial(unit_vector(nvars, i))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if self.nvars != other.nvars:
            raise ValueError("mixing polynomial rings")
        t = dict(self.terms)
        for mon, c in other.terms.items():
            w = t.get(mon)
            w = c if w is None else w + c
            if w.is_zero:
                t.pop(mon, None)
            else:
                t[mon] = w
        out = QPolynomial.__new__(QPolynomial)
        out.nvars, out.terms = self.nvars, t
        return out

    def __neg__(self):
        out = QPolynomial.__new__(QPolynomial)
        out.nvars = self.nvars
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "QPolynomial":
        c = c if isinstance(c, ScalarQ) else ScalarQ(c)
        if c.is_zero:
            return QPolynomial.zero(self.nvars)
        out = QPolynomial.__new__(QPolynomial)
        out.nvars = self.nvars
        out.terms = {m: co * c for m, co in self.terms.items()}
        return out

    def mul_monomial(self, mon: Monomial, coeff=1) -> "QPolynomial":
        """Multiply by coeff * X^mon (adds exponent vectors)."""
        out = QPolynomial(self.nvars)
        coeff = coeff if isinstance(coeff, ScalarQ) else ScalarQ(coeff)
        out.terms = {add_vectors(m, mon): c * coeff
                     for m, c in self.terms.items()}
        return out

    def __mul__(self, other: "QPolynomial") -> "QPolynomial":
        if self.nvars != other.nvars:
            raise ValueError("mixing polynomial rings")
        out = QPolynomial.zero(self.nvars)
        for mon, c in other.terms.items():
            out = out + self.mul_monomial(mon, c)
        return out

    def scale_var(self, i: int, power: int) -> "QPolynomial":
        """Substitute X_i -> q^power * X_i."""
        out = QPolynomial.__new__(QPolynomial)
        out.nvars = self.nvars
        out.terms = {m: c * ScalarQ.q_power(power * m[i])
                     for m, c in self.terms.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self):
        return poly_to_text(self)

    def __repr__(self):
        return "QPolynomial(%d, %s)" % (self.nvars, self)


class GeneratorSymbol(NamedTuple):
    """A named generator in a presentation: family tag, index, inverse flag."""

    fam: str
    idx: int
    inv: bool = False

    @property
    def label(self) -> str:
        return "%s%d%s" % (self.fam, self.idx, "^-1" if self.inv else "")


Word = Tuple[GeneratorSymbol, ...]


class OperatorExpr:
    """Formal ScalarQ-linear combination of words in generator symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for word, c in terms.items():
                c = c if isinstance(c, ScalarQ) else ScalarQ(c)
                if not c.is_zero:
                    t[tuple(word)] = c
        self.terms = t

    @classmethod
    def zero(cls) -> "OperatorExpr":
        return cls()

    @classmethod
    def identity(cls) -> "OperatorExpr":
        return cls({(): 1})

    @classmethod
    def word(cls, symbols: Iterable[GeneratorSymbol], coeff=1) -> "OperatorExpr":
        return cls({tuple(symbols): coeff})

    @classmethod
    def symbol(cls, g: GeneratorSymbol, coeff=1) -> "OperatorExpr":
        return cls({(g,): coeff})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        t = dict(self.terms)
        for w, c in other.terms.items():
            v = t.get(w)
            v = c if v is None else v + c
            if v.is_zero:
                t.pop(w, None)
            else:
                t[w] = v
        out = OperatorExpr.__new__(OperatorExpr)
        out.terms = t
        return out

    def __neg__(self):
        out = OperatorExpr.__new__(OperatorExpr)
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "OperatorExpr":
        c = c if isinstance(c, ScalarQ) else ScalarQ(c)
        if c.is_zero:
            return OperatorExpr.zero()
        out = OperatorExpr.__new__(OperatorExpr)
        out.terms = {w: co * c for w, co in self.terms.items()}
        return out

    def __mul__(self, other: "OperatorExpr") -> "OperatorExpr":
        """Word concatenation extended bilinearly."""
        out = OperatorExpr.zero()
        t = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                v = t.get(w)
                v = c if v is None else v + c
                if v.is_zero:
                    t.pop(w, None)
                else:
                    t[w] = v
        out.terms = t
        return out

    def power(self, n: int) -> "OperatorExpr":
        if n < 0:
            raise ValueError("negative operator power")
        out = OperatorExpr.identity()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), [s.label for s in w])):
            c = self.terms[w]
            body = " ".join(s.label for s in w) if w else "1"
            parts.append("(%s)*%s" % (c, body))
        return " + ".join(parts)

    __repr__ = __str__


def divided_power(g: GeneratorSymbol, n: int, k: int = 1) -> OperatorExpr:
    """g^n / [n]^k!; negative n gives the zero operator by convention."""
    if n < 0:
        return OperatorExpr.zero()
    if n == 0:
        return OperatorExpr.identity()
    return OperatorExpr.word((g,) * n, ScalarQ(1, q_factorial(n, k)))


def expr_map(expr: OperatorExpr, mapping: Dict[GeneratorSymbol, OperatorExpr]) -> OperatorExpr:
    """Push an expression through a symbol-to-expression homomorphism."""
    out = OperatorExpr.zero()
    for word, c in expr.terms.items():
        img = OperatorExpr.identity()
        for sym in word:
            if sym not in mapping:
                raise KeyError("no image for symbol %s" % sym.label)
            img = img * mapping[sym]
        out = out + img.scale(c)
    return out


TermList = List[Tuple[Monomial, ScalarQ]]
MonomialAction = Callable[[Monomial], TermList]


class ActionTable:
    """Maps generator symbols to linear endomorphisms given on monomials."""

    def __init__(self, nvars: int, entries: Dict[GeneratorSymbol, MonomialAction]):
        self.nvars = nvars
        self.entries = dict(entries)

    def __contains__(self, sym: GeneratorSymbol) -> bool:
        return sym in self.entries

    def symbols(self):
        return self.entries.keys()

    def act(self, sym: GeneratorSymbol, mon: Monomial) -> TermList:
        try:
            action = self.entries[sym]
        except KeyError:
            raise KeyError("unknown symbol %s in action table" % sym.label)
        return action(mon)

    def merged(self, other: "ActionTable") -> "ActionTable":
        if self.nvars != other.nvars:
            raise ValueError("mixing action tables over different rings")
        entries = dict(self.entries)
        entries.update(other.entries)
        return ActionTable(self.nvars, entries)


def apply(expr: OperatorExpr, p: QPolynomial, table: ActionTable) -> QPolynomial:
    """Apply an operator expression to a polynomial, rightmost symbol first."""
    acc: Dict[Monomial, ScalarQ] = {}
    for word, c in expr.terms.items():
        pending = list(p.terms.items())
        for sym in reversed(word):
            nxt: TermList = []
            for mon, coeff in pending:
                for mon2, coeff2 in table.act(sym, mon):
                    nxt.append((mon2, coeff * coeff2))
            pending = nxt
            if not pending:
                break
        for mon, coeff in pending:
            v = coeff * c
            w = acc.get(mon)
            w = v if w is None else w + v
            if w.is_zero:
                acc.pop(mon, None)
            else:
                acc[mon] = w
    out = QPolynomial.__new__(QPolynomial)
    out.nvars, out.terms = p.nvars, acc
    return out


def apply_word(word: Word, p: QPolynomial, table: ActionTable) -> QPolynomial:
    return apply(OperatorExpr.word(word), p, table)


def operator_equal_on_degrees(e1: OperatorExpr, e2: OperatorExpr,
                              table: ActionTable, max_s: int):
    """Residuals of (e1 - e2) on every monomial of total degree <= max_s.

    An empty report means the two expressions agree on that truncation.
    """
    diff = e1 - e2
    residuals = []
    for mon in monomials_up_to(table.nvars, max_s):
        r = apply(diff, QPolynomial.monomial(mon), table)
        if not r.is_zero:
            residuals.append((mon, r))
    return residuals


def verify_relations(instances, table: ActionTable, max_s: int,
                     push: Dict[GeneratorSymbol, OperatorExpr] = None):
    """Check a list of relation instances against an action table.

    ``instances`` holds tuples (group_id, indices, lhs, rhs).  When ``push``
    is given, both sides are first mapped through it (e.g. a homomorphism
    image).  Returns a list of per-instance report dicts.
    """
    report = []
    for group_id, indices, lhs, rhs in instances:
        if push is not None:
            lhs = expr_map(lhs, push)
            rhs = expr_map(rhs, push)
        residuals = operator_equal_on_degrees(lhs, rhs, table, max_s)
        entry = {"relation_id": group_id, "instance_indices": list(indices),
                 "ok": not residuals}
        if residuals:
            mon, poly = residuals[0]
            witness_mon = sorted(poly.terms)[0]
            entry["residual_monomial"] = list(mon)
            entry["residual_coefficient"] = str(poly.terms[witness_mon])
        report.append(entry)
    return report


def report_failures(report):
    return [entry for entry in report if not entry["ok"]]


def poly_to_text(p: QPolynomial) -> str:
    """Render as ``(<ScalarQ>)*X0^2*X3 + ...`` with monomials lex descending."""
    if p.is_zero:
        return "0"
    parts = []
    for mon in sorted(p.terms, reverse=True):
        factors = []
        for i, e in enumerate(mon):
            if e == 1:
                factors.append("X%d" % i)
            elif e > 1:
                factors.append("X%d^%d" % (i, e))
        body = "*".join(factors) if factors else "1"
        parts.append("(%s)*%s" % (p.terms[mon], body))
    return " + ".join(parts)


def poly_from_text(text: str, nvars: int) -> QPolynomial:
    """Parse the poly_to_text format (and bare monomials like ``X2``)."""
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    if text == "0":
        return QPolynomial.zero(nvars)
    out = QPolynomial.zero(nvars)
    for sign, chunk in _split_top_level(text):
        out = out + _parse_poly_term(chunk, nvars).scale(sign)
    return out


def _split_top_level(text: str):
    """Split on top-level + and - (parenthesis aware), yielding (sign, chunk)."""
    chunks = []
    depth = 0
    sign = 1
    start = 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            prev = text[start:i].strip()
            if prev and prev[-1] not in "*^(":
                chunks.append((sign, prev))
                sign = 1 if ch == "+" else -1
                start = i + 1
        elif ch in "+-" and depth == 0 and i == start and not text[start:i].strip():
            if ch == "-":
                sign = -sign
            start = i + 1
        i += 1
    last = text[start:].strip()
    if last:
        chunks.append((sign, last))
    return chunks


def _parse_poly_term(term: str, nvars: int) -> QPolynomial:
    term = term.strip()
    coeff = ScalarQ.one()
    exps = [0] * nvars
    pos = 0
    n = len(term)
    while pos < n:
        if term[pos] == "(":
            depth = 0
            j = pos
            while j < n:
                if term[j] == "(":
                    depth += 1
                elif term[j] == ")":
                    depth -= 1
                    if depth == 0:
                        break
                j += 1
            group = term[pos:j + 1]
            if j + 2 < n and term[j + 1] == "/" and term[j + 2] == "(":
                k = term.index(")", j + 2)
                while term[:k + 1].count("(") != term[:k + 1].count(")"):
                    k = term.index(")", k + 1)
                coeff = coeff * scalar_from_text(term[pos:k + 1])
                pos = k + 1
            else:
                coeff = coeff * scalar_from_text(group[1:-1])
                pos = j + 1
        elif term[pos] == "X":
            j = pos + 1
            while j < n and term[j].isdigit():
                j += 1
            idx = int(term[pos + 1:j])
            power = 1
            if j < n and term[j] == "^":
                k = j + 1
                if k < n and term[k] == "-":
                    k += 1
                while k < n and term[k].isdigit():
                    k += 1
                power = int(term[j + 1:k])
                j = k
            if idx >= nvars:
                raise ValueError("variable X%d out of range" % idx)
            exps[idx] += power
            pos = j
        elif term[pos] == "*" or term[pos].isspace():
            pos += 1
        else:
            j = pos
            while j < n and term[j] not in "*":
                j += 1
            coeff = coeff * ScalarQ(laurent_from_text(term[pos:j]))
            pos = j
    return QPolynomial(nvars, {tuple(exps): coeff})
