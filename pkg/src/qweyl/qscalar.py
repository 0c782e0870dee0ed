"""Exact arithmetic in Z[q, q^-1] and Q(q), plus the q-combinatorial primitives.

``LaurentPoly`` is a sparse Laurent polynomial in one variable q with exact
rational coefficients.  ``ScalarQ`` is a quotient of two Laurent polynomials
kept in a canonical form (denominator an ordinary primitive integer polynomial
with positive leading coefficient, coprime to the numerator), so equality and
hashing are structural.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class InexactDivisionError(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class QDivisionByZero(ZeroDivisionError):
    """Division by the zero element of Q(q)."""


def _fr(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError("expected int or Fraction, got %r" % (v,))


class LaurentPoly:
    """Sparse Laurent polynomial in q over the rationals.

    Stored as a map exponent -> nonzero Fraction.  Instances are treated as
    immutable; all operations return new objects.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            if isinstance(coeffs, LaurentPoly):
                c = dict(coeffs._c)
            elif isinstance(coeffs, dict):
                for e, v in coeffs.items():
                    v = _fr(v)
                    if v != 0:
                        c[int(e)] = v
            else:
                v = _fr(coeffs)
                if v != 0:
                    c[0] = v
        self._c = c

    @classmethod
    def q_power(cls, exp: int, coeff=1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    def items(self):
        return self._c.items()

    @property
    def is_zero(self) -> bool:
        return not self._c

    def min_exp(self):
        return min(self._c) if self._c else None

    def max_exp(self):
        return max(self._c) if self._c else None

    def __bool__(self):
        return bool(self._c)

    def __add__(self, other):
        other = other if isinstance(other, LaurentPoly) else LaurentPoly(other)
        c = dict(self._c)
        for e, v in other._c.items():
            w = c.get(e, Fraction(0)) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other):
        other = other if isinstance(other, LaurentPoly) else LaurentPoly(other)
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            v = _fr(other)
            if v == 0:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out._c = {e: c * v for e, c in self._c.items()}
            return out
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                w = c.get(e, Fraction(0)) + v1 * v2
                if w:
                    c[e] = w
                else:
                    c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a LaurentPoly; use ScalarQ")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def substitute_q_inverse(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: v for e, v in self._c.items()}
        return out

    def eval_at(self, value: Fraction) -> Fraction:
        """Evaluate at a nonzero rational value of q (exact)."""
        value = _fr(value)
        if value == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at q=0")
        return sum((v * value ** e for e, v in self._c.items()), Fraction(0))

    def eval_at_one(self) -> Fraction:
        return sum(self._c.values(), Fraction(0))

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises InexactDivisionError on a remainder."""
        if other.is_zero:
            raise QDivisionByZero("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly.zero()
        sa, a = _to_ordinary(self)
        sb, b = _to_ordinary(other)
        quo, rem = _divmod_dense(a, b)
        if any(rem):
            raise InexactDivisionError("polynomial division is not exact")
        return _from_dense(quo).shift(sa - sb)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                body = str(mag)
            else:
                qpart = "q" if e == 1 else "q^%d" % e
                body = qpart if mag == 1 else "%s*%s" % (mag, qpart)
            if not parts:
                parts.append(body if v > 0 else "-" + body)
            else:
                parts.append(("+ " if v > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPoly(%r)" % (self._c,)


def _to_ordinary(p: LaurentPoly):
    """Return (shift, dense coefficient list) with constant term at index 0."""
    lo = p.min_exp()
    hi = p.max_exp()
    dense = [Fraction(0)] * (hi - lo + 1)
    for e, v in p.items():
        dense[e - lo] = v
    return lo, dense


def _from_dense(dense) -> LaurentPoly:
    return LaurentPoly({i: v for i, v in enumerate(dense) if v})


def _divmod_dense(a, b):
    """Dense polynomial division over the rationals."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) < len(b):
        return [], a
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i]:
            c = a[i] / lb
            quo[i - db] = c
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
    return quo, a


def _gcd_ordinary(a, b):
    """Monic gcd of two dense rational polynomials (either may be [])."""
    a = _trim(a)
    b = _trim(b)
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, _trim(r)
    if not a:
        return []
    lead = a[-1]
    return [v / lead for v in a]


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


Q_MINUS_QINV = LaurentPoly({1: 1, -1: -1})


class ScalarQ:
    """An element of Q(q) as a canonical ratio of Laurent polynomials.

    Canonical form: the denominator is an ordinary polynomial with coprime
    integer coefficients, nonzero constant term and positive leading
    coefficient; numerator and denominator share no polynomial factor.
    A ScalarQ with denominator 1 is exactly a Laurent polynomial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, LaurentPoly) else LaurentPoly(num)
        den = den if isinstance(den, LaurentPoly) else LaurentPoly(den)
        if den.is_zero:
            raise QDivisionByZero("zero denominator")
        self.num, self.den = _canonical(num, den)

    @classmethod
    def one(cls):
        return cls(1)

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def q_power(cls, e: int):
        return cls(LaurentPoly.q_power(e))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.den == LaurentPoly.one() and self.num == LaurentPoly.one()

    @property
    def is_polynomial(self) -> bool:
        return self.den == LaurentPoly.one()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_polynomial:
            raise ValueError("not a Laurent polynomial: %s" % self)
        return self.num

    def __add__(self, other):
        other = other if isinstance(other, ScalarQ) else ScalarQ(other)
        if self.den == other.den:
            return ScalarQ(self.num + other.num, self.den)
        return ScalarQ(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = ScalarQ.__new__(ScalarQ)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = other if isinstance(other, ScalarQ) else ScalarQ(other)
        return self + (-other)

    def __rsub__(self, other):
        return ScalarQ(other) - self

    def __mul__(self, other):
        if not isinstance(other, ScalarQ):
            other = ScalarQ(other)
        return ScalarQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = other if isinstance(other, ScalarQ) else ScalarQ(other)
        if other.is_zero:
            raise QDivisionByZero("division by zero in Q(q)")
        return ScalarQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return ScalarQ(other) / self

    def invert(self) -> "ScalarQ":
        if self.is_zero:
            raise QDivisionByZero("inverting zero in Q(q)")
        return ScalarQ(self.den, self.num)

    def __pow__(self, n: int):
        if n < 0:
            return self.invert() ** (-n)
        result = ScalarQ.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_at(self, value: Fraction) -> Fraction:
        d = self.den.eval_at(value)
        if d == 0:
            raise QDivisionByZero("denominator vanishes at q=%s" % value)
        return self.num.eval_at(value) / d

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            other = ScalarQ(other)
        if not isinstance(other, ScalarQ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_polynomial:
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def __repr__(self):
        return "ScalarQ(%s)" % self


def _canonical(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero:
        return LaurentPoly.zero(), LaurentPoly.one()
    # Move the whole q-power shift onto the numerator.
    dshift = den.min_exp()
    den = den.shift(-dshift)
    num = num.shift(-dshift)
    if den != LaurentPoly.one():
        nshift, ndense = _to_ordinary(num)
        _, ddense = _to_ordinary(den)
        g = _gcd_ordinary(list(ndense), list(ddense))
        if len(g) > 1:
            ndense, _ = _divmod_dense(ndense, g)
            ddense, _ = _divmod_dense(ddense, g)
            num = _from_dense(ndense).shift(nshift)
            den = _from_dense(ddense)
    # Scale so the denominator has coprime integer coefficients and a
    # positive leading coefficient.
    _, ddense = _to_ordinary(den)
    nums = [v.numerator for v in ddense if v]
    dens = [v.denominator for v in ddense if v]
    g = 0
    for n in nums:
        g = _int_gcd(g, abs(n))
    l = 1
    for d in dens:
        l = l * d // _int_gcd(l, d)
    scale = Fraction(l, g)
    if ddense[-1] < 0:
        scale = -scale
    if scale != 1:
        num = num * scale
        den = den * scale
    return num, den


def q_integer(a: int) -> LaurentPoly:
    """The balanced q-integer (q^a - q^-a)/(q - q^-1); satisfies [-a] = -[a]."""
    if a == 0:
        return LaurentPoly.zero()
    sign = 1 if a > 0 else -1
    n = abs(a)
    return LaurentPoly({e: sign for e in range(n - 1, -n, -2)})


def q_factorial(a: int, k: int) -> LaurentPoly:
    """The k-deformed q-factorial [ka][k(a-1)]...[2k][k]; empty product is 1."""
    if a < 0:
        raise ValueError("q_factorial needs a >= 0, got %d" % a)
    if k == 0:
        raise ValueError("q_factorial needs k != 0")
    out = LaurentPoly.one()
    for t in range(1, a + 1):
        out = out * q_integer(k * t)
    return out


def q_binomial(n: int, d: int) -> LaurentPoly:
    """Gaussian binomial [n][n-1]...[n-d+1]/[d]!, with 1 at d=0 and 0 at d<0."""
    if d < 0:
        return LaurentPoly.zero()
    if d == 0:
        return LaurentPoly.one()
    numer = LaurentPoly.one()
    for t in range(d):
        numer = numer * q_integer(n - t)
    return numer.divexact(q_factorial(d, 1))


def q_pochhammer(a: ScalarQ, x: ScalarQ, n: int) -> ScalarQ:
    """The product (1-a)(1-ax)...(1-ax^{n-1}); n = 0 gives 1."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0, got %d" % n)
    a = a if isinstance(a, ScalarQ) else ScalarQ(a)
    x = x if isinstance(x, ScalarQ) else ScalarQ(x)
    out = ScalarQ.one()
    factor = a
    for _ in range(n):
        out = out * (ScalarQ.one() - factor)
        factor = factor * x
    return out


def is_regular_at_zero(s: ScalarQ) -> bool:
    """True iff s = f/g with f, g ordinary polynomials and g(0) != 0.

    In canonical form the denominator already has a nonzero constant term, so
    the question reduces to the numerator having no negative powers of q.
    """
    if s.is_zero:
        return True
    return s.num.min_exp() >= 0


def laurent_from_text(text: str) -> LaurentPoly:
    """Parse the textual Laurent form, e.g. ``3*q^2 - 1 + 2*q^-4``."""
    text = text.strip()
    if not text:
        raise ValueError("empty Laurent polynomial text")
    out = LaurentPoly.zero()
    pos = 0
    sign = 1
    n = len(text)
    while pos < n:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos < n and text[pos] in "+-":
            sign = 1 if text[pos] == "+" else -1
            pos += 1
            while pos < n and text[pos].isspace():
                pos += 1
        start = pos
        while pos < n and not text[pos].isspace() and text[pos] not in "+-":
            # keep the sign of an exponent like q^-4 attached to its term
            if text[pos] == "^" and pos + 1 < n and text[pos + 1] == "-":
                pos += 2
                continue
            pos += 1
        term = text[start:pos]
        if not term:
            raise ValueError("malformed Laurent polynomial: %r" % text)
        out = out + _parse_laurent_term(term) * sign
        sign = 1
    return out


def _parse_laurent_term(term: str) -> LaurentPoly:
    coeff = Fraction(1)
    exp = 0
    for factor in term.split("*"):
        factor = factor.strip()
        if not factor:
            raise ValueError("malformed term %r" % term)
        if factor[0] == "q":
            exp += 1 if factor == "q" else int(factor[2:])
        else:
            coeff *= Fraction(factor)
    return LaurentPoly({exp: coeff})


def scalar_from_text(text: str) -> ScalarQ:
    """Parse ``(<num>)/(<den>)`` or a plain Laurent polynomial."""
    text = text.strip()
    if text.startswith("(") and ")/(" in text and text.endswith(")"):
        cut = text.index(")/(")
        return ScalarQ(laurent_from_text(text[1:cut]),
                       laurent_from_text(text[cut + 3:-1]))
    return ScalarQ(laurent_from_text(text))
