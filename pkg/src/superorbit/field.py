"""Exact scalar arithmetic: arbitrary-precision rationals and the field Q(a).

Two scalar types are used throughout the package: plain rationals (gmpy2.mpq,
exact and canonically reduced) and rational functions in one variable ``a``
over the rationals.  Every algebra is built over exactly one of the two
fields; all arithmetic is exact and results are kept in canonical form.
"""

from __future__ import annotations

import re

from gmpy2 import mpq

Rational = mpq


def rat(p, q=1):
    """Canonical rational p/q."""
    return mpq(p, q)


_RAT_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text):
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    return mpq(int(m.group(1)), int(m.group(2) or 1))


class Polynomial:
    """Dense univariate polynomial over Q, coefficients indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, type(mpq())) else mpq(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        # degree of the zero polynomial is -1 by convention
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [mpq(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if not ci:
                continue
            for j, cj in enumerate(other.coeffs):
                if cj:
                    out[i + j] += ci * cj
        return Polynomial(out)

    def scale(self, c):
        c = mpq(c)
        return Polynomial([ci * c for ci in self.coeffs])

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [mpq(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        lead = other.coeffs[-1]
        while len(rem) - 1 >= d and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            f = rem[-1] / lead
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] -= f * c
            rem.pop()
        return Polynomial(q), Polynomial(rem)

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        return Polynomial([c / lead for c in self.coeffs])

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"


POLY_ZERO = Polynomial()
POLY_ONE = Polynomial([1])
POLY_A = Polynomial([0, 1])


def poly_gcd(f, g):
    """Monic gcd over Q[a] via Euclid."""
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
    return f.monic()


class RationalFunction:
    """Element of Q(a), stored as coprime num/den with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=POLY_ONE, _canonical=False):
        if not isinstance(num, Polynomial):
            num = Polynomial([mpq(num)])
        if not isinstance(den, Polynomial):
            den = Polynomial([mpq(den)])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(a)")
        if not _canonical:
            if num.is_zero():
                den = POLY_ONE
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
                lead = den.coeffs[-1]
                if lead != 1:
                    num = Polynomial([c / lead for c in num.coeffs])
                    den = den.monic()
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree <= 0

    def as_rational(self):
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        if self.num.is_zero():
            return mpq(0)
        return self.num.coeffs[0] / self.den.coeffs[0]

    def __eq__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(a)")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _rf(other)
        if other is None:
            return NotImplemented
        return other / self

    def __str__(self):
        return format_rational_function(self)

    def __repr__(self):
        return f"RationalFunction({self})"


def _rf(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, Polynomial):
        return RationalFunction(x)
    if isinstance(x, (int, type(mpq()))):
        return RationalFunction(Polynomial([mpq(x)]))
    return None


RF_ZERO = RationalFunction(POLY_ZERO)
RF_ONE = RationalFunction(POLY_ONE)
RF_A = RationalFunction(POLY_A)


def format_polynomial(p, var="a"):
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p.coeffs[d]
        if not c:
            continue
        if d == 0:
            body = str(abs(c))
        else:
            x = var if d == 1 else f"{var}^{d}"
            body = x if abs(c) == 1 else f"{abs(c)}*{x}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_rational_function(x, var="a"):
    if x.den == POLY_ONE:
        return format_polynomial(x.num, var)
    return f"({format_polynomial(x.num, var)})/({format_polynomial(x.den, var)})"


class _Tokens:
    def __init__(self, text):
        self.toks = re.findall(r"\d+|[a-zA-Z]+|\^|\*|\+|-|/|\(|\)", text)
        rest = re.sub(r"\d+|[a-zA-Z]+|\^|\*|\+|-|/|\(|\)|\s+", "", text)
        if rest:
            raise ValueError(f"bad characters in scalar: {rest!r}")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self):
        t = self.peek()
        self.pos += 1
        return t


def _parse_expr(tk, var):
    sign = 1
    while tk.peek() in ("+", "-"):
        if tk.take() == "-":
            sign = -sign
    x = _parse_term(tk, var)
    if sign < 0:
        x = -x
    while tk.peek() in ("+", "-"):
        op = tk.take()
        y = _parse_term(tk, var)
        x = x + y if op == "+" else x - y
    return x


def _parse_term(tk, var):
    x = _parse_power(tk, var)
    while tk.peek() in ("*", "/"):
        op = tk.take()
        y = _parse_power(tk, var)
        x = x * y if op == "*" else x / y
    return x


def _parse_power(tk, var):
    x = _parse_atom(tk, var)
    if tk.peek() == "^":
        tk.take()
        neg = False
        if tk.peek() == "-":
            tk.take()
            neg = True
        t = tk.take()
        if t is None or not t.isdigit():
            raise ValueError("bad exponent")
        n = int(t)
        out = RF_ONE
        for _ in range(n):
            out = out * x
        if neg:
            out = RF_ONE / out
        return out
    return x


def _parse_atom(tk, var):
    t = tk.take()
    if t is None:
        raise ValueError("unexpected end of scalar expression")
    if t == "(":
        x = _parse_expr(tk, var)
        if tk.take() != ")":
            raise ValueError("unbalanced parentheses")
        return x
    if t == "-":
        return -_parse_atom(tk, var)
    if t.isdigit():
        return RationalFunction(Polynomial([mpq(int(t))]))
    if t == var:
        return RF_A
    raise ValueError(f"unexpected token {t!r}")


def parse_rational_function(text, var="a"):
    tk = _Tokens(text)
    x = _parse_expr(tk, var)
    if tk.peek() is not None:
        raise ValueError(f"trailing input in scalar: {text!r}")
    return x


class RationalField:
    """The field Q with gmpy2.mpq elements."""

    name = "Q"

    zero = mpq(0)
    one = mpq(1)

    def of_int(self, n):
        return mpq(n)

    def of_rational(self, x):
        return mpq(x)

    def parse(self, text):
        return parse_rational(text)

    def render(self, x):
        return str(x)

    def __repr__(self):
        return "QQ"


class FunctionField:
    """The field Q(a), with a the deformation parameter."""

    name = "Q(a)"

    zero = RF_ZERO
    one = RF_ONE
    gen = RF_A

    def of_int(self, n):
        return RationalFunction(Polynomial([mpq(n)]))

    def of_rational(self, x):
        return RationalFunction(Polynomial([mpq(x)]))

    def parse(self, text):
        return parse_rational_function(text)

    def render(self, x):
        return format_rational_function(x)

    def __repr__(self):
        return "QALPHA"


QQ = RationalField()
QALPHA = FunctionField()
