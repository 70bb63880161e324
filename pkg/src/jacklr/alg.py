"""Exact arithmetic in Q[a] and Q(a), where ``a`` stands for the Jack parameter.

Rationals are :class:`fractions.Fraction`. Polynomials are dense, lowest degree
first. Rational functions are kept reduced, with the denominator scaled to a
primitive integer polynomial with positive leading coefficient, so equal
values always have identical fields.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational

from .errors import PoleAtPoint, PolyParseError

VAR = "a"


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


class AlphaPoly:
    """Polynomial in ``a`` with rational coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, cs):
        # cs: list of Fractions, may carry trailing zeros
        while cs and not cs[-1]:
            cs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(cs)
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> AlphaPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c=1) -> AlphaPoly:
        return cls([0] * deg + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, AlphaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((_frac(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("AlphaPoly", self.coeffs))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, AlphaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaPoly((other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return AlphaPoly._raw(cs)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return AlphaPoly()
            return AlphaPoly._raw([c * other for c in self.coeffs])
        if not isinstance(other, AlphaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return AlphaPoly()
        cs = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    cs[i + j] += x * y
        return AlphaPoly._raw(cs)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = AlphaPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: AlphaPoly) -> tuple[AlphaPoly, AlphaPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return AlphaPoly(), self
        inv = 1 / other.lead
        quot = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] * inv
            if q:
                quot[k] = q
                for j in range(db + 1):
                    rem[k + j] -= q * bc[j]
        return AlphaPoly._raw(quot), AlphaPoly._raw(rem[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: AlphaPoly) -> AlphaPoly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> AlphaPoly:
        if not self.coeffs:
            return self
        inv = 1 / self.coeffs[-1]
        return AlphaPoly._raw([c * inv for c in self.coeffs])

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive over Z (0 for zero)."""
        if not self.coeffs:
            return Fraction(0)
        num = abs(reduce(gcd, (c.numerator for c in self.coeffs)))
        den = reduce(lcm, (c.denominator for c in self.coeffs))
        return Fraction(num, den)

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def has_nonneg_int_coeffs(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"AlphaPoly({format_poly(self)!r})"


def poly_gcd(f: AlphaPoly, g: AlphaPoly) -> AlphaPoly:
    """Monic gcd by the Euclidean algorithm over Q (zero if both are zero)."""
    if f.degree < g.degree:
        f, g = g, f
    if g.is_zero():
        return f.monic()
    if g.degree == 0:
        return AlphaPoly.const(1)
    f, g = f.monic(), g.monic()
    while g:
        f, g = g, (f % g).monic()
    return f


def has_nonneg_int_coeffs(p: AlphaPoly) -> bool:
    return p.has_nonneg_int_coeffs()


_ONE = AlphaPoly.const(1)


class AlphaRat:
    """Reduced rational function num/den in ``a``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, AlphaPoly) else AlphaPoly.const(num)
        den = den if isinstance(den, AlphaPoly) else AlphaPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = AlphaPoly(), _ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            self.num, self.den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _reduced(cls, num: AlphaPoly, den: AlphaPoly) -> AlphaRat:
        # caller guarantees gcd(num, den) = 1
        obj = cls.__new__(cls)
        if num.is_zero():
            obj.num, obj.den = AlphaPoly(), _ONE
        else:
            obj.num, obj.den = _normalize(num, den)
        obj._hash = None
        return obj

    @classmethod
    def from_poly(cls, p: AlphaPoly) -> AlphaRat:
        obj = cls.__new__(cls)
        obj.num, obj.den, obj._hash = p, _ONE, None
        return obj

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if isinstance(other, AlphaRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.den.degree == 0 and self.num == other
        if isinstance(other, AlphaPoly):
            return self.den.degree == 0 and self.num == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.den.degree == 0 and self.num.degree <= 0:
                self._hash = hash(self.num.coeffs[0] if self.num.coeffs else 0)
            else:
                self._hash = hash(("AlphaRat", self.num.coeffs, self.den.coeffs))
        return self._hash

    @staticmethod
    def _coerce(other):
        if isinstance(other, AlphaRat):
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaRat.from_poly(AlphaPoly.const(other))
        if isinstance(other, AlphaPoly):
            return AlphaRat.from_poly(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        a, b, c, d = self.num, self.den, other.num, other.den
        if b == d:
            t = a + c
            if not t:
                return ZERO
            return AlphaRat(t, b)
        g = poly_gcd(b, d)
        if g.degree == 0:
            return AlphaRat._reduced(a * d + c * b, b * d)
        bg, dg = b.exact_div(g), d.exact_div(g)
        t = a * dg + c * bg
        if not t:
            return ZERO
        g2 = poly_gcd(t, g)
        if g2.degree > 0:
            t = t.exact_div(g2)
            g = g.exact_div(g2)
        return AlphaRat._reduced(t, bg * dg * g)

    __radd__ = __add__

    def __neg__(self):
        obj = AlphaRat.__new__(AlphaRat)
        obj.num, obj.den, obj._hash = -self.num, self.den, None
        return obj

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return AlphaRat._reduced(self.num * other, self.den)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d) if d.degree > 0 else _ONE
        g2 = poly_gcd(c, b) if b.degree > 0 else _ONE
        if g1.degree > 0:
            a, d = a.exact_div(g1), d.exact_div(g1)
        if g2.degree > 0:
            c, b = c.exact_div(g2), b.exact_div(g2)
        return AlphaRat._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> AlphaRat:
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return AlphaRat._reduced(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __call__(self, x):
        x = _frac(x)
        d = self.den(x)
        if d == 0:
            raise PoleAtPoint(f"denominator {self.den} vanishes at a = {x}")
        return self.num(x) / d

    evaluate = __call__

    def __str__(self):
        return format_rat(self)

    def __repr__(self):
        return f"AlphaRat({format_rat(self)!r})"


def _normalize(num: AlphaPoly, den: AlphaPoly) -> tuple[AlphaPoly, AlphaPoly]:
    """Scale so den is primitive over Z with positive leading coefficient."""
    c = den.content()
    if den.lead < 0:
        c = -c
    if c != 1:
        inv = 1 / c
        num = AlphaPoly._raw([x * inv for x in num.coeffs])
        den = AlphaPoly._raw([x * inv for x in den.coeffs])
    return num, den


ZERO = AlphaRat()
ONE = AlphaRat(1)
ALPHA = AlphaRat(AlphaPoly((0, 1)))


def to_rat(x) -> AlphaRat:
    r = AlphaRat._coerce(x)
    if r is None:
        raise TypeError(f"cannot convert {type(x).__name__} to AlphaRat")
    return r


def rat_add(a, b) -> AlphaRat:
    return to_rat(a) + to_rat(b)


def rat_mul(a, b) -> AlphaRat:
    return to_rat(a) * to_rat(b)


def rat_div(a, b) -> AlphaRat:
    b = to_rat(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero rational function")
    return to_rat(a) / b


def evaluate(f, x) -> Fraction:
    return to_rat(f)(x)


class NotPolynomial:
    """Marker returned by :func:`try_as_polynomial` when den is not a unit."""

    __slots__ = ("value",)

    def __init__(self, value: AlphaRat):
        self.value = value

    def __bool__(self):
        return False

    def __repr__(self):
        return f"NotPolynomial({self.value})"


def try_as_polynomial(f) -> AlphaPoly | NotPolynomial:
    f = to_rat(f)
    if f.den.degree == 0:
        return f.num * (1 / f.den.lead)
    return NotPolynomial(f)


# ---------------------------------------------------------------- text forms

def _format_frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: AlphaPoly) -> str:
    """``"2*a^2 - a + 1/2"`` style, highest degree first; zero is ``"0"``."""
    if p.is_zero():
        return "0"
    pieces = []
    for deg in range(p.degree, -1, -1):
        c = p.coeffs[deg]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = _format_frac(mag)
        else:
            mono = VAR if deg == 1 else f"{VAR}^{deg}"
            body = mono if mag == 1 else f"{_format_frac(mag)}*{mono}"
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def format_rat(f: AlphaRat) -> str:
    if f.den.degree == 0:
        return format_poly(f.num)
    num, den = format_poly(f.num), format_poly(f.den)
    if len(f.num.coeffs) - f.num.coeffs.count(0) > 1:
        num = f"({num})"
    return f"{num} / ({den})"


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?P<var>a(?:\s*\^\s*(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> AlphaPoly:
    """Inverse of :func:`format_poly` (also tolerates ``2a``, ``a^1``, spaces)."""
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("var") is None):
            raise PolyParseError(f"cannot parse {text!r} at position {pos}")
        if not first and m.group("sign") is None:
            raise PolyParseError(f"missing operator in {text!r} at position {pos}")
        if m.group("star") and m.group("var") is None:
            raise PolyParseError(f"dangling '*' in {text!r} at position {pos}")
        first = False
        c = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            c = -c
        if m.group("var") is None:
            deg = 0
        else:
            deg = int(m.group("exp")) if m.group("exp") else 1
        coeffs[deg] = coeffs.get(deg, Fraction(0)) + c
        pos = m.end()
    top = max(coeffs)
    return AlphaPoly([coeffs.get(i, 0) for i in range(top + 1)])


def parse_rat(text: str) -> AlphaRat:
    """Parse ``"num"`` or ``"(num) / (den)"`` as produced by :func:`format_rat`."""
    s = text.strip()
    depth = 0
    split_at = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            # a bare "/" between digits is a rational coefficient, not a quotient
            left = s[:i].rstrip()
            if left.endswith(")") or s[i + 1:].lstrip().startswith("("):
                split_at = i
                break
    if split_at is None:
        return AlphaRat.from_poly(parse_poly(_strip_parens(s)))
    num = parse_poly(_strip_parens(s[:split_at]))
    den = parse_poly(_strip_parens(s[split_at + 1:]))
    if den.is_zero():
        raise PolyParseError(f"zero denominator in {text!r}")
    return AlphaRat(num, den)


def _strip_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    return s


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except ValueError as exc:
        raise PolyParseError(f"not a rational number: {text!r}") from exc
