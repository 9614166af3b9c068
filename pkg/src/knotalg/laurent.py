"""Exact Laurent polynomials over Q and their fraction field Q(t).

A :class:`LaurentPoly` is a sparse map ``exponent -> Fraction`` with no
zero entries.  A :class:`RationalFunc` is a reduced quotient whose
denominator is an ordinary polynomial with nonzero constant term and
leading coefficient 1, so two rational functions are equal exactly when
their components are.

Textual form::

    >>> LaurentPoly.parse("-1 + 2*t^3 - t^-2")
    LaurentPoly('2*t^3 - 1 - t^-2')
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

from .errors import InexactDivision, ParseError, ZeroDenominator, ZeroPolynomial

__all__ = [
    "LaurentPoly",
    "RationalFunc",
    "lp_gcd",
    "parse_rational",
    "format_rational",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coerce(value) -> "LaurentPoly":
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Rational)):
        return LaurentPoly.constant(value)
    return NotImplemented


class LaurentPoly:
    """Element of Q[t, t^-1], immutable and hashable."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Fraction] = {}
        for k, c in items:
            c = Fraction(c)
            if c:
                k = int(k)
                acc[k] = acc.get(k, 0) + c
        self._terms = {k: c for k, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, Fraction]) -> "LaurentPoly":
        # terms must already be free of zeros
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def t(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def from_list(cls, coeffs: Iterable, shift: int = 0) -> "LaurentPoly":
        """Build from ascending coefficients ``c0 + c1 t + ...`` times ``t^shift``."""
        return cls((i + shift, c) for i, c in enumerate(coeffs))

    # ------------------------------------------------------------------ access
    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def degree(self) -> int:
        """Top exponent; raises on the zero polynomial."""
        if not self._terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return next(reversed(self._terms))

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("valuation of the zero polynomial")
        return next(iter(self._terms))

    @property
    def span(self) -> int:
        return self.degree - self.valuation

    def leading_coeff(self) -> Fraction:
        return self._terms[self.degree]

    def lowest_coeff(self) -> Fraction:
        return self._terms[self.valuation]

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def is_ordinary(self) -> bool:
        return not self._terms or self.valuation >= 0

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def dense(self) -> list[Fraction]:
        """Ascending coefficient list of an ordinary polynomial."""
        if not self._terms:
            return []
        if self.valuation < 0:
            raise ValueError("dense() needs an ordinary polynomial")
        out = [Fraction(0)] * (self.degree + 1)
        for k, c in self._terms.items():
            out[k] = c
        return out

    # -------------------------------------------------------------- arithmetic
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return LaurentPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, Fraction] = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                acc[i + j] = acc.get(i + j, 0) + a * b
        return LaurentPoly._raw({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise InexactDivision("only monomials are invertible in Q[t, t^-1]")
            (k, c), = self._terms.items()
            return LaurentPoly({k * n: c ** n})
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return LaurentPoly()
        return LaurentPoly._raw({e: v * c for e, v in self._terms.items()})

    def involute(self) -> "LaurentPoly":
        """The ring involution ``t -> t^-1``."""
        return LaurentPoly._raw({-k: c for k, c in self._terms.items()})

    def __call__(self, x):
        """Evaluate at ``x``; ``x`` must support ``**`` with negative exponents if needed."""
        total = 0
        for k, c in self._terms.items():
            total = total + (x ** k) * c
        return total

    def derivative(self) -> "LaurentPoly":
        return LaurentPoly((k - 1, k * c) for k, c in self._terms.items() if k)

    # ------------------------------------------------- division and units
    def normalize_unit(self) -> tuple["LaurentPoly", "LaurentPoly"]:
        """Split off the unit ``±t^k``: returns ``(q, u)`` with ``self == u*q``.

        ``q`` has lowest exponent 0 and positive lowest coefficient.
        """
        if not self._terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        k = self.valuation
        sign = 1 if self._terms[k] > 0 else -1
        q = self.shift(-k)
        if sign < 0:
            q = -q
        return q, LaurentPoly({k: sign})

    def monic_normal(self) -> "LaurentPoly":
        """Associate with lowest exponent 0 and leading coefficient 1 (units of Q[t, t^-1] removed)."""
        if not self._terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        return self.shift(-self.valuation).scale(1 / self.leading_coeff())

    def divmod_ordinary(self, other: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Euclidean division in Q[t]; both operands must be ordinary polynomials."""
        if not other:
            raise ZeroPolynomial("division by zero polynomial")
        if not (self.is_ordinary() and other.is_ordinary()):
            raise ValueError("divmod_ordinary needs ordinary polynomials")
        rem = dict(self._terms)
        dq = other.degree
        lc = other.leading_coeff()
        quot: dict[int, Fraction] = {}
        while rem:
            top = max(rem)
            if top < dq:
                break
            c = rem[top] / lc
            quot[top - dq] = c
            for k, v in other._terms.items():
                e = k + top - dq
                s = rem.get(e, 0) - c * v
                if s:
                    rem[e] = s
                else:
                    rem.pop(e, None)
        return LaurentPoly._raw(quot), LaurentPoly._raw(rem)

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in Q[t, t^-1]; raises :class:`InexactDivision` if ``other`` does not divide."""
        if not other:
            raise ZeroPolynomial("division by zero polynomial")
        if not self:
            return LaurentPoly()
        a0, b0 = self.shift(-self.valuation), other.shift(-other.valuation)
        q, r = a0.divmod_ordinary(b0)
        if r:
            raise InexactDivision(f"{other} does not divide {self}")
        return q.shift(self.valuation - other.valuation)

    def __truediv__(self, other):
        if isinstance(other, LaurentPoly):
            return RationalFunc(self, other)
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDenominator("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    # ------------------------------------------------------------ comparison
    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def equal_up_to_unit(self, other: "LaurentPoly") -> bool:
        """Equality up to ``±t^k``."""
        if not self or not other:
            return not self and not other
        return self.normalize_unit()[0] == other.normalize_unit()[0]

    # ---------------------------------------------------------------- text
    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items(), reverse=True):
            neg = c < 0
            a = -c if neg else c
            if k == 0:
                body = format_rational(a)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if a == 1 else f"{format_rational(a)}*{var}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(
        r"""\s*(?P<sign>[+-])?\s*
            (?:
              (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*)?(?P<var1>t(?:\s*\^\s*(?P<exp1>\(?\s*-?\d+\s*\)?))?)?
             |(?P<var2>t(?:\s*\^\s*(?P<exp2>\(?\s*-?\d+\s*\)?))?)
            )\s*""",
        re.VERBOSE,
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse ``"-1 + 2*t^3 - t^-2"``; coefficients may be ``p/q``."""
        s = text.strip()
        if not s:
            raise ParseError("empty polynomial")
        pos, first = 0, True
        acc: dict[int, Fraction] = {}
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or (not first and not m.group("sign")):
                raise ParseError(f"cannot parse polynomial {text!r}", line=1, column=pos + 1)
            if m.group("coef") is None and m.group("var2") is None:
                raise ParseError(f"cannot parse polynomial {text!r}", line=1, column=pos + 1)
            sign = -1 if m.group("sign") == "-" else 1
            if m.group("coef") is not None:
                c = Fraction(m.group("coef"))
                if c.denominator == 0:
                    raise ParseError("zero denominator")
                var, exp = m.group("var1"), m.group("exp1")
            else:
                c = Fraction(1)
                var, exp = m.group("var2"), m.group("exp2")
            if var is None:
                k = 0
            elif exp is None:
                k = 1
            else:
                k = int(exp.strip("() "))
            acc[k] = acc.get(k, 0) + sign * c
            pos = m.end()
            first = False
        return cls(acc)


def lp_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd in Q[t, t^-1] (lowest exponent 0, leading coefficient 1).

    ``gcd(0, 0)`` is 0.
    """
    if not a and not b:
        return LaurentPoly()
    if not a:
        return b.monic_normal()
    if not b:
        return a.monic_normal()
    x, y = a.shift(-a.valuation), b.shift(-b.valuation)
    while y:
        _, r = x.divmod_ordinary(y)
        x, y = y, r
    # t is a unit, drop any power of it that crept in
    return x.monic_normal()


def _coerce_rf(value):
    if isinstance(value, RationalFunc):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFunc(value)
    if isinstance(value, (int, Rational)):
        return RationalFunc(LaurentPoly.constant(value))
    return NotImplemented


class RationalFunc:
    """Reduced element of Q(t).

    Invariant: ``den`` is an ordinary polynomial with nonzero constant term
    and leading coefficient 1, and ``gcd(num, den) == 1``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _coerce(num)
        den = LaurentPoly.constant(1) if den is None else _coerce(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RationalFunc components must be Laurent polynomials or rationals")
        if not den:
            raise ZeroDenominator("zero denominator")
        if not num:
            self.num, self.den = LaurentPoly(), LaurentPoly.constant(1)
            return
        # move all t-powers into the numerator
        shift = num.valuation - den.valuation
        n0 = num.shift(-num.valuation)
        d0 = den.shift(-den.valuation)
        g = lp_gcd(n0, d0)
        if g != 1:
            n0 = n0.exact_div(g)
            d0 = d0.exact_div(g)
        lc = d0.leading_coeff()
        self.num = n0.scale(1 / lc).shift(shift)
        self.den = d0.scale(1 / lc)

    @classmethod
    def reduce(cls, num, den) -> "RationalFunc":
        return cls(num, den)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_laurent(self) -> bool:
        return self.den == 1

    def is_integral_laurent(self) -> bool:
        """True iff this is an element of Z[t, t^-1]."""
        return self.den == 1 and self.num.has_integer_coeffs()

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RationalFunc(self.num + other.num, self.den)
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunc.__new__(RationalFunc)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        if not other:
            raise ZeroDenominator("division by zero rational function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return other / self

    def involute(self) -> "RationalFunc":
        return RationalFunc(self.num.involute(), self.den.involute())

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDenominator("pole")
        return self.num(x) / d

    def __eq__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunc({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "RationalFunc":
        """Parse ``"p"`` or ``"(p)/(q)"`` with ``p, q`` in the polynomial syntax."""
        s = text.strip()
        depth, split = 0, None
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "/" and depth == 0 and s[:i].rstrip().endswith(")"):
                split = i
        if split is None:
            return cls(LaurentPoly.parse(_unwrap(s)))
        num, den = _unwrap(s[:split]), _unwrap(s[split + 1:])
        return cls(LaurentPoly.parse(num), LaurentPoly.parse(den))


def _unwrap(text: str) -> str:
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        return s[1:-1]
    return s
