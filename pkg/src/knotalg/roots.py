"""Real-root isolation by Sturm sequences, specialised to unit-circle roots
of symmetric Laurent polynomials via the trace substitution ``z = t + 1/t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NotSymmetric, ZeroPolynomial
from .laurent import LaurentPoly, lp_gcd

__all__ = [
    "RootInterval",
    "trace_polynomial",
    "sturm_sequence",
    "count_roots",
    "isolate_real_roots",
    "refine",
    "unit_circle_root_cuts",
]

NIVEN_Z = (Fraction(-1), Fraction(0), Fraction(1))


@dataclass(frozen=True)
class RootInterval:
    """Open interval ``(lo, hi)`` holding exactly one root, or the exact root when ``lo == hi``.

    Endpoints of a non-degenerate interval are never roots.
    """

    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self):
        if self.exact:
            return str(self.lo)
        return f"({self.lo}, {self.hi})"


def trace_polynomial(delta: LaurentPoly) -> LaurentPoly:
    """Polynomial ``P`` with ``t^-d Delta(t) = P(t + 1/t)`` where ``deg Delta = 2d``.

    ``delta`` must be palindromic up to a unit ``±t^k``.
    """
    if not delta:
        raise ZeroPolynomial("zero Alexander polynomial")
    f = delta.shift(-delta.valuation)
    deg = f.degree
    if deg % 2 or f.involute().shift(deg) != f:
        raise NotSymmetric(f"{delta} is not symmetric under t -> 1/t")
    f = f.shift(-(deg // 2))
    z_plus = LaurentPoly({-1: 1, 1: 1})
    out: dict[int, Fraction] = {}
    while f:
        m = f.degree
        c = f.leading_coeff()
        out[m] = c
        f = f - (z_plus ** m).scale(c)
    return LaurentPoly(out)


def _eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _dense(p: LaurentPoly) -> list[Fraction]:
    return p.dense()


def sturm_sequence(p: LaurentPoly) -> list[LaurentPoly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        _, r = seq[-2].divmod_ordinary(seq[-1])
        seq.append(-r)
    return seq[:-1]


def _variations(dense_seq, x: Fraction) -> int:
    signs = []
    for q in dense_seq:
        v = _eval(q, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


class _Isolator:
    def __init__(self, p: LaurentPoly):
        if not p.is_ordinary():
            raise ValueError("root isolation needs an ordinary polynomial")
        if p.is_constant():
            self.sqfree = p
        else:
            self.sqfree = p.divmod_ordinary(lp_gcd(p, p.derivative()))[0]
        self.dense = _dense(self.sqfree)
        self.seq = [_dense(q) for q in sturm_sequence(self.sqfree)] if not p.is_constant() else [self.dense]

    def value(self, x: Fraction) -> Fraction:
        return _eval(self.dense, x)

    def count_half_open(self, a: Fraction, b: Fraction) -> int:
        """Distinct roots in ``(a, b]``."""
        return _variations(self.seq, a) - _variations(self.seq, b)

    def count_open(self, a: Fraction, b: Fraction) -> int:
        return self.count_half_open(a, b) - (1 if self.value(b) == 0 else 0)

    def isolate(self, a: Fraction, b: Fraction) -> list[RootInterval]:
        n = self.count_open(a, b)
        if n == 0:
            return []
        if n == 1 and self.value(a) and self.value(b):
            return [RootInterval(a, b)]
        m = (a + b) / 2
        mid = [RootInterval(m, m)] if self.value(m) == 0 else []
        return self.isolate(a, m) + mid + self.isolate(m, b)

    def refine(self, r: RootInterval, width: Fraction) -> RootInterval:
        lo, hi = r.lo, r.hi
        if lo == hi:
            return r
        flo = self.value(lo)
        while hi - lo >= width:
            m = (lo + hi) / 2
            fm = self.value(m)
            if fm == 0:
                return RootInterval(m, m)
            if (fm > 0) == (flo > 0):
                lo, flo = m, fm
            else:
                hi = m
        return RootInterval(lo, hi)


def count_roots(p: LaurentPoly, a, b) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(a, b)``."""
    return _Isolator(p).count_open(Fraction(a), Fraction(b))


def isolate_real_roots(p: LaurentPoly, a, b, splits: Sequence[Fraction] = ()) -> list[RootInterval]:
    """Isolating intervals (ascending) for the distinct roots of ``p`` in ``(a, b)``.

    Any point of ``splits`` that is a root is reported exactly.
    """
    iso = _Isolator(p)
    if iso.sqfree.is_constant():
        return []
    pts = [Fraction(a)] + sorted(Fraction(s) for s in splits if a < s < b) + [Fraction(b)]
    out: list[RootInterval] = []
    for i, (lo, hi) in enumerate(zip(pts, pts[1:])):
        if i and iso.value(lo) == 0:
            out.append(RootInterval(lo, lo))
        out.extend(iso.isolate(lo, hi))
    return out


def refine(p: LaurentPoly, r: RootInterval, width) -> RootInterval:
    """Bisect ``r`` until narrower than ``width`` (or the root is hit exactly)."""
    return _Isolator(p).refine(r, Fraction(width))


def unit_circle_root_cuts(delta: LaurentPoly, width=None) -> list[RootInterval]:
    """Isolating intervals in ``z = t + 1/t`` for the roots of ``delta`` on the unit circle.

    Only ``z`` in the open interval (-2, 2) is reported, in ascending
    order; repeated roots are collapsed.  Roots at ``z`` in {-1, 0, 1}
    are always reported exactly.
    """
    p = trace_polynomial(delta)
    roots = isolate_real_roots(p, -2, 2, NIVEN_Z)
    if width is not None:
        iso = _Isolator(p)
        roots = [iso.refine(r, Fraction(width)) for r in roots]
    return roots
