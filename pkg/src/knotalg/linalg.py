"""Exact dense linear algebra on nested lists.

Integer and polynomial matrices use fraction-free (Bareiss) elimination so
every intermediate stays in the coefficient ring.  Hermitian matrices over
the Gaussian rationals are diagonalized by congruence to read off inertia.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .laurent import LaurentPoly

Matrix = list[list]


class GaussRational:
    """Exact element ``re + im*i`` of Q(i)."""

    __slots__ = ("real", "imag")

    def __init__(self, real=0, imag=0):
        self.real = Fraction(real)
        self.imag = Fraction(imag)

    @staticmethod
    def _lift(x):
        if isinstance(x, GaussRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussRational(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussRational(self.real + other.real, self.imag + other.imag)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return GaussRational(self.real - other.real, self.imag - other.imag)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        return GaussRational(-self.real, -self.imag)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.real, self.imag, other.real, other.imag
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.real * self.real + self.imag * self.imag

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        p = self * other.conjugate()
        return GaussRational(p.real / n, p.imag / n)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussRational(1) / (self ** -k)
        out, base = GaussRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return GaussRational(self.real, -self.imag)

    def __bool__(self):
        return bool(self.real) or bool(self.imag)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.real == other.real and self.imag == other.imag

    def __hash__(self):
        return hash((self.real, self.imag))

    def __repr__(self):
        return f"GaussRational({self.real}, {self.imag})"


# ---------------------------------------------------------------- helpers
def identity(n: int, one=1, zero=0) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), 0) for col in bt] for row in a]


def _int_exact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    assert r == 0, "Bareiss division must be exact"
    return q


def _poly_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a.exact_div(b)


def bareiss_det(m: Sequence[Sequence], exact_div: Callable, zero=0, one=1):
    """Determinant by fraction-free elimination over an integral domain."""
    n = len(m)
    if n == 0:
        return one
    a = [list(row) for row in m]
    sign, prev = 1, one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return zero
        p = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * p - aik * row_k[j], prev)
            row_i[k] = zero
        prev = p
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def int_det(m: Sequence[Sequence[int]]) -> int:
    return bareiss_det(m, _int_exact)


def poly_det(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    return bareiss_det(m, _poly_exact, LaurentPoly(), LaurentPoly.constant(1))


def poly_adjugate(m: Sequence[Sequence[LaurentPoly]]) -> tuple[Matrix, LaurentPoly]:
    """Return ``(adj(m), det(m))`` for a nonsingular polynomial matrix.

    Fraction-free forward elimination on ``[m | I]`` followed by
    fraction-free back substitution; all divisions are exact.
    """
    n = len(m)
    zero, one = LaurentPoly(), LaurentPoly.constant(1)
    if n == 0:
        return [], one
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    width = 2 * n
    sign, prev = 1, one
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                raise ZeroDivisionError("singular matrix has no inverse")
        p = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, width):
                row_i[j] = (row_i[j] * p - aik * row_k[j]).exact_div(prev)
            row_i[k] = zero
        prev = p
    d = a[n - 1][n - 1]
    if not d:
        raise ZeroDivisionError("singular matrix has no inverse")
    # y = d * m^-1, solved column by column
    y = [[zero] * n for _ in range(n)]
    for c in range(n):
        for i in range(n - 1, -1, -1):
            acc = a[i][n + c] * d
            for j in range(i + 1, n):
                acc = acc - a[i][j] * y[j][c]
            y[i][c] = acc.exact_div(a[i][i])
    det = d if sign > 0 else -d
    if sign < 0:
        y = [[-x for x in row] for row in y]
    return y, det


def hermitian_inertia(h: Sequence[Sequence]) -> tuple[int, int, int]:
    """Inertia ``(positive, negative, zero)`` of an exact Hermitian matrix.

    Entries may be Fractions or :class:`GaussRational`.  Congruence
    diagonalization by Schur complements; when the remaining diagonal is
    zero a hyperbolic pair is split by the shear ``e_i -> e_i + conj(a_ij) e_j``.
    """
    a = [list(row) for row in h]
    pos = neg = zero = 0
    while a:
        m = len(a)
        piv = next((i for i in range(m) if a[i][i]), None)
        if piv is None:
            hit = next(((i, j) for i in range(m) for j in range(m) if a[i][j]), None)
            if hit is None:
                zero += m
                break
            i, j = hit
            c = a[i][j].conjugate()
            cb = a[i][j]
            # column i += c * column j, then row i += conj(c) * row j
            for r in range(m):
                a[r][i] = a[r][i] + c * a[r][j]
            for s in range(m):
                a[i][s] = a[i][s] + cb * a[j][s]
            piv = i
        if piv:
            a[0], a[piv] = a[piv], a[0]
            for row in a:
                row[0], row[piv] = row[piv], row[0]
        p = a[0][0]
        if p.real > 0:
            pos += 1
        else:
            neg += 1
        rest = []
        for r in range(1, m):
            f = a[r][0] / p
            rest.append([a[r][s] - f * a[0][s] for s in range(1, m)])
        a = rest
    return pos, neg, zero


def signature(h: Sequence[Sequence]) -> int:
    pos, neg, _ = hermitian_inertia(h)
    return pos - neg
