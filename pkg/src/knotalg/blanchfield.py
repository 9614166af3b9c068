"""The classical Blanchfield pairing matrix ``(1 - t)(V - t V^T)^-1``."""

from __future__ import annotations

from typing import Sequence

from .alexander import presentation
from .errors import SizeMismatch
from .laurent import LaurentPoly, RationalFunc
from .linalg import poly_adjugate
from .seifert import SeifertMatrix

__all__ = [
    "blanchfield_matrix",
    "is_hermitian",
    "pairing",
    "pairings_equal_mod_integral",
]

ONE_MINUS_T = LaurentPoly({0: 1, 1: -1})


def blanchfield_matrix(V: SeifertMatrix) -> list[list[RationalFunc]]:
    """Exact Blanchfield matrix; the empty matrix for the unknot."""
    if V.size == 0:
        return []
    adj, det = poly_adjugate(presentation(V))
    return [[RationalFunc(ONE_MINUS_T * x, det) for x in row] for row in adj]


def is_hermitian(W: Sequence[Sequence[RationalFunc]]) -> bool:
    """``W(t^-1)^T == W(t)`` entrywise."""
    n = len(W)
    return all(W[j][i].involute() == W[i][j] for i in range(n) for j in range(n))


def _as_vector(x, n):
    if len(x) != n:
        raise SizeMismatch(f"vector length {len(x)} does not match matrix size {n}")
    out = []
    for c in x:
        if isinstance(c, LaurentPoly):
            out.append(c)
        elif isinstance(c, str):
            out.append(LaurentPoly.parse(c))
        else:
            out.append(LaurentPoly.constant(c))
    return out


def pairing(V: SeifertMatrix, x, y, W=None) -> RationalFunc:
    """``involute(x)^T W y`` as an exact element of Q(t).

    ``W`` may be passed in to avoid recomputing the matrix.
    """
    n = V.size
    xs, ys = _as_vector(x, n), _as_vector(y, n)
    if W is None:
        W = blanchfield_matrix(V)
    total = RationalFunc(0)
    for i in range(n):
        if not xs[i]:
            continue
        xi = xs[i].involute()
        for j in range(n):
            if ys[j]:
                total = total + W[i][j] * (xi * ys[j])
    return total


def pairings_equal_mod_integral(f: RationalFunc, g: RationalFunc) -> bool:
    """True iff ``f - g`` lies in Z[t, t^-1]."""
    return (f - g).is_integral_laurent()
