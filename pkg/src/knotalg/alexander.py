"""Alexander module presentations and their normal forms over Q[t, t^-1]."""

from __future__ import annotations

from typing import Sequence

from .errors import SingularPresentation
from .laurent import LaurentPoly
from .linalg import poly_det
from .seifert import SeifertMatrix

__all__ = [
    "presentation",
    "alexander_poly",
    "smith_diagonal",
    "invariant_factors",
    "modules_isomorphic",
]

T = LaurentPoly.t()


def presentation(V: SeifertMatrix) -> list[list[LaurentPoly]]:
    """``V - t V^T``, the presentation matrix of the Alexander module."""
    n = V.size
    return [
        [LaurentPoly({0: V.rows[i][j], 1: -V.rows[j][i]}) for j in range(n)]
        for i in range(n)
    ]


def alexander_poly(V: SeifertMatrix) -> LaurentPoly:
    """``det(V - t V^T)`` with the unit ``±t^k`` removed."""
    d = poly_det(presentation(V))
    return d.normalize_unit()[0]


def _lowest_degree(a, rows, cols):
    best = None
    for i in rows:
        for j in cols:
            x = a[i][j]
            if x and (best is None or x.degree < best[0]):
                best = (x.degree, i, j)
                if best[0] == 0:
                    return best
    return best


def smith_diagonal(m: Sequence[Sequence[LaurentPoly]]) -> list[LaurentPoly]:
    """Diagonal of a Smith normal form over Q[t] of a matrix of ordinary polynomials.

    Pivots on the lowest-degree nonzero entry (row-major tie-break).  The
    returned entries are not normalized and may include zeros for a
    rank-deficient input.
    """
    a = [list(row) for row in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    diag: list[LaurentPoly] = []
    for k in range(min(nr, nc)):
        hit = _lowest_degree(a, range(k, nr), range(k, nc))
        if hit is None:
            diag.extend([LaurentPoly()] * (min(nr, nc) - k))
            break
        _, i, j = hit
        a[k], a[i] = a[i], a[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        while True:
            p = a[k][k]
            clean = True
            for i in range(k + 1, nr):
                if a[i][k]:
                    q, r = a[i][k].divmod_ordinary(p)
                    if q:
                        row_i, row_k = a[i], a[k]
                        for j in range(k, nc):
                            if row_k[j]:
                                row_i[j] = row_i[j] - q * row_k[j]
                    if r:
                        clean = False
            for j in range(k + 1, nc):
                if a[k][j]:
                    q, r = a[k][j].divmod_ordinary(p)
                    if q:
                        for i in range(k, nr):
                            if a[i][k]:
                                a[i][j] = a[i][j] - q * a[i][k]
                    if r:
                        clean = False
            if not clean:
                # a smaller remainder now sits in row or column k
                cand = [(a[i][k].degree, i, k) for i in range(k + 1, nr) if a[i][k]]
                cand += [(a[k][j].degree, k, j) for j in range(k + 1, nc) if a[k][j]]
                _, i, j = min(cand)
                a[k], a[i] = a[i], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
                continue
            bad = None
            for i in range(k + 1, nr):
                for j in range(k + 1, nc):
                    if a[i][j] and a[i][j].divmod_ordinary(p)[1]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[k] = [x + y for x, y in zip(a[k], a[bad])]
        diag.append(a[k][k])
    return diag


def invariant_factors(m: Sequence[Sequence[LaurentPoly]]) -> list[LaurentPoly]:
    """Nontrivial invariant factors over Q[t, t^-1] of a square presentation.

    Each factor has lowest exponent 0 and leading coefficient 1, and each
    divides the next.  The empty list is the trivial module.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise SingularPresentation("presentation matrix must be square")
    rows = []
    for row in m:
        lows = [x.valuation for x in row if x]
        if not lows:
            raise SingularPresentation("zero row: module is not torsion")
        # rows scale by units t^k freely
        rows.append([x.shift(-min(lows)) for x in row])
    diag = smith_diagonal(rows)
    if any(not d for d in diag):
        raise SingularPresentation("presentation has zero determinant")
    factors = [d.monic_normal() for d in diag]
    return [f for f in factors if not f.is_constant()]


def modules_isomorphic(V1: SeifertMatrix, V2: SeifertMatrix) -> bool:
    """Isomorphism of the rational Alexander modules (invariant factors agree)."""
    return invariant_factors(presentation(V1)) == invariant_factors(presentation(V2))
