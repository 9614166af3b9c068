"""Independent reference computations used only by the tests.

Nothing here calls into the code paths it is used to check: determinants
come from evaluation and interpolation, signatures from floating-point
eigenvalues, and second derived subgroup membership from Fox calculus.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from knotalg.laurent import LaurentPoly


def fraction_det(m):
    """Plain Gaussian elimination over Q."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return det


def laplace_det(m):
    """Cofactor expansion along the first row (small matrices only)."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        sign = -1 if j % 2 else 1
        total = total + sign * m[0][j] * laplace_det(minor)
    return total


def det_by_interpolation(V):
    """``det(V - t V^T)`` by evaluating at t = 0..n and Lagrange interpolation."""
    n = len(V)
    xs = list(range(n + 1))
    ys = [fraction_det([[V[i][j] - x * V[j][i] for j in range(n)] for i in range(n)]) for x in xs]
    result = LaurentPoly()
    for i, xi in enumerate(xs):
        basis = LaurentPoly.constant(ys[i])
        for j, xj in enumerate(xs):
            if j != i:
                basis = basis * LaurentPoly({0: Fraction(-xj, xi - xj), 1: Fraction(1, xi - xj)})
        result = result + basis
    return result


def numeric_signature(V, theta: float) -> int:
    """Signature of ``(1 - w) V + (1 - conj w) V^T`` from float eigenvalues."""
    A = np.array(V, dtype=float).reshape(len(V), len(V))
    if A.size == 0:
        return 0
    w = np.exp(2j * np.pi * theta)
    H = (1 - w) * A + (1 - np.conj(w)) * A.T
    ev = np.linalg.eigvalsh(H)
    return int(np.sum(ev > 1e-9) - np.sum(ev < -1e-9))


def numeric_integral(V, samples: int = 6000) -> float:
    """Midpoint rule for the signature integral over the circle of length 1."""
    thetas = (np.arange(samples) + 0.5) / samples
    return float(sum(numeric_signature(V, th) for th in thetas)) / samples


def trace_roots_numeric(coeffs_ascending):
    c = [float(x) for x in coeffs_ascending]
    r = np.roots(c[::-1]) if len(c) > 1 else []
    return sorted(x.real for x in r if abs(x.imag) < 1e-9 and -2 < x.real < 2)


# ----------------------------------------------------------- Fox calculus
def _abel(prefix_vec, g, e, k):
    v = list(prefix_vec)
    v[g - 1] += e
    return tuple(v)


def fox_derivatives(word, k):
    """Fox derivatives of ``word`` (list of (gen, ±1)) mapped to Z[Z^k].

    Returns a list of dicts ``exponent-vector -> coefficient``.
    """
    out = [dict() for _ in range(k)]
    prefix = (0,) * k
    for g, e in word:
        d = out[g - 1]
        if e > 0:
            key, c = prefix, 1
        else:
            key, c = _abel(prefix, g, -1, k), -1
        d[key] = d.get(key, 0) + c
        if not d[key]:
            del d[key]
        prefix = _abel(prefix, g, e, k)
    return out


def in_second_derived(word, k) -> bool:
    """``w in F''`` iff ``w in F'`` and all Fox derivatives vanish in Z[F/F']."""
    sums = [0] * k
    for g, e in word:
        sums[g - 1] += e
    if any(sums):
        return False
    return all(not d for d in fox_derivatives(word, k))


def all_words(k, length):
    gens = [(g, e) for g in range(1, k + 1) for e in (1, -1)]
    for n in range(length + 1):
        yield from itertools.product(gens, repeat=n)


def fox_vanishes_over(word, k, generator_image, identity):
    """True iff every Fox derivative of ``word`` vanishes in Z[F/N].

    ``generator_image(g, e)`` and ``identity`` give the images of letters in
    a model of ``F/N``; for ``word`` in ``N`` this decides ``word in [N, N]``.
    """
    out = [dict() for _ in range(k)]
    prefix = identity
    for g, e in word:
        step = generator_image(g, e)
        key, c = (prefix, 1) if e > 0 else (prefix * step, -1)
        d = out[g - 1]
        d[key] = d.get(key, 0) + c
        if not d[key]:
            del d[key]
        prefix = prefix * step
    return all(not d for d in out)
