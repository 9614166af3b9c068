"""Levine-Tristram signatures, certified signature profiles and the
signature integral over the circle of total length 1.

Points of the circle are written ``omega = exp(2 pi i theta)`` with
``theta`` in [0, 1).  Signatures are evaluated exactly at rational points
``omega(s) = ((1 - s^2) + 2 s i) / (1 + s^2)``, for which ``s = tan(pi theta)``.
The jump locus is found in the trace coordinate ``z = omega + 1/omega =
2 cos(2 pi theta)`` and converted to ``theta`` with interval arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from mpmath.ctx_iv import MPIntervalContext

from .alexander import alexander_poly
from .errors import AtRoot, AtUnity
from .linalg import GaussRational, hermitian_inertia, signature
from .roots import NIVEN_Z, RootInterval, _Isolator, trace_polynomial
from .seifert import SeifertMatrix

__all__ = [
    "CirclePoint",
    "CertifiedInterval",
    "SignatureProfile",
    "circle_point",
    "hermitian_matrix",
    "lt_signature_at",
    "ordinary_signature",
    "signature_profile",
    "signature_integral",
    "theta_of_z",
]

NIVEN_THETA = {Fraction(1): Fraction(1, 6), Fraction(0): Fraction(1, 4), Fraction(-1): Fraction(1, 3)}


@dataclass(frozen=True)
class CirclePoint:
    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))
        if self.re * self.re + self.im * self.im != 1:
            raise ValueError(f"({self.re}, {self.im}) is not on the unit circle")

    def as_gauss(self) -> GaussRational:
        return GaussRational(self.re, self.im)

    def conjugate(self) -> "CirclePoint":
        return CirclePoint(self.re, -self.im)

    @property
    def z(self) -> Fraction:
        """Trace coordinate ``omega + 1/omega``."""
        return 2 * self.re

    def __str__(self):
        return f"{self.re} + {self.im}*i" if self.im >= 0 else f"{self.re} - {-self.im}*i"


def circle_point(s) -> CirclePoint:
    """Rational point ``((1 - s^2) + 2 s i) / (1 + s^2)``; ``s = 0`` gives 1 and ``s = 1`` gives i."""
    s = Fraction(s)
    d = 1 + s * s
    return CirclePoint((1 - s * s) / d, 2 * s / d)


MINUS_ONE = CirclePoint(-1, 0)


@dataclass(frozen=True)
class CertifiedInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval with lo > hi")

    @classmethod
    def point(cls, x) -> "CertifiedInterval":
        return cls(x, x)

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other: "CertifiedInterval") -> "CertifiedInterval":
        return CertifiedInterval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "CertifiedInterval":
        return CertifiedInterval(-self.hi, -self.lo)

    def scale(self, k) -> "CertifiedInterval":
        a, b = self.lo * k, self.hi * k
        return CertifiedInterval(min(a, b), max(a, b))

    def disjoint(self, other: "CertifiedInterval") -> bool:
        return self.hi < other.lo or other.hi < self.lo

    def issubset(self, other: "CertifiedInterval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self):
        if self.exact:
            return _fmt(self.lo)
        return f"[{_fmt(self.lo)}, {_fmt(self.hi)}]"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------ signatures
def hermitian_matrix(V: SeifertMatrix, omega: CirclePoint) -> list[list[GaussRational]]:
    """``(1 - omega) V + (1 - conj(omega)) V^T``."""
    w = omega.as_gauss()
    a, b = 1 - w, 1 - w.conjugate()
    rows = V.rows
    n = V.size
    return [[a * rows[i][j] + b * rows[j][i] for j in range(n)] for i in range(n)]


def lt_signature_at(V: SeifertMatrix, omega: CirclePoint) -> int:
    """Levine-Tristram signature at a rational point of the circle.

    Raises :class:`AtUnity` at ``omega = 1`` and :class:`AtRoot` where the
    Alexander polynomial vanishes (the matrix is singular there).
    """
    if omega.re == 1:
        raise AtUnity("signature is not evaluated at omega = 1")
    pos, neg, zero = hermitian_inertia(hermitian_matrix(V, omega))
    if zero:
        raise AtRoot(f"Alexander polynomial vanishes at omega = {omega}")
    return pos - neg


def ordinary_signature(V: SeifertMatrix) -> int:
    """Signature of ``V + V^T``."""
    n = V.size
    return signature([[V.rows[i][j] + V.rows[j][i] for j in range(n)] for i in range(n)])


# ------------------------------------------------------- theta intervals
def _mpf_to_fraction(t) -> Fraction:
    sign, man, exp, _ = t
    v = Fraction(int(man)) * (Fraction(2) ** exp)
    return -v if sign else v


def _theta_enclosure(z: Fraction, prec: int) -> tuple[Fraction, Fraction]:
    ctx = MPIntervalContext()
    ctx.prec = prec
    x = ctx.mpf(z.numerator) / z.denominator / 2
    y = ctx.sqrt(1 - x * x)
    th = ctx.atan2(y, x) / (2 * ctx.pi)
    lo, hi = th._mpi_
    return _mpf_to_fraction(lo), _mpf_to_fraction(hi)


def theta_of_z(r: RootInterval, prec: int = 80) -> CertifiedInterval:
    """Certified ``arccos(z/2) / (2 pi)`` over ``z`` in ``r`` (decreasing in ``z``)."""
    if r.exact and r.lo in NIVEN_THETA:
        return CertifiedInterval.point(NIVEN_THETA[r.lo])
    lo, _ = _theta_enclosure(r.hi, prec)
    _, hi = _theta_enclosure(r.lo, prec)
    return CertifiedInterval(lo, hi)


# --------------------------------------------------------------- profile
@dataclass
class SignatureProfile:
    """Piecewise-constant signature function on the circle.

    ``cut_points`` are certified ``theta`` intervals in (0, 1), ascending.
    ``arc_values[0]`` is the arc through ``theta = 0``; ``arc_values[i]``
    for ``i >= 1`` is the arc from cut ``i - 1`` to cut ``i``.  With no
    cuts there is a single arc covering the circle.
    """

    cut_points: list[CertifiedInterval]
    arc_values: list[int]
    exact_cuts: list[Fraction | None]
    upper_values: list[int] = field(repr=False)
    z_roots: list[RootInterval] = field(repr=False, compare=False)
    trace_poly: object = field(repr=False, compare=False)

    @property
    def num_arcs(self) -> int:
        return len(self.arc_values)

    def arc_bounds(self, i: int) -> tuple[CertifiedInterval | None, CertifiedInterval | None]:
        """Start and end cuts of arc ``i`` (``None`` when there are no cuts)."""
        m = len(self.cut_points)
        if not m:
            return None, None
        return self.cut_points[i - 1], self.cut_points[i % m]

    def rows(self) -> list[dict]:
        """Arc table: one row per arc with certified endpoints in ``theta``."""
        m = len(self.cut_points)
        out = []
        for i, v in enumerate(self.arc_values):
            if not m:
                out.append({"arc": 0, "from": "0", "to": "1", "signature": v})
                continue
            a, b = self.arc_bounds(i)
            out.append({"arc": i, "from": str(a), "to": str(b), "signature": v})
        return out

    def _upper_gap(self, i: int) -> tuple[Fraction, Fraction, int]:
        """z-gap and half-plane sign for arc ``i`` (``+1`` upper, ``-1`` lower, ``0`` either)."""
        zs = sorted(self.z_roots, key=lambda r: r.lo, reverse=True)  # theta ascending
        m = len(zs)
        if m == 0:
            return Fraction(-2), Fraction(2), 0
        if i == 0:
            return zs[0].hi, Fraction(2), 0
        if i < m:
            return zs[i].hi, zs[i - 1].lo, 1
        if i == m:
            return Fraction(-2), zs[m - 1].lo, 0
        j = 2 * m - i
        return zs[j].hi, zs[j - 1].lo, -1

    def sample_points(self, i: int, count: int, rng: random.Random) -> list[CirclePoint]:
        """``count`` random rational points strictly inside arc ``i``."""
        lo, hi, half = self._upper_gap(i)
        pts = []
        for _ in range(count):
            a = lo + (hi - lo) * Fraction(rng.randint(1, 999), 1000)
            b = lo + (hi - lo) * Fraction(rng.randint(1, 999), 1000)
            a, b = min(a, b), max(a, b)
            if a == b:
                b = a + (hi - a) / 2
            p = _point_with_z_in(a, b)
            flip = half < 0 or (half == 0 and rng.random() < 0.5)
            pts.append(p.conjugate() if flip else p)
        return pts

    def value_at_theta(self, theta) -> int:
        """Signature at ``theta`` if it lies certifiably inside an arc."""
        theta = Fraction(theta) % 1
        m = len(self.cut_points)
        if not m:
            return self.arc_values[0]
        for i, c in enumerate(self.cut_points):
            if theta in c:
                raise AtRoot(f"theta = {theta} is not separated from a jump point")
        for i in range(1, m):
            if self.cut_points[i - 1].hi < theta < self.cut_points[i].lo:
                return self.arc_values[i]
        return self.arc_values[0]


def _z_of_s(s: Fraction) -> Fraction:
    return 2 * (1 - s * s) / (1 + s * s)


def _point_with_z_in(a: Fraction, b: Fraction) -> CirclePoint:
    """Rational upper-half circle point with trace in the open interval ``(a, b)``; -2 <= a < b <= 2."""
    if a < -2 + Fraction(0) or b > 2:
        raise ValueError("trace interval outside [-2, 2]")
    s_lo, s_hi = Fraction(0), Fraction(1)
    while _z_of_s(s_hi) >= b:
        s_lo, s_hi = s_hi, s_hi * 2
    # z(s_lo) >= b > z(s_hi); now search for z(s) in (a, b)
    while True:
        z = _z_of_s(s_hi)
        if a < z < b:
            return circle_point(s_hi)
        mid = (s_lo + s_hi) / 2
        zm = _z_of_s(mid)
        if a < zm < b:
            return circle_point(mid)
        if zm >= b:
            s_lo = mid
        else:
            s_hi = mid


def signature_profile(V: SeifertMatrix, width=None) -> SignatureProfile:
    """Arc decomposition of ``omega -> sigma_omega(V)``.

    ``width`` bounds the width of the z-isolating intervals (default: as
    produced by isolation).
    """
    delta = alexander_poly(V)
    p = trace_polynomial(delta)
    iso = _Isolator(p)
    roots: list[RootInterval] = []
    if not iso.sqfree.is_constant():
        pts = [Fraction(-2), *NIVEN_Z, Fraction(2)]
        for k, (lo, hi) in enumerate(zip(pts, pts[1:])):
            if k and iso.value(lo) == 0:
                roots.append(RootInterval(lo, lo))
            roots.extend(iso.isolate(lo, hi))
    roots.sort(key=lambda r: r.lo, reverse=True)  # theta ascending
    if width is not None:
        roots = [iso.refine(r, Fraction(width)) for r in roots]
    roots = _separate(iso, roots)
    m = len(roots)

    # upper-half arcs: 0 = (0, c1), i = (c_i, c_{i+1}), m = (c_m, 1/2)
    upper: list[int] = []
    for i in range(m + 1):
        if i == m:
            upper.append(lt_signature_at(V, MINUS_ONE))
            continue
        hi = Fraction(2) if i == 0 else roots[i - 1].lo
        lo = roots[i].hi
        upper.append(lt_signature_at(V, _point_with_z_in(lo, hi)))

    thetas = [theta_of_z(r) for r in roots]
    exact = [NIVEN_THETA.get(r.lo) if r.exact else None for r in roots]
    cuts = thetas + [CertifiedInterval(1 - c.hi, 1 - c.lo) for c in reversed(thetas)]
    exact_cuts = exact + [None if e is None else 1 - e for e in reversed(exact)]
    if m:
        arcs = upper[: m + 1] + list(reversed(upper[1:m]))
    else:
        arcs = [upper[0]]
    return SignatureProfile(cuts, arcs, exact_cuts, upper, roots, p)


def _separate(iso: _Isolator, roots: list[RootInterval]) -> list[RootInterval]:
    """Shrink isolating intervals until they are pairwise apart and inside (-2, 2)."""
    roots = list(roots)
    changed = True
    while changed:
        changed = False
        if roots and roots[0].hi >= 2:
            roots[0] = iso.refine(roots[0], roots[0].width / 2)
            changed = True
        if roots and roots[-1].lo <= -2:
            roots[-1] = iso.refine(roots[-1], roots[-1].width / 2)
            changed = True
        for k in range(len(roots) - 1):
            upper, lower = roots[k], roots[k + 1]  # upper.lo >= lower.hi
            if upper.lo <= lower.hi:
                w = max(upper.width, lower.width) / 2
                roots[k] = iso.refine(upper, w) if not upper.exact else upper
                roots[k + 1] = iso.refine(lower, w) if not lower.exact else lower
                changed = True
    return roots


def _integral_enclosure(profile: SignatureProfile, roots: list[RootInterval], prec: int) -> CertifiedInterval:
    # integral = sigma_m + 2 * sum_i c_i (sigma_{i-1} - sigma_i), c_i the upper cuts
    up = profile.upper_values
    total = CertifiedInterval.point(up[-1])
    for i, r in enumerate(roots, start=1):
        k = 2 * (up[i - 1] - up[i])
        if k:
            total = total + theta_of_z(r, prec).scale(k)
    return total


def _round_outward(x: CertifiedInterval, bits: int) -> CertifiedInterval:
    """Widen to endpoints with denominator ``2^bits`` (adds at most ``2^(1-bits)``)."""
    scale = 1 << bits
    lo = Fraction((x.lo * scale).__floor__(), scale)
    hi = Fraction((x.hi * scale).__ceil__(), scale)
    return CertifiedInterval(lo, hi)


def signature_integral(V: SeifertMatrix, eps=Fraction(1, 10**6), profile: SignatureProfile | None = None) -> CertifiedInterval:
    """Certified enclosure of the integral of ``sigma_omega`` over the circle of length 1.

    The result has width below ``eps`` and is a point whenever every
    jump with nonzero size sits at an exact (Niven) position.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if profile is None:
        profile = signature_profile(V)
    roots = list(profile.z_roots)
    iso = _Isolator(profile.trace_poly)
    bits = (1 / eps).__ceil__().bit_length() + 3
    prec = 64 + bits
    while True:
        enc = _integral_enclosure(profile, roots, prec)
        if enc.exact:
            return enc
        if enc.width < eps / 2:
            return _round_outward(enc, bits)
        roots = [r if r.exact else iso.refine(r, r.width / 16) for r in roots]
        prec += 8
