"""Certified comparison of the infected knots ``K(eta, J1)`` and ``K(eta, J2)``.

For a nontrivial fibered base knot ``K`` the commutator subgroup of the
knot group is free of rank ``k = 2 genus``, and ``G^(n) = F_k^(n-1)``
for ``n >= 1``.  When ``eta`` lies in ``G^(n) \\ G^(n+1)`` and the
infecting knots have isomorphic Alexander modules, the Alexander modules
of the two infected knots agree through order ``n`` and their linking
forms agree below order ``n``.  Unequal signature integrals of ``J1`` and
``J2`` then force the order-``n`` linking forms apart.  The converse is
not claimed: a failed test is reported as ``Inconclusive``.
"""

from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .alexander import alexander_poly, invariant_factors, presentation
from .errors import InvalidEta, NotFibered, RankMismatch
from .seifert import FIBERED, SeifertMatrix, catalog, inverse
from .signatures import CertifiedInterval, signature_integral
from .solvable import FreeWord, in_derived

__all__ = [
    "FiberedKnotRecord",
    "InfectionSpec",
    "Verdict",
    "Distinction",
    "validate_eta",
    "modules_agree",
    "verdict",
]

CITATIONS = {
    "eta": "eta in pi_1(E(K))^(n) and not in pi_1(E(K))^(n+1); for fibered K, pi_1(E(K))^(1) is free of rank 2g",
    "modules": "A_n(K(eta,J)) = A_n(K) + (A_0(J) tensor Z Gamma_n); lower modules A_i agree for 0 <= i <= n",
    "lower_forms": "infection induces isomorphisms of the i-th order linking forms for 0 <= i <= n-1",
    "integral": "reduced L2-signature of (W_J, Z) equals the integral of Levine-Tristram signatures of J over the circle of unit length",
    "main": "isomorphic Bl_n forces equal signature integrals of J1 and J2; unequal integrals distinguish Bl_n",
}


class Distinction(str, enum.Enum):
    DISTINGUISHED = "Distinguished"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class FiberedKnotRecord:
    """A nontrivial fibered knot, asserted by the caller; ``fiber_rank`` is ``2 genus``."""

    seifert: SeifertMatrix
    fiber_rank: int
    name: str = "K"

    def __post_init__(self):
        if self.fiber_rank != self.seifert.size:
            raise NotFibered(f"fiber rank {self.fiber_rank} must equal Seifert matrix size {self.seifert.size}")
        if self.fiber_rank < 2:
            raise NotFibered("the unknot is excluded: fiber rank must be at least 2")
        delta = alexander_poly(self.seifert)
        if abs(delta.leading_coeff()) != 1:
            raise NotFibered(f"{self.name}: Alexander polynomial {delta} is not monic")

    @classmethod
    def from_matrix(cls, V: SeifertMatrix, name: str = "K") -> "FiberedKnotRecord":
        return cls(V, V.size, name)

    @classmethod
    def from_catalog(cls, name: str) -> "FiberedKnotRecord":
        V = catalog(name)
        if name not in FIBERED:
            raise NotFibered(f"{name} is not recorded as fibered")
        return cls(V, V.size, name)


@dataclass(frozen=True)
class InfectionSpec:
    base: FiberedKnotRecord
    eta: FreeWord
    n: int
    infectors: tuple[SeifertMatrix, SeifertMatrix]
    names: tuple[str, str] = ("J1", "J2")

    def __post_init__(self):
        if self.n < 1:
            raise InvalidEta("order n must be at least 1")
        if self.eta.rank != self.base.fiber_rank:
            raise RankMismatch(f"eta has rank {self.eta.rank}, fiber group has rank {self.base.fiber_rank}")


@dataclass
class Verdict:
    eta_valid: bool
    modules_agree_through_n: bool
    lower_forms_agree: bool
    bln_distinguished: Distinction
    rho1: CertifiedInterval
    rho2: CertifiedInterval
    factors1: list[str]
    factors2: list[str]
    n: int
    eta: str
    notes: list[str] = field(default_factory=list)

    @property
    def distinguished(self) -> bool:
        return self.bln_distinguished is Distinction.DISTINGUISHED

    def to_json(self) -> dict:
        return {
            "eta_valid": self.eta_valid,
            "modules_agree_through_n": self.modules_agree_through_n,
            "lower_forms_agree": self.lower_forms_agree,
            "bln_distinguished": self.bln_distinguished.value,
            "n": self.n,
            "eta": self.eta,
            "evidence": {
                "rho1": _interval_json(self.rho1),
                "rho2": _interval_json(self.rho2),
                "invariant_factors_j1": self.factors1,
                "invariant_factors_j2": self.factors2,
                "citations": dict(CITATIONS),
                "notes": list(self.notes),
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "Verdict":
        ev = data["evidence"]
        return cls(
            eta_valid=data["eta_valid"],
            modules_agree_through_n=data["modules_agree_through_n"],
            lower_forms_agree=data["lower_forms_agree"],
            bln_distinguished=Distinction(data["bln_distinguished"]),
            rho1=_interval_from_json(ev["rho1"]),
            rho2=_interval_from_json(ev["rho2"]),
            factors1=list(ev["invariant_factors_j1"]),
            factors2=list(ev["invariant_factors_j2"]),
            n=data["n"],
            eta=data["eta"],
            notes=list(ev["notes"]),
        )


def _interval_json(x: CertifiedInterval) -> dict:
    return {"lo": _q(x.lo), "hi": _q(x.hi), "exact": x.exact, "text": str(x)}


def _interval_from_json(d: dict) -> CertifiedInterval:
    return CertifiedInterval(Fraction(d["lo"]), Fraction(d["hi"]))


def _q(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def validate_eta(spec: InfectionSpec) -> bool:
    """``eta in G^(n) \\ G^(n+1)``, i.e. ``eta in F_k^(n-1) \\ F_k^(n)``."""
    return in_derived(spec.eta, spec.n - 1) and not in_derived(spec.eta, spec.n)


def _factors(V: SeifertMatrix) -> list:
    return invariant_factors(presentation(V))


def modules_agree(spec: InfectionSpec) -> bool:
    """Rational Alexander modules of ``J1`` and ``J2`` are isomorphic."""
    j1, j2 = spec.infectors
    return _factors(j1) == _factors(j2)


def verdict(spec: InfectionSpec, eps=Fraction(1, 10**6)) -> Verdict:
    j1, j2 = spec.infectors
    eta_ok = validate_eta(spec)
    f1, f2 = _factors(j1), _factors(j2)
    agree = f1 == f2
    with ThreadPoolExecutor(max_workers=2) as pool:
        r1, r2 = pool.map(lambda V: signature_integral(V, eps), (j1, j2))
    distinct = eta_ok and agree and r1.disjoint(r2)
    notes = []
    if not eta_ok:
        notes.append(f"eta = {spec.eta} is not in G^({spec.n}) \\ G^({spec.n + 1})")
    if not agree:
        notes.append("Alexander modules of the infecting knots differ; the higher-order modules need not agree")
    if not r1.disjoint(r2):
        notes.append("signature integrals are not certifiably different at this precision")
    if j2 != inverse(j1) and j1 != inverse(j2):
        notes.append("instance is outside the literal (J, -J) form; decided by unequal integrals with isomorphic A_0")
    return Verdict(
        eta_valid=eta_ok,
        modules_agree_through_n=agree,
        lower_forms_agree=eta_ok,
        bln_distinguished=Distinction.DISTINGUISHED if distinct else Distinction.INCONCLUSIVE,
        rho1=r1,
        rho2=r2,
        factors1=[str(f) for f in f1],
        factors2=[str(f) for f in f2],
        n=spec.n,
        eta=str(spec.eta),
        notes=notes,
    )
