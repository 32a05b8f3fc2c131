"""Parametric and equivariant Gromov-Witten invariants of ruled surfaces.

The circle action H_k on Sigma_g x S^2 gives fibrations over CP^p whose
parametric invariants in the section class A - kF assemble into an
equivariant invariant, a polynomial in the degree-2 class u of BS^1.
Everything here is closed form; nothing counts curves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import TheoremViolation
from .ruledtop import (
    CurveBundle,
    adjunction_c1,
    euler_number,
    rr_h0,
    section_class,
    serre_dual_bundle,
    tautological_power,
)

PGWValue = Fraction

# complex dimension of the ruled surface fiber
FIBER_DIM = 2


@dataclass(frozen=True)
class GWSetup:
    g: int
    k: int
    p: int
    m: int = 0

    def __post_init__(self):
        if self.g < 0:
            raise ValueError("genus must be non-negative")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.p < 0:
            raise ValueError("p must be non-negative")
        if self.m < 0:
            raise ValueError("the number of marked points must be non-negative")


def index(s: GWSetup) -> int:
    """Virtual dimension of the moduli space over CP^p, in the class A - kF."""
    c1 = adjunction_c1(section_class(s.k), s.g)
    return 2 * (FIBER_DIM - 3) * (1 - s.g) + 2 * c1 + 2 * s.m + 2 * s.p


def admissible_p(g: int, k: int) -> int:
    """The only base dimension p where the invariant can be nonzero."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return 2 * k + g - 1


def obstruction_rank(g: int, k: int) -> int:
    """Rank of the cokernel bundle, H^1 of the normal bundle O(-2k)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g == 0:
        return rr_h0(CurveBundle(0, 2 * k - 2))
    return rr_h0(serre_dual_bundle(CurveBundle(g, -2 * k)))


@dataclass(frozen=True)
class EquivariantInvariant:
    """A polynomial in u (degree 2) with rational coefficients."""

    coefficients: Mapping[int, Fraction] = field(default_factory=dict)
    sign_determined: bool = True

    def __post_init__(self):
        clean = {}
        for e, c in self.coefficients.items():
            if e < 0:
                raise ValueError("exponents of u must be non-negative")
            c = Fraction(c)
            if c:
                clean[int(e)] = c
        object.__setattr__(self, "coefficients", dict(sorted(clean.items())))

    def __eq__(self, other):
        if not isinstance(other, EquivariantInvariant):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(tuple(self.coefficients.items()))

    @property
    def exponent(self) -> int:
        if len(self.coefficients) != 1:
            raise ValueError("not a single term")
        return next(iter(self.coefficients))

    @property
    def magnitude(self) -> Fraction:
        return abs(self.coefficients[self.exponent])

    @property
    def cohomological_degree(self) -> int | None:
        return 2 * self.exponent if len(self.coefficients) == 1 else None

    def __str__(self):
        if not self.coefficients:
            return "0"
        out = []
        for n, (e, c) in enumerate(self.coefficients.items()):
            a = abs(c)
            mon = "1" if e == 0 else ("u" if e == 1 else f"u^{e}")
            coeff = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
            body = coeff if mon == "1" else (mon if a == 1 else f"{coeff}*{mon}")
            if n == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(out)


def egw_ruled(g: int, k: int) -> EquivariantInvariant:
    """EGW of Sigma_g x S^2 under H_k in class A - kF, genus g, no marked points.

    Only one level survives, p = 2k + g - 1, where the moduli space is CP^p
    and the obstruction bundle is O(-1)^p.  The invariant is its Euler
    number; the overall sign depends on a weight convention and is reported
    as undetermined.
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    p = admissible_p(g, k)
    rank = obstruction_rank(g, k)
    if rank != p:
        raise TheoremViolation(f"obstruction rank {rank} != base dimension {p} for g={g}, k={k}")
    if index(GWSetup(g, k, p)) != 0:
        raise TheoremViolation(f"index does not vanish at p={p} for g={g}, k={k}")
    value = Fraction(euler_number(tautological_power(rank)))
    return EquivariantInvariant({p: value}, sign_determined=False)


def egw_series(per_level: Mapping[int, PGWValue]) -> EquivariantInvariant:
    """Assemble level-p parametric invariants into sum PGW_p * u^p."""
    return EquivariantInvariant(dict(per_level))


def pgw_sum(q1: PGWValue, q2: PGWValue) -> PGWValue:
    """Invariant of a fiber connected sum."""
    return Fraction(q1) + Fraction(q2)


def pgw_cover(q: PGWValue, N: int) -> PGWValue:
    """Invariant of the base of an N-fold cover, given that of the pullback."""
    if N < 1:
        raise ValueError("cover degree must be at least 1")
    return N * Fraction(q)
