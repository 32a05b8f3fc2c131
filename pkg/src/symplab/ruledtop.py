"""Topology of the ruled surfaces Sigma_g x S^2 and of line bundles on curves.

Homology classes are written ``a*A + b*F`` with ``A = [Sigma_g x pt]`` and
``F = [pt x S^2]``; on the product ``A.A = F.F = 0`` and ``A.F = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod


@dataclass(frozen=True)
class SurfaceClass:
    a: int
    b: int

    def __add__(self, other: SurfaceClass) -> SurfaceClass:
        return SurfaceClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: SurfaceClass) -> SurfaceClass:
        return SurfaceClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> SurfaceClass:
        return SurfaceClass(-self.a, -self.b)

    def __mul__(self, n: int) -> SurfaceClass:
        return SurfaceClass(n * self.a, n * self.b)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.a}A{self.b:+d}F"


BASE = SurfaceClass(1, 0)
FIBER = SurfaceClass(0, 1)


def section_class(k: int) -> SurfaceClass:
    """The class A - kF of the zero section of O(-2k) in the k-th circle action."""
    return SurfaceClass(1, -k)


def intersect(c1: SurfaceClass, c2: SurfaceClass) -> int:
    return c1.a * c2.b + c2.a * c1.b


def adjunction_c1(D: SurfaceClass, g: int) -> int:
    """c_1 evaluated on an embedded genus-g curve in class D."""
    return intersect(D, D) + 2 - 2 * g


@dataclass(frozen=True)
class CurveBundle:
    genus: int
    degree: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be non-negative")


def rr_h0(L: CurveBundle) -> int:
    """h^0 of a line bundle, outside the special range 0 <= deg <= 2g-2.

    On P^1 this is ``max(deg + 1, 0)``.  For g >= 1 negative degrees give 0
    and degrees above 2g-2 give ``deg - g + 1``.
    """
    g, d = L.genus, L.degree
    if g == 0:
        return max(d + 1, 0)
    if d < 0:
        return 0
    if d <= 2 * g - 2:
        raise ValueError(f"special range not supported: degree {d} on genus {g}")
    return d - g + 1


def serre_dual_bundle(L: CurveBundle) -> CurveBundle:
    """K tensor L^*, so that H^1(L)^* = H^0(K tensor L^*)."""
    return CurveBundle(L.genus, 2 * L.genus - 2 - L.degree)


@dataclass(frozen=True)
class SplitBundleOverCP:
    base_dim: int
    chern_roots: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chern_roots", tuple(self.chern_roots))
        if self.base_dim < 0:
            raise ValueError("base dimension must be non-negative")

    @property
    def rank(self) -> int:
        return len(self.chern_roots)

    def __add__(self, other: SplitBundleOverCP) -> SplitBundleOverCP:
        """Roots concatenated over a base of the summed dimension."""
        return SplitBundleOverCP(self.base_dim + other.base_dim, self.chern_roots + other.chern_roots)


def tautological_power(p: int) -> SplitBundleOverCP:
    """O(-1)^p over CP^p."""
    return SplitBundleOverCP(p, (-1,) * p)


def chern_polynomial(E: SplitBundleOverCP) -> list[Fraction]:
    """Coefficients of the total Chern class prod(1 + r h) in Q[h]/(h^{p+1})."""
    p = E.base_dim
    coeffs = [Fraction(1)] + [Fraction(0)] * p
    for r in E.chern_roots:
        for n in range(p, 0, -1):
            coeffs[n] += r * coeffs[n - 1]
    return coeffs


def euler_number(E: SplitBundleOverCP) -> int:
    """Top Chern class evaluated on [CP^p]; the product of the roots."""
    if E.rank != E.base_dim:
        raise ValueError(
            f"Euler class not top-dimensional: rank {E.rank} over CP^{E.base_dim}"
        )
    return prod(E.chern_roots)


def stratum_codim(g: int, k: int) -> int:
    """Codimension of the stratum of almost complex structures with an (A - kF)-curve."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g < 0:
        raise ValueError("genus must be non-negative")
    return 4 * k - 2 + 2 * g


def d0_homotopy_dim(g: int, i: int) -> int:
    """Rank of pi_i of the fiber-preserving diffeomorphism group of Sigma_g x S^2."""
    if g < 0 or i < 0:
        raise ValueError("genus and degree must be non-negative")
    if i == 1 and g == 1:
        return 3
    if i == 3 and g == 0:
        return 2
    if i in (0, 1, 3):
        return 1
    if i == 2:
        return 2 * g
    return 0
