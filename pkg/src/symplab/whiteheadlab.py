"""Rational Whitehead products in BG for the symplectomorphism group of S^2 x S^2.

For ``k < lambda <= k+1`` the rational homotopy of BG is spanned by
``A~`` (degree 2), ``X~``, ``Y~`` (degree 4) and ``W~_k`` (degree 4k+1).
The k circle actions force order-(k+1) products of type (1, k) to vanish
along k directions; that pins down the Sullivan differential
``dW = A (X - Y)(X - 4Y) ... (X - k^2 Y)`` and so the cohomology ring.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import _linalg
from .errors import TheoremViolation
from .exactalg import (
    Generator,
    GradedAlgebra,
    GradedPolynomial,
    PoincareSeries,
    quotient_dims,
)
from .sullivan import MinimalModel, cohomology_dims

RING = GradedAlgebra({"A": 2, "X": 4, "Y": 4})

# number of elements in the order-(2k+1) Samelson product set {0, w_k}
FRAGILE_SET_SIZE = 2


@dataclass(frozen=True)
class HomotopyElement:
    name: str
    degree: int

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError(f"{self.name}: classes in BG have degree >= 2")


def homotopy_generators(k: int) -> tuple[HomotopyElement, ...]:
    """Basis of pi_*(BG) tensor Q in the range k < lambda <= k+1 (k >= 1)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return (
        HomotopyElement("A", 2),
        HomotopyElement("X", 4),
        HomotopyElement("Y", 4),
        HomotopyElement("W", 4 * k + 1),
    )


def model_generators(k: int) -> GradedAlgebra:
    """Generators of the minimal model of BG, dual to :func:`homotopy_generators`."""
    return GradedAlgebra({"A": 2, "X": 4, "Y": 4, "W": 4 * k + 1})


def group_generators(k: int) -> GradedAlgebra:
    """Generators of H^*(G): each classifying-space degree shifted down by one."""
    return GradedAlgebra(
        [Generator(g.name.lower(), g.degree - 1) for g in model_generators(k).generators]
    )


@dataclass(frozen=True)
class WhiteheadType:
    """A product with ``p`` copies of A~ and ``s`` degree-4 entries."""

    p: int
    s: int

    def __post_init__(self):
        if self.p < 0 or self.s < 0:
            raise ValueError("slot counts must be non-negative")

    @property
    def order(self) -> int:
        return self.p + self.s

    @property
    def target_degree(self) -> int:
        return bracket_degree([2] * self.p + [4] * self.s)


def bracket_degree(degrees: list[int]) -> int:
    """Degree of an order-r Whitehead product of classes of the given degrees.

    The product is an obstruction on the fat wedge of spheres S^{d_i}, so it
    lives in degree ``sum(d_i) - 1`` regardless of the order.
    """
    if len(degrees) < 2:
        raise ValueError("a Whitehead product needs at least two entries")
    if any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive")
    return sum(degrees) - 1


def iterated_bracket_degree(degrees: list[int]) -> int:
    """Degree of nested binary products ``[[x1, x2], x3] ...``: sum - (r - 1).

    Agrees with :func:`bracket_degree` only for two entries.
    """
    if len(degrees) < 2:
        raise ValueError("a Whitehead product needs at least two entries")
    return sum(degrees) - (len(degrees) - 1)


def samelson_degree(whitehead_degree: int) -> int:
    if whitehead_degree < 2:
        raise ValueError("Whitehead degree must be at least 2")
    return whitehead_degree - 1


def action_direction(i: int) -> GradedPolynomial:
    """The degree-4 class X + i^2 Y along which the i-th circle action kills products."""
    if i < 1:
        raise ValueError("i must be at least 1")
    X, Y = RING.gen("X"), RING.gen("Y")
    return X + i * i * Y


@dataclass(frozen=True)
class ActionRelation:
    """gamma_k = multiple * gamma_1 in pi_1 tensor Q (torsion discarded)."""

    genus: int
    k: int
    multiple: Fraction
    group: str

    def to_json(self) -> str:
        d = asdict(self)
        d["multiple"] = str(self.multiple)
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> ActionRelation:
        d = json.loads(text)
        return cls(d["genus"], d["k"], Fraction(d["multiple"]), d["group"])


def circle_action_relation(g: int, k: int, lam: Fraction | None = None) -> ActionRelation:
    """Rational relation between the k-th and first circle actions.

    Without ``lam`` the relation is in the fiber-preserving diffeomorphism
    group; with ``lam`` it is in the symplectomorphism group, which needs
    ``lam > k > floor(g/2)``.
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    if not (g > 0 and k >= 1) and not (g == 0 and k >= 2):
        raise ValueError("needs g > 0 and k >= 1, or g = 0 and k >= 2")
    if lam is None:
        return ActionRelation(g, k, Fraction(k), "D0")
    lam = Fraction(lam)
    if not (lam > k > g // 2):
        raise ValueError(f"needs lambda > k > floor(g/2), got lambda={lam}, k={k}, g={g}")
    return ActionRelation(g, k, Fraction(k), "G")


@dataclass(frozen=True)
class WhiteheadConstraintSystem:
    """Linear conditions on c_0..c_k, where F = A * sum c_j X^(k-j) Y^j.

    The first k rows say F vanishes on the i-th action direction, the last
    row normalizes ``F(A~, X~, ..., X~)``, i.e. ``c_0 = 1``.
    """

    k: int
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    @property
    def interpolation_rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self.rows[: self.k]


def action_node(i: int) -> tuple[int, int]:
    """Point (X, Y) at which the i-th direction evaluates the form.

    The i-th circle action contributes alpha~ + i^2 eta~ in pi_3 G, and
    X~, Y~ suspend eta~, alpha~ respectively, so the direction has
    coordinate i^2 on X~ and 1 on Y~.
    """
    if i < 1:
        raise ValueError("i must be at least 1")
    return i * i, 1


def build_constraints(k: int) -> WhiteheadConstraintSystem:
    if k < 0:
        raise ValueError("k must be non-negative")
    rows = []
    for i in range(1, k + 1):
        x, y = action_node(i)
        rows.append(tuple(Fraction(x ** (k - j) * y**j) for j in range(k + 1)))
    rows.append(tuple(Fraction(int(j == 0)) for j in range(k + 1)))
    rhs = (Fraction(0),) * k + (Fraction(1),)
    return WhiteheadConstraintSystem(k, tuple(rows), rhs)


def constraint_determinant(k: int) -> Fraction:
    return _linalg.determinant(build_constraints(k).rows)


def form_polynomial(coeffs) -> GradedPolynomial:
    """A * sum c_j X^(k-j) Y^j for coefficients c_0..c_k."""
    k = len(coeffs) - 1
    return GradedPolynomial(RING, {(1, k - j, j): c for j, c in enumerate(coeffs)})


def solve_relation(k: int) -> GradedPolynomial:
    """The relation F_{k+1}, solved from the constraint system.

    The interpolation rows alone must have a one-dimensional kernel on which
    c_0 does not vanish; otherwise the relation would not be unique.
    """
    system = build_constraints(k)
    kernel = _linalg.nullspace(system.interpolation_rows, ncols=k + 1)
    if len(kernel) != 1:
        raise TheoremViolation(f"solution space has dimension {len(kernel)} for k={k}")
    v = kernel[0]
    if v[0] == 0:
        raise TheoremViolation(f"normalization c_0 = 1 is impossible for k={k}")
    coeffs = [c / v[0] for c in v]
    for row, b in zip(system.rows, system.rhs):
        if sum(a * c for a, c in zip(row, coeffs)) != b:
            raise TheoremViolation(f"solution does not satisfy the system for k={k}")
    return form_polynomial(coeffs)


def expanded_relation(k: int) -> GradedPolynomial:
    """A (X - Y)(X - 4Y) ... (X - k^2 Y) by direct multiplication."""
    if k < 0:
        raise ValueError("k must be non-negative")
    A, X, Y = RING.gens()
    out = A
    for i in range(1, k + 1):
        out = out * (X - i * i * Y)
    return out


@dataclass(frozen=True)
class Candidate:
    type: WhiteheadType
    excluded: bool
    reason: str


def minimal_type_candidates(k: int) -> list[Candidate]:
    """All (p, s) with p, s >= 1 and 2p + 4s = 4k + 2, with the filter verdict.

    A type (p, s) product is a degree-s form in the direction parameter b
    that vanishes at the k values b = 1, 4, ..., k^2; if k > s all its
    coefficients vanish.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for s in range(1, k + 1):
        t = WhiteheadType(2 * k + 1 - 2 * s, s)
        if k > s:
            out.append(Candidate(t, True, f"k > s ({k} > {s}): degree-{s} form with {k} roots vanishes"))
        else:
            out.append(Candidate(t, False, "survives"))
    return out


def minimal_type(k: int) -> WhiteheadType:
    survivors = [c.type for c in minimal_type_candidates(k) if not c.excluded]
    if len(survivors) != 1:
        raise TheoremViolation(f"expected exactly one surviving type for k={k}, got {survivors}")
    return survivors[0]


def relation_model(k: int) -> MinimalModel:
    """Model of BG: generators A, X, Y closed and dW = F_{k+1}.

    For k = 0 the differential dW = A is linear, so the model is free but
    not minimal; its cohomology is still S(X, Y).
    """
    alg = model_generators(k) if k >= 1 else GradedAlgebra({"A": 2, "X": 4, "Y": 4, "W": 1})
    relation = solve_relation(k).embed(alg)
    return MinimalModel(alg, {"W": relation}, require_minimal=k >= 1)


@dataclass(frozen=True)
class RingPresentation:
    k: int
    generators: GradedAlgebra
    relation: GradedPolynomial
    series: PoincareSeries
    model: MinimalModel
    model_series: PoincareSeries


def ring_presentation(k: int, cap: int = 20) -> RingPresentation:
    """H^*(BG; Q) = S(A, X, Y) / (F_{k+1}), checked against the Sullivan model."""
    relation = solve_relation(k)
    series = quotient_dims(RING, relation, cap)
    model = relation_model(k)
    model_series = cohomology_dims(model, cap)
    if model_series != series:
        raise TheoremViolation(
            f"quotient ring {series.as_list()} disagrees with model cohomology {model_series.as_list()}"
        )
    return RingPresentation(k, RING, relation, series, model, model_series)


@dataclass(frozen=True)
class SamelsonReport:
    genus: int
    k: int
    orders: tuple[int, ...]
    degrees: tuple[int, ...]


def samelson_order_report(g: int, k: int) -> SamelsonReport:
    """Orders and homotopy degrees of the nontrivial Samelson products of circle classes.

    Degrees are ``samelson_degree(bracket_degree([2] * order)) = 2 order - 2``.
    """
    if g < 0:
        raise ValueError("genus must be non-negative")
    if k < 1:
        raise ValueError("k must be at least 1")
    if g == 0:
        orders: tuple[int, ...] = (2 * k + 1,)
    elif g == 1:
        if k != 1:
            raise ValueError("for genus 1 only k = 1 is covered")
        orders = (2,)
    else:
        if k <= g // 2:
            raise ValueError(f"needs k > floor(g/2) = {g // 2}, got k={k}")
        orders = tuple(range(g, 2 * k + g))
    degrees = tuple(samelson_degree(bracket_degree([2] * r)) for r in orders)
    return SamelsonReport(g, k, orders, degrees)
