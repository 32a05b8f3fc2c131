"""Batch verification of every algebraic invariant the library relies on.

Each check is a pure function of ``(cap, kmax, rng)`` returning
``(passed, detail)``.  Randomized checks draw from a seeded generator so a
run is reproducible byte for byte.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable

from . import gwcalc, ruledtop, whiteheadlab
from .exactalg import GradedAlgebra, GradedPolynomial, free_series, multiply, quotient_dims
from .sullivan import MinimalModel, apply_d, cohomology_dims, verify_d_squared

SEED = 20061015
RANDOM_CASES = 120

# mixes even and odd generators so that Koszul signs are exercised
MIXED = GradedAlgebra({"a": 1, "b": 2, "c": 3, "e": 3, "f": 4, "h": 5})


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def random_homogeneous(alg: GradedAlgebra, degree: int, rng: random.Random, max_terms: int = 4) -> GradedPolynomial:
    basis = alg.basis(degree)
    if not basis:
        return alg.zero()
    picks = rng.sample(basis, min(len(basis), rng.randint(1, max_terms)))
    return GradedPolynomial(alg, {m: random_fraction(rng) for m in picks})


def random_nonzero_homogeneous(alg: GradedAlgebra, max_degree: int, rng: random.Random) -> GradedPolynomial:
    while True:
        p = random_homogeneous(alg, rng.randint(0, max_degree), rng)
        if p:
            return p


def _fail(msg: str) -> tuple[bool, str]:
    return False, msg


# -- exact algebra ------------------------------------------------------


def check_graded_commutativity(cap, kmax, rng):
    top = min(12, cap)
    for _ in range(RANDOM_CASES):
        p = random_nonzero_homogeneous(MIXED, top // 2, rng)
        q = random_nonzero_homogeneous(MIXED, top - p.degree, rng)
        sign = -1 if p.degree * q.degree % 2 else 1
        if multiply(p, q) != sign * multiply(q, p):
            return _fail(f"pq != (-1)^(|p||q|) qp for p={p}, q={q}")
    return True, f"{RANDOM_CASES} random pairs up to degree {top}"


def check_associativity_distributivity(cap, kmax, rng):
    for _ in range(RANDOM_CASES):
        p, q, r = (random_nonzero_homogeneous(MIXED, 5, rng) for _ in range(3))
        if (p * q) * r != p * (q * r):
            return _fail(f"associativity fails for {p}, {q}, {r}")
        s = random_homogeneous(MIXED, q.degree, rng)
        if p * (q + s) != p * q + p * s or (q + s) * p != q * p + s * p:
            return _fail(f"distributivity fails for {p}, {q}, {s}")
    return True, f"{RANDOM_CASES} random triples"


def check_free_series(cap, kmax, rng):
    algebras = [
        GradedAlgebra({"A": 2, "X": 4, "Y": 4}),
        MIXED,
        whiteheadlab.group_generators(max(kmax, 1)),
        whiteheadlab.model_generators(max(kmax, 1)),
    ]
    for alg in algebras:
        series = free_series(alg, cap)
        counts = [len(alg.basis(n)) for n in range(cap + 1)]
        if series.as_list() != counts:
            return _fail(f"{alg!r}: series {series.as_list()} != enumeration {counts}")
    return True, f"{len(algebras)} generator sets through degree {cap}"


def check_quotient_regularity(cap, kmax, rng):
    alg = whiteheadlab.RING
    for k in range(1, kmax + 1):
        rel = whiteheadlab.solve_relation(k)
        d = rel.degree
        free = free_series(alg, cap)
        closed = [free[n] - (free[n - d] if n >= d else 0) for n in range(cap + 1)]
        got = quotient_dims(alg, rel, cap).as_list()
        if got != closed:
            return _fail(f"k={k}: rank path {got} != closed form {closed}")
    return True, f"k=1..{kmax} through degree {cap}"


def check_rendering_roundtrip(cap, kmax, rng):
    for _ in range(RANDOM_CASES):
        p = random_homogeneous(MIXED, rng.randint(0, 10), rng, max_terms=6)
        if MIXED.parse(str(p)) != p:
            return _fail(f"{p} does not round-trip")
    return True, f"{RANDOM_CASES} random polynomials"


# -- Sullivan models ----------------------------------------------------

# odd generators in two degrees and an even generator with nonzero differential
_LEIBNIZ_MODEL = MinimalModel(
    {"a": 2, "b": 2, "t": 4, "u": 3, "v": 3, "w": 5},
    {"u": "a^2", "v": "a*b", "t": "b*u - a*v", "w": "b^3 + a^2*b"},
)


def _leibniz_models(kmax: int) -> list[MinimalModel]:
    return [_LEIBNIZ_MODEL] + [whiteheadlab.relation_model(k) for k in range(1, kmax + 1)]


def check_leibniz(cap, kmax, rng):
    top = min(12, cap)
    models = _leibniz_models(kmax)
    for n in range(RANDOM_CASES):
        m = models[n % len(models)]
        p = random_nonzero_homogeneous(m.algebra, top // 2, rng)
        q = random_nonzero_homogeneous(m.algebra, top - p.degree, rng)
        sign = -1 if p.degree % 2 else 1
        lhs = apply_d(m, p * q)
        rhs = apply_d(m, p) * q + sign * (p * apply_d(m, q))
        if lhs != rhs:
            return _fail(f"Leibniz fails in {m!r} for p={p}, q={q}")
    return True, f"{RANDOM_CASES} random pairs up to degree {top}"


def check_d_degree(cap, kmax, rng):
    models = _leibniz_models(kmax)
    for n in range(RANDOM_CASES):
        m = models[n % len(models)]
        p = random_nonzero_homogeneous(m.algebra, min(cap, 12), rng)
        dp = apply_d(m, p)
        if dp and dp.degree != p.degree + 1:
            return _fail(f"d({p}) = {dp} is not homogeneous of degree {p.degree + 1}")
    return True, f"{RANDOM_CASES} random elements"


def check_d_squared(cap, kmax, rng):
    for m in _leibniz_models(kmax):
        if not verify_d_squared(m, cap):
            return _fail(f"d^2 != 0 in {m!r}")
    for _ in range(RANDOM_CASES):
        m = _LEIBNIZ_MODEL
        p = random_nonzero_homogeneous(m.algebra, min(cap, 12), rng)
        if apply_d(m, apply_d(m, p)):
            return _fail(f"d^2({p}) != 0")
    return True, f"all basis monomials through degree {cap} plus {RANDOM_CASES} random elements"


def check_model_vs_quotient(cap, kmax, rng):
    for k in range(1, kmax + 1):
        rel = whiteheadlab.solve_relation(k)
        a = quotient_dims(whiteheadlab.RING, rel, cap)
        b = cohomology_dims(whiteheadlab.relation_model(k), cap)
        if a != b:
            return _fail(f"k={k}: quotient {a.as_list()} != model {b.as_list()}")
    return True, f"k=1..{kmax} through degree {cap}"


def check_degree_shift(cap, kmax, rng):
    for k in range(1, kmax + 1):
        bg = whiteheadlab.model_generators(k)
        g = whiteheadlab.group_generators(k)
        pairs = {x.name.lower(): x.degree for x in bg.generators}
        if any(pairs[x.name] != x.degree + 1 for x in g.generators):
            return _fail(f"degree shift broken for k={k}")
        if g.degree_of("w") != 4 * k or bg.degree_of("W") != 4 * k + 1:
            return _fail(f"W generator has the wrong degree for k={k}")
    return True, f"k=1..{kmax}"


# -- ruled surfaces -----------------------------------------------------


def _random_class(rng):
    return ruledtop.SurfaceClass(rng.randint(-20, 20), rng.randint(-20, 20))


def check_intersection_form(cap, kmax, rng):
    I = ruledtop.intersect
    for _ in range(RANDOM_CASES):
        x, y, z = (_random_class(rng) for _ in range(3))
        n = rng.randint(-7, 7)
        if I(x, y) != I(y, x):
            return _fail(f"not symmetric on {x}, {y}")
        if I(x + y, z) != I(x, z) + I(y, z) or I(n * x, z) != n * I(x, z):
            return _fail(f"not bilinear on {x}, {y}, {z}")
    return True, f"{RANDOM_CASES} random triples"


def check_serre_duality(cap, kmax, rng):
    for g in range(1, 8):
        for d in range(2 * g - 1, 2 * g + 30):
            dual = ruledtop.serre_dual_bundle(ruledtop.CurveBundle(g, d))
            if dual.degree >= 0:
                return _fail(f"dual of degree {d} on genus {g} has degree {dual.degree}")
            if ruledtop.rr_h0(dual) != 0:
                return _fail(f"h^0 of negative bundle nonzero on genus {g}")
    return True, "genus 1..7, nonspecial degrees"


def check_euler_multiplicative(cap, kmax, rng):
    for _ in range(RANDOM_CASES):
        p1, p2 = rng.randint(0, 5), rng.randint(0, 5)
        E1 = ruledtop.SplitBundleOverCP(p1, tuple(rng.randint(-3, 3) for _ in range(p1)))
        E2 = ruledtop.SplitBundleOverCP(p2, tuple(rng.randint(-3, 3) for _ in range(p2)))
        E = E1 + E2
        top = ruledtop.chern_polynomial(E)[E.base_dim]
        if ruledtop.euler_number(E) != top:
            return _fail(f"Euler number of {E} != top Chern coefficient {top}")
        if ruledtop.euler_number(E) != ruledtop.euler_number(E1) * ruledtop.euler_number(E2):
            return _fail(f"not multiplicative on {E1}, {E2}")
    return True, f"{RANDOM_CASES} random split bundles"


def check_obstruction_rank_identity(cap, kmax, rng):
    for g, k in product(range(0, 8), range(1, max(kmax, 5) + 1)):
        if g >= 1:
            got = ruledtop.rr_h0(ruledtop.serre_dual_bundle(ruledtop.CurveBundle(g, -2 * k)))
        else:
            got = ruledtop.rr_h0(ruledtop.CurveBundle(0, 2 * k - 2))
        if got != 2 * k + g - 1:
            return _fail(f"h^1(O(-2k)) = {got} != 2k+g-1 for g={g}, k={k}")
    return True, "g=0..7"


# -- Gromov-Witten ------------------------------------------------------


def _gk(kmax):
    return product(range(0, 5), range(1, kmax + 1))


def check_dimension_condition(cap, kmax, rng):
    for g, k in _gk(kmax):
        ap = gwcalc.admissible_p(g, k)
        for p in range(0, max(cap, ap) + 1):
            idx = gwcalc.index(gwcalc.GWSetup(g, k, p))
            if (idx == 0) != (p == ap):
                return _fail(f"index {idx} at g={g}, k={k}, p={p}")
            if idx % 2:
                return _fail(f"odd index {idx} at g={g}, k={k}, p={p}")
    return True, f"g=0..4, k=1..{kmax}, p=0..{cap}"


def check_rank_equals_p(cap, kmax, rng):
    for g, k in _gk(kmax):
        if gwcalc.obstruction_rank(g, k) != gwcalc.admissible_p(g, k):
            return _fail(f"rank != p at g={g}, k={k}")
    return True, f"g=0..4, k=1..{kmax}"


def check_egw_ruled(cap, kmax, rng):
    for g, k in _gk(kmax):
        inv = gwcalc.egw_ruled(g, k)
        p = 2 * k + g - 1
        if inv.exponent != p or inv.magnitude != 1:
            return _fail(f"egw({g},{k}) = {inv}")
        if inv.coefficients[p] != (-1) ** p or inv.sign_determined:
            return _fail(f"egw({g},{k}) sign convention broken")
    return True, f"g=0..4, k=1..{kmax}"


def check_pgw_linearity(cap, kmax, rng):
    for _ in range(RANDOM_CASES):
        a, b, c = (random_fraction(rng) for _ in range(3))
        N, M = rng.randint(1, 9), rng.randint(1, 9)
        if gwcalc.pgw_sum(a, b) != gwcalc.pgw_sum(b, a):
            return _fail("sum not commutative")
        if gwcalc.pgw_sum(gwcalc.pgw_sum(a, b), c) != gwcalc.pgw_sum(a, gwcalc.pgw_sum(b, c)):
            return _fail("sum not associative")
        if gwcalc.pgw_cover(gwcalc.pgw_sum(a, b), N) != gwcalc.pgw_sum(gwcalc.pgw_cover(a, N), gwcalc.pgw_cover(b, N)):
            return _fail("cover not additive")
        if gwcalc.pgw_cover(gwcalc.pgw_cover(a, N), M) != gwcalc.pgw_cover(a, N * M):
            return _fail("covers do not compose")
        if a and not gwcalc.pgw_cover(a, N):
            return _fail(f"cover of nonzero {a} vanished")
    return True, f"{RANDOM_CASES} random instances"


# -- Whitehead products -------------------------------------------------


def check_relation_roots(cap, kmax, rng):
    for k in range(0, kmax + 1):
        rel = whiteheadlab.solve_relation(k)
        for i in range(1, k + 1):
            if rel.evaluate({"A": 1, "X": i * i, "Y": 1}) != 0:
                return _fail(f"k={k}: relation does not vanish on direction {i}")
        if rel.evaluate({"A": 1, "X": 1, "Y": 0}) != 1:
            return _fail(f"k={k}: normalization broken")
        if rel != whiteheadlab.expanded_relation(k):
            return _fail(f"k={k}: solved relation differs from the product")
    return True, f"k=0..{kmax}"


def check_vandermonde(cap, kmax, rng):
    for k in range(1, max(kmax, 6) + 1):
        nodes = [i * i for i in range(1, k + 1)]
        vdm = Fraction(1)
        for a in range(k):
            for b in range(a + 1, k):
                vdm *= nodes[a] - nodes[b]
        det = whiteheadlab.constraint_determinant(k)
        if det == 0 or abs(det) != abs(vdm):
            return _fail(f"k={k}: determinant {det}, Vandermonde {vdm}")
    return True, f"k=1..{max(kmax, 6)}"


def check_minimal_type(cap, kmax, rng):
    for k in range(1, max(kmax, 6) + 1):
        cands = whiteheadlab.minimal_type_candidates(k)
        if whiteheadlab.minimal_type(k) != whiteheadlab.WhiteheadType(1, k):
            return _fail(f"k={k}: minimal type {whiteheadlab.minimal_type(k)}")
        excluded = [c for c in cands if c.excluded]
        if len(excluded) != k - 1 or any(not k > c.type.s for c in excluded):
            return _fail(f"k={k}: unexpected exclusions {excluded}")
        if any(2 * c.type.p + 4 * c.type.s != 4 * k + 2 for c in cands):
            return _fail(f"k={k}: candidate with wrong degree")
    return True, f"k=1..{max(kmax, 6)}"


def check_ring_presentation(cap, kmax, rng):
    for k in range(0, kmax + 1):
        rp = whiteheadlab.ring_presentation(k, cap)
        if rp.series != rp.model_series:
            return _fail(f"k={k}: presentations disagree")
    return True, f"k=0..{kmax} through degree {cap}"


def check_bracket_degrees(cap, kmax, rng):
    for r in range(2, 11):
        w = whiteheadlab.bracket_degree([2] * r)
        if w != 2 * r - 1 or whiteheadlab.samelson_degree(w) != 2 * r - 2:
            return _fail(f"order {r}: degree {w}")
    return True, "orders 2..10"


def check_action_relation_roundtrip(cap, kmax, rng):
    for g, k in product(range(0, 5), range(1, kmax + 2)):
        if g == 0 and k < 2:
            continue
        rel = whiteheadlab.circle_action_relation(g, k)
        back = whiteheadlab.ActionRelation.from_json(rel.to_json())
        if back != rel or back.multiple != k:
            return _fail(f"g={g}, k={k}: {rel} did not round-trip")
    return True, f"g=0..4, k=1..{kmax + 1}"


Check = Callable[[int, int, random.Random], tuple[bool, str]]

CHECKS: dict[str, Check] = {
    "exactalg.graded_commutativity": check_graded_commutativity,
    "exactalg.associativity_distributivity": check_associativity_distributivity,
    "exactalg.free_series_enumeration": check_free_series,
    "exactalg.quotient_rank_vs_closed_form": check_quotient_regularity,
    "exactalg.rendering_roundtrip": check_rendering_roundtrip,
    "sullivan.leibniz_rule": check_leibniz,
    "sullivan.d_raises_degree": check_d_degree,
    "sullivan.d_squared_zero": check_d_squared,
    "sullivan.cohomology_vs_quotient": check_model_vs_quotient,
    "sullivan.degree_shift": check_degree_shift,
    "ruledtop.intersection_form": check_intersection_form,
    "ruledtop.serre_duality_negative": check_serre_duality,
    "ruledtop.euler_multiplicative": check_euler_multiplicative,
    "ruledtop.obstruction_rank_identity": check_obstruction_rank_identity,
    "gwcalc.dimension_condition": check_dimension_condition,
    "gwcalc.rank_equals_p": check_rank_equals_p,
    "gwcalc.egw_ruled": check_egw_ruled,
    "gwcalc.pgw_linearity": check_pgw_linearity,
    "whiteheadlab.relation_roots": check_relation_roots,
    "whiteheadlab.vandermonde_nonsingular": check_vandermonde,
    "whiteheadlab.minimal_type": check_minimal_type,
    "whiteheadlab.ring_presentation": check_ring_presentation,
    "whiteheadlab.bracket_degrees": check_bracket_degrees,
    "whiteheadlab.action_relation_roundtrip": check_action_relation_roundtrip,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def verify_all(cap: int, kmax: int) -> list[CheckResult]:
    if cap < 10:
        raise ValueError("cap must be at least 10")
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    results = []
    for name, fn in sorted(CHECKS.items()):
        rng = random.Random(f"{SEED}:{name}")
        try:
            passed, detail = fn(cap, kmax, rng)
        except Exception as exc:  # a crash is a failed check, not a crashed run
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, passed, detail))
    return results
