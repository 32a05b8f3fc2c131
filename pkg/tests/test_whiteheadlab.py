from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from symplab.errors import TheoremViolation
from symplab.exactalg import free_series, quotient_dims
from symplab.sullivan import cohomology_dims
from symplab.whiteheadlab import (
    RING,
    ActionRelation,
    WhiteheadType,
    action_direction,
    action_node,
    bracket_degree,
    build_constraints,
    circle_action_relation,
    constraint_determinant,
    expanded_relation,
    group_generators,
    homotopy_generators,
    iterated_bracket_degree,
    minimal_type,
    minimal_type_candidates,
    model_generators,
    relation_model,
    ring_presentation,
    samelson_degree,
    samelson_order_report,
    solve_relation,
)

# Hilbert series of S(A, X, Y)/(F) through degree 20, from a sympy expansion
# of (1 - t^(4k+2)) / ((1 - t^2)(1 - t^4)^2)
FROZEN_SERIES = {
    0: [1, 0, 0, 0, 2, 0, 0, 0, 3, 0, 0, 0, 4, 0, 0, 0, 5, 0, 0, 0, 6],
    1: [1, 0, 1, 0, 3, 0, 2, 0, 5, 0, 3, 0, 7, 0, 4, 0, 9, 0, 5, 0, 11],
    2: [1, 0, 1, 0, 3, 0, 3, 0, 6, 0, 5, 0, 9, 0, 7, 0, 12, 0, 9, 0, 15],
    3: [1, 0, 1, 0, 3, 0, 3, 0, 6, 0, 6, 0, 10, 0, 9, 0, 14, 0, 12, 0, 18],
}
FREE = [1, 0, 1, 0, 3, 0, 3, 0, 6, 0, 6, 0, 10, 0, 10, 0, 15, 0, 15, 0, 21]


def sympy_hilbert(k, cap=20):
    t = sympy.symbols("t")
    f = (1 - t ** (4 * k + 2)) / ((1 - t**2) * (1 - t**4) ** 2)
    s = sympy.series(f, t, 0, cap + 1).removeO()
    return [int(s.coeff(t, n)) for n in range(cap + 1)]


@pytest.mark.parametrize("degrees, expected", [([2, 2], 3), ([2, 2, 2], 5), ([2, 4, 4], 9)])
def test_bracket_degree(degrees, expected):
    assert bracket_degree(degrees) == expected


def test_iterated_rule_differs_beyond_order_two():
    assert iterated_bracket_degree([2, 2]) == bracket_degree([2, 2])
    assert iterated_bracket_degree([2, 2, 2]) == 4


def test_bracket_degree_errors():
    with pytest.raises(ValueError):
        bracket_degree([2])
    with pytest.raises(ValueError):
        bracket_degree([2, 0])


@pytest.mark.parametrize("k", [1, 2, 5])
def test_samelson_degree(k):
    assert samelson_degree(3) == 2
    assert samelson_degree(4 * k + 1) == 4 * k
    assert samelson_degree(2) == 1
    with pytest.raises(ValueError):
        samelson_degree(1)


def test_minimal_type_target_matches_generator():
    for k in range(1, 7):
        t = minimal_type(k)
        assert t.target_degree == homotopy_generators(k)[-1].degree == 4 * k + 1


def test_generators_and_shift():
    assert [g.degree for g in homotopy_generators(2)] == [2, 4, 4, 9]
    assert model_generators(2).degrees == (2, 9, 4, 4)
    assert dict(zip(group_generators(2).names, group_generators(2).degrees)) == {"a": 1, "w": 8, "x": 3, "y": 3}
    with pytest.raises(ValueError):
        homotopy_generators(0)


@pytest.mark.parametrize("i, text", [(1, "X + Y"), (2, "X + 4*Y"), (3, "X + 9*Y")])
def test_action_direction(i, text):
    assert str(action_direction(i)) == text


def test_action_node_convention():
    # the direction X + i^2 Y pairs with the form at (X, Y) = (i^2, 1)
    assert [action_node(i) for i in (1, 2, 3)] == [(1, 1), (4, 1), (9, 1)]


def test_build_constraints_small():
    one = lambda rows: [[int(x) for x in r] for r in rows]
    assert one(build_constraints(1).rows) == [[1, 1], [1, 0]]
    assert one(build_constraints(2).rows) == [[1, 1, 1], [16, 4, 1], [1, 0, 0]]
    assert one(build_constraints(0).rows) == [[1]]
    assert build_constraints(2).rhs == (0, 0, 1)
    with pytest.raises(ValueError):
        build_constraints(-1)


@pytest.mark.parametrize("k", range(0, 7))
def test_constraint_determinant_is_vandermonde(k):
    # expanding along the normalization row leaves a Vandermonde in i^2
    nodes = [i * i for i in range(1, k + 1)]
    vander = sympy.Matrix(k, k, lambda r, c: nodes[r] ** (k - 1 - c)) if k else sympy.Matrix([[1]])
    expected = Fraction(int(vander.det())) * (-1) ** k if k else Fraction(1)
    assert constraint_determinant(k) == expected
    assert constraint_determinant(k) != 0


@pytest.mark.parametrize("k, text", [
    (0, "A"),
    (1, "A*X - A*Y"),
    (2, "A*X^2 - 5*A*X*Y + 4*A*Y^2"),
    (3, "A*X^3 - 14*A*X^2*Y + 49*A*X*Y^2 - 36*A*Y^3"),
])
def test_solve_relation(k, text):
    assert str(solve_relation(k)) == text


@pytest.mark.parametrize("k", range(0, 7))
def test_solve_matches_expansion(k):
    assert solve_relation(k) == expanded_relation(k)


@pytest.mark.parametrize("k", range(1, 6))
def test_relation_kills_every_action_direction(k):
    F = solve_relation(k)
    for i in range(1, k + 1):
        x, y = action_node(i)
        assert F.evaluate({"A": 1, "X": x, "Y": y}) == 0
    assert F.evaluate({"A": 1, "X": 1, "Y": 0}) == 1


def test_solve_relation_detects_degenerate_nodes(monkeypatch):
    import symplab.whiteheadlab as wl

    monkeypatch.setattr(wl, "action_node", lambda i: (1, 1))
    with pytest.raises(TheoremViolation, match="dimension"):
        wl.solve_relation(2)


@pytest.mark.parametrize("k", range(1, 7))
def test_minimal_type(k):
    assert minimal_type(k) == WhiteheadType(1, k)
    cands = minimal_type_candidates(k)
    assert [c.type for c in cands] == [WhiteheadType(2 * k + 1 - 2 * s, s) for s in range(1, k + 1)]
    assert all(c.excluded == (k > c.type.s) for c in cands)
    assert all(2 * c.type.p + 4 * c.type.s == 4 * k + 2 for c in cands)


def test_minimal_type_trace_k3():
    reasons = [c.reason for c in minimal_type_candidates(3)]
    assert reasons[0].startswith("k > s (3 > 1)")
    assert reasons[-1] == "survives"


@pytest.mark.parametrize("k", range(0, 4))
def test_frozen_series_oracle(k):
    assert sympy_hilbert(k) == FROZEN_SERIES[k]


def test_free_series_frozen():
    assert free_series(RING, 20).as_list() == FREE


@pytest.mark.parametrize("k", range(0, 4))
def test_ring_presentation(k):
    pres = ring_presentation(k, cap=20)
    assert pres.series.as_list() == FROZEN_SERIES[k]
    assert pres.model_series == pres.series


@pytest.mark.parametrize("k", range(1, 4))
def test_series_drops_first_at_relation_degree(k):
    series = quotient_dims(RING, solve_relation(k), 20).as_list()
    diffs = [f - q for f, q in zip(FREE, series)]
    first = next(n for n, d in enumerate(diffs) if d)
    assert first == 4 * k + 2
    assert diffs[first] == 1


def test_relation_model_k0_is_not_minimal():
    m = relation_model(0)
    assert m.algebra.degree_of("W") == 1
    assert cohomology_dims(m, 8).as_list() == FROZEN_SERIES[0][:9]


def test_ring_presentation_mismatch(monkeypatch):
    import symplab.whiteheadlab as wl

    monkeypatch.setattr(wl, "quotient_dims", lambda ring, rel, cap: free_series(ring, cap))
    with pytest.raises(TheoremViolation):
        wl.ring_presentation(1, cap=8)


@pytest.mark.parametrize("g, k, orders, degrees", [
    (0, 1, (3,), (4,)),
    (1, 1, (2,), (2,)),
    (2, 2, (2, 3, 4, 5), (2, 4, 6, 8)),
    (0, 3, (7,), (12,)),
])
def test_samelson_report(g, k, orders, degrees):
    r = samelson_order_report(g, k)
    assert r.orders == orders
    assert r.degrees == degrees


@pytest.mark.parametrize("g, k", [(1, 2), (4, 2), (-1, 1), (0, 0)])
def test_samelson_report_outside_range(g, k):
    with pytest.raises(ValueError):
        samelson_order_report(g, k)


@given(st.integers(0, 20), st.integers(1, 20))
def test_samelson_degrees_are_even(g, k):
    if g == 1 and k > 1 or g >= 2 and k <= g // 2:
        return
    r = samelson_order_report(g, k)
    assert all(d == 2 * o - 2 for o, d in zip(r.orders, r.degrees))


def test_circle_action_relation():
    rel = circle_action_relation(1, 3)
    assert rel == ActionRelation(1, 3, Fraction(3), "D0")
    assert ActionRelation.from_json(rel.to_json()) == rel
    assert circle_action_relation(2, 2, lam=Fraction(5, 2)).group == "G"
    assert circle_action_relation(0, 2).multiple == 2
    for bad in [(0, 1, None), (-1, 2, None), (2, 1, Fraction(3)), (2, 3, Fraction(3))]:
        with pytest.raises(ValueError):
            circle_action_relation(*bad)
