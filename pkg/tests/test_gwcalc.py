from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symplab.errors import TheoremViolation
from symplab.gwcalc import (
    EquivariantInvariant,
    GWSetup,
    admissible_p,
    egw_ruled,
    egw_series,
    index,
    obstruction_rank,
    pgw_cover,
    pgw_sum,
)

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=12)


@pytest.mark.parametrize("g, k, p, expected", [(1, 1, 2, 0), (0, 1, 1, 0), (0, 1, 2, 2)])
def test_index(g, k, p, expected):
    assert index(GWSetup(g, k, p)) == expected


def test_index_marked_points_shift():
    assert index(GWSetup(0, 1, 1, m=2)) == 4


@pytest.mark.parametrize("g, k, p", [(1, 1, 2), (0, 2, 3), (3, 1, 4)])
def test_admissible_p(g, k, p):
    assert admissible_p(g, k) == p
    assert index(GWSetup(g, k, p)) == 0


@pytest.mark.parametrize("g, k, rank", [(1, 1, 2), (0, 2, 3), (2, 1, 3)])
def test_obstruction_rank(g, k, rank):
    assert obstruction_rank(g, k) == rank


@pytest.mark.parametrize("g, k, exponent", [(0, 1, 1), (1, 1, 2), (2, 3, 7)])
def test_egw_ruled(g, k, exponent):
    inv = egw_ruled(g, k)
    assert inv.exponent == exponent
    assert inv.magnitude == 1
    assert inv.cohomological_degree == 2 * exponent
    assert not inv.sign_determined


def test_egw_sign_convention():
    assert str(egw_ruled(1, 1)) == "u^2"
    assert str(egw_ruled(0, 1)) == "-u"


def test_egw_rank_mismatch_is_theorem_violation(monkeypatch):
    import symplab.gwcalc as gw

    monkeypatch.setattr(gw, "obstruction_rank", lambda g, k: 2 * k + g)
    with pytest.raises(TheoremViolation):
        gw.egw_ruled(1, 1)


def test_setup_validation():
    for bad in [(-1, 1, 0, 0), (0, 0, 0, 0), (0, 1, -1, 0), (0, 1, 0, -1)]:
        with pytest.raises(ValueError):
            GWSetup(*bad)


def test_exhaustive_dimension_condition():
    for g in range(5):
        for k in range(1, 6):
            for p in range(21):
                idx = index(GWSetup(g, k, p))
                assert idx % 2 == 0
                assert (idx == 0) == (p == 2 * k + g - 1)
            assert obstruction_rank(g, k) == admissible_p(g, k)
            inv = egw_ruled(g, k)
            assert inv.coefficients == {2 * k + g - 1: (-1) ** (2 * k + g - 1)}


def test_egw_series():
    assert str(egw_series({2: 1})) == "u^2"
    assert egw_series({}) == EquivariantInvariant({})
    assert str(egw_series({})) == "0"
    assert str(egw_series({3: -2, 1: 1})) == "u - 2*u^3"
    assert str(egw_series({0: Fraction(1, 2), 4: 0})) == "1/2"


def test_pgw_examples():
    assert pgw_sum(1, 0) == 1
    assert pgw_sum(0, 0) == 0
    assert pgw_sum(2, -2) == 0
    assert pgw_cover(1, 3) == 3
    assert pgw_cover(0, 5) == 0
    assert pgw_cover(-1, 2) == -2
    with pytest.raises(ValueError):
        pgw_cover(1, 0)


@given(fractions, fractions, fractions, st.integers(1, 50), st.integers(1, 50))
def test_pgw_linearity(a, b, c, n, m):
    assert pgw_sum(a, b) == pgw_sum(b, a)
    assert pgw_sum(pgw_sum(a, b), c) == pgw_sum(a, pgw_sum(b, c))
    assert pgw_cover(pgw_sum(a, b), n) == pgw_sum(pgw_cover(a, n), pgw_cover(b, n))
    assert pgw_cover(pgw_cover(a, n), m) == pgw_cover(a, n * m)
    assert (pgw_cover(a, n) != 0) == (a != 0)
