import pytest
from hypothesis import given
from hypothesis import strategies as st

from symplab.exactalg import GradedAlgebra, free_series, quotient_dims
from symplab.sullivan import (
    MinimalModel,
    apply_d,
    cohomology_dims,
    parse_model,
    verify_d_squared,
)
from strategies import homogeneous

M1 = MinimalModel({"A": 2, "X": 4, "Y": 4, "W": 5}, {"W": "A*X - A*Y"})

# even generator with a nonzero differential and several odd generators
RICH = MinimalModel(
    {"a": 2, "b": 2, "t": 4, "u": 3, "v": 3, "w": 5},
    {"u": "a^2", "v": "a*b", "t": "b*u - a*v", "w": "b^3 + a^2*b"},
)


def test_d_on_generator():
    W = M1.algebra.gen("W")
    assert str(apply_d(M1, W)) == "A*X - A*Y"


def test_d_on_closed_product():
    A, X = M1.algebra.gen("A"), M1.algebra.gen("X")
    assert apply_d(M1, A * X).is_zero()


def test_d_leibniz_by_hand():
    A, W = M1.algebra.gen("A"), M1.algebra.gen("W")
    assert str(apply_d(M1, A * W)) == "A^2*X - A^2*Y"


def test_d_odd_sign_by_hand():
    # d(u v) = du v - u dv = a^2 v - a b u
    u, v = RICH.algebra.gen("u"), RICH.algebra.gen("v")
    assert apply_d(RICH, u * v) == RICH.algebra.parse("a^2*v - a*b*u")


def test_unknown_generator():
    other = GradedAlgebra({"Q": 2})
    with pytest.raises(ValueError):
        apply_d(M1, other.gen("Q"))
    with pytest.raises(KeyError):
        MinimalModel({"A": 2}, {"B": "A^2"})


def test_construction_rejects_degree_mismatch():
    with pytest.raises(ValueError, match="degree"):
        MinimalModel({"A": 2, "X": 3}, {"X": "A*A*A"})


def test_construction_rejects_indecomposable():
    with pytest.raises(ValueError, match="decomposable"):
        MinimalModel({"A": 2, "W": 1}, {"W": "A"})


def test_nonminimal_allowed_on_request():
    m = MinimalModel({"A": 2, "W": 1}, {"W": "A"}, require_minimal=False)
    assert cohomology_dims(m, 6).as_list() == [1, 0, 0, 0, 0, 0, 0]


def test_construction_rejects_nonzero_d_squared():
    # dv = u*a is decomposable, but d(u a) = a^3 != 0
    with pytest.raises(ValueError, match=r"d\(d"):
        MinimalModel({"a": 2, "u": 3, "v": 4}, {"u": "a^2", "v": "u*a"})


@pytest.mark.parametrize("model", [M1, RICH])
def test_verify_d_squared(model):
    assert verify_d_squared(model, 16)


def test_cohomology_m1():
    assert cohomology_dims(M1, 6).as_list() == [1, 0, 1, 0, 3, 0, 2]


def test_cohomology_zero_differential():
    m = MinimalModel({"A": 2})
    assert cohomology_dims(m, 9) == free_series({"A": 2}, 9)


def test_cohomology_m2_matches_quotient():
    m = MinimalModel({"A": 2, "X": 4, "Y": 4, "W": 9}, {"W": "A*(X - Y)*(X - 4*Y)"})
    ring = GradedAlgebra({"A": 2, "X": 4, "Y": 4})
    assert cohomology_dims(m, 10) == quotient_dims(ring, ring.parse("A*(X - Y)*(X - 4*Y)"), 10)


def test_cohomology_odd_sphere_product():
    # (Lambda(u, v), d = 0) with |u| = |v| = 3: cohomology of S^3 x S^3
    m = MinimalModel({"u": 3, "v": 3})
    assert cohomology_dims(m, 7).as_list() == [1, 0, 0, 2, 0, 0, 1, 0]


def test_cohomology_cp2():
    # (Q[a] x Lambda(u), du = a^3) models CP^2
    m = MinimalModel({"a": 2, "u": 5}, {"u": "a^3"})
    assert cohomology_dims(m, 10).as_list() == [1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0]


@given(homogeneous(RICH.algebra, max_degree=6), homogeneous(RICH.algebra, max_degree=6))
def test_leibniz_rule(p, q):
    sign = -1 if p.degree % 2 else 1
    assert apply_d(RICH, p * q) == apply_d(RICH, p) * q + sign * (p * apply_d(RICH, q))


@given(homogeneous(RICH.algebra, max_degree=12))
def test_d_raises_degree_and_squares_to_zero(p):
    dp = apply_d(RICH, p)
    assert dp.is_zero() or dp.degree == p.degree + 1
    assert apply_d(RICH, dp).is_zero()


@given(st.lists(homogeneous(RICH.algebra, max_degree=8), min_size=2, max_size=2))
def test_d_is_linear(pair):
    p, q = pair
    assert apply_d(RICH, p + 3 * q) == apply_d(RICH, p) + 3 * apply_d(RICH, q)


def test_text_format_roundtrip():
    text = """
        # model of BG for 1 < lambda <= 2
        A : 2
        X:4
          Y :  4
        W : 5
        d W = A*X - A*Y
    """
    m = parse_model(text)
    assert m.to_text() == "A : 2\nW : 5\nX : 4\nY : 4\nd W = A*X - A*Y\n"
    again = parse_model(m.to_text())
    assert again.differential == m.differential


@pytest.mark.parametrize(
    "text",
    ["A : two", "A : 2\nA : 2", "A : 2\nW : 5\ndW = A\ndW = A", "nonsense", "A : 2\n x W = A"],
)
def test_text_format_errors(text):
    with pytest.raises((ValueError, KeyError)):
        parse_model(text)
