"""Hypothesis strategies for homogeneous elements of graded algebras."""

from hypothesis import strategies as st

from symplab.exactalg import GradedAlgebra, GradedPolynomial

MIXED = GradedAlgebra({"a": 1, "b": 2, "c": 3, "e": 3, "f": 4, "h": 5})

coefficients = st.fractions(min_value=-12, max_value=12, max_denominator=6)


@st.composite
def homogeneous(draw, alg: GradedAlgebra = MIXED, max_degree: int = 6, nonzero: bool = True):
    while True:
        degree = draw(st.integers(0, max_degree))
        basis = alg.basis(degree)
        if basis:
            break
    picks = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=4, unique=True))
    cs = draw(st.lists(coefficients.filter(bool) if nonzero else coefficients,
                       min_size=len(picks), max_size=len(picks)))
    return GradedPolynomial(alg, dict(zip(picks, cs)))

