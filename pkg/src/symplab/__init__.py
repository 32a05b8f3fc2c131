"""Exact computations for symplectomorphism groups of ruled surfaces.

Modules:

* :mod:`symplab.exactalg` -- graded-commutative polynomial algebra over Q
* :mod:`symplab.sullivan` -- Sullivan models and their cohomology
* :mod:`symplab.ruledtop` -- intersection theory and line bundles on curves
* :mod:`symplab.gwcalc` -- dimension conditions and equivariant GW invariants
* :mod:`symplab.whiteheadlab` -- Whitehead-product constraints and the ring relation
* :mod:`symplab.cli` -- command-line front end
"""

from .errors import TheoremViolation
from .exactalg import GradedAlgebra, GradedPolynomial, Generator, PoincareSeries

__all__ = ["GradedAlgebra", "GradedPolynomial", "Generator", "PoincareSeries", "TheoremViolation"]
__version__ = "0.1.0"
