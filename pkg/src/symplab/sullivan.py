"""Sullivan minimal models: free graded-commutative algebras with a differential.

The differential is given on generators and extended as a degree +1
derivation, ``d(pq) = d(p) q + (-1)^|p| p d(q)``.  Models must be minimal:
``d`` of a generator is zero or a sum of products of at least two generators.
Pass ``require_minimal=False`` for a free model with linear differential
terms (such as the contractible pair ``dW = A``).

Text format, one entry per line, whitespace-insensitive, ``#`` comments::

    A : 2
    X : 4
    Y : 4
    W : 5
    d W = A*X - A*Y
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from . import _linalg
from .exactalg import GradedAlgebra, GradedPolynomial, Monomial, PoincareSeries


class MinimalModel:
    __slots__ = ("algebra", "differential")

    def __init__(
        self,
        algebra: GradedAlgebra | Mapping[str, int],
        differential: Mapping[str, GradedPolynomial | str] | None = None,
        *,
        require_minimal: bool = True,
    ):
        if not isinstance(algebra, GradedAlgebra):
            algebra = GradedAlgebra(algebra)
        self.algebra = algebra
        diff: dict[str, GradedPolynomial] = {}
        for name, value in (differential or {}).items():
            if name not in algebra:
                raise KeyError(f"differential given for unknown generator {name!r}")
            if isinstance(value, str):
                value = algebra.parse(value)
            elif value.algebra != algebra:
                raise ValueError(f"d{name} lives in a different algebra")
            diff[name] = value
        for name in algebra.names:
            dg = diff.setdefault(name, algebra.zero())
            if dg.is_zero():
                continue
            want = algebra.degree_of(name) + 1
            if dg.degree != want:
                raise ValueError(f"d{name} = {dg} must be homogeneous of degree {want}")
            if require_minimal and min(dg.word_lengths()) < 2:
                raise ValueError(f"d{name} = {dg} is not decomposable; the model is not minimal")
        self.differential = {n: diff[n] for n in algebra.names}
        for name in algebra.names:
            dd = self.d(self.differential[name])
            if not dd.is_zero():
                raise ValueError(f"d(d{name}) = {dd} is nonzero")

    def __repr__(self):
        return f"MinimalModel({self.algebra!r}, {{{', '.join(f'{n}: {str(p)!r}' for n, p in self.differential.items())}}})"

    def d(self, p: GradedPolynomial) -> GradedPolynomial:
        return apply_d(self, p)

    def _d_monomial(self, m: Monomial) -> GradedPolynomial:
        alg = self.algebra
        factors = [i for i, e in enumerate(m) for _ in range(e)]
        out = alg.zero()
        left_degree = 0
        for pos, i in enumerate(factors):
            dg = self.differential[alg.names[i]]
            if dg:
                before = [0] * len(m)
                after = [0] * len(m)
                for j in factors[:pos]:
                    before[j] += 1
                for j in factors[pos + 1:]:
                    after[j] += 1
                # before * after equals m with factor i removed, with no sign
                term = alg.monomial(tuple(before)) * dg * alg.monomial(tuple(after))
                out = out - term if left_degree % 2 else out + term
            left_degree += alg.degrees[i]
        return out

    def cochain_basis(self, degree: int) -> list[Monomial]:
        return self.algebra.basis(degree)

    def differential_matrix(self, degree: int) -> list[list[Fraction]]:
        """Matrix of d from ``degree`` to ``degree + 1`` (rows: target basis)."""
        src = self.cochain_basis(degree)
        tgt = self.cochain_basis(degree + 1)
        pos = {m: i for i, m in enumerate(tgt)}
        mat = [[Fraction(0)] * len(src) for _ in tgt]
        for j, b in enumerate(src):
            for m, c in self._d_monomial(b).items():
                mat[pos[m]][j] = c
        return mat

    def to_text(self) -> str:
        lines = [f"{g.name} : {g.degree}" for g in self.algebra.generators]
        lines += [f"d {n} = {p}" for n, p in self.differential.items() if p]
        return "\n".join(lines) + "\n"


def apply_d(m: MinimalModel, p: GradedPolynomial) -> GradedPolynomial:
    if p.algebra != m.algebra:
        raise ValueError(f"{p} is not an element of {m.algebra!r}")
    out = m.algebra.zero()
    for mon, c in p.items():
        out = out + m._d_monomial(mon) * c
    return out


def verify_d_squared(m: MinimalModel, cap: int) -> bool:
    for n in range(cap + 1):
        for b in m.cochain_basis(n):
            if m.d(m.d(m.algebra.monomial(b))):
                return False
    return True


def cohomology_dims(m: MinimalModel, cap: int) -> PoincareSeries:
    """dim H^n = dim C^n - rank(d_n) - rank(d_{n-1}) for n <= cap."""
    ranks = [_linalg.rank(m.differential_matrix(n)) for n in range(cap + 1)]
    dims = []
    for n in range(cap + 1):
        below = ranks[n - 1] if n else 0
        dims.append(len(m.cochain_basis(n)) - ranks[n] - below)
    return PoincareSeries(tuple(dims))


def parse_model(text: str, *, require_minimal: bool = True) -> MinimalModel:
    gens: dict[str, int] = {}
    diffs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            lhs, rhs = line.split("=", 1)
            lhs = "".join(lhs.split())
            if not lhs.startswith("d") or len(lhs) < 2:
                raise ValueError(f"line {lineno}: expected 'd NAME = polynomial', got {raw!r}")
            name = lhs[1:]
            if name in diffs:
                raise ValueError(f"line {lineno}: d{name} given twice")
            diffs[name] = rhs
        elif ":" in line:
            name, deg = (s.strip() for s in line.split(":", 1))
            if name in gens:
                raise ValueError(f"line {lineno}: generator {name} declared twice")
            try:
                gens[name] = int(deg)
            except ValueError:
                raise ValueError(f"line {lineno}: bad degree {deg!r}") from None
        else:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}")
    return MinimalModel(GradedAlgebra(gens), diffs, require_minimal=require_minimal)
