"""Free graded-commutative algebras over the rationals.

An algebra is generated by named homogeneous generators.  Even-degree
generators commute and are polynomial; odd-degree generators anticommute
and square to zero.  Coefficients are :class:`fractions.Fraction`, so all
arithmetic is exact.

Monomials are exponent vectors aligned with the algebra's generators, which
are always kept sorted by name.  The canonical order on monomials is
descending lexicographic on that vector, e.g. for ``A, X, Y`` in degree 8::

    A^4, A^2*X, A^2*Y, X^2, X*Y, Y^2
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from . import _linalg

Rational = Fraction
Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class IncompatibleAlgebras(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Generator:
    name: str
    degree: int

    def __post_init__(self):
        if not _NAME_RE.match(self.name):
            raise ValueError(f"invalid generator name {self.name!r}")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"generator {self.name} needs a positive degree, got {self.degree!r}")

    @property
    def odd(self) -> bool:
        return self.degree % 2 == 1


def _as_generators(gens) -> tuple[Generator, ...]:
    if isinstance(gens, GradedAlgebra):
        return gens.generators
    if isinstance(gens, Mapping):
        gens = [Generator(n, d) for n, d in gens.items()]
    out = tuple(sorted(gens, key=lambda g: g.name))
    names = [g.name for g in out]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate generator names in {names}")
    return out


class GradedAlgebra:
    """The free graded-commutative algebra on a set of generators.

    Accepts a mapping ``{name: degree}`` or an iterable of :class:`Generator`.
    """

    __slots__ = ("generators", "names", "degrees", "_index", "_odd")

    def __init__(self, generators: Mapping[str, int] | Iterable[Generator] = ()):
        self.generators = _as_generators(generators)
        self.names = tuple(g.name for g in self.generators)
        self.degrees = tuple(g.degree for g in self.generators)
        self._index = {n: i for i, n in enumerate(self.names)}
        self._odd = tuple(i for i, d in enumerate(self.degrees) if d % 2)

    def __eq__(self, other):
        return isinstance(other, GradedAlgebra) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        inner = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GradedAlgebra({{{inner}}})"

    def __contains__(self, name: str) -> bool:
        return name in self._index

    @property
    def is_polynomial(self) -> bool:
        return not self._odd

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r} in {self!r}") from None

    def degree_of(self, name: str) -> int:
        return self.degrees[self.index(name)]

    # -- elements -------------------------------------------------------

    def zero(self) -> GradedPolynomial:
        return GradedPolynomial(self, {})

    def one(self) -> GradedPolynomial:
        return self.scalar(1)

    def scalar(self, c: Scalar) -> GradedPolynomial:
        return GradedPolynomial(self, {self.unit_monomial(): Fraction(c)})

    def gen(self, name: str) -> GradedPolynomial:
        m = [0] * len(self.names)
        m[self.index(name)] = 1
        return GradedPolynomial(self, {tuple(m): Fraction(1)})

    def gens(self) -> tuple[GradedPolynomial, ...]:
        return tuple(self.gen(n) for n in self.names)

    def monomial(self, m: Monomial, coeff: Scalar = 1) -> GradedPolynomial:
        return GradedPolynomial(self, {tuple(m): Fraction(coeff)})

    def unit_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    # -- monomial arithmetic --------------------------------------------

    def monomial_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def mul_monomials(self, m1: Monomial, m2: Monomial) -> tuple[int, Monomial]:
        """Product of two basis monomials as ``(sign, monomial)``; sign 0 means zero."""
        sign = 1
        for j in self._odd:
            if not m2[j]:
                continue
            if m1[j]:
                return 0, m1
            # m2's odd factor j moves left past every odd factor of m1 after it
            for i in self._odd:
                if i > j and m1[i]:
                    sign = -sign
        return sign, tuple(a + b for a, b in zip(m1, m2))

    def basis(self, degree: int) -> list[Monomial]:
        """All monomials of the given total degree, in canonical order."""
        if degree < 0:
            return []
        out: list[Monomial] = []
        n = len(self.degrees)

        def rec(i: int, remaining: int, prefix: list[int]) -> None:
            if i == n:
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            d = self.degrees[i]
            top = remaining // d
            if d % 2:
                top = min(top, 1)
            for e in range(top, -1, -1):
                prefix.append(e)
                rec(i + 1, remaining - e * d, prefix)
                prefix.pop()

        rec(0, degree, [])
        return out

    def render_monomial(self, m: Monomial) -> str:
        parts = []
        for name, e in zip(self.names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def parse(self, text: str) -> GradedPolynomial:
        return parse_polynomial(self, text)


def _sort_key(m: Monomial) -> tuple[int, ...]:
    return tuple(-e for e in m)


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class GradedPolynomial:
    """An element of a :class:`GradedAlgebra`; immutable, zero terms never stored."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: GradedAlgebra, terms: Mapping[Monomial, Scalar]):
        self.algebra = algebra
        clean = {}
        for m, c in terms.items():
            c = Fraction(c)
            if c:
                if len(m) != len(algebra.names):
                    raise ValueError(f"monomial {m} does not fit {algebra!r}")
                if any(m[i] > 1 for i in algebra._odd):
                    raise ValueError(f"odd generator with exponent > 1 in {m}")
                clean[tuple(m)] = c
        self._terms = clean

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical monomial order."""
        return sorted(self._terms.items(), key=lambda mc: _sort_key(mc[0]))

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    @property
    def degrees(self) -> set[int]:
        return {self.algebra.monomial_degree(m) for m in self._terms}

    @property
    def degree(self) -> int | None:
        """The common degree of all terms, or None if inhomogeneous or zero."""
        ds = self.degrees
        return ds.pop() if len(ds) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees) <= 1

    def word_lengths(self) -> set[int]:
        """Number of generator factors (with multiplicity) in each term."""
        return {sum(m) for m in self._terms}

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: GradedPolynomial) -> None:
        if self.algebra != other.algebra:
            raise IncompatibleAlgebras(f"{self.algebra!r} vs {other.algebra!r}")

    def _coerce(self, other) -> GradedPolynomial:
        if isinstance(other, GradedPolynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return GradedPolynomial(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial(self.algebra, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GradedPolynomial(self.algebra, {m: c * other for m, c in self._terms.items()})
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self._terms.items())))

    def embed(self, algebra: GradedAlgebra) -> GradedPolynomial:
        """The same element in a larger algebra with compatible generators."""
        src = self.algebra
        for g in src.generators:
            if g.name not in algebra or algebra.degree_of(g.name) != g.degree:
                raise IncompatibleAlgebras(f"{g.name}:{g.degree} is not a generator of {algebra!r}")
        slots = [algebra.index(n) for n in src.names]
        out = {}
        for m, c in self._terms.items():
            v = [0] * len(algebra.names)
            for i, e in zip(slots, m):
                v[i] = e
            out[tuple(v)] = c
        return GradedPolynomial(algebra, out)

    def evaluate(self, values: Mapping[str, Scalar]) -> Fraction:
        """Substitute rational values for even generators."""
        alg = self.algebra
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for name, e in zip(alg.names, m):
                if e:
                    if alg.degree_of(name) % 2:
                        raise ValueError(f"cannot evaluate odd generator {name}")
                    term *= Fraction(values[name]) ** e
            total += term
        return total

    # -- rendering ------------------------------------------------------

    def __str__(self):
        items = self.items()
        if not items:
            return "0"
        out = []
        for n, (m, c) in enumerate(items):
            neg = c < 0
            a = -c if neg else c
            mon = self.algebra.render_monomial(m)
            if mon == "1":
                body = _fmt_coeff(a)
            elif a == 1:
                body = mon
            else:
                body = f"{_fmt_coeff(a)}*{mon}"
            if n == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"GradedPolynomial({str(self)!r})"


def multiply(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    p._check(q)
    alg = p.algebra
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            sign, m = alg.mul_monomials(m1, m2)
            if sign:
                out[m] = out.get(m, 0) + sign * c1 * c2
    return GradedPolynomial(alg, out)


def monomial_basis(gens, degree: int) -> list[Monomial]:
    return GradedAlgebra(gens).basis(degree)


# -- Poincare series ---------------------------------------------------


@dataclass(frozen=True)
class PoincareSeries:
    """Dimensions by degree, truncated at ``cap`` (inclusive)."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if not self.coefficients:
            raise ValueError("a series needs at least the degree-0 coefficient")
        if any(c < 0 for c in self.coefficients):
            raise ValueError("dimensions are non-negative")

    @property
    def cap(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.cap:
            raise IndexError(f"degree {n} is beyond the truncation cap {self.cap}")
        return self.coefficients[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def as_list(self) -> list[int]:
        return list(self.coefficients)


def free_series(gens, cap: int) -> PoincareSeries:
    """Truncated product of 1/(1-t^d) over even and (1+t^d) over odd generators."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    series = [1] + [0] * cap
    for g in _as_generators(gens):
        d = g.degree
        if g.odd:
            for n in range(cap, d - 1, -1):
                series[n] += series[n - d]
        else:
            for n in range(d, cap + 1):
                series[n] += series[n - d]
    return PoincareSeries(tuple(series))


def multiplication_matrix(p: GradedPolynomial, source_degree: int) -> list[list[Fraction]]:
    """Matrix of ``x -> p*x`` from degree ``source_degree`` to ``source_degree + deg p``.

    Rows are indexed by the target basis, columns by the source basis.
    """
    alg = p.algebra
    d = p.degree
    if d is None:
        raise ValueError(f"{p} is not homogeneous")
    src = alg.basis(source_degree)
    tgt = alg.basis(source_degree + d)
    pos = {m: i for i, m in enumerate(tgt)}
    mat = [[Fraction(0)] * len(src) for _ in tgt]
    for j, b in enumerate(src):
        for m, c in multiply(p, alg.monomial(b))._terms.items():
            mat[pos[m]][j] = c
    return mat


def quotient_dims(gens, relation: GradedPolynomial, cap: int) -> PoincareSeries:
    """Dimensions of ``S(gens)/(relation)`` by degree, via exact ranks.

    The relation must be homogeneous of positive degree and the algebra
    purely even.  No regularity of the relation is assumed.
    """
    alg = GradedAlgebra(gens)
    if relation.algebra != alg:
        raise IncompatibleAlgebras(f"relation lives in {relation.algebra!r}, not {alg!r}")
    if not alg.is_polynomial:
        raise ValueError("quotient_dims needs an algebra of even generators")
    if relation.is_zero() or not relation.is_homogeneous():
        raise ValueError(f"relation {relation} must be nonzero and homogeneous")
    d = relation.degree
    if d < 1:
        raise ValueError("relation must have positive degree")
    if cap < 0:
        raise ValueError("cap must be non-negative")
    dims = []
    for n in range(cap + 1):
        free = len(alg.basis(n))
        r = _linalg.rank(multiplication_matrix(relation, n - d)) if n >= d else 0
        dims.append(free - r)
    return PoincareSeries(tuple(dims))


# -- parsing -----------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.replace("−", "-")
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            break
        pos = m.end()
        tok = m.group(1) or m.group(2) or m.group(3)
        if tok and not tok.isspace():
            tokens.append(tok)
    return tokens


class _Parser:
    def __init__(self, alg: GradedAlgebra, text: str):
        self.alg = alg
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def error(self, msg: str) -> ValueError:
        return ValueError(f"cannot parse {self.text!r}: {msg}")

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of input")
        self.i += 1
        return tok

    def parse(self) -> GradedPolynomial:
        if not self.toks:
            raise self.error("empty expression")
        out = self.expr()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()!r}")
        return out

    def expr(self) -> GradedPolynomial:
        out = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def term(self) -> GradedPolynomial:
        out = self.unary()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                out = out * self.unary()
            else:
                tok = self.take()
                if not tok.isdigit() or int(tok) == 0:
                    raise self.error("only division by a nonzero integer is allowed")
                out = out * Fraction(1, int(tok))
        return out

    def unary(self) -> GradedPolynomial:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> GradedPolynomial:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise self.error("exponent must be a non-negative integer")
            return base ** int(tok)
        return base

    def atom(self) -> GradedPolynomial:
        tok = self.take()
        if tok.isdigit():
            return self.alg.scalar(int(tok))
        if tok == "(":
            out = self.expr()
            if self.take() != ")":
                raise self.error("missing ')'")
            return out
        if tok in self.alg:
            return self.alg.gen(tok)
        if _NAME_RE.match(tok):
            raise self.error(f"unknown generator {tok!r}")
        raise self.error(f"unexpected {tok!r}")


def parse_polynomial(alg: GradedAlgebra, text: str) -> GradedPolynomial:
    """Parse ``+ - * / ^`` and parentheses; ``str(p)`` round-trips."""
    return _Parser(alg, text).parse()
