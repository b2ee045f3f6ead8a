"""Linear maps between algebras and the action of A (x) A on them.

A tensor ``t = sum g^{pr} e_p (x) e_r`` acts on a map ``f`` by
``x -> sum g^{pr} (e_p f(x)) e_r`` (``left`` bracketing, the default) or
``x -> sum g^{pr} e_p (f(x) e_r)`` (``right``). For associative algebras the
two agree.

Flattening conventions, fixed everywhere: a map matrix ``g^k_m`` is
vectorized row-major (index ``k*n + m``) and a tensor ``g^{pr}`` likewise
(index ``p*n + r``).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .algebra import Algebra, AlgebraError, Element
from .config import CONVENTIONS
from .linsolve import Affine, Inconsistent, Subspace, Unique, linear_solve, rank
from .scalar import Rational, format_rational, to_rational

_ZERO = Rational(0)
_ONE = Rational(1)


def _freeze(rows) -> tuple:
    return tuple(tuple(x if type(x) is Rational else to_rational(x) for x in row) for row in rows)


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be 'left' or 'right', got {convention!r}")


@dataclass(frozen=True)
class LinearMap:
    """Matrix ``g^k_i`` of a linear map; column ``i`` is the image of ``e_i``."""

    target_dim: int
    source_dim: int
    matrix: tuple

    def __post_init__(self):
        m = _freeze(self.matrix)
        if len(m) != self.target_dim or any(len(r) != self.source_dim for r in m):
            raise AlgebraError(f"map matrix must be {self.target_dim}x{self.source_dim}")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "LinearMap":
        rows = _freeze(rows)
        return cls(len(rows), len(rows[0]) if rows else 0, rows)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, tuple(tuple(Rational(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, target_dim: int, source_dim: int) -> "LinearMap":
        return cls(target_dim, source_dim, ((_ZERO,) * source_dim,) * target_dim)

    @classmethod
    def elementary(cls, n: int, k: int, m: int) -> "LinearMap":
        """``E^k_m``: the map ``x -> x^m e_k``."""
        return cls(n, n, tuple(tuple(Rational(int(i == k and j == m)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_function(cls, fn, source_dim: int, target_dim: int) -> "LinearMap":
        cols = [fn(Element.basis(source_dim, i)).coords for i in range(source_dim)]
        return cls(target_dim, source_dim, tuple(tuple(cols[i][k] for i in range(source_dim))
                                                for k in range(target_dim)))

    @classmethod
    def from_vector(cls, v: Sequence, n: int) -> "LinearMap":
        return cls(n, n, tuple(tuple(v[k * n + m] for m in range(n)) for k in range(n)))

    def vec(self) -> tuple:
        return tuple(x for row in self.matrix for x in row)

    def column(self, i: int) -> Element:
        return Element(tuple(row[i] for row in self.matrix))

    def __call__(self, x: Element) -> Element:
        if x.dim != self.source_dim:
            raise AlgebraError(f"map expects dimension {self.source_dim}, got {x.dim}")
        return Element(tuple(sum((a * b for a, b in zip(row, x.coords) if a != 0), _ZERO)
                             for row in self.matrix))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        """Composition ``self o other`` (``other`` applied first)."""
        if not isinstance(other, LinearMap):
            return NotImplemented
        if other.target_dim != self.source_dim:
            raise AlgebraError("composition dimension mismatch")
        cols = other.source_dim
        out = []
        for row in self.matrix:
            acc = [_ZERO] * cols
            for k, a in enumerate(row):
                if a == 0:
                    continue
                for j, b in enumerate(other.matrix[k]):
                    if b != 0:
                        acc[j] += a * b
            out.append(tuple(acc))
        return LinearMap(self.target_dim, cols, tuple(out))

    def _same_shape(self, other: "LinearMap") -> None:
        if (self.target_dim, self.source_dim) != (other.target_dim, other.source_dim):
            raise AlgebraError("map shapes differ")

    def __add__(self, other: "LinearMap") -> "LinearMap":
        self._same_shape(other)
        return LinearMap(self.target_dim, self.source_dim,
                         tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)))

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self + (-other)

    def __neg__(self) -> "LinearMap":
        return LinearMap(self.target_dim, self.source_dim, tuple(tuple(-a for a in r) for r in self.matrix))

    def __rmul__(self, s) -> "LinearMap":
        if isinstance(s, LinearMap):
            return NotImplemented
        s = to_rational(s)
        return LinearMap(self.target_dim, self.source_dim, tuple(tuple(s * a for a in r) for r in self.matrix))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.matrix)

    def __str__(self) -> str:
        return "\n".join(" ".join(format_rational(x) for x in row) for row in self.matrix)


def compose(g: LinearMap, f: LinearMap) -> LinearMap:
    return g @ f


@dataclass(frozen=True)
class Tensor2:
    """Standard components ``g^{pr}`` of ``sum g^{pr} e_p (x) e_r``."""

    dim: int
    components: tuple

    def __post_init__(self):
        c = _freeze(self.components)
        if len(c) != self.dim or any(len(r) != self.dim for r in c):
            raise AlgebraError(f"tensor components must be {self.dim}x{self.dim}")
        object.__setattr__(self, "components", c)

    @classmethod
    def zero(cls, n: int) -> "Tensor2":
        return cls(n, ((_ZERO,) * n,) * n)

    @classmethod
    def simple(cls, a: Element, b: Element) -> "Tensor2":
        """``a (x) b``."""
        if a.dim != b.dim:
            raise AlgebraError("tensor factors have different dimensions")
        return cls(a.dim, tuple(tuple(x * y for y in b.coords) for x in a.coords))

    @classmethod
    def basis(cls, n: int, p: int, r: int) -> "Tensor2":
        return cls.simple(Element.basis(n, p), Element.basis(n, r))

    @classmethod
    def from_vector(cls, v: Sequence, n: int) -> "Tensor2":
        return cls(n, tuple(tuple(v[p * n + r] for r in range(n)) for p in range(n)))

    def vec(self) -> tuple:
        return tuple(x for row in self.components for x in row)

    def nonzero(self):
        for p, row in enumerate(self.components):
            for r, g in enumerate(row):
                if g != 0:
                    yield p, r, g

    def __add__(self, other: "Tensor2") -> "Tensor2":
        if other.dim != self.dim:
            raise AlgebraError("tensor dimensions differ")
        return Tensor2(self.dim, tuple(tuple(a + b for a, b in zip(r, s))
                                       for r, s in zip(self.components, other.components)))

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return self + (-other)

    def __neg__(self) -> "Tensor2":
        return Tensor2(self.dim, tuple(tuple(-a for a in r) for r in self.components))

    def __rmul__(self, s) -> "Tensor2":
        if isinstance(s, Tensor2):
            return NotImplemented
        s = to_rational(s)
        return Tensor2(self.dim, tuple(tuple(s * a for a in r) for r in self.components))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.components)


def _check_dim(A: Algebra, *objs) -> None:
    for o in objs:
        d = o.dim if isinstance(o, (Tensor2, Element)) else o.target_dim
        if d != A.dim:
            raise AlgebraError(f"object of dimension {d} used with algebra of dimension {A.dim}")


def _sandwich(A: Algebra, a: Element, y: Element, b: Element, convention: str) -> Element:
    if convention == "left":
        return A.mul(A.mul(a, y), b)
    return A.mul(a, A.mul(y, b))


def tensor_mul(s: Tensor2, t: Tensor2, A: Algebra) -> Tensor2:
    """Product in A (x) A: ``(a (x) b)(c (x) d) = (ac) (x) (db)``, extended bilinearly."""
    _check_dim(A, s, t)
    if not A.is_associative:
        raise AlgebraError(f"{A.name} is not associative; A (x) A acts as a representation only "
                           "for associative algebras")
    n = A.dim
    out = [[_ZERO] * n for _ in range(n)]
    for p, r, g in s.nonzero():
        for q, u, h in t.nonzero():
            left = A.mul(A.e(p), A.e(q))
            right = A.mul(A.e(u), A.e(r))
            gh = g * h
            for a, x in enumerate(left.coords):
                if x == 0:
                    continue
                for b, y in enumerate(right.coords):
                    if y != 0:
                        out[a][b] += gh * x * y
    return Tensor2(n, tuple(tuple(r) for r in out))


def tensor_apply(t: Tensor2, f: LinearMap, A: Algebra, convention: str = "left") -> LinearMap:
    """The map ``x -> sum g^{pr} (e_p f(x)) e_r`` (bracketing per ``convention``).

    ``f`` maps some algebra into ``A``; ``t`` lives in A (x) A.
    """
    _check_convention(convention)
    _check_dim(A, t, f)
    n = A.dim
    cols = []
    for i in range(f.source_dim):
        y = f.column(i)
        acc = Element.zero(n)
        if not y.is_zero():
            for p, r, g in t.nonzero():
                acc = acc + g * _sandwich(A, A.e(p), y, A.e(r), convention)
        cols.append(acc.coords)
    return LinearMap(n, f.source_dim, tuple(tuple(cols[i][k] for i in range(f.source_dim)) for k in range(n)))


def tensor_to_map(t: Tensor2, A: Algebra, convention: str = "left") -> LinearMap:
    return tensor_apply(t, LinearMap.identity(A.dim), A, convention)


@dataclass(frozen=True)
class BMatrix:
    """``n^2 x n^2`` matrix with ``vec(tensor_to_map(t)) = B vec(t)``.

    Row ``(k, m)`` sits at ``k*n + m``, column ``(p, r)`` at ``p*n + r``.
    """

    dim: int
    entries: tuple
    convention: str = "left"

    @property
    def rank(self) -> int:
        return rank(self.entries, self.dim ** 2)

    def column(self, p: int, r: int) -> tuple:
        c = p * self.dim + r
        return tuple(row[c] for row in self.entries)


@lru_cache(maxsize=64)
def b_matrix(A: Algebra, convention: str = "left") -> BMatrix:
    """Entries straight from the structure constants.

    left:  ``B[(k,m),(p,r)] = sum_l C^l_pm C^k_lr``   (``(e_p e_m) e_r``)
    right: ``B[(k,m),(p,r)] = sum_l C^l_mr C^k_pl``   (``e_p (e_m e_r)``)
    """
    _check_convention(convention)
    n = A.dim
    C = A.constants
    rows = [[_ZERO] * (n * n) for _ in range(n * n)]
    for k, m, p, r in product(range(n), repeat=4):
        if convention == "left":
            v = sum((C[p][m][l] * C[l][r][k] for l in range(n) if C[p][m][l] != 0), _ZERO)
        else:
            v = sum((C[m][r][l] * C[p][l][k] for l in range(n) if C[m][r][l] != 0), _ZERO)
        rows[k * n + m][p * n + r] = v
    return BMatrix(n, tuple(tuple(r) for r in rows), convention)


def map_to_tensor(f: LinearMap, A: Algebra, convention: str = "left"):
    """Solve ``B vec(t) = vec(f)`` for the standard components of ``t``.

    Returns ``Unique(Tensor2)``, ``Affine(Tensor2, (Tensor2, ...))`` or
    ``Inconsistent()``; in every solution ``tensor_to_map(t) == f``.
    """
    if (f.target_dim, f.source_dim) != (A.dim, A.dim):
        raise AlgebraError(f"expected an endomorphism of a {A.dim}-dimensional algebra")
    n = A.dim
    out = linear_solve(b_matrix(A, convention).entries, f.vec(), n * n)
    if isinstance(out, Unique):
        return Unique(Tensor2.from_vector(out.solution, n))
    if isinstance(out, Affine):
        return Affine(Tensor2.from_vector(out.particular, n),
                      tuple(Tensor2.from_vector(v, n) for v in out.nullspace))
    return out


def tensor_inverse(t: Tensor2, A: Algebra) -> Tensor2 | None:
    """The ``s`` with ``t s = u (x) u``, or ``None`` if ``t`` is singular."""
    if A.unit is None:
        raise AlgebraError(f"{A.name} has no unit, so A (x) A has no identity")
    _check_dim(A, t)
    n = A.dim
    cols = [tensor_mul(t, Tensor2.basis(n, q, s), A).vec() for q, s in product(range(n), repeat=2)]
    M = tuple(tuple(cols[c][row] for c in range(n * n)) for row in range(n * n))
    one = Tensor2.simple(A.unit, A.unit)
    out = linear_solve(M, one.vec(), n * n)
    if not isinstance(out, Unique):
        return None
    s = Tensor2.from_vector(out.solution, n)
    if tensor_mul(s, t, A) != one:
        return None
    return s


def orbit_span(f: LinearMap, A: Algebra, convention: str = "left") -> Subspace:
    """Span of the vectorized maps ``tensor_apply(e_p (x) e_r, f)``."""
    n = A.dim
    return Subspace.span(
        (tensor_apply(Tensor2.basis(n, p, r), f, A, convention).vec() for p, r in product(range(n), repeat=2)),
        n * n,
    )


def orbits_equal(f: LinearMap, g: LinearMap, A: Algebra, convention: str = "left") -> bool:
    return orbit_span(f, A, convention) == orbit_span(g, A, convention)


@dataclass(frozen=True)
class GeneratorSet:
    """Maps whose orbits together span L(A;A); ``generators[0]`` is the identity.

    ``orbit_dims[i]`` is the dimension of the orbit span of generator ``i``,
    ``cumulative_dims[i]`` the dimension of the span of the first ``i+1`` orbits.
    """

    generators: tuple
    orbit_dims: tuple
    cumulative_dims: tuple = ()
    labels: tuple = ()

    def __len__(self) -> int:
        return len(self.generators)

    def __getitem__(self, i: int) -> LinearMap:
        return self.generators[i]


def generator_set(A: Algebra, convention: str = "left") -> GeneratorSet:
    """Greedy generator set: the identity, then elementary maps ``E^k_m`` in
    lexicographic ``(k, m)`` order whenever they lie outside the current span.

    Raises :class:`AlgebraError` if the orbits cannot reach all of L(A;A),
    which happens for algebras where orbits miss their own generator
    (no unit, e.g. the zero product).
    """
    n = A.dim
    delta = LinearMap.identity(n)
    span = orbit_span(delta, A, convention)
    gens, dims, cum, labels = [delta], [span.dim], [span.dim], ["δ"]
    for k, m in product(range(n), repeat=2):
        if span.dim == n * n:
            break
        E = LinearMap.elementary(n, k, m)
        if E.vec() in span:
            continue
        orbit = orbit_span(E, A, convention)
        grown = span + orbit
        if grown.dim == span.dim:
            continue
        span = grown
        gens.append(E)
        dims.append(orbit.dim)
        cum.append(span.dim)
        labels.append(f"E{k}_{m}")
    if span.dim != n * n:
        raise AlgebraError(f"orbits of {A.name} span only {span.dim} of {n * n} dimensions")
    return GeneratorSet(tuple(gens), tuple(dims), tuple(cum), tuple(labels))


def left_shift(A: Algebra, a: Element) -> LinearMap:
    """``x -> a x``."""
    return LinearMap.from_function(lambda x: A.mul(a, x), A.dim, A.dim)


def right_shift(A: Algebra, a: Element) -> LinearMap:
    """``x -> x a``."""
    return LinearMap.from_function(lambda x: A.mul(x, a), A.dim, A.dim)


def associator_map(A: Algebra, a: Element, b: Element, slot: int = 2) -> LinearMap:
    """The associator with ``x`` in position ``slot`` (0, 1 or 2) and ``a``, ``b`` in the others."""
    def fn(x):
        args = [a, b]
        args.insert(slot, x)
        return A.associator(*args)
    return LinearMap.from_function(fn, A.dim, A.dim)
