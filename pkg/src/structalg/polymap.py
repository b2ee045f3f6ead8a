"""Polylinear maps A^m -> A.

Coordinates are stored densely as ``f^j_{i1..im}``, flattened with ``j``
slowest and ``im`` fastest. A :class:`PermTensorRep` writes a map as a sum of
terms ``a0 I_k1(x_s1) a1 I_k2(x_s2) ... a_m`` where ``(s1..sm)`` permutes the
arguments and ``I_k`` are linear maps taken from a generator set.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Sequence

from .algebra import Algebra, AlgebraError, Element, _basis_matrices
from .linmap import CONVENTIONS, GeneratorSet, LinearMap
from .linsolve import Affine, Unique, linear_solve
from .scalar import Rational, to_rational

_ZERO = Rational(0)


@dataclass(frozen=True)
class PolyMap:
    arity: int
    dim: int
    coords: tuple

    def __post_init__(self):
        if self.arity < 1:
            raise AlgebraError("arity must be at least 1")
        c = tuple(x if type(x) is Rational else to_rational(x) for x in self.coords)
        if len(c) != self.dim ** (self.arity + 1):
            raise AlgebraError(f"expected {self.dim ** (self.arity + 1)} coordinates, got {len(c)}")
        object.__setattr__(self, "coords", c)

    @classmethod
    def zero(cls, arity: int, dim: int) -> "PolyMap":
        return cls(arity, dim, (_ZERO,) * dim ** (arity + 1))

    @classmethod
    def from_function(cls, fn, arity: int, dim: int) -> "PolyMap":
        """Coordinates of ``fn`` read off from all basis tuples."""
        basis = [Element.basis(dim, i) for i in range(dim)]
        values = {idx: fn(*(basis[i] for i in idx)).coords for idx in product(range(dim), repeat=arity)}
        return cls(arity, dim, tuple(values[idx][j] for j in range(dim)
                                     for idx in product(range(dim), repeat=arity)))

    @classmethod
    def multiplication(cls, A: Algebra) -> "PolyMap":
        n = A.dim
        return cls(2, n, tuple(A.constants[i][k][j] for j in range(n) for i in range(n) for k in range(n)))

    @classmethod
    def commutator(cls, A: Algebra) -> "PolyMap":
        return cls.from_function(A.commutator, 2, A.dim)

    @classmethod
    def associator(cls, A: Algebra) -> "PolyMap":
        return cls.from_function(A.associator, 3, A.dim)

    def _flat(self, j: int, idx: Sequence[int]) -> int:
        k = j
        for i in idx:
            k = k * self.dim + i
        return k

    def coord(self, j: int, *idx: int) -> Rational:
        if len(idx) != self.arity:
            raise AlgebraError(f"expected {self.arity} lower indices")
        return self.coords[self._flat(j, idx)]

    def __call__(self, *xs: Element) -> Element:
        """``sum f^j_{i1..im} x1^i1 ... xm^im e_j``."""
        if len(xs) != self.arity:
            raise AlgebraError(f"map of arity {self.arity} called with {len(xs)} arguments")
        for x in xs:
            if x.dim != self.dim:
                raise AlgebraError(f"argument of dimension {x.dim} for a map on dimension {self.dim}")
        n = self.dim
        # contract the last argument first, keeping the table flat
        table = list(self.coords)
        for x in reversed(xs):
            size = len(table) // n
            table = [sum((table[b * n + i] * x.coords[i] for i in range(n) if x.coords[i] != 0), _ZERO)
                     for b in range(size)]
        return Element(tuple(table))

    def _same_shape(self, other: "PolyMap") -> None:
        if (self.arity, self.dim) != (other.arity, other.dim):
            raise AlgebraError("poly-map shapes differ")

    def __add__(self, other: "PolyMap") -> "PolyMap":
        self._same_shape(other)
        return PolyMap(self.arity, self.dim, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "PolyMap") -> "PolyMap":
        return self + (-other)

    def __neg__(self) -> "PolyMap":
        return PolyMap(self.arity, self.dim, tuple(-a for a in self.coords))

    def __rmul__(self, s) -> "PolyMap":
        if isinstance(s, PolyMap):
            return NotImplemented
        s = to_rational(s)
        return PolyMap(self.arity, self.dim, tuple(s * a for a in self.coords))

    def permuted(self, sigma: Sequence[int]) -> "PolyMap":
        """The map ``(x1..xm) -> f(x_sigma(1), .., x_sigma(m))`` (0-based ``sigma``)."""
        sigma = _check_perm(sigma, self.arity)
        n = self.dim
        out = []
        for j in range(n):
            for idx in product(range(n), repeat=self.arity):
                out.append(self.coords[self._flat(j, [idx[s] for s in sigma])])
        return PolyMap(self.arity, n, tuple(out))

    def is_symmetric(self) -> bool:
        return poly_symmetry(self, "symmetric")

    def is_skew(self) -> bool:
        return poly_symmetry(self, "skew")

    def change_basis(self, P) -> "PolyMap":
        """``f'^j_{i..} = Q^j_c P^a1_i1 .. P^am_im f^c_{a1..am}`` for ``e'_i = P^j_i e_j``."""
        P, Q = _basis_matrices(P, self.dim)
        n, m = self.dim, self.arity
        shape = [n] * (m + 1)
        table = list(self.coords)
        # axis 0 transforms with Q, the argument axes with P (transposed)
        for axis in range(m + 1):
            mat = Q if axis == 0 else tuple(zip(*P))
            table = _contract_axis(table, shape, axis, mat)
        return PolyMap(m, n, tuple(table))


def _contract_axis(table: list, shape: list, axis: int, mat) -> list:
    """``out[.., a, ..] = sum_b mat[a][b] table[.., b, ..]`` along ``axis``."""
    n = shape[axis]
    inner = 1
    for s in shape[axis + 1:]:
        inner *= s
    outer = len(table) // (n * inner)
    out = [_ZERO] * len(table)
    for o in range(outer):
        base = o * n * inner
        for a in range(n):
            row = mat[a]
            for b in range(n):
                w = row[b]
                if w == 0:
                    continue
                src = base + b * inner
                dst = base + a * inner
                for t in range(inner):
                    v = table[src + t]
                    if v != 0:
                        out[dst + t] += w * v
    return out


def poly_linear_ops(f: PolyMap, g: PolyMap, s=1) -> PolyMap:
    """``f + s g``."""
    return f + to_rational(s) * g


def poly_change_basis(f: PolyMap, P) -> PolyMap:
    return f.change_basis(P)


def perm_sign(sigma: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(sigma)
    for i in range(len(sigma)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = sigma[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _check_perm(sigma: Sequence[int], m: int) -> tuple:
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(m)):
        raise AlgebraError(f"{sigma} is not a permutation of 0..{m - 1}")
    return sigma


def poly_symmetry(f: PolyMap, kind: str) -> bool:
    """Coordinate test for symmetric / skew-symmetric maps.

    Adjacent transpositions generate the symmetric group, so checking them is
    enough: each must fix the coordinates (symmetric) or negate them (skew).
    """
    if kind not in ("symmetric", "skew"):
        raise ValueError(f"kind must be 'symmetric' or 'skew', got {kind!r}")
    sign = 1 if kind == "symmetric" else -1
    m = f.arity
    for s in range(m - 1):
        sigma = list(range(m))
        sigma[s], sigma[s + 1] = sigma[s + 1], sigma[s]
        g = f.permuted(sigma)
        if any(a != sign * b for a, b in zip(g.coords, f.coords)):
            return False
    return True


@dataclass(frozen=True)
class PermTerm:
    """``a0 I_k1(x_s1) a1 ... I_km(x_sm) a_m`` with 0-based ``perm`` and ``gens``."""

    coefficients: tuple
    perm: tuple
    gens: tuple

    def __post_init__(self):
        m = len(self.perm)
        object.__setattr__(self, "perm", _check_perm(self.perm, m))
        object.__setattr__(self, "gens", tuple(int(k) for k in self.gens))
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if len(self.coefficients) != m + 1 or len(self.gens) != m:
            raise AlgebraError(f"a term of arity {m} needs {m + 1} coefficients and {m} generator indices")


@dataclass(frozen=True)
class PermTensorRep:
    arity: int
    dim: int
    terms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for t in self.terms:
            if len(t.perm) != self.arity:
                raise AlgebraError(f"term of arity {len(t.perm)} in a representation of arity {self.arity}")
            if any(a.dim != self.dim for a in t.coefficients):
                raise AlgebraError("term coefficient has the wrong dimension")

    def __add__(self, other: "PermTensorRep") -> "PermTensorRep":
        if (self.arity, self.dim) != (other.arity, other.dim):
            raise AlgebraError("representation shapes differ")
        return PermTensorRep(self.arity, self.dim, self.terms + other.terms)


def _gen_list(gens) -> tuple:
    return tuple(gens.generators) if isinstance(gens, GeneratorSet) else tuple(gens)


def _fold(A: Algebra, factors: list, convention: str) -> Element:
    if convention == "left":
        acc = factors[0]
        for x in factors[1:]:
            acc = A.mul(acc, x)
        return acc
    acc = factors[-1]
    for x in reversed(factors[:-1]):
        acc = A.mul(x, acc)
    return acc


def perm_rep_eval(rep: PermTensorRep, gens, xs: Sequence[Element], A: Algebra,
                  convention: str = "left") -> Element:
    """Evaluate every term and sum.

    Products fold left to right, ``((a0 y1) a1) y2 ...``, under the ``left``
    convention and right to left under ``right``.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"convention must be 'left' or 'right', got {convention!r}")
    if rep.dim != A.dim:
        raise AlgebraError("representation and algebra dimensions differ")
    if len(xs) != rep.arity:
        raise AlgebraError(f"representation of arity {rep.arity} called with {len(xs)} arguments")
    gl = _gen_list(gens)
    total = A.zero()
    for term in rep.terms:
        factors = [term.coefficients[0]]
        for s, k, a in zip(term.perm, term.gens, term.coefficients[1:]):
            if not 0 <= k < len(gl):
                raise AlgebraError(f"generator index {k} out of range for {len(gl)} generators")
            factors.append(gl[k](xs[s]))
            factors.append(a)
        total = total + _fold(A, factors, convention)
    return total


def perm_rep_to_coords(rep: PermTensorRep, gens, A: Algebra, convention: str = "left") -> PolyMap:
    return PolyMap.from_function(lambda *xs: perm_rep_eval(rep, gens, xs, A, convention), rep.arity, A.dim)


def fit_perm_rep(f: PolyMap, gens, A: Algebra, shapes=None, convention: str = "left"):
    """Look for a representation of ``f`` with basis-vector coefficients.

    Each shape is a ``(perm, gen_indices)`` pair; every choice of basis vectors
    ``e_p0 .. e_pm`` for the coefficients gives one candidate term, and the
    scalar weights of the candidates are found by an exact linear solve. By
    default all permutations are combined with all generator tuples.

    Returns ``(outcome, candidates)``: ``outcome`` is the solve result over
    weight vectors, ``candidates`` the terms the weights refer to. Use
    :func:`rep_from_weights` to turn a weight vector into a representation.
    """
    m, n = f.arity, f.dim
    gl = _gen_list(gens)
    if shapes is None:
        shapes = [(perm, ks) for perm in permutations(range(m)) for ks in product(range(len(gl)), repeat=m)]
    basis = [A.e(i) for i in range(n)]
    candidates = []
    columns = []
    for perm, ks in shapes:
        for ps in product(range(n), repeat=m + 1):
            term = PermTerm(tuple(basis[p] for p in ps), tuple(perm), tuple(ks))
            candidates.append(term)
            rep = PermTensorRep(m, n, (term,))
            columns.append(perm_rep_to_coords(rep, gl, A, convention).coords)
    M = tuple(tuple(col[r] for col in columns) for r in range(len(f.coords)))
    return linear_solve(M, f.coords, len(columns)), tuple(candidates)


def rep_from_weights(weights: Sequence, candidates: Sequence[PermTerm], arity: int, dim: int) -> PermTensorRep:
    terms = []
    for w, t in zip(weights, candidates):
        if w != 0:
            terms.append(PermTerm((w * t.coefficients[0],) + t.coefficients[1:], t.perm, t.gens))
    return PermTensorRep(arity, dim, tuple(terms))


def solution_weights(outcome):
    """A particular weight vector from a :func:`fit_perm_rep` outcome, or ``None``."""
    if isinstance(outcome, Unique):
        return outcome.solution
    if isinstance(outcome, Affine):
        return outcome.particular
    return None
