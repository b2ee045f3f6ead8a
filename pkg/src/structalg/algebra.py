"""Free finite-dimensional algebras given by structure constants.

An algebra of dimension ``n`` is fixed by the table ``C[i][j][k]``, the
coefficient of ``e_k`` in the product ``e_i * e_j``. Everything else
(commutators, associators, unit, nucleus, center) is derived from it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .linsolve import Affine, Subspace, Unique, linear_solve, matrix_inverse, nullspace
from .scalar import Rational, format_rational, to_rational

_ZERO = Rational(0)


class AlgebraError(ValueError):
    """Invalid algebra construction or an operation on incompatible operands."""


@dataclass(frozen=True)
class Element:
    """Coordinates ``a^i`` of a vector ``a = a^i e_i``."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(x if type(x) is Rational else to_rational(x) for x in self.coords))

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls((_ZERO,) * n)

    @classmethod
    def basis(cls, n: int, i: int) -> "Element":
        if not 0 <= i < n:
            raise AlgebraError(f"basis index {i} out of range for dimension {n}")
        return cls(tuple(Rational(int(k == i)) for k in range(n)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Element") -> None:
        if not isinstance(other, Element):
            raise TypeError(f"expected Element, got {type(other).__name__}")
        if other.dim != self.dim:
            raise AlgebraError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(tuple(-a for a in self.coords))

    def __rmul__(self, s) -> "Element":
        if isinstance(s, Element):
            return NotImplemented
        s = to_rational(s)
        return Element(tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(x) for x in self.coords) + ")"


@dataclass(frozen=True)
class Algebra:
    """A free algebra of dimension ``dim`` over the rationals.

    ``constants[i][j]`` is the coordinate tuple of ``e_i * e_j``. Build
    instances with :func:`make_algebra`; the unit is detected on construction.
    """

    name: str
    dim: int
    constants: tuple
    unit: Element | None = field(default=None, compare=False)
    labels: tuple | None = None

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise AlgebraError("dimension must be positive")
        if len(self.constants) != n or any(len(r) != n or any(len(v) != n for v in r) for r in self.constants):
            raise AlgebraError(f"constants must be an {n}x{n}x{n} table")
        if self.labels is not None and len(self.labels) != n:
            raise AlgebraError(f"{len(self.labels)} basis labels given for dimension {n}")
        object.__setattr__(self, "unit", find_unit(self))

    def C(self, i: int, j: int, k: int) -> Rational:
        return self.constants[i][j][k]

    @cached_property
    def _sparse(self) -> tuple:
        # per (i, j): nonzero (k, C^k_ij) pairs
        return tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.constants[i][j]) if c != 0) for j in range(self.dim))
            for i in range(self.dim)
        )

    def e(self, i: int) -> Element:
        return Element.basis(self.dim, i)

    def zero(self) -> Element:
        return Element.zero(self.dim)

    def element(self, coords: Iterable) -> Element:
        x = Element(tuple(coords))
        self._check(x)
        return x

    def _check(self, *xs: Element) -> None:
        for x in xs:
            if not isinstance(x, Element):
                raise TypeError(f"expected Element, got {type(x).__name__}")
            if x.dim != self.dim:
                raise AlgebraError(f"element of dimension {x.dim} used in algebra of dimension {self.dim}")

    def mul(self, a: Element, b: Element) -> Element:
        """``(ab)^k = a^i b^j C^k_ij``."""
        self._check(a, b)
        out = [_ZERO] * self.dim
        sp = self._sparse
        for i, ai in enumerate(a.coords):
            if ai == 0:
                continue
            row = sp[i]
            for j, bj in enumerate(b.coords):
                if bj == 0:
                    continue
                s = ai * bj
                for k, c in row[j]:
                    out[k] += s * c
        return Element(tuple(out))

    def commutator(self, a: Element, b: Element) -> Element:
        return self.mul(a, b) - self.mul(b, a)

    def associator(self, a: Element, b: Element, c: Element) -> Element:
        return self.mul(self.mul(a, b), c) - self.mul(a, self.mul(b, c))

    @cached_property
    def is_commutative(self) -> bool:
        n = self.dim
        return all(self.constants[i][j] == self.constants[j][i] for i in range(n) for j in range(i + 1, n))

    @cached_property
    def is_associative(self) -> bool:
        basis = [self.e(i) for i in range(self.dim)]
        return all(self.associator(a, b, c).is_zero() for a, b, c in product(basis, repeat=3))

    def opposite(self) -> "Algebra":
        n = self.dim
        table = tuple(tuple(self.constants[j][i] for j in range(n)) for i in range(n))
        return Algebra(_opposite_name(self.name), n, table, labels=self.labels)

    @cached_property
    def nucleus(self) -> Subspace:
        return Subspace.kernel(self._nucleus_rows(), self.dim)

    @cached_property
    def center(self) -> Subspace:
        # restrict to the nucleus: solve for combinations of its basis that commute
        N = self.nucleus
        if N.dim == 0:
            return N
        n = self.dim
        gens = [Element(v) for v in N.basis]
        cols = [[c for i in range(n) for c in self.commutator(g, self.e(i)).coords] for g in gens]
        M = [tuple(col[r] for col in cols) for r in range(n * n)]
        lam = nullspace(M, len(gens))
        return Subspace.span((tuple(sum((l * g.coords[k] for l, g in zip(v, gens)), _ZERO) for k in range(n))
                              for v in lam), n)

    def _nucleus_rows(self) -> list:
        # one linear equation per (slot, i, j, coordinate): the associator with
        # the unknown in that slot, expanded over the unknown's coordinates
        n = self.dim
        T = self._basis_associators()
        rows = []
        for i, j in product(range(n), repeat=2):
            for k in range(n):
                rows.append(tuple(T[s][i][j][k] for s in range(n)))
                rows.append(tuple(T[i][s][j][k] for s in range(n)))
                rows.append(tuple(T[i][j][s][k] for s in range(n)))
        return [r for r in rows if any(r)]

    def _basis_associators(self) -> list:
        # T[a][b][c] = coordinates of (e_a, e_b, e_c), straight from the table
        n = self.dim
        sp = self._sparse
        T = [[[[_ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for a, b in product(range(n), repeat=2):
            for l, c1 in sp[a][b]:
                for c in range(n):
                    out = T[a][b][c]
                    for k, c2 in sp[l][c]:
                        out[k] += c1 * c2
        for b, c in product(range(n), repeat=2):
            for l, c1 in sp[b][c]:
                for a in range(n):
                    out = T[a][b][c]
                    for k, c2 in sp[a][l]:
                        out[k] -= c1 * c2
        return T

    def change_basis(self, P: Sequence[Sequence]) -> "Algebra":
        """Rewrite the structure constants in the basis ``e'_i = P^j_i e_j``.

        ``P[j][i]`` holds ``P^j_i``, so the columns of ``P`` are the new basis
        vectors in old coordinates. Raises :class:`AlgebraError` if singular.
        """
        P, Q = _basis_matrices(P, self.dim)
        n = self.dim
        C = self.constants
        # contract one index at a time: O(n^4) per stage
        t1 = [[[sum(P[a][i] * C[a][b][c] for a in range(n) if P[a][i] != 0) for c in range(n)]
               for b in range(n)] for i in range(n)]
        t2 = [[[sum(P[b][j] * t1[i][b][c] for b in range(n) if P[b][j] != 0) for c in range(n)]
               for j in range(n)] for i in range(n)]
        table = tuple(
            tuple(tuple(sum((Q[k][c] * t2[i][j][c] for c in range(n) if Q[k][c] != 0), _ZERO)
                        for k in range(n)) for j in range(n))
            for i in range(n)
        )
        return Algebra(self.name, n, tuple(tuple(tuple(Rational(x) for x in v) for v in r) for r in table),
                       labels=None)


def _opposite_name(name: str) -> str:
    return name[: -len("^op")] if name.endswith("^op") else name + "^op"


def _basis_matrices(P, n: int):
    P = tuple(tuple(to_rational(x) for x in row) for row in P)
    if len(P) != n or any(len(r) != n for r in P):
        raise AlgebraError(f"basis change matrix must be {n}x{n}")
    try:
        Q = matrix_inverse(P)
    except ValueError:
        raise AlgebraError("basis change matrix is singular") from None
    return P, Q


def element_change_basis(a: Element, P: Sequence[Sequence]) -> Element:
    """Coordinates of ``a`` in the basis ``e'_i = P^j_i e_j``: ``a'^i = Q^i_j a^j``."""
    _, Q = _basis_matrices(P, a.dim)
    return Element(tuple(sum((q * x for q, x in zip(row, a.coords)), _ZERO) for row in Q))


def make_algebra(name: str, dim: int, entries: Iterable[tuple], labels: Sequence[str] | None = None) -> Algebra:
    """Build an algebra from sparse ``(i, j, k, value)`` entries: ``e_i e_j`` gains ``value e_k``."""
    n = int(dim)
    if n < 1:
        raise AlgebraError(f"dimension must be positive, got {dim}")
    table = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    seen = set()
    for entry in entries:
        i, j, k, value = entry
        if not all(0 <= x < n for x in (i, j, k)):
            raise AlgebraError(f"index out of range in entry ({i}, {j}, {k}) for dimension {n}")
        if (i, j, k) in seen:
            raise AlgebraError(f"duplicate structure constant entry ({i}, {j}, {k})")
        seen.add((i, j, k))
        table[i][j][k] = to_rational(value)
    frozen = tuple(tuple(tuple(v) for v in r) for r in table)
    return Algebra(name, n, frozen, labels=tuple(labels) if labels is not None else None)


def find_unit(A: Algebra) -> Element | None:
    """The two-sided unit of ``A``, or ``None``.

    Solves ``u^i C^k_ij = delta^k_j`` and ``u^i C^k_ji = delta^k_j`` together.
    """
    n = A.dim
    C = A.constants
    rows, rhs = [], []
    for j, k in product(range(n), repeat=2):
        rows.append(tuple(C[i][j][k] for i in range(n)))
        rhs.append(Rational(int(j == k)))
        rows.append(tuple(C[j][i][k] for i in range(n)))
        rhs.append(Rational(int(j == k)))
    out = linear_solve(rows, rhs, n)
    if isinstance(out, Unique):
        u = Element(out.solution)
    elif isinstance(out, Affine):
        # a unit is unique when it exists, so this branch means a degenerate table
        u = Element(out.particular)
    else:
        return None
    _check_unit_central(A, u)
    return u


def _check_unit_central(A: Algebra, u: Element) -> None:
    # d -> d*u must land in the center: u commutes and associates with the basis
    basis = [A.e(i) for i in range(A.dim)]
    for x in basis:
        if A.mul(u, x) != x or A.mul(x, u) != x:
            raise AlgebraError(f"unit candidate {u} fails the unit law on {x}")
    for x, y in product(basis, repeat=2):
        if not (A.associator(u, x, y).is_zero() and A.associator(x, u, y).is_zero()
                and A.associator(x, y, u).is_zero()):
            raise AlgebraError(f"unit {u} is not in the nucleus")


def teichmuller(A: Algebra, a: Element, b: Element, c: Element, d: Element) -> Element:
    """``a(b,c,d) - (ab,c,d) + (a,bc,d) - (a,b,cd) + (a,b,c)d``; zero in every algebra."""
    m, asc = A.mul, A.associator
    return (m(a, asc(b, c, d)) - asc(m(a, b), c, d) + asc(a, m(b, c), d)
            - asc(a, b, m(c, d)) + m(asc(a, b, c), d))
