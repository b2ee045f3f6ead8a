"""Exact Gaussian elimination over the rationals.

Pivoting is canonical: columns are scanned left to right and the pivot is the
first nonzero entry at or below the current pivot row. Reduced row echelon
forms are therefore unique, which is what lets :class:`Subspace` compare by
value.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, Iterable, Sequence, TypeVar, Union

from .scalar import Rational

T = TypeVar("T")

Vector = tuple  # tuple[Rational, ...]
Matrix = Sequence[Sequence[Rational]]

_ZERO = Rational(0)
_ONE = Rational(1)


@dataclass(frozen=True)
class Unique(Generic[T]):
    solution: T


@dataclass(frozen=True)
class Affine(Generic[T]):
    particular: T
    nullspace: tuple  # tuple[T, ...]


@dataclass(frozen=True)
class Inconsistent:
    pass


SolveOutcome = Union[Unique, Affine, Inconsistent]


def _shape(M: Matrix, ncols: int | None) -> tuple[int, int]:
    rows = len(M)
    if ncols is None:
        if rows == 0:
            raise ValueError("cannot infer column count of an empty matrix; pass ncols")
        ncols = len(M[0])
    for r, row in enumerate(M):
        if len(row) != ncols:
            raise ValueError(f"row {r} has length {len(row)}, expected {ncols}")
    return rows, ncols


def rref(M: Matrix, ncols: int | None = None, pivot_limit: int | None = None):
    """Return ``(rows, pivots)`` of the reduced row echelon form of ``M``.

    Only the first ``pivot_limit`` columns are eligible as pivot columns;
    this is how augmented systems keep the right-hand side out of the pivots.
    Zero rows are kept at the bottom so row indices still line up with ``M``.
    """
    nrows, ncols = _shape(M, ncols)
    limit = ncols if pivot_limit is None else pivot_limit
    A = [[Rational(x) for x in row] for row in M]
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        for i in range(r, nrows):
            if A[i][c] != 0:
                break
        else:
            continue
        if i != r:
            A[r], A[i] = A[i], A[r]
        prow = A[r]
        inv = _ONE / prow[c]
        if inv != 1:
            prow = [x * inv for x in prow]
            A[r] = prow
        nz = [j for j in range(c, ncols) if prow[j] != 0]
        for i in range(nrows):
            if i == r:
                continue
            row = A[i]
            f = row[c]
            if f == 0:
                continue
            for j in nz:
                row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in A], pivots


def rank(M: Matrix, ncols: int | None = None) -> int:
    return len(rref(M, ncols)[1])


def linear_solve(M: Matrix, rhs: Sequence[Rational], ncols: int | None = None) -> SolveOutcome:
    """Solve ``M x = rhs`` exactly.

    Returns :class:`Unique`, :class:`Affine` (free variables set to zero in the
    particular solution; one nullspace vector per free column, carrying a 1 in
    that column) or :class:`Inconsistent`. Vectors are tuples of rationals.
    """
    nrows, ncols = _shape(M, ncols)
    if len(rhs) != nrows:
        raise ValueError(f"rhs has length {len(rhs)}, matrix has {nrows} rows")
    aug = [list(row) + [rhs[i]] for i, row in enumerate(M)]
    R, pivots = rref(aug, ncols + 1, pivot_limit=ncols)
    rk = len(pivots)
    for i in range(rk, nrows):
        if R[i][ncols] != 0:
            return Inconsistent()
    x = [_ZERO] * ncols
    for i, c in enumerate(pivots):
        x[c] = R[i][ncols]
    if rk == ncols:
        return Unique(tuple(x))
    return Affine(tuple(x), _null_vectors(R, pivots, ncols))


def _null_vectors(R, pivots: list[int], ncols: int) -> tuple:
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [_ZERO] * ncols
        v[f] = _ONE
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(tuple(v))
    return tuple(basis)


def nullspace(M: Matrix, ncols: int | None = None) -> tuple:
    nrows, ncols = _shape(M, ncols)
    if nrows == 0:
        return tuple(tuple(_ONE if j == i else _ZERO for j in range(ncols)) for i in range(ncols))
    R, pivots = rref(M, ncols)
    return _null_vectors(R, pivots, ncols)


def matrix_inverse(P: Matrix) -> tuple:
    """Exact inverse of a square matrix; raises ``ValueError`` when singular."""
    n, m = _shape(P, None)
    if n != m:
        raise ValueError(f"matrix is {n}x{m}, not square")
    aug = [list(row) + [_ONE if j == i else _ZERO for j in range(n)] for i, row in enumerate(P)]
    R, pivots = rref(aug, 2 * n, pivot_limit=n)
    if len(pivots) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)


def mat_mul(A: Matrix, B: Matrix) -> tuple:
    inner = len(B)
    cols = len(B[0]) if inner else 0
    out = []
    for row in A:
        if len(row) != inner:
            raise ValueError("incompatible matrix shapes")
        acc = [_ZERO] * cols
        for k, a in enumerate(row):
            if a == 0:
                continue
            bk = B[k]
            for j in range(cols):
                if bk[j] != 0:
                    acc[j] += a * bk[j]
        out.append(tuple(acc))
    return tuple(out)


def identity(n: int) -> tuple:
    return tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient`` held as its reduced row echelon basis.

    Two subspaces are equal exactly when their reduced bases are equal.
    """

    ambient: int
    rows: tuple = ()

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Rational]], ambient: int) -> "Subspace":
        vecs = [tuple(Rational(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {ambient}")
        if not vecs:
            return cls(ambient)
        R, pivots = rref(vecs, ambient)
        return cls(ambient, tuple(R[: len(pivots)]))

    @classmethod
    def kernel(cls, M: Matrix, ncols: int) -> "Subspace":
        return cls.span(nullspace(M, ncols), ncols)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, identity(ambient))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> tuple:
        return self.rows

    @property
    def pivots(self) -> tuple:
        return tuple(next(j for j, x in enumerate(row) if x != 0) for row in self.rows)

    def _residual(self, v: Sequence[Rational]) -> list:
        if len(v) != self.ambient:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient}")
        return _reduce(self.rows, self.pivots, v)

    def __contains__(self, v) -> bool:
        return not any(self._residual(v))

    def __le__(self, other: "Subspace") -> bool:
        return all(row in other for row in self.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        if other.ambient != self.ambient:
            raise ValueError("ambient dimensions differ")
        return self.extend(other.rows)

    def extend(self, vectors: Iterable[Sequence[Rational]]) -> "Subspace":
        """Span of this subspace together with ``vectors``, built incrementally."""
        rows = [list(r) for r in self.rows]
        pivots = list(self.pivots)
        n = self.ambient
        for v in vectors:
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
            w = _reduce(rows, pivots, v)
            lead = next((j for j, x in enumerate(w) if x != 0), None)
            if lead is None:
                continue
            inv = _ONE / w[lead]
            w = [x * inv for x in w]
            nz = [j for j in range(lead, n) if w[j] != 0]
            for row in rows:
                f = row[lead]
                if f != 0:
                    for j in nz:
                        row[j] -= f * w[j]
            k = 0
            while k < len(pivots) and pivots[k] < lead:
                k += 1
            rows.insert(k, w)
            pivots.insert(k, lead)
        return Subspace(n, tuple(tuple(r) for r in rows))


def _reduce(rows, pivots, v) -> list:
    w = [Rational(x) for x in v]
    for row, p in zip(rows, pivots):
        f = w[p]
        if f == 0:
            continue
        for j in range(p, len(w)):
            if row[j] != 0:
                w[j] -= f * row[j]
    return w
