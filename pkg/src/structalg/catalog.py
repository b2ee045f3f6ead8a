"""Built-in algebras with fixed structure-constant tables.

complex        e0 = 1, e1 = i;            i*i = -1
quaternions    e0 = 1, e1..e3 = i, j, k;  ij = k, jk = i, ki = j, squares -1
octonions      e0 = 1, e1..e7 imaginary;  e_a e_b = e_c for each oriented
               triple (a, b, c) in OCTONION_TRIPLES and its cyclic shifts,
               e_b e_a = -e_c, e_a e_a = -1
dual           e0 = 1, e1 = eps;          eps*eps = 0
split_complex  e0 = 1, e1 = j;            j*j = +1
mat2           e0..e3 = E11, E12, E21, E22 (2x2 matrix units);
               E_ab E_cd = [b == c] E_ad, unit E11 + E22
"""
from __future__ import annotations

from itertools import product

from .algebra import Algebra, AlgebraError, make_algebra

OCTONION_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))

_QUATERNION_TRIPLES = ((1, 2, 3),)


def _cayley_dickson_like(name: str, dim: int, triples, labels) -> Algebra:
    entries = {}
    for i in range(dim):
        entries[(0, i, i)] = 1
        if i:
            entries[(i, 0, i)] = 1
            entries[(i, i, 0)] = -1
    for a, b, c in triples:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            entries[(x, y, z)] = 1
            entries[(y, x, z)] = -1
    return make_algebra(name, dim, [(i, j, k, v) for (i, j, k), v in sorted(entries.items())], labels)


def complex_numbers() -> Algebra:
    return make_algebra("complex", 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1)], ("1", "i"))


def quaternions() -> Algebra:
    return _cayley_dickson_like("quaternions", 4, _QUATERNION_TRIPLES, ("1", "i", "j", "k"))


def octonions() -> Algebra:
    return _cayley_dickson_like("octonions", 8, OCTONION_TRIPLES, tuple(f"e{i}" for i in range(8)))


def dual_numbers() -> Algebra:
    return make_algebra("dual", 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], ("1", "eps"))


def split_complex() -> Algebra:
    return make_algebra("split_complex", 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], ("1", "j"))


def mat2() -> Algebra:
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    entries = []
    for (x, (a, b)), (y, (c, d)) in product(enumerate(units), repeat=2):
        if b == c:
            entries.append((x, y, units.index((a, d)), 1))
    return make_algebra("mat2", 4, entries, ("E11", "E12", "E21", "E22"))


CATALOG = {
    "complex": complex_numbers,
    "quaternions": quaternions,
    "octonions": octonions,
    "dual": dual_numbers,
    "split_complex": split_complex,
    "mat2": mat2,
}

_cache: dict[str, Algebra] = {}


def catalog(name: str) -> Algebra:
    try:
        build = CATALOG[name]
    except KeyError:
        raise AlgebraError(f"unknown algebra {name!r}; valid names: {', '.join(CATALOG)}") from None
    if name not in _cache:
        _cache[name] = build()
    return _cache[name]
