"""Acceptance criteria 1-10.

Each criterion is one ``acceptance`` label; parametrized items sharing a label
are aggregated into a single PASS/FAIL line in the terminal summary. Every
item must also finish inside the per-item budget (enforced by ``_budget``).
"""
import random
import time
from itertools import permutations, product
from pathlib import Path

import pytest

from structalg import (Affine, Element, Inconsistent, LinearMap, PermTensorRep, PermTerm, PolyMap, Subspace, Tensor2,
                       Unique, b_matrix, catalog, element_change_basis, generator_set, map_to_tensor, orbit_span,
                       orbits_equal, perm_rep_eval, perm_rep_to_coords, poly_symmetry, teichmuller, tensor_apply,
                       tensor_inverse, tensor_mul, tensor_to_map)
from structalg.formats import (parse_algebra, parse_map, parse_polymap, parse_tensor, serialize_algebra, serialize_map,
                               serialize_polymap, serialize_tensor)
from structalg.linmap import associator_map, left_shift, right_shift

from cli_cases import CASES, transcript
from conftest import ALL_ALGEBRAS, ITEM_BUDGET, rand_element, rand_invertible, rand_map, rand_rat, rand_tensor
from oracles import bareiss_rank, frac, table_mul, violates_commuting, violates_nucleus

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
GOLDEN = ROOT / "tests" / "golden"

AC1 = pytest.mark.acceptance("AC1 B-matrix ranks and column equivalence")
AC2 = pytest.mark.acceptance("AC2 generator sets")
AC3 = pytest.mark.acceptance("AC3 map-to-tensor trichotomy")
AC4 = pytest.mark.acceptance("AC4 orbit theorem")
AC5 = pytest.mark.acceptance("AC5 identity suite")
AC6 = pytest.mark.acceptance("AC6 representation homomorphism")
AC7 = pytest.mark.acceptance("AC7 center and nucleus against brute force")
AC8 = pytest.mark.acceptance("AC8 polylinear round trip and symmetry")
AC9 = pytest.mark.acceptance("AC9 change-of-basis invariance")
AC10 = pytest.mark.acceptance("AC10 formats and CLI goldens")


@pytest.fixture(autouse=True)
def _budget():
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < ITEM_BUDGET, f"item took {elapsed:.2f}s, budget {ITEM_BUDGET}s"


def seeded(*key):
    return random.Random(repr(("acceptance",) + key))


# 1 ---------------------------------------------------------------------------

@AC1
@pytest.mark.parametrize("name,expected", [("complex", 2), ("quaternions", 16), ("dual", 2)])
@pytest.mark.parametrize("convention", ["left", "right"])
def test_ac1_b_matrix(name, expected, convention):
    A = catalog(name)
    n = A.dim
    B = b_matrix(A, convention)
    assert B.rank == expected
    assert bareiss_rank(B.entries) == expected
    for p, r in product(range(n), repeat=2):
        column = tensor_to_map(Tensor2.basis(n, p, r), A, convention).vec()
        assert B.column(p, r) == column


# 2 ---------------------------------------------------------------------------

@AC2
@pytest.mark.parametrize("name", ALL_ALGEBRAS)
@pytest.mark.parametrize("convention", ["left", "right"])
def test_ac2_generator_set(name, convention):
    A = catalog(name)
    n = A.dim
    g = generator_set(A, convention)
    assert g.generators[0] == LinearMap.identity(n)
    cum = g.cumulative_dims
    assert all(a < b for a, b in zip(cum, cum[1:]))
    assert cum[-1] == n * n
    span = Subspace.span([], n * n)
    for f in g.generators:
        span = span + orbit_span(f, A, convention)
    assert span.dim == n * n
    if name == "quaternions":
        assert len(g) == 1 and g.orbit_dims == (16,)
    if name == "complex":
        assert len(g) == 2 and g.orbit_dims == (2, 2)
        assert g.generators[1] == LinearMap.elementary(2, 0, 0)


# 3 ---------------------------------------------------------------------------

@AC3
def test_ac3_unique_on_quaternions():
    H = catalog("quaternions")
    rng = seeded(3)
    for _ in range(20):
        f = rand_map(rng, 4)
        out = map_to_tensor(f, H)
        assert isinstance(out, Unique)
        assert tensor_to_map(out.solution, H) == f


@AC3
def test_ac3_affine_delta_on_complex():
    C = catalog("complex")
    delta = LinearMap.identity(2)
    out = map_to_tensor(delta, C)
    assert isinstance(out, Affine)
    assert len(out.nullspace) == 2
    assert out.particular == Tensor2.basis(2, 0, 0)
    assert tensor_to_map(out.particular, C) == delta
    for t in out.nullspace:
        assert tensor_to_map(t, C).is_zero()


@AC3
def test_ac3_inconsistent_conjugation():
    C = catalog("complex")
    conj = LinearMap.from_rows([[1, 0], [0, -1]])
    assert isinstance(map_to_tensor(conj, C), Inconsistent)


# 4 ---------------------------------------------------------------------------

@AC4
def test_ac4_nonsingular_quaternion_tensors():
    H = catalog("quaternions")
    delta = LinearMap.identity(4)
    uu = Tensor2.simple(H.unit, H.unit)
    rng = seeded(4)
    done = 0
    while done < 20:
        t = rand_tensor(rng, 4)
        s = tensor_inverse(t, H)
        if s is None:
            continue
        assert tensor_mul(t, s, H) == uu
        assert orbits_equal(delta, tensor_apply(t, delta, H), H)
        done += 1


@AC4
def test_ac4_singular_complex_tensor():
    C = catalog("complex")
    t = Tensor2.basis(2, 0, 0) + Tensor2.basis(2, 1, 1)
    assert tensor_inverse(t, C) is None
    delta = LinearMap.identity(2)
    assert orbit_span(tensor_apply(t, delta, C), C) <= orbit_span(delta, C)


# 5 ---------------------------------------------------------------------------

@AC5
@pytest.mark.parametrize("name", ALL_ALGEBRAS)
def test_ac5_identities(name):
    A = catalog(name)
    n = A.dim
    rng = seeded(5, name)
    saw_nonzero_associator = False
    for _ in range(100):
        a, b, c, d = (rand_element(rng, n) for _ in range(4))
        s = rand_rat(rng)
        assert A.mul(a + s * b, c) == A.mul(a, c) + s * A.mul(b, c)
        assert A.mul(c, a + s * b) == A.mul(c, a) + s * A.mul(c, b)
        assert teichmuller(A, a, b, c, d).is_zero()
        assert A.commutator(a, b) == -A.commutator(b, a)
        if not A.associator(a, b, c).is_zero():
            saw_nonzero_associator = True
    assert saw_nonzero_associator == (not A.is_associative)


@AC5
def test_ac5_shift_relations_on_octonions():
    O = catalog("octonions")
    rng = seeded(5, "shifts")
    for _ in range(100):
        a, b, x = (rand_element(rng, 8) for _ in range(3))
        ab = O.mul(a, b)
        # (ab)x = a(bx) + (a,b,x) and x(ab) = (xa)b - (x,a,b)
        assert left_shift(O, ab)(x) == left_shift(O, a)(left_shift(O, b)(x)) + associator_map(O, a, b, 2)(x)
        assert right_shift(O, ab)(x) == right_shift(O, b)(right_shift(O, a)(x)) - associator_map(O, a, b, 0)(x)


# 6 ---------------------------------------------------------------------------

@AC6
@pytest.mark.parametrize("name", ["complex", "quaternions", "mat2"])
def test_ac6_homomorphism(name):
    A = catalog(name)
    n = A.dim
    rng = seeded(6, name)
    for _ in range(50):
        s, t = rand_tensor(rng, n), rand_tensor(rng, n)
        f = rand_map(rng, n)
        assert tensor_apply(tensor_mul(s, t, A), f, A) == tensor_apply(s, tensor_apply(t, f, A), A)


# 7 ---------------------------------------------------------------------------

def _span(n, *vectors):
    return Subspace.span([tuple(v) for v in vectors], n)


def _non_member(S, n):
    return next((tuple(int(i == j) for i in range(n)) for j in range(n)
                 if tuple(int(i == j) for i in range(n)) not in S), None)


@AC7
@pytest.mark.parametrize("name,which,expected", [
    ("quaternions", "center", [(1, 0, 0, 0)]),
    ("octonions", "nucleus", [(1, 0, 0, 0, 0, 0, 0, 0)]),
    ("mat2", "center", [(1, 0, 0, 1)]),
    ("quaternions", "nucleus", [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
])
def test_ac7_subspaces(name, which, expected):
    A = catalog(name)
    n = A.dim
    S = getattr(A, which)
    assert S == _span(n, *expected)
    mul = table_mul(A.constants)

    def violates(v):
        bad = violates_nucleus(mul, n, v)
        if which == "center":
            bad = bad or violates_commuting(mul, n, v)
        return bad

    for v in S.basis:
        assert not violates(tuple(frac(x) for x in v))
    outsider = _non_member(S, n)
    if S.dim < n:
        assert outsider is not None and violates(outsider)


# 8 ---------------------------------------------------------------------------

def _random_rep(rng, A, arity, ngens, nterms=2):
    terms = []
    for _ in range(nterms):
        perm = rng.choice(list(permutations(range(arity))))
        gens = tuple(rng.randrange(ngens) for _ in range(arity))
        coeffs = tuple(rand_element(rng, A.dim) for _ in range(arity + 1))
        terms.append(PermTerm(coeffs, perm, gens))
    return PermTensorRep(arity, A.dim, tuple(terms))


@AC8
@pytest.mark.parametrize("name", ALL_ALGEBRAS)
@pytest.mark.parametrize("arity", [2, 3])
def test_ac8_round_trip(name, arity):
    A = catalog(name)
    gens = generator_set(A).generators
    rng = seeded(8, name, arity)
    rep = _random_rep(rng, A, arity, len(gens))
    f = perm_rep_to_coords(rep, gens, A)
    for _ in range(100):
        xs = [rand_element(rng, A.dim) for _ in range(arity)]
        assert f(*xs) == perm_rep_eval(rep, gens, xs, A)


@AC8
def test_ac8_symmetry_checks():
    assert poly_symmetry(PolyMap.commutator(catalog("quaternions")), "skew")
    assert poly_symmetry(PolyMap.multiplication(catalog("complex")), "symmetric")


# 9 ---------------------------------------------------------------------------

@AC9
@pytest.mark.parametrize("name", ALL_ALGEBRAS)
@pytest.mark.parametrize("trial", range(10))
def test_ac9_change_of_basis(name, trial):
    A = catalog(name)
    n = A.dim
    rng = seeded(9, name, trial)
    P = rand_invertible(rng, n)
    B = A.change_basis(P)
    conv = lambda x: element_change_basis(x, P)
    assert (B.is_commutative, B.is_associative) == (A.is_commutative, A.is_associative)
    assert (B.nucleus.dim, B.center.dim) == (A.nucleus.dim, A.center.dim)
    assert B.center == Subspace.span([conv(Element(v)).coords for v in A.center.basis], n)
    assert B.unit == conv(A.unit)
    fa, fb = PolyMap.associator(A), PolyMap.associator(A).change_basis(P)
    assert fb == PolyMap.associator(B)
    for _ in range(5):
        a, b, c = (rand_element(rng, n) for _ in range(3))
        assert B.mul(conv(a), conv(b)) == conv(A.mul(a, b))
        assert fb(conv(a), conv(b), conv(c)) == conv(fa(a, b, c))


# 10 --------------------------------------------------------------------------

_FORMATS = {".map": (parse_map, serialize_map), ".tensor": (parse_tensor, serialize_tensor),
            ".poly": (parse_polymap, serialize_polymap), ".alg": (parse_algebra, serialize_algebra)}


@AC10
@pytest.mark.parametrize("name", ALL_ALGEBRAS)
def test_ac10_catalog_round_trip(name):
    text = serialize_algebra(catalog(name))
    B = parse_algebra(text)
    assert B == catalog(name)
    assert serialize_algebra(B).encode() == text.encode()


@AC10
@pytest.mark.parametrize("path", sorted(p.name for p in FIXTURES.iterdir() if p.suffix != ".alg"))
def test_ac10_fixture_round_trip(path):
    parse, serialize = _FORMATS[Path(path).suffix]
    raw = (FIXTURES / path).read_bytes()
    assert serialize(parse(raw)).encode() == raw


@AC10
@pytest.mark.parametrize("name", sorted(CASES))
def test_ac10_golden(name, monkeypatch):
    monkeypatch.chdir(ROOT)
    assert transcript(CASES[name]).encode("utf-8") == (GOLDEN / f"{name}.txt").read_bytes()
