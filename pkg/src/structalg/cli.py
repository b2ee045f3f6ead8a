"""Command-line front end.

Exit status: 0 success, 1 when a predicate subcommand answers no
(``orbit-eq``, ``poly-check``, a failing ``check``), 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from .algebra import Algebra, AlgebraError, Element, teichmuller
from .catalog import CATALOG, catalog
from .config import RunConfig
from .formats import (
    ParseError,
    format_element,
    parse_algebra,
    parse_element,
    parse_map,
    parse_polymap,
    parse_tensor,
    serialize_algebra,
    serialize_map,
    serialize_tensor,
)
from .linmap import Affine, Unique, b_matrix, generator_set, map_to_tensor, orbits_equal, tensor_to_map
from .polymap import poly_symmetry
from .scalar import Rational, format_rational

MAX_CLI_ARITY = 4


class UsageError(Exception):
    pass


def random_element(rng: random.Random, n: int, span: int = 3) -> Element:
    """Small random rationals; the seeded generator makes reports reproducible."""
    return Element(tuple(Rational(rng.randint(-span, span), rng.randint(1, span)) for _ in range(n)))


def load_algebra(source: str) -> Algebra:
    if source.startswith("builtin:"):
        name = source[len("builtin:"):]
        if name not in CATALOG:
            raise UsageError(f"unknown builtin algebra {name!r}; valid names: {', '.join(CATALOG)}")
        return catalog(name)
    return parse_algebra(_read(source))


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not UTF-8 text") from None


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _subspace_lines(label: str, S) -> list:
    out = [f"{label} dim: {S.dim}"]
    out += [f"  {format_element(Element(row))}" for row in S.rows]
    return out


def _square(f, A: Algebra, what: str):
    if (f.target_dim, f.source_dim) != (A.dim, A.dim):
        raise UsageError(f"{what} is {f.target_dim}x{f.source_dim}, algebra has dimension {A.dim}")
    return f


def cmd_info(args, A: Algebra, out) -> int:
    out.append(f"name: {A.name}")
    out.append(f"dim: {A.dim}")
    out.append(f"unit: {format_element(A.unit) if A.unit is not None else 'none'}")
    out.append(f"commutative: {_yn(A.is_commutative)}")
    out.append(f"associative: {_yn(A.is_associative)}")
    out.append(f"nucleus dim: {A.nucleus.dim}")
    out.append(f"center dim: {A.center.dim}")
    return 0


def cmd_mul(args, A: Algebra, out) -> int:
    a = parse_element(args.a, A.dim)
    b = parse_element(args.b, A.dim)
    out.append(format_element(A.mul(a, b)))
    return 0


def cmd_check(args, A: Algebra, out) -> int:
    rng = random.Random(args.config.seed)
    ok = True
    for _ in range(args.config.samples):
        a, b, c, d = (random_element(rng, A.dim) for _ in range(4))
        if not teichmuller(A, a, b, c, d).is_zero():
            ok = False
    out.append(f"commutative: {_yn(A.is_commutative)}, associative: {_yn(A.is_associative)}, "
               f"Teichmüller: {'pass' if ok else 'FAIL'}")
    return 0 if ok else 1


def cmd_center(args, A: Algebra, out) -> int:
    out.extend(_subspace_lines("center", A.center))
    return 0


def cmd_nucleus(args, A: Algebra, out) -> int:
    out.extend(_subspace_lines("nucleus", A.nucleus))
    return 0


def cmd_bmatrix(args, A: Algebra, out) -> int:
    B = b_matrix(A, args.config.convention)
    out.append(f"rank: {B.rank}")
    out.extend(" ".join(format_rational(x) for x in row) for row in B.entries)
    return 0


def cmd_to_tensor(args, A: Algebra, out) -> int:
    f = _square(parse_map(_read(args.mapfile)), A, "map")
    res = map_to_tensor(f, A, args.config.convention)
    if isinstance(res, Unique):
        out.append("UNIQUE")
        out.append(serialize_tensor(res.solution).rstrip("\n"))
    elif isinstance(res, Affine):
        out.append(f"AFFINE nullspace dim: {len(res.nullspace)}")
        out.append("particular:")
        out.append(serialize_tensor(res.particular).rstrip("\n"))
        for i, t in enumerate(res.nullspace):
            out.append(f"nullspace {i}:")
            out.append(serialize_tensor(t).rstrip("\n"))
    else:
        out.append("INCONSISTENT")
    return 0


def cmd_from_tensor(args, A: Algebra, out) -> int:
    t = parse_tensor(_read(args.tensorfile))
    if t.dim != A.dim:
        raise UsageError(f"tensor has dimension {t.dim}, algebra has dimension {A.dim}")
    out.append(serialize_map(tensor_to_map(t, A, args.config.convention)).rstrip("\n"))
    return 0


def cmd_gens(args, A: Algebra, out) -> int:
    g = generator_set(A, args.config.convention)
    out.append(f"generators: {len(g)} ({', '.join(g.labels)}); "
               f"orbit dims: {', '.join(map(str, g.orbit_dims))}")
    out.append(f"cumulative dims: {', '.join(map(str, g.cumulative_dims))}")
    for label, f in zip(g.labels, g.generators):
        out.append(f"generator {label}:")
        out.append(serialize_map(f).rstrip("\n"))
    return 0


def cmd_orbit_eq(args, A: Algebra, out) -> int:
    f = _square(parse_map(_read(args.map1)), A, "first map")
    g = _square(parse_map(_read(args.map2)), A, "second map")
    eq = orbits_equal(f, g, A, args.config.convention)
    out.append("orbits equal: " + _yn(eq))
    return 0 if eq else 1


def _load_poly(path: str, A: Algebra):
    f = parse_polymap(_read(path))
    if f.dim != A.dim:
        raise UsageError(f"poly-map has dimension {f.dim}, algebra has dimension {A.dim}")
    if f.arity > MAX_CLI_ARITY:
        raise UsageError(f"arity {f.arity} exceeds the CLI limit of {MAX_CLI_ARITY}")
    return f


def cmd_poly_eval(args, A: Algebra, out) -> int:
    f = _load_poly(args.polyfile, A)
    if len(args.elements) != f.arity:
        raise UsageError(f"poly-map has arity {f.arity}, got {len(args.elements)} elements")
    xs = [parse_element(e, A.dim) for e in args.elements]
    out.append(format_element(f(*xs)))
    return 0


def cmd_poly_check(args, A: Algebra, out) -> int:
    f = _load_poly(args.polyfile, A)
    ok = poly_symmetry(f, args.kind)
    out.append(f"{args.kind}: {_yn(ok)}")
    return 0 if ok else 1


def cmd_change_basis(args, A: Algebra, out) -> int:
    P = _square(parse_map(_read(args.pfile)), A, "basis change matrix")
    out.append(serialize_algebra(A.change_basis(P.matrix)).rstrip("\n"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", required=True, metavar="PATH|builtin:NAME")
    common.add_argument("--convention", choices=("left", "right"), default="left")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=100)

    parser = argparse.ArgumentParser(prog="structalg", description="Exact structure-constant algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
        return p

    add("info", cmd_info, "dimension, unit, flags, nucleus and center dimensions")
    p = add("mul", cmd_mul, "product of two elements (e<i> or comma-separated coordinates)")
    p.add_argument("a")
    p.add_argument("b")
    add("check", cmd_check, "commutativity, associativity and a seeded Teichmuller identity check")
    add("center", cmd_center, "basis of the center")
    add("nucleus", cmd_nucleus, "basis of the nucleus")
    add("bmatrix", cmd_bmatrix, "rank and entries of the B-matrix")
    p = add("to-tensor", cmd_to_tensor, "standard components of a tensor representing a map")
    p.add_argument("mapfile")
    p = add("from-tensor", cmd_from_tensor, "map x -> sum g^pr e_p x e_r of a tensor")
    p.add_argument("tensorfile")
    add("gens", cmd_gens, "generator set of L(A;A)")
    p = add("orbit-eq", cmd_orbit_eq, "whether two maps have the same orbit")
    p.add_argument("map1")
    p.add_argument("map2")
    p = add("poly-eval", cmd_poly_eval, "evaluate a poly-map")
    p.add_argument("polyfile")
    p.add_argument("elements", nargs="*")
    p = add("poly-check", cmd_poly_check, "symmetry test for a poly-map")
    p.add_argument("polyfile")
    p.add_argument("--kind", choices=("symmetric", "skew"), required=True)
    p = add("change-basis", cmd_change_basis, "structure constants in a new basis (P given as a map file)")
    p.add_argument("pfile")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.config = RunConfig(args.convention, args.seed, args.samples)
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    out: list = []
    try:
        A = load_algebra(args.algebra)
        status = args.func(args, A, out)
    except (UsageError, ParseError, AlgebraError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    stdout.write("\n".join(out) + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
