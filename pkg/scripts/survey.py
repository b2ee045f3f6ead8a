"""Structural survey of the built-in algebras.

For every catalog algebra prints dimension, unit, flags, nucleus and center
dimensions, B-matrix rank and the greedy generator set of L(A;A), under one
bracketing convention. Optionally repeats the numbers after a random change of
basis to show they do not move.

Usage: python3 scripts/survey.py [--convention left|right] [--seed N] [--rebase]
"""
import argparse
import random
from dataclasses import dataclass

from structalg import CATALOG, RunConfig, b_matrix, catalog, generator_set
from structalg.formats import format_element
from structalg.linsolve import rank


@dataclass(frozen=True)
class SurveyConfig:
    run: RunConfig = RunConfig()
    rebase: bool = False
    span: int = 2


def random_basis(rng, n, span):
    while True:
        P = tuple(tuple(rng.randint(-span, span) for _ in range(n)) for _ in range(n))
        if rank(P) == n:
            return P


def row(A, convention):
    g = generator_set(A, convention)
    unit = format_element(A.unit) if A.unit is not None else "none"
    return (f"{A.name:<16} {A.dim:>3} {unit:<18} {'yes' if A.is_commutative else 'no':<5} "
            f"{'yes' if A.is_associative else 'no':<5} {A.nucleus.dim:>3} {A.center.dim:>3} "
            f"{b_matrix(A, convention).rank:>5}  {len(g)} ({', '.join(g.labels)}) "
            f"orbits {'/'.join(map(str, g.orbit_dims))}")


def main(cfg: SurveyConfig):
    rng = random.Random(cfg.run.seed)
    print(f"convention: {cfg.run.convention}")
    print(f"{'algebra':<16} {'dim':>3} {'unit':<18} {'comm':<5} {'assoc':<5} {'nuc':>3} {'ctr':>3} {'rankB':>5}  generators")
    for name in CATALOG:
        A = catalog(name)
        print(row(A, cfg.run.convention))
        if cfg.rebase:
            print(row(A.change_basis(random_basis(rng, A.dim, cfg.span)), cfg.run.convention))


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--convention", choices=("left", "right"), default="left")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rebase", action="store_true")
    a = p.parse_args()
    main(SurveyConfig(RunConfig(a.convention, a.seed), a.rebase))
