"""Run the acceptance suite and enforce the 30 s total budget.

Usage: python3 scripts/run_acceptance.py [extra pytest args]

Prints pytest's per-criterion PASS/FAIL summary and exits non-zero if any
criterion fails or the whole run exceeds the budget.
"""
import subprocess
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
TOTAL_BUDGET = 30.0


def main(argv):
    t0 = time.perf_counter()
    status = subprocess.call([sys.executable, "-m", "pytest", "-q", "tests/test_acceptance.py", *argv], cwd=ROOT)
    elapsed = time.perf_counter() - t0
    within = elapsed < TOTAL_BUDGET
    print(f"{'PASS' if within else 'FAIL'}  total wall time {elapsed:.1f}s (budget {TOTAL_BUDGET:.0f}s)")
    return status or (0 if within else 1)


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
