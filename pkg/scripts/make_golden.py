"""Regenerate the CLI golden transcripts in tests/golden/.

Run from the repository root. Review the diff before committing: the
transcripts are the reference the test suite compares against byte for byte.
"""
import io
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from cli_cases import CASES, transcript  # noqa: E402


def main():
    out_dir = ROOT / "tests" / "golden"
    out_dir.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        (out_dir / f"{name}.txt").write_text(transcript(argv), encoding="utf-8")
        print(f"wrote {name}")


if __name__ == "__main__":
    main()
