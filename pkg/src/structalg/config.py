"""Run settings shared by the CLI and the scripts."""
from __future__ import annotations

from dataclasses import dataclass

CONVENTIONS = ("left", "right")


@dataclass(frozen=True)
class RunConfig:
    """``convention`` picks the bracketing ``(a x) b`` (left) or ``a (x b)`` (right).

    ``seed`` and ``samples`` drive randomized checks, which are reproducible
    for a fixed seed.
    """

    convention: str = "left"
    seed: int = 0
    samples: int = 100

    def __post_init__(self):
        if self.convention not in CONVENTIONS:
            raise ValueError(f"convention must be 'left' or 'right', got {self.convention!r}")
        if self.samples < 0:
            raise ValueError("samples must be non-negative")
