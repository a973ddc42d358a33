"""Time `regions` on every non-crossing matching of a grid.

The exhaustive 16-point grid has 853,467 matchings (a Motzkin number), so
the per-call cost decides whether the full sweep fits a time budget.

    python scripts/bench_regions.py --grids 8 10 12 14
"""

import argparse
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from oracles import noncrossing_matchings  # noqa: E402
from prelam.circle import Chord  # noqa: E402
from prelam.lamination import regions  # noqa: E402


@dataclass
class Config:
    grids: list = field(default_factory=lambda: [8, 10, 12, 14])


def sweep(g):
    ch = {(i, j): Chord(Fraction(i, g), Fraction(j, g)) for i in range(g) for j in range(i + 1, g)}
    systems = [[ch[p] for p in m] for m in noncrossing_matchings(g)]
    t = time.perf_counter()
    bad = sum(len(regions(s)) != len(s) + 1 for s in systems)
    dt = time.perf_counter() - t
    return len(systems), bad, dt


def main(cfg: Config):
    print(f"{'grid':>5} {'systems':>9} {'wrong':>6} {'seconds':>8} {'us/call':>8}")
    for g in cfg.grids:
        n, bad, dt = sweep(g)
        print(f"{g:>5} {n:>9} {bad:>6} {dt:>8.2f} {1e6 * dt / n:>8.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--grids", type=int, nargs="+", default=Config().grids)
    main(Config(ap.parse_args().grids))
