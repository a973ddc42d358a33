"""Gap counts and degree evidence for the slices of K with q <= max_q."""

import argparse
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from prelam.cantor import slice_gaps, slice_order_report


@dataclass
class Config:
    max_q: int = 6
    depth: int = 8
    lo: Fraction = Fraction(-12)
    hi: Fraction = Fraction(12)


def main(cfg: Config):
    levels = sorted({Fraction(p, q) for q in range(1, cfg.max_q + 1)
                     for p in range(q + 1) if gcd(p, q) == 1})
    print(f"{'r':>5} {'central':>8} {'blocks':>7} {'copy':>7} {'q-like':>7} psi found")
    for r in levels:
        kinds = Counter(g.kind for g in slice_gaps(r, (cfg.lo, cfg.hi), cfg.depth))
        rep = slice_order_report(r, (cfg.lo, cfg.hi), cfg.depth)
        print(f"{str(r):>5} {kinds['central']:>8} {kinds['inter-block']:>7} "
              f"{kinds['cantor-copy']:>7} {str(rep.q_like):>7} {sorted(rep.psi_found)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=Config.max_q)
    ap.add_argument("--depth", type=int, default=Config.depth)
    ap.add_argument("--window", type=Fraction, nargs=2, default=(Config.lo, Config.hi))
    a = ap.parse_args()
    main(Config(a.max_q, a.depth, *a.window))
