"""Sizes and verdicts of generated laminations, one JSON line per instance.

    python scripts/corpus_stats.py --seeds 50 --resolution 1/64
"""

import argparse
import json
import time
from dataclasses import dataclass
from fractions import Fraction

from prelam import corpus
from prelam.leafspace import build_leaf_space
from prelam.properties import classify


@dataclass
class Config:
    seeds: int = 20
    resolution: Fraction = Fraction(1, 64)
    max_switches: int = 20
    max_degree: int = 5


def named(eps):
    yield "prong-3", corpus.gen_prong(3, eps)
    yield "prong-5", corpus.gen_prong(5, eps)
    yield "shell-2", corpus.gen_shell_family(2, eps)
    yield "shell-4", corpus.gen_shell_family(4, eps)
    yield "trivial", corpus.gen_trivial(eps)
    _, a, b = corpus.gen_regular_two_completions(eps)
    yield "regular-1", a
    yield "regular-2", b


def row(name, al, eps):
    t = time.perf_counter()
    rep = classify(al, eps, eps)
    p = build_leaf_space(al)
    return {"name": name, "leaves": len(al.leaves), "shells": len(al.shells),
            "stars": len(al.stars), "points": len(p.points), "switches": len(p.switches),
            "cyclics": [len(c.points) for c in p.cyclics], "pass": rep.passed,
            "seconds": round(time.perf_counter() - t, 4)}


def main(cfg: Config):
    eps = cfg.resolution
    for name, al in named(eps):
        print(json.dumps(row(name, al, eps)))
    for seed in range(cfg.seeds):
        al, _ = corpus.gen_random(seed, eps, cfg.max_switches, cfg.max_degree)
        print(json.dumps(row(f"random-{seed}", al, eps)))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    ap.add_argument("--resolution", type=Fraction, default=Config.resolution)
    ap.add_argument("--max-switches", type=int, default=Config.max_switches)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    a = ap.parse_args()
    main(Config(a.seeds, a.resolution, a.max_switches, a.max_degree))
