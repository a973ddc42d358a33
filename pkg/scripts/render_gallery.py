"""Write SVG drawings of the named corpus families and a few random seeds."""

import argparse
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from prelam import corpus
from prelam.render import RenderStyle, render


@dataclass
class Config:
    out: Path = Path("gallery")
    resolution: Fraction = Fraction(1, 32)
    seeds: int = 4
    size: int = 512


def main(cfg: Config):
    cfg.out.mkdir(parents=True, exist_ok=True)
    eps = cfg.resolution
    items = {f"prong-{k}": corpus.gen_prong(k, eps) for k in (3, 4, 5)}
    items.update({f"shell-{m}": corpus.gen_shell_family(m, eps) for m in (2, 3)})
    raw, a, b = corpus.gen_regular_two_completions(eps)
    items.update({"regular-raw": raw, "regular-first": a, "regular-second": b})
    items.update({f"random-{s}": corpus.gen_random(s, eps)[0] for s in range(cfg.seeds)})
    style = RenderStyle(size=cfg.size)
    for name, al in items.items():
        path = cfg.out / f"{name}.svg"
        path.write_bytes(render(al, style))
        print(path)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Config.out)
    ap.add_argument("--resolution", type=Fraction, default=Config.resolution)
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    ap.add_argument("--size", type=int, default=Config.size)
    a = ap.parse_args()
    main(Config(a.out, a.resolution, a.seeds, a.size))
