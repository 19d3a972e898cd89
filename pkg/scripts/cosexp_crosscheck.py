"""Cross-check the closed-form cosexponential functions against their series.

Prints, per n, the largest |closed - series| on a y grid and the largest
deviation of the row sum from e^y.
"""
import argparse
import math
from dataclasses import dataclass

import numpy as np

from polarnc.cosexp import cosexp, g_series


@dataclass
class Config:
    n_min: int = 2
    n_max: int = 8
    y_min: float = -5.0
    y_max: float = 5.0
    step: float = 0.25


def run(cfg):
    ys = np.arange(cfg.y_min, cfg.y_max + cfg.step / 2, cfg.step)
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        cross = sums = 0.0
        for y in ys:
            g = cosexp(n, y).values
            cross = max(cross, max(abs(g[k] - g_series(n, k, y)) for k in range(n)))
            sums = max(sums, abs(math.fsum(g) - math.exp(y)) / math.exp(abs(y)))
        rows.append((n, cross, sums))
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--step", type=float, default=Config.step)
    args = p.parse_args()
    cfg = Config(n_max=args.n_max, step=args.step)
    print("n,max_abs_closed_minus_series,max_row_sum_deviation")
    for n, cross, sums in run(cfg):
        print(f"{n},{cross:.3e},{sums:.3e}")


if __name__ == "__main__":
    main()
