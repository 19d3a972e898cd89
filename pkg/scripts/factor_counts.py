"""Count the distinct factorizations of u^2 - 1 and of random cubics.

For u^2 - 1 the count is 2^floor(n/2). For a cubic with random real roots
the count is reported as observed, together with whether the original
roots appear among the enumerated sets.
"""
import argparse
from dataclasses import dataclass

import numpy as np

from polarnc import PolarNComplex
from polarnc.polynomial import NPolynomial, enumerate_rootsets, verify_factorization


@dataclass
class Config:
    n_max: int = 8
    cubics_per_n: int = 3
    seed: int = 0
    cap: int = 4096


def square_minus_one(n):
    return NPolynomial((PolarNComplex.zero(n), PolarNComplex.scalar(n, -1.0)))


def contains(rootsets, roots, tol=1e-7):
    target = sorted(tuple(np.round(r.x, 6)) for r in roots)
    for rs in rootsets:
        got = sorted(tuple(np.round(r.x, 6)) for r in rs.roots)
        if np.allclose(np.array(got), np.array(target), atol=tol * 10):
            return True
    return False


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=Config.n_max)
    p.add_argument("--seed", type=int, default=Config.seed)
    args = p.parse_args()
    cfg = Config(n_max=args.n_max, seed=args.seed)
    rng = np.random.default_rng(cfg.seed)

    print("polynomial,n,count,expected")
    for n in range(2, cfg.n_max + 1):
        e = enumerate_rootsets(square_minus_one(n), cap=cfg.cap)
        print(f"u^2-1,{n},{e.total},{2 ** (n // 2)}")

    print()
    print("polynomial,n,count,original_found,worst_factorization_deviation")
    for n in range(2, cfg.n_max + 1):
        for _ in range(cfg.cubics_per_n):
            w = [PolarNComplex(rng.normal(size=n)) for _ in range(3)]
            P = NPolynomial.from_roots(w)
            e = enumerate_rootsets(P, cap=cfg.cap)
            worst = max(verify_factorization(P, rs) for rs in e.rootsets)
            print(f"cubic,{n},{e.total},{contains(e.rootsets, w)},{worst:.2e}")


if __name__ == "__main__":
    main()
