"""Loop integrals of 1/(u - u0) and exp(u)/(u - u0) around projected poles.

For each requested set of sector planes a polygonal circle is drawn around
the projection of u0 and the quadrature is compared with the residue form.
"""
import argparse
import math
from dataclasses import dataclass, field

import numpy as np

from polarnc import PolarNComplex
from polarnc import elementary as el
from polarnc.canonical import basis
from polarnc.core import inverse
from polarnc.integration import cauchy_eval, circle_path, contour_integral, residue_value


@dataclass
class Config:
    n: int = 7
    radius: float = 0.5
    vertices: int = 64
    seed: int = 3
    planes: list = field(default_factory=lambda: [[1], [2], [3], [1, 2, 3]])


def shift_off(n, planes):
    """Offset keeping sectors outside ``planes`` away from the pole."""
    b = basis(n)
    out = b.e_plus * 2.0
    if b.e_minus is not None:
        out = out + b.e_minus * 2.0
    for k, (e, _) in enumerate(b.pairs, start=1):
        if k not in planes:
            out = out + e * 2.0
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n", type=int, default=Config.n)
    p.add_argument("--vertices", type=int, default=Config.vertices)
    args = p.parse_args()
    cfg = Config(n=args.n, vertices=args.vertices)
    K = (cfg.n - 1) // 2
    planes = [ks for ks in cfg.planes if max(ks) <= K] or [[1]]
    u0 = PolarNComplex(np.random.default_rng(cfg.seed).normal(size=cfg.n))

    print("planes,integrand,max_deviation,closed_form")
    for ks in planes:
        path = circle_path(u0, ks, cfg.radius, vertices=cfg.vertices, offset=shift_off(cfg.n, ks))
        for name, f in [("1", lambda u: PolarNComplex.one(cfg.n)), ("exp", el.exp)]:
            numeric = contour_integral(lambda u: f(u) * inverse(u - u0), path)
            closed = residue_value(u0, path) if name == "1" else cauchy_eval(f, u0, path)
            dev = float(np.max(np.abs(numeric.x - closed.x)))
            label = "+".join(map(str, ks))
            coords = " ".join(f"{v:.6f}" for v in closed.x)
            print(f"{label},{name},{dev:.2e},{coords}")
    print(f"# 2*pi = {2 * math.pi:.6f}")


if __name__ == "__main__":
    main()
