"""Random sweep: every applicable bound against the certified eigenvalue interval.

Reports, per bound, how many instances it applied to, how often it was
tight (within the slack) and any violations. Both index conventions of the
gamma lower bound are included.
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from hyperspec.bounds import full_report
from hyperspec.generators import random_connected
from hyperspec.tensorops import signless_laplacian_radius, spectral_radius


@dataclass
class SweepConfig:
    count: int = 2000
    seed: int = 0
    ks: tuple[int, ...] = (2, 3, 4)
    max_n: int = 10
    slack: float = 1e-6


def sweep(cfg: SweepConfig):
    rng = np.random.default_rng(cfg.seed)
    applied, tight, violated = Counter(), Counter(), []
    for _ in range(cfg.count):
        G = random_connected(rng, k_choices=cfg.ks, max_n=cfg.max_n)
        est = {"rho": spectral_radius(G), "mu": signless_laplacian_radius(G)}
        for e in full_report(G).applicable():
            applied[e.bound_id] += 1
            lo, hi = est[e.target].lo, est[e.target].hi
            gap = lo - e.value if e.kind == "lower" else e.value - hi
            if gap < -cfg.slack:
                violated.append((e.bound_id, gap, G))
            elif gap <= cfg.slack:
                tight[e.bound_id] += 1
    return applied, tight, violated


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=SweepConfig.count)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    ap.add_argument("--slack", type=float, default=SweepConfig.slack)
    args = ap.parse_args()
    cfg = SweepConfig(count=args.count, seed=args.seed, max_n=args.max_n, slack=args.slack)
    t0 = time.perf_counter()
    applied, tight, violated = sweep(cfg)
    print(f"{cfg.count} instances in {time.perf_counter() - t0:.1f}s (seed {cfg.seed})")
    print(f"{'bound':<18} {'applied':>8} {'tight':>8}")
    for bid, n in applied.items():
        print(f"{bid:<18} {n:>8} {tight[bid]:>8}")
    print(f"violations: {len(violated)}")
    for bid, gap, G in violated[:10]:
        print(f"  {bid}: gap {gap:.3e} on k={G.k} edges={G.edges}")
    raise SystemExit(1 if violated else 0)


if __name__ == "__main__":
    main()
