"""Print eigenvalues and every bound for the five shipped fixtures."""

import argparse
from dataclasses import dataclass

from hyperspec.bounds import full_report
from hyperspec.generators import FIXTURES, fixture
from hyperspec.tensorops import signless_laplacian_radius, spectral_radius


@dataclass
class Config:
    names: tuple[str, ...] = FIXTURES
    tol: float = 1e-10


def run(cfg: Config) -> None:
    for name in cfg.names:
        G = fixture(name)
        rho = spectral_radius(G, tol=cfg.tol)
        mu = signless_laplacian_radius(G, tol=cfg.tol)
        print(f"== {name}: k={G.k} n={G.n} |E|={G.num_edges}")
        print(f"   rho in [{rho.lo:.12g}, {rho.hi:.12g}]  ({rho.iterations} iterations)")
        print(f"   mu  in [{mu.lo:.12g}, {mu.hi:.12g}]  ({mu.iterations} iterations)")
        for e in full_report(G).entries:
            value = f"{e.value:.10g}" if e.applicable else e.inapplicable
            sharp = "" if e.sharp is None else f"  sharp={e.sharp}"
            print(f"   {e.target:>3} {e.kind:<5} {e.bound_id:<18} {value}{sharp}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("names", nargs="*", help=f"subset of {', '.join(FIXTURES)}")
    ap.add_argument("--tol", type=float, default=Config.tol)
    args = ap.parse_args()
    run(Config(tuple(args.names) or FIXTURES, args.tol))


if __name__ == "__main__":
    main()
