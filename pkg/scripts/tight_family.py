"""Friendship graphs: certificate size, floor(n/2) and (for small k) exact dim_l.

    python scripts/tight_family.py --kmax 10 --exact-kmax 7
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from locdim import construct_certificate, friendship_graph, local_metric_dimension


@dataclass
class TightConfig:
    kmax: int = 8
    exact_kmax: int = 6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmax", type=int, default=TightConfig.kmax)
    ap.add_argument("--exact-kmax", type=int, default=TightConfig.exact_kmax,
                    help="largest k for the exhaustive dim_l search (cost grows like C(2k+1, k))")
    args = ap.parse_args()
    cfg = TightConfig(args.kmax, args.exact_kmax)
    print(f"{'k':>3} {'n':>3} {'floor(n/2)':>10} {'|W|':>4} {'dim_l':>6}  W")
    for k in range(1, cfg.kmax + 1):
        g = friendship_graph(k)
        cert = construct_certificate(g) if g.n >= 4 else None
        dim = str(local_metric_dimension(g, cap=g.n)[0]) if k <= cfg.exact_kmax else "-"
        size = cert.size if cert else "-"
        W = list(cert.W) if cert else "-"
        print(f"{k:>3} {g.n:>3} {g.n // 2:>10} {size:>4} {dim:>6}  {W}")


if __name__ == "__main__":
    main()
