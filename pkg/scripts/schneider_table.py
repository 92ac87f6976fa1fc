"""Table of vol(D_p K) / (C(pn + n, n) vol(K)^p) for a few named bodies.

Simplices sit at ratio 1; everything else should be strictly below.

    python scripts/schneider_table.py --max-dim 6
"""

from __future__ import annotations

import argparse
import time

from diffbody.constructions import axis_simplex, cube, staircase_antiblocking
from diffbody.kernel import hull
from diffbody.verifiers import check_schneider

BODIES = {
    "segment": cube(1),
    "triangle": axis_simplex([1, 1]),
    "square": cube(2),
    "staircase": staircase_antiblocking([(2, 0), (0, 1), (1, 1)]),
    "hexagon": hull([(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]),
    "tetrahedron": axis_simplex([1, 1, 1]),
    "cube": cube(3),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-dim", type=int, default=6, help="skip cases with pn above this")
    ap.add_argument("--max-p", type=int, default=3)
    args = ap.parse_args()
    print(f"{'body':<12} {'p':>2} {'vol(D_pK)':>12} {'bound':>8} {'ratio':>8} {'secs':>6}")
    for name, K in BODIES.items():
        for p in range(1, args.max_p + 1):
            if p * K.ambient_dim > args.max_dim:
                continue
            t = time.perf_counter()
            r = check_schneider(K, p)
            print(f"{name:<12} {p:>2} {str(r.lhs):>12} {str(r.rhs):>8} {float(r.lhs / r.rhs):>8.4f} "
                  f"{time.perf_counter() - t:>6.2f}")


if __name__ == "__main__":
    main()
