"""Sweep the rank-p bound over random anti-blocking bodies for several (n, p).

Every violation here would be a bug, since the bound is a theorem for this
class. Prints one row per (n, p) and writes the sorted reports as JSON.

    python scripts/antiblocking_sweep.py --trials 100 --seed 1 --out results/
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass
from pathlib import Path

from diffbody.report import reports_to_json, summarize
from diffbody.search import SearchConfig, search_counterexamples


@dataclass
class SweepConfig:
    shapes: tuple[tuple[int, int], ...] = ((1, 2), (1, 3), (2, 1), (2, 2), (3, 1))
    trials: int = 100
    seed: int = 1
    out: Path | None = None


def run(cfg: SweepConfig) -> None:
    print(f"{'n':>2} {'p':>2} {'reports':>8} {'viol':>5} {'equal':>6} {'min ratio':>10} {'secs':>7}")
    for n, p in cfg.shapes:
        t = time.perf_counter()
        search = SearchConfig(target="conj2", body_class="antiblocking", n=n, p=p, trials=cfg.trials, seed=cfg.seed)
        reports = search_counterexamples(search)
        summary = summarize(reports, cfg.trials)
        strict = [r.lhs / r.rhs for r in reports if r.rhs and not r.equality]
        ratio = f"{float(min(strict)):.4f}" if strict else "-"
        print(f"{n:>2} {p:>2} {summary['reports']:>8} {summary['violations']:>5} {summary['equalities']:>6} "
              f"{ratio:>10} {time.perf_counter() - t:>7.1f}")
        if cfg.out:
            cfg.out.mkdir(parents=True, exist_ok=True)
            (cfg.out / f"antiblocking_n{n}_p{p}.json").write_text(reports_to_json(reports, summary))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=SweepConfig.trials)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--out", type=Path)
    ap.add_argument("--with-3d", action="store_true", help="add (n, p) = (3, 2); slow")
    args = ap.parse_args()
    shapes = SweepConfig.shapes + (((3, 2),) if args.with_3d else ())
    run(SweepConfig(shapes=shapes, trials=args.trials, seed=args.seed, out=args.out))


if __name__ == "__main__":
    main()
