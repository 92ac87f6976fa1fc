"""Look for counterexamples to the open rank-one and rank-p bounds on general polytopes.

Anything with a negative gap is printed as a candidate counterexample along
with its body. The strict cases closest to the bound (largest lhs / rhs) are
listed either way.

    python scripts/general_search.py --target conj1 --n 2 --p 2 --trials 300 --seed 3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from diffbody.kernel import dumps_body
from diffbody.search import SearchConfig, draw_body, search_counterexamples


@dataclass
class GeneralSearch:
    target: str = "conj1"
    n: int = 2
    p: int = 2
    trials: int = 200
    seed: int = 3
    grid_q: int = 3
    show: int = 5


def run(cfg: GeneralSearch) -> int:
    search = SearchConfig(target=cfg.target, body_class="general", n=cfg.n, p=cfg.p,
                          trials=cfg.trials, seed=cfg.seed, grid_q=cfg.grid_q)
    reports = search_counterexamples(search)
    bad = [r for r in reports if r.violation]
    print(f"{cfg.target} n={cfg.n} p={cfg.p}: {len(reports)} reports, {len(bad)} candidate counterexamples")
    strict = sorted((r for r in reports if r.rhs and not r.equality), key=lambda r: -(r.lhs / r.rhs))
    print(f"  {sum(r.equality for r in reports)} equalities; closest strict cases:")
    for r in strict[: cfg.show]:
        print(f"  trial {r.params['trial']:>4} k={r.params['k']}  lhs/rhs = {float(r.lhs / r.rhs):.6f}")
    for r in bad:
        print(dumps_body(draw_body(search, r.params["trial"])))
    return 1 if bad else 0


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--target", choices=("godbersen", "conj1", "conj2"), default=GeneralSearch.target)
    ap.add_argument("--n", type=int, default=GeneralSearch.n)
    ap.add_argument("--p", type=int, default=GeneralSearch.p)
    ap.add_argument("--trials", type=int, default=GeneralSearch.trials)
    ap.add_argument("--seed", type=int, default=GeneralSearch.seed)
    ap.add_argument("--grid-q", type=int, default=GeneralSearch.grid_q)
    ap.add_argument("--show", type=int, default=GeneralSearch.show)
    a = ap.parse_args()
    raise SystemExit(run(GeneralSearch(a.target, a.n, a.p, a.trials, a.seed, a.grid_q, a.show)))


if __name__ == "__main__":
    main()
