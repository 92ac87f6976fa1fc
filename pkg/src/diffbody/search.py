"""Seeded random searches for counterexamples."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .constructions import random_antiblocking, random_polytope
from .covers import compositions
from .kernel import DimensionCapError, MAX_DIM, VPolytope
from .report import VerificationReport
from .verifiers import check_conjecture1, check_conjecture2, check_godbersen, check_schneider

TARGETS = ("godbersen", "conj1", "conj2", "schneider")
BODY_CLASSES = ("antiblocking", "general")


@dataclass
class SearchConfig:
    target: str = "conj2"
    body_class: str = "antiblocking"
    n: int = 2
    p: int = 1
    k_spec: tuple[int, ...] = ()
    trials: int = 100
    seed: int = 0
    grid_q: int = 4
    out_format: str = "json"
    force: bool = False
    max_generators: int = 3

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; choose from {TARGETS}")
        if self.body_class not in BODY_CLASSES:
            raise ValueError(f"unknown body class {self.body_class!r}; choose from {BODY_CLASSES}")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.n < 1 or self.p < 1 or self.grid_q < 1:
            raise ValueError("n, p and grid_q must be positive")
        if self.out_format not in ("json", "csv"):
            raise ValueError("out_format must be json or csv")
        if self.p * self.n > MAX_DIM and not self.force:
            raise DimensionCapError(f"p*n = {self.p * self.n} exceeds {MAX_DIM}; pass force to override")
        self.k_spec = tuple(self.k_spec)


def trial_rng(seed: int, trial: int) -> random.Random:
    """Independent stream for one trial; trial ``i`` is reproducible on its own."""
    return random.Random(f"diffbody:{seed}:{trial}")


def draw_body(config: SearchConfig, trial: int) -> VPolytope:
    rng = trial_rng(config.seed, trial)
    if config.body_class == "antiblocking":
        return random_antiblocking(rng, config.n, config.grid_q, config.max_generators)
    return random_polytope(rng, config.n, config.grid_q)


def _trial_reports(config: SearchConfig, K: VPolytope) -> list[VerificationReport]:
    n, p = config.n, config.p
    if config.target == "godbersen":
        ks = config.k_spec or tuple(range(n + 1))
        return [check_godbersen(K, k) for k in ks]
    if config.target == "conj1":
        ks = config.k_spec or tuple(range(n + 1))
        return [check_conjecture1(K, p, k) for k in ks]
    if config.target == "schneider":
        return [check_schneider(K, p)]
    if config.k_spec:
        kvecs = [config.k_spec]
    else:
        kvecs = [kv for k in range(n + 1) for kv in compositions(k, p, n)]
    return [check_conjecture2(K, p, kv) for kv in kvecs]


def search_counterexamples(config: SearchConfig) -> list[VerificationReport]:
    """Run the trials; reports come back sorted by gap, ties by trial order."""
    reports = []
    for t in range(config.trials):
        K = draw_body(config, t)
        for r in _trial_reports(config, K):
            r.params = {"trial": t, "class": config.body_class, **r.params}
            reports.append(r)
    order = sorted(range(len(reports)), key=lambda i: (reports[i].gap, i))
    return [reports[i] for i in order]
