"""Uniform covers of ``{1, ..., n}`` and the binomial identities behind them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .constructions import CoordinateSubset


def multinomial(n: int, parts: Sequence[int]) -> int:
    """``n! / (parts[0]! ...)``; zero when the parts do not sum to ``n`` or one is negative."""
    if any(k < 0 for k in parts) or sum(parts) != n:
        return 0
    return factorial(n) // prod(factorial(k) for k in parts)


@dataclass(frozen=True)
class UniformCover:
    """Ordered blocks ``(sigma_0, ..., sigma_q)`` covering each element exactly ``p`` times."""

    n: int
    p: int
    blocks: tuple[CoordinateSubset, ...]

    def __post_init__(self):
        for b in self.blocks:
            if b.n != self.n:
                raise ValueError("block from a different ground set")
        counts = self.multiplicities()
        if any(c != self.p for c in counts):
            raise ValueError(f"not a {self.p}-uniform cover: element multiplicities {counts}")

    @classmethod
    def of(cls, n: int, p: int, blocks: Sequence[Sequence[int]]) -> UniformCover:
        return cls(n, p, tuple(CoordinateSubset.of(n, b) for b in blocks))

    def multiplicities(self) -> list[int]:
        return [sum(j in b for b in self.blocks) for j in range(1, self.n + 1)]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.blocks) + ")"


def enumerate_covers(n: int, p: int, sizes: Sequence[int]) -> list[UniformCover]:
    """All ``p``-uniform covers by ``p + 1`` labelled blocks of the given sizes.

    Each element is missing from exactly one block, so a cover is the same
    thing as an assignment of elements to their missing block, with block
    ``i`` missing ``n - sizes[i]`` elements.
    """
    if len(sizes) != p + 1:
        raise ValueError(f"expected {p + 1} block sizes, got {len(sizes)}")
    missing = [n - s for s in sizes]
    if any(m < 0 for m in missing) or sum(missing) != n:
        return []
    out = []
    for assignment in _assignments(n, missing):
        blocks = tuple(
            CoordinateSubset(n, tuple(j + 1 for j in range(n) if assignment[j] != i)) for i in range(p + 1)
        )
        out.append(UniformCover(n, p, blocks))
    return out


def _assignments(n: int, counts: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Words of length ``n`` using letter ``i`` exactly ``counts[i]`` times, in lexicographic order."""
    remaining = list(counts)
    word: list[int] = []

    def rec():
        if len(word) == n:
            yield tuple(word)
            return
        for i, c in enumerate(remaining):
            if c:
                remaining[i] -= 1
                word.append(i)
                yield from rec()
                word.pop()
                remaining[i] += 1

    yield from rec()


def all_covers(n: int, p: int) -> list[UniformCover]:
    """Every ``p``-uniform cover by ``p + 1`` labelled blocks: ``(p+1)^n`` of them."""
    out = []
    for word in itertools.product(range(p + 1), repeat=n):
        blocks = tuple(
            CoordinateSubset(n, tuple(j + 1 for j in range(n) if word[j] != i)) for i in range(p + 1)
        )
        out.append(UniformCover(n, p, blocks))
    return out


def complement_blocks(c: UniformCover) -> tuple[CoordinateSubset, ...]:
    return tuple(b.complement for b in c.blocks)


def induced_one_cover(c: UniformCover) -> UniformCover:
    """The 1-uniform cover formed by the nonempty sets ``∩ sigma_i^{±}``.

    For a cover by ``p + 1`` blocks these atoms are exactly the nonempty
    complements of the blocks, listed here in block order.
    """
    if len(c.blocks) == c.p + 1:
        atoms = [b for b in complement_blocks(c) if len(b)]
        return UniformCover(c.n, 1, tuple(atoms))
    atoms: dict[tuple[bool, ...], list[int]] = {}
    for j in range(1, c.n + 1):
        key = tuple(j not in b for b in c.blocks)
        atoms.setdefault(key, []).append(j)
    return UniformCover(c.n, 1, tuple(CoordinateSubset.of(c.n, atoms[k]) for k in sorted(atoms)))


def vandermonde_check_1(n: int, p: int) -> bool:
    """``sum_k C(pn, k) C(n, k) == C(pn + n, n)``."""
    return sum(comb(p * n, k) * comb(n, k) for k in range(n + 1)) == comb(p * n + n, n)


def compositions(k: int, parts: int, bound: int | None = None) -> Iterator[tuple[int, ...]]:
    """Tuples of ``parts`` nonnegative integers summing to ``k``, each at most ``bound``."""
    if parts == 0:
        if k == 0:
            yield ()
        return
    top = k if bound is None else min(k, bound)
    for first in range(top + 1):
        for rest in compositions(k - first, parts - 1, bound):
            yield (first,) + rest


def vandermonde_check_2(n: int, p: int, k: int) -> bool:
    """``sum_{k_1 + ... + k_p = k} prod C(n, k_i) == C(pn, k)``."""
    lhs = sum(prod(comb(n, ki) for ki in ks) for ks in compositions(k, p))
    return lhs == comb(p * n, k)
