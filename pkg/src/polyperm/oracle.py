"""Brute-force ground truth over concrete permutations.

Everything here scans symmetric groups directly and shares no code with the peg-level
pipeline beyond the concrete move definitions and grid membership test.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable

from .peg import PegPermutation, grid_member
from .rearrange import OperationKind, apply_perm

__all__ = [
    "ResourceLimitError",
    "HARD_LIMIT",
    "check_limit",
    "bfs_counts",
    "bfs_levels",
    "grid_count",
    "grid_class",
    "grid_class_equal",
]

HARD_LIMIT = 10
BFS_LIMIT = 9
GRID_LIMIT = 8


class ResourceLimitError(RuntimeError):
    """A brute-force query asked for a length above the configured limit."""


def check_limit(n: int, limit: int) -> None:
    if limit > HARD_LIMIT:
        raise ResourceLimitError(f"limit {limit} exceeds the hard cap of {HARD_LIMIT}")
    if n > limit:
        raise ResourceLimitError(f"n={n} exceeds the oracle limit of {limit}")


def bfs_levels(op: OperationKind, k: int, n: int, limit: int = BFS_LIMIT) -> list[int]:
    """Sizes of the sets reachable from the identity in at most 0, 1, ..., k moves."""
    check_limit(n, limit)
    if k < 0:
        raise ValueError("k must be >= 0")
    start = tuple(range(1, n + 1))
    seen = {start}
    frontier = [start]
    sizes = [1]
    for _ in range(k):
        nxt = []
        for pi in frontier:
            for sigma in apply_perm(op, pi):
                if sigma not in seen:
                    seen.add(sigma)
                    nxt.append(sigma)
        frontier = nxt
        sizes.append(len(seen))
        if not frontier:
            sizes.extend([len(seen)] * (k + 1 - len(sizes)))
            break
    return sizes


def bfs_counts(op: OperationKind, k: int, n: int, limit: int = BFS_LIMIT) -> int:
    """Number of permutations of length ``n`` within ``k`` moves of the identity."""
    return bfs_levels(op, k, n, limit)[k]


def grid_class(pegs: Iterable[PegPermutation], n: int, limit: int = GRID_LIMIT) -> frozenset[tuple]:
    check_limit(n, limit)
    return _grid_class(frozenset(pegs), n)


@lru_cache(maxsize=4096)
def _grid_class(pegs: frozenset, n: int) -> frozenset[tuple]:
    return frozenset(
        pi for pi in permutations(range(1, n + 1)) if any(grid_member(pi, r) for r in pegs)
    )


def grid_count(pegs: Iterable[PegPermutation], n: int, limit: int = GRID_LIMIT) -> int:
    return len(grid_class(pegs, n, limit))


def grid_class_equal(a: PegPermutation, b: PegPermutation, n_max: int, limit: int = GRID_LIMIT) -> bool:
    """Whether ``Grid(a)`` and ``Grid(b)`` agree on every length up to ``n_max``."""
    check_limit(n_max, limit)
    return all(grid_class([a], n, limit) == grid_class([b], n, limit) for n in range(n_max + 1))
