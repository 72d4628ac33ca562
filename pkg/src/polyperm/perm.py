"""Plain permutations: one-line form, pattern containment, intervals and inflation.

Permutations are 1-based tuples in one-line notation, e.g. ``Permutation((3, 1, 4, 2))``.
The empty permutation is a valid value.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "Permutation",
    "Run",
    "standardize",
    "contains",
    "embed",
    "is_interval",
    "is_monotone_interval",
    "maximal_monotone_runs",
    "inflate",
]


class Permutation(tuple):
    """An immutable permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(x) for x in entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"not a permutation of 1..{len(entries)}: {entries}")
        return super().__new__(cls, entries)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"3 1 4 2"``; a single digit token such as ``"3142"`` is read digit-wise."""
        tokens = text.split()
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            return cls(int(t) for t in tokens)
        except ValueError as exc:
            raise ValueError(f"cannot parse permutation {text!r}: {exc}") from None

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __str__(self) -> str:
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


class Run(NamedTuple):
    """A maximal monotone interval: 1-based start, length and direction."""

    start: int
    length: int
    direction: str  # "up", "down" or "point"


def standardize(seq: Sequence[int]) -> tuple[int, ...]:
    """Return the permutation order isomorphic to ``seq``."""
    order = sorted(range(len(seq)), key=seq.__getitem__)
    out = [0] * len(seq)
    for rank, idx in enumerate(order, 1):
        out[idx] = rank
    return tuple(out)


def contains(pi: Sequence[int], sigma: Sequence[int]) -> bool:
    """True iff ``pi`` has a subsequence order isomorphic to ``sigma``."""
    return embed(pi, sigma) is not None


def embed(pi: Sequence[int], sigma: Sequence[int], allowed=None) -> tuple[int, ...] | None:
    """Find indices of an occurrence of ``sigma`` in ``pi``, or None.

    ``allowed(j, i)`` may veto matching position ``j`` of sigma to position ``i`` of pi.
    Backtracks left to right, keeping each candidate value inside the window set by
    the already-matched neighbours in value order.
    """
    n, k = len(pi), len(sigma)
    if k == 0:
        return ()
    if k > n:
        return None
    sigma = standardize(sigma)
    chosen = [0] * (k + 2)  # chosen[v] = value of pi matched to sigma value v
    chosen[k + 1] = n + 1
    placed = [False] * (k + 2)
    placed[0] = placed[k + 1] = True
    where = [0] * k

    def window(v: int) -> tuple[int, int]:
        lo = v - 1
        while not placed[lo]:
            lo -= 1
        hi = v + 1
        while not placed[hi]:
            hi += 1
        return chosen[lo], chosen[hi]

    def search(j: int, start: int) -> bool:
        if j == k:
            return True
        v = sigma[j]
        lo, hi = window(v)
        for i in range(start, n - (k - j) + 1):
            x = pi[i]
            if lo < x < hi and (allowed is None or allowed(j, i)):
                chosen[v], placed[v] = x, True
                where[j] = i
                if search(j + 1, i + 1):
                    return True
                placed[v] = False
        return False

    return tuple(where) if search(0, 0) else None


def is_interval(pi: Sequence[int], start: int, stop: int) -> bool:
    """True iff positions ``start:stop`` (0-based, half open) hold a contiguous range of values."""
    block = pi[start:stop]
    return bool(block) and max(block) - min(block) == len(block) - 1


def is_monotone_interval(pi: Sequence[int], start: int, stop: int) -> bool:
    if stop - start <= 1:
        return stop > start
    steps = {pi[i + 1] - pi[i] for i in range(start, stop - 1)}
    return steps == {1} or steps == {-1}


def maximal_monotone_runs(pi: Sequence[int]) -> list[Run]:
    """The unique coarsest partition of ``pi`` into monotone intervals, left to right."""
    runs = []
    n = len(pi)
    i = 0
    while i < n:
        j = i + 1
        if j < n and abs(pi[j] - pi[i]) == 1:
            step = pi[j] - pi[i]
            while j < n and pi[j] - pi[j - 1] == step:
                j += 1
            runs.append(Run(i + 1, j - i, "up" if step == 1 else "down"))
        else:
            runs.append(Run(i + 1, 1, "point"))
        i = j
    return runs


def inflate(sigma: Sequence[int], parts: Sequence[Sequence[int]]) -> Permutation:
    """Inflate each entry of ``sigma`` by the matching part; empty parts delete the entry."""
    if len(parts) != len(sigma):
        raise ValueError(f"need {len(sigma)} parts, got {len(parts)}")
    offset = [0] * (len(sigma) + 1)
    sizes = {v: len(parts[i]) for i, v in enumerate(sigma)}
    for v in range(1, len(sigma) + 1):
        offset[v] = offset[v - 1] + sizes[v]
    out = []
    for v, part in zip(sigma, parts):
        base = offset[v - 1]
        out.extend(base + x for x in standardize(part))
    return Permutation(out)
