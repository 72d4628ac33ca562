"""Block-sorting operations on permutations and on peg permutations.

Every operation is described by a number of cut points ``c1 <= c2 <= ...`` in a
sequence and one or more recipes saying how to reassemble the pieces between the cuts.
Equal cuts give empty blocks, so each operation can leave its input unchanged.

On a peg permutation a cut may also fall strictly inside a signed entry.  That entry
is then split into adjacent pieces with the same sign and consecutive values (a run cut
anywhere is two runs).  Dotted entries hold at most one point and are never split.
"""

from __future__ import annotations

import logging
from enum import Enum
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

from .peg import PegPermutation, downclose_raw, normalize
from .perm import Permutation

__all__ = [
    "OperationKind",
    "apply_perm",
    "apply_peg",
    "peg_set_for",
    "identity_peg",
    "maximal",
]

log = logging.getLogger(__name__)


class OperationKind(str, Enum):
    BLOCK_TRANSPOSITION = "block-transposition"
    PREFIX_BLOCK_TRANSPOSITION = "prefix-block-transposition"
    REVERSAL = "reversal"
    PREFIX_REVERSAL = "prefix-reversal"
    CUT_AND_PASTE = "cut-and-paste"
    BLOCK_INTERCHANGE = "block-interchange"

    def __str__(self) -> str:
        return self.value


# A recipe is a list of (first cut, last cut, reversed) pieces; cut index -1 is the
# start of the sequence and len(cuts) is the end.
_S, _E = "start", "end"

_RECIPES = {
    OperationKind.BLOCK_TRANSPOSITION: (3, [[(_S, 0, False), (1, 2, False), (0, 1, False), (2, _E, False)]]),
    OperationKind.PREFIX_BLOCK_TRANSPOSITION: (2, [[(0, 1, False), (_S, 0, False), (1, _E, False)]]),
    OperationKind.REVERSAL: (2, [[(_S, 0, False), (0, 1, True), (1, _E, False)]]),
    OperationKind.PREFIX_REVERSAL: (1, [[(_S, 0, True), (0, _E, False)]]),
    OperationKind.CUT_AND_PASTE: (3, [
        [(_S, 0, False), (1, 2, False), (0, 1, False), (2, _E, False)],
        [(_S, 0, False), (1, 2, False), (0, 1, True), (2, _E, False)],
        [(_S, 0, False), (1, 2, True), (0, 1, False), (2, _E, False)],
    ]),
    OperationKind.BLOCK_INTERCHANGE: (4, [
        [(_S, 0, False), (2, 3, False), (1, 2, False), (0, 1, False), (3, _E, False)],
    ]),
}


def _pieces(recipe, cuts: Sequence[int], length: int) -> Iterator[tuple[int, int, bool]]:
    for lo, hi, rev in recipe:
        start = 0 if lo == _S else cuts[lo]
        stop = length if hi == _E else cuts[hi]
        if start < stop:
            yield start, stop, rev


def apply_perm(op: OperationKind, pi: Sequence[int]) -> set[Permutation]:
    """Every permutation reachable from ``pi`` by one application of ``op``."""
    op = OperationKind(op)
    ncuts, recipes = _RECIPES[op]
    pi = tuple(pi)
    n = len(pi)
    out = {pi}
    for cuts in combinations_with_replacement(range(n + 1), ncuts):
        for recipe in recipes:
            seq = []
            for start, stop, rev in _pieces(recipe, cuts, n):
                seq.extend(reversed(pi[start:stop]) if rev else pi[start:stop])
            out.add(tuple(seq))
    return {Permutation(p) for p in out}


_FLIP = str.maketrans("+-", "-+")


def _split(peg: PegPermutation, interior: Sequence[int]) -> tuple[tuple[int, ...], str]:
    """Split entry ``i`` into ``interior[i] + 1`` adjacent pieces of the same sign."""
    base, decs = peg
    keys, new_decs = [], []
    for v, d, j in zip(base, decs, interior):
        for t in range(j + 1):
            keys.append((v, t if d == "+" else -t))
            new_decs.append(d)
    order = sorted(range(len(keys)), key=keys.__getitem__)
    new_base = [0] * len(keys)
    for rank, idx in enumerate(order, 1):
        new_base[idx] = rank
    return tuple(new_base), "".join(new_decs)


def _peg_images(op: OperationKind, peg: PegPermutation) -> set[PegPermutation]:
    ncuts, recipes = _RECIPES[op]
    base, decs = peg
    m = len(base)
    # slot 2g is the gap before entry g; slot 2e+1 is the inside of entry e
    slots = [s for s in range(2 * m + 1) if s % 2 == 0 or decs[s // 2] != "."]
    out = set()
    for chosen in combinations_with_replacement(slots, ncuts):
        interior = [0] * m
        for s in chosen:
            if s % 2:
                interior[s // 2] += 1
        new_base, new_decs = _split(peg, interior)
        # translate each slot to a gap of the split sequence
        before = [0] * (m + 1)
        for e in range(m):
            before[e + 1] = before[e] + interior[e] + 1
        cuts, seen_inside = [], [0] * m
        for s in chosen:
            e = s // 2
            if s % 2 == 0:
                cuts.append(before[e])
            else:
                seen_inside[e] += 1
                cuts.append(before[e] + seen_inside[e])
        length = len(new_base)
        for recipe in recipes:
            vals, ds = [], []
            for start, stop, rev in _pieces(recipe, cuts, length):
                if rev:
                    vals.extend(reversed(new_base[start:stop]))
                    ds.append(new_decs[start:stop][::-1].translate(_FLIP))
                else:
                    vals.extend(new_base[start:stop])
                    ds.append(new_decs[start:stop])
            out.add(normalize(PegPermutation(tuple(vals), "".join(ds))))
    return out


def apply_peg(op: OperationKind, rho: PegPermutation) -> frozenset[PegPermutation]:
    """Compact pegs whose grid classes together hold every one-step image of ``Grid(rho)``."""
    return frozenset(_peg_images(OperationKind(op), rho))


def identity_peg() -> PegPermutation:
    return PegPermutation((1,), "+")


def peg_set_for(op: OperationKind, k: int) -> frozenset[PegPermutation]:
    """Pegs describing the permutations at most ``k`` applications of ``op`` from the identity."""
    if k < 0:
        raise ValueError("k must be >= 0")
    op = OperationKind(op)
    current = frozenset({identity_peg()})
    for step in range(k):
        frontier = maximal(current)
        nxt = set(current)
        for rho in sorted(frontier):
            nxt.update(_peg_images(op, rho))
        log.debug("%s step %d: %d maximal of %d -> %d pegs", op, step + 1,
                  len(frontier), len(current), len(nxt))
        current = frozenset(nxt)
    return current


def maximal(pegs: Iterable[PegPermutation]) -> frozenset[PegPermutation]:
    """Members of ``pegs`` not strictly below another member in the peg order.

    Everything strictly below a peg is below one of its one-step reductions, so the
    dominated members are exactly the closure members that are some reduction.
    """
    pegs = frozenset(pegs)
    closure = downclose_raw(pegs)
    below = set()
    for base, decs in closure:
        m = len(base)
        for i in range(m):
            if m > 1:
                v = base[i]
                nb = [x - 1 if x > v else x for x in base]
                del nb[i]
                below.add((tuple(nb), decs[:i] + decs[i + 1:]))
            if decs[i] != ".":
                below.add((base, decs[:i] + "." + decs[i + 1:]))
    return frozenset(p for p in pegs if p not in below)
