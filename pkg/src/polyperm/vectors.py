"""Positive integer vectors under the product order, and their downsets.

A :class:`VectorClass` is a downset of ``P^m`` described by per-coordinate caps (the
ambient box; ``math.inf`` means unbounded) together with a basis: the minimal vectors
inside the box that are *not* in the class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "UNBOUNDED",
    "join",
    "leq",
    "minimal",
    "caps_to_basis",
    "VectorClass",
    "member",
    "intersect",
    "union",
    "fmt_vector",
]

UNBOUNDED = math.inf

Vector = tuple[int, ...]


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


def join(v: Sequence[int], w: Sequence[int]) -> Vector:
    """Coordinatewise maximum."""
    _check_dims(v, w)
    return tuple(map(max, v, w))


def leq(v: Sequence[int], w: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(v, w))


def minimal(vectors: Iterable[Sequence[int]]) -> frozenset[Vector]:
    """The minimal elements of a finite set of vectors (an antichain)."""
    # sorting by sum puts every vector after everything strictly below it
    keep: list[Vector] = []
    for v in sorted({tuple(v) for v in vectors}, key=lambda v: (sum(v), v)):
        if not any(leq(u, v) for u in keep):
            keep.append(v)
    return frozenset(keep)


def caps_to_basis(caps: Sequence[float]) -> frozenset[Vector]:
    """Basis of the box ``{v : v <= caps}``: one vector per finite cap."""
    out = []
    for i, c in enumerate(caps):
        if c != UNBOUNDED:
            v = [1] * len(caps)
            v[i] = int(c) + 1
            out.append(tuple(v))
    return frozenset(out)


def fmt_vector(v: Sequence) -> str:
    return "(" + ",".join("inf" if x == UNBOUNDED else str(x) for x in v) + ")"


@dataclass(frozen=True)
class VectorClass:
    caps: tuple
    basis: frozenset

    def __post_init__(self):
        caps = tuple(self.caps)
        if any(c < 1 for c in caps):
            raise ValueError(f"caps must be >= 1: {caps}")
        if not all(type(c) is int or c == UNBOUNDED for c in caps):
            caps = tuple(c if c == UNBOUNDED else int(c) for c in caps)
        object.__setattr__(self, "caps", caps)
        if not self.basis:
            object.__setattr__(self, "basis", frozenset())
            return
        for b in self.basis:
            _check_dims(caps, b)
        # basis vectors outside the box exclude nothing the box has not excluded already
        object.__setattr__(self, "basis", minimal(b for b in self.basis if leq(b, caps)))

    @classmethod
    def box(cls, caps: Sequence[float]) -> "VectorClass":
        return cls(tuple(caps), frozenset())

    @classmethod
    def full(cls, dim: int) -> "VectorClass":
        return cls((UNBOUNDED,) * dim, frozenset())

    @property
    def dim(self) -> int:
        return len(self.caps)

    def full_basis(self) -> frozenset[Vector]:
        """Basis relative to all of ``P^m``: the caps folded in."""
        return minimal(self.basis | caps_to_basis(self.caps))

    def __contains__(self, v) -> bool:
        return member(self, v)

    def __str__(self) -> str:
        basis = ", ".join(fmt_vector(b) for b in sorted(self.basis))
        return f"caps {fmt_vector(self.caps)} basis {{{basis}}}"


def member(V: VectorClass, v: Sequence[int]) -> bool:
    _check_dims(V.caps, v)
    return leq(v, V.caps) and not any(leq(b, v) for b in V.basis)


def intersect(V: VectorClass, W: VectorClass) -> VectorClass:
    _check_dims(V.caps, W.caps)
    return VectorClass(tuple(map(min, V.caps, W.caps)), V.basis | W.basis)


def union(V: VectorClass, W: VectorClass) -> VectorClass:
    _check_dims(V.caps, W.caps)
    bv, bw = V.full_basis(), W.full_basis()
    return VectorClass(
        tuple(map(max, V.caps, W.caps)), frozenset(join(v, w) for v in bv for w in bw)
    )
