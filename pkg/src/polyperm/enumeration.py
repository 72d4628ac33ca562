"""Counting ``Grid(G)`` for a finite set ``G`` of peg permutations.

The pipeline: close ``G`` downward in the peg order, drop the non-compact members,
clean each survivor into a clean peg plus a box of allowed run lengths, merge boxes that
share a clean peg into one vector class, then count each cross-section by
inclusion-exclusion over the basis of its vector class.  The cross-sections are
disjoint, so the counts add.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple

from .peg import PegPermutation, compact_clean, downclose_raw, min_fill_vector
from .vectors import UNBOUNDED, VectorClass, caps_to_basis, join, leq, minimal, union

__all__ = [
    "CrossSection",
    "CountingFunction",
    "BinomialPolynomial",
    "Enumeration",
    "min_fill_vector",
    "build_cross_sections",
    "gf",
    "to_binomial_poly",
    "enumerate_pegset",
]

log = logging.getLogger(__name__)

SUBSET_LIMIT = 20


class CrossSection(NamedTuple):
    """Permutations ``peg[v]`` filling ``peg`` with ``v`` in ``vectors``."""

    peg: PegPermutation
    vectors: VectorClass

    def gf_basis(self) -> frozenset:
        """Basis with finite caps on signed entries folded in.

        Dotted coordinates are pinned to 1 by the generating function itself (they add
        nothing to the denominator), so their caps are not folded.
        """
        caps = tuple(
            c if d != "." else UNBOUNDED for c, d in zip(self.vectors.caps, self.peg.decorations)
        )
        if not self.vectors.basis and all(c == UNBOUNDED for c in caps):
            return frozenset()
        return minimal(self.vectors.basis | caps_to_basis(caps))


def _coefficient(a: int, s: int, n: int) -> int:
    """[x^n] x^a / (1-x)^s."""
    if n < a:
        return 0
    if s == 0:
        return int(n == a)
    return comb(n - a + s - 1, s - 1)


def _falling_binom(x: int, k: int) -> int:
    """Binomial coefficient C(x, k) as a polynomial in x, valid for negative x too."""
    num = 1
    for t in range(k):
        num *= x - t
    den = 1
    for t in range(2, k + 1):
        den *= t
    return num // den


@dataclass(frozen=True)
class CountingFunction:
    """A signed sum of terms ``x^a / (1-x)^s``, stored as ``{(a, s): multiplicity}``."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean_terms = {k: c for k, c in sorted(self.terms.items()) if c}
        object.__setattr__(self, "terms", clean_terms)

    def __call__(self, n: int) -> int:
        return sum(c * _coefficient(a, s, n) for (a, s), c in self.terms.items())

    def __add__(self, other: "CountingFunction") -> "CountingFunction":
        total = Counter(self.terms)
        total.update(other.terms)
        return CountingFunction(dict(total))

    def signed_terms(self) -> list[tuple[int, int, int]]:
        """Expand to the multiset of ``(sign, a, s)`` triples."""
        out = []
        for (a, s), c in self.terms.items():
            out.extend([(1 if c > 0 else -1, a, s)] * abs(c))
        return out


def eval_counting(f: CountingFunction, n: int) -> int:
    if n < 1:
        raise ValueError("counts are defined for n >= 1")
    return f(n)


@dataclass(frozen=True)
class BinomialPolynomial:
    """``sum_j coeffs[j] * C(n, j)``, equal to the count for every ``n >= valid_from``."""

    coeffs: tuple
    valid_from: int

    def __call__(self, n: int) -> int:
        return sum(c * comb(n, j) for j, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if c:
                sign = "-" if c < 0 else "+"
                mag = "" if abs(c) == 1 else str(abs(c))
                parts.append(f"{sign} {mag}C(n,{j})")
        if not parts:
            return "0"
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def gf(cs: CrossSection, subset_limit: int = SUBSET_LIMIT) -> CountingFunction:
    """Inclusion-exclusion over subsets of the cross-section's basis.

    Up to ``subset_limit`` basis vectors, every subset is visited.  Beyond that, subsets
    with equal joins are merged as they are generated, which gives the same sum.
    """
    low = min_fill_vector(cs.peg)
    s = cs.peg.signed
    basis = sorted(cs.gf_basis())
    if not basis:
        return CountingFunction({(sum(low), s): 1})
    terms: Counter = Counter()
    if len(basis) <= subset_limit:
        for r in range(len(basis) + 1):
            sign = -1 if r % 2 else 1
            for subset in combinations(basis, r):
                top = low
                for b in subset:
                    top = join(top, b)
                terms[sum(top), s] += sign
    else:
        joins = Counter({low: 1})
        for b in basis:
            step = Counter()
            for top, c in joins.items():
                step[join(top, b)] -= c
            joins.update(step)
        for top, c in joins.items():
            terms[sum(top), s] += c
    return CountingFunction(dict(terms))


def to_binomial_poly(f: CountingFunction) -> BinomialPolynomial:
    """Exact conversion to the ``C(n, j)`` basis.

    A term with ``s >= 1`` contributes the polynomial ``C(n - a + s - 1, s - 1)`` once
    ``n >= a``; a term with ``s == 0`` is a single spike at ``n == a`` and contributes
    nothing eventually.  The coefficients are forward differences at 0 of the sum of
    the per-term polynomials.
    """
    poly_terms = [(a, s, c) for (a, s), c in f.terms.items() if s > 0]
    degree = max((s - 1 for _, s, _ in poly_terms), default=0)
    values = [
        sum(c * _falling_binom(n - a + s - 1, s - 1) for a, s, c in poly_terms)
        for n in range(degree + 1)
    ]
    coeffs = []
    for j in range(degree + 1):
        coeffs.append(sum((-1) ** (j - i) * comb(j, i) * values[i] for i in range(j + 1)))
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    valid_from = max((a + (s == 0) for (a, s) in f.terms), default=1)
    return BinomialPolynomial(tuple(coeffs), max(valid_from, 1))


def _merge_boxes(tau: PegPermutation, caps_list: list) -> VectorClass:
    ambient = tuple(1 if d == "." else UNBOUNDED for d in tau.decorations)
    if None in caps_list:
        # tau itself is in the closure, and every other box lies inside its ambient
        return VectorClass.box(ambient)
    boxes = set(caps_list)
    # a box inside another adds nothing to the union
    boxes = [b for b in boxes if not any(o != b and leq(b, o) for o in boxes)]
    boxes.sort(key=lambda c: tuple(-1 if x == UNBOUNDED else x for x in c))
    result = VectorClass.box(boxes[0])
    for caps in boxes[1:]:
        result = union(result, VectorClass.box(caps))
    return result


def build_cross_sections(pegs: Iterable[PegPermutation]) -> list[CrossSection]:
    """Complete, compact, clean and group ``pegs`` into disjoint cross-sections."""
    closure = downclose_raw(pegs)
    groups = defaultdict(list)
    compact = 0
    for base, decs in closure:
        hit = compact_clean(base, decs)
        if hit is not None:
            compact += 1
            groups[hit[0]].append(hit[1])
    log.debug("closure %d pegs, %d compact, %d clean", len(closure), compact, len(groups))
    out = []
    for key in sorted(groups):
        tau = PegPermutation(*key)
        out.append(CrossSection(tau, _merge_boxes(tau, groups[key])))
    return out


@dataclass(frozen=True)
class Enumeration:
    counts: tuple  # counts[i] is the number of permutations of length i + 1
    poly: BinomialPolynomial
    function: CountingFunction
    cross_sections: tuple


def enumerate_pegset(
    pegs: Iterable[PegPermutation], n_max: int, subset_limit: int = SUBSET_LIMIT
) -> Enumeration:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    sections = build_cross_sections(pegs)
    acc: Counter = Counter()
    for cs in sections:
        acc.update(gf(cs, subset_limit).terms)
    total = CountingFunction(dict(acc))
    counts = tuple(total(n) for n in range(1, n_max + 1))
    return Enumeration(counts, to_binomial_poly(total), total, tuple(sections))
