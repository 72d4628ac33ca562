"""Peg permutations and their grid classes.

A peg permutation is a permutation whose entries are decorated ``+``, ``-`` or ``.``
(the dot is also accepted as ``•`` on input).  A ``+`` entry may be inflated by an
increasing run, a ``-`` entry by a decreasing run, and a dotted entry by at most one
point.  ``Grid(rho)`` is the set of all such inflations, empty inflations included.

Internally a peg is a ``(base, decorations)`` named tuple where ``decorations`` is a
string over ``"+-."``; this keeps hashing cheap in the closure computations.
"""

from __future__ import annotations

import math
import re
from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence

from .perm import Permutation, embed, inflate, maximal_monotone_runs, standardize

__all__ = [
    "Decoration",
    "PegPermutation",
    "PegParseError",
    "parse_pegset",
    "read_pegset",
    "peg_le",
    "downclose",
    "downclose_raw",
    "reductions",
    "is_compact",
    "is_clean",
    "normalize",
    "clean",
    "compact_clean",
    "inflate_by_vector",
    "partitions",
    "fills",
    "grid_member",
    "min_fill_vector",
    "pattern_of",
]

UNBOUNDED = math.inf


class Decoration(str, Enum):
    PLUS = "+"
    MINUS = "-"
    DOT = "."

    def __str__(self) -> str:
        return self.value


SIGNED = "+-"
_FLIP = str.maketrans("+-", "-+")

# adjacent-pair patterns that make a peg non-compact, keyed by value step
_CONTRACT_UP = {("+", "+"), ("+", "."), (".", "+")}
_CONTRACT_DOWN = {("-", "-"), ("-", "."), (".", "-")}

_TOKEN = re.compile(r"(\d+)([+\-.•−])")
_CANON = {"•": ".", "−": "-"}


class PegParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, token: str = ""):
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(f"{where}{message}")
        self.line, self.column, self.token = line, column, token


class PegPermutation(NamedTuple):
    base: tuple[int, ...]
    decorations: str

    @classmethod
    def of(cls, base: Iterable[int], decorations: Iterable[str]) -> "PegPermutation":
        """Validating constructor."""
        base = tuple(Permutation(base))
        decorations = "".join(_CANON.get(str(d), str(d)) for d in decorations)
        if len(decorations) != len(base):
            raise ValueError("need one decoration per entry")
        if set(decorations) - set("+-."):
            raise ValueError(f"bad decorations {decorations!r}")
        return cls(base, decorations)

    @classmethod
    def parse(cls, text: str) -> "PegPermutation":
        """Parse whitespace-separated tokens such as ``"3- 1. 4+ 2+"``."""
        return _parse_line(text, 0)

    def __len__(self) -> int:
        return len(self.base)

    def __str__(self) -> str:
        return " ".join(f"{v}{d}" for v, d in zip(self.base, self.decorations))

    def __repr__(self) -> str:
        return f"PegPermutation({str(self)!r})"

    @property
    def perm(self) -> Permutation:
        return Permutation(self.base)

    @property
    def signed(self) -> int:
        """Number of signed entries."""
        return len(self.decorations) - self.decorations.count(".")


def _parse_line(text: str, lineno: int) -> PegPermutation:
    base, decs = [], []
    for m in re.finditer(r"\S+", text):
        tok = m.group()
        hit = _TOKEN.fullmatch(tok)
        if not hit:
            raise PegParseError(f"malformed peg token {tok!r}", lineno, m.start() + 1, tok)
        base.append(int(hit.group(1)))
        decs.append(_CANON.get(hit.group(2), hit.group(2)))
    try:
        return PegPermutation.of(base, decs)
    except ValueError as exc:
        raise PegParseError(str(exc), lineno, 1, text.strip()) from None


def parse_pegset(text: str) -> frozenset[PegPermutation]:
    """One peg per line; blank lines and ``#`` comments are ignored."""
    pegs = set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0]
        if line.strip():
            pegs.add(_parse_line(line, lineno))
    return frozenset(pegs)


def read_pegset(path) -> frozenset[PegPermutation]:
    with open(path, encoding="utf-8") as fh:
        return parse_pegset(fh.read())


def _weaker_or_equal(t: str, r: str) -> bool:
    return t == r or t == "."


def peg_le(tau: PegPermutation, rho: PegPermutation) -> bool:
    """The peg permutation order: delete entries and turn signs into dots."""
    td, rd = tau.decorations, rho.decorations
    return embed(rho.base, tau.base, lambda j, i: _weaker_or_equal(td[j], rd[i])) is not None


def _delete(peg: PegPermutation, i: int) -> PegPermutation:
    base, decs = peg
    v = base[i]
    return PegPermutation(
        tuple(x - (x > v) for x in base[:i] + base[i + 1:]), decs[:i] + decs[i + 1:]
    )


def reductions(peg: PegPermutation) -> Iterator[PegPermutation]:
    """One-step moves down the peg order."""
    base, decs = peg
    for i in range(len(base)):
        if len(base) > 1:
            yield _delete(peg, i)
        if decs[i] != ".":
            yield PegPermutation(base, decs[:i] + "." + decs[i + 1:])


def downclose(pegs: Iterable[PegPermutation]) -> frozenset[PegPermutation]:
    """All nonempty pegs below some member of ``pegs``."""
    return frozenset(PegPermutation(*q) for q in downclose_raw(pegs))


def downclose_raw(pegs: Iterable[tuple]) -> set[tuple]:
    """Like :func:`downclose` but yields plain ``(base, decorations)`` tuples.

    Plain tuples compare and hash equal to the matching :class:`PegPermutation`; the
    closure can run to millions of pegs, so skipping the wrapper matters.
    """
    stack = [tuple(p) for p in pegs if len(p[0])]
    seen = set(stack)
    add, push, pop = seen.add, stack.append, stack.pop
    while stack:
        base, decs = pop()
        m = len(base)
        for i in range(m):
            if m > 1:
                v = base[i]
                nb = [x - 1 if x > v else x for x in base]
                del nb[i]
                q = (tuple(nb), decs[:i] + decs[i + 1:])
                if q not in seen:
                    add(q)
                    push(q)
            if decs[i] != ".":
                q = (base, decs[:i] + "." + decs[i + 1:])
                if q not in seen:
                    add(q)
                    push(q)
    return seen


def _contractible(base: Sequence[int], decs: str, i: int) -> str | None:
    """Sign that the pair at positions i, i+1 contracts to, if it is a forbidden interval."""
    step = base[i + 1] - base[i]
    pair = (decs[i], decs[i + 1])
    if step == 1 and pair in _CONTRACT_UP:
        return "+"
    if step == -1 and pair in _CONTRACT_DOWN:
        return "-"
    return None


def is_compact(rho: PegPermutation) -> bool:
    base, decs = rho
    return all(_contractible(base, decs, i) is None for i in range(len(base) - 1))


def is_clean(rho: PegPermutation) -> bool:
    if not is_compact(rho):
        raise ValueError(f"{rho} is not compact")
    base, decs = rho
    return not any(
        decs[i] == decs[i + 1] == "." and abs(base[i + 1] - base[i]) == 1
        for i in range(len(base) - 1)
    )


def _contract(base, decs, start: int, stop: int, sign: str):
    """Replace the interval at positions start:stop by one entry decorated ``sign``."""
    lo = min(base[start:stop])
    shrink = stop - start - 1
    new_base = tuple(x - shrink if x > lo else x for x in base[:start]) + (lo,)
    new_base += tuple(x - shrink if x > lo else x for x in base[stop:])
    return new_base, decs[:start] + sign + decs[stop:]


def normalize(rho: PegPermutation) -> PegPermutation:
    """Contract forbidden intervals until compact; the grid class is unchanged."""
    base, decs = rho
    i = 0
    while i < len(base) - 1:
        sign = _contractible(base, decs, i)
        if sign is None:
            i += 1
        else:
            base, decs = _contract(base, decs, i, i + 2, sign)
            i = max(i - 1, 0)
    return PegPermutation(base, decs)


def clean(rho: PegPermutation) -> tuple[PegPermutation, tuple]:
    """Contract maximal dotted monotone intervals.

    Returns the clean peg and a cap per entry: 1 for a dotted entry, ``d`` for an entry
    contracted from ``d`` dots, and ``math.inf`` for an entry that was signed already.
    """
    if not is_compact(rho):
        raise ValueError(f"{rho} is not compact")
    base, decs = rho
    runs = []  # (start, stop, sign)
    n = len(base)
    i = 0
    while i < n:
        j = i + 1
        if decs[i] == "." and j < n and decs[j] == "." and abs(base[j] - base[i]) == 1:
            step = base[j] - base[i]
            while j < n and decs[j] == "." and base[j] - base[j - 1] == step:
                j += 1
            runs.append((i, j, "+" if step == 1 else "-"))
        i = j
    caps = [UNBOUNDED if d != "." else 1 for d in decs]
    for start, stop, sign in reversed(runs):
        base, decs = _contract(base, decs, start, stop, sign)
        caps[start:stop] = [stop - start]
    return PegPermutation(base, decs), tuple(caps)


def compact_clean(base: tuple, decs: str):
    """Fused compactness test and cleaning on a raw peg.

    Returns None for a non-compact peg.  Otherwise returns ``(tau, caps)`` as
    :func:`clean` does, except that ``caps`` is None when nothing was contracted (the
    box is then the whole ambient class of ``tau``).
    """
    has_run = False
    prev_v, prev_d = base[0], decs[0]
    for v, d in zip(base[1:], decs[1:]):
        step = v - prev_v
        if step == 1:
            if (prev_d, d) in _CONTRACT_UP:
                return None
            if prev_d == d == ".":
                has_run = True
        elif step == -1:
            if (prev_d, d) in _CONTRACT_DOWN:
                return None
            if prev_d == d == ".":
                has_run = True
        prev_v, prev_d = v, d
    if not has_run:
        return (base, decs), None
    tau, caps = clean(PegPermutation(base, decs))
    return tuple(tau), caps


def _run(length: int, decoration: str) -> tuple[int, ...]:
    if decoration == "-":
        return tuple(range(length, 0, -1))
    return tuple(range(1, length + 1))


def _inflate_lengths(rho: PegPermutation, lengths: Sequence[int]) -> Permutation:
    return inflate(rho.base, [_run(k, d) for k, d in zip(lengths, rho.decorations)])


def inflate_by_vector(rho: PegPermutation, v: Sequence[int]) -> Permutation:
    """Inflate entry i by a monotone run of length ``v[i]`` in its decoration's direction."""
    if len(v) != len(rho):
        raise ValueError(f"vector of length {len(v)} for peg of length {len(rho)}")
    for k, d in zip(v, rho.decorations):
        if k < 1:
            raise ValueError(f"coordinates must be positive: {tuple(v)}")
        if d == "." and k > 1:
            raise ValueError(f"dotted entry cannot take {k} points")
    return _inflate_lengths(rho, v)


def partitions(pi: Sequence[int], rho: PegPermutation) -> Iterator[tuple[int, ...]]:
    """Yield every length vector (zeros allowed) describing a rho-partition of ``pi``."""
    pi = tuple(pi)
    n, m = len(pi), len(rho)
    decs = rho.decorations
    lengths = [0] * m

    def monotone(start: int, stop: int, d: str) -> bool:
        step = 1 if d == "+" else -1
        return all(pi[t + 1] - pi[t] == step for t in range(start, stop - 1))

    def search(i: int, pos: int) -> Iterator[tuple[int, ...]]:
        if i == m:
            if pos == n and _inflate_lengths(rho, lengths) == pi:
                yield tuple(lengths)
            return
        top = min(1, n - pos) if decs[i] == "." else n - pos
        for k in range(top + 1):
            if k >= 2 and not monotone(pos, pos + k, decs[i]):
                break
            lengths[i] = k
            yield from search(i + 1, pos + k)
        lengths[i] = 0

    return search(0, 0)


def min_fill_vector(rho: PegPermutation) -> tuple[int, ...]:
    return tuple(1 if d == "." else 2 for d in rho.decorations)


def fills(pi: Sequence[int], rho: PegPermutation) -> bool:
    """True iff some rho-partition of ``pi`` gives every signed entry >= 2 points and every dot one."""
    low = min_fill_vector(rho)
    return any(
        all(k >= lo if d != "." else k == 1 for k, lo, d in zip(v, low, rho.decorations))
        for v in partitions(pi, rho)
    )


def grid_member(pi: Sequence[int], rho: PegPermutation) -> bool:
    return next(partitions(pi, rho), None) is not None


def pattern_of(pi: Sequence[int]) -> PegPermutation:
    """Peg recording the coarsest monotone partition of ``pi``: runs signed, singletons dotted."""
    runs = maximal_monotone_runs(pi)
    firsts = [pi[r.start - 1] for r in runs]
    decs = "".join({"up": "+", "down": "-", "point": "."}[r.direction] for r in runs)
    return PegPermutation(standardize(firsts), decs)
