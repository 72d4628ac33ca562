"""Independent brute-force helpers shared by the tests."""

from functools import lru_cache
from itertools import product

from polyperm.peg import PegPermutation
from polyperm.perm import inflate


def all_pegs(max_len):
    from itertools import permutations

    out = []
    for m in range(1, max_len + 1):
        for base in permutations(range(1, m + 1)):
            for decs in product("+-.", repeat=m):
                out.append(PegPermutation(base, "".join(decs)))
    return out


def _run(k, d):
    return tuple(range(k, 0, -1)) if d == "-" else tuple(range(1, k + 1))


@lru_cache(maxsize=None)
def grid_by_generation(peg, n):
    """Grid(peg) at length n, built by inflating with every admissible length vector."""
    ranges = [range(2) if d == "." else range(n + 1) for d in peg.decorations]
    out = set()
    for lengths in product(*ranges):
        if sum(lengths) == n:
            out.add(inflate(peg.base, [_run(k, d) for k, d in zip(lengths, peg.decorations)]))
    return frozenset(out)


def grid_upto(peg, n_max):
    return {n: grid_by_generation(peg, n) for n in range(n_max + 1)}
