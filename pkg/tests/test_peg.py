from itertools import permutations, product

import math
import pytest

from polyperm.peg import (
    Decoration,
    PegParseError,
    PegPermutation,
    clean,
    downclose,
    fills,
    grid_member,
    inflate_by_vector,
    is_clean,
    is_compact,
    normalize,
    parse_pegset,
    partitions,
    peg_le,
)
from polyperm.perm import contains

from .helpers import all_pegs, grid_by_generation, grid_upto

P = PegPermutation.parse
SMALL = all_pegs(3)
PERMS = {n: list(permutations(range(1, n + 1))) for n in range(7)}


def test_parse_and_render():
    rho = P("3- 1. 4+ 2+")
    assert rho.base == (3, 1, 4, 2) and rho.decorations == "-.++"
    assert str(rho) == "3- 1. 4+ 2+"
    assert P("2• 1−") == P("2. 1-")
    assert rho.decorations[1] == Decoration.DOT
    assert rho.signed == 3
    with pytest.raises(PegParseError):
        P("1*")
    with pytest.raises(PegParseError):
        P("1+ 3+")


def test_pegset_file_format():
    text = "# block transposition\n1+ 3+ 2+ 4+\n\n2- 1.  # trailing\n1+ 3+ 2+ 4+\n"
    assert parse_pegset(text) == {P("1+ 3+ 2+ 4+"), P("2- 1.")}
    with pytest.raises(PegParseError) as err:
        parse_pegset("1+\n2+ 1x\n")
    assert err.value.line == 2 and err.value.column == 4 and err.value.token == "1x"


def test_order_examples():
    assert not peg_le(P("1. 2."), P("1+"))
    assert peg_le(P("1-"), P("2- 1."))
    for rho in SMALL:
        assert peg_le(rho, rho)


def test_order_is_partial_order_and_matches_closure():
    below = {r: downclose([r]) for r in SMALL}
    for t in SMALL:
        for r in SMALL:
            le = peg_le(t, r)
            assert le == (t in below[r])
            if le and t != r:
                assert not peg_le(r, t)
    for a in SMALL:
        for b in below[a]:
            for c in below[b]:
                assert peg_le(c, a)


def test_downclose_examples():
    got = downclose([P("1+ 2+")])
    assert got == {P(s) for s in ["1+ 2+", "1. 2+", "1+ 2.", "1. 2.", "1+", "1."]}
    assert downclose([P("1.")]) == {P("1.")}
    g = [P("1+ 3- 2."), P("2+ 1+")]
    assert downclose(downclose(g)) == downclose(g)


def test_compact_examples():
    assert not is_compact(P("2. 1-"))
    assert is_compact(P("1+ 3+ 2+ 4+"))
    assert is_compact(P("1+"))


def test_clean_examples():
    assert not is_clean(P("2. 3. 4. 1."))
    assert is_clean(P("2+ 1."))
    assert is_clean(P("1."))
    with pytest.raises(ValueError):
        is_clean(P("1+ 2+"))


def test_normalize_examples():
    assert normalize(P("2- 1.")) == P("1-")
    assert normalize(P("1+ 3+ 2+ 4+")) == P("1+ 3+ 2+ 4+")
    assert normalize(P("1+ 2+ 3+")) == P("1+")
    assert grid_upto(P("1+ 2+ 3+"), 6) == grid_upto(P("1+"), 6)


def test_normalize_preserves_grid_class():
    for rho in SMALL:
        out = normalize(rho)
        assert is_compact(out)
        assert grid_upto(out, 6) == grid_upto(rho, 6)


def test_clean_examples_with_caps():
    assert clean(P("2. 3. 4. 1.")) == (P("2+ 1."), (3, 1))
    assert clean(P("1+")) == (P("1+"), (math.inf,))
    assert clean(P("1. 2.")) == (P("1+"), (2,))
    with pytest.raises(ValueError):
        clean(P("1+ 2."))


def test_clean_fillings_are_capped_inflations():
    # the fillings of rho are exactly tau[v] with v between the minimum fill vector and the caps
    for rho in SMALL:
        if not is_compact(rho):
            continue
        tau, caps = clean(rho)
        n_max = 6
        for n in range(1, n_max + 1):
            expect = {p for p in PERMS[n] if fills(p, rho)}
            got = set()
            for v in product(*[range(1, n + 1)] * len(tau)):
                if sum(v) != n:
                    continue
                ok = all((k == 1) if d == "." else (2 <= k and (c == math.inf or k == c))
                         for k, d, c in zip(v, tau.decorations, caps))
                if ok:
                    got.add(inflate_by_vector(tau, v))
            assert got == expect, (rho, n)


def test_inflate_by_vector_examples():
    assert inflate_by_vector(P("2+ 1+"), (4, 2)) == (3, 4, 5, 6, 1, 2)
    assert inflate_by_vector(P("3- 1. 4+ 2+"), (1, 1, 1, 1)) == (3, 1, 4, 2)
    assert inflate_by_vector(P("1-"), (3,)) == (3, 2, 1)
    with pytest.raises(ValueError):
        inflate_by_vector(P("1."), (2,))
    with pytest.raises(ValueError):
        inflate_by_vector(P("1+ 2-"), (1,))


def test_fills_examples():
    assert fills((2, 3, 4, 1), P("2. 3. 4. 1."))
    assert fills((2, 3, 4, 1), P("2+ 1."))
    assert not fills((2, 1), P("2+ 1."))
    assert fills((3, 4, 5, 6, 1, 2), P("2+ 1+"))


def test_grid_member_examples():
    assert grid_member((1,), P("3- 1. 4+ 2+"))
    assert not grid_member((3, 1, 4, 2), P("1+"))
    assert grid_member((6, 3, 2, 1, 7, 4, 5), P("3- 1- 4+ 2+"))
    assert grid_member((), P("1+"))


def test_grid_member_matches_generation():
    for rho in all_pegs(2) + [P("3- 1. 4+ 2+"), P("1+ 3- 2.")]:
        for n in range(6):
            assert {p for p in PERMS[n] if grid_member(p, rho)} == grid_by_generation(rho, n)


def test_order_monotone_on_grid_classes():
    for r in SMALL:
        for t in downclose([r]):
            for n in range(6):
                assert grid_by_generation(t, n) <= grid_by_generation(r, n)


def test_containment_reflection():
    # for compact rho and a filling rho[v]: rho[v] <= rho[w] iff v <= w
    for rho in SMALL:
        if not is_compact(rho):
            continue
        ranges = [range(1, 2) if d == "." else range(1, 5) for d in rho.decorations]
        vecs = list(product(*ranges))
        images = {v: inflate_by_vector(rho, v) for v in vecs}
        for v in vecs:
            if any(d != "." and k < 2 for k, d in zip(v, rho.decorations)):
                continue
            for w in vecs:
                assert contains(images[w], images[v]) == all(a <= b for a, b in zip(v, w)), (rho, v, w)


@pytest.mark.parametrize("gens", [
    ["1+ 3+ 2+ 4+"], ["2- 1."], ["1. 2. 3."], ["2+ 1-", "1- 3. 2+"], ["3. 1+ 2-"],
])
def test_closure_is_complete(gens):
    closure = downclose([P(g) for g in gens])
    for n in range(1, 7):
        for p in PERMS[n]:
            if any(grid_member(p, P(g)) for g in gens):
                assert any(fills(p, r) for r in closure), p


def test_partitions_enumerate_length_vectors():
    assert sorted(partitions((1, 2), P("1+ 2+"))) == [(0, 2), (1, 1), (2, 0)]
    assert list(partitions((2, 1), P("1+"))) == []
