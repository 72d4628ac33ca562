import math
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyperm.vectors import (
    VectorClass,
    caps_to_basis,
    fmt_vector,
    intersect,
    join,
    leq,
    member,
    minimal,
    union,
)

INF = math.inf


def explicit(V, top=6):
    """Members of V with every coordinate <= top, straight from the definition."""
    out = set()
    for v in product(range(1, top + 1), repeat=V.dim):
        in_box = all(a <= c for a, c in zip(v, V.caps))
        avoids = all(not all(b_i <= a for b_i, a in zip(b, v)) for b in V.basis)
        if in_box and avoids:
            out.add(v)
    return out


def is_antichain(basis):
    return all(not leq(a, b) for a in basis for b in basis if a != b)


@st.composite
def class_pairs(draw):
    dim = draw(st.integers(1, 3))
    cap = st.one_of(st.integers(1, 6), st.just(INF))
    vec = st.tuples(*[st.integers(1, 4)] * dim)

    def one():
        return VectorClass(tuple(draw(cap) for _ in range(dim)),
                           frozenset(draw(st.lists(vec, max_size=4))))

    return one(), one()


def test_join_examples():
    assert join((3, 1), (1, 2)) == (3, 2)
    assert join((2, 5), (2, 5)) == (2, 5)
    assert join((2, 5), (4, 1)) == (4, 5)
    with pytest.raises(ValueError):
        join((1,), (1, 2))


def test_member_examples():
    V = VectorClass((INF,), frozenset({(4,)}))
    assert member(V, (3,)) and not member(V, (4,))
    assert (3,) in V
    assert not member(VectorClass((1, INF), frozenset()), (2, 7))
    assert member(VectorClass((INF, INF), frozenset({(2, 3)})), (1, 1))
    with pytest.raises(ValueError):
        member(V, (1, 1))


def test_intersect_examples():
    full = (INF, INF)
    a = VectorClass(full, frozenset({(3, 1)}))
    b = VectorClass(full, frozenset({(1, 2)}))
    assert intersect(a, b).basis == {(3, 1), (1, 2)}
    assert intersect(a, a) == a
    c = intersect(VectorClass(full, frozenset({(2, 1)})), a)
    assert c.basis == {(2, 1)}
    assert explicit(c, 5) == explicit(VectorClass(full, frozenset({(2, 1)})), 5)
    with pytest.raises(ValueError):
        intersect(a, VectorClass.full(3))


def test_union_examples():
    full = (INF, INF)
    a = VectorClass(full, frozenset({(3, 1)}))
    b = VectorClass(full, frozenset({(1, 2)}))
    u = union(a, b)
    assert u.basis == {(3, 2)}
    assert explicit(u) == explicit(a) | explicit(b)
    assert union(a, a) == a
    small, big = VectorClass((INF,), frozenset({(3,)})), VectorClass((INF,), frozenset({(5,)}))
    assert union(small, big).basis == {(5,)}
    assert union(VectorClass.box((2,)), VectorClass.box((4,))) == VectorClass.box((4,))


def test_caps_to_basis_examples():
    assert caps_to_basis((3, 1, INF)) == {(4, 1, 1), (1, 2, 1)}
    assert caps_to_basis((INF, INF)) == frozenset()
    assert caps_to_basis((1,)) == {(2,)}
    V = VectorClass((INF, INF, INF), caps_to_basis((3, 1, INF)))
    assert explicit(V, 5) == explicit(VectorClass.box((3, 1, INF)), 5)


def test_construction_prunes_and_minimizes():
    V = VectorClass((2, INF), frozenset({(3, 1), (1, 4), (2, 4)}))
    assert V.basis == {(1, 4)}
    assert V.full_basis() == {(1, 4), (3, 1)}
    with pytest.raises(ValueError):
        VectorClass((0,), frozenset())
    assert minimal([(2, 2), (1, 3), (2, 3), (1, 3)]) == {(2, 2), (1, 3)}
    assert fmt_vector((1, INF)) == "(1,inf)"
    assert str(VectorClass((INF,), frozenset({(4,)}))) == "caps (inf) basis {(4)}"


@settings(max_examples=300, deadline=None)
@given(class_pairs())
def test_lattice_operations_match_membership(pair):
    V, W = pair
    ev, ew = explicit(V), explicit(W)
    i, u = intersect(V, W), union(V, W)
    assert explicit(i) == ev & ew
    assert explicit(u) == ev | ew
    for X in (V, W, i, u):
        assert is_antichain(X.basis)
        assert all(leq(b, X.caps) for b in X.basis)


@settings(max_examples=200, deadline=None)
@given(class_pairs())
def test_classes_are_downsets(pair):
    V = pair[0]
    members = explicit(V, 5)
    for w in members:
        for v in product(*[range(1, a + 1) for a in w]):
            assert v in members
