import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from traag import zoo
from traag.errors import TooLarge
from traag.graph import MixedGraph, graph
from traag.iso import canonical_form, decode, encode, find_isomorphism, is_isomorphism, pair_index

from .strategies import graph_and_permutation, mixed_graphs


def _brute_iso(g1, g2):
    if len(g1) != len(g2):
        return False
    for perm in itertools.permutations(g2.vertices):
        if g1.relabel(dict(zip(g1.vertices, perm))) == g2:
            return True
    return False


def _brute_classes(n):
    names = "abcdef"[:n]
    reps = []
    for digits in itertools.product(range(4), repeat=len(pair_index(n))):
        g = decode(digits, list(names))
        if not any(_brute_iso(g, r) for r in reps):
            reps.append(g)
    return reps


def test_class_counts_by_brute_force():
    assert [len(_brute_classes(n)) for n in (1, 2, 3)] == [1, 3, 16]


def test_canonical_form_separates_classes():
    for n in (2, 3):
        keys = {canonical_form(g) for g in _brute_classes(n)}
        assert len(keys) == {2: 3, 3: 16}[n]


def test_encode_decode_round_trip():
    g = zoo.UPSILON
    assert decode(encode(g), list(g.vertices)) == g


def test_gamma3_not_isomorphic_to_its_twin():
    assert find_isomorphism(zoo.GAMMA3, zoo.GAMMA3_PRIME) is None
    assert canonical_form(zoo.GAMMA3) != canonical_form(zoo.GAMMA3_PRIME)


def test_orientation_matters():
    assert find_isomorphism(graph(": a>b b-c"), graph(": a-b b>c")) is None
    assert find_isomorphism(graph(": a>b b-c"), graph(": b>a a-c")) == {"a": "b", "b": "a", "c": "c"}


def test_lexicographically_least_isomorphism():
    g = graph("a b c")
    assert find_isomorphism(g, g) == {"a": "a", "b": "b", "c": "c"}


def test_too_large():
    g = MixedGraph(tuple(f"v{i}" for i in range(9)))
    with pytest.raises(TooLarge):
        canonical_form(g)
    assert canonical_form(g, max_n=9).startswith(b"9:")


@settings(max_examples=150, deadline=None)
@given(graph_and_permutation(max_n=6))
def test_relabelled_graphs_match(gp):
    g, perm = gp
    h = g.relabel(perm)
    m = find_isomorphism(g, h)
    assert m is not None and is_isomorphism(g, h, m)
    assert canonical_form(g) == canonical_form(h)


@settings(max_examples=150, deadline=None)
@given(mixed_graphs(max_n=4), mixed_graphs(max_n=4))
def test_canonical_form_agrees_with_brute_force(g, h):
    brute = _brute_iso(g, h)
    assert (find_isomorphism(g, h) is not None) == brute
    assert (canonical_form(g) == canonical_form(h)) == brute


@given(st.integers(1, 5))
def test_empty_graphs_are_isomorphic(n):
    names = tuple("abcde"[:n])
    g = MixedGraph(names)
    assert find_isomorphism(g, MixedGraph(tuple(x.upper() for x in names))) is not None
