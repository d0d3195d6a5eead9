import itertools

import pytest
from hypothesis import given, settings

from traag import zoo
from traag.errors import (
    ConflictingEdge,
    DuplicateVertex,
    InvalidName,
    InvalidSignature,
    NameClash,
    SelfLoop,
    UnknownEndpoint,
    UnknownVertex,
)
from traag.graph import (
    MixedGraph,
    canonical_signature,
    cone,
    delete_vertex,
    disjoint_union,
    fresh_name,
    graph,
    induced_subgraph,
    is_valid_signature,
    iterated_cone,
    negative_vertices,
    origins,
    signatures,
    sinkholes,
    validate,
)

from .strategies import graph_and_permutation, mixed_graphs


@pytest.mark.parametrize(
    "args, exc",
    [
        ((["a", "a"], [], []), DuplicateVertex),
        ((["a"], [("a", "b")], []), UnknownEndpoint),
        ((["a"], [], [("a", "a")]), SelfLoop),
        ((["a", "b"], [("a", "b")], [("b", "a")]), ConflictingEdge),
        ((["a", "b"], [], [("a", "b"), ("b", "a")]), ConflictingEdge),
        ((["a", "b"], [("a", "b"), ("b", "a")], []), ConflictingEdge),
        ((["a b"], [], []), InvalidName),
        (([""], [], []), InvalidName),
    ],
)
def test_validate_rejects(args, exc):
    with pytest.raises(exc):
        validate(*args)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        validate(["x", "x"])


def test_graph_shorthand():
    g = graph("a b c : a-b b>c")
    assert g.vertices == ("a", "b", "c")
    assert g.undirected == {("a", "b")}
    assert g.directed == {("b", "c")}
    assert g.kind("b", "c") == "out" and g.kind("c", "b") == "in" and g.kind("a", "c") is None


def test_queries_reject_unknown_vertex():
    with pytest.raises(UnknownVertex):
        zoo.P2.neighbors("z")
    with pytest.raises(UnknownVertex):
        delete_vertex(zoo.P2, "z")


def test_fixture_vertex_roles():
    assert negative_vertices(zoo.XI2) == {"b"} and origins(zoo.XI2) == {"a"}
    assert sinkholes(zoo.XI2) == {"b"}
    assert sinkholes(zoo.GAMMA1) == set()
    assert sinkholes(zoo.GAMMA2) == {"b'"}
    assert sinkholes(zoo.GAMMA3) == {"a1", "a2"}
    assert sinkholes(zoo.UPSILON) == {"a1"}
    assert sinkholes(zoo.P2) == set()


def _brute_signatures(g):
    neg = negative_vertices(g)
    out = []
    for vals in itertools.product((1, -1), repeat=len(g)):
        theta = dict(zip(g.vertices, vals))
        if all(theta[v] == -1 for v in neg) and all(
            theta[v] == 1 for v in g.vertices if v not in neg and g.degree(v)
        ):
            out.append(theta)
    return out


@settings(max_examples=200)
@given(mixed_graphs(max_n=5))
def test_signatures_match_definition(g):
    got = signatures(g)
    isolated = sum(1 for v in g.vertices if g.degree(v) == 0)
    assert len(got) == 2**isolated
    assert sorted(map(sorted, (t.items() for t in got))) == sorted(map(sorted, (t.items() for t in _brute_signatures(g))))
    assert all(is_valid_signature(g, t) for t in got)
    assert canonical_signature(g) in got


def test_signature_rejections():
    assert not is_valid_signature(zoo.XI2, {"a": 1, "b": 1})
    assert not is_valid_signature(zoo.XI2, {"a": -1, "b": -1})
    assert not is_valid_signature(zoo.XI2, {"a": 1})
    assert not is_valid_signature(zoo.XI2, {"a": 1, "b": -1, "c": 1})
    assert is_valid_signature(MixedGraph(("a",)), {"a": -1})


def test_induced_subgraph_and_delete():
    g = zoo.UPSILON
    h = induced_subgraph(g, ["a1", "b1", "c1"])
    assert h.directed == {("b1", "a1"), ("c1", "a1")} and h.undirected == {("b1", "c1")}
    assert delete_vertex(g, "a1") == induced_subgraph(g, [v for v in g.vertices if v != "a1"])


def test_fresh_name():
    assert fresh_name("a", ["a", "a'"]) == "a''"
    assert fresh_name("b", ["a"]) == "b'"


def test_disjoint_union_renames_clashes():
    u, renamed = disjoint_union(zoo.XI2, zoo.XI2)
    assert renamed == {"a": "a'", "b": "b'"}
    assert u.directed == {("a", "b"), ("a'", "b'")}
    v, renamed = disjoint_union(graph("a"), graph("b"))
    assert renamed == {} and v.num_edges == 0


def test_cone_directs_by_signature():
    base = graph("a1 a2")
    g, sig = cone(base, {"a1": -1, "a2": 1}, "t")
    assert g.directed == {("t", "a1")} and g.undirected == {("a2", "t")}
    assert sig == {"a1": -1, "a2": 1, "t": 1}
    with pytest.raises(NameClash):
        cone(base, {"a1": 1, "a2": 1}, "a1")
    with pytest.raises(InvalidSignature):
        cone(zoo.XI2, {"a": 1, "b": 1}, "t")


def test_gamma3_from_two_points():
    g = iterated_cone(graph("a1 a2"), {"a1": -1, "a2": -1}, ["b1", "b2"])
    assert g == zoo.GAMMA3


@settings(max_examples=200)
@given(mixed_graphs(max_n=6))
def test_cone_over_any_signature(g):
    for theta in signatures(g)[:4]:
        c, sig = cone(g, theta, "t")
        assert c.degree("t") == len(g)
        assert "t" not in negative_vertices(c)
        assert is_valid_signature(c, sig)
        assert delete_vertex(c, "t") == g


@settings(max_examples=200)
@given(graph_and_permutation(max_n=6))
def test_relabel_preserves_roles(gp):
    g, perm = gp
    h = g.relabel(perm)
    assert h.num_edges == g.num_edges
    assert {perm[v] for v in sinkholes(g)} == sinkholes(h)
    assert {perm[v] for v in negative_vertices(g)} == negative_vertices(h)
    assert sorted(g.profile(v) for v in g.vertices) == sorted(h.profile(v) for v in h.vertices)


@settings(max_examples=200)
@given(mixed_graphs(max_n=6))
def test_components_partition(g):
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(g.vertices)
    assert g.is_connected() == (len(comps) == 1)
    assert g.underlying().directed == frozenset()
    assert g.underlying().num_edges == g.num_edges
