import pytest
from hypothesis import given, settings

from traag import zoo
from traag.classify import Certificate, is_complete_special, is_droms
from traag.decompose import (
    COMPLETE_WITH_SINKHOLE,
    POSITIVE_TIPS,
    Cone,
    FreeProduct,
    Leaf,
    complete_special_quotient,
    decompose,
    droms_tree,
    eligible_tips,
    format_tree,
    maximal_abelian_normal,
    peel_cone,
    reassemble,
    tree_signature,
    tree_to_json,
    tree_vertices,
)
from traag.errors import Disconnected, IneligibleTip, NotDroms, NotSpecial, TooSmall
from traag.graph import graph, signatures
from traag.words import is_identity, presentation, substitute, verify_abelian_normal

from .strategies import mixed_graphs


def test_leaf_and_free_product():
    assert decompose(graph("a")) == Leaf("a", 1)
    assert decompose(graph("a"), {"a": -1}) == Leaf("a", -1)
    assert decompose(graph("a b")) == FreeProduct((Leaf("a", 1), Leaf("b", 1)))


def test_klein_tree():
    t = decompose(zoo.XI2)
    assert t == Cone("a", Leaf("b", -1))
    assert format_tree(t) == "cone[a](b-)"
    assert tree_to_json(t) == {"cone": "a", "base": {"leaf": "b", "sign": -1}}


def test_gamma3_tree_text():
    assert format_tree(decompose(zoo.GAMMA3)) == "cone[b1](cone[b2](a1- * a2-))"


def test_tips():
    assert eligible_tips(zoo.GAMMA3) == {"b1", "b2"}
    assert eligible_tips(zoo.P2) == {"a", "b"}
    assert eligible_tips(zoo.XI2) == {"a"}
    assert eligible_tips(zoo.P4) == set()
    with pytest.raises(TooSmall):
        eligible_tips(graph("a"))
    with pytest.raises(Disconnected):
        eligible_tips(graph("a b"))
    with pytest.raises(IneligibleTip):
        peel_cone(zoo.XI2, "b")
    base, theta = peel_cone(zoo.GAMMA3, "b1")
    assert theta == {"a1": -1, "a2": -1, "b2": 1}
    assert len(base) == 3


def test_failure_returns_certificate():
    cert = decompose(zoo.C4)
    assert isinstance(cert, Certificate)
    with pytest.raises(NotDroms) as info:
        droms_tree(zoo.LAMBDA_S)
    assert info.value.certificate.kind == "ForbiddenLambdaS"


def test_bad_signature_rejected():
    with pytest.raises(ValueError):
        decompose(zoo.XI2, {"a": -1, "b": -1})


@settings(max_examples=200, deadline=None)
@given(mixed_graphs(max_n=6))
def test_decompose_iff_droms_and_round_trip(g):
    for theta in signatures(g)[:4]:
        tree = decompose(g, theta)
        assert isinstance(tree, Certificate) == (not is_droms(g))
        if isinstance(tree, Certificate):
            return
        h, sig = reassemble(tree)
        assert h == g and sig == theta == tree_signature(tree)
        assert sorted(tree_vertices(tree)) == list(g.vertices)


# -- quotient -------------------------------------------------------------------


def test_quotient_of_gamma3():
    delta, images = complete_special_quotient(zoo.GAMMA3)
    assert delta.vertices == zoo.GAMMA3.vertices
    assert delta.directed == {("a2", "a1"), ("b1", "a1"), ("b2", "a1")}
    assert images["a2"] == (("a1", 1), ("a2", 1))
    assert is_complete_special(delta)
    tree = decompose(delta)
    for rel in presentation(zoo.GAMMA3).relators:
        assert is_identity(tree, substitute(rel, images))


def test_quotient_without_negatives():
    delta, images = complete_special_quotient(zoo.P4)
    assert delta.num_edges == 6 and not delta.directed
    assert all(images[v] == ((v, 1),) for v in zoo.P4.vertices)


def test_quotient_errors():
    with pytest.raises(NotSpecial):
        complete_special_quotient(zoo.GAMMA1)
    with pytest.raises(Disconnected):
        complete_special_quotient(graph("a b"))


# -- abelian normal subgroup --------------------------------------------------------


def test_klein_normal_subgroup():
    data = maximal_abelian_normal(zoo.XI2)
    assert data.case == COMPLETE_WITH_SINKHOLE
    assert data.rank == 2 and data.generators == ((("b", 2),), (("a", 1),))
    assert verify_abelian_normal(zoo.XI2, data)


def test_triangle_normal_subgroup():
    k3 = graph(": a-b b-c a-c")
    data = maximal_abelian_normal(k3)
    assert data.case == POSITIVE_TIPS and data.rank == 3


def test_gamma3_normal_subgroup():
    data = maximal_abelian_normal(zoo.GAMMA3)
    assert data.case == POSITIVE_TIPS
    assert data.generators == ((("b1", 1),), (("b2", 1),))
    assert verify_abelian_normal(zoo.GAMMA3, data)


def test_normal_subgroup_errors():
    with pytest.raises(TooSmall):
        maximal_abelian_normal(graph("a"))
    with pytest.raises(Disconnected):
        maximal_abelian_normal(graph("a b"))
    with pytest.raises(NotDroms):
        maximal_abelian_normal(zoo.P4)
    with pytest.raises(NotDroms):
        maximal_abelian_normal(zoo.LAMBDA_S)


def test_complete_graph_with_sinkhole_uses_square():
    g = graph(": a>c b>c a-b d>c d-a d-b")
    data = maximal_abelian_normal(g)
    assert data.case == COMPLETE_WITH_SINKHOLE and data.rank == 4
    assert data.generators[0] == (("c", 2),)
    assert verify_abelian_normal(g, data)
