"""Cone peeling and decomposition trees of Droms mixed graphs.

A Droms mixed graph is assembled from single vertices by disjoint unions and
cones.  :func:`decompose` recovers such an assembly as a
:class:`DecompositionTree`; the tree is also the data the word engine in
:mod:`traag.words` runs on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Union

from traag.classify import Certificate, is_complete_special, is_droms, is_special
from traag.errors import Disconnected, IneligibleTip, NoCentralVertex, NotDroms, NotSpecial, TooSmall
from traag.graph import (
    IN,
    OUT,
    MixedGraph,
    Signature,
    canonical_signature,
    cone,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_valid_signature,
    negative_vertices,
    sinkholes,
)


@dataclass(frozen=True)
class Leaf:
    vertex: str
    sign: int


@dataclass(frozen=True)
class FreeProduct:
    children: tuple["DecompositionTree", ...]


@dataclass(frozen=True)
class Cone:
    tip: str
    base: "DecompositionTree"


DecompositionTree = Union[Leaf, FreeProduct, Cone]


def tree_vertices(tree: DecompositionTree) -> list[str]:
    if isinstance(tree, Leaf):
        return [tree.vertex]
    if isinstance(tree, Cone):
        return [tree.tip] + tree_vertices(tree.base)
    return [v for c in tree.children for v in tree_vertices(c)]


def tree_signature(tree: DecompositionTree) -> Signature:
    """Leaf signs, with +1 on every cone tip."""
    if isinstance(tree, Leaf):
        return {tree.vertex: tree.sign}
    if isinstance(tree, Cone):
        sig = tree_signature(tree.base)
        sig[tree.tip] = 1
        return sig
    sig = {}
    for c in tree.children:
        sig.update(tree_signature(c))
    return sig


def reassemble(tree: DecompositionTree) -> tuple[MixedGraph, Signature]:
    """Rebuild the graph (and the signature recorded by the tree) from leaves upward."""
    if isinstance(tree, Leaf):
        return MixedGraph((tree.vertex,)), {tree.vertex: tree.sign}
    if isinstance(tree, Cone):
        base, sig = reassemble(tree.base)
        return cone(base, sig, tree.tip)
    g, sig = reassemble(tree.children[0])
    for child in tree.children[1:]:
        h, hsig = reassemble(child)
        g, renamed = disjoint_union(g, h)
        if renamed:
            raise ValueError(f"tree repeats vertices {sorted(renamed)}")
        sig.update(hsig)
    return g, sig


def tree_to_json(tree: DecompositionTree) -> dict:
    if isinstance(tree, Leaf):
        return {"leaf": tree.vertex, "sign": tree.sign}
    if isinstance(tree, Cone):
        return {"cone": tree.tip, "base": tree_to_json(tree.base)}
    return {"free_product": [tree_to_json(c) for c in tree.children]}


def format_tree(tree: DecompositionTree) -> str:
    if isinstance(tree, Leaf):
        return f"{tree.vertex}{'+' if tree.sign > 0 else '-'}"
    if isinstance(tree, Cone):
        return f"cone[{tree.tip}]({format_tree(tree.base)})"
    return " * ".join(f"({format_tree(c)})" if isinstance(c, FreeProduct) else format_tree(c) for c in tree.children)


# -- cone peeling ----------------------------------------------------------------


def _base_signature(g: MixedGraph, tip: str) -> Signature:
    return {v: -1 if g.kind(tip, v) == OUT else 1 for v in g.vertices if v != tip}


def eligible_tips(g: MixedGraph) -> set[str]:
    """Vertices ``c`` such that ``g`` is the cone over ``g - c`` with tip ``c``.

    ``c`` must be joined to every other vertex, receive no directed edge, and
    the orientation of its edges must be a valid signature of ``g - c``.
    """
    if len(g) < 2:
        raise TooSmall("cone tips need at least two vertices")
    if not g.is_connected():
        raise Disconnected("cone tips exist only in connected graphs")
    tips = set()
    for c in g.vertices:
        if g.degree(c) != len(g) - 1:
            continue
        if any(g.kind(c, v) == IN for v in g.neighbors(c)):
            continue
        if is_valid_signature(delete_vertex(g, c), _base_signature(g, c)):
            tips.add(c)
    return tips


def peel_cone(g: MixedGraph, tip: str) -> tuple[MixedGraph, Signature]:
    """Split ``g`` as the cone over ``(base, theta0)`` with the given tip."""
    if tip not in eligible_tips(g):
        raise IneligibleTip(f"{tip!r} is not a cone tip of {g!r}")
    return delete_vertex(g, tip), _base_signature(g, tip)


def decompose(g: MixedGraph, signature: Mapping[str, int] | None = None) -> DecompositionTree | Certificate:
    """Decomposition tree of ``g``, or the Droms-failure certificate of the first stuck subgraph.

    ``signature`` fixes the signs of isolated vertices (default +1).  Cone tips
    are peeled in lexicographic order.
    """
    theta = dict(signature) if signature is not None else canonical_signature(g)
    if not is_valid_signature(g, theta):
        raise ValueError(f"{theta!r} is not a signature of {g!r}")
    return _decompose(g, theta)


def _decompose(g: MixedGraph, theta: Signature) -> DecompositionTree | Certificate:
    if len(g) == 0:
        return FreeProduct(())
    if len(g) == 1:
        (v,) = g.vertices
        return Leaf(v, theta[v])
    comps = g.components()
    if len(comps) > 1:
        children = []
        for comp in comps:
            sub = _decompose(induced_subgraph(g, comp), {v: theta[v] for v in comp})
            if isinstance(sub, Certificate):
                return sub
            children.append(sub)
        return FreeProduct(tuple(children))
    tips = eligible_tips(g)
    if not tips:
        cert = is_droms(g)
        if cert is True:
            raise AssertionError(f"connected Droms graph without a cone tip: {g!r}")
        return cert
    tip = min(tips)
    base, theta0 = peel_cone(g, tip)
    sub = _decompose(base, theta0)
    if isinstance(sub, Certificate):
        return sub
    return Cone(tip, sub)


def droms_tree(g: MixedGraph) -> DecompositionTree:
    """Like :func:`decompose` but raises :class:`NotDroms` on failure."""
    tree = decompose(g)
    if isinstance(tree, Certificate):
        raise NotDroms(f"{g!r} is not a Droms mixed graph ({tree.kind})", tree)
    return tree


# -- complete-special quotient ---------------------------------------------------


def complete_special_quotient(g: MixedGraph) -> tuple[MixedGraph, dict[str, tuple]]:
    """Complete special graph on as many vertices, with a generator map onto its T-RAAG.

    With negative vertices ``x1 < ... < xr`` and positive ones ``y1..ys``:
    every pair is joined, ``y -> x1`` and ``xj -> x1`` are directed, all other
    edges are undirected.  The vertex named ``xj`` (j > 1) of the quotient
    graph stands for ``x1^-1 xj``, so the map reads ``xj -> x1 xj``.
    """
    if not is_special(g):
        raise NotSpecial(f"{g!r} is not special")
    if not g.is_connected():
        raise Disconnected(f"{g!r} is not connected")
    neg = sorted(negative_vertices(g))
    images = {v: ((v, 1),) for v in g.vertices}
    und, dirs = set(), set()
    verts = g.vertices
    if not neg:
        und = {(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]}
        return MixedGraph(verts, frozenset(und)), images
    x1 = neg[0]
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if x1 in (a, b):
                other = b if a == x1 else a
                dirs.add((other, x1))
            else:
                und.add((a, b))
    for xj in neg[1:]:
        images[xj] = ((x1, 1), (xj, 1))
    return MixedGraph(verts, frozenset(und), frozenset(dirs)), images


# -- maximal abelian normal subgroup -------------------------------------------------

POSITIVE_TIPS = "PositiveTips"
COMPLETE_WITH_SINKHOLE = "CompleteWithSinkhole"


@dataclass(frozen=True)
class AbelianNormalData:
    case: str
    rank: int
    generators: tuple[tuple[tuple[str, int], ...], ...]


def maximal_abelian_normal(g: MixedGraph) -> AbelianNormalData:
    """Generators of the maximal abelian normal subgroup of a connected Droms T-RAAG."""
    if len(g) < 2:
        raise TooSmall("need at least two vertices")
    if not g.is_connected():
        raise Disconnected(f"{g!r} is not connected")
    cert = is_droms(g)
    if not cert:
        raise NotDroms(f"{g!r} is not a Droms mixed graph", cert)
    holes = sinkholes(g)
    if is_complete_special(g) and holes:
        (u,) = holes
        positives = [v for v in g.vertices if v != u]
        gens = [((u, 2),)] + [((w, 1),) for w in positives]
        return AbelianNormalData(COMPLETE_WITH_SINKHOLE, len(g), tuple(gens))
    tips = sorted(eligible_tips(g))
    if not tips:
        raise NoCentralVertex(f"{g!r} has no positive central vertex")
    return AbelianNormalData(POSITIVE_TIPS, len(tips), tuple(((w, 1),) for w in tips))

