"""Mixed graphs, signatures and the cone / disjoint-union constructors.

A mixed graph is a simplicial graph some of whose edges carry an orientation.
An undirected edge ``{a, b}`` stands for the commutation ``ab = ba``; a directed
edge ``(a, b)`` (origin ``a``, terminus ``b``) stands for the Klein relation
``aba = b``.

Graphs are immutable.  Vertex names are sorted lexicographically and every
iteration over vertices or edges follows that order.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping

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

NAME_RE = re.compile(r"[A-Za-z0-9_']+")

UNDIRECTED = "undirected"
OUT = "out"  # a -> b
IN = "in"  # b -> a

Signature = dict  # VertexId -> +1 / -1


def check_name(name: str) -> str:
    if not isinstance(name, str) or not NAME_RE.fullmatch(name):
        raise InvalidName(f"invalid vertex name {name!r}")
    return name


def _pair(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class MixedGraph:
    """A finite mixed graph ``(V, E, D, o, t)``.

    ``undirected`` holds sorted pairs, ``directed`` holds ``(origin, terminus)``
    pairs.  A vertex pair is joined by at most one edge.
    """

    vertices: tuple[str, ...]
    undirected: frozenset[tuple[str, str]] = frozenset()
    directed: frozenset[tuple[str, str]] = frozenset()
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(sorted(self.vertices))
        if len(set(verts)) != len(verts):
            dup = next(v for v, w in zip(verts, verts[1:]) if v == w)
            raise DuplicateVertex(f"vertex {dup!r} declared twice")
        for v in verts:
            check_name(v)
        vset = set(verts)
        adj: dict[str, dict[str, str]] = {v: {} for v in verts}

        def add(a, b, kind_ab, kind_ba):
            for x in (a, b):
                if x not in vset:
                    raise UnknownEndpoint(f"edge endpoint {x!r} is not a vertex")
            if a == b:
                raise SelfLoop(f"self-loop at {a!r}")
            if b in adj[a]:
                raise ConflictingEdge(f"pair {{{a}, {b}}} carries more than one edge")
            adj[a][b] = kind_ab
            adj[b][a] = kind_ba

        und = set()
        for a, b in self.undirected:
            add(a, b, UNDIRECTED, UNDIRECTED)
            und.add(_pair(a, b))
        dirs = set()
        for a, b in self.directed:
            add(a, b, OUT, IN)
            dirs.add((a, b))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "undirected", frozenset(und))
        object.__setattr__(self, "directed", frozenset(dirs))
        object.__setattr__(self, "_adj", adj)

    # -- basic queries -------------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __repr__(self) -> str:
        parts = [f"{a}-{b}" for a, b in sorted(self.undirected)]
        parts += [f"{a}>{b}" for a, b in sorted(self.directed)]
        return f"MixedGraph({' '.join(self.vertices)} | {', '.join(parts)})"

    def _check(self, v: str) -> None:
        if v not in self._adj:
            raise UnknownVertex(f"{v!r} is not a vertex")

    def neighbors(self, v: str) -> list[str]:
        self._check(v)
        return sorted(self._adj[v])

    def kind(self, a: str, b: str) -> str | None:
        """Edge type seen from ``a``: ``None``, ``"undirected"``, ``"out"`` (a->b) or ``"in"`` (b->a)."""
        self._check(a)
        self._check(b)
        return self._adj[a].get(b)

    def adjacent(self, a: str, b: str) -> bool:
        return b in self._adj[a]

    def degree(self, v: str) -> int:
        self._check(v)
        return len(self._adj[v])

    def is_isolated(self, v: str) -> bool:
        return self.degree(v) == 0

    def profile(self, v: str) -> tuple[int, int, int]:
        """(undirected degree, in-degree, out-degree)."""
        kinds = list(self._adj[v].values())
        return kinds.count(UNDIRECTED), kinds.count(IN), kinds.count(OUT)

    def edges(self) -> list[tuple[str, str, bool]]:
        """All edges as ``(a, b, directed)`` sorted by pair; directed edges read a->b."""
        out = [(a, b, False) for a, b in self.undirected]
        out += [(a, b, True) for a, b in self.directed]
        return sorted(out, key=lambda e: (_pair(e[0], e[1]), e))

    @property
    def num_edges(self) -> int:
        return len(self.undirected) + len(self.directed)

    def underlying(self) -> "MixedGraph":
        """The underlying simplicial graph (all directions forgotten)."""
        und = set(self.undirected) | {_pair(a, b) for a, b in self.directed}
        return MixedGraph(self.vertices, frozenset(und))

    def is_simplicial(self) -> bool:
        return not self.directed

    def components(self) -> list[tuple[str, ...]]:
        seen: set[str] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabel(self, mapping: Mapping[str, str]) -> "MixedGraph":
        """Rename vertices; ``mapping`` must be injective on the vertex set."""
        m = {v: mapping.get(v, v) for v in self.vertices}
        return MixedGraph(
            tuple(m.values()),
            frozenset((m[a], m[b]) for a, b in self.undirected),
            frozenset((m[a], m[b]) for a, b in self.directed),
        )


def validate(vertices: Iterable[str], undirected: Iterable = (), directed: Iterable = ()) -> MixedGraph:
    """Build a :class:`MixedGraph` from raw lists, rejecting any malformed input.

    Raises DuplicateVertex, UnknownEndpoint, SelfLoop or ConflictingEdge.
    """
    verts = list(vertices)
    seen = set()
    for v in verts:
        if v in seen:
            raise DuplicateVertex(f"vertex {v!r} declared twice")
        seen.add(v)
    und = [tuple(e) for e in undirected]
    dirs = [tuple(e) for e in directed]
    pairs = [_pair(*e) for e in und + dirs if len(e) == 2 and e[0] != e[1]]
    if len(pairs) != len(set(pairs)):
        dup = next(p for p in pairs if pairs.count(p) > 1)
        raise ConflictingEdge(f"pair {{{dup[0]}, {dup[1]}}} declared more than once")
    for e in und + dirs:
        if len(e) != 2:
            raise ValueError(f"an edge needs two endpoints, got {e!r}")
    return MixedGraph(tuple(verts), frozenset(und), frozenset(dirs))


def graph(spec: str) -> MixedGraph:
    """Compact constructor used for fixtures: ``graph("a b c : a-b b>c")``.

    ``x-y`` is undirected, ``x>y`` is directed from ``x`` to ``y``.  Vertices
    mentioned only in edges are added implicitly.
    """
    head, _, tail = spec.partition(":")
    verts = head.split()
    und, dirs = [], []
    for tok in tail.split():
        if ">" in tok:
            a, b = tok.split(">")
            dirs.append((a, b))
        else:
            a, b = tok.split("-")
            und.append((a, b))
        for x in (a, b):
            if x not in verts:
                verts.append(x)
    return validate(verts, und, dirs)


# -- signatures --------------------------------------------------------------


def negative_vertices(g: MixedGraph) -> set[str]:
    """Termini of directed edges."""
    return {t for _, t in g.directed}


def origins(g: MixedGraph) -> set[str]:
    return {o for o, _ in g.directed}


def sinkholes(g: MixedGraph) -> set[str]:
    """Vertices with at least one incident edge, every one of them pointing at the vertex."""
    return {v for v in g.vertices if g.degree(v) and all(k == IN for k in g._adj[v].values())}


def is_valid_signature(g: MixedGraph, theta: Mapping[str, int]) -> bool:
    if set(theta) != set(g.vertices):
        return False
    neg = negative_vertices(g)
    for v in g.vertices:
        val = theta[v]
        if val not in (1, -1):
            return False
        if v in neg and val != -1:
            return False
        if v not in neg and g.degree(v) and val != 1:
            return False
    return True


def canonical_signature(g: MixedGraph) -> Signature:
    """The signature that is +1 on every isolated vertex."""
    neg = negative_vertices(g)
    return {v: -1 if v in neg else 1 for v in g.vertices}


def signatures(g: MixedGraph) -> list[Signature]:
    """All signatures of ``g``; there are ``2**k`` for ``k`` isolated vertices.

    The forced values (-1 on termini, +1 on other non-isolated vertices) fall on
    disjoint vertex sets, so no vertex is ever forced both ways.
    """
    base = canonical_signature(g)
    free = [v for v in g.vertices if g.is_isolated(v)]
    out = []
    for signs in itertools.product((1, -1), repeat=len(free)):
        theta = dict(base)
        theta.update(zip(free, signs))
        out.append(theta)
    return out


# -- constructions -------------------------------------------------------------


def induced_subgraph(g: MixedGraph, s: Iterable[str]) -> MixedGraph:
    keep = set(s)
    for v in keep:
        g._check(v)
    return MixedGraph(
        tuple(keep),
        frozenset(e for e in g.undirected if e[0] in keep and e[1] in keep),
        frozenset(e for e in g.directed if e[0] in keep and e[1] in keep),
    )


def delete_vertex(g: MixedGraph, v: str) -> MixedGraph:
    g._check(v)
    return induced_subgraph(g, [x for x in g.vertices if x != v])


def _fresh(name: str, taken: set[str]) -> str:
    cand = name + "'"
    while cand in taken:
        cand += "'"
    return cand


def fresh_name(name: str, taken: Iterable[str]) -> str:
    """``name`` with apostrophes appended until it avoids ``taken``."""
    return _fresh(name, set(taken))


def disjoint_union(g1: MixedGraph, g2: MixedGraph) -> tuple[MixedGraph, dict[str, str]]:
    """Disjoint union; clashing names of ``g2`` get primes appended.

    Returns the union and the renaming applied to ``g2`` (empty when the
    vertex sets were already disjoint).
    """
    taken = set(g1.vertices) | set(g2.vertices)
    renamed = {}
    for v in g2.vertices:
        if v in g1:
            new = _fresh(v, taken)
            taken.add(new)
            renamed[v] = new
    h = g2.relabel(renamed) if renamed else g2
    union = MixedGraph(
        g1.vertices + h.vertices,
        g1.undirected | h.undirected,
        g1.directed | h.directed,
    )
    return union, renamed


def cone(g: MixedGraph, theta: Mapping[str, int], tip: str) -> tuple[MixedGraph, Signature]:
    """Adjoin a positive tip joined to every vertex of ``g``.

    The edge to ``v`` is directed ``tip -> v`` exactly when ``theta[v] == -1``.
    The returned signature extends ``theta`` with ``+1`` on the tip.
    """
    check_name(tip)
    if tip in g:
        raise NameClash(f"tip {tip!r} is already a vertex")
    if not is_valid_signature(g, theta):
        raise InvalidSignature(f"{dict(theta)!r} is not a signature of {g!r}")
    und = set(g.undirected)
    dirs = set(g.directed)
    for v in g.vertices:
        if theta[v] == -1:
            dirs.add((tip, v))
        else:
            und.add(_pair(tip, v))
    ext = dict(theta)
    ext[tip] = 1
    return MixedGraph(g.vertices + (tip,), frozenset(und), frozenset(dirs)), ext


def iterated_cone(g: MixedGraph, theta: Mapping[str, int], tips: Iterable[str]) -> MixedGraph:
    sig = dict(theta)
    for tip in tips:
        g, sig = cone(g, sig, tip)
    return g
