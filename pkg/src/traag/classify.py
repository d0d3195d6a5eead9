"""Graph predicates with checkable certificates.

Every predicate returns ``True`` on success and a :class:`Certificate` on
failure.  Certificates are falsy, so ``if is_droms(g):`` reads naturally while
the failing value still carries its witness.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Literal

from traag import zoo
from traag.graph import IN, MixedGraph, induced_subgraph, negative_vertices, sinkholes
from traag.iso import find_isomorphism

NON_SPECIAL_VERTEX = "NonSpecialVertex"
FORBIDDEN_P4 = "ForbiddenP4"
FORBIDDEN_C4 = "ForbiddenC4"
FORBIDDEN_LAMBDA_S = "ForbiddenLambdaS"
INDUCED_CYCLE = "InducedCycle"

KINDS = (NON_SPECIAL_VERTEX, FORBIDDEN_P4, FORBIDDEN_C4, FORBIDDEN_LAMBDA_S, INDUCED_CYCLE)


@dataclass(frozen=True)
class Certificate:
    """Witness of a failed predicate.

    ``witness`` lists graph vertices in pattern order: for ``NonSpecialVertex``
    the negative vertex followed by the endpoint of an edge not pointing at it;
    for ``ForbiddenP4``/``ForbiddenC4``/``ForbiddenLambdaS`` the images of the
    pattern vertices ``a, b, c, d`` / ``a1, b, a2``; for ``InducedCycle`` the
    cycle in traversal order.
    """

    kind: str
    witness: tuple[str, ...]

    def __bool__(self) -> bool:
        return False

    def to_json(self) -> dict:
        return {"kind": self.kind, "witness": list(self.witness)}


Result = Literal[True] | Certificate


# -- induced pattern search ----------------------------------------------------


def contains_induced(g: MixedGraph, pattern: MixedGraph, underlying: bool | None = None) -> dict[str, str] | None:
    """First induced embedding ``pattern vertex -> g vertex``, or None.

    Simplicial patterns (P4, C4) are matched against the underlying graph of
    ``g`` unless ``underlying`` says otherwise; patterns carrying directions are
    matched against ``g`` itself.
    """
    if underlying is None:
        underlying = pattern.is_simplicial()
    host = g.underlying() if underlying else g
    order = list(pattern.vertices)
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        p = order[k]
        for c in host.vertices:
            if c in used:
                continue
            if all(pattern.kind(p, q) == host.kind(c, mapping[q]) for q in order[:k]):
                mapping[p] = c
                used.add(c)
                if extend(k + 1):
                    return True
                del mapping[p]
                used.discard(c)
        return False

    if len(order) > len(host):
        return None
    return dict(mapping) if extend(0) else None


_PATTERN_ORDER = {
    FORBIDDEN_P4: (zoo.P4, ("a", "b", "c", "d")),
    FORBIDDEN_C4: (zoo.C4, ("a", "b", "c", "d")),
    FORBIDDEN_LAMBDA_S: (zoo.LAMBDA_S, ("a1", "b", "a2")),
}


def _pattern_certificate(g: MixedGraph, kind: str) -> Certificate | None:
    pattern, order = _PATTERN_ORDER[kind]
    emb = contains_induced(g, pattern)
    if emb is None:
        return None
    return Certificate(kind, tuple(emb[p] for p in order))


# -- predicates ------------------------------------------------------------------


def is_special(g: MixedGraph) -> Result:
    """Every negative vertex is a sinkhole."""
    for v in sorted(negative_vertices(g)):
        for u in g.neighbors(v):
            if g.kind(v, u) != IN:
                return Certificate(NON_SPECIAL_VERTEX, (v, u))
    return True


def is_droms(g: MixedGraph) -> Result:
    """Special, underlying graph free of induced P4 and C4, and no induced Lambda_s."""
    special = is_special(g)
    if not special:
        return special
    for kind in (FORBIDDEN_P4, FORBIDDEN_C4, FORBIDDEN_LAMBDA_S):
        cert = _pattern_certificate(g, kind)
        if cert is not None:
            return cert
    return True


is_elementary = is_droms


def lex_bfs(g: MixedGraph) -> list[str]:
    """Lexicographic breadth-first order of the underlying graph (partition refinement)."""
    parts = [list(g.vertices)] if len(g) else []
    order = []
    while parts:
        v = parts[0].pop(0)
        if not parts[0]:
            parts.pop(0)
        order.append(v)
        nbrs = set(g.neighbors(v))
        refined = []
        for part in parts:
            inside = [x for x in part if x in nbrs]
            outside = [x for x in part if x not in nbrs]
            refined.extend(p for p in (inside, outside) if p)
        parts = refined
    return order


def _shortest_path(g: MixedGraph, src: str, dst: str, banned: set[str]) -> list[str] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in g.neighbors(x):
            if y not in prev and y not in banned:
                prev[y] = x
                queue.append(y)
    return None


def _brute_induced_cycle(g: MixedGraph) -> tuple[str, ...] | None:
    for k in range(4, len(g) + 1):
        for sub in itertools.combinations(g.vertices, k):
            h = induced_subgraph(g, sub)
            if h.num_edges == k and all(h.degree(v) == 2 for v in sub) and h.is_connected():
                cyc, prev = [sub[0]], None
                while len(cyc) < k:
                    nxt = next(x for x in h.neighbors(cyc[-1]) if x != prev)
                    prev = cyc[-1]
                    cyc.append(nxt)
                return tuple(cyc)
    return None


def is_chordal(g: MixedGraph) -> Result:
    """Chordality of the underlying graph via a LexBFS perfect elimination ordering.

    On failure the certificate is an induced cycle of length at least four.
    """
    h = g.underlying()
    order = lex_bfs(h)[::-1]  # candidate perfect elimination ordering
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in h.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        parent = min(later, key=pos.__getitem__)
        for x in later:
            if x != parent and not h.adjacent(parent, x):
                banned = (set(h.neighbors(v)) | {v}) - {parent, x}
                path = _shortest_path(h, parent, x, banned)
                if path is not None:
                    return Certificate(INDUCED_CYCLE, (v, *path))
                cyc = _brute_induced_cycle(h)
                assert cyc is not None, "LexBFS rejected a chordal graph"
                return Certificate(INDUCED_CYCLE, cyc)
    return True


is_coherent = is_chordal


def is_complete_special(g: MixedGraph) -> bool:
    n = len(g)
    if g.num_edges != n * (n - 1) // 2:
        return False
    neg = negative_vertices(g)
    return len(neg) <= 1 and neg <= sinkholes(g)


# -- certificate re-checking -------------------------------------------------------


def verify_certificate(g: MixedGraph, cert: Certificate) -> bool:
    """Re-check a certificate against ``g`` from scratch."""
    w = cert.witness
    if any(v not in g for v in w) or len(set(w)) != len(w):
        return False
    if cert.kind == NON_SPECIAL_VERTEX:
        v, u = w
        return v in negative_vertices(g) and g.kind(v, u) not in (None, IN)
    if cert.kind in _PATTERN_ORDER:
        pattern, order = _PATTERN_ORDER[cert.kind]
        if len(w) != len(order):
            return False
        host = g.underlying() if pattern.is_simplicial() else g
        mapping = dict(zip(order, w))
        return all(pattern.kind(p, q) == host.kind(mapping[p], mapping[q]) for p, q in itertools.combinations(order, 2))
    if cert.kind == INDUCED_CYCLE:
        k = len(w)
        if k < 4:
            return False
        h = g.underlying()
        for i, j in itertools.combinations(range(k), 2):
            consecutive = j - i == 1 or (i == 0 and j == k - 1)
            if h.adjacent(w[i], w[j]) != consecutive:
                return False
        return True
    return False


def matches_pattern(g: MixedGraph, pattern: MixedGraph) -> bool:
    return find_isomorphism(g, pattern) is not None
