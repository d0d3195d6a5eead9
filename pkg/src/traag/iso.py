"""Mixed-graph isomorphism: witness search and brute-force canonical keys.

Graphs on ``n`` vertices are encoded as one base-4 digit per vertex pair
``i < j`` (lexicographic pair order): 0 no edge, 1 undirected, 2 ``i -> j``,
3 ``j -> i``.  The canonical key is the least integer encoding over all
``n!`` vertex orderings, evaluated with numpy over all permutations at once.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Mapping

import numpy as np

from traag.errors import TooLarge
from traag.graph import IN, OUT, UNDIRECTED, MixedGraph

DEFAULT_MAX_N = 8

_CODE = {None: 0, UNDIRECTED: 1, OUT: 2, IN: 3}
_FLIP = np.array([0, 1, 3, 2], dtype=np.int64)


def pair_index(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def encode(g: MixedGraph, order=None) -> list[int]:
    """Pair digits of ``g`` with vertices taken in ``order`` (default: sorted)."""
    vs = list(order) if order is not None else list(g.vertices)
    return [_CODE[g.kind(vs[i], vs[j])] for i, j in pair_index(len(vs))]


def decode(digits, names) -> MixedGraph:
    und, dirs = [], []
    for (i, j), d in zip(pair_index(len(names)), digits):
        if d == 1:
            und.append((names[i], names[j]))
        elif d == 2:
            dirs.append((names[i], names[j]))
        elif d == 3:
            dirs.append((names[j], names[i]))
    return MixedGraph(tuple(names), frozenset(und), frozenset(dirs))


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    """For every permutation: source pair column and flip flag of each target pair."""
    pairs = pair_index(n)
    where = {p: k for k, p in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    src = np.empty((len(perms), len(pairs)), dtype=np.int64)
    flip = np.empty((len(perms), len(pairs)), dtype=bool)
    for r, p in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = p[i], p[j]
            src[r, k] = where[(min(a, b), max(a, b))]
            flip[r, k] = a > b
    powers = 4 ** np.arange(len(pairs) - 1, -1, -1, dtype=np.int64)
    return src, flip, powers


def canonical_keys(digits: np.ndarray, n: int) -> np.ndarray:
    """Canonical integer key for each row of a ``(m, n(n-1)/2)`` digit array."""
    digits = np.asarray(digits, dtype=np.int64)
    if n < 2:
        return np.zeros(len(digits), dtype=np.int64)
    src, flip, powers = _perm_tables(n)
    best = None
    # chunk over permutations to bound memory for n = 8
    step = max(1, 2_000_000 // max(1, len(digits) * len(powers)))
    for lo in range(0, len(src), step):
        moved = digits[:, src[lo:lo + step]]  # (m, p, K)
        moved = np.where(flip[lo:lo + step], _FLIP[moved], moved)
        keys = (moved * powers).sum(axis=2).min(axis=1)
        best = keys if best is None else np.minimum(best, keys)
    return best


def canonical_form(g: MixedGraph, max_n: int = DEFAULT_MAX_N) -> bytes:
    """Isomorphism-invariant byte key: equal keys iff the graphs are isomorphic."""
    n = len(g)
    if n > max_n:
        raise TooLarge(f"canonical_form is limited to {max_n} vertices, got {n}")
    key = canonical_keys(np.array([encode(g)]), n)[0] if n >= 2 else 0
    return f"{n}:{int(key):x}".encode()


def find_isomorphism(g1: MixedGraph, g2: MixedGraph) -> dict[str, str] | None:
    """Lexicographically least isomorphism ``g1 -> g2`` preserving orientation, or None."""
    if len(g1) != len(g2) or len(g1.undirected) != len(g2.undirected) or len(g1.directed) != len(g2.directed):
        return None
    prof1 = {v: g1.profile(v) for v in g1.vertices}
    prof2 = {v: g2.profile(v) for v in g2.vertices}
    if sorted(prof1.values()) != sorted(prof2.values()):
        return None
    order = list(g1.vertices)
    mapping: dict[str, str] = {}
    used: set[str] = set()

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        v = order[k]
        for c in g2.vertices:
            if c in used or prof2[c] != prof1[v]:
                continue
            if all(g1.kind(v, u) == g2.kind(c, mapping[u]) for u in order[:k]):
                mapping[v] = c
                used.add(c)
                if extend(k + 1):
                    return True
                del mapping[v]
                used.discard(c)
        return False

    return dict(mapping) if extend(0) else None


def is_isomorphism(g1: MixedGraph, g2: MixedGraph, mapping: Mapping[str, str]) -> bool:
    if sorted(mapping) != list(g1.vertices) or sorted(mapping.values()) != list(g2.vertices):
        return False
    return g1.relabel(mapping) == g2
