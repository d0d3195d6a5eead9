"""Exhaustive small-graph corpus and brute-force oracles.

Labeled mixed graphs on ``n`` vertices are indexed by ``0 <= i < 4**C(n, 2)``:
the base-4 digits of ``i`` (most significant first) give the edge type of
each vertex pair in lexicographic order.  Each isomorphism class is
represented by its smallest labeled index, which keeps the corpus order
independent of how the index range is split across workers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb
from typing import Iterator

import numpy as np

from traag import classify, zoo
from traag.decompose import decompose
from traag.errors import BoundExceeded
from traag.graph import MixedGraph, induced_subgraph
from traag.iso import canonical_keys, decode, find_isomorphism
from traag.rigidity import rigidity_verdict, satellites

MAX_N = 5
NAMES = "abcde"
_CHUNK = 2048


def num_labeled(n: int) -> int:
    return 4 ** comb(n, 2)


def _check_bound(n: int) -> None:
    if not 1 <= n <= MAX_N:
        raise BoundExceeded(f"enumeration supports 1 <= n <= {MAX_N}, got {n}")


def labeled_digits(n: int, indices) -> np.ndarray:
    k = comb(n, 2)
    idx = np.asarray(indices, dtype=np.int64)
    shifts = 2 * np.arange(k - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] >> shifts) & 3


def labeled_graph(n: int, index: int) -> MixedGraph:
    return decode(labeled_digits(n, [index])[0], list(NAMES[:n]))


def classes_in_range(n: int, lo: int, hi: int) -> dict[int, int]:
    """Canonical key -> least labeled index, over labeled indices ``[lo, hi)``."""
    _check_bound(n)
    first: dict[int, int] = {}
    for start in range(lo, hi, _CHUNK):
        idx = np.arange(start, min(hi, start + _CHUNK), dtype=np.int64)
        keys = canonical_keys(labeled_digits(n, idx), n)
        uniq, pos = np.unique(keys, return_index=True)
        for key, p in zip(uniq.tolist(), pos.tolist()):
            if key not in first:
                first[key] = int(idx[p])
    return first


def _ranges(total: int, parts: int) -> list[tuple[int, int]]:
    step = -(-total // parts)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def iso_classes(n: int, jobs: int = 1, parts: int | None = None) -> list[tuple[int, int]]:
    """``(least labeled index, canonical key)`` per isomorphism class, sorted by index."""
    _check_bound(n)
    total = num_labeled(n)
    chunks = _ranges(total, parts or max(1, jobs))
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(classes_in_range, [n] * len(chunks), *zip(*chunks)))
    else:
        results = [classes_in_range(n, lo, hi) for lo, hi in chunks]
    merged: dict[int, int] = {}
    for part in results:
        for key, idx in part.items():
            if key not in merged or idx < merged[key]:
                merged[key] = idx
    return sorted((idx, key) for key, idx in merged.items())


# -- oracles ---------------------------------------------------------------------------


def _induced_matches(g: MixedGraph, pattern: MixedGraph, host: MixedGraph | None = None) -> bool:
    host = host or g
    for sub in itertools.combinations(host.vertices, len(pattern)):
        if find_isomorphism(induced_subgraph(host, sub), pattern) is not None:
            return True
    return False


def oracle_special(g: MixedGraph) -> bool:
    """No three-vertex induced subgraph is isomorphic to one of the seven obstructions."""
    for sub in itertools.combinations(g.vertices, 3):
        h = induced_subgraph(g, sub)
        if any(find_isomorphism(h, p) is not None for p in zoo.SPECIAL_OBSTRUCTIONS):
            return False
    return True


def oracle_chordal(g: MixedGraph) -> bool:
    """No vertex subset of size >= 4 induces a cycle in the underlying graph."""
    h = g.underlying()
    for k in range(4, len(h) + 1):
        for sub in itertools.combinations(h.vertices, k):
            s = induced_subgraph(h, sub)
            if s.num_edges == k and all(s.degree(v) == 2 for v in sub) and s.is_connected():
                return False
    return True


def oracle_droms(g: MixedGraph) -> bool:
    if not oracle_special(g):
        return False
    und = g.underlying()
    if _induced_matches(g, zoo.P4, und) or _induced_matches(g, zoo.C4, und):
        return False
    return not _induced_matches(g, zoo.LAMBDA_S)


# -- corpus ----------------------------------------------------------------------------


@dataclass(frozen=True)
class CorpusEntry:
    n: int
    index: int
    key: bytes
    graph: MixedGraph

    @cached_property
    def predicates(self) -> dict:
        g = self.graph
        special = bool(classify.is_special(g))
        verdict = rigidity_verdict(g)
        return {
            "special": special,
            "droms": bool(classify.is_droms(g)),
            "chordal": bool(classify.is_chordal(g)),
            "complete_special": classify.is_complete_special(g),
            "decomposes": not isinstance(decompose(g), classify.Certificate),
            "satellite_count": len(satellites(g)) if special else None,
            "verdict": verdict.value,
        }

    @cached_property
    def oracles(self) -> dict:
        g = self.graph
        return {
            "special": oracle_special(g),
            "droms": oracle_droms(g),
            "chordal": oracle_chordal(g),
        }

    def discrepancies(self) -> list[str]:
        p, o = self.predicates, self.oracles
        out = [k for k in ("special", "droms", "chordal") if p[k] != o[k]]
        if p["decomposes"] != o["droms"]:
            out.append("decomposes")
        return out


def enumerate_graphs(n: int, jobs: int = 1) -> Iterator[CorpusEntry]:
    """One entry per isomorphism class of mixed graphs on ``n`` vertices."""
    names = list(NAMES[:n])
    for idx, key in iso_classes(n, jobs=jobs):
        g = decode(labeled_digits(n, [idx])[0], names)
        yield CorpusEntry(n, idx, f"{n}:{key:x}".encode(), g)


@lru_cache(maxsize=None)
def corpus(max_n: int = 4) -> tuple[CorpusEntry, ...]:
    """All classes with ``1 <= n <= max_n`` vertices."""
    return tuple(e for n in range(1, max_n + 1) for e in enumerate_graphs(n))
