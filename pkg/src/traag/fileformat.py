"""Line-oriented graph files.

::

    # Klein bottle group
    vertex a
    vertex b
    arrow a b

``edge x y`` declares an undirected edge, ``arrow x y`` the directed edge from
``x`` to ``y`` (relation ``xyx = y``).  Edges may introduce vertices
implicitly; declaring the same vertex or the same vertex pair twice is an
error.
"""

from __future__ import annotations

import re

from traag.errors import ConflictingEdge, DuplicateVertex, GraphSyntaxError
from traag.graph import MixedGraph, validate

_NAME = re.compile(r"[A-Za-z0-9_']+\Z")
_ARITY = {"vertex": 1, "edge": 2, "arrow": 2}


def _tokens(line: str):
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_graph_file(text: str) -> MixedGraph:
    vertices: list[str] = []
    declared: set[str] = set()
    known: set[str] = set()
    und, dirs = [], []
    pairs: dict[frozenset, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        toks = _tokens(line)
        if not toks or toks[0][0].startswith("#"):
            continue
        (kw, col), args = toks[0], toks[1:]
        if kw not in _ARITY:
            raise GraphSyntaxError(f"unknown declaration {kw!r}", lineno, col)
        if len(args) != _ARITY[kw]:
            where = args[_ARITY[kw]][1] if len(args) > _ARITY[kw] else len(line.rstrip()) + 1
            raise GraphSyntaxError(f"{kw!r} takes {_ARITY[kw]} name(s), got {len(args)}", lineno, where)
        for name, c in args:
            if not _NAME.match(name):
                raise GraphSyntaxError(f"invalid vertex name {name!r}", lineno, c)
        names = [a for a, _ in args]
        if kw == "vertex":
            (v,) = names
            if v in declared:
                raise DuplicateVertex(f"line {lineno}: vertex {v!r} declared twice")
            declared.add(v)
            if v not in known:
                known.add(v)
                vertices.append(v)
            continue
        a, b = names
        if a == b:
            raise GraphSyntaxError(f"self-loop at {a!r}", lineno, args[1][1])
        pair = frozenset(names)
        if pair in pairs:
            raise ConflictingEdge(f"line {lineno}: pair {{{a}, {b}}} already declared on line {pairs[pair]}")
        pairs[pair] = lineno
        for v in names:
            if v not in known:
                known.add(v)
                vertices.append(v)
        (dirs if kw == "arrow" else und).append((a, b))
    return validate(vertices, und, dirs)


def serialize(g: MixedGraph) -> str:
    lines = [f"vertex {v}" for v in g.vertices]
    for a, b, directed in g.edges():
        lines.append(f"{'arrow' if directed else 'edge'} {a} {b}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> MixedGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_file(fh.read())
