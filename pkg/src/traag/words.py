"""Words, presentations and the word problem for elementary T-RAAGs.

A word is a tuple of ``(vertex, exponent)`` letters.  Normal forms are built
recursively over a :class:`~traag.decompose.DecompositionTree`:

* a leaf ``v`` carries an integer exponent (``v^n``);
* a free product carries a list of syllables ``(child index, child normal form)``
  with no identity syllable and no two adjacent syllables in the same factor;
* a cone with tip ``w`` over ``B`` carries ``(n, g)`` for the element ``w^n g``.
  Since ``x^-1 w x = w^theta(x)`` for ``x`` in the base, multiplying
  ``w^n g`` on the right by ``w^k`` gives ``w^(n + k theta(g)) g``.

Reducing a word is a left fold of this right multiplication.  The word problem
is offered for Droms graphs only: those are exactly the graphs with a tree.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Union

from traag.decompose import (
    AbelianNormalData,
    Cone,
    DecompositionTree,
    FreeProduct,
    Leaf,
    droms_tree,
    tree_vertices,
)
from traag.errors import LetterOutsideTree, UnknownVertex
from traag.graph import MixedGraph, NAME_RE, origins

Word = tuple  # tuple[tuple[str, int], ...]

_TOKEN = re.compile(rf"({NAME_RE.pattern})(?:\^(-?\d+))?")


# -- plain word manipulation -----------------------------------------------------


def parse_word(text: str) -> Word:
    """Parse ``"a b^-2 a'"``; the empty string and ``"1"`` denote the identity."""
    letters = []
    for tok in text.split():
        if tok == "1":
            continue
        m = _TOKEN.fullmatch(tok)
        if not m:
            raise ValueError(f"bad letter {tok!r}")
        exp = int(m.group(2)) if m.group(2) is not None else 1
        if exp == 0:
            raise ValueError(f"zero exponent in {tok!r}")
        letters.append((m.group(1), exp))
    return tuple(letters)


def format_word(w: Word) -> str:
    if not w:
        return "1"
    return " ".join(v if e == 1 else f"{v}^{e}" for v, e in w)


def free_reduce(w: Iterable) -> Word:
    out: list[list] = []
    for v, e in w:
        if out and out[-1][0] == v:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        elif e:
            out.append([v, e])
    return tuple((v, e) for v, e in out)


def inverse(w: Word) -> Word:
    return tuple((v, -e) for v, e in reversed(w))


def substitute(w: Word, images: Mapping[str, Word]) -> Word:
    out = []
    for v, e in w:
        img = images[v]
        block = img if e > 0 else inverse(img)
        for _ in range(abs(e)):
            out.extend(block)
    return free_reduce(out)


# -- presentations -----------------------------------------------------------------


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __str__(self) -> str:
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {', '.join(self.generators)} | {rels} >"


def relator(a: str, b: str, directed: bool) -> Word:
    """``a b a^-1 b^-1`` for a commutation, ``a b a b^-1`` for the Klein relation ``aba = b``."""
    return ((a, 1), (b, 1), (a, 1 if directed else -1), (b, -1))


def presentation(g: MixedGraph) -> Presentation:
    return Presentation(g.vertices, tuple(relator(a, b, d) for a, b, d in g.edges()))


def abelianization(g: MixedGraph) -> tuple[int, int]:
    """``(r, s)`` with ``T(g)^ab = Z^r x (Z/2)^s``; ``s`` counts origins of directed edges."""
    s = len(origins(g))
    return len(g) - s, s


def signature_of_word(theta: Mapping[str, int], w: Word) -> int:
    sign = 1
    for v, e in w:
        if v not in theta:
            raise UnknownVertex(f"{v!r} is not in the signature's domain")
        if e % 2:
            sign *= theta[v]
    return sign


# -- normal forms --------------------------------------------------------------------


@dataclass(frozen=True)
class LeafNF:
    exp: int = 0


@dataclass(frozen=True)
class FreeNF:
    syllables: tuple = ()


@dataclass(frozen=True)
class ConeNF:
    tip_exp: int
    base: "NormalForm"


NormalForm = Union[LeafNF, FreeNF, ConeNF]


@lru_cache(maxsize=None)
def identity(node: DecompositionTree) -> NormalForm:
    if isinstance(node, Leaf):
        return LeafNF(0)
    if isinstance(node, Cone):
        return ConeNF(0, identity(node.base))
    return FreeNF(())


@lru_cache(maxsize=None)
def _owner(node: FreeProduct) -> dict[str, int]:
    return {v: i for i, child in enumerate(node.children) for v in tree_vertices(child)}


@lru_cache(maxsize=None)
def _vertex_set(tree: DecompositionTree) -> frozenset:
    return frozenset(tree_vertices(tree))


def nf_sign(node: DecompositionTree, nf: NormalForm) -> int:
    """Image of the element under the signature recorded by the tree (tips positive)."""
    if isinstance(node, Leaf):
        return node.sign if nf.exp % 2 else 1
    if isinstance(node, Cone):
        return nf_sign(node.base, nf.base)
    sign = 1
    for i, sub in nf.syllables:
        sign *= nf_sign(node.children[i], sub)
    return sign


def _push(node: DecompositionTree, nf: NormalForm, v: str, k: int) -> NormalForm:
    """Right-multiply the element ``nf`` by ``v^k``."""
    if isinstance(node, Leaf):
        return LeafNF(nf.exp + k)
    if isinstance(node, Cone):
        if v == node.tip:
            return ConeNF(nf.tip_exp + k * nf_sign(node.base, nf.base), nf.base)
        return ConeNF(nf.tip_exp, _push(node.base, nf.base, v, k))
    i = _owner(node)[v]
    child = node.children[i]
    sylls = nf.syllables
    if sylls and sylls[-1][0] == i:
        merged = _push(child, sylls[-1][1], v, k)
        if merged == identity(child):
            return FreeNF(sylls[:-1])
        return FreeNF(sylls[:-1] + ((i, merged),))
    return FreeNF(sylls + ((i, _push(child, identity(child), v, k)),))


def reduce(tree: DecompositionTree, w: Word) -> NormalForm:
    """Normal form of the element spelled by ``w``."""
    verts = _vertex_set(tree)
    for v, _ in w:
        if v not in verts:
            raise LetterOutsideTree(f"letter {v!r} is not a vertex of the decomposition")
    nf = identity(tree)
    for v, e in w:
        if e:
            nf = _push(tree, nf, v, e)
    return nf


def to_word(tree: DecompositionTree, nf: NormalForm) -> Word:
    """Linearise a normal form back to a word, tips first."""
    if isinstance(tree, Leaf):
        return ((tree.vertex, nf.exp),) if nf.exp else ()
    if isinstance(tree, Cone):
        head = ((tree.tip, nf.tip_exp),) if nf.tip_exp else ()
        return head + to_word(tree.base, nf.base)
    out: tuple = ()
    for i, sub in nf.syllables:
        out += to_word(tree.children[i], sub)
    return out


def normal_word(tree: DecompositionTree, w: Word) -> Word:
    return to_word(tree, reduce(tree, w))


def is_identity(tree: DecompositionTree, w: Word) -> bool:
    return reduce(tree, w) == identity(tree)


def equal(tree: DecompositionTree, w1: Word, w2: Word) -> bool:
    return reduce(tree, w1) == reduce(tree, w2)


def nf_to_json(nf: NormalForm):
    if isinstance(nf, LeafNF):
        return nf.exp
    if isinstance(nf, ConeNF):
        return {"tip_exp": nf.tip_exp, "base": nf_to_json(nf.base)}
    return [[i, nf_to_json(sub)] for i, sub in nf.syllables]


# -- homomorphisms -------------------------------------------------------------------


@dataclass(frozen=True)
class FailingRelator:
    """A relator of the source whose image is not trivial.  Falsy, like certificates."""

    relator: Word
    image: Word

    def __bool__(self) -> bool:
        return False


def _as_tree(dst) -> DecompositionTree:
    if isinstance(dst, MixedGraph):
        return droms_tree(dst)
    return dst


def check_hom(src: MixedGraph, dst, images: Mapping[str, Word]) -> Union[bool, FailingRelator]:
    """Check that ``images`` defines a homomorphism ``T(src) -> T(dst)``.

    ``dst`` is a decomposition tree or a Droms graph (NotDroms otherwise).
    Returns True or the first relator whose image is not the identity.
    """
    tree = _as_tree(dst)
    missing = [v for v in src.vertices if v not in images]
    if missing:
        raise ValueError(f"no image for {missing}")
    for rel in presentation(src).relators:
        img = substitute(rel, images)
        nf = reduce(tree, img)
        if nf != identity(tree):
            return FailingRelator(rel, to_word(tree, nf))
    return True


def doubling_maps(g: MixedGraph, u: str | None = None) -> tuple[MixedGraph, dict[str, Word]]:
    """Source graph and generator images of the squaring embeddings into ``T(g)``.

    With ``u``: directed edges into ``u`` become undirected and ``u -> u^2``.
    Without: the underlying simplicial graph and ``v -> v^2`` for every vertex.
    """
    if u is None:
        return g.underlying(), {v: ((v, 2),) for v in g.vertices}
    if u not in g:
        raise UnknownVertex(f"{u!r} is not a vertex")
    und = set(g.undirected)
    dirs = set()
    for a, b in g.directed:
        if b == u:
            und.add((min(a, b), max(a, b)))
        else:
            dirs.add((a, b))
    src = MixedGraph(g.vertices, frozenset(und), frozenset(dirs))
    images = {v: ((v, 1),) for v in g.vertices}
    images[u] = ((u, 2),)
    return src, images


# -- abelian normal subgroup checks ---------------------------------------------------


def in_abelian_span(tree: DecompositionTree, w: Word, generators: Iterable[Word]) -> bool:
    """Membership of ``w`` in the abelian subgroup spanned by single-letter powers.

    Elements of that span have normal forms made of a chain of cone tips
    (and possibly a bottom leaf); the exponents read off the chain give the
    candidate coefficients, which are then confirmed by the word problem.
    """
    gens = list(generators)
    step = {}
    for gen in gens:
        if len(gen) != 1:
            raise ValueError("generators must be powers of single vertices")
        step[gen[0][0]] = gen[0][1]
    nf = reduce(tree, w)
    node, exps = tree, {}
    while isinstance(node, Cone):
        if nf.tip_exp:
            exps[node.tip] = nf.tip_exp
        node, nf = node.base, nf.base
    if isinstance(node, Leaf):
        if nf.exp:
            exps[node.vertex] = nf.exp
    elif nf != identity(node):
        return False
    candidate = []
    for v, e in exps.items():
        if v not in step or e % step[v]:
            return False
        candidate.append((v, e))
    return equal(tree, w, tuple(candidate))


def verify_abelian_normal(g: MixedGraph, data: AbelianNormalData) -> bool:
    """Generators commute pairwise and their conjugates by every vertex stay in the span."""
    tree = droms_tree(g)
    gens = list(data.generators)
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            if not equal(tree, a + b, b + a):
                return False
    for n in gens:
        for v in g.vertices:
            for e in (1, -1):
                conj = (((v, -e),) + n + ((v, e),))
                if not in_abelian_span(tree, conj, gens):
                    return False
    return True
