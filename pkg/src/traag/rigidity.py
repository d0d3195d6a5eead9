"""Satellites, rigidity verdicts and machine-checked non-rigidity witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from traag.classify import is_droms, is_special
from traag.decompose import decompose
from traag.errors import NotASatellite, NotSpecial
from traag.graph import MixedGraph, fresh_name, sinkholes
from traag.iso import find_isomorphism
from traag.words import Word, check_hom, equal, substitute

SIMPLICIAL_DROMS = "SimplicialDroms"
UNIVERSAL_SINKHOLE = "UniversalSinkhole"
DROMS_NO_SATELLITE = "DromsNoSatellite"

RIGID = "Rigid"
NOT_RIGID = "NotRigid"
UNKNOWN = "Unknown"

CONJECTURE_NOTE = "special graphs without satellites are conjectured rigid; no theorem decides this case"
NON_SPECIAL_NOTE = "graph is not special; no rigidity criterion applies"


@dataclass(frozen=True)
class SatellitePair:
    sinkhole: str
    satellite: str


def satellites(g: MixedGraph) -> list[SatellitePair]:
    """Pairs ``(w, v)``: ``w`` a sinkhole, ``v`` non-adjacent to it, sharing a neighbour,
    and every neighbour of ``v`` is a neighbour of ``w``."""
    if not is_special(g):
        raise NotSpecial(f"{g!r} is not special")
    out = []
    for w in sorted(sinkholes(g)):
        nw = set(g.neighbors(w))
        for v in g.vertices:
            if v == w or g.adjacent(v, w):
                continue
            nv = set(g.neighbors(v))
            if nv and nv <= nw:
                out.append(SatellitePair(w, v))
    return out


@dataclass
class Witness:
    """A graph with an isomorphic T-RAAG, plus mutually inverse generator maps."""

    g: MixedGraph
    g_prime: MixedGraph
    fwd: dict[str, Word]
    bwd: dict[str, Word]
    verified: bool = False
    exponents: tuple[int, int] = (-1, 1)
    notes: list[str] = field(default_factory=list)


def _transform(g: MixedGraph, pair: SatellitePair) -> tuple[MixedGraph, str]:
    v = pair.satellite
    v2 = fresh_name(v, g.vertices)
    nbrs = g.neighbors(v)
    positive = v not in sinkholes(g)
    und = {e for e in g.undirected if v not in e}
    dirs = {e for e in g.directed if v not in e}
    for u in nbrs:
        if positive:
            dirs.add((u, v2))
        else:
            und.add((min(u, v2), max(u, v2)))
    verts = tuple(x for x in g.vertices if x != v) + (v2,)
    return MixedGraph(verts, frozenset(und), frozenset(dirs)), v2


def _maps(g, g2, pair, v2, a, b):
    w, v = pair.sinkhole, pair.satellite
    fwd = {x: ((x, 1),) for x in g.vertices}
    fwd[v] = ((v2, 1), (w, a))
    bwd = {x: ((x, 1),) for x in g2.vertices}
    bwd[v2] = ((v, 1), (w, b))
    return fwd, bwd


def verify_witness(wit: Witness) -> bool:
    """Both maps are homomorphisms and both composites fix every generator.

    Needs both graphs to be Droms; returns False otherwise.
    """
    t1, t2 = decompose(wit.g), decompose(wit.g_prime)
    if not is_droms(wit.g) or not is_droms(wit.g_prime):
        return False
    if not check_hom(wit.g, t2, wit.fwd) or not check_hom(wit.g_prime, t1, wit.bwd):
        return False
    for x in wit.g.vertices:
        if not equal(t1, substitute(wit.fwd[x], wit.bwd), ((x, 1),)):
            return False
    for y in wit.g_prime.vertices:
        if not equal(t2, substitute(wit.bwd[y], wit.fwd), ((y, 1),)):
            return False
    return True


def non_rigid_witness(g: MixedGraph, pair: SatellitePair) -> Witness:
    """Turn the satellite into (or out of) a sinkhole and build the generator maps.

    ``v -> v' w^-1`` and ``v' -> v w``; all other generators are fixed.  When
    both graphs are Droms the maps are checked by the word engine; if the
    default exponents fail, the other sign choices are tried.
    """
    if not is_special(g):
        raise NotSpecial(f"{g!r} is not special")
    if pair not in satellites(g):
        raise NotASatellite(f"{pair.satellite!r} is not a satellite of {pair.sinkhole!r}")
    g2, v2 = _transform(g, pair)
    fwd, bwd = _maps(g, g2, pair, v2, -1, 1)
    wit = Witness(g, g2, fwd, bwd)
    if find_isomorphism(g, g2) is not None:
        wit.notes.append("transformed graph is isomorphic to the input")
        return wit
    if not (is_droms(g) and is_droms(g2)):
        wit.notes.append("word problem unavailable (not Droms); maps not machine-checked")
        return wit
    for a, b in ((-1, 1), (1, -1), (1, 1), (-1, -1)):
        fwd, bwd = _maps(g, g2, pair, v2, a, b)
        trial = Witness(g, g2, fwd, bwd, exponents=(a, b))
        if verify_witness(trial):
            trial.verified = True
            if (a, b) != (-1, 1):
                trial.notes.append(f"default exponents failed; verified with {(a, b)}")
            return trial
    wit.notes.append("no exponent choice verified")
    return wit


@dataclass
class RigidityVerdict:
    value: str
    reason: str | None = None
    witness: Witness | None = None
    note: str | None = None


def rigidity_verdict(g: MixedGraph) -> RigidityVerdict:
    """Three-valued rigidity decision.

    In order: simplicial graphs are rigid; special graphs with a sinkhole
    joined to every other vertex are rigid; special graphs with a satellite
    are not rigid; Droms graphs without satellites are rigid; anything else
    is unknown.
    """
    if g.is_simplicial():
        return RigidityVerdict(RIGID, SIMPLICIAL_DROMS)
    if not is_special(g):
        return RigidityVerdict(UNKNOWN, note=NON_SPECIAL_NOTE)
    if any(g.degree(w) == len(g) - 1 for w in sinkholes(g)):
        return RigidityVerdict(RIGID, UNIVERSAL_SINKHOLE)
    sats = satellites(g)
    if sats:
        return RigidityVerdict(NOT_RIGID, witness=non_rigid_witness(g, sats[0]))
    if is_droms(g):
        return RigidityVerdict(RIGID, DROMS_NO_SATELLITE)
    return RigidityVerdict(UNKNOWN, note=CONJECTURE_NOTE)
