"""Structural theory of twisted right-angled Artin groups at the level of mixed graphs."""

from traag.classify import Certificate, is_chordal, is_coherent, is_complete_special, is_droms, is_special
from traag.decompose import complete_special_quotient, eligible_tips, maximal_abelian_normal
from traag.graph import MixedGraph, cone, disjoint_union, graph, induced_subgraph, validate
from traag.iso import canonical_form, find_isomorphism
from traag.rigidity import rigidity_verdict, satellites
from traag.words import equal, parse_word, presentation, reduce

__version__ = "0.1.0"
