"""
Artin Retractions
Artin groups given by labeled Coxeter graphs: finite and FC type recognition,
dihedral Garside normal forms, ordinary retractions onto standard parabolic
subgroups, intersections of parabolic subgroups, coherence and bounded
search oracles
"""

__version__ = "1.0.0"

from .coherence import CoherenceReport, coherence_fc, coherence_general, droms_raag
from .coxeter_graph import (INFINITY, TWO, Convention, Label, LabeledGraph, irreducible_components,
                            is_chordal, is_odd_odd_free, odd_classes, restrict_le2, triangle_graph)
from .errors import ArtinError, ArtinValidationError, InconsistentResult, PreconditionError
from .finite_type import (CoxeterTypeName, classify_irreducible, cosine_matrix, is_fc_type,
                          is_spherical, maximal_finite_cliques, positive_definite)
from .formats import format_graph, parse_graph, parse_subset, parse_word, to_dot
from .logging_setup import configure_defaults
from .normal_forms import UNSUPPORTED, DihedralNF, dihedral_nf, words_equal
from .oracles import dihedral_ball, f2_system_search, triangle_234_search
from .parabolic import (ParabolicDescriptor, conj_generators, elementary_ribbon,
                        extended_retraction, intersect_rewrite, oc_sets, x_perp)
from .retractions import (RetractionEngine, admits_ordinary_all, admits_retractions_fc,
                          ordinary_map, trichotomy, verify_retraction, verify_word_map)
from .words import GeneratorMap, Letter, Word, apply_map, reduce_free

configure_defaults()

__all__ = [
    '__version__',
    'CoherenceReport', 'coherence_fc', 'coherence_general', 'droms_raag',
    'INFINITY', 'TWO', 'Convention', 'Label', 'LabeledGraph', 'irreducible_components',
    'is_chordal', 'is_odd_odd_free', 'odd_classes', 'restrict_le2', 'triangle_graph',
    'ArtinError', 'ArtinValidationError', 'InconsistentResult', 'PreconditionError',
    'CoxeterTypeName', 'classify_irreducible', 'cosine_matrix', 'is_fc_type',
    'is_spherical', 'maximal_finite_cliques', 'positive_definite',
    'format_graph', 'parse_graph', 'parse_subset', 'parse_word', 'to_dot',
    'UNSUPPORTED', 'DihedralNF', 'dihedral_nf', 'words_equal',
    'dihedral_ball', 'f2_system_search', 'triangle_234_search',
    'ParabolicDescriptor', 'conj_generators', 'elementary_ribbon',
    'extended_retraction', 'intersect_rewrite', 'oc_sets', 'x_perp',
    'RetractionEngine', 'admits_ordinary_all', 'admits_retractions_fc',
    'ordinary_map', 'trichotomy', 'verify_retraction', 'verify_word_map',
    'GeneratorMap', 'Letter', 'Word', 'apply_map', 'reduce_free',
]
