"""Freeness of signed-graphic hyperplane arrangements.

A signed graph on vertices ``1..n`` determines the arrangement of all
coordinate hyperplanes together with ``x_i - x_j = 0`` for each positive
edge and ``x_i + x_j = 0`` for each negative edge.  :func:`decide_freeness`
returns a verdict with a checkable certificate or witness.
"""

from .arrangement import char_poly, char_poly_finite_field, char_poly_lattice
from .certificates import format_certificate, parse_certificate
from .cycles import ConditionWitness, SignedCycle
from .freeness import (
    FreenessVerdict,
    check_conditions,
    complete_case_analysis,
    decide_freeness,
    divisional_search,
    m_class_certificate,
    verify_certificate,
)
from .graph import (
    OBSTRUCTION_GRAPH,
    SignedGraph,
    build_signed_graph,
    complete_signed_graph,
    parse_graph_text,
    switch,
    tilde_of,
)

__version__ = "0.1.0"

__all__ = [
    "OBSTRUCTION_GRAPH",
    "ConditionWitness",
    "FreenessVerdict",
    "SignedCycle",
    "SignedGraph",
    "build_signed_graph",
    "char_poly",
    "char_poly_finite_field",
    "char_poly_lattice",
    "check_conditions",
    "complete_case_analysis",
    "complete_signed_graph",
    "decide_freeness",
    "divisional_search",
    "format_certificate",
    "m_class_certificate",
    "parse_certificate",
    "parse_graph_text",
    "switch",
    "tilde_of",
    "verify_certificate",
]
