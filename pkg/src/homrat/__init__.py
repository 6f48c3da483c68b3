"""Rationality certificates for homogeneous spaces G/H of linear algebraic groups.

Root data (:mod:`homrat.rootsys`), Borel-de Siebenthal enumeration of
maximal-rank subgroups (:mod:`homrat.bds`) and a backtracking rule engine
producing checkable certificates (:mod:`homrat.certify`).
"""

from .bds import MaxRankSubgroup, enumerate_maximal_rank, extended_diagram, levi_moves, semisimple_moves
from .certify import (
    BorelContained,
    CertificateNode,
    General,
    GroupSpec,
    MaxRank,
    SpecError,
    Verdict,
    certify,
    compute_invariants,
    tha_proof_trace,
    validate_certificate,
)
from .grammar import parse_subgroup
from .rootsys import ParseError, SemisimpleType, SimpleType, generate_roots, group_invariants, parse_type

__version__ = "0.1.0"

__all__ = [
    "BorelContained", "CertificateNode", "General", "GroupSpec", "MaxRank", "MaxRankSubgroup",
    "ParseError", "SemisimpleType", "SimpleType", "SpecError", "Verdict",
    "certify", "compute_invariants", "enumerate_maximal_rank", "extended_diagram",
    "generate_roots", "group_invariants", "levi_moves", "parse_subgroup", "parse_type",
    "semisimple_moves", "tha_proof_trace", "validate_certificate",
]
