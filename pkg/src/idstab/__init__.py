"""Exact toolkit for the independent domination number and its vertex-removal stability.

Everything runs on immutable bitmask graphs of order at most 64: exact
branch-and-bound solvers with canonical witnesses, subset-enumeration
oracles to referee them, generators for the usual graph families, the join /
Cartesian / lexicographic / corona operations, a claim auditor with
counterexample certificates, and graph6 / edge-list codecs.
"""

from . import errors
from .auditor import (
    CLAIM_IDS,
    AuditReport,
    Claim,
    ClaimOutcome,
    ExhaustiveCorpus,
    FamilyCorpus,
    Graph6Corpus,
    PairCorpus,
    claim_registry,
    enumerate_labeled_graphs,
    evaluate_claim,
    get_claim,
    run_audit,
)
from .codec import decode_graph6, emit_edgelist, encode_graph6, parse_edgelist
from .core import (
    MAX_ORDER,
    DegreeProfile,
    Graph,
    SetClassification,
    VertexSet,
    build_graph,
    classify_set,
    closed_neighborhood,
    complement,
    components,
    degree_stats,
    delete_vertices,
    external_private_neighbors,
    open_neighborhood,
    private_neighbors,
)
from .families import FamilySpec, generate, parse_family_spec
from .ops import cartesian, corona, disjoint_union, join, lexicographic
from .solver import (
    GammaCertificate,
    alpha,
    alpha_value,
    enumerate_maximal_independent_sets,
    gamma,
    gamma_i,
    gamma_i_value,
    gamma_value,
    max_induced_star,
    oracle_gamma_i,
)
from .stability import (
    Direction,
    StabilityCertificate,
    StabilityTriple,
    oracle_stability,
    stability,
    stability_triple,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "CLAIM_IDS",
    "Claim",
    "ClaimOutcome",
    "DegreeProfile",
    "Direction",
    "ExhaustiveCorpus",
    "FamilyCorpus",
    "FamilySpec",
    "GammaCertificate",
    "Graph",
    "Graph6Corpus",
    "MAX_ORDER",
    "PairCorpus",
    "SetClassification",
    "StabilityCertificate",
    "StabilityTriple",
    "VertexSet",
    "alpha",
    "alpha_value",
    "build_graph",
    "cartesian",
    "claim_registry",
    "classify_set",
    "closed_neighborhood",
    "complement",
    "components",
    "corona",
    "decode_graph6",
    "degree_stats",
    "delete_vertices",
    "disjoint_union",
    "emit_edgelist",
    "encode_graph6",
    "enumerate_labeled_graphs",
    "enumerate_maximal_independent_sets",
    "errors",
    "evaluate_claim",
    "external_private_neighbors",
    "gamma",
    "gamma_i",
    "gamma_i_value",
    "gamma_value",
    "generate",
    "get_claim",
    "join",
    "lexicographic",
    "max_induced_star",
    "open_neighborhood",
    "oracle_gamma_i",
    "oracle_stability",
    "parse_edgelist",
    "parse_family_spec",
    "private_neighbors",
    "run_audit",
    "stability",
    "stability_triple",
]
