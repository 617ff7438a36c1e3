"""Spectral edge-connectivity certificates for regular multigraphs."""

from .multigraph import (
    DegreeProfile,
    Multigraph,
    build,
    canonical_key,
    degree_profile,
    is_bipartite,
    is_connected,
    is_simple,
)
from .spectral import GraphSpectrum, lambda2, spectrum
from .cuts import CutResult, brute_force_min_cut, edge_connectivity
from .certify import Certificate, best_multigraph_bound, certify

__all__ = [
    "Certificate",
    "CutResult",
    "DegreeProfile",
    "GraphSpectrum",
    "Multigraph",
    "best_multigraph_bound",
    "brute_force_min_cut",
    "build",
    "canonical_key",
    "certify",
    "degree_profile",
    "edge_connectivity",
    "is_bipartite",
    "is_connected",
    "is_simple",
    "lambda2",
    "spectrum",
]
