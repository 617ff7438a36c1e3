"""Edge connectivity of multigraphs and brute-force connectivity oracles."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import _kernels
from .errors import DisconnectedError, NotSimpleError, TooLargeError, TooSmallError
from .multigraph import Multigraph, is_connected, is_simple
from .partition import CutWitness, cut_witness

BRUTE_FORCE_MAX_N = 16
VERTEX_CONNECTIVITY_MAX_N = 10


@dataclass(frozen=True)
class CutResult:
    value: int
    witness: CutWitness


def _require_cuttable(g: Multigraph) -> None:
    if g.n < 2:
        raise TooSmallError("a cut needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedError("graph is disconnected; edge connectivity is 0")


def _oriented(g: Multigraph, side) -> CutWitness:
    # witnesses keep a <= b; on a tie the side holding vertex 0 is reported
    inside = set(int(v) for v in side)
    other = [v for v in range(g.n) if v not in inside]
    if len(inside) > len(other) or (len(inside) == len(other) and 0 not in inside):
        return cut_witness(g, other)
    return cut_witness(g, inside)


def edge_connectivity(g: Multigraph) -> CutResult:
    """Global minimum cut with multiplicities as integer weights (Stoer-Wagner).

    Ties in the maximum-adjacency order go to the smallest vertex index, so
    the returned witness is deterministic.
    """
    _require_cuttable(g)
    value, side = _kernels.stoer_wagner(np.ascontiguousarray(g.mult))
    witness = _oriented(g, np.flatnonzero(side))
    return CutResult(int(value), witness)


def brute_force_min_cut(g: Multigraph) -> CutResult:
    """Minimum over every proper vertex subset containing vertex 0."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLargeError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}")
    _require_cuttable(g)
    value, code = _kernels.brute_min_cut(np.ascontiguousarray(g.mult))
    side = [0] + [v for v in range(1, g.n) if (code >> (v - 1)) & 1]
    return CutResult(value, _oriented(g, side))


def _induced(g: Multigraph, keep) -> Multigraph:
    idx = np.asarray(keep, dtype=np.intp)
    return Multigraph(g.mult[np.ix_(idx, idx)])


def vertex_connectivity_simple(g: Multigraph) -> int:
    """Smallest vertex deletion set that disconnects a simple graph.

    Complete graphs get the convention ``kappa(K_n) = n - 1``.
    """
    if not is_simple(g):
        raise NotSimpleError("vertex connectivity is only defined here for simple graphs")
    if g.n > VERTEX_CONNECTIVITY_MAX_N:
        raise TooLargeError(f"vertex connectivity limited to n <= {VERTEX_CONNECTIVITY_MAX_N}")
    if not is_connected(g):
        raise DisconnectedError("graph is disconnected")
    for k in range(g.n - 1):
        for removed in combinations(range(g.n), k):
            gone = set(removed)
            keep = [v for v in range(g.n) if v not in gone]
            if not is_connected(_induced(g, keep)):
                return k
    return g.n - 1
