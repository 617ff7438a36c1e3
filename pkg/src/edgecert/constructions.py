"""Extremal regular multigraphs attaining the spectral thresholds with equality.

Labeling is fixed so serialized output is byte-stable:

* ``B1(d)``: vertices 0, 1 have degree ``d`` and share ``(d+1)/2`` edges;
  vertex 2 has degree ``d-1``.
* ``H1(d)``: copy one of ``B1`` on 0..2, a mirrored copy on 3..5 whose
  low-degree vertex is 3, and a single bridge 2-3.
* ``Ht(d, t)``: ``x=0, y=1`` and ``x=2, y=3``, each pair joined by
  ``d - t/2`` edges, plus ``t/2`` edges on 0-2 and on 1-3.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BadParityError, BadTError, TooSmallError
from .multigraph import Multigraph, build


def _check_odd_degree(d: int) -> None:
    if d < 3:
        raise TooSmallError(f"degree must be at least 3, got {d}")
    if d % 2 == 0:
        raise BadParityError(f"degree must be odd, got {d}")


def b1_multiplicities(d: int) -> tuple[int, int, int]:
    """``(m01, m12, m20)`` for the unique 3-vertex graph with degrees ``(d, d, d-1)``."""
    _check_odd_degree(d)
    return (d + 1) // 2, (d - 1) // 2, (d - 1) // 2


def build_B1(d: int) -> Multigraph:
    m01, m12, m20 = b1_multiplicities(d)
    return build(3, [(0, 1, m01), (1, 2, m12), (2, 0, m20)])


def build_H1(d: int) -> Multigraph:
    m01, m12, m20 = b1_multiplicities(d)
    edges = [
        (0, 1, m01), (1, 2, m12), (0, 2, m20),
        (4, 5, m01), (3, 4, m12), (3, 5, m20),
        (2, 3, 1),
    ]
    return build(6, edges)


def _check_even_t(d: int, t: int) -> None:
    if t < 2 or t % 2 or t >= d - 1:
        raise BadTError(f"t must be even with 2 <= t < d - 1, got d={d}, t={t}")


def ht_edges(d: int, t: int) -> list[tuple[int, int, int]]:
    """Edge list of ``Ht`` without the ``t < d - 1`` restriction (needs ``t`` even, ``t < 2d``)."""
    half = t // 2
    return [(0, 1, d - half), (2, 3, d - half), (0, 2, half), (1, 3, half)]


def build_Bt(d: int, t: int) -> Multigraph:
    _check_even_t(d, t)
    return build(2, [(0, 1, d - t // 2)])


def build_Ht(d: int, t: int) -> Multigraph:
    _check_even_t(d, t)
    return build(4, ht_edges(d, t))


def unique_3vertex_degree_profile(d: int) -> Multigraph:
    """Solve ``a+c = a+b = d, b+c = d-1`` for the single admissible graph."""
    _check_odd_degree(d)
    a = (3 * d - 1) // 2 - (d - 1)
    b = (3 * d - 1) // 2 - d
    c = b
    return build(3, [(0, 1, a), (1, 2, b), (2, 0, c)])


def multi_edge(d: int) -> Multigraph:
    """Two vertices joined by ``d`` parallel edges."""
    return build(2, [(0, 1, d)])


def complete_graph(n: int) -> Multigraph:
    return build(n, [(u, v, 1) for u, v in combinations(range(n), 2)])


def cycle_graph(n: int) -> Multigraph:
    return build(n, [(i, (i + 1) % n, 1) for i in range(n)])
