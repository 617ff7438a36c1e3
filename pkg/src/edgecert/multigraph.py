"""Loopless multigraphs stored as dense symmetric multiplicity matrices."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .errors import (
    LoopEdgeError,
    ParseError,
    TooLargeError,
    VertexOutOfRangeError,
)

CANONICAL_MAX_N = 8

Edge = Tuple[int, int, int]


class Multigraph:
    """Immutable multigraph on vertices ``0..n-1``.

    ``mult[i, j]`` is the number of parallel edges between ``i`` and ``j``.
    The array is read-only; build new graphs instead of mutating.
    """

    __slots__ = ("_mult",)

    def __init__(self, mult):
        m = np.array(mult, dtype=np.int64)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise ValueError("multiplicity matrix must be square with n >= 1")
        if np.any(np.diag(m) != 0):
            raise LoopEdgeError("multigraphs here have no loops")
        if not np.array_equal(m, m.T):
            raise ValueError("multiplicity matrix must be symmetric")
        if np.any(m < 0):
            raise ValueError("multiplicities must be nonnegative")
        m.flags.writeable = False
        self._mult = m

    @property
    def n(self) -> int:
        return self._mult.shape[0]

    @property
    def mult(self) -> np.ndarray:
        return self._mult

    def edges(self) -> list[Edge]:
        """Edge triples ``(u, v, m)`` with ``u < v``, sorted by ``(u, v)``."""
        iu, ju = np.nonzero(np.triu(self._mult, 1))
        return [(int(u), int(v), int(self._mult[u, v])) for u, v in zip(iu, ju)]

    def permute(self, order: Sequence[int]) -> "Multigraph":
        """Relabel so that new vertex ``i`` is old vertex ``order[i]``."""
        p = np.asarray(order, dtype=np.intp)
        if sorted(p.tolist()) != list(range(self.n)):
            raise ValueError("order must be a permutation of the vertices")
        return Multigraph(self._mult[np.ix_(p, p)])

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return np.array_equal(self._mult, other._mult)

    def __hash__(self):
        return hash((self.n, self._mult.tobytes()))

    def __repr__(self):
        return f"Multigraph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: Tuple[int, ...]
    regular_degree: Optional[int]


def build(n: int, edges: Iterable[Edge]) -> Multigraph:
    """Assemble a multigraph from ``(u, v, multiplicity)`` triples.

    Repeated pairs accumulate, in either orientation.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = np.zeros((n, n), dtype=np.int64)
    for u, v, k in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        if k < 1:
            raise ValueError(f"multiplicity must be >= 1, got {k}")
        m[u, v] += k
        m[v, u] += k
    return Multigraph(m)


def degree_profile(g: Multigraph) -> DegreeProfile:
    degrees = tuple(int(x) for x in g.mult.sum(axis=1))
    regular = degrees[0] if len(set(degrees)) == 1 else None
    return DegreeProfile(degrees, regular)


def components(g: Multigraph) -> list[list[int]]:
    """Connected components of the underlying simple graph, by BFS."""
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(g.mult[u]):
                if not seen[v]:
                    seen[v] = True
                    comp.append(int(v))
                    queue.append(int(v))
        comps.append(sorted(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    return len(components(g)) == 1


def is_simple(g: Multigraph) -> bool:
    return bool(np.all(g.mult <= 1))


def is_bipartite(g: Multigraph) -> bool:
    """2-colouring search on the underlying simple graph."""
    colour = np.full(g.n, -1, dtype=np.int64)
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in np.flatnonzero(g.mult[u]):
                if colour[v] < 0:
                    colour[v] = 1 - colour[u]
                    queue.append(int(v))
                elif colour[v] == colour[u]:
                    return False
    return True


def canonical_key(g: Multigraph) -> bytes:
    """Isomorphism-invariant key: least row-major matrix over all relabelings.

    Cost is ``n!`` permutations, so ``n`` is capped at 8.
    """
    if g.n > CANONICAL_MAX_N:
        raise TooLargeError(f"canonical_key supports n <= {CANONICAL_MAX_N}, got {g.n}")
    form = _kernels.canonical_form(np.ascontiguousarray(g.mult))
    return bytes([g.n]) + np.asarray(form, dtype=">u4").tobytes()


# --------------------------------------------------------------------------
# Text format
# --------------------------------------------------------------------------


def dumps(g: Multigraph) -> str:
    lines = [f"multigraph {g.n}"]
    lines.extend(f"{u} {v} {k}" for u, v, k in g.edges())
    return "\n".join(lines) + "\n"


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {lineno}: expected an integer, got {token!r}") from None


def loads(text: str) -> Multigraph:
    n = None
    edges = []
    seen_pairs = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "multigraph":
                raise ParseError(f"line {lineno}: expected 'multigraph <n>' header")
            n = _parse_int(fields[1], lineno)
            if n < 1:
                raise ParseError(f"line {lineno}: vertex count must be positive")
            continue
        if len(fields) != 3:
            raise ParseError(f"line {lineno}: expected '<u> <v> <m>'")
        u, v, k = (_parse_int(f, lineno) for f in fields)
        if u == v:
            raise LoopEdgeError(f"line {lineno}: loop at vertex {u}")
        if u > v:
            raise ParseError(f"line {lineno}: edge endpoints must satisfy u < v")
        if not (0 <= u and v < n):
            raise VertexOutOfRangeError(f"line {lineno}: edge ({u}, {v}) outside 0..{n - 1}")
        if k < 1:
            raise ParseError(f"line {lineno}: multiplicity must be >= 1")
        if (u, v) in seen_pairs:
            raise ParseError(f"line {lineno}: duplicate line for pair ({u}, {v})")
        seen_pairs.add((u, v))
        edges.append((u, v, k))
    if n is None:
        raise ParseError("missing 'multigraph <n>' header")
    return build(n, edges)


def read(path) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(g: Multigraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(g))
