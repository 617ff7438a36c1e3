"""Vertex partitions, quotient matrices and eigenvalue interlacing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from .errors import EmptySideError, InvalidPartitionError
from .multigraph import Multigraph
from .numerics import sym_eigenvalues

INTERLACE_TOL = 1e-8


@dataclass(frozen=True)
class Partition:
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        return cls(tuple(tuple(int(v) for v in b) for b in blocks))

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    def indicator(self, n: int) -> np.ndarray:
        """``n x s`` 0/1 membership matrix."""
        ind = np.zeros((n, len(self.blocks)), dtype=np.int64)
        for j, block in enumerate(self.blocks):
            ind[list(block), j] = 1
        return ind

    def validate(self, n: int) -> None:
        if not self.blocks:
            raise InvalidPartitionError("partition has no blocks")
        seen = set()
        for block in self.blocks:
            if not block:
                raise InvalidPartitionError("empty block")
            for v in block:
                if not 0 <= v < n:
                    raise InvalidPartitionError(f"vertex {v} outside 0..{n - 1}")
                if v in seen:
                    raise InvalidPartitionError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != n:
            missing = sorted(set(range(n)) - seen)
            raise InvalidPartitionError(f"vertices {missing} are not covered")

    def __str__(self):
        return "|".join(",".join(str(v) for v in b) for b in self.blocks)


def parse_partition(text: str) -> Partition:
    """Parse ``"0,1,2|3|4,5"`` style block syntax."""
    blocks = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if not chunk:
            raise InvalidPartitionError("empty block in partition text")
        try:
            blocks.append(tuple(int(tok) for tok in chunk.split(",")))
        except ValueError:
            raise InvalidPartitionError(f"bad vertex list {chunk!r}") from None
    return Partition(tuple(blocks))


@dataclass(frozen=True)
class QuotientMatrix:
    """Average neighbour counts between blocks; generally not symmetric."""

    matrix: np.ndarray
    block_sizes: Tuple[int, ...]

    def symmetrized(self) -> np.ndarray:
        """``diag(sqrt|V_i|) B diag(1/sqrt|V_i|)``, symmetric for a true quotient."""
        root = np.sqrt(np.asarray(self.block_sizes, dtype=np.float64))
        s = self.matrix * root[:, None] / root[None, :]
        scale = 1.0 + np.abs(s).max()
        if not np.allclose(s, s.T, rtol=0.0, atol=1e-9 * scale):
            raise ValueError("matrix is not the quotient of a symmetric matrix for these block sizes")
        return 0.5 * (s + s.T)


def _block_edge_counts(g: Multigraph, p: Partition) -> np.ndarray:
    p.validate(g.n)
    ind = p.indicator(g.n)
    return ind.T @ g.mult @ ind


def quotient_matrix(g: Multigraph, p: Partition) -> QuotientMatrix:
    counts = _block_edge_counts(g, p)
    sizes = np.asarray(p.sizes, dtype=np.float64)
    return QuotientMatrix(counts / sizes[:, None], p.sizes)


def is_equitable(g: Multigraph, p: Partition) -> bool:
    p.validate(g.n)
    per_vertex = g.mult @ p.indicator(g.n)  # neighbours of each vertex in each block
    for block in p.blocks:
        rows = per_vertex[list(block)]
        if np.any(rows != rows[0]):
            return False
    return True


def quotient_eigs(q: QuotientMatrix) -> np.ndarray:
    return sym_eigenvalues(q.symmetrized())


def check_interlacing(graph_eigs: Sequence[float], quot_eigs: Sequence[float],
                      tol: float = INTERLACE_TOL) -> bool:
    """``lam_i(G) >= lam_i(Q) >= lam_{n-s+i}(G)`` for every ``i``, both lists nonincreasing."""
    g = np.asarray(graph_eigs, dtype=np.float64)
    q = np.asarray(quot_eigs, dtype=np.float64)
    n, s = len(g), len(q)
    if s > n:
        raise ValueError("quotient has more eigenvalues than the graph")
    upper = g[:s]
    lower = g[n - s:]
    return bool(np.all(upper >= q - tol) and np.all(q >= lower - tol))


def equitable_containment(graph_eigs: Sequence[float], quot_eigs: Sequence[float],
                          tol: float = INTERLACE_TOL) -> bool:
    """Every quotient eigenvalue lies within ``tol`` of some graph eigenvalue."""
    g = np.asarray(graph_eigs, dtype=np.float64)
    return all(np.min(np.abs(g - x)) <= tol for x in quot_eigs)


@dataclass(frozen=True)
class CutWitness:
    side: Tuple[int, ...]
    a: int
    b: int
    l: int

    def partition(self, n: int) -> Partition:
        inside = set(self.side)
        return Partition((self.side, tuple(v for v in range(n) if v not in inside)))


def cut_witness(g: Multigraph, side: Iterable[int]) -> CutWitness:
    s = tuple(sorted(set(int(v) for v in side)))
    if not s or len(s) >= g.n:
        raise EmptySideError("both sides of a cut must be nonempty")
    if s[0] < 0 or s[-1] >= g.n:
        raise InvalidPartitionError("cut side contains an unknown vertex")
    mask = np.zeros(g.n, dtype=bool)
    mask[list(s)] = True
    crossing = int(g.mult[np.ix_(mask, ~mask)].sum())
    return CutWitness(s, len(s), g.n - len(s), crossing)


def cut_quotient_eigs_closed_form(d: float, w: CutWitness) -> Tuple[float, float]:
    """Eigenvalues ``(d, d - l/a - l/b)`` of the two-block cut quotient of a d-regular graph."""
    return (float(d), d - w.l / w.a - w.l / w.b)
