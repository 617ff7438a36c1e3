"""Adjacency and Laplacian spectra of multigraphs."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooSmallError
from .multigraph import Multigraph
from .numerics import sym_eigenvalues

SYMMETRY_TOL = 1e-8


@dataclass(frozen=True)
class GraphSpectrum:
    adjacency_eigs: np.ndarray  # lambda_1 >= ... >= lambda_n
    laplacian_eigs: np.ndarray  # mu_1 <= ... <= mu_n

    def lam(self, i: int) -> float:
        """``lambda_i`` with 1-based index."""
        return float(self.adjacency_eigs[i - 1])

    def mu(self, i: int) -> float:
        """``mu_i`` with 1-based index."""
        return float(self.laplacian_eigs[i - 1])


def adjacency_matrix(g: Multigraph) -> np.ndarray:
    return g.mult.astype(np.float64)


def laplacian_matrix(g: Multigraph) -> np.ndarray:
    a = g.mult.astype(np.float64)
    return np.diag(a.sum(axis=1)) - a


def adjacency_eigenvalues(g: Multigraph) -> np.ndarray:
    return sym_eigenvalues(adjacency_matrix(g))


def spectrum(g: Multigraph) -> GraphSpectrum:
    # mu comes from its own eigensolve so lambda_i = d - mu_i stays checkable
    lap = sym_eigenvalues(laplacian_matrix(g))[::-1].copy()
    return GraphSpectrum(adjacency_eigenvalues(g), lap)


def lambda2(g: Multigraph) -> float:
    if g.n < 2:
        raise TooSmallError("lambda_2 needs at least two vertices")
    return float(adjacency_eigenvalues(g)[1])


def spectrum_symmetric_about_origin(g: Multigraph, tol: float = SYMMETRY_TOL) -> bool:
    eigs = adjacency_eigenvalues(g)
    return bool(np.all(np.abs(eigs + eigs[::-1]) <= tol))
