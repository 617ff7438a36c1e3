"""Both kernel flavours must agree bit for bit (or to rounding for eigenvalues)."""

import os
import subprocess
import sys

import numpy as np
import pytest

from edgecert import _kernels
from edgecert.constructions import build_H1
from edgecert.multigraph import build
from edgecert.numerics import JACOBI_MAX_SWEEPS, JACOBI_REL_TOL

JIT = _kernels.flavour("jit")
NP = _kernels.flavour("numpy")


def _random_mult(rng, n, top=4, density=0.6):
    m = np.triu(rng.integers(0, top, (n, n)) * (rng.random((n, n)) < density), 1)
    return (m + m.T).astype(np.int64)


def _connected(m):
    n = len(m)
    seen, stack = {0}, [0]
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(m[u]):
            if v not in seen:
                seen.add(int(v))
                stack.append(int(v))
    return len(seen) == n


def test_unknown_flavour():
    with pytest.raises(ValueError):
        _kernels.flavour("fortran")


def test_jacobi_agrees_and_matches_numpy_linalg():
    rng = np.random.default_rng(11)
    for _ in range(40):
        n = int(rng.integers(1, 9))
        x = rng.normal(size=(n, n))
        a = x + x.T
        ja, sa = JIT["jacobi"](a.copy(), JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)
        na, sn = NP["jacobi"](a.copy(), JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)
        assert sa >= 0 and sn >= 0
        ref = np.linalg.eigvalsh(a)
        assert np.allclose(np.sort(ja), ref, atol=1e-10)
        assert np.allclose(np.sort(na), ref, atol=1e-10)


def test_jacobi_reports_budget_exhaustion():
    a = np.array([[1.0, 2.0], [2.0, -1.0]])
    _, sweeps = JIT["jacobi"](a, 1e-300, 0)
    assert sweeps == -1


def test_min_cut_kernels_agree():
    rng = np.random.default_rng(5)
    checked = 0
    while checked < 80:
        m = _random_mult(rng, int(rng.integers(2, 11)))
        if not _connected(m):
            continue
        sw_j = JIT["stoer_wagner"](m)
        sw_n = NP["stoer_wagner"](m)
        assert sw_j[0] == sw_n[0] and np.array_equal(sw_j[1], sw_n[1])
        bj, bn = JIT["brute_min_cut"](m), NP["brute_min_cut"](m)
        assert bj == bn
        assert bj[0] == sw_j[0]
        checked += 1


def test_canonical_kernels_agree_on_random_relabelings():
    rng = np.random.default_rng(9)
    for _ in range(60):
        n = int(rng.integers(1, 7))
        m = _random_mult(rng, n)
        perm = rng.permutation(n)
        relabeled = np.ascontiguousarray(m[np.ix_(perm, perm)])
        forms = {JIT["canonical"](m).tobytes(), NP["canonical"](m).tobytes(),
                 JIT["canonical"](relabeled).tobytes(), NP["canonical"](relabeled).tobytes()}
        assert len(forms) == 1


def test_canonical_kernels_agree_at_eight_vertices():
    rng = np.random.default_rng(21)
    mats = [_random_mult(rng, 8, top=3) for _ in range(4)]
    cube = build(8, [(u, u ^ b, 1) for u in range(8) for b in (1, 2, 4) if u < u ^ b])
    mats.append(np.ascontiguousarray(cube.mult))
    for m in mats:
        assert np.array_equal(JIT["canonical"](m), NP["canonical"](m))


def test_no_jit_flag_selects_numpy_flavour():
    env = dict(os.environ, EDGECERT_NO_JIT="1")
    code = (
        "from edgecert import _kernels, canonical_key, edge_connectivity, lambda2\n"
        "from edgecert.constructions import build_H1\n"
        "g = build_H1(5)\n"
        "print(_kernels.ACTIVE, edge_connectivity(g).value, repr(lambda2(g)), canonical_key(g).hex())\n"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    assert out[0] == "numpy"
    from edgecert import canonical_key, edge_connectivity, lambda2
    g = build_H1(5)
    assert int(out[1]) == edge_connectivity(g).value
    assert float(out[2]) == pytest.approx(lambda2(g), abs=1e-12)
    assert out[3] == canonical_key(g).hex()
