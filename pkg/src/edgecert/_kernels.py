"""Numeric inner loops.

Each kernel exists in two flavours with identical results:

* ``jit``: numba-compiled loops (used when :data:`edgecert._accel.USE_JIT`).
* ``numpy``: NumPy code, either the same source run uncompiled or a
  vectorised rewrite where the loop form would be too slow in the interpreter.
  The canonical-form fallback is a full ``n!`` sweep rather than the pruned
  search, so it doubles as an independent check of the pruning.

The public names (``jacobi_eigenvalues``, ``stoer_wagner``, ``brute_min_cut``,
``canonical_form``) are bound to one flavour at import time; ``flavour(name)``
returns either table for the benchmark and the cross-check tests.
"""

import itertools

import numpy as np

from ._accel import USE_JIT, compile_kernel

# --------------------------------------------------------------------------
# Cyclic Jacobi eigenvalues
# --------------------------------------------------------------------------


def _jacobi_source(a, rel_tol, max_sweeps):
    # Returns (diagonal, sweeps_used); sweeps_used == -1 on budget exhaustion.
    a = a.copy()
    n = a.shape[0]
    target = rel_tol * (1.0 + np.sqrt(np.sum(a * a)))
    for sweep in range(max_sweeps + 1):
        off = a - np.diag(np.diag(a))
        if np.sqrt(np.sum(off * off)) <= target:
            return np.diag(a).copy(), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sgn = 1.0 if theta >= 0.0 else -1.0
                t = sgn / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
    return np.diag(a).copy(), -1


# --------------------------------------------------------------------------
# Stoer-Wagner global minimum cut on an integer weight matrix
# --------------------------------------------------------------------------


def _stoer_wagner_source(w):
    # Maximum-adjacency ordering, ties to the smallest vertex index.
    n = w.shape[0]
    weights = w.astype(np.int64).copy()
    group = np.arange(n)
    active = np.ones(n, dtype=np.bool_)
    best = np.int64(-1)
    best_side = np.zeros(n, dtype=np.bool_)
    for phase in range(n - 1):
        added = np.zeros(n, dtype=np.bool_)
        conn = np.zeros(n, dtype=np.int64)
        prev = -1
        last = -1
        last_conn = np.int64(0)
        for _ in range(n - phase):
            sel = -1
            sel_conn = np.int64(-1)
            for v in range(n):
                if active[v] and not added[v] and conn[v] > sel_conn:
                    sel = v
                    sel_conn = conn[v]
            added[sel] = True
            conn += weights[sel]
            prev = last
            last = sel
            last_conn = sel_conn
        if best < 0 or last_conn < best:
            best = last_conn
            best_side = group == last
        weights[prev, :] += weights[last, :]
        weights[:, prev] += weights[:, last]
        weights[prev, prev] = 0
        weights[last, :] = 0
        weights[:, last] = 0
        active[last] = False
        for v in range(n):
            if group[v] == last:
                group[v] = prev
    return best, best_side


# --------------------------------------------------------------------------
# Brute-force minimum cut over subsets containing vertex 0
# --------------------------------------------------------------------------


def _brute_min_cut_loops(w):
    n = w.shape[0]
    total = (1 << (n - 1)) - 1
    best = np.int64(-1)
    best_code = 0
    inside = np.zeros(n, dtype=np.bool_)
    for code in range(total):
        inside[0] = True
        for v in range(1, n):
            inside[v] = (code >> (v - 1)) & 1 == 1
        cut = np.int64(0)
        for u in range(n):
            if inside[u]:
                for v in range(n):
                    if not inside[v]:
                        cut += w[u, v]
        if best < 0 or cut < best:
            best = cut
            best_code = code
    return best, best_code


def _brute_min_cut_numpy(w, chunk=1 << 14):
    n = w.shape[0]
    total = (1 << (n - 1)) - 1
    weights = w.astype(np.int64)
    shifts = np.arange(n - 1, dtype=np.int64)
    best = -1
    best_code = 0
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        member = np.ones((codes.size, n), dtype=np.int64)
        member[:, 1:] = (codes[:, None] >> shifts) & 1
        cuts = ((member @ weights) * (1 - member)).sum(axis=1)
        k = int(np.argmin(cuts))
        if best < 0 or cuts[k] < best:
            best = int(cuts[k])
            best_code = int(codes[k])
    return np.int64(best), best_code


# --------------------------------------------------------------------------
# Canonical form: lexicographically least row-major matrix over all relabelings
# --------------------------------------------------------------------------


def _canonical_loops(a):
    # Depth-first search over relabelings with two exact prunings:
    # * adjacent-swap rule: for positions k-1, k the columns restricted to the
    #   earlier rows must be lexicographically nondecreasing, otherwise swapping
    #   them gives a strictly smaller serialization;
    # * the determined prefix of row 0 may not exceed the incumbent.
    n = a.shape[0]
    size = n * n
    best = np.zeros(size, dtype=a.dtype)
    have_best = False
    perm = np.zeros(n, dtype=np.int64)
    used = np.zeros(n, dtype=np.bool_)
    cand = np.zeros(n, dtype=np.int64)
    depth = 0
    while depth >= 0:
        v = cand[depth]
        while v < n:
            ok = not used[v]
            if ok and depth >= 2:
                prev = perm[depth - 1]
                for i in range(depth - 1):
                    x = a[perm[i], prev]
                    y = a[perm[i], v]
                    if x < y:
                        break
                    if x > y:
                        ok = False
                        break
            if ok and have_best:
                p0 = v if depth == 0 else perm[0]
                for j in range(depth + 1):
                    pj = v if j == depth else perm[j]
                    x = a[p0, pj]
                    if x < best[j]:
                        break
                    if x > best[j]:
                        ok = False
                        break
            if ok:
                break
            v += 1
        if v == n:
            depth -= 1
            if depth >= 0:
                used[perm[depth]] = False
                cand[depth] = perm[depth] + 1
            continue
        perm[depth] = v
        if depth == n - 1:
            better = not have_best
            if have_best:
                for idx in range(size):
                    x = a[perm[idx // n], perm[idx % n]]
                    if x < best[idx]:
                        better = True
                        break
                    if x > best[idx]:
                        break
            if better:
                for idx in range(size):
                    best[idx] = a[perm[idx // n], perm[idx % n]]
                have_best = True
            cand[depth] = v + 1
            continue
        used[v] = True
        depth += 1
        cand[depth] = 0
    return best.reshape((n, n))


_PERM_CACHE = {}


def _permutations(n):
    perms = _PERM_CACHE.get(n)
    if perms is None:
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.intp)
        _PERM_CACHE[n] = perms
    return perms


def _canonical_numpy(a, chunk=8192):
    n = a.shape[0]
    perms = _permutations(n)
    best = None
    for start in range(0, len(perms), chunk):
        p = perms[start : start + chunk]
        cand = a[p[:, :, None], p[:, None, :]].reshape(len(p), n * n)
        if best is not None:
            cand = np.vstack([best[None, :], cand])
        rows = np.arange(len(cand))
        for col in range(n * n):
            column = cand[rows, col]
            rows = rows[column == column.min()]
            if rows.size == 1:
                break
        best = cand[rows[0]]
    return best.reshape((n, n)).copy()


# --------------------------------------------------------------------------
# Flavour tables and dispatch
# --------------------------------------------------------------------------


def _brute_min_cut_adapter(fn):
    def run(w):
        value, code = fn(w)
        return int(value), int(code)

    return run


_jit_cache = {}


def _jit_flavour():
    if not _jit_cache:
        _jit_cache.update(
            jacobi=compile_kernel(_jacobi_source),
            stoer_wagner=compile_kernel(_stoer_wagner_source),
            brute_min_cut=_brute_min_cut_adapter(compile_kernel(_brute_min_cut_loops)),
            canonical=compile_kernel(_canonical_loops),
        )
    return _jit_cache


_NUMPY_FLAVOUR = {
    "jacobi": _jacobi_source,
    "stoer_wagner": _stoer_wagner_source,
    "brute_min_cut": _brute_min_cut_adapter(_brute_min_cut_numpy),
    "canonical": _canonical_numpy,
}


def flavour(name):
    """Kernel table for ``"jit"`` or ``"numpy"``."""
    if name == "jit":
        return _jit_flavour()
    if name == "numpy":
        return _NUMPY_FLAVOUR
    raise ValueError(f"unknown kernel flavour {name!r}")


ACTIVE = "jit" if USE_JIT else "numpy"
_active = flavour(ACTIVE)

jacobi_eigenvalues = _active["jacobi"]
stoer_wagner = _active["stoer_wagner"]
brute_min_cut = _active["brute_min_cut"]
canonical_form = _active["canonical"]
