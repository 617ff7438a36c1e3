"""Exhaustive enumeration of small regular multigraphs and theorem checks over them."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Tuple

import numpy as np

from .certify import threshold_main1
from .constructions import build_B1, build_H1, build_Ht
from .cuts import edge_connectivity
from .errors import BadParityError, BadTError, TooLargeError, TooSmallError
from .multigraph import CANONICAL_MAX_N, Multigraph, build, canonical_key, is_connected
from .numerics import equal_within, strictly_below
from .spectral import adjacency_eigenvalues


@dataclass(frozen=True)
class EnumSpec:
    d: int
    n_max: int
    connected_only: bool = True

    def __post_init__(self):
        if self.n_max > CANONICAL_MAX_N:
            raise TooLargeError(f"n_max is capped at {CANONICAL_MAX_N}, got {self.n_max}")
        if self.d < 1:
            raise TooSmallError(f"d must be positive, got {self.d}")


def labeled_regular(n: int, d: int) -> Iterator[np.ndarray]:
    """All symmetric loopless matrices with row sums ``d``, filled row by row.

    The matrix passed out is reused; callers copy what they keep.
    """
    m = np.zeros((n, n), dtype=np.int64)
    residual = [d] * n

    def fill(i: int, j: int):
        if i == n - 1:
            if residual[i] == 0:
                yield m
            return
        if j == n:
            if residual[i] == 0:
                yield from fill(i + 1, i + 2)
            return
        need = residual[i]
        if need > sum(residual[j:]):
            return
        if j == n - 1:
            choices = (need,) if need <= residual[j] else ()
        else:
            choices = range(min(need, residual[j]) + 1)
        for k in choices:
            m[i, j] = m[j, i] = k
            residual[i] -= k
            residual[j] -= k
            yield from fill(i, j + 1)
            residual[i] += k
            residual[j] += k
        m[i, j] = m[j, i] = 0

    if n == 1:
        if d == 0:
            yield m
        return
    yield from fill(0, 1)


def enumerate_n(d: int, n: int, connected_only: bool = True) -> List[Multigraph]:
    """One representative per isomorphism class on exactly ``n`` vertices, by canonical key."""
    if n > CANONICAL_MAX_N:
        raise TooLargeError(f"n is capped at {CANONICAL_MAX_N}, got {n}")
    if (d * n) % 2:
        return []
    found: Dict[bytes, Multigraph] = {}
    for m in labeled_regular(n, d):
        g = Multigraph(m)
        if connected_only and not is_connected(g):
            continue
        key = canonical_key(g)
        if key not in found:
            found[key] = g
    return [found[k] for k in sorted(found)]


def enumerate_regular(spec: EnumSpec) -> Iterator[Multigraph]:
    for n in range(1, spec.n_max + 1):
        yield from enumerate_n(spec.d, n, spec.connected_only)


@dataclass(frozen=True)
class GraphRecord:
    graph: Multigraph
    key: bytes
    eigs: np.ndarray
    kappa: int

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def lambda2(self) -> float:
        return float(self.eigs[1])


@lru_cache(maxsize=None)
def universe(d: int, n_max: int) -> Tuple[GraphRecord, ...]:
    """Connected d-regular multigraphs on 2..n_max vertices with spectra and edge connectivity."""
    records = []
    for g in enumerate_regular(EnumSpec(d, n_max)):
        if g.n < 2:
            continue
        records.append(GraphRecord(g, canonical_key(g), adjacency_eigenvalues(g),
                                   edge_connectivity(g).value))
    return tuple(records)


# --------------------------------------------------------------------------
# Reports
# --------------------------------------------------------------------------


@dataclass
class RuleCheck:
    rule: str
    violations: int = 0
    fired: int = 0
    sharp_witnesses: List[bytes] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)


@dataclass
class VerificationReport:
    graphs_checked: int = 0
    checks: List[RuleCheck] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def violations(self) -> int:
        return sum(c.violations for c in self.checks)

    def check(self, rule: str) -> RuleCheck:
        for c in self.checks:
            if c.rule == rule:
                return c
        raise KeyError(rule)

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(
            max(self.graphs_checked, other.graphs_checked),
            self.checks + other.checks,
            self.elapsed + other.elapsed,
        )

    def render_machine(self) -> str:
        lines = [f"{c.rule} {c.violations} {c.fired} {len(c.sharp_witnesses)}" for c in self.checks]
        return "\n".join(lines) + "\n"

    def render_text(self) -> str:
        lines = [f"graphs checked: {self.graphs_checked}"]
        for c in self.checks:
            status = "ok" if c.violations == 0 else "VIOLATED"
            lines.append(f"{c.rule:<20} {status:<9} violations={c.violations} "
                         f"fired={c.fired} sharp={len(c.sharp_witnesses)}")
            for key in c.sharp_witnesses:
                lines.append(f"    sharp witness {key_label(key)}")
            for note in c.notes:
                lines.append(f"    {note}")
        lines.append(f"elapsed: {self.elapsed:.3f} s")
        return "\n".join(lines) + "\n"


def key_label(key: bytes) -> str:
    """Compact text form of a canonical key: ``n:upper-triangle entries``."""
    n = key[0]
    m = np.frombuffer(key[1:], dtype=">u4").reshape(n, n)
    return f"{n}:" + ",".join(str(int(m[i, j])) for i in range(n) for j in range(i + 1, n))


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - start
        return report

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def verify_theorem_1_4(spec: EnumSpec) -> VerificationReport:
    """``lambda_2 < threshold_main1(d)`` implies 2-edge-connected, on every enumerated graph."""
    records = universe(spec.d, spec.n_max)
    check = RuleCheck("thm1.4")
    if spec.d >= 3:
        thr = threshold_main1(spec.d)
        for r in records:
            if strictly_below(r.lambda2, thr):
                check.fired += 1
                if r.kappa < 2:
                    check.violations += 1
            if equal_within(r.lambda2, thr) and r.kappa == 1:
                check.sharp_witnesses.append(r.key)
    else:
        check.notes.append(f"d = {spec.d} < 3: threshold undefined, nothing checked")
    check.sharp_witnesses.sort()
    return VerificationReport(len(records), [check])


@_timed
def verify_theorem_1_5(spec: EnumSpec, t_max: int) -> VerificationReport:
    """Both branches for every ``2 <= t <= t_max``; ``t_max`` may not exceed ``d - 1``."""
    if t_max < 2 or t_max > spec.d - 1:
        raise BadTError(f"t_max must satisfy 2 <= t_max <= d - 1, got {t_max} for d={spec.d}")
    records = universe(spec.d, spec.n_max)
    checks = []
    for t in range(2, t_max + 1):
        branches = [(f"thm1.5({t})", spec.d - t)]
        if t % 2:
            branches.append((f"thm1.5odd({t})", spec.d - t + 1))
        for rule, thr in branches:
            check = RuleCheck(rule)
            for r in records:
                if strictly_below(r.lambda2, thr):
                    check.fired += 1
                    if r.kappa < t + 1:
                        check.violations += 1
                if equal_within(r.lambda2, thr) and r.kappa == t:
                    check.sharp_witnesses.append(r.key)
            check.sharp_witnesses.sort()
            checks.append(check)
    return VerificationReport(len(records), checks)


def three_vertex_solutions(d: int) -> List[Tuple[int, int, int]]:
    """Every ``(m01, m12, m20)`` in ``[0, d]^3`` giving degree multiset ``{d, d, d-1}``."""
    target = sorted([d, d, d - 1])
    return [
        (a, b, c)
        for a, b, c in product(range(d + 1), repeat=3)
        if sorted([a + c, a + b, b + c]) == target
    ]


@_timed
def verify_observation_2_1(d: int) -> VerificationReport:
    """Exactly one 3-vertex multigraph has degrees ``{d, d, d-1}``, and it is ``B1(d)``."""
    if d < 3 or d % 2 == 0:
        raise BadParityError(f"d must be odd and at least 3, got {d}")
    classes = set()
    for a, b, c in three_vertex_solutions(d):
        edges = [(u, v, k) for u, v, k in ((0, 1, a), (1, 2, b), (2, 0, c)) if k]
        classes.add(canonical_key(build(3, edges)))
    check = RuleCheck("obs2.1", fired=len(classes))
    if len(classes) != 1:
        check.violations += 1
        check.notes.append(f"found {len(classes)} isomorphism classes")
    elif canonical_key(build_B1(d)) not in classes:
        check.violations += 1
        check.notes.append("unique graph differs from B1(d)")
    check.sharp_witnesses = sorted(classes)
    return VerificationReport(len(classes), [check])


@_timed
def verify_smallest_claims(d: int) -> VerificationReport:
    """No smaller graph than ``H1(d)`` has edge connectivity 1; none smaller than ``Ht(d, t)`` has ``t``."""
    checks = []
    n_checked = 0
    if d % 2:
        records = universe(d, 6)
        n_checked = len(records)
        check = RuleCheck("smallest_h1")
        for r in records:
            if r.kappa == 1:
                if r.n < 6:
                    check.violations += 1
                else:
                    check.fired += 1
                    check.sharp_witnesses.append(r.key)
        if canonical_key(build_H1(d)) not in check.sharp_witnesses:
            check.violations += 1
            check.notes.append("H1(d) not found among 6-vertex graphs with edge connectivity 1")
        check.sharp_witnesses.sort()
        checks.append(check)
    even_ts = [t for t in range(2, d - 1, 2)]
    if even_ts:
        records = universe(d, 4)
        n_checked = max(n_checked, len(records))
        for t in even_ts:
            check = RuleCheck(f"smallest_ht({t})")
            for r in records:
                if r.kappa == t:
                    if r.n < 4:
                        check.violations += 1
                    else:
                        check.fired += 1
                        check.sharp_witnesses.append(r.key)
            if canonical_key(build_Ht(d, t)) not in check.sharp_witnesses:
                check.violations += 1
                check.notes.append(f"Ht({d}, {t}) not found among 4-vertex graphs")
            check.sharp_witnesses.sort()
            checks.append(check)
    if not checks:
        raise BadParityError(f"no smallest-graph claim applies to d={d}")
    return VerificationReport(n_checked, checks)
