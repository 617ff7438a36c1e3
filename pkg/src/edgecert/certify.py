"""Spectral thresholds for edge connectivity and per-graph certificates.

Every hypothesis is a strict inequality ``lambda_2 < T`` evaluated as
``lambda_2 < T - EPS``, so graphs sitting exactly on a threshold never fire.
The one non-strict rule (Krivelevich-Sudakov, ``lambda_2 <= d - 2``) uses
``lambda_2 <= T + EPS``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional

from .cuts import edge_connectivity
from .errors import (
    BadNError,
    BadParityError,
    BadTError,
    DisconnectedError,
    NegativeDiscriminantError,
    NotRegularError,
    TooSmallError,
)
from .multigraph import Multigraph, degree_profile, is_connected, is_simple
from .numerics import EPS, largest_real_root_cubic
from .spectral import spectrum

THEOREM = "theorem"
CONJECTURE = "conjecture"


# --------------------------------------------------------------------------
# Threshold formulas
# --------------------------------------------------------------------------


def threshold_main1(d: int) -> float:
    """Below this, a connected d-regular multigraph is 2-edge-connected."""
    if d < 3:
        raise TooSmallError(f"d must be at least 3, got {d}")
    return (d - 1 + math.sqrt(9 * d * d - 10 * d + 17)) / 4


def threshold_main2(d: int, t: int) -> float:
    """Below this, a connected d-regular multigraph is (t+1)-edge-connected."""
    if t < 2:
        raise BadTError(f"t must be at least 2, got {t}")
    return float(d - t + 1) if t % 2 else float(d - t)


def threshold_pi(d: int) -> float:
    """Largest root of ``x^3 - (d-3)x^2 - (3d-2)x - 2`` (simple graphs, odd d)."""
    if d < 3 or d % 2 == 0:
        raise BadParityError(f"d must be odd and at least 3, got {d}")
    return largest_real_root_cubic(-(d - 3.0), -(3.0 * d - 2.0), -2.0)


def threshold_cioaba3(d: int) -> float:
    if d < 3:
        raise TooSmallError(f"d must be at least 3, got {d}")
    return (d - 3 + math.sqrt((d + 3) ** 2 - 16)) / 2


def threshold_cioaba_general(d: int, t: int) -> float:
    if d < 3:
        raise TooSmallError(f"d must be at least 3, got {d}")
    if t < 1:
        raise BadTError(f"t must be at least 1, got {t}")
    return d - 2 * t / (d + 1)


def threshold_rho(d: int, t: int) -> float:
    """Conjectured simple-graph threshold for (t+1)-edge-connectivity."""
    if t < 3:
        raise BadTError(f"the conjecture covers t >= 3, got {t}")
    shift = 4 if t % 2 else 3
    disc = (d + shift) ** 2 - 8 * t
    if disc < 0:
        raise NegativeDiscriminantError(f"negative discriminant for d={d}, t={t}")
    return (d - shift + math.sqrt(disc)) / 2


def threshold_chandran(d: int, n: int) -> float:
    """Below this, a simple d-regular graph on n vertices has edge connectivity d."""
    if n <= d:
        raise BadNError(f"need n > d, got n={n}, d={d}")
    return d - 1 - d / (n - d)


def best_multigraph_bound(d: int, lambda2: float, eps: float = EPS) -> int:
    """Largest edge-connectivity lower bound the two multigraph theorems give."""
    bound = 1
    if lambda2 < threshold_main1(d) - eps:
        bound = 2
    for t in range(2, d):
        if lambda2 < threshold_main2(d, t) - eps:
            bound = max(bound, t + 1)
    return bound


# --------------------------------------------------------------------------
# Certificates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RuleResult:
    rule: str
    threshold: float
    fired: bool
    implied_bound: int
    status: str = THEOREM
    exact: bool = False  # conclusion is kappa' == d rather than a bound


@dataclass
class Certificate:
    d: int
    n: int
    lambda2: float
    simple: bool
    rule_results: List[RuleResult] = field(default_factory=list)
    best_bound: int = 1
    actual: Optional[int] = None

    @property
    def sound(self) -> Optional[bool]:
        if self.actual is None:
            return None
        return self.best_bound <= self.actual

    def fired(self, rule: str) -> bool:
        return any(r.rule == rule and r.fired for r in self.rule_results)


def _strict(lam: float, thr: float, bound: int, rule: str, status: str = THEOREM,
            exact: bool = False) -> RuleResult:
    return RuleResult(rule, thr, lam < thr - EPS, bound, status, exact)


def _multigraph_rules(d: int, lam: float) -> List[RuleResult]:
    rules = [_strict(lam, threshold_main1(d), 2, "main1")]
    # the d - t rule holds for every t >= 2; odd t additionally gets d - t + 1
    for t in range(2, d):
        rules.append(_strict(lam, float(d - t), t + 1, f"main2_even({t})"))
        if t % 2:
            rules.append(_strict(lam, threshold_main2(d, t), t + 1, f"main2_odd({t})"))
    return rules


def _simple_rules(g: Multigraph, d: int, lam: float, mu2: float) -> List[RuleResult]:
    rules = []
    complete = g.n == d + 1
    # Fiedler: kappa' >= kappa >= mu_2 for non-complete simple graphs.
    fiedler_bound = max(0, math.ceil(mu2 - EPS))
    rules.append(RuleResult("fiedler", mu2, not complete and fiedler_bound >= 1,
                            min(fiedler_bound, d)))
    if g.n > d:
        rules.append(_strict(lam, threshold_chandran(d, g.n), d,
                             f"chandran({g.n})", exact=True))
    ks = float(d - 2)
    rules.append(RuleResult("krivelevich_sudakov", ks, lam <= ks + EPS, d, THEOREM, True))
    if d >= 3 and d % 2:
        rules.append(_strict(lam, threshold_pi(d), 2, "cioaba_cubic"))
    if d >= 3:
        rules.append(_strict(lam, threshold_cioaba3(d), 3, "cioaba_3"))
        for t in range(1, d):
            rules.append(_strict(lam, threshold_cioaba_general(d, t), t + 1,
                                 f"cioaba_general({t})"))
    for t in range(3, d):
        try:
            thr = threshold_rho(d, t)
        except NegativeDiscriminantError:
            continue
        rules.append(_strict(lam, thr, t + 1, f"rho_conjecture({t})", CONJECTURE))
    return rules


def certify(g: Multigraph, compute_actual: bool = False,
            with_conjecture: bool = False) -> Certificate:
    """Evaluate every applicable rule at ``lambda_2(G)``.

    Simple-graph rules only apply when ``G`` is simple. Conjecture rules are
    always reported but count towards ``best_bound`` only with
    ``with_conjecture``.
    """
    d = degree_profile(g).regular_degree
    if d is None:
        raise NotRegularError("certification needs a regular multigraph")
    if g.n < 2:
        raise TooSmallError("certification needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedError("certification needs a connected multigraph")
    if d < 3:
        raise TooSmallError(f"the thresholds need d >= 3, got {d}")
    spec = spectrum(g)
    lam = spec.lam(2)
    simple = is_simple(g)
    rules = _multigraph_rules(d, lam)
    if simple:
        rules += _simple_rules(g, d, lam, spec.mu(2))
    best = 1
    for r in rules:
        if r.fired and (r.status == THEOREM or with_conjecture):
            best = max(best, r.implied_bound)
    cert = Certificate(d, g.n, lam, simple, rules, min(best, d))
    if compute_actual:
        cert.actual = edge_connectivity(g).value
    return cert


# --------------------------------------------------------------------------
# Rendering
# --------------------------------------------------------------------------


def fmt(x: float) -> str:
    return f"{x:.12g}"


def render_machine(cert: Certificate) -> str:
    lines = [
        f"{r.rule} {fmt(r.threshold)} {int(r.fired)} {r.implied_bound} {r.status}"
        for r in cert.rule_results
    ]
    lines.append(f"best {cert.best_bound}")
    if cert.actual is not None:
        lines.append(f"actual {cert.actual}")
    return "\n".join(lines) + "\n"


def render_table(cert: Certificate) -> str:
    head = [
        f"d = {cert.d}, n = {cert.n}, lambda_2 = {fmt(cert.lambda2)}, "
        f"{'simple' if cert.simple else 'multigraph'}",
        f"{'rule':<24}{'threshold':>20}  {'fired':<6}{'implies':<12}status",
    ]
    body = []
    for r in cert.rule_results:
        implies = f"k' = {r.implied_bound}" if r.exact else f"k' >= {r.implied_bound}"
        body.append(f"{r.rule:<24}{fmt(r.threshold):>20}  {'yes' if r.fired else 'no':<6}"
                    f"{implies:<12}{r.status}")
    tail = [f"best certified bound: k' >= {cert.best_bound}"]
    if cert.actual is not None:
        tail.append(f"actual edge connectivity: {cert.actual}")
    return "\n".join(head + body + tail) + "\n"
