import math

import pytest
from hypothesis import given, strategies as st

from edgecert.certify import (
    best_multigraph_bound,
    certify,
    render_machine,
    render_table,
    threshold_chandran,
    threshold_cioaba3,
    threshold_cioaba_general,
    threshold_main1,
    threshold_main2,
    threshold_pi,
    threshold_rho,
)
from edgecert.constructions import build_B1, build_H1, build_Ht, complete_graph, multi_edge
from edgecert.errors import (
    BadNError,
    BadParityError,
    BadTError,
    DisconnectedError,
    NegativeDiscriminantError,
    NotRegularError,
    TooSmallError,
)
from edgecert.multigraph import build
from edgecert.numerics import EPS
from oracles import bisect_roots


def test_threshold_main1():
    assert threshold_main1(3) == pytest.approx((1 + math.sqrt(17)) / 2, abs=1e-12)
    assert threshold_main1(3) == pytest.approx(2.561553, abs=1e-6)
    assert threshold_main1(5) == pytest.approx((4 + math.sqrt(192)) / 4, abs=1e-12)
    with pytest.raises(TooSmallError):
        threshold_main1(1)


def test_threshold_main2():
    assert threshold_main2(5, 2) == 3
    assert threshold_main2(5, 3) == 3
    with pytest.raises(BadTError):
        threshold_main2(5, 1)


@pytest.mark.parametrize("d", [3, 5, 7])
def test_threshold_pi_against_bisection(d):
    f = lambda x: x ** 3 - (d - 3) * x ** 2 - (3 * d - 2) * x - 2
    oracle = max(bisect_roots(f, -4 * d, 4 * d))
    assert threshold_pi(d) == pytest.approx(oracle, abs=1e-10)


def test_threshold_pi_d3_bracket():
    assert 2.7 < threshold_pi(3) < 2.8
    assert threshold_pi(3) == pytest.approx(2.778457, abs=1e-6)
    with pytest.raises(BadParityError):
        threshold_pi(4)


def test_threshold_cioaba3():
    assert threshold_cioaba3(3) == pytest.approx(math.sqrt(5), abs=1e-12)
    assert threshold_cioaba3(5) == pytest.approx(1 + 2 * math.sqrt(3), abs=1e-12)
    with pytest.raises(TooSmallError):
        threshold_cioaba3(2)


def test_threshold_cioaba_general():
    assert threshold_cioaba_general(3, 1) == pytest.approx(2.5)
    assert threshold_cioaba_general(5, 2) == pytest.approx(5 - 4 / 6)
    with pytest.raises(BadTError):
        threshold_cioaba_general(5, 0)


def test_threshold_rho():
    assert threshold_rho(5, 3) == pytest.approx((1 + math.sqrt(57)) / 2, abs=1e-12)
    assert threshold_rho(5, 4) == pytest.approx(1 + 2 * math.sqrt(2), abs=1e-12)
    with pytest.raises(BadTError):
        threshold_rho(3, 2)
    with pytest.raises(NegativeDiscriminantError):
        threshold_rho(-8, 3)


def test_threshold_chandran():
    assert threshold_chandran(3, 8) == pytest.approx(1.4)
    assert threshold_chandran(3, 4) == pytest.approx(-1.0)
    with pytest.raises(BadNError):
        threshold_chandran(3, 3)


def test_best_bound_examples():
    assert best_multigraph_bound(5, 2.9) == 4
    assert best_multigraph_bound(3, 2.0) == 2
    for d in (3, 4, 5, 8):
        assert best_multigraph_bound(d, float(d)) == 1


@given(st.integers(3, 12), st.floats(-12, 12), st.floats(-12, 12))
def test_best_bound_monotone(d, x, y):
    lo, hi = sorted((x, y))
    assert best_multigraph_bound(d, lo) >= best_multigraph_bound(d, hi)
    assert 1 <= best_multigraph_bound(d, lo) <= d


@pytest.mark.parametrize("d", range(3, 12))
def test_parity_structure(d):
    # just below d - t for even t both t+1 (rule at t) and t+2 (odd rule at t+1) fire
    for t in range(2, d - 1, 2):
        lam = d - t - 2 * EPS
        assert best_multigraph_bound(d, lam) >= t + 2
        # at d - t exactly neither fires; the bound drops to what larger gaps give
        assert best_multigraph_bound(d, float(d - t)) <= t


def test_certify_h31_is_sharp():
    cert = certify(build_H1(3), compute_actual=True)
    assert not cert.fired("main1")
    assert cert.best_bound == 1
    assert cert.actual == 1
    assert not cert.simple


def test_certify_h54(h54):
    cert = certify(h54, compute_actual=True)
    assert cert.lambda2 == pytest.approx(1.0, abs=1e-9)
    assert cert.fired("main2_even(2)") and cert.fired("main2_odd(3)")
    assert not cert.fired("main2_even(4)")
    assert cert.best_bound == 4 and cert.actual == 4


def test_certify_multi_edge():
    cert = certify(multi_edge(5), compute_actual=True)
    assert cert.lambda2 == pytest.approx(-5.0)
    assert cert.fired("main1") and cert.fired("main2_even(4)")
    assert cert.best_bound == 5 == cert.actual


@pytest.mark.parametrize("d", [3, 5, 7, 9])
def test_sharpness_h1(d):
    assert not certify(build_H1(d)).fired("main1")


@pytest.mark.parametrize("d,t", [(d, t) for d in range(4, 10) for t in range(2, d - 1, 2)])
def test_sharpness_ht(d, t):
    cert = certify(build_Ht(d, t), compute_actual=True)
    assert not cert.fired(f"main2_even({t})")
    assert cert.best_bound <= cert.actual == t


def test_simple_rules_gated():
    k4 = certify(complete_graph(4), compute_actual=True)
    assert any(r.rule == "krivelevich_sudakov" for r in k4.rule_results)
    assert not any(r.rule == "fiedler" and r.fired for r in k4.rule_results)
    assert k4.best_bound == 3 == k4.actual
    multi = certify(build_H1(5))
    assert not any(r.rule.startswith(("fiedler", "chandran", "cioaba", "rho")) for r in multi.rule_results)


def test_conjecture_needs_opt_in():
    # rho rules need t >= 3, so d >= 4: use K_{4,4}
    k44 = build(8, [(i, j, 1) for i in range(4) for j in range(4, 8)])
    plain = certify(k44)
    conj = [r for r in plain.rule_results if r.status == "conjecture"]
    assert conj and all(r.rule.startswith("rho_conjecture") for r in conj)
    assert certify(k44, with_conjecture=True).best_bound >= plain.best_bound


def test_certify_errors():
    with pytest.raises(NotRegularError):
        certify(build_B1(3))
    with pytest.raises(DisconnectedError):
        certify(build(4, [(0, 1, 3), (2, 3, 3)]))


def test_machine_format():
    text = render_machine(certify(build_H1(3), compute_actual=True))
    lines = text.splitlines()
    assert lines[0] == "main1 2.56155281281 0 2 theorem"
    assert lines[-2:] == ["best 1", "actual 1"]
    for line in lines[:-2]:
        rule, thr, fired, bound, status = line.split()
        float(thr)
        assert fired in ("0", "1") and int(bound) >= 1 and status in ("theorem", "conjecture")


def test_table_mentions_best_bound():
    table = render_table(certify(build_H1(3), compute_actual=True))
    assert "best certified bound: k' >= 1" in table
    assert "actual edge connectivity: 1" in table
