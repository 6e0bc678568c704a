"""Acceptance gate: one test per release criterion, at the pinned tolerance.

Each test prints one PASS line on success (run with ``pytest -s`` to see
them alongside pytest's own verdicts); a failed assertion is the FAIL
line. Criteria and tolerances:

1. table reproduction      240 golden cells within +/-0.005, < 1 s
2. prevalence threshold    0.1489 +/- 0.0005 for (0.98, 0.97)
3. planner tightness       10,000 random draws, exact inequalities, < 5 s
4. chaining equivalence    1,000 random folds vs closed form, 1e-12 rel
5. Monte Carlo oracle      1e6 subjects within 3 SE + negative control, < 60 s
6. limits and endpoints    exact endpoints, fixed point, trichotomy at 1e-6
7. degenerate domains      exact typed errors / statuses
"""

import time

import numpy as np
import pytest

from seqscreen import (
    InfeasibleTarget,
    InvalidTarget,
    PlanStatus,
    Prior,
    SimulationConfig,
    SpecificityOne,
    TestProfile,
    TestResult,
    generate_reference_table,
    iterations_needed,
    npv,
    posterior_update,
    ppv,
    prevalence_threshold,
    sequential_ppv,
    verify_closed_form,
)
from seqscreen.tables import paper_spec

from reference_values import GOLDEN_TABLES


def _announce(name):
    print(f"\nACCEPTANCE {name}: PASS")


def test_criterion_1_table_reproduction():
    start = time.perf_counter()
    checked = 0
    for target, golden in GOLDEN_TABLES.items():
        table = generate_reference_table(paper_spec(target))
        for row, golden_row in zip(table.cells, golden):
            for got, want in zip(row, golden_row):
                assert got == pytest.approx(want, abs=0.005), (
                    f"target={target}: got {got}, want {want}"
                )
                checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 240
    assert elapsed < 1.0, f"table regeneration took {elapsed:.3f}s"
    _announce(f"table reproduction (240 cells, {elapsed * 1e3:.1f} ms)")


def test_criterion_2_prevalence_threshold():
    value = prevalence_threshold(TestProfile(0.98, 0.97))
    assert value == pytest.approx(0.1489, abs=0.0005)
    _announce(f"prevalence threshold ({value:.6f})")


def test_criterion_3_planner_tightness():
    rng = np.random.default_rng(20240801)
    start = time.perf_counter()
    checked = 0
    while checked < 10_000:
        a, b, phi, u = rng.uniform(size=4)
        if a <= 1.0 - b or not 0.0 < phi < 1.0:
            continue
        target = phi + (1.0 - phi) * u
        if not phi < target < 1.0:
            continue
        test, prior = TestProfile(a, b), Prior(phi)
        plan = iterations_needed(test, prior, target)
        assert plan.status is PlanStatus.PLANNED
        assert sequential_ppv(test, prior, plan.n_i).value >= target
        if plan.n_i >= 2:
            assert sequential_ppv(test, prior, plan.n_i - 1).value < target
        checked += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0, f"tightness sweep took {elapsed:.3f}s"
    _announce(f"planner tightness (10,000 draws, {elapsed:.2f} s)")


def test_criterion_4_chaining_equivalence():
    rng = np.random.default_rng(20240802)
    for _ in range(1_000):
        a = rng.uniform(0.001, 0.999)
        b = rng.uniform(0.001, 0.999)
        phi = rng.uniform(0.001, 0.999)
        n = int(rng.integers(1, 21))
        test, state = TestProfile(a, b), Prior(phi)
        for _ in range(n):
            state = posterior_update(state, test, TestResult.POSITIVE)
        closed = sequential_ppv(test, Prior(phi), n).value
        assert state.phi == pytest.approx(closed, rel=1e-12), (
            f"a={a} b={b} phi={phi} n={n}: folded {state.phi} vs closed {closed}"
        )
    _announce("chaining equivalence (1,000 folds, n <= 20, 1e-12 rel)")


def test_criterion_5_monte_carlo_oracle():
    start = time.perf_counter()
    test = TestProfile(0.80, 0.85)
    for phi in (0.1, 0.5):
        config = SimulationConfig(test, Prior(phi), trials=1_000_000, seed=1905, serial_depth=3)
        verdict = verify_closed_form(config, tolerance_sigmas=3.0)
        assert verdict.passed, f"phi={phi}: {verdict.to_json()}"
        assert [row.n for row in verdict.rows] == [1, 2, 3]
        assert all(row.passed for row in verdict.rows)
    # negative control: same simulation, closed form perturbed by +0.05 in a
    control = verify_closed_form(
        SimulationConfig(test, Prior(0.1), trials=1_000_000, seed=1905, serial_depth=3),
        tolerance_sigmas=3.0,
        reference=TestProfile(0.85, 0.85),
    )
    assert not control.passed, "perturbed closed form should fail verification"
    elapsed = time.perf_counter() - start
    assert elapsed < 60.0, f"oracle run took {elapsed:.1f}s"
    _announce(f"Monte Carlo oracle (2x1e6 subjects + control, {elapsed:.1f} s)")


def test_criterion_6_limits_endpoints_convergence():
    # PPV endpoints: 0 at phi=0, 1 at phi=1
    for a, b in ((0.98, 0.97), (0.80, 0.85), (0.3, 0.6)):
        test = TestProfile(a, b)
        assert ppv(test, Prior(0.0)).value == 0.0
        assert ppv(test, Prior(1.0)).value == 1.0
        assert npv(test, Prior(0.0)).value == 1.0
        assert npv(test, Prior(1.0)).value == 0.0
    # uninformative fixed point: a = 1-b leaves every prior unchanged
    for b in (0.25, 0.5, 0.8):
        test = TestProfile(1.0 - b, b)
        for phi in (0.01, 0.3, 0.5, 0.9, 0.99):
            assert ppv(test, Prior(phi)).value == pytest.approx(phi, rel=1e-12)
    # convergence trichotomy at n = 200
    up = sequential_ppv(TestProfile(0.98, 0.97), Prior(0.1), 200).value
    assert abs(up - 1.0) < 1e-6
    down = sequential_ppv(TestProfile(0.3, 0.6), Prior(0.9), 200).value
    assert abs(down - 0.0) < 1e-6
    flat = sequential_ppv(TestProfile(0.5, 0.5), Prior(0.3), 200).value
    assert flat == pytest.approx(0.3, rel=1e-12)
    _announce("limits, endpoints, fixed point, trichotomy")


def test_criterion_7_degenerate_domains():
    test, prior = TestProfile(0.8, 0.85), Prior(0.4)
    # target exactly 1 is unreachable
    with pytest.raises(InfeasibleTarget) as exc:
        iterations_needed(test, prior, 1.0)
    assert type(exc.value) is InfeasibleTarget
    # targets outside (0,1] are invalid
    with pytest.raises(InvalidTarget) as exc:
        iterations_needed(test, prior, 1.5)
    assert type(exc.value) is InvalidTarget
    # a + b < 1: repeated positives cannot help
    plan = iterations_needed(TestProfile(0.4, 0.5), prior, 0.9)
    assert plan.status is PlanStatus.NON_INFORMATIVE_TEST
    assert plan.raw_n is None and plan.n_i is None
    # specificity exactly 1 is singular
    with pytest.raises(SpecificityOne) as exc:
        iterations_needed(TestProfile(0.9, 1.0), prior, 0.9)
    assert type(exc.value) is SpecificityOne
    # prior already at or above target
    plan = iterations_needed(test, Prior(0.4), 0.4)
    assert plan.status is PlanStatus.ALREADY_MET and plan.n_i == 0
    plan = iterations_needed(test, Prior(0.6), 0.4)
    assert plan.status is PlanStatus.ALREADY_MET and plan.n_i == 0
    _announce("degenerate domains (typed errors exact)")
