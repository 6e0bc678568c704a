"""Monte Carlo verification oracle for the closed-form screening results.

The simulator draws whole screening populations instead of evaluating any
formula: each subject gets a disease status ~ Bernoulli(phi) and
``serial_depth`` conditionally independent test results (positive with
probability a when diseased, 1 - b when healthy — the same independence
the sequential-testing formulas assume). The empirical PPV after n
consecutive positives is then the diseased fraction among subjects whose
first n results were all positive, which must agree with the closed form
within sampling noise. That agreement — or a deliberate mismatch for a
perturbed reference — is the verification verdict.

Randomness comes from numpy's Philox generator (named, counter-based,
portable) seeded with the config seed. The logical trials x (depth + 1)
uniform matrix is consumed row-major, so row i is subject i's private
block of draws regardless of chunk size, and integer tallies keep
aggregation order-independent: identical seed and config give identical
report bytes on every backend.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from ._kernels import tally_chunk
from .core import Prior, TestProfile, sequential_ppv

__all__ = [
    "SimulationConfig",
    "PpvEstimate",
    "NpvEstimate",
    "SimulationReport",
    "VerificationRow",
    "VerificationVerdict",
    "simulate",
    "verify_closed_form",
]

# ~32 MB of float64 per chunk keeps memory flat for any trials/depth
_CHUNK_FLOAT_BUDGET = 4_000_000


@dataclass(frozen=True)
class SimulationConfig:
    """One simulation request: population, test, RNG seed, serial depth."""

    test: TestProfile
    prior: Prior
    trials: int = 1_000_000
    seed: int = 0
    serial_depth: int = 3

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.serial_depth < 1:
            raise ValueError(f"serial_depth must be >= 1, got {self.serial_depth}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class PpvEstimate:
    """Empirical PPV after n consecutive positives.

    estimate/standard_error are None when no subject produced the run
    (absent, not zero). standard_error = sqrt(p*(1-p)/m) over the m
    conditioning subjects.
    """

    n: int
    estimate: float | None
    standard_error: float | None
    positives_count: int


@dataclass(frozen=True)
class NpvEstimate:
    """Empirical NPV of the first test (healthy fraction of first-negatives)."""

    estimate: float | None
    standard_error: float | None
    negatives_count: int


@dataclass(frozen=True)
class SimulationReport:
    empirical_ppv_by_n: tuple[PpvEstimate, ...]
    empirical_npv: NpvEstimate
    trials_used: int

    def to_dict(self) -> dict:
        return {
            "trials_used": self.trials_used,
            "empirical_ppv_by_n": [
                {
                    "n": e.n,
                    "estimate": e.estimate,
                    "standard_error": e.standard_error,
                    "positives_count": e.positives_count,
                }
                for e in self.empirical_ppv_by_n
            ],
            "empirical_npv": {
                "estimate": self.empirical_npv.estimate,
                "standard_error": self.empirical_npv.standard_error,
                "negatives_count": self.empirical_npv.negatives_count,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _proportion(successes: int, count: int) -> tuple[float | None, float | None]:
    if count == 0:
        return None, None
    p = successes / count
    return p, math.sqrt(p * (1.0 - p) / count)


def simulate(config: SimulationConfig, backend: str | None = None) -> SimulationReport:
    """Run the population simulation and tally serial-testing outcomes."""
    depth = config.serial_depth
    a, b, phi = (
        config.test.sensitivity,
        config.test.specificity,
        config.prior.phi,
    )
    rng = np.random.Generator(np.random.Philox(config.seed))
    chunk_rows = max(1, _CHUNK_FLOAT_BUDGET // (depth + 1))

    run_total = np.zeros(depth, dtype=np.int64)
    run_diseased = np.zeros(depth, dtype=np.int64)
    first_negative = 0
    first_negative_healthy = 0

    remaining = config.trials
    while remaining > 0:
        rows = min(remaining, chunk_rows)
        u = rng.random((rows, depth + 1))
        rt, rd, fn, fnh = tally_chunk(u, phi, a, b, backend)
        run_total += rt
        run_diseased += rd
        first_negative += int(fn)
        first_negative_healthy += int(fnh)
        remaining -= rows

    ppv_rows = []
    for n in range(1, depth + 1):
        m = int(run_total[n - 1])
        est, se = _proportion(int(run_diseased[n - 1]), m)
        ppv_rows.append(PpvEstimate(n, est, se, m))
    npv_est, npv_se = _proportion(first_negative_healthy, first_negative)
    return SimulationReport(
        empirical_ppv_by_n=tuple(ppv_rows),
        empirical_npv=NpvEstimate(npv_est, npv_se, first_negative),
        trials_used=config.trials,
    )


@dataclass(frozen=True)
class VerificationRow:
    """One empirical-vs-closed-form comparison.

    passed is None when the estimate is absent (no conditioning subjects):
    such rows neither pass nor fail.
    """

    n: int
    closed_form: float
    estimate: float | None
    standard_error: float | None
    delta: float | None
    passed: bool | None


@dataclass(frozen=True)
class VerificationVerdict:
    rows: tuple[VerificationRow, ...]
    tolerance_sigmas: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "tolerance_sigmas": self.tolerance_sigmas,
            "rows": [
                {
                    "n": r.n,
                    "closed_form": r.closed_form,
                    "estimate": r.estimate,
                    "standard_error": r.standard_error,
                    "delta": r.delta,
                    "passed": r.passed,
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def verify_closed_form(
    config: SimulationConfig,
    tolerance_sigmas: float = 3.0,
    reference: TestProfile | None = None,
    backend: str | None = None,
) -> VerificationVerdict:
    """Compare simulation against the sequential-PPV closed form per n.

    Passes iff |estimate - closed_form| <= tolerance_sigmas * SE for every
    n with at least one conditioning subject. ``reference`` substitutes a
    different test profile on the closed-form side only — the negative
    control for the oracle itself (simulate one truth, verify against a
    perturbed formula, expect failure).
    """
    if tolerance_sigmas <= 0:
        raise ValueError(f"tolerance_sigmas must be positive, got {tolerance_sigmas}")
    if reference is None:
        reference = config.test
    report = simulate(config, backend=backend)
    rows = []
    all_pass = True
    for est in report.empirical_ppv_by_n:
        closed = sequential_ppv(reference, config.prior, est.n).value
        if est.estimate is None:
            rows.append(VerificationRow(est.n, closed, None, None, None, None))
            continue
        delta = est.estimate - closed
        ok = abs(delta) <= tolerance_sigmas * est.standard_error
        all_pass = all_pass and ok
        rows.append(
            VerificationRow(est.n, closed, est.estimate, est.standard_error, delta, ok)
        )
    return VerificationVerdict(tuple(rows), float(tolerance_sigmas), all_pass)
