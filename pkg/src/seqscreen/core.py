"""Closed-form Bayesian screening mathematics.

Pure, stateless functions over three immutable value types:

- :class:`TestProfile` — a test's sensitivity ``a`` and specificity ``b``.
- :class:`Prior` — prevalence / pre-test probability ``phi``.
- :class:`PredictiveValue` — a posterior probability tagged positive or
  negative.

The quantities computed here:

- PPV   rho(phi)   = a*phi / (a*phi + (1-b)*(1-phi))
- NPV   sigma(phi) = b*(1-phi) / ((1-a)*phi + b*(1-phi))
- prevalence threshold  phi_e = (sqrt(a*(1-b)) + b - 1) / (a + b - 1),
  the prevalence at which the PPV curve's curvature peaks
- sequential PPV after n consecutive positives
  rho_n(phi) = a^n*phi / (a^n*phi + (1-b)^n*(1-phi))
- the iteration planner: the smallest whole number of consecutive
  positives needed for rho_n to reach a target.

Internally the positive-run posterior is evaluated in log-odds form,
``sigmoid(n*ln(LR+) + logit(phi))``, which is algebraically identical to
the power form above but does not underflow when n is large (a marginal
test with LR+ barely above 1 can require billions of iterations, where
``a**n`` is 0.0 in float64). ``ppv`` is exactly the ``n = 1`` case of the
same routine, so single-test and sequential values can never disagree.

Everything validates at construction time and raises the typed errors
from :mod:`seqscreen.errors`; no function here clamps, rounds, or hides a
domain violation.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DegenerateTest,
    EpsilonOne,
    InfeasibleTarget,
    InvalidProbability,
    InvalidTarget,
    SpecificityOne,
)

__all__ = [
    "TestProfile",
    "Prior",
    "PredictiveValue",
    "TestResult",
    "IterationPlan",
    "PlanStatus",
    "ConvergenceClass",
    "epsilon",
    "positive_likelihood_ratio",
    "ppv",
    "npv",
    "prevalence_threshold",
    "sequential_ppv",
    "posterior_update",
    "convergence_class",
    "iterations_needed",
    "iterations_from_log_lr",
    "raw_iteration_count",
    "ppv_curve",
    "npv_curve",
]


def _check_probability(name: str, value: float) -> float:
    value = float(value)
    if math.isnan(value) or not 0.0 <= value <= 1.0:
        raise InvalidProbability(f"{name} must be in [0, 1], got {value!r}")
    return value


@dataclass(frozen=True)
class TestProfile:
    """Sensitivity/specificity pair describing one dichotomous test.

    sensitivity: P(test positive | diseased), the true-positive rate.
    specificity: P(test negative | healthy), the true-negative rate.
    """

    sensitivity: float
    specificity: float

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "sensitivity", _check_probability("sensitivity", self.sensitivity)
        )
        object.__setattr__(
            self, "specificity", _check_probability("specificity", self.specificity)
        )


@dataclass(frozen=True)
class Prior:
    """Prevalence or pre-test probability of disease."""

    phi: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", _check_probability("phi", self.phi))


@dataclass(frozen=True)
class PredictiveValue:
    """A posterior probability tagged with the conditioning result."""

    value: float
    kind: str  # "positive" | "negative"

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", _check_probability("value", self.value))
        if self.kind not in ("positive", "negative"):
            raise ValueError(f"kind must be 'positive' or 'negative', got {self.kind!r}")

    def __float__(self) -> float:
        return self.value


class TestResult(Enum):
    """Outcome of one test administration."""

    POSITIVE = "positive"
    NEGATIVE = "negative"

    @classmethod
    def parse(cls, token: str) -> "TestResult":
        t = token.strip().lower()
        if t in ("+", "positive", "pos"):
            return cls.POSITIVE
        # U+2212 is the typographic minus some clients send
        if t in ("-", "−", "negative", "neg"):
            return cls.NEGATIVE
        raise ValueError(f"unrecognized test result {token!r}")


class PlanStatus(Enum):
    """Classification of an iteration plan.

    INFEASIBLE_TARGET is normally surfaced as the :class:`InfeasibleTarget`
    exception; the enum member exists for renderings (e.g. the service's
    remaining-iterations view) that fold the failure into a plan shape.
    """

    ALREADY_MET = "AlreadyMet"
    PLANNED = "Planned"
    INFEASIBLE_TARGET = "InfeasibleTarget"
    NON_INFORMATIVE_TEST = "NonInformativeTest"


@dataclass(frozen=True)
class IterationPlan:
    """How many consecutive positive results reach a target PPV.

    raw_n is the real-valued solution of the iteration equation; n_i is
    its ceiling, clamped to at least one actual test. Both are None when
    the status makes them meaningless.
    """

    target_rho: float
    status: PlanStatus
    raw_n: float | None = None
    n_i: int | None = None


class ConvergenceClass(Enum):
    """Limit behaviour of the posterior under endlessly repeated positives.

    The posterior after n consecutive positives tends to 1, stays at the
    prior, or decays to 0 according to whether the sensitivity exceeds,
    equals, or falls below the false-positive rate 1 - specificity
    (equivalently LR+ > 1, = 1, < 1). The comparison is against 1 - b,
    not any fixed constant: a and 1 - b need not sum to one.
    """

    CONVERGES_TO_ONE = "ConvergesToOne"
    STAYS_AT_PRIOR = "StaysAtPrior"
    CONVERGES_TO_ZERO = "ConvergesToZero"


# ---------------------------------------------------------------------------
# scalar test characteristics
# ---------------------------------------------------------------------------


def epsilon(test: TestProfile) -> float:
    """Sum of sensitivity and specificity, in [0, 2].

    epsilon = 1 marks the uninformative-test family; the prevalence
    threshold is undefined exactly there.
    """
    return test.sensitivity + test.specificity


def positive_likelihood_ratio(test: TestProfile) -> float:
    """LR+ = sensitivity / (1 - specificity).

    The multiplicative change in disease odds per positive result.
    Raises SpecificityOne at specificity 1, where the ratio is singular.
    """
    if test.specificity == 1.0:
        raise SpecificityOne(
            "LR+ is undefined at specificity 1 (no false positives to divide by)"
        )
    return test.sensitivity / (1.0 - test.specificity)


def prevalence_threshold(test: TestProfile) -> float:
    """Prevalence at the point of maximum curvature of the PPV curve.

    phi_e = (sqrt(a*(1-b)) + b - 1) / (a + b - 1). Below phi_e the PPV of
    a positive result drops precipitously. Undefined (EpsilonOne) when
    a + b = 1, where the PPV curve is the identity line.
    """
    a, b = test.sensitivity, test.specificity
    if a + b == 1.0:
        raise EpsilonOne("prevalence threshold is undefined when sensitivity + specificity = 1")
    return (math.sqrt(a * (1.0 - b)) + b - 1.0) / (a + b - 1.0)


# ---------------------------------------------------------------------------
# predictive values
# ---------------------------------------------------------------------------


def _positive_run_degenerate(a: float, b: float, phi: float) -> bool:
    # a^n*phi + (1-b)^n*(1-phi) == 0 for every n >= 1 exactly when both
    # the diseased and the healthy route to n positives have probability 0.
    return (a == 0.0 or phi == 0.0) and (b == 1.0 or phi == 1.0)


def _posterior_after_positive_run(a: float, b: float, phi: float, n: float) -> float:
    """P(diseased | n consecutive positives) for prior phi.

    Stable log-odds evaluation of a^n*phi / (a^n*phi + (1-b)^n*(1-phi));
    boundary inputs are resolved exactly before taking logs. n may be
    fractional (used by the planner's continuous cross-checks).
    """
    if _positive_run_degenerate(a, b, phi):
        raise DegenerateTest(
            f"a positive result has probability zero for sensitivity={a}, "
            f"specificity={b}, phi={phi}"
        )
    if phi == 0.0 or a == 0.0:
        return 0.0
    if phi == 1.0 or b == 1.0:
        return 1.0
    w = n * (math.log(a) - math.log(1.0 - b)) + math.log(phi) - math.log(1.0 - phi)
    if w >= 0.0:
        return 1.0 / (1.0 + math.exp(-w))
    e = math.exp(w)
    return e / (1.0 + e)


def ppv(test: TestProfile, prior: Prior) -> PredictiveValue:
    """Positive predictive value rho(phi) = a*phi / (a*phi + (1-b)*(1-phi)).

    Raises DegenerateTest when the denominator is zero, i.e. a positive
    result cannot occur at all.
    """
    value = _posterior_after_positive_run(
        test.sensitivity, test.specificity, prior.phi, 1
    )
    return PredictiveValue(value, "positive")


def npv(test: TestProfile, prior: Prior) -> PredictiveValue:
    """Negative predictive value sigma(phi) = b*(1-phi) / ((1-a)*phi + b*(1-phi)).

    Raises DegenerateTest when no negative result can occur.
    """
    a, b, phi = test.sensitivity, test.specificity, prior.phi
    denom = (1.0 - a) * phi + b * (1.0 - phi)
    if denom == 0.0:
        raise DegenerateTest(
            f"a negative result has probability zero for sensitivity={a}, "
            f"specificity={b}, phi={phi}"
        )
    return PredictiveValue(b * (1.0 - phi) / denom, "negative")


def sequential_ppv(test: TestProfile, prior: Prior, n: int) -> PredictiveValue:
    """Posterior after n consecutive positive results.

    rho_n(phi) = a^n*phi / (a^n*phi + (1-b)^n*(1-phi)). For n = 1 this is
    exactly ``ppv`` (same code path, bit for bit).
    """
    try:
        n = operator.index(n)
    except TypeError:
        raise ValueError(f"n must be a positive integer, got {n!r}") from None
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    value = _posterior_after_positive_run(
        test.sensitivity, test.specificity, prior.phi, n
    )
    return PredictiveValue(value, "positive")


def posterior_update(prior: Prior, test: TestProfile, result: TestResult) -> Prior:
    """One Bayes step: the posterior for the observed result becomes the new prior.

    Positive result -> ppv(test, prior); negative result -> the disease
    probability given a negative, (1-a)*phi / ((1-a)*phi + b*(1-phi)).
    """
    if result is TestResult.POSITIVE:
        return Prior(ppv(test, prior).value)
    a, b, phi = test.sensitivity, test.specificity, prior.phi
    denom = (1.0 - a) * phi + b * (1.0 - phi)
    if denom == 0.0:
        raise DegenerateTest(
            f"a negative result has probability zero for sensitivity={a}, "
            f"specificity={b}, phi={phi}"
        )
    return Prior((1.0 - a) * phi / denom)


def convergence_class(test: TestProfile) -> ConvergenceClass:
    """Limit of the posterior under repeated positives; see ConvergenceClass.

    Requires specificity < 1 so that repeated positives remain possible
    for healthy subjects and LR+ is finite.
    """
    if test.specificity == 1.0:
        raise SpecificityOne("convergence classification needs specificity < 1")
    fp = 1.0 - test.specificity
    if test.sensitivity > fp:
        return ConvergenceClass.CONVERGES_TO_ONE
    if test.sensitivity == fp:
        return ConvergenceClass.STAYS_AT_PRIOR
    return ConvergenceClass.CONVERGES_TO_ZERO


# ---------------------------------------------------------------------------
# iteration planning
# ---------------------------------------------------------------------------


def raw_iteration_count(log_lr: float, phi: float, target_rho: float) -> float:
    """Real-valued number of positive-result iterations to reach ``target_rho``.

    n = ln[ rho*(phi-1) / (phi*(rho-1)) ] / ln(LR+), parameterized directly
    by log_lr = ln(LR+). This is the cell formula of the reference tables;
    callers are responsible for domain checks (log_lr > 0, 0 < phi < 1,
    0 < target_rho < 1).
    """
    return math.log(target_rho * (phi - 1.0) / (phi * (target_rho - 1.0))) / log_lr


def _validated_target(target_rho: float, phi: float) -> float | None:
    """Validate a target PPV; returns None when phi=1 already meets target 1."""
    target_rho = float(target_rho)
    if math.isnan(target_rho) or target_rho <= 0.0 or target_rho > 1.0:
        raise InvalidTarget(f"target PPV must lie in (0, 1), got {target_rho!r}")
    if target_rho == 1.0:
        if phi == 1.0:
            return None  # certain disease: nothing to plan
        raise InfeasibleTarget(
            "no finite number of tests reaches a target PPV of exactly 1 "
            "unless the prior is already 1"
        )
    return target_rho


def iterations_from_log_lr(log_lr: float, phi: float, target_rho: float) -> IterationPlan:
    """Iteration plan parameterized by ln(LR+) instead of (a, b).

    Infinitely many sensitivity/specificity pairs share one LR+; the plan
    depends on the test only through it, so the scalar form is the shared
    engine for :func:`iterations_needed` and the reference tables.
    """
    phi = _check_probability("phi", phi)
    validated = _validated_target(target_rho, phi)
    if validated is None:
        return IterationPlan(1.0, PlanStatus.ALREADY_MET, raw_n=None, n_i=0)
    target_rho = validated
    if phi == 0.0:
        raise InfeasibleTarget(
            "a zero prior cannot reach a positive target: the posterior after "
            "any run of positives is still 0"
        )
    if math.isnan(log_lr) or log_lr <= 0.0:
        return IterationPlan(target_rho, PlanStatus.NON_INFORMATIVE_TEST)
    if phi == 1.0:
        return IterationPlan(target_rho, PlanStatus.ALREADY_MET, raw_n=None, n_i=0)
    raw = raw_iteration_count(log_lr, phi, target_rho)
    if phi >= target_rho:
        return IterationPlan(target_rho, PlanStatus.ALREADY_MET, raw_n=raw, n_i=0)
    return IterationPlan(
        target_rho, PlanStatus.PLANNED, raw_n=raw, n_i=max(1, math.ceil(raw))
    )


def iterations_needed(test: TestProfile, prior: Prior, target_rho: float) -> IterationPlan:
    """Plan the number of consecutive positives needed to reach ``target_rho``.

    Outcomes, in the order checked:

    - InvalidTarget / InfeasibleTarget raised for targets outside (0, 1)
      (target exactly 1 is infeasible unless the prior is already 1).
    - SpecificityOne raised at specificity 1 (LR+ singular).
    - NON_INFORMATIVE_TEST when LR+ <= 1: repeated positives cannot raise
      the posterior, so no plan exists.
    - ALREADY_MET with n_i = 0 when the prior alone meets the target.
    - PLANNED otherwise, with raw_n from :func:`raw_iteration_count` and
      n_i = max(1, ceil(raw_n)); the plan is tight, i.e. n_i positives
      reach the target and n_i - 1 do not.
    """
    phi = prior.phi
    validated = _validated_target(target_rho, phi)
    if validated is None:
        return IterationPlan(1.0, PlanStatus.ALREADY_MET, raw_n=None, n_i=0)
    if test.specificity == 1.0:
        raise SpecificityOne(
            "iteration planning needs specificity < 1; a perfect-specificity "
            "test confirms disease on the first positive but LR+ is singular"
        )
    lr = positive_likelihood_ratio(test)
    if lr <= 1.0:
        return IterationPlan(validated, PlanStatus.NON_INFORMATIVE_TEST)
    return iterations_from_log_lr(math.log(lr), phi, validated)


# ---------------------------------------------------------------------------
# curve sampling
# ---------------------------------------------------------------------------


def ppv_curve(test: TestProfile, grid: list[float]) -> list[tuple[float, float]]:
    """Sample rho(phi) on a caller-supplied grid, preserving order."""
    return [
        (p.phi, ppv(test, p).value) for p in (Prior(g) for g in grid)
    ]


def npv_curve(test: TestProfile, grid: list[float]) -> list[tuple[float, float]]:
    """Sample sigma(phi) on a caller-supplied grid, preserving order."""
    return [
        (p.phi, npv(test, p).value) for p in (Prior(g) for g in grid)
    ]
