"""Bayesian screening-test calculator and serial-testing planner.

Predictive values, the prevalence threshold, sequential Bayesian updating,
and iteration planning as pure closed forms (:mod:`seqscreen.core`);
reference tables and surface grids (:mod:`seqscreen.tables`); a Monte
Carlo verification oracle (:mod:`seqscreen.mc`); a CLI
(:mod:`seqscreen.cli`); and an HTTP JSON API with live sequential-testing
sessions (:mod:`seqscreen.service`).
"""

from .core import (
    ConvergenceClass,
    IterationPlan,
    PlanStatus,
    PredictiveValue,
    Prior,
    TestProfile,
    TestResult,
    convergence_class,
    epsilon,
    iterations_from_log_lr,
    iterations_needed,
    npv,
    npv_curve,
    positive_likelihood_ratio,
    posterior_update,
    ppv,
    ppv_curve,
    prevalence_threshold,
    raw_iteration_count,
    sequential_ppv,
)
from .errors import (
    DegenerateTest,
    EpsilonOne,
    InfeasibleTarget,
    InvalidAxis,
    InvalidProbability,
    InvalidTarget,
    ScreeningError,
    SpecificityOne,
)
from .mc import SimulationConfig, SimulationReport, simulate, verify_closed_form
from .tables import (
    PAPER_LOG_LR_AXIS,
    PAPER_PHI_AXIS,
    PAPER_TARGETS,
    ReferenceTable,
    ReferenceTableSpec,
    generate_reference_table,
    surface_grid,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceClass",
    "DegenerateTest",
    "EpsilonOne",
    "InfeasibleTarget",
    "InvalidAxis",
    "InvalidProbability",
    "InvalidTarget",
    "IterationPlan",
    "PAPER_LOG_LR_AXIS",
    "PAPER_PHI_AXIS",
    "PAPER_TARGETS",
    "PlanStatus",
    "PredictiveValue",
    "Prior",
    "ReferenceTable",
    "ReferenceTableSpec",
    "ScreeningError",
    "SimulationConfig",
    "SimulationReport",
    "SpecificityOne",
    "TestProfile",
    "TestResult",
    "convergence_class",
    "epsilon",
    "generate_reference_table",
    "iterations_from_log_lr",
    "iterations_needed",
    "npv",
    "npv_curve",
    "positive_likelihood_ratio",
    "posterior_update",
    "ppv",
    "ppv_curve",
    "prevalence_threshold",
    "raw_iteration_count",
    "sequential_ppv",
    "simulate",
    "surface_grid",
    "verify_closed_form",
    "__version__",
]
