"""Typed domain errors for screening-test calculations.

Every failure mode of the closed-form operations maps to one of these
exception classes, so callers (CLI, HTTP service, tests) can react to the
error *kind* rather than parsing messages. Nothing here is recoverable by
retrying: each one marks an input that the underlying formula cannot
accept.
"""


class ScreeningError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidProbability(ScreeningError, ValueError):
    """A probability field is outside [0, 1] or not a finite number."""


class SpecificityOne(ScreeningError):
    """LR+ = sensitivity / (1 - specificity) is undefined at specificity 1.

    A perfect-specificity test trivially confirms disease on the first
    positive, but the likelihood-ratio formulas are singular there, so the
    operations that need LR+ refuse the input instead of inventing an
    infinity.
    """


class EpsilonOne(ScreeningError):
    """Prevalence threshold is undefined when sensitivity + specificity = 1.

    That family of tests is uninformative: the PPV curve degenerates to a
    straight line with no curvature maximum.
    """


class DegenerateTest(ScreeningError):
    """The conditioning event has probability zero under the model.

    E.g. asking for PPV when no positive result can occur (sensitivity 0
    with prevalence 1), or posting a test result whose probability is zero
    given the current prior.
    """


class InvalidTarget(ScreeningError, ValueError):
    """Requested target predictive value lies outside (0, 1)."""


class InfeasibleTarget(ScreeningError):
    """No finite number of tests can reach the requested target.

    Raised for a target of exactly 1 with prior < 1 (the iteration-count
    limit does not exist) and for a zero prior, which no run of positive
    results can move.
    """


class InvalidAxis(ScreeningError, ValueError):
    """A reference-table axis is empty, unordered, or out of domain."""
