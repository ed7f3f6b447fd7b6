"""Semi-infinite oscillatory integrals with end-point tail corrections."""

from ._osctail import (
    ConfigurationError,
    ConvergenceError,
    CorrectionResult,
    CorrectionSpec,
    DerivativeSource,
    DomainError,
    Error,
    EvaluationError,
    IntegralResult,
    Integrand,
    KernelKind,
    NumericError,
    OscillatoryKernel,
    QuadratureConfig,
    RangeError,
    TruncationPoint,
    TruncationRule,
    correct_extrema,
    correct_series,
    correct_zeroth,
    cycle_breakpoints,
    error_estimate,
    figure,
    integrate_finite,
    integrate_left_tail,
    integrate_semi_infinite,
    reference,
    run_criterion,
    select_truncation,
    table,
)

__all__ = [name for name in dir() if not name.startswith("_")]
