"""Mean-field fairness model of a chain of 802.11 sender-receiver pairs.

The chain couples each pair's emission probability to its neighbors'
silence; this package solves the resulting fixed-point system, optimizes
the entropy fairness index over the access intensity alpha, maps alpha to
802.11b packet sizes, fits alpha to measured traces, and cross-checks the
mean-field answer against a slot-level stochastic simulation.
"""

from .asymptotics import (
    RingSolution,
    alpha_for_ring_prob,
    circle_backoff_mc,
    flat_value,
    optimal_alpha_curve,
    ring_fixed_point,
)
from .errors import ChainFairError, ConvergenceError, DomainError, FitError
from .fairness import (
    AdjointState,
    J,
    J_prime,
    OptResult,
    adjoint_state,
    maximize_J,
    sweep_J,
)
from .fit import (
    FitResult,
    ThroughputTrace,
    compare_normalized,
    fit_alpha,
    model_ratios,
    normalize,
    read_trace_csv,
    write_trace_csv,
)
from .model import (
    ChainParams,
    apply_F,
    closed_form_n3,
    closed_form_n4,
    entropy,
    grad_entropy,
    jacobian_F,
    jacobian_bands,
)
from .sim import (
    MarginalEstimate,
    SimConfig,
    SlotState,
    exact_stationary,
    independent_sets,
    meanfield_gap,
    sim_step,
    simulate,
)
from .solver import (
    ContractionCertificate,
    SolveOptions,
    contraction_check,
    fixed_point_solve,
    newton_solve,
    residual,
)
from .timing import (
    FrameSpec,
    MacTiming,
    alpha_of_packet,
    packet_for_alpha,
    t_send,
    t_wait,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointState",
    "ChainFairError",
    "ChainParams",
    "ContractionCertificate",
    "ConvergenceError",
    "DomainError",
    "FitError",
    "FitResult",
    "FrameSpec",
    "J",
    "J_prime",
    "MacTiming",
    "MarginalEstimate",
    "OptResult",
    "RingSolution",
    "SimConfig",
    "SlotState",
    "SolveOptions",
    "ThroughputTrace",
    "adjoint_state",
    "alpha_for_ring_prob",
    "alpha_of_packet",
    "apply_F",
    "circle_backoff_mc",
    "closed_form_n3",
    "closed_form_n4",
    "compare_normalized",
    "contraction_check",
    "entropy",
    "exact_stationary",
    "fit_alpha",
    "fixed_point_solve",
    "flat_value",
    "grad_entropy",
    "independent_sets",
    "jacobian_F",
    "jacobian_bands",
    "maximize_J",
    "meanfield_gap",
    "model_ratios",
    "newton_solve",
    "normalize",
    "optimal_alpha_curve",
    "packet_for_alpha",
    "read_trace_csv",
    "residual",
    "ring_fixed_point",
    "sim_step",
    "simulate",
    "sweep_J",
    "t_send",
    "t_wait",
    "write_trace_csv",
]
