"""Half-plane growth bounds for genus-0 entire functions with only
negative zeros: model adapters, the bound chain, and a verification
harness that emits structured pass/fail records."""

from .bound import (BoundReport, bound_exponent, evaluate_chain,
                    intermediate_exponent, log_ratio_integral, midpoint_rho,
                    optimize_rho)
from .errors import (ConvergenceError, DivergenceError, DomainError,
                     EvaluationOverflowError, G0BoundError,
                     InsufficientZerosError)
from .models import MODEL_NAMES, build_model, default_fleet, toy_square_model
from .verify import (GridSpec, VerificationRecord, records_to_csv,
                     records_to_jsonl, run_all, run_identity_suite,
                     run_inequality_suite, run_monotonicity_suite)
from .zeros import (FunctionModel, ZeroSequence, model_from_zeros, phi,
                    sup_weighted_phi, zero_sum)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConvergenceError",
    "DivergenceError",
    "DomainError",
    "EvaluationOverflowError",
    "FunctionModel",
    "G0BoundError",
    "GridSpec",
    "InsufficientZerosError",
    "MODEL_NAMES",
    "VerificationRecord",
    "ZeroSequence",
    "bound_exponent",
    "build_model",
    "default_fleet",
    "evaluate_chain",
    "intermediate_exponent",
    "log_ratio_integral",
    "midpoint_rho",
    "model_from_zeros",
    "optimize_rho",
    "phi",
    "records_to_csv",
    "records_to_jsonl",
    "run_all",
    "run_identity_suite",
    "run_inequality_suite",
    "run_monotonicity_suite",
    "sup_weighted_phi",
    "toy_square_model",
    "zero_sum",
    "__version__",
]
