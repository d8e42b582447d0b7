"""Riemann zeta for Re(s) > 1, three ways: Dirichlet partial sums, finite
Euler products over primes, and an equivalent prime-indexed sum of products,
each with certified truncation bounds, plus brute-force oracles that give
every closed form a structurally independent second computation path."""

from .kernel import (
    DEFAULT_SINGULAR_TOL,
    ExclusionWitness,
    PowerOverflowError,
    SingularPointError,
    as_complex,
    euler_factor,
    explicit_exclusion_point,
    explicit_exclusion_points,
    in_exclusion_set,
    power_term,
    prime_power_term,
    singular_point,
)
from .methods import (
    MAX_DIRICHLET_TERMS,
    MAX_PRIME_LIMIT,
    METHOD_DIRICHLET,
    METHOD_EULER_PRODUCT,
    METHOD_REFORMULATED,
    METHODS,
    MIN_EVAL_TOLERANCE,
    MIN_SPEC_TOLERANCE,
    EvaluationResult,
    NonConvergentError,
    TruncationSpec,
    convergence_trace,
    correction_coefficient,
    dirichlet_partial,
    euler_partial,
    identity_residual,
    induction_step_check,
    reform_partial,
    tail_bound,
    zeta_eval,
)
from .oracle import (
    PartitionTable,
    coefficient_crosscheck,
    smooth_sum_oracle,
    spf_partition_sum,
)
from .primes import (
    ENV_CACHE_PATH,
    PrimeCache,
    default_cache,
    first_primes,
    nth_prime,
    primes_up_to,
    reset_default_cache,
    smallest_prime_factor,
    smooth_numbers,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SINGULAR_TOL",
    "ENV_CACHE_PATH",
    "EvaluationResult",
    "ExclusionWitness",
    "MAX_DIRICHLET_TERMS",
    "MAX_PRIME_LIMIT",
    "METHODS",
    "METHOD_DIRICHLET",
    "METHOD_EULER_PRODUCT",
    "METHOD_REFORMULATED",
    "MIN_EVAL_TOLERANCE",
    "MIN_SPEC_TOLERANCE",
    "NonConvergentError",
    "PartitionTable",
    "PowerOverflowError",
    "PrimeCache",
    "SingularPointError",
    "TruncationSpec",
    "as_complex",
    "coefficient_crosscheck",
    "convergence_trace",
    "correction_coefficient",
    "default_cache",
    "dirichlet_partial",
    "euler_factor",
    "euler_partial",
    "explicit_exclusion_point",
    "explicit_exclusion_points",
    "first_primes",
    "identity_residual",
    "in_exclusion_set",
    "induction_step_check",
    "nth_prime",
    "power_term",
    "prime_power_term",
    "primes_up_to",
    "reform_partial",
    "reset_default_cache",
    "singular_point",
    "smallest_prime_factor",
    "smooth_numbers",
    "smooth_sum_oracle",
    "spf_partition_sum",
    "tail_bound",
    "zeta_eval",
    "__version__",
]
