"""Exact arithmetic engines and a machine-verification harness for the
psi/omega family of double-indexed integer sequences."""

from .scalars import (
    GOLDEN,
    LocalizationError,
    ModInt,
    QuadExt,
    RingMismatchError,
    SQRT2,
    SQRT3,
    SQRT5,
    ScalarParseError,
    divides_int,
    exact_div,
    format_scalar,
    parse_scalar,
    reduce_mod,
)
from .sequences import (
    DegeneratePointError,
    FibTable,
    KernelPointError,
    LambdaTable,
    OmegaTable,
    QPoint,
    SeqParams,
    TheoremViolationError,
    falling_factorial,
    fib_lambda_table,
    fibonacci,
    flipped_omega_coupling,
    lambda_from_omega,
    lambda_table,
    lucas,
    omega_closed,
    omega_table,
    omega_top,
    product_identity_check,
    psi_closed,
    psi_expansion_identity_check,
    psi_k_expand,
    psi_point,
    psi_pow2,
    psi_rec,
    rising_product,
    second_fundamental,
    second_fundamental_v2,
    sums_of_powers_check,
)
from .polynomials import (
    BiPoly,
    UniPoly,
    chebyshev_check,
    chebyshev_polynomial,
    dickson_check,
    dickson_polynomial,
    dir_derivative,
    psi_bipoly,
    psi_k_poly,
    verify_derivative_expansion,
    verify_diff_ladder,
    verify_fundamental_psi,
)
from .primes import (
    EmergenceResult,
    FeasibilityError,
    Harmonic,
    PrimeCache,
    combinatorial_identity_check,
    emergence_check,
    emergence_combination_check,
    fermat_representation,
    first_odd_primes_check,
    harmonic_congruence_check,
    harmonic_number,
    is_prime,
    lagarias_check,
    lagarias_sweep,
    lambda_emergence_check,
    lucas_fib_representations,
    lucas_lehmer,
    mersenne_divisibility_equiv,
    mersenne_representation,
    mersenne_test,
    nth_prime,
    omega_space_probe,
    perfect_number_check,
    primes_upto,
    sigma,
)
from .verify import (
    OMEGA_TOUCHING_IDS,
    REGISTRY,
    SPECIAL_TABLES,
    TheoremCheck,
    TheoremReport,
    mutation_sensitivity,
    reports_to_csv,
    run_all,
    run_check,
)

__version__ = "0.1.0"
