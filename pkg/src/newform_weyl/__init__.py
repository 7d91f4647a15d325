"""Exact Weyl-law coefficients for Maass newform counting functions on
Hecke congruence groups, with every closed form cross-checked against a
brute-force oracle."""

from .arith import (
    ArithFn,
    DEDEKIND_PSI,
    IDENTITY,
    MOBIUS,
    PRIMITIVE_CHAR_COUNT,
    SIGMA0,
    SIGMA0_INVERSE,
    TOTIENT,
    UNIT,
    convolve,
    dirichlet_convolve,
    dirichlet_inverse,
    inverse,
    mangoldt_log,
    sigma,
    standard_fn,
)
from .characters import character_conductors, primitive_char_count_oracle
from .exactnum import (
    LogCombination,
    Rational,
    SymbolicCoefficient,
    numeric_eval,
    times_neg_half_pi,
)
from .sieve import PrimeFactorization, divisors, factorize, is_prime, primes_up_to
from .spectral import (
    CocompactClassification,
    CoefficientTriple,
    Level,
    WeylTerms,
    c2_nonzero_criterion,
    classify_cocompact,
    cusp_count,
    cusp_count_oracle,
    full_level_coeffs,
    index_and_area,
    log_scattering_constant,
    newform_coeffs,
    newform_cusp_count,
    newform_cusp_count_oracle,
    newform_index,
    newform_index_euler_product,
    newform_index_oracle,
    newform_index_series,
    newform_log_scattering,
    newform_log_scattering_oracle,
    weyl_main_terms,
    zeta_euler_product,
    zeta_ratio_reference,
)
from .verification import CheckResult, run_suite

__version__ = "0.1.0"
