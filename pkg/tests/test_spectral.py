"""Level invariants, coefficient triples, classification, series, main terms."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from newform_weyl.exactnum import LogCombination, SymbolicCoefficient, numeric_eval
from newform_weyl.sieve import divisors
from newform_weyl.spectral import (
    REASON_FOUR_EXACT,
    REASON_NOT,
    REASON_TWO_PRIMES,
    CocompactClassification,
    CoefficientTriple,
    Level,
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
    zeta_ratio_reference,
)


def logs(mapping):
    return LogCombination.from_mapping(mapping)


# ------------------------------------------------------------------- levels


def test_level_decomposition():
    lv = Level.of(360)  # 2**3 * 3**2 * 5
    assert lv.M == 360
    assert lv.square_part**2 * lv.squarefree_part == 360
    assert lv.square_part == 6 and lv.squarefree_part == 10
    assert Level.of(1).square_part == 1 and Level.of(1).squarefree_part == 1
    assert Level.of(49).square_part == 7 and Level.of(49).squarefree_part == 1


# -------------------------------------------------------------- cusp counts


def test_cusp_count_values():
    expected = {1: 1, 2: 2, 3: 2, 4: 3, 6: 4, 8: 4, 12: 6, 16: 6, 36: 12}
    for M, k in expected.items():
        assert cusp_count(M) == k, M


def test_cusp_count_matches_gcd_oracle():
    for M in range(1, 400):
        assert cusp_count(M) == cusp_count_oracle(M), M


def test_index_and_area():
    assert index_and_area(1) == (1, Fraction(1, 3))
    assert index_and_area(12) == (24, Fraction(8))
    assert index_and_area(97) == (98, Fraction(98, 3))


# --------------------------------------------------------- scattering logs


def test_log_scattering_values():
    assert log_scattering_constant(1).is_zero()
    for p in (2, 3, 5, 7):
        assert log_scattering_constant(p) == logs({p: 2}), p
    assert log_scattering_constant(4) == logs({2: 5})
    assert log_scattering_constant(8) == logs({2: 10})
    assert log_scattering_constant(16) == logs({2: 20})
    assert log_scattering_constant(9) == logs({3: 7})
    assert log_scattering_constant(6) == logs({2: 4, 3: 4})
    assert log_scattering_constant(12) == logs({2: 10, 3: 6})


# ------------------------------------------------------- newform quantities


def test_newform_cusp_count_values():
    assert newform_cusp_count(1) == 1
    for p in (2, 3, 5, 7, 11):
        assert newform_cusp_count(p) == 0
        assert newform_cusp_count(p**3) == 0
        assert newform_cusp_count(p**2) == p - 2
    assert newform_cusp_count(4) == 0
    assert newform_cusp_count(9) == 1
    assert newform_cusp_count(16) == 1  # (p-1)**2 * p**(n-2) at p=2, n=2
    assert newform_cusp_count(64) == 2
    assert newform_cusp_count(81) == 4
    assert newform_cusp_count(36) == 0
    assert newform_cusp_count(225) == 3  # 15**2 = U(9)*U(25) = 1*3


def test_newform_cusp_count_matches_oracle():
    for M in range(1, 400):
        assert newform_cusp_count(M) == newform_cusp_count_oracle(M), M


def test_newform_index_values():
    assert newform_index(1) == 1
    assert newform_index(2) == 1
    assert newform_index(4) == 1
    assert newform_index(3) == 2
    assert newform_index(8) == 3
    assert newform_index(9) == 5
    assert newform_index(12) == 2
    assert [M for M in range(1, 2000) if newform_index(M) == 1] == [1, 2, 4]


def test_newform_index_matches_oracle():
    for M in range(1, 400):
        assert newform_index(M) == newform_index_oracle(M), M


def test_newform_log_scattering_values():
    assert newform_log_scattering(1).is_zero()
    assert newform_log_scattering(2) == logs({2: 2})
    assert newform_log_scattering(4) == logs({2: 1})
    assert newform_log_scattering(8) == logs({2: 2})
    assert newform_log_scattering(9) == logs({3: 3})
    assert newform_log_scattering(16) == logs({2: 5})
    assert newform_log_scattering(12).is_zero()
    assert newform_log_scattering(36) == logs({2: 1})  # U(9)*L(4)


def test_newform_log_scattering_matches_oracle():
    for M in range(1, 300):
        assert newform_log_scattering(M) == newform_log_scattering_oracle(M), M


def test_log_scattering_never_zero_at_prime_powers():
    from newform_weyl.sieve import PrimeFactorization

    for p in (2, 3, 5, 7, 11, 13):
        for e in range(1, 9):
            pf = PrimeFactorization(((p, e),))
            assert not newform_log_scattering(pf).is_zero(), (p, e)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=3000), st.integers(min_value=1, max_value=3000))
def test_splitting_law(a, b):
    """At coprime levels the newform log term splits through the cusp count."""
    if math.gcd(a, b) != 1:
        return
    lhs = newform_log_scattering(a * b)
    rhs = newform_cusp_count(a) * newform_log_scattering(b) + newform_cusp_count(
        b
    ) * newform_log_scattering(a)
    assert lhs == rhs
    assert newform_cusp_count(a * b) == newform_cusp_count(a) * newform_cusp_count(b)
    assert newform_index(a * b) == newform_index(a) * newform_index(b)


# -------------------------------------------------------------- coefficients


def test_full_coeffs_level_1():
    t = full_level_coeffs(1)
    assert t.c1 == Fraction(1, 12)
    assert t.c2 == SymbolicCoefficient(const=Fraction(-2))
    assert t.c3 == SymbolicCoefficient(
        const=Fraction(2), log_pi=Fraction(1), logs=logs({2: -1})
    )


def test_newform_coeffs_level_1_equals_full():
    full, new = full_level_coeffs(1), newform_coeffs(1)
    assert (full.c1, full.c2, full.c3) == (new.c1, new.c2, new.c3)


def test_newform_coeffs_level_9():
    t = newform_coeffs(9)
    assert t.c1 == Fraction(5, 12)
    assert t.c2 == SymbolicCoefficient(const=Fraction(-2))
    assert t.c3.logs == logs({2: -1, 3: -3})
    assert t.c3.const == 2 and t.c3.log_pi == 1


def test_newform_coeffs_level_12_all_sqrt_terms_vanish():
    t = newform_coeffs(12)
    assert t.c1 == Fraction(1, 6)
    assert t.c2.is_zero()
    assert t.c3.is_zero()


def test_coefficient_triple_validation():
    with pytest.raises(ValueError):
        CoefficientTriple(
            1,
            "bogus",
            Fraction(1),
            SymbolicCoefficient.zero(),
            SymbolicCoefficient.zero(),
        )
    with pytest.raises(ValueError):
        CoefficientTriple(
            1,
            "full",
            Fraction(0),
            SymbolicCoefficient.zero(),
            SymbolicCoefficient.zero(),
        )


def test_transfer_identity_exact():
    """Summing sigma0(M/K)-weighted newform coefficients over K | M recovers
    the full-spectrum coefficients at M, exactly, component by component."""
    from newform_weyl.arith import SIGMA0

    for M in (1, 2, 8, 12, 36, 72, 360, 2310):
        full = full_level_coeffs(M)
        acc1, acc2, acc3 = (
            Fraction(0),
            SymbolicCoefficient.zero(),
            SymbolicCoefficient.zero(),
        )
        for K in divisors(M):
            w = SIGMA0(M // K)
            t = newform_coeffs(K)
            acc1 += w * t.c1
            acc2 += w * t.c2
            acc3 += w * t.c3
        assert acc1 == full.c1, M
        assert acc2 == full.c2, M
        assert acc3 == full.c3, M


# -------------------------------------------------------------- classification


def test_classifier_examples():
    assert classify_cocompact(1) == CocompactClassification(1, False, REASON_NOT)
    assert classify_cocompact(6) == CocompactClassification(6, True, REASON_TWO_PRIMES)
    assert classify_cocompact(12) == CocompactClassification(12, True, REASON_FOUR_EXACT)
    assert classify_cocompact(8).verdict is False
    assert classify_cocompact(36).verdict is False
    assert classify_cocompact(45).verdict is False
    assert classify_cocompact(10).verdict is True


def test_classifier_oracle_agrees_with_theorem():
    for M in range(1, 600):
        thm = classify_cocompact(M, method="theorem")
        orc = classify_cocompact(M, method="oracle")
        assert thm.verdict == orc.verdict, M
        assert thm.reason == orc.reason, M
        assert orc.verdict == (orc.c2_is_zero and orc.log_term_is_zero), M


def test_classifier_rejects_unknown_method():
    with pytest.raises(ValueError):
        classify_cocompact(6, method="guess")


def test_c2_nonzero_criterion():
    assert c2_nonzero_criterion(1) is True
    assert c2_nonzero_criterion(9) is True
    assert c2_nonzero_criterion(16) is True
    assert c2_nonzero_criterion(144) is True
    assert c2_nonzero_criterion(4) is False
    assert c2_nonzero_criterion(36) is False
    assert c2_nonzero_criterion(100) is False
    assert c2_nonzero_criterion(12) is False
    for M in range(1, 600):
        assert c2_nonzero_criterion(M) == (newform_cusp_count(M) != 0), M


# ------------------------------------------------------------ Dirichlet series


def test_euler_local_factor_p2_s3():
    # single factor at p=2, s=3: (1 - 1/64)(1 - 1/8)/(1 - 1/4) = 147/128
    assert newform_index_euler_product(3.0, 2) == pytest.approx(147 / 128, rel=1e-12)


def test_euler_product_matches_zeta_ratio():
    ep = newform_index_euler_product(3.0, 10**4)
    ref = zeta_ratio_reference(3.0, 10**4)
    assert abs(ep - ref) < 1e-9


def test_euler_product_matches_direct_sum():
    ep = newform_index_euler_product(3.0, 10**4)
    direct = newform_index_series(3.0, 10**4)
    assert abs(ep - direct) < 1e-4
    ep4 = newform_index_euler_product(4.0, 10**4)
    direct4 = newform_index_series(4.0, 10**4)
    assert abs(ep4 - direct4) < 1e-8


def test_series_domain_errors():
    with pytest.raises(ValueError):
        newform_index_euler_product(2.0, 100)
    with pytest.raises(ValueError):
        newform_index_euler_product(3.0, 1)
    with pytest.raises(ValueError):
        newform_index_euler_product(3.0, 10**7)
    with pytest.raises(ValueError):
        newform_index_series(1.5, 10)


# ------------------------------------------------------------------ main terms


def test_weyl_main_terms_level_1():
    terms = weyl_main_terms(full_level_coeffs(1), 10**4)
    assert terms.area_term == pytest.approx(10000 / 12, rel=1e-12)
    assert terms.cusp_log_term == pytest.approx(-293.1742, abs=5e-4)
    assert terms.scattering_term == pytest.approx(78.0363, abs=5e-4)
    assert terms.total == pytest.approx(
        terms.area_term + terms.cusp_log_term + terms.scattering_term, rel=1e-12
    )
    assert terms.error_scale == pytest.approx(100 / math.log(100), rel=1e-12)


def test_weyl_main_terms_consistency():
    lam = 5000.0
    t = weyl_main_terms(newform_coeffs(9), lam)
    root = math.sqrt(lam)
    assert t.area_term == pytest.approx(float(Fraction(5, 12)) * lam, rel=1e-12)
    c2 = float(numeric_eval(newform_coeffs(9).c2, 17))
    assert t.cusp_log_term == pytest.approx(c2 * root * math.log(root), rel=1e-12)


def test_weyl_main_terms_domain():
    coeffs = full_level_coeffs(1)
    with pytest.raises(ValueError):
        weyl_main_terms(coeffs, 1.0)
    with pytest.raises(ValueError):
        weyl_main_terms(coeffs, 0.5)
