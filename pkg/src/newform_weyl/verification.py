"""Cross-checking suites: closed forms against brute-force oracles, the
randomized convolution group laws, and the classification equivalences.

Each check returns a :class:`CheckResult`; the CLI ``verify`` command and
the acceptance tests print one line per check.  All randomness is seeded,
so every run of a suite is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .arith import (
    DEDEKIND_PSI,
    IDENTITY,
    MOBIUS,
    PRIMITIVE_CHAR_COUNT,
    SIGMA0,
    SIGMA0_INVERSE,
    TOTIENT,
    UNIT,
    ArithFn,
    convolve,
    inverse,
    sigma,
)
from .characters import primitive_char_count_oracle
from .exactnum import LogCombination, times_neg_half_pi
from .sieve import PrimeFactorization, divisor_pairs, divisors, factorize, primes_up_to
from .spectral import (
    REASON_NOT,
    c2_nonzero_criterion,
    classify_cocompact,
    cusp_count,
    cusp_count_fn,
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
    zeta_ratio_reference,
)

DEFAULT_SEED = 20260819

CLOSED_FORM_NOTE = (
    "newform cusp count at p**(2n), n > 1: the closed form is (p-1)**2 * p**(n-2); "
    "the superficially similar (p+1)**2 * p**(n-1) fails the sigma0-inverse "
    "convolution and is rejected by the oracle"
)

__all__ = ["CheckResult", "DEFAULT_SEED", "SUITES", "run_suite"]


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""
    notes: tuple[str, ...] = ()


# --- deterministic pseudo-random exact values ---


def _mix(*xs: int) -> int:
    h = 0x9E3779B97F4A7C15
    for x in xs:
        h ^= x + 0x9E3779B97F4A7C15
        h = (h * 0xBF58476D1CE4E5B9) % (1 << 64)
        h ^= h >> 31
    return h


def _hash_fraction(seed: int, n: int, lo: int = -9, hi: int = 9) -> Fraction:
    h = _mix(seed, n)
    num = lo + h % (hi - lo + 1)
    den = 1 + (h >> 32) % 6
    return Fraction(num, den)


def _random_arith_fn(seed: int, name: str) -> ArithFn:
    def eval_at(n: int) -> Fraction:
        val = _hash_fraction(seed, n)
        if n == 1 and val == 0:
            return Fraction(1)
        return val

    return ArithFn(name, eval_at=eval_at)


def _random_multiplicative_fn(seed: int, name: str) -> ArithFn:
    def kernel(p: int, e: int) -> Fraction:
        if e == 0:
            return Fraction(1)
        return _hash_fraction(_mix(seed, p), e, -5, 5)

    return ArithFn(name, kernel=kernel, multiplicative=True)


def _generic_view(f: ArithFn, name: str) -> ArithFn:
    # same values, but stripped of kernel and flag so convolution and
    # inversion take the generic divisor-sum path
    return ArithFn(name, eval_at=lambda n: f(n), multiplicative=False)


# --- arithmetic core: group laws and multiplicativity ---


def check_group_laws(instances: int = 600, seed: int = DEFAULT_SEED) -> CheckResult:
    """Commutativity, associativity, identity and inverse of Dirichlet
    convolution on randomized functions with f(1) != 0."""
    rng = random.Random(seed)
    for i in range(instances):
        f = _random_arith_fn(_mix(seed, 3 * i), "f")
        g = _random_arith_fn(_mix(seed, 3 * i + 1), "g")
        h = _random_arith_fn(_mix(seed, 3 * i + 2), "h")
        n = rng.randint(1, 2000)
        fg = convolve(f, g)
        if fg(n) != convolve(g, f)(n):
            return CheckResult("group-laws", False, i + 1, f"commutativity at n={n}")
        if convolve(fg, h)(n) != convolve(f, convolve(g, h))(n):
            return CheckResult("group-laws", False, i + 1, f"associativity at n={n}")
        if convolve(f, IDENTITY)(n) != f(n):
            return CheckResult("group-laws", False, i + 1, f"identity at n={n}")
        expected = Fraction(1 if n == 1 else 0)
        if convolve(f, inverse(f))(n) != expected:
            return CheckResult("group-laws", False, i + 1, f"inverse at n={n}")
    return CheckResult("group-laws", True, instances)


def check_multiplicative_closure(
    instances: int = 400, seed: int = DEFAULT_SEED + 1
) -> CheckResult:
    """Convolutions and inverses of multiplicative functions stay
    multiplicative, exercised through the generic divisor-sum path."""
    rng = random.Random(seed)
    for i in range(instances):
        f = _generic_view(_random_multiplicative_fn(_mix(seed, 2 * i), "mf"), "f")
        g = _generic_view(_random_multiplicative_fn(_mix(seed, 2 * i + 1), "mg"), "g")
        while True:
            m = rng.randint(2, 100)
            n = rng.randint(2, 100)
            if gcd(m, n) == 1:
                break
        fg = convolve(f, g)
        if fg(m * n) != fg(m) * fg(n):
            return CheckResult(
                "multiplicative-closure", False, i + 1, f"product at ({m},{n})"
            )
        finv = inverse(f)
        if finv(m * n) != finv(m) * finv(n):
            return CheckResult(
                "multiplicative-closure", False, i + 1, f"inverse at ({m},{n})"
            )
    return CheckResult("multiplicative-closure", True, instances)


def check_declared_flags(n_max: int = 300) -> CheckResult:
    """Declared multiplicativity of the standard functions is real."""
    fns = [IDENTITY, UNIT, MOBIUS, TOTIENT, SIGMA0, sigma(1), sigma(2),
           SIGMA0_INVERSE, DEDEKIND_PSI, PRIMITIVE_CHAR_COUNT]
    checked = 0
    for f in fns:
        assert f.multiplicative
        for m in range(2, n_max):
            for n in range(m + 1, n_max):
                if m * n > n_max or gcd(m, n) != 1:
                    continue
                checked += 1
                if f(m * n) != f(m) * f(n):
                    return CheckResult(
                        "declared-flags", False, checked, f"{f.name} at ({m},{n})"
                    )
    return CheckResult("declared-flags", True, checked)


# --- closed forms against oracles ---


def check_prime_power_closed_forms(p_max: int = 50, e_max: int = 12) -> CheckResult:
    """Exact equality of every prime-power closed form with its
    brute-force divisor-sum oracle, plus never-vanishing of the log term."""
    psi_transfer = convolve(DEDEKIND_PSI, SIGMA0_INVERSE)
    cusp_transfer = convolve(cusp_count_fn, SIGMA0_INVERSE)
    checked = 0
    for p in primes_up_to(p_max):
        for e in range(1, e_max + 1):
            pf = PrimeFactorization(((p, e),))
            checked += 1
            if cusp_count(pf) != cusp_count_oracle(pf):
                return CheckResult(
                    "prime-power-closed-forms", False, checked, f"cusp count at {p}^{e}"
                )
            if newform_index(pf) != psi_transfer(pf):
                return CheckResult(
                    "prime-power-closed-forms", False, checked,
                    f"newform index at {p}^{e}",
                )
            if newform_cusp_count(pf) != newform_cusp_count_oracle(pf):
                return CheckResult(
                    "prime-power-closed-forms", False, checked,
                    f"newform cusp count at {p}^{e}",
                )
            if newform_cusp_count(pf) != cusp_transfer(pf):
                return CheckResult(
                    "prime-power-closed-forms", False, checked,
                    f"cusp transfer at {p}^{e}",
                )
            if times_neg_half_pi(newform_coeffs(pf).c2) != cusp_transfer(pf):
                return CheckResult(
                    "prime-power-closed-forms", False, checked,
                    f"-(pi/2)*c2 at {p}^{e}",
                )
            log_term = newform_log_scattering(pf)
            if log_term != newform_log_scattering_oracle(pf):
                return CheckResult(
                    "prime-power-closed-forms", False, checked,
                    f"newform log term at {p}^{e}",
                )
            if log_term.is_zero():
                return CheckResult(
                    "prime-power-closed-forms", False, checked,
                    f"log term unexpectedly zero at {p}^{e}",
                )
    return CheckResult(
        "prime-power-closed-forms", True, checked, notes=(CLOSED_FORM_NOTE,)
    )


def check_sigma_inverse_formula(n_max: int = 10**4) -> CheckResult:
    """sigma0-inverse kernel == sum_{d|n} mu(d) mu(n/d) == Dirichlet inverse."""
    sigma0_inv = inverse(SIGMA0)
    for n in range(1, n_max + 1):
        pf = factorize(n)
        mumu = sum(MOBIUS(d) * MOBIUS(q) for d, q in divisor_pairs(pf))
        if SIGMA0_INVERSE(pf) != mumu or sigma0_inv(pf) != mumu:
            return CheckResult("sigma0-inverse-formula", False, n, f"at n={n}")
    return CheckResult("sigma0-inverse-formula", True, n_max)


def check_primitive_count_oracle(k_max: int = 200) -> CheckResult:
    """Closed-form primitive character count vs explicit enumeration."""
    for k in range(1, k_max + 1):
        if PRIMITIVE_CHAR_COUNT(k) != primitive_char_count_oracle(k):
            return CheckResult("primitive-count-oracle", False, k, f"at K={k}")
    return CheckResult("primitive-count-oracle", True, k_max)


def check_totient_decomposition(n_max: int = 10**4) -> CheckResult:
    """Totient == divisor sum of primitive character counts."""
    for n in range(1, n_max + 1):
        pf = factorize(n)
        total = sum(PRIMITIVE_CHAR_COUNT(d) for d, _ in divisor_pairs(pf))
        if TOTIENT(pf) != total:
            return CheckResult("totient-decomposition", False, n, f"at K={n}")
    return CheckResult("totient-decomposition", True, n_max)


def check_splitting_law(pair_bound: int = 60, closed_bound: int = 10**4) -> CheckResult:
    """Coprime splitting of the newform log term.

    Oracle route for small coprime pairs, closed-form consistency for a
    deterministic sweep of larger pairs with product <= closed_bound.
    """
    checked = 0
    for a in range(1, pair_bound + 1):
        for b in range(a + 1, pair_bound + 1):
            if gcd(a, b) != 1:
                continue
            checked += 1
            combined = newform_log_scattering_oracle(a * b)
            split = (
                newform_cusp_count(a) * newform_log_scattering(b)
                + newform_cusp_count(b) * newform_log_scattering(a)
            )
            if combined != split:
                return CheckResult("splitting-law", False, checked, f"oracle ({a},{b})")
    for a in range(2, 200):
        b = closed_bound // a
        while b > 1 and gcd(a, b) != 1:
            b -= 1
        if b <= 1:
            continue
        checked += 1
        split = (
            newform_cusp_count(a) * newform_log_scattering(b)
            + newform_cusp_count(b) * newform_log_scattering(a)
        )
        if newform_log_scattering(a * b) != split:
            return CheckResult("splitting-law", False, checked, f"closed ({a},{b})")
    return CheckResult("splitting-law", True, checked)


def check_transfer_identity(m_max: int = 10**4) -> CheckResult:
    """sum_{K|M} sigma0(M/K) * c_i_new(K) == c_i(M) exactly, i = 1,2,3.

    Verified component-wise: the divisor-count transfer must rebuild the
    index, the cusp count, and the full scattering log term from the
    newform data.
    """
    idx_new = [0] * (m_max + 1)
    cusp_new = [0] * (m_max + 1)
    log_new: list[tuple[tuple[int, Fraction], ...]] = [()] * (m_max + 1)
    for k in range(1, m_max + 1):
        idx_new[k] = newform_index(k)
        cusp_new[k] = newform_cusp_count(k)
        log_new[k] = newform_log_scattering(k).terms
    sigma0 = [0] * (m_max + 1)
    for k in range(1, m_max + 1):
        sigma0[k] = len(divisors(k))
    for m in range(1, m_max + 1):
        s_idx = 0
        s_cusp = 0
        logs: dict[int, Fraction] = {}
        for k in divisors(m):
            c = sigma0[m // k]
            s_idx += c * idx_new[k]
            u = cusp_new[k]
            if u:
                s_cusp += c * u
                logs[2] = logs.get(2, Fraction(0)) - c * u
            for p, coeff in log_new[k]:
                logs[p] = logs.get(p, Fraction(0)) - c * coeff
        idx, _ = index_and_area(m)
        if s_idx != idx:
            return CheckResult("transfer-identity", False, m, f"c1 at M={m}")
        kc = cusp_count(m)
        if s_cusp != kc:
            return CheckResult("transfer-identity", False, m, f"c2 at M={m}")
        target = LogCombination.from_mapping(
            {2: Fraction(-kc)}
        ) - log_scattering_constant(m)
        if LogCombination.from_mapping(logs) != target:
            return CheckResult("transfer-identity", False, m, f"c3 logs at M={m}")
    return CheckResult("transfer-identity", True, m_max)


def check_transfer_identity_symbolic(m_max: int = 300) -> CheckResult:
    """The same transfer identity through the public coefficient API."""
    for m in range(1, m_max + 1):
        full = full_level_coeffs(m)
        c1 = Fraction(0)
        c2 = full.c2.zero()
        c3 = full.c3.zero()
        for k in divisors(m):
            weight = len(divisors(m // k))
            new = newform_coeffs(k)
            c1 += weight * new.c1
            c2 = c2 + weight * new.c2
            c3 = c3 + weight * new.c3
        if c1 != full.c1 or c2 != full.c2 or c3 != full.c3:
            return CheckResult("transfer-identity-symbolic", False, m, f"at M={m}")
    return CheckResult("transfer-identity-symbolic", True, m_max)


# --- classification scans ---


def check_classifier_equivalence(m_max: int = 10**5) -> CheckResult:
    """Theorem path and oracle path give the same verdict."""
    for m in range(1, m_max + 1):
        thm = classify_cocompact(m, method="theorem")
        orc = classify_cocompact(m, method="oracle")
        if thm.verdict != orc.verdict or thm.reason != orc.reason:
            return CheckResult("classifier-equivalence", False, m, f"at M={m}")
        if orc.verdict != (orc.c2_is_zero and orc.log_term_is_zero):
            return CheckResult("classifier-equivalence", False, m, f"witnesses at M={m}")
    return CheckResult("classifier-equivalence", True, m_max)


def check_c2_criterion(m_max: int = 10**5) -> CheckResult:
    """Square-root criterion for a surviving c2 == nonvanishing transfer."""
    for m in range(1, m_max + 1):
        if c2_nonzero_criterion(m) != (newform_cusp_count(m) != 0):
            return CheckResult("c2-nonzero-criterion", False, m, f"at M={m}")
    return CheckResult("c2-nonzero-criterion", True, m_max)


def check_minimal_density_levels(m_max: int = 10**5) -> CheckResult:
    """Levels with first newform coefficient exactly 1/12 are 1, 2, 4."""
    found = [m for m in range(1, m_max + 1) if newform_index(m) == 1]
    if found != [1, 2, 4]:
        return CheckResult("minimal-density-levels", False, m_max, f"got {found}")
    return CheckResult("minimal-density-levels", True, m_max)


def check_log_zero_structure(m_max: int = 10**5) -> CheckResult:
    """Newform log term vanishes iff the newform cusp count vanishes at
    two or more prime-power factors (levels M >= 2)."""
    from .spectral import _newform_cusp_pp  # kernel-level access for the scan

    for m in range(2, m_max + 1):
        pf = factorize(m)
        zeros = sum(1 for p, e in pf.pairs if _newform_cusp_pp(p, e) == 0)
        if newform_log_scattering(pf).is_zero() != (zeros >= 2):
            return CheckResult("log-zero-structure", False, m, f"at M={m}")
    return CheckResult("log-zero-structure", True, m_max - 1)


# --- Dirichlet series ---


def check_dirichlet_series(
    prime_bound: int = 10**5, n_direct: int = 10**4
) -> CheckResult:
    """Euler product of the newform index series vs the zeta ratio at the
    same truncation (1e-6) and vs direct partial sums (1e-4)."""
    ep = newform_index_euler_product(3.0, prime_bound)
    ref = zeta_ratio_reference(3.0, prime_bound)
    if abs(ep - ref) > 1e-6:
        return CheckResult(
            "dirichlet-series", False, 1, f"zeta ratio: |{ep} - {ref}|"
        )
    direct = newform_index_series(3.0, n_direct)
    if abs(ep - direct) > 1e-4:
        return CheckResult(
            "dirichlet-series", False, 2, f"direct sum: |{ep} - {direct}|"
        )
    ep4 = newform_index_euler_product(4.0, prime_bound)
    direct4 = newform_index_series(4.0, n_direct)
    if abs(ep4 - direct4) > 1e-8:
        return CheckResult(
            "dirichlet-series", False, 3, f"s=4 direct sum: |{ep4} - {direct4}|"
        )
    return CheckResult("dirichlet-series", True, 3)


# --- suite registry ---


def _suite_group(max_level: int | None) -> list[CheckResult]:
    return [
        check_group_laws(),
        check_multiplicative_closure(),
        check_declared_flags(),
    ]


def _suite_closed_forms(max_level: int | None) -> list[CheckResult]:
    n = max_level or 10**4
    return [
        check_prime_power_closed_forms(),
        check_sigma_inverse_formula(min(n, 10**4)),
        check_primitive_count_oracle(min(max_level or 200, 200)),
        check_totient_decomposition(min(n, 10**4)),
        check_splitting_law(),
        check_transfer_identity(min(n, 10**4)),
        check_transfer_identity_symbolic(),
    ]


def _suite_classifier(max_level: int | None) -> list[CheckResult]:
    n = max_level or 10**5
    return [
        check_classifier_equivalence(n),
        check_c2_criterion(n),
        check_minimal_density_levels(n),
        check_log_zero_structure(n),
    ]


def _suite_dirichlet(max_level: int | None) -> list[CheckResult]:
    return [check_dirichlet_series()]


SUITES = {
    "group": _suite_group,
    "closed-forms": _suite_closed_forms,
    "classifier": _suite_classifier,
    "dirichlet-series": _suite_dirichlet,
}


def run_suite(name: str, max_level: int | None = None) -> list[CheckResult]:
    """Run one named suite, or all of them."""
    if name == "all":
        out = []
        for suite in SUITES.values():
            out.extend(suite(max_level))
        return out
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return suite(max_level)
