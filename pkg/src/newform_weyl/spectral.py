"""Main-term coefficients of Maass-form counting functions on Hecke
congruence groups of level M, and their newform refinements.

The counting function of eigenvalues up to lambda has main terms

    c1*lambda + c2*sqrt(lambda)*log(sqrt(lambda)) + c3*sqrt(lambda)

with an error of order sqrt(lambda)/log(sqrt(lambda)).  For the full
spectrum, c1 is area/(4 pi) = index/12, c2 = -2*k/pi for the cusp count
k, and c3 collects the constant of the scattering determinant.  Sieving
the old classes out of the spectrum is a Dirichlet convolution with the
inverse of the divisor-count function, so each newform coefficient is
the sigma0-inverse transfer of its full-level counterpart.

Every closed form here has a brute-force counterpart (the *_oracle
functions) computing the same quantity from its defining divisor sum;
the verification suites insist on exact agreement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as _iproduct

from .arith import DEDEKIND_PSI, SIGMA0_INVERSE, ArithFn, convolve
from .exactnum import LogCombination, SymbolicCoefficient, numeric_eval
from .sieve import PrimeFactorization, factorize, primes_up_to

MAX_PRIME_BOUND = 10**6
MIN_SERIES_S = 2.5

REASON_TWO_PRIMES = "more-than-one-prime-in-n"
REASON_FOUR_EXACT = "n>1-and-4||M-rule"
REASON_NOT = "not-cocompact"

__all__ = [
    "CocompactClassification",
    "CoefficientTriple",
    "Level",
    "REASON_FOUR_EXACT",
    "REASON_NOT",
    "REASON_TWO_PRIMES",
    "WeylTerms",
    "c2_nonzero_criterion",
    "classify_cocompact",
    "cusp_count",
    "cusp_count_fn",
    "cusp_count_oracle",
    "full_level_coeffs",
    "index_and_area",
    "log_scattering_constant",
    "newform_coeffs",
    "newform_cusp_count",
    "newform_cusp_count_oracle",
    "newform_index",
    "newform_index_euler_product",
    "newform_index_oracle",
    "newform_index_series",
    "newform_log_scattering",
    "newform_log_scattering_oracle",
    "weyl_main_terms",
    "zeta_euler_product",
    "zeta_ratio_reference",
]


def _pf(x) -> PrimeFactorization:
    if isinstance(x, PrimeFactorization):
        return x
    if isinstance(x, Level):
        return x.factorization
    return factorize(x)


@dataclass(frozen=True)
class Level:
    """Level M split as M = square_part**2 * squarefree_part."""

    M: int
    factorization: PrimeFactorization
    square_part: int
    squarefree_part: int

    @classmethod
    def of(cls, M: int) -> "Level":
        pf = factorize(M)
        t = n = 1
        for p, e in pf.pairs:
            t *= p ** (e // 2)
            if e % 2:
                n *= p
        return cls(pf.value, pf, t, n)


# --- prime-power kernels (integer-valued; e = 0 gives 1 or 0 as appropriate) ---


def _totient_pp(p: int, e: int) -> int:
    return 1 if e == 0 else p**e - p ** (e - 1)


def _prim_char_count_pp(p: int, e: int) -> int:
    if e == 0:
        return 1
    return p - 2 if e == 1 else (p - 1) ** 2 * p ** (e - 2)


def _sigma0_inv_pp(e: int) -> int:
    return {0: 1, 1: -2, 2: 1}.get(e, 0)


def _cusp_pp(p: int, e: int) -> int:
    if e == 0:
        return 1
    if e == 1:
        return 2
    half, odd = divmod(e, 2)
    return 2 * p**half if odd else (p + 1) * p ** (half - 1)


def _newform_cusp_pp(p: int, e: int) -> int:
    if e == 0:
        return 1
    if e % 2:
        return 0
    n = e // 2
    return p - 2 if n == 1 else (p - 1) ** 2 * p ** (n - 2)


def _newform_index_pp(p: int, e: int) -> int:
    if e == 0:
        return 1
    if e == 1:
        return p - 1
    if e == 2:
        return p * p - p - 1
    return (p - 1) ** 2 * (p + 1) * p ** (e - 3)


def _log_weight_pp(p: int, e: int) -> int:
    """Coefficient of log p in the newform log term at level p**e."""
    if e == 0:
        return 0
    n, odd = divmod(e, 2)
    if odd:
        return 2 * sum(_prim_char_count_pp(p, j) for j in range(n + 1))
    return sum(_prim_char_count_pp(p, j) for j in range(n)) + e * _prim_char_count_pp(
        p, n
    )


# --- cusps, index, area ---


def cusp_count(M) -> int:
    """Number of cusps of the level-M Hecke congruence group."""
    out = 1
    for p, e in _pf(M).pairs:
        out *= _cusp_pp(p, e)
    return out


def cusp_count_oracle(M) -> int:
    """Cusp count from the defining sum of totients of gcd(d, M/d)."""
    pf = _pf(M)
    primes = [p for p, _ in pf.pairs]
    exps = [e for _, e in pf.pairs]
    total = 0
    for d in _iproduct(*(range(e + 1) for e in exps)):
        term = 1
        for p, i, e in zip(primes, d, exps):
            term *= _totient_pp(p, min(i, e - i))
        total += term
    return total


cusp_count_fn = ArithFn(
    "cusp_count", kernel=lambda p, e: Fraction(_cusp_pp(p, e)), multiplicative=True
)


def index_and_area(M) -> tuple[int, Fraction]:
    """Index of the level-M group in the modular group, and area/(pi).

    The fundamental domain area is (pi/3) * index; the second component
    returns the exact rational index/3.
    """
    idx = 1
    for p, e in _pf(M).pairs:
        idx *= p**e + p ** (e - 1)
    return idx, Fraction(idx, 3)


# --- scattering constant and its newform transfer ---


@lru_cache(maxsize=None)
def _log_scattering_pf(pf: PrimeFactorization) -> LogCombination:
    # sum over m | d, q | gcd(m, d/m) of (#primitive chars mod q) * log(q*d/gcd)
    primes = [p for p, _ in pf.pairs]
    exps = [e for _, e in pf.pairs]
    acc = {p: 0 for p in primes}
    for m in _iproduct(*(range(e + 1) for e in exps)):
        g = tuple(min(mi, e - mi) for mi, e in zip(m, exps))
        for q in _iproduct(*(range(gi + 1) for gi in g)):
            weight = 1
            for p, qi in zip(primes, q):
                weight *= _prim_char_count_pp(p, qi)
                if weight == 0:
                    break
            if weight == 0:
                continue
            for i, p in enumerate(primes):
                acc[p] += weight * (q[i] + exps[i] - g[i])
    return LogCombination.from_mapping({p: Fraction(c) for p, c in acc.items() if c})


def log_scattering_constant(M) -> LogCombination:
    """log of the constant in the scattering determinant at level M,
    as an exact prime-log combination."""
    return _log_scattering_pf(_pf(M))


def newform_cusp_count(M) -> int:
    """sigma0-inverse transfer of the cusp count (an integer; zero exactly
    when some prime enters M to an odd power or 4 exactly divides M)."""
    out = 1
    for p, e in _pf(M).pairs:
        out *= _newform_cusp_pp(p, e)
        if out == 0:
            return 0
    return out


def newform_cusp_count_oracle(M) -> int:
    """The same transfer from the literal triple divisor sum."""
    pf = _pf(M)
    primes = [p for p, _ in pf.pairs]
    exps = [e for _, e in pf.pairs]
    total = 0
    for d in _iproduct(*(range(e + 1) for e in exps)):
        w = 1
        for i, e in zip(d, exps):
            w *= _sigma0_inv_pp(e - i)
            if w == 0:
                break
        if w == 0:
            continue
        inner = 0
        for m in _iproduct(*(range(di + 1) for di in d)):
            g = tuple(min(mi, di - mi) for mi, di in zip(m, d))
            for q in _iproduct(*(range(gi + 1) for gi in g)):
                term = 1
                for p, qi in zip(primes, q):
                    term *= _prim_char_count_pp(p, qi)
                    if term == 0:
                        break
                inner += term
        total += w * inner
    return total


def newform_index(M) -> int:
    """sigma0-inverse transfer of the index (12 times the first newform
    coefficient)."""
    out = 1
    for p, e in _pf(M).pairs:
        out *= _newform_index_pp(p, e)
    return out


def newform_index_oracle(M) -> Fraction:
    """The same transfer computed as a convolution sum."""
    return convolve(DEDEKIND_PSI, SIGMA0_INVERSE)(_pf(M))


def newform_log_scattering(M) -> LogCombination:
    """sigma0-inverse transfer of the scattering log constant.

    Splits over coprime factors against the newform cusp count, so the
    coefficient of log p is the prime-power log weight times the product
    of the newform cusp counts at the other prime powers.
    """
    pf = _pf(M)
    factors = [(p, e, _newform_cusp_pp(p, e)) for p, e in pf.pairs]
    acc: dict[int, Fraction] = {}
    for i, (p, e, _) in enumerate(factors):
        coeff = _log_weight_pp(p, e)
        for j, (_, _, u) in enumerate(factors):
            if coeff == 0:
                break
            if j != i:
                coeff *= u
        if coeff:
            acc[p] = Fraction(coeff)
    return LogCombination.from_mapping(acc)


def newform_log_scattering_oracle(M) -> LogCombination:
    """The same transfer from the defining convolution with sigma0-inverse."""
    pf = _pf(M)
    exps = [e for _, e in pf.pairs]
    total = LogCombination()
    for d in _iproduct(*(range(e + 1) for e in exps)):
        w = 1
        for i, e in zip(d, exps):
            w *= _sigma0_inv_pp(e - i)
            if w == 0:
                break
        if w == 0:
            continue
        d_pf = PrimeFactorization(
            tuple((p, i) for (p, _), i in zip(pf.pairs, d) if i)
        )
        total = total + w * _log_scattering_pf(d_pf)
    return total


# --- the coefficient triples ---


@dataclass(frozen=True)
class CoefficientTriple:
    """Exact main-term coefficients of a counting function.

    c1 multiplies lambda, c2 multiplies sqrt(lambda)*log(sqrt(lambda)),
    c3 multiplies sqrt(lambda).
    """

    level: int
    kind: str  # "full" | "newform"
    c1: Fraction
    c2: SymbolicCoefficient
    c3: SymbolicCoefficient

    def __post_init__(self) -> None:
        if self.kind not in ("full", "newform"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "full" and self.c1 <= 0:
            raise ValueError("full-spectrum leading coefficient must be positive")


def _coeff_triple(level: int, kind: str, c1_num: int, weight: int,
                  logs: LogCombination) -> CoefficientTriple:
    # c2 = -2*weight/pi;  c3 = ((2 - log 2 + log pi)*weight - logs)/pi
    c2 = SymbolicCoefficient(const=Fraction(-2 * weight))
    c3_logs = LogCombination.from_mapping({2: Fraction(-weight)}) - logs
    c3 = SymbolicCoefficient(
        const=Fraction(2 * weight), log_pi=Fraction(weight), logs=c3_logs
    )
    return CoefficientTriple(level, kind, Fraction(c1_num, 12), c2, c3)


def full_level_coeffs(M) -> CoefficientTriple:
    """Main-term coefficients for the full spectrum at level M."""
    pf = _pf(M)
    idx, _ = index_and_area(pf)
    return _coeff_triple(
        pf.value, "full", idx, cusp_count(pf), log_scattering_constant(pf)
    )


def newform_coeffs(M) -> CoefficientTriple:
    """Main-term coefficients for the newform part of the spectrum."""
    pf = _pf(M)
    return _coeff_triple(
        pf.value,
        "newform",
        newform_index(pf),
        newform_cusp_count(pf),
        newform_log_scattering(pf),
    )


# --- cocompact-type classification ---


@dataclass(frozen=True)
class CocompactClassification:
    """Whether the newform counting function at this level has no
    sqrt(lambda)-scale main terms at all (the shape otherwise seen only
    for cocompact groups)."""

    level: int
    verdict: bool
    reason: str
    c2_is_zero: bool | None = None
    log_term_is_zero: bool | None = None


def _theorem_reason(lv: Level) -> str | None:
    odd_exponent_primes = sum(1 for _, e in lv.factorization.pairs if e % 2)
    if odd_exponent_primes >= 2:
        return REASON_TWO_PRIMES
    if (
        lv.squarefree_part > 1
        and lv.M % 4 == 0
        and (lv.M // 4) % 2 == 1
    ):
        return REASON_FOUR_EXACT
    return None


def classify_cocompact(M, method: str = "theorem") -> CocompactClassification:
    """Classify a level as of cocompact type or not.

    method="theorem" reads the verdict off the square/squarefree
    decomposition; method="oracle" tests exact vanishing of the newform
    cusp count and log term.  The two must agree (and the verification
    suite checks that they do).
    """
    lv = M if isinstance(M, Level) else Level.of(M)
    reason = _theorem_reason(lv)
    if method == "theorem":
        return CocompactClassification(lv.M, reason is not None, reason or REASON_NOT)
    if method != "oracle":
        raise ValueError(f"unknown classification method {method!r}")
    c2_zero = newform_cusp_count(lv.factorization) == 0
    log_zero = newform_log_scattering(lv.factorization).is_zero()
    verdict = c2_zero and log_zero
    if verdict:
        assert reason is not None, f"oracle/theorem mismatch at level {lv.M}"
    return CocompactClassification(
        lv.M, verdict, reason if verdict else REASON_NOT, c2_zero, log_zero
    )


def c2_nonzero_criterion(M) -> bool:
    """True iff the newform log-weighted term survives: M is a perfect
    square whose root is not twice an odd number."""
    lv = M if isinstance(M, Level) else Level.of(M)
    if lv.squarefree_part != 1:
        return False
    t = lv.square_part
    return not (t % 2 == 0 and (t // 2) % 2 == 1)


# --- Dirichlet series of the newform index ---


def _check_series_args(s: float, prime_bound: int) -> None:
    if s < MIN_SERIES_S:
        raise ValueError(f"need s >= {MIN_SERIES_S} for trustworthy truncation")
    if not 2 <= prime_bound <= MAX_PRIME_BOUND:
        raise ValueError(f"prime bound must lie in [2, {MAX_PRIME_BOUND}]")


def newform_index_euler_product(s: float, prime_bound: int) -> float:
    """Truncated Euler product of sum_n newform_index(n)/n**s.

    The local factor at p is (1 - x**2)(1 - x)/(1 - p*x) with x = p**-s,
    matching zeta(s-1)/(zeta(2s)*zeta(s)) factor by factor.
    """
    _check_series_args(s, prime_bound)
    out = 1.0
    for p in primes_up_to(prime_bound):
        x = float(p) ** -s
        out *= (1.0 - x * x) * (1.0 - x) / (1.0 - p * x)
    return out


def zeta_euler_product(s: float, prime_bound: int) -> float:
    """Truncated Euler product of the Riemann zeta function."""
    if not 2 <= prime_bound <= MAX_PRIME_BOUND:
        raise ValueError(f"prime bound must lie in [2, {MAX_PRIME_BOUND}]")
    out = 1.0
    for p in primes_up_to(prime_bound):
        out /= 1.0 - float(p) ** -s
    return out


def zeta_ratio_reference(s: float, prime_bound: int) -> float:
    """zeta(s-1)/(zeta(2s)*zeta(s)) with all three factors truncated at
    the same prime bound."""
    _check_series_args(s, prime_bound)
    return zeta_euler_product(s - 1, prime_bound) / (
        zeta_euler_product(2 * s, prime_bound) * zeta_euler_product(s, prime_bound)
    )


def newform_index_series(s: float, n_max: int) -> float:
    """Direct partial sum sum_{n <= n_max} newform_index(n)/n**s."""
    if s < MIN_SERIES_S:
        raise ValueError(f"need s >= {MIN_SERIES_S} for a meaningful partial sum")
    return sum(newform_index(n) / float(n) ** s for n in range(1, n_max + 1))


# --- numeric main terms ---


@dataclass(frozen=True)
class WeylTerms:
    """Numeric main-term breakdown at a given eigenvalue cutoff."""

    area_term: float  # c1 * lambda
    cusp_log_term: float  # c2 * sqrt(lambda) * log(sqrt(lambda))
    scattering_term: float  # c3 * sqrt(lambda)
    total: float
    error_scale: float  # sqrt(lambda)/log(sqrt(lambda))


def weyl_main_terms(coeffs: CoefficientTriple, lam: float) -> WeylTerms:
    """Evaluate the three main terms at eigenvalue cutoff lam > 1."""
    if lam <= 1:
        raise ValueError("main terms need lambda > 1 (so log sqrt(lambda) > 0)")
    root = math.sqrt(lam)
    lg = math.log(root)
    t1 = float(coeffs.c1) * lam
    t2 = float(numeric_eval(coeffs.c2, 17)) * root * lg
    t3 = float(numeric_eval(coeffs.c3, 17)) * root
    return WeylTerms(t1, t2, t3, t1 + t2 + t3, root / lg)
