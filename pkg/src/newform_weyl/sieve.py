"""Prime sieve, deterministic primality testing, and exact factorization.

A smallest-prime-factor table (built lazily, shared read-only afterwards)
backs factorization below the sieve bound; trial division covers the rest
of the supported range.  The sieve bound can be overridden through the
NEWFORM_WEYL_SIEVE_BOUND environment variable, read when the table is
first built.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as _iproduct
from math import isqrt

import numpy as np

DEFAULT_SIEVE_BOUND = 10**6
MAX_SIEVE_BOUND = 10**8
FACTOR_BOUND = 10**8

SIEVE_BOUND_ENV = "NEWFORM_WEYL_SIEVE_BOUND"

# Witness set that makes Miller-Rabin deterministic far beyond FACTOR_BOUND
# (exact for all n < 3.3e24).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

__all__ = [
    "DEFAULT_SIEVE_BOUND",
    "FACTOR_BOUND",
    "SIEVE_BOUND_ENV",
    "PrimeFactorization",
    "configured_sieve_bound",
    "divisor_pairs",
    "divisors",
    "factorize",
    "is_prime",
    "primes_up_to",
]


def configured_sieve_bound() -> int:
    """Sieve bound from the environment, or the default 10**6."""
    raw = os.environ.get(SIEVE_BOUND_ENV)
    if raw is None:
        return DEFAULT_SIEVE_BOUND
    bound = int(raw)
    if not 10 <= bound <= MAX_SIEVE_BOUND:
        raise ValueError(
            f"{SIEVE_BOUND_ENV} must lie in [10, {MAX_SIEVE_BOUND}], got {bound}"
        )
    return bound


@lru_cache(maxsize=1 << 18)
def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class _SpfTable:
    """Lazily built smallest-prime-factor array, safe to share across threads."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self.bound = 0
        self.spf: np.ndarray | None = None

    def ensure(self) -> None:
        if self.spf is not None:
            return
        with self._lock:
            if self.spf is not None:
                return
            bound = configured_sieve_bound()
            spf = np.arange(bound + 1, dtype=np.int64)
            for p in range(2, isqrt(bound) + 1):
                if spf[p] == p:
                    sl = spf[p * p :: p]
                    sl[sl == np.arange(p * p, bound + 1, p, dtype=np.int64)] = p
            self.spf = spf
            self.bound = bound


_SPF = _SpfTable()


@lru_cache(maxsize=4)
def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes <= n, by an independent boolean sieve."""
    if n < 2:
        return ()
    flags = bytearray([1]) * (n + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(n) + 1):
        if flags[p]:
            flags[p * p :: p] = b"\x00" * len(range(p * p, n + 1, p))
    return tuple(i for i, f in enumerate(flags) if f)


@dataclass(frozen=True)
class PrimeFactorization:
    """Sorted prime-power decomposition; the empty tuple represents 1."""

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        last = 1
        for p, e in self.pairs:
            if p <= last:
                raise ValueError("primes must be distinct and ascending")
            if e < 1:
                raise ValueError("exponents must be >= 1")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p

    @cached_property
    def value(self) -> int:
        n = 1
        for p, e in self.pairs:
            n *= p**e
        return n

    def exponent(self, p: int) -> int:
        for q, e in self.pairs:
            if q == p:
                return e
        return 0

    def __iter__(self):
        return iter(self.pairs)

    def divisors(self) -> list[int]:
        out = [1]
        for p, e in self.pairs:
            out = [d * p**i for d in out for i in range(e + 1)]
        out.sort()
        return out


def _pf_unchecked(pairs: tuple[tuple[int, int], ...]) -> PrimeFactorization:
    # pairs built from an already validated factorization
    return PrimeFactorization(pairs)


def factorize(n: int, *, bound: int = FACTOR_BOUND) -> PrimeFactorization:
    """Exact factorization of n, for 1 <= n <= bound (default 10**8)."""
    if n != int(n):
        raise ValueError(f"cannot factorize non-integer {n!r}")
    n = int(n)
    if n < 1:
        raise ValueError(f"cannot factorize {n}: need n >= 1")
    if n > bound:
        raise ValueError(f"cannot factorize {n}: exceeds bound {bound}")
    return _factorize_cached(n)


@lru_cache(maxsize=1 << 17)
def _factorize_cached(n: int) -> PrimeFactorization:
    _SPF.ensure()
    pairs: list[tuple[int, int]] = []
    m = n
    if n <= _SPF.bound:
        spf = _SPF.spf
        while m > 1:
            p = int(spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    else:
        for p in (2, 3):
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                pairs.append((p, e))
        c = 5
        while c * c <= m:
            for p in (c, c + 2):
                if m % p == 0:
                    e = 0
                    while m % p == 0:
                        m //= p
                        e += 1
                    pairs.append((p, e))
            c += 6
        if m > 1:
            pairs.append((m, 1))
        pairs.sort()
    return _pf_unchecked(tuple(pairs))


def divisors(x: int | PrimeFactorization) -> list[int]:
    """Sorted list of divisors."""
    pf = x if isinstance(x, PrimeFactorization) else factorize(x)
    return pf.divisors()


def divisor_pairs(
    pf: PrimeFactorization,
) -> list[tuple[PrimeFactorization, PrimeFactorization]]:
    """All (d, n/d) pairs as factorizations, in lexicographic exponent order."""
    out = []
    for exps in _iproduct(*(range(e + 1) for _, e in pf.pairs)):
        d = tuple((p, i) for (p, _), i in zip(pf.pairs, exps) if i)
        c = tuple((p, e - i) for (p, e), i in zip(pf.pairs, exps) if e - i)
        out.append((_pf_unchecked(d), _pf_unchecked(c)))
    return out
