"""Arithmetical functions under Dirichlet convolution, with exact values.

An :class:`ArithFn` is a function on positive integers backed either by a
multiplicative prime-power kernel ``(p, e) -> Fraction`` (with the empty
product giving f(1) = 1, and kernel(p, 0) == 1 by contract) or by a direct
evaluator ``n -> Fraction``.  Functions with f(1) != 0 form a group under
convolution; multiplicative functions form a subgroup, which is why
:func:`convolve` and :func:`inverse` propagate kernels and the
``multiplicative`` flag.  Flags are declared, never inferred; the test
suite checks the declarations.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Union

from .exactnum import LogCombination
from .sieve import PrimeFactorization, divisor_pairs, factorize

Evaluatable = Union[int, PrimeFactorization]

__all__ = [
    "ArithFn",
    "DEDEKIND_PSI",
    "IDENTITY",
    "MOBIUS",
    "PRIMITIVE_CHAR_COUNT",
    "SIGMA0",
    "SIGMA0_INVERSE",
    "TOTIENT",
    "UNIT",
    "convolve",
    "dirichlet_convolve",
    "dirichlet_inverse",
    "inverse",
    "mangoldt_log",
    "sigma",
    "standard_fn",
]


class ArithFn:
    """Exact-valued arithmetical function with per-instance memoization."""

    def __init__(
        self,
        name: str,
        *,
        kernel: Optional[Callable[[int, int], Fraction]] = None,
        eval_at: Optional[Callable[[int], Fraction]] = None,
        multiplicative: Optional[bool] = None,
    ) -> None:
        if kernel is None and eval_at is None:
            raise ValueError("ArithFn needs a kernel or an evaluator")
        self.name = name
        self.kernel = kernel
        self.eval_at = eval_at
        self.multiplicative = (
            kernel is not None if multiplicative is None else multiplicative
        )
        self._values: dict[int, Fraction] = {}

    def __call__(self, n: Evaluatable) -> Fraction:
        if isinstance(n, PrimeFactorization):
            pf: Optional[PrimeFactorization] = n
            key = n.value
        else:
            pf = None
            key = n
        cached = self._values.get(key)
        if cached is not None:
            return cached
        if self.kernel is not None:
            if pf is None:
                pf = factorize(key)
            out = Fraction(1)
            for p, e in pf.pairs:
                out *= self.kernel(p, e)
        else:
            if key < 1:
                raise ValueError("arithmetical functions are defined for n >= 1")
            out = Fraction(self.eval_at(key))
        self._values[key] = out
        return out

    def __repr__(self) -> str:
        return f"ArithFn({self.name!r})"


@lru_cache(maxsize=None)
def convolve(f: ArithFn, g: ArithFn) -> ArithFn:
    """Dirichlet convolution f*g.

    Computed prime-power-wise when both sides carry multiplicative
    kernels, by the full divisor sum otherwise.  Results are cached per
    (f, g) pair so repeated point queries share one memo.
    """
    name = f"({f.name}*{g.name})"
    if (
        f.kernel is not None
        and g.kernel is not None
        and f.multiplicative
        and g.multiplicative
    ):
        fk, gk = f.kernel, g.kernel

        def kernel(p: int, e: int) -> Fraction:
            return sum((fk(p, i) * gk(p, e - i) for i in range(e + 1)), Fraction(0))

        return ArithFn(name, kernel=kernel, multiplicative=True)

    def eval_at(n: int) -> Fraction:
        total = Fraction(0)
        for d, q in divisor_pairs(factorize(n)):
            fd = f(d)
            if fd:
                total += fd * g(q)
        return total

    return ArithFn(
        name, eval_at=eval_at, multiplicative=f.multiplicative and g.multiplicative
    )


@lru_cache(maxsize=None)
def inverse(f: ArithFn) -> ArithFn:
    """Dirichlet inverse of f; requires f(1) != 0."""
    f1 = f(1)
    if f1 == 0:
        raise ValueError(f"{f.name} is not invertible: f(1) = 0")
    name = f"{f.name}^-1"
    if f.kernel is not None and f.multiplicative:
        fk = f.kernel

        @lru_cache(maxsize=None)
        def inv_pp(p: int, e: int) -> Fraction:
            if e == 0:
                return Fraction(1)
            return -sum(
                (fk(p, i) * inv_pp(p, e - i) for i in range(1, e + 1)), Fraction(0)
            )

        return ArithFn(name, kernel=inv_pp, multiplicative=True)

    inv_f1 = 1 / f1
    memo: dict[int, Fraction] = {1: inv_f1}

    def eval_at(n: int) -> Fraction:
        known = memo.get(n)
        if known is not None:
            return known
        total = Fraction(0)
        for d, q in divisor_pairs(factorize(n)):
            if d.value == n:
                continue
            fq = f(q)
            if fq:
                total += fq * eval_at(d.value)
        out = -inv_f1 * total
        memo[n] = out
        return out

    return ArithFn(name, eval_at=eval_at, multiplicative=f.multiplicative)


def dirichlet_convolve(f: ArithFn, g: ArithFn, n: Evaluatable) -> Fraction:
    """(f*g)(n)."""
    return convolve(f, g)(n)


def dirichlet_inverse(f: ArithFn, n: Evaluatable) -> Fraction:
    """f^{-1}(n) under Dirichlet convolution."""
    return inverse(f)(n)


# --- the standard library of arithmetical functions ---


def _identity_kernel(p: int, e: int) -> Fraction:
    return Fraction(1 if e == 0 else 0)


def _unit_kernel(p: int, e: int) -> Fraction:
    return Fraction(1)


def _mobius_kernel(p: int, e: int) -> Fraction:
    return Fraction((1, -1)[e] if e <= 1 else 0)


def _totient_kernel(p: int, e: int) -> Fraction:
    return Fraction(1 if e == 0 else p**e - p ** (e - 1))


def _sigma0_inverse_kernel(p: int, e: int) -> Fraction:
    return Fraction({0: 1, 1: -2, 2: 1}.get(e, 0))


def _dedekind_psi_kernel(p: int, e: int) -> Fraction:
    return Fraction(1 if e == 0 else p**e + p ** (e - 1))


def _primitive_char_count_kernel(p: int, e: int) -> Fraction:
    # number of primitive Dirichlet characters of conductor p**e
    if e == 0:
        return Fraction(1)
    if e == 1:
        return Fraction(p - 2)
    return Fraction((p - 1) ** 2 * p ** (e - 2))


IDENTITY = ArithFn("I", kernel=_identity_kernel, multiplicative=True)
UNIT = ArithFn("u", kernel=_unit_kernel, multiplicative=True)
MOBIUS = ArithFn("mu", kernel=_mobius_kernel, multiplicative=True)
TOTIENT = ArithFn("phi", kernel=_totient_kernel, multiplicative=True)
SIGMA0_INVERSE = ArithFn(
    "sigma0^-1", kernel=_sigma0_inverse_kernel, multiplicative=True
)
DEDEKIND_PSI = ArithFn("psi", kernel=_dedekind_psi_kernel, multiplicative=True)
PRIMITIVE_CHAR_COUNT = ArithFn(
    "prim_char_count", kernel=_primitive_char_count_kernel, multiplicative=True
)


@lru_cache(maxsize=None)
def sigma(alpha: int) -> ArithFn:
    """Divisor power sum sigma_alpha(n) = sum_{d|n} d**alpha."""

    def kernel(p: int, e: int) -> Fraction:
        return sum(
            (Fraction(p) ** (i * alpha) for i in range(e + 1)), Fraction(0)
        )

    return ArithFn(f"sigma_{alpha}", kernel=kernel, multiplicative=True)


SIGMA0 = sigma(0)


def mangoldt_log(n: Evaluatable) -> LogCombination:
    """Prime-power indicator weighted by log p, kept exact.

    Returns log(p) as a LogCombination when n = p**m (m >= 1) and the
    zero combination otherwise.  Not an ArithFn: its values are not
    rational, so it lives in the symbolic domain.  Present for
    completeness; no downstream formula consumes it.
    """
    pf = n if isinstance(n, PrimeFactorization) else factorize(n)
    if len(pf.pairs) == 1:
        return LogCombination(((pf.pairs[0][0], Fraction(1)),))
    return LogCombination()


_STANDARD: dict[str, ArithFn] = {
    "identity_I": IDENTITY,
    "unit_u": UNIT,
    "mobius": MOBIUS,
    "totient": TOTIENT,
    "sigma0_inverse": SIGMA0_INVERSE,
    "dedekind_psi": DEDEKIND_PSI,
    "primitive_char_count_D": PRIMITIVE_CHAR_COUNT,
}


def standard_fn(name: str, alpha: Optional[int] = None):
    """Look up a standard arithmetical function by name.

    "sigma" requires the exponent argument alpha.  "mangoldt_log_form"
    returns the symbolic evaluator :func:`mangoldt_log` instead of an
    ArithFn.
    """
    if name == "sigma":
        if alpha is None:
            raise ValueError("standard_fn('sigma') requires alpha")
        return sigma(alpha)
    if alpha is not None:
        raise ValueError(f"alpha only applies to 'sigma', not {name!r}")
    if name == "mangoldt_log_form":
        return mangoldt_log
    try:
        return _STANDARD[name]
    except KeyError:
        raise ValueError(f"unknown arithmetical function {name!r}") from None
