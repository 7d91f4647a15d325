"""Exact coefficient arithmetic.

Three layers, all exact:

* ``Rational`` -- alias of :class:`fractions.Fraction` (always in lowest
  terms with positive denominator).
* :class:`LogCombination` -- a rational combination of logarithms of
  distinct primes.  Because the logs of distinct primes are linearly
  independent over the rationals, the representation is unique and the
  value is zero iff no terms are stored.
* :class:`SymbolicCoefficient` -- ``const + log_pi*log(pi) + logs``,
  optionally carrying a global ``1/pi`` factor.  This is the exact form
  every spectral main-term coefficient takes.

Floating-point only ever appears through :func:`numeric_eval`, which is
display-only: nothing downstream consumes its output exactly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Union

import mpmath as mp

from .sieve import factorize, is_prime

Rational = Fraction

RationalLike = Union[int, str, Fraction]

MAX_EVAL_DIGITS = 50

__all__ = [
    "LogCombination",
    "MAX_EVAL_DIGITS",
    "Rational",
    "SymbolicCoefficient",
    "numeric_eval",
    "times_neg_half_pi",
]


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {x!r}")


@dataclass(frozen=True)
class LogCombination:
    """Finite sum ``sum_p c_p * log(p)`` over distinct primes, exact c_p.

    Terms are stored sorted by prime with no zero coefficients, so
    structural equality is value equality.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self) -> None:
        last = 1
        for p, c in self.terms:
            if p <= last:
                raise ValueError("primes must be distinct and ascending")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if not isinstance(c, Fraction) or c == 0:
                raise ValueError(f"coefficient of log({p}) must be a nonzero Fraction")
            last = p

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, RationalLike]) -> "LogCombination":
        items = []
        for p, c in mapping.items():
            frac = _as_fraction(c)
            if frac:
                items.append((int(p), frac))
        items.sort()
        return cls(tuple(items))

    @classmethod
    def log_of_integer(cls, n: int) -> "LogCombination":
        """log(n) expanded into prime logarithms."""
        return cls(tuple((p, Fraction(e)) for p, e in factorize(n).pairs))

    def coefficient(self, p: int) -> Fraction:
        for q, c in self.terms:
            if q == p:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "LogCombination") -> "LogCombination":
        if not isinstance(other, LogCombination):
            return NotImplemented
        acc = dict(self.terms)
        for p, c in other.terms:
            acc[p] = acc.get(p, Fraction(0)) + c
        return LogCombination.from_mapping(acc)

    def __sub__(self, other: "LogCombination") -> "LogCombination":
        if not isinstance(other, LogCombination):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LogCombination":
        return LogCombination(tuple((p, -c) for p, c in self.terms))

    def __mul__(self, scalar: RationalLike) -> "LogCombination":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = _as_fraction(scalar)
        if q == 0:
            return LogCombination()
        return LogCombination(tuple((p, c * q) for p, c in self.terms))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return _join_signed(
            [(c, f"log({p})") for p, c in self.terms]
        )


def _format_term(c: Fraction, sym: str) -> str:
    if sym == "":
        return str(abs(c))
    mag = abs(c)
    return sym if mag == 1 else f"{mag}*{sym}"


def _join_signed(parts: list[tuple[Fraction, str]]) -> str:
    out = []
    for c, sym in parts:
        body = _format_term(c, sym)
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(out)


@dataclass(frozen=True)
class SymbolicCoefficient:
    """Exact value ``const + log_pi*log(pi) + logs``, over pi if flagged.

    Equality is structural (which, the representation being canonical,
    is value equality for a fixed ``over_pi`` convention).  Addition
    refuses to mix conventions.
    """

    const: Fraction = Fraction(0)
    log_pi: Fraction = Fraction(0)
    logs: LogCombination = field(default_factory=LogCombination)
    over_pi: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "const", _as_fraction(self.const))
        object.__setattr__(self, "log_pi", _as_fraction(self.log_pi))
        if not isinstance(self.logs, LogCombination):
            raise TypeError("logs must be a LogCombination")

    @classmethod
    def zero(cls, over_pi: bool = True) -> "SymbolicCoefficient":
        return cls(over_pi=over_pi)

    def is_zero(self) -> bool:
        return self.const == 0 and self.log_pi == 0 and self.logs.is_zero()

    def __add__(self, other: "SymbolicCoefficient") -> "SymbolicCoefficient":
        if not isinstance(other, SymbolicCoefficient):
            return NotImplemented
        if self.over_pi != other.over_pi:
            raise ValueError("cannot add coefficients with different 1/pi conventions")
        return SymbolicCoefficient(
            self.const + other.const,
            self.log_pi + other.log_pi,
            self.logs + other.logs,
            self.over_pi,
        )

    def __sub__(self, other: "SymbolicCoefficient") -> "SymbolicCoefficient":
        if not isinstance(other, SymbolicCoefficient):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "SymbolicCoefficient":
        return self * -1

    def __mul__(self, scalar: RationalLike) -> "SymbolicCoefficient":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        q = _as_fraction(scalar)
        return SymbolicCoefficient(
            self.const * q, self.log_pi * q, self.logs * q, self.over_pi
        )

    __rmul__ = __mul__

    def to_json_dict(self) -> dict:
        """Canonical JSON form; round-trips bit-exactly via from_json_dict."""
        return {
            "over_pi": self.over_pi,
            "const": str(self.const),
            "log_pi": str(self.log_pi),
            "logs": {str(p): str(c) for p, c in self.logs.terms},
        }

    @classmethod
    def from_json_dict(cls, d: Mapping) -> "SymbolicCoefficient":
        return cls(
            Fraction(d["const"]),
            Fraction(d["log_pi"]),
            LogCombination.from_mapping(
                {int(p): Fraction(c) for p, c in d["logs"].items()}
            ),
            bool(d["over_pi"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts: list[tuple[Fraction, str]] = []
        if self.const:
            parts.append((self.const, ""))
        if self.log_pi:
            parts.append((self.log_pi, "log(pi)"))
        parts.extend((c, f"log({p})") for p, c in self.logs.terms)
        body = _join_signed(parts)
        if not self.over_pi:
            return body
        if len(parts) == 1 and "/" not in _format_term(*parts[0]):
            return f"{body}/pi"
        return f"({body})/pi"


def _to_mpf(q: Fraction) -> mp.mpf:
    return mp.mpf(q.numerator) / q.denominator


def numeric_eval(x: SymbolicCoefficient, precision: int = 15) -> mp.mpf:
    """Floating approximation at `precision` significant decimal digits.

    Display-only; the guard digits keep the result well inside
    10**(-precision+2) of the true value.
    """
    if not 1 <= precision <= MAX_EVAL_DIGITS:
        raise ValueError(f"precision must lie in [1, {MAX_EVAL_DIGITS}]")
    with mp.workdps(precision + 10):
        total = _to_mpf(x.const)
        if x.log_pi:
            total += _to_mpf(x.log_pi) * mp.log(mp.pi)
        for p, c in x.logs.terms:
            total += _to_mpf(c) * mp.log(p)
        if x.over_pi:
            total /= mp.pi
        return +total


def times_neg_half_pi(x: SymbolicCoefficient) -> Fraction:
    """Exact -(pi/2)*x for a purely rational over-pi coefficient.

    Unwraps coefficients of the shape q/pi; any log content means the
    product would not be rational, so that is rejected.
    """
    if not x.over_pi or x.log_pi != 0 or not x.logs.is_zero():
        raise ValueError("-(pi/2)*x is rational only for x = q/pi")
    return -x.const / 2
