"""Brute-force Dirichlet character enumeration.

The independent oracle behind the primitive-character counting function:
decompose (Z/K)* into cyclic components, enumerate every character as a
tuple of exponents against fixed generators, compute each character's
conductor from the definition (the least f | K on whose 1-congruence
class the character is trivial), and count those of conductor exactly K.
Everything is integer arithmetic modulo the group exponent, so the check
is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _iproduct
from math import gcd, lcm

from .sieve import divisors, factorize

ORACLE_BOUND = 1000

__all__ = ["ORACLE_BOUND", "character_conductors", "primitive_char_count_oracle"]


def _primitive_root_mod_p(p: int) -> int:
    n = p - 1
    prime_parts = [q for q, _ in factorize(n).pairs]
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in prime_parts):
            return g
    raise AssertionError(f"no primitive root mod {p}")


def _odd_prime_power_generator(p: int, e: int) -> int:
    # a primitive root mod p that also generates mod p**2 works for all e
    g = _primitive_root_mod_p(p)
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True)
class _CharacterContext:
    modulus: int
    orders: tuple[int, ...]  # cyclic component orders
    exponent: int  # lcm of the orders
    multipliers: tuple[int, ...]  # exponent // order, per component
    dlog: dict  # unit x -> tuple of discrete logs


def _component_tables(q: int, p: int, e: int) -> list[tuple[int, dict[int, int]]]:
    """Cyclic components of (Z/p**e)* as (order, dlog table) pairs."""
    if p == 2:
        if e == 1:
            return []
        if e == 2:
            return [(2, {1: 0, 3: 1})]
        half = 1 << (e - 2)
        sign_log: dict[int, int] = {}
        three_log: dict[int, int] = {}
        x = 1
        for k in range(half):
            sign_log[x] = 0
            three_log[x] = k
            sign_log[q - x] = 1
            three_log[q - x] = k
            x = x * 3 % q
        return [(2, sign_log), (half, three_log)]
    g = _odd_prime_power_generator(p, e)
    order = (p - 1) * p ** (e - 1)
    table: dict[int, int] = {}
    x = 1
    for k in range(order):
        table[x] = k
        x = x * g % q
    return [(order, table)]


@lru_cache(maxsize=256)
def _context(K: int) -> _CharacterContext:
    comps: list[tuple[int, int, dict[int, int]]] = []  # (q, order, table)
    for p, e in factorize(K).pairs:
        q = p**e
        for order, table in _component_tables(q, p, e):
            comps.append((q, order, table))
    orders = tuple(order for _, order, _ in comps)
    exponent = lcm(*orders) if orders else 1
    dlog = {
        x: tuple(table[x % q] for q, _, table in comps)
        for x in range(1, K + 1)
        if gcd(x, K) == 1
    }
    multipliers = tuple(exponent // order for order in orders)
    return _CharacterContext(K, orders, exponent, multipliers, dlog)


def _conductor(ctx: _CharacterContext, chi: tuple[int, ...]) -> int:
    weights = tuple(a * m for a, m in zip(chi, ctx.multipliers))
    big = ctx.exponent
    for f in divisors(ctx.modulus):
        trivial = True
        for x in range(1, ctx.modulus + 1, f):
            logs = ctx.dlog.get(x)
            if logs is None:
                continue
            if sum(w * d for w, d in zip(weights, logs)) % big:
                trivial = False
                break
        if trivial:
            return f
    raise AssertionError("conductor search must terminate at f = K")


def character_conductors(K: int) -> list[int]:
    """Conductor of every Dirichlet character mod K, by enumeration."""
    if not 1 <= K <= ORACLE_BOUND:
        raise ValueError(f"character oracle supports 1 <= K <= {ORACLE_BOUND}")
    if K == 1:
        return [1]
    ctx = _context(K)
    return [
        _conductor(ctx, chi)
        for chi in _iproduct(*(range(order) for order in ctx.orders))
    ]


def primitive_char_count_oracle(K: int) -> int:
    """Number of Dirichlet characters mod K of conductor exactly K."""
    return sum(1 for f in character_conductors(K) if f == K)
