"""Cached elementary number theory on top of sympy.

Divisor arithmetic calls these in tight loops with a small set of arguments,
so every helper is memoized and returns plain ``int`` / ``tuple`` values.
"""
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Optional, Tuple

from sympy import divisors as _sympy_divisors
from sympy import factorint, isprime, mobius, totient

from shared.domain.errors import InvalidOrderError


def require_positive(what: str, value: int) -> int:
    """Return ``value`` as int or raise InvalidOrderError when it is not >= 1."""
    if isinstance(value, bool) or int(value) != value or value < 1:
        raise InvalidOrderError(what, value)
    return int(value)


@lru_cache(maxsize=None)
def moebius_value(m: int) -> int:
    """Moebius function of m >= 1."""
    return int(mobius(require_positive("order", m)))


@lru_cache(maxsize=None)
def euler_phi_value(m: int) -> int:
    """Euler's totient of m >= 1."""
    return int(totient(require_positive("order", m)))


@lru_cache(maxsize=None)
def divisors_of(m: int) -> Tuple[int, ...]:
    """Positive divisors of m in ascending order."""
    return tuple(int(k) for k in _sympy_divisors(require_positive("order", m)))


@lru_cache(maxsize=None)
def prime_power_base(r: int) -> Optional[int]:
    """Return p when r = p^k with k >= 1, else None."""
    if r < 2:
        return None
    factors = factorint(r)
    if len(factors) != 1:
        return None
    return int(next(iter(factors)))


@lru_cache(maxsize=None)
def prime_factors(m: int) -> Tuple[int, ...]:
    """Distinct prime factors of m in ascending order."""
    return tuple(sorted(int(p) for p in factorint(require_positive("order", m))))


@lru_cache(maxsize=None)
def is_prime(p: int) -> bool:
    """Deterministic primality for the 64-bit range (sympy's isprime)."""
    return bool(isprime(p))


def valuation(m: int, p: int) -> int:
    """Exponent of the prime p in m."""
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def lcm_all(values: Iterable[int]) -> int:
    """lcm of an iterable, 1 for the empty iterable."""
    return reduce(lcm, values, 1)


def gcd_all(values: Iterable[int]) -> int:
    """gcd of an iterable, 0 for the empty iterable."""
    return reduce(gcd, values, 0)
