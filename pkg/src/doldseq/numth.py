"""Elementary exact number theory: sieve, factoring helpers, Mobius, Legendre."""

from __future__ import annotations

import math
from dataclasses import dataclass


class UnsupportedSizeError(ValueError):
    """Input exceeds the size envelope this package commits to."""


@dataclass(frozen=True)
class PrimeSieve:
    """Complete ascending list of primes up to ``limit``."""

    limit: int
    primes: tuple[int, ...]


def primes_up_to(limit: int) -> PrimeSieve:
    """Eratosthenes sieve; returns every prime <= limit."""
    if limit < 2:
        raise ValueError("sieve limit must be at least 2")
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return PrimeSieve(limit, tuple(i for i in range(limit + 1) if flags[i]))


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for all n < 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# Shared small-prime table for trial division; grown on demand.
_sieve: PrimeSieve = primes_up_to(10_000)


def _trial_primes(bound: int) -> tuple[int, ...]:
    global _sieve
    if bound > _sieve.limit:
        _sieve = primes_up_to(max(bound, 2 * _sieve.limit))
    return _sieve.primes


_TRIAL_LIMIT = 10**6


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 by trial division, as (prime, exponent) pairs.

    Only meant for the desk-scale integers this package factors
    (discriminants, bounds); raises UnsupportedSizeError when a cofactor
    survives trial division to 10**6 and is not prime.
    """
    if n < 1:
        raise ValueError("factorize requires n >= 1")
    out: list[tuple[int, int]] = []
    for p in _trial_primes(min(math.isqrt(n), _TRIAL_LIMIT)):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        if n >= _TRIAL_LIMIT**2 and not is_prime(n):
            raise UnsupportedSizeError(f"cannot factor remaining cofactor {n}")
        out.append((n, 1))
    return out


def mobius(n: int) -> int:
    """Mobius function: 0 on non-squarefree n, else (-1)^(prime count)."""
    if n < 1:
        raise ValueError("mobius requires n >= 1")
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def radical_int(n: int) -> int:
    """Greatest squarefree divisor of n >= 1."""
    if n < 1:
        raise ValueError("radical requires n >= 1")
    out = 1
    for p, _ in factorize(n):
        out *= p
    return out


def p_valuation(p: int, n: int) -> int:
    """Largest k with p**k dividing n; n must be nonzero."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def gcd_list(values: list[int]) -> int:
    """gcd over a list with the gcd(0, x) = |x| convention; empty list gives 0."""
    return math.gcd(*values) if values else 0


def lcm_list(values: list[int]) -> int:
    """lcm over a list; empty list gives 1."""
    out = 1
    for v in values:
        out = math.lcm(out, v)
    return out
