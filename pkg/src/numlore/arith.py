"""Exact integer kernels: gcd, inverses, primality, factorization, divisor sums.

Python ``int`` is the arbitrary-precision integer and ``fractions.Fraction``
the normalized rational used throughout the package.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

import numpy as np

from numlore.errors import DomainError, NotInvertibleError, ResourceError

Factorization = list[tuple[int, int]]

# one int64 word per entry, 80 MB at the bound
SIEVE_MAX_LIMIT = 10_000_000

# gaps between successive residues coprime to 30, starting from 7
_WHEEL_GAPS = (4, 2, 4, 2, 4, 6, 2, 6)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) > 0`` and ``a*x + b*y == g``."""
    if a == 0 and b == 0:
        raise DomainError("egcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """The unique residue ``r`` in ``[0, m)`` with ``a*r ≡ 1 (mod m)``."""
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    g, x, _ = egcd(a % m, m)
    if g != 1:
        raise NotInvertibleError(a, m, g)
    return x % m


def _trial_divisors(limit: int):
    """Yield 2, 3, 5 and then every integer <= limit coprime to 30."""
    for d in (2, 3, 5):
        if d > limit:
            return
        yield d
    d, i = 7, 0
    while d <= limit:
        yield d
        d += _WHEEL_GAPS[i]
        i = (i + 1) & 7


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    for d in _trial_divisors(isqrt(n)):
        if n % d == 0:
            return n == d
    return True


def factorize(n: int) -> Factorization:
    """Prime factorization as ``[(prime, exponent), ...]`` with increasing primes."""
    if n < 2:
        raise DomainError(f"factorize requires n >= 2, got {n}")
    factors: Factorization = []
    limit = isqrt(n)
    for d in _trial_divisors(limit):
        if d > limit:
            break
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            factors.append((d, e))
            limit = isqrt(n)
    if n > 1:
        factors.append((n, 1))
    return factors


def divisor_sigma(n: int) -> int:
    """Sum of all positive divisors of ``n`` (including ``n``), from its factorization."""
    if n < 1:
        raise DomainError(f"sigma requires n >= 1, got {n}")
    if n == 1:
        return 1
    total = 1
    for p, e in factorize(n):
        total *= (p ** (e + 1) - 1) // (p - 1)
    return total


def proper_divisor_sum(n: int) -> int:
    """Sum of the divisors of ``n`` strictly below ``n``; 0 for ``n == 1``."""
    if n < 1:
        raise DomainError(f"proper_divisor_sum requires n >= 1, got {n}")
    return divisor_sigma(n) - n


def divisor_sum_sieve(limit: int) -> np.ndarray:
    """Proper divisor sums for ``0..limit`` as an int64 array.

    ``table[n] == proper_divisor_sum(n)`` for ``1 <= n <= limit``; ``table[0]``
    is a zero placeholder so indices line up with ``n``. Each divisor ``d`` is
    added to all of its proper multiples, which costs O(limit log limit).
    """
    if not 1 <= limit <= SIEVE_MAX_LIMIT:
        raise ResourceError(f"sieve limit must be in [1, {SIEVE_MAX_LIMIT}], got {limit}")
    table = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit // 2 + 1):
        table[2 * d :: d] += d
    return table


def cube_free_decompose(n: int) -> tuple[int, int]:
    """Split ``n`` as ``c**3 * m`` with ``m`` cube-free and ``c`` maximal."""
    if n < 1:
        raise DomainError(f"cube_free_decompose requires n >= 1, got {n}")
    if n == 1:
        return 1, 1
    c = m = 1
    for p, e in factorize(n):
        c *= p ** (e // 3)
        m *= p ** (e % 3)
    return c, m


def is_cube_free(n: int) -> bool:
    return n >= 1 and cube_free_decompose(n)[0] == 1
