"""Amicable pairs by Thabit ibn Qurra's rule, exhaustive search, and perfect numbers."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from numlore import arith
from numlore.errors import DomainError, VerificationError


class PairSource(str, Enum):
    THABIT = "thabit"
    SEARCH = "search"
    EXTERNAL = "external"


@dataclass(frozen=True)
class AmicablePair:
    a: int
    b: int
    source: PairSource = PairSource.EXTERNAL

    def __post_init__(self):
        if not self.a < self.b:
            raise DomainError(f"amicable pair needs a < b, got ({self.a}, {self.b})")


@dataclass(frozen=True)
class ThabitCandidate:
    n: int
    p: int
    q: int
    r: int
    p_prime: bool
    q_prime: bool
    r_prime: bool

    @property
    def all_prime(self) -> bool:
        return self.p_prime and self.q_prime and self.r_prime


def thabit_numbers(n: int) -> tuple[int, int, int]:
    """``p = 3*2^(n-1) - 1``, ``q = 3*2^n - 1``, ``r = 9*2^(2n-1) - 1``."""
    if n < 2:
        raise DomainError(f"Thabit's rule needs n >= 2, got {n}")
    return 3 * 2 ** (n - 1) - 1, 3 * 2**n - 1, 9 * 2 ** (2 * n - 1) - 1


def thabit_candidate(n: int) -> ThabitCandidate:
    p, q, r = thabit_numbers(n)
    return ThabitCandidate(n, p, q, r, arith.is_prime(p), arith.is_prime(q), arith.is_prime(r))


def _partner_exponent(n: int) -> int:
    # power of two multiplying r; 2^2 would break (17296, 18416) and
    # (9363584, 9437056), which need 2^n
    return n


def thabit_pair(n: int) -> AmicablePair | None:
    """The pair ``(2^n p q, 2^n r)`` when p, q, r are all prime, else ``None``.

    The result is checked by divisor sums before it is returned.
    """
    cand = thabit_candidate(n)
    if not cand.all_prime:
        return None
    a = 2**n * cand.p * cand.q
    b = 2 ** _partner_exponent(n) * cand.r
    if not is_amicable(a, b):
        raise VerificationError(f"Thabit construction for n={n} gave non-amicable ({a}, {b})")
    return AmicablePair(min(a, b), max(a, b), PairSource.THABIT)


def is_amicable(a: int, b: int) -> bool:
    if a < 1 or b < 1:
        raise DomainError(f"is_amicable needs positive arguments, got ({a}, {b})")
    return (
        a != b
        and arith.proper_divisor_sum(a) == b
        and arith.proper_divisor_sum(b) == a
    )


def search_amicable(limit: int) -> list[AmicablePair]:
    """All amicable pairs with both members ``<= limit``, ascending by the smaller."""
    if limit < 2:
        raise DomainError(f"search limit must be >= 2, got {limit}")
    s = arith.divisor_sum_sieve(limit).tolist()
    pairs = []
    for a in range(2, limit + 1):
        b = s[a]
        if a < b <= limit and s[b] == a:
            pairs.append(AmicablePair(a, b, PairSource.SEARCH))
    return pairs


def perfect_of_rank(k: int) -> int | None:
    """``2^(k-1) (2^k - 1)`` when ``2^k - 1`` is prime, else ``None``."""
    if k < 2:
        raise DomainError(f"perfect_of_rank needs k >= 2, got {k}")
    mersenne = 2**k - 1
    if not arith.is_prime(mersenne):
        return None
    n = 2 ** (k - 1) * mersenne
    if not is_perfect(n):
        raise VerificationError(f"rank {k} form gave non-perfect {n}")
    return n


def is_perfect(n: int) -> bool:
    if n < 1:
        raise DomainError(f"is_perfect needs n >= 1, got {n}")
    return arith.proper_divisor_sum(n) == n
