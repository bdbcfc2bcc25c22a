"""Solvers for three classical division puzzles.

* estate: a bequest of fractions that only divides after borrowing items
  (17 camels split 1/2, 1/3, 1/9 after borrowing one);
* meal: pooled loaves shared with a guest who then pays the owners;
* wage: a period's pay of cash plus one item, prorated for partial work.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from numlore.errors import DomainError

log = logging.getLogger(__name__)

ESTATE_MAX_BORROW = 1_000_000


class UnsolvableError(DomainError):
    pass


class IllPosedError(DomainError):
    pass


@dataclass(frozen=True)
class EstateProblem:
    total: int
    fractions: tuple[Fraction, ...]

    def __post_init__(self):
        fr = tuple(Fraction(f) for f in self.fractions)
        object.__setattr__(self, "fractions", fr)
        if self.total < 1:
            raise DomainError(f"estate total must be >= 1, got {self.total}")
        if not fr:
            raise DomainError("estate needs at least one heir")
        if any(not 0 < f < 1 for f in fr):
            raise DomainError(f"every share must lie in (0, 1), got {[str(f) for f in fr]}")
        if sum(fr) > 1:
            raise DomainError(f"shares sum to {sum(fr)} > 1")


@dataclass(frozen=True)
class EstateSolution:
    borrow: int
    shares: tuple[int, ...]


@dataclass(frozen=True)
class MealProblem:
    contributions: tuple[int, ...]
    eaters: int
    payment: Fraction

    def __post_init__(self):
        object.__setattr__(self, "contributions", tuple(self.contributions))
        object.__setattr__(self, "payment", Fraction(self.payment))
        if any(c < 0 for c in self.contributions) or not any(self.contributions):
            raise DomainError("contributions must be >= 0 with at least one positive")
        if self.eaters < max(1, len(self.contributions)):
            raise DomainError("every contributor also eats; eaters must be >= contributors")
        if self.payment < 0:
            raise DomainError("payment must be >= 0")


@dataclass(frozen=True)
class WageProblem:
    period_days: int
    cash: Fraction
    worked_days: int

    def __post_init__(self):
        object.__setattr__(self, "cash", Fraction(self.cash))
        if self.period_days < 1:
            raise DomainError("period must be at least one day")
        if self.cash < 0:
            raise DomainError("cash must be >= 0")
        if not 0 <= self.worked_days < self.period_days:
            raise DomainError("worked days must lie in [0, period)")


def solve_estate(p: EstateProblem, max_borrow: int = ESTATE_MAX_BORROW) -> EstateSolution:
    """Borrow the fewest items so every share is a whole item and the shares
    use up exactly the original estate, leaving the borrowed items to return.

    The shares sum to ``(total + k) * sum(f)``, which must equal ``total``, so
    ``total + k`` is forced to be ``total / sum(f)``.
    """
    pool = p.total / sum(p.fractions)
    borrow = pool - p.total
    if pool.denominator != 1 or borrow > max_borrow:
        raise UnsolvableError(
            f"no borrow k <= {max_borrow} makes {p.total} divide as "
            f"{', '.join(map(str, p.fractions))}"
        )
    shares = [pool * f for f in p.fractions]
    if any(s.denominator != 1 for s in shares):
        raise UnsolvableError(f"pool of {pool} does not divide into whole shares")
    return EstateSolution(int(borrow), tuple(int(s) for s in shares))


def solve_meal(p: MealProblem) -> list[Fraction]:
    """Pay each owner in proportion to the bread they gave up to others.

    Everyone eats ``total / eaters``; an owner's surplus is what they brought
    minus what they ate themselves.
    """
    total = sum(p.contributions)
    ration = Fraction(total, p.eaters)
    surplus = [c - ration for c in p.contributions]
    if any(s < 0 for s in surplus):
        raise IllPosedError(
            f"a contributor ate more than they brought (ration {ration}, "
            f"contributions {list(p.contributions)})"
        )
    given = sum(surplus)
    if given == 0:
        if p.payment:
            raise IllPosedError("nobody gave bread away, so the payment has no owner")
        return [Fraction(0)] * len(surplus)
    return [p.payment * s / given for s in surplus]


def solve_wage(p: WageProblem) -> Fraction:
    """Item value ``d`` with ``W (C + d) / P = d``, i.e. ``d = W C / (P - W)``."""
    if p.worked_days == 0:
        log.warning("zero days worked: the item value is undetermined, returning 0")
        return Fraction(0)
    return p.worked_days * p.cash / (p.period_days - p.worked_days)
