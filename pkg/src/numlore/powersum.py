"""Sums of powers: al-Haytham's rectangle identity, its general-function form,
recursively derived closed-form polynomials, and al-Karaji's cube-square identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from numlore.errors import DomainError, ResourceError, VerificationError

FAULHABER_MAX_K = 20
FACTORIAL_MAX_N = 500


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of an exact identity; ``holds`` is plain equality."""

    lhs: int | Fraction
    rhs: int | Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class TelescopeStep:
    """One square-peeling step ``T(m)^2 = T(m-1)^2 + m^3`` with ``T(m) = 1 + ... + m``.

    ``border`` is the L-shaped region ``2*m*T(m-1) + m^2`` removed from the
    larger square; it must equal ``m^3``.
    """

    m: int
    square: int
    inner_square: int
    border: int

    @property
    def holds(self) -> bool:
        return self.border == self.m**3 and self.square == self.inner_square + self.border


@dataclass(frozen=True)
class CubeSquareReport(IdentityReport):
    steps: tuple[TelescopeStep, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs and all(s.holds for s in self.steps)


@dataclass(frozen=True)
class PowerSumPolynomial:
    """``S_k(n) = sum(i**k for i in 1..n)`` as ascending-degree rational coefficients."""

    k: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, n: int | Fraction) -> Fraction:
        return _evaluate(self.coefficients, n)


def sum_powers(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"sum_powers needs n >= 0 and k >= 0, got ({n}, {k})")
    return sum(i**k for i in range(1, n + 1))


def haytham_general(values: list[int]) -> IdentityReport:
    """Rectangle identity for an arbitrary sequence ``f(1..n)``.

    ``(n+1) * sum f(i) == sum i*f(i) + sum_p (f(1) + ... + f(p))``
    """
    if not values:
        raise DomainError("haytham_general needs a non-empty sequence")
    n = len(values)
    partials = []
    running = 0
    for v in values:
        running += v
        partials.append(running)
    lhs = (n + 1) * running
    rhs = sum(i * v for i, v in enumerate(values, start=1)) + sum(partials)
    return IdentityReport(lhs, rhs)


def haytham_identity(n: int, k: int) -> IdentityReport:
    """``(n+1) S_k(n) == S_{k+1}(n) + sum_{p=1..n} S_k(p)``, every sum taken term by term."""
    if n < 1 or k < 0:
        raise DomainError(f"haytham_identity needs n >= 1 and k >= 0, got ({n}, {k})")
    partial = partial_total = higher = 0
    for i in range(1, n + 1):
        partial += i**k
        partial_total += partial
        higher += i ** (k + 1)
    return IdentityReport((n + 1) * partial, higher + partial_total)


def factorial_identity(n: int) -> IdentityReport:
    """The rectangle identity with ``f(i) = i!``.

    The general form is cross-checked against a separate evaluation that
    uses ``sum i*i! == (n+1)! - 1``.
    """
    if n < 1:
        raise DomainError(f"factorial_identity needs n >= 1, got {n}")
    if n > FACTORIAL_MAX_N:
        raise ResourceError(f"factorial_identity is capped at n = {FACTORIAL_MAX_N}")
    facts = [factorial(i) for i in range(1, n + 1)]
    report = haytham_general(facts)
    lhs = (n + 1) * sum(facts)
    rhs = (factorial(n + 1) - 1) + sum(sum(facts[:p]) for p in range(1, n + 1))
    if (lhs, rhs) != (report.lhs, report.rhs):
        raise VerificationError(f"factorial identity evaluations disagree at n={n}")
    return report


def _evaluate(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_add(p, q):
    out = [Fraction(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_scale(p, s):
    return [c * s for c in p]


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


@lru_cache(maxsize=None)
def _faulhaber_coeffs(k: int) -> tuple[Fraction, ...]:
    if k == 0:
        return (Fraction(0), Fraction(1))
    # Rectangle recurrence at order k-1: S_k = (n+1) S_{k-1} - sum_p S_{k-1}(p).
    # Writing S_{k-1}(p) = sum_j c_j p^j turns the double sum into
    # sum_j c_j S_j(n); the top term j = k contains S_k itself, so move it left:
    #   (1 + c_k) S_k = (n+1) S_{k-1} - sum_{j<k} c_j S_j
    prev = list(_faulhaber_coeffs(k - 1))
    rhs = _poly_mul([Fraction(1), Fraction(1)], prev)
    for j, c in enumerate(prev[:k]):
        if c:
            rhs = _poly_add(rhs, _poly_scale(list(_faulhaber_coeffs(j)), -c))
    lead = prev[k]
    coeffs = _trim(_poly_scale(rhs, 1 / (1 + lead)))
    coeffs += [Fraction(0)] * (k + 2 - len(coeffs))
    return tuple(coeffs)


def faulhaber(k: int) -> PowerSumPolynomial:
    """Closed form of ``sum i**k`` derived bottom-up from ``S_0(n) = n``."""
    if k < 0:
        raise DomainError(f"faulhaber needs k >= 0, got {k}")
    if k > FAULHABER_MAX_K:
        raise ResourceError(f"faulhaber is capped at k = {FAULHABER_MAX_K}")
    return PowerSumPolynomial(k, _faulhaber_coeffs(k))


def poly_square(p: PowerSumPolynomial) -> tuple[Fraction, ...]:
    return tuple(_trim(_poly_mul(list(p.coefficients), list(p.coefficients))))


def karaji_cube_square(n: int) -> CubeSquareReport:
    """``1^3 + ... + n^3 == (1 + ... + n)^2`` with the square-peeling trace."""
    if n < 1:
        raise DomainError(f"karaji_cube_square needs n >= 1, got {n}")
    steps = []
    prev_t = 0
    for m in range(1, n + 1):
        t = prev_t + m
        steps.append(TelescopeStep(m, t * t, prev_t * prev_t, 2 * m * prev_t + m * m))
        prev_t = t
    # trace runs from the largest square inward, matching the backward induction
    steps.reverse()
    return CubeSquareReport(sum_powers(n, 3), prev_t * prev_t, tuple(steps))
