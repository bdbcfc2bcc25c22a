"""Thabit ibn Qurra's generalized Pythagorean theorem.

For a triangle with sides ``a = BC``, ``b = CA``, ``c = AB`` and angle ``γ``
at ``C``, points ``A'`` and ``B'`` on line ``AB`` with
``∠AA'C = ∠BB'C = γ`` satisfy ``c·AA' = b²`` and ``c·BB' = a²``, hence
``a² + b² = c·(AA' + BB')``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from numlore.errors import DomainError
from numlore.powersum import IdentityReport


class DegenerateTriangleError(DomainError):
    pass


@dataclass(frozen=True)
class Triangle:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        sides = tuple(Fraction(s) for s in (self.a, self.b, self.c))
        for name, value in zip("abc", sides):
            object.__setattr__(self, name, value)
        a, b, c = sides
        if min(sides) <= 0:
            raise DegenerateTriangleError(f"sides must be positive, got {a}, {b}, {c}")
        if not (a + b > c and b + c > a and a + c > b):
            raise DegenerateTriangleError(f"sides {a}, {b}, {c} violate the strict triangle inequality")


@dataclass(frozen=True)
class Feet:
    """Float coordinates with B at the origin and A on the positive x-axis."""

    A: tuple[float, float]
    C: tuple[float, float]
    A_prime: tuple[float, float]
    B_prime: tuple[float, float]

    @property
    def aa(self) -> float:
        return math.dist(self.A_prime, self.A)

    @property
    def bb(self) -> float:
        return math.dist(self.B_prime, (0.0, 0.0))


def thabit_segments(t: Triangle) -> tuple[Fraction, Fraction]:
    """``(AA', BB') = (b²/c, a²/c)``."""
    return t.b**2 / t.c, t.a**2 / t.c


def verify_generalized_pythagoras(t: Triangle) -> IdentityReport:
    aa, bb = thabit_segments(t)
    return IdentityReport(t.a**2 + t.b**2, t.c * (aa + bb))


def construct_feet(t: Triangle) -> Feet:
    """Locate ``A'`` and ``B'`` from the angle condition alone, in floating point.

    The cevian from ``C`` through ``B'`` leaves ``B'`` at angle ``γ`` to ray
    ``B'B``, so ``B'`` sits at ``x_C + y_C·cot γ``; symmetrically ``A'`` sits at
    ``x_C - y_C·cot γ``.
    """
    a, b, c = float(t.a), float(t.b), float(t.c)
    cx = (a * a + c * c - b * b) / (2 * c)
    cy = math.sqrt(max(a * a - cx * cx, 0.0))
    gamma = math.acos(max(-1.0, min(1.0, (a * a + b * b - c * c) / (2 * a * b))))
    cot = math.cos(gamma) / math.sin(gamma)
    return Feet(
        A=(c, 0.0),
        C=(cx, cy),
        A_prime=(cx - cy * cot, 0.0),
        B_prime=(cx + cy * cot, 0.0),
    )
