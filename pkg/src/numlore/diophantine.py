"""Rational points on x^3 + y^3 = z^2, exact cube radicals, and positive quadratic roots."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from numlore import arith
from numlore.errors import DomainError, VerificationError

Number = int | Fraction


class SingularParameterError(DomainError):
    pass


class DegreeError(DomainError):
    pass


@dataclass(frozen=True)
class RationalTriple:
    x: Fraction
    y: Fraction
    z: Fraction


def verify_cube_square_triple(t: RationalTriple) -> bool:
    return t.x**3 + t.y**3 == t.z**2


def karaji_solution(u: Number, v: Number) -> RationalTriple:
    """``x = u^2/(1+v^3)``, ``y = u^2 v/(1+v^3)``, ``z = u^3/(1+v^3)``."""
    u, v = Fraction(u), Fraction(v)
    den = 1 + v**3
    if den == 0:
        raise SingularParameterError("v = -1 makes 1 + v^3 vanish")
    t = RationalTriple(u**2 / den, u**2 * v / den, u**3 / den)
    if not verify_cube_square_triple(t):
        raise VerificationError(f"parameterization failed at u={u}, v={v}")
    return t


@dataclass(frozen=True)
class CubeRadical:
    """``coeff * cbrt(radicand)`` in canonical form.

    The radicand is cube-free; zero is always ``0 * cbrt(1)`` so that field
    equality is value equality.
    """

    coeff: Fraction
    radicand: int

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if not arith.is_cube_free(self.radicand):
            raise DomainError(f"radicand {self.radicand} is not a positive cube-free integer")
        if self.coeff == 0 and self.radicand != 1:
            object.__setattr__(self, "radicand", 1)

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        return f"{self.coeff}*cbrt({self.radicand})"


def simplify_cube_root(n: int) -> CubeRadical:
    c, m = arith.cube_free_decompose(n)
    return CubeRadical(Fraction(c), m)


def radical_add(a: CubeRadical, b: CubeRadical, sign: int = 1) -> CubeRadical | None:
    """``a + sign*b`` when both share a radicand (or one is zero), else ``None``."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    if a.coeff == 0:
        return CubeRadical(sign * b.coeff, b.radicand)
    if b.coeff == 0:
        return a
    if a.radicand != b.radicand:
        return None
    return CubeRadical(a.coeff + sign * b.coeff, a.radicand)


@dataclass(frozen=True)
class Surd:
    """The real number ``(p + s*sqrt(d)) / q``.

    ``d`` is square-free and > 1, ``s`` is nonzero, ``q > 0`` and
    ``gcd(p, s, q) == 1``.
    """

    p: int
    s: int
    d: int
    q: int

    def sign(self) -> int:
        # sign of p + s*sqrt(d) without floating point
        if self.p >= 0 and self.s > 0:
            return 1
        if self.p <= 0 and self.s < 0:
            return -1
        lhs, rhs = self.p * self.p, self.s * self.s * self.d
        if self.p > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def as_pair(self) -> tuple[Fraction, Fraction]:
        """``(x, y)`` with value ``x + y*sqrt(d)``."""
        return Fraction(self.p, self.q), Fraction(self.s, self.q)

    def __float__(self) -> float:
        return (self.p + self.s * self.d**0.5) / self.q

    def __str__(self) -> str:
        rad = f"sqrt({self.d})" if abs(self.s) == 1 else f"{abs(self.s)}*sqrt({self.d})"
        if self.p:
            num = f"{self.p} {'+' if self.s > 0 else '-'} {rad}"
        else:
            num = rad if self.s > 0 else f"-{rad}"
        return num if self.q == 1 else f"({num})/{self.q}"


def _square_free_split(n: int) -> tuple[int, int]:
    """``n == s*s*f`` with ``f`` square-free, for ``n >= 1``."""
    if n == 1:
        return 1, 1
    s = f = 1
    for p, e in arith.factorize(n):
        s *= p ** (e // 2)
        f *= p ** (e % 2)
    return s, f


def _make_surd(p: int, s: int, d: int, q: int) -> Surd:
    if q < 0:
        p, s, q = -p, -s, -q
    g = gcd(gcd(p, s), q)
    return Surd(p // g, s // g, d, q // g)


def quadratic_positive_roots(a: Number, b: Number, c: Number) -> list[Fraction | Surd]:
    """Strictly positive real roots of ``a x^2 + b x + c``, ascending, exact."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0:
        raise DegreeError("leading coefficient is zero; not a quadratic")
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    # sqrt(N/D) = sqrt(N*D)/D = s*sqrt(f)/D
    s, f = _square_free_split(disc.numerator * disc.denominator) if disc else (0, 1)
    root_scale = Fraction(s, disc.denominator)
    roots: list[Fraction | Surd] = []
    if f == 1:
        cands = sorted({(-b - root_scale) / (2 * a), (-b + root_scale) / (2 * a)})
        roots = [r for r in cands if r > 0]
    else:
        # (-b ± scale*sqrt(f)) / (2a), brought over a common integer denominator
        lo, hi = (-1, 1) if a > 0 else (1, -1)
        for sgn in (lo, hi):
            base = -b / (2 * a)
            coef = sgn * root_scale / (2 * a)
            den = base.denominator * coef.denominator // gcd(base.denominator, coef.denominator)
            root = _make_surd(int(base * den), int(coef * den), f, den)
            if root.sign() > 0:
                roots.append(root)
    return roots

