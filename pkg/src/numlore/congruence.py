"""Chinese remainder solving with explicit basis constants, and Wilson's primality test."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from numlore import arith
from numlore.errors import DomainError, NonCoprimeError, ResourceError, VerificationError

WILSON_MAX_P = 1_000_000


@dataclass(frozen=True)
class Congruence:
    """``x ≡ residue (mod modulus)``; the residue is reduced into ``[0, modulus)``."""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "residue", self.residue % self.modulus)


@dataclass(frozen=True)
class CrtSolution:
    x0: int
    M: int
    basis: tuple[int, ...]


def _check_coprime(moduli: list[int]) -> None:
    for i, mi in enumerate(moduli):
        if mi < 2:
            raise DomainError(f"modulus must be >= 2, got {mi}")
        for mj in moduli[i + 1 :]:
            g = gcd(mi, mj)
            if g != 1:
                raise NonCoprimeError(mi, mj, g)


def crt_basis(moduli: list[int]) -> list[int]:
    """Basis ``e_i = M_i * (M_i^-1 mod m_i)`` where ``M_i = M / m_i``.

    ``e_i`` is 1 modulo ``m_i`` and 0 modulo every other modulus; for
    ``[3, 5, 7]`` this gives ``[70, 21, 15]``.
    """
    moduli = list(moduli)
    if not moduli:
        raise DomainError("crt_basis needs at least one modulus")
    _check_coprime(moduli)
    M = prod(moduli)
    basis = []
    for m in moduli:
        Mi = M // m
        basis.append(Mi * arith.mod_inverse(Mi, m))
    return basis


def crt_solve(system: list[Congruence]) -> CrtSolution:
    if not system:
        raise DomainError("crt_solve needs a non-empty system")
    moduli = [c.modulus for c in system]
    basis = crt_basis(moduli)
    M = prod(moduli)
    x0 = sum(c.residue * e for c, e in zip(system, basis)) % M
    for c in system:
        if x0 % c.modulus != c.residue:
            raise VerificationError(f"x0={x0} violates x ≡ {c.residue} (mod {c.modulus})")
    return CrtSolution(x0, M, tuple(basis))


def crt_general_solution(sol: CrtSolution, t: int) -> int:
    return sol.x0 + t * sol.M


def wilson_is_prime(p: int) -> bool:
    """Primality via ``(p-1)! ≡ -1 (mod p)``.

    Costs p - 2 modular multiplications, so ``p`` is capped at ``WILSON_MAX_P``.
    """
    if not 2 <= p <= WILSON_MAX_P:
        raise ResourceError(f"wilson_is_prime needs 2 <= p <= {WILSON_MAX_P}, got {p}")
    acc = 1
    for i in range(2, p):
        acc = acc * i % p
        if not acc:
            return False
    return (acc + 1) % p == 0
