"""Exception hierarchy shared by every numlore module."""

from __future__ import annotations


class NumloreError(Exception):
    """Base class; the CLI maps any subclass to exit code 1."""


class DomainError(NumloreError, ValueError):
    """An argument lies outside the operation's mathematical domain."""


class NotInvertibleError(DomainError):
    def __init__(self, a: int, m: int, gcd: int):
        super().__init__(f"{a} has no inverse modulo {m} (gcd = {gcd})")
        self.a = a
        self.m = m
        self.gcd = gcd


class NonCoprimeError(DomainError):
    def __init__(self, m1: int, m2: int, gcd: int):
        super().__init__(f"moduli {m1} and {m2} are not coprime (gcd = {gcd})")
        self.moduli = (m1, m2)
        self.gcd = gcd


class ResourceError(NumloreError):
    """A policy bound on work or memory would be exceeded."""


class VerificationError(NumloreError):
    """A constructed object failed its own independent check.

    Raised only when an internal formula is wrong, never for bad input.
    """
