"""Exact coefficient rings: the integers, prime fields, and the rationals.

Every computation in the package is exact; no floating point is used
anywhere.  Ring elements are plain Python values (``int`` for the integers
and prime fields, ``fractions.Fraction`` for the rationals) and a ``Ring``
instance supplies the arithmetic, so chains can stay lightweight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Coefficient = Union[int, Fraction]

_INTEGERS = "Integers"
_PRIME_FIELD = "PrimeField"
_RATIONALS = "Rationals"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Ring:
    """A coefficient domain: ℤ, 𝔽_p (p prime), or ℚ."""

    kind: str
    p: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (_INTEGERS, _PRIME_FIELD, _RATIONALS):
            raise ValueError(f"unknown ring kind: {self.kind!r}")
        if self.kind == _PRIME_FIELD:
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"PrimeField characteristic must be prime, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no characteristic")

    # --- constructors -----------------------------------------------------
    @staticmethod
    def integers() -> "Ring":
        return Ring(_INTEGERS)

    @staticmethod
    def rationals() -> "Ring":
        return Ring(_RATIONALS)

    @staticmethod
    def prime_field(p: int) -> "Ring":
        return Ring(_PRIME_FIELD, p)

    @staticmethod
    def from_name(name: str) -> "Ring":
        """Parse a CLI-style ring name: ``z``, ``q``, or ``f<p>``."""
        name = name.strip().lower()
        if name == "z":
            return Ring.integers()
        if name == "q":
            return Ring.rationals()
        if name.startswith("f") and name[1:].isdigit():
            return Ring.prime_field(int(name[1:]))
        raise ValueError(f"unknown ring name: {name!r}")

    # --- predicates -------------------------------------------------------
    @property
    def is_field(self) -> bool:
        return self.kind != _INTEGERS

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == _PRIME_FIELD else 0

    # --- element arithmetic ----------------------------------------------
    @property
    def zero(self) -> Coefficient:
        return Fraction(0) if self.kind == _RATIONALS else 0

    @property
    def one(self) -> Coefficient:
        return Fraction(1) if self.kind == _RATIONALS else 1

    def coerce(self, value: Coefficient) -> Coefficient:
        """Map an integer (or Fraction, for ℚ) into this ring."""
        if self.kind == _INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return int(value)
            return int(value)
        if self.kind == _RATIONALS:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {self.p}")
            return (value.numerator * pow(value.denominator, -1, self.p)) % self.p
        return value % self.p

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        s = a + b
        return s % self.p if self.kind == _PRIME_FIELD else s

    def neg(self, a: Coefficient) -> Coefficient:
        return (-a) % self.p if self.kind == _PRIME_FIELD else -a

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        m = a * b
        return m % self.p if self.kind == _PRIME_FIELD else m

    def inv(self, a: Coefficient) -> Coefficient:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.kind == _PRIME_FIELD:
            return pow(a, -1, self.p)
        if self.kind == _RATIONALS:
            return Fraction(1) / a
        if a in (1, -1):
            return a
        raise ZeroDivisionError(f"{a} is not a unit in the integers")

    def is_zero(self, a: Coefficient) -> bool:
        return (a % self.p == 0) if self.kind == _PRIME_FIELD else a == 0

    def __str__(self) -> str:
        if self.kind == _INTEGERS:
            return "Z"
        if self.kind == _RATIONALS:
            return "Q"
        return f"F{self.p}"


ZZ = Ring.integers()
QQ = Ring.rationals()
F2 = Ring.prime_field(2)
F3 = Ring.prime_field(3)
F5 = Ring.prime_field(5)
