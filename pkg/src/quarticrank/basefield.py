"""The real quadratic base field k = Q(sqrt l), l = 2 or a prime = 1 mod 8."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from . import arith
from .errors import DeferredCaseError, InputError, InvariantViolation


class SplittingKind(enum.Enum):
    RAMIFIED = "ramified"
    SPLIT = "split"
    INERT = "inert"


@dataclass(frozen=True)
class BaseField:
    """Data attached to k = Q(sqrt l).

    ``eighth`` and ``two_quartic`` are (-1)^((l-1)/8) and (2/l)_4; both are
    None for l = 2.  The class number of k is assumed odd (true for prime
    l) and is never computed; N(eps0) = -1 is checked on construction.
    """

    l: int
    unit: arith.PellUnit
    squares: arith.TwoSquares
    eighth: int | None
    two_quartic: int | None

    @property
    def is_two(self) -> bool:
        return self.l == 2

    @property
    def u(self) -> int:
        return self.unit.u

    @property
    def v(self) -> int:
        return self.unit.v


def validate_l(l: int) -> None:
    if l == 2:
        return
    if not arith.is_prime(l):
        raise InputError(f"l must be 2 or a prime ≡ 1 (mod 8); {l} is not prime")
    if l % 8 == 5:
        raise DeferredCaseError(
            f"l = {l} is a prime ≡ 5 (mod 8); that family is treated separately "
            "and is out of scope")
    if l % 8 != 1:
        raise InputError(f"l must be 2 or a prime ≡ 1 (mod 8); {l} ≡ {l % 8} (mod 8)")


@lru_cache(maxsize=None)
def make_basefield(l: int) -> BaseField:
    validate_l(l)
    unit = arith.pell_fundamental_unit(l)
    if unit.norm(l) != -1:
        raise InvariantViolation(f"fundamental unit of Q(sqrt {l}) has norm +1")
    squares = arith.two_squares(l)
    if l == 2:
        return BaseField(l, unit, squares, None, None)
    return BaseField(l, unit, squares, arith.eighth_character(l),
                     arith.quartic_symbol(2, l))


def splitting_in_k(p: int, k: BaseField) -> SplittingKind:
    """How the rational prime p decomposes in k."""
    if not arith.is_prime(p):
        raise InputError(f"splitting_in_k: {p} is not prime")
    if p == k.l:
        return SplittingKind.RAMIFIED
    if p == 2:
        # l = 1 mod 8 here, so x^2 - x + (1-l)/4 splits mod 2
        return SplittingKind.SPLIT
    return SplittingKind.SPLIT if arith.legendre(k.l, p) == 1 else SplittingKind.INERT
