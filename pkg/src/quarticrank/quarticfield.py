"""The cyclic quartic field K = Q(sqrt(n * eps0 * sqrt l)).

Construction puts K in the canonical form Q(sqrt(a(l + b sqrt l))) with a
odd and squarefree.  When n is even the factor 2 is absorbed by the
identity Q(sqrt(2a(l + b sqrt l))) = Q(sqrt(a(l + c sqrt l))) (c odd), so
``a = n/2`` and the conductor is always read off the same three-way rule.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd, prod

from . import arith
from .basefield import BaseField, SplittingKind, splitting_in_k
from .errors import InputError, InvariantViolation


@dataclass(frozen=True)
class FactorizationShape:
    """Odd primes of n sorted by residue mod 4 and by their splitting in k."""

    delta: int
    ones_split: tuple[int, ...] = ()
    ones_inert: tuple[int, ...] = ()
    threes_split: tuple[int, ...] = ()
    threes_inert: tuple[int, ...] = ()

    @property
    def t(self) -> int:
        return len(self.ones_split) + len(self.ones_inert)

    @property
    def t1(self) -> int:
        return len(self.ones_inert)

    @property
    def t2(self) -> int:
        return len(self.ones_split)

    @property
    def s(self) -> int:
        return len(self.threes_split) + len(self.threes_inert)

    @property
    def s1(self) -> int:
        return len(self.threes_inert)

    @property
    def s2(self) -> int:
        return len(self.threes_split)

    @property
    def h(self) -> int:
        """Number of primes of k lying over the p = 1 (mod 4) factors."""
        return 2 * self.t2 + self.t1

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(sorted(self.ones_split + self.ones_inert
                            + self.threes_split + self.threes_inert))

    @property
    def n(self) -> int:
        return self.delta * prod(self.odd_primes)


def factorization_shape(n: int, k: BaseField) -> FactorizationShape:
    primes = arith.factor_squarefree(n)
    delta = 2 if primes and primes[0] == 2 else 1
    buckets: dict[tuple[int, SplittingKind], list[int]] = {}
    for p in primes:
        if p == 2:
            continue
        buckets.setdefault((p % 4, splitting_in_k(p, k)), []).append(p)

    def get(r, kind):
        return tuple(buckets.get((r, kind), ()))

    return FactorizationShape(
        delta=delta,
        ones_split=get(1, SplittingKind.SPLIT),
        ones_inert=get(1, SplittingKind.INERT),
        threes_split=get(3, SplittingKind.SPLIT),
        threes_inert=get(3, SplittingKind.INERT),
    )


def conductor_exponent(a: int, b_used: int, l: int) -> int:
    """Power of 2 in the conductor 2^e * |a| * l of Q(sqrt(a(l + b sqrt l)))."""
    if a % 2 == 0:
        raise InputError(f"conductor_exponent: a = {a} must be odd")
    if l % 8 == 2:
        return 3
    if l % 4 == 1:
        if b_used % 2:
            return 3
        if (a + b_used) % 4 == 3:
            return 2
        if (a + b_used) % 4 == 1:
            return 0
    raise InputError(f"conductor_exponent: no case for a={a}, b={b_used}, l={l}")


@dataclass(frozen=True)
class QuarticField:
    k: BaseField
    n: int
    shape: FactorizationShape
    a: int
    b_used: int
    e: int
    conductor: int

    @property
    def l(self) -> int:
        return self.k.l

    @property
    def delta(self) -> int:
        return self.shape.delta

    @property
    def factors(self) -> list[int]:
        return ([2] if self.delta == 2 else []) + list(self.shape.odd_primes)


def make_quarticfield(n: int, k: BaseField) -> QuarticField:
    if n < 1:
        raise InputError(f"n must be a positive integer, got {n}")
    if gcd(n, k.l) > 1:
        raise InputError(f"n = {n} is not coprime to l = {k.l}")
    shape = factorization_shape(n, k)
    if shape.delta == 2:
        # only reachable for l = 1 mod 8 (l = 2 already failed the gcd test)
        a, b_used = n // 2, k.squares.c
    else:
        a, b_used = n, k.squares.b
    e = conductor_exponent(a, b_used, k.l)
    K = QuarticField(k=k, n=n, shape=shape, a=a, b_used=b_used, e=e,
                     conductor=2 ** e * a * k.l)
    if not reality_check(K):
        raise InvariantViolation(f"constructed field for n={n}, l={k.l} is not real")
    return K


def hasse_sign(K: QuarticField) -> int | None:
    """S = prod of s_p over p | f_K, or None when 8 | f_K.

    With 8 | f_K the real and imaginary fields of that conductor are equinumerous
    and S does not separate them; reality then rests on a = n/delta > 0.
    """
    if K.conductor % 8 == 0:
        return None
    sign = 1
    if K.conductor % 2 == 0:
        sign = -sign
    # l ramifies with index 4 in K, the odd primes of n with index 2
    if ((K.l - 1) // 4) % 2:
        sign = -sign
    for p in K.shape.odd_primes:
        if ((p - 1) // 2) % 2:
            sign = -sign
    return sign


def reality_check(K: QuarticField) -> bool:
    S = hasse_sign(K)
    if S is None:
        return K.a > 0
    return S == 1


class PlaceKind(enum.Enum):
    SQRT_L = "sqrt_l"
    TWO_ADIC_PAIR = "two_adic_pair"
    INERT_PRIME = "inert_prime"
    SPLIT_PAIR = "split_pair"

    @property
    def weight(self) -> int:
        """How many primes of k this place stands for."""
        return 2 if self in (PlaceKind.TWO_ADIC_PAIR, PlaceKind.SPLIT_PAIR) else 1


@dataclass(frozen=True)
class RamificationProfile:
    places: tuple[tuple[PlaceKind, int], ...]
    mu: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "mu", sum(kind.weight for kind, _ in self.places))


def ramification_profile(K: QuarticField) -> RamificationProfile:
    """Finite primes of k ramified in K/k, grouped by rational prime.

    K is totally real, so no infinite place of k ramifies.  For l = 2 the
    single prime (sqrt 2) is both the place over l and the 2-adic place.
    """
    places = [(PlaceKind.SQRT_L, K.l)]
    if not K.k.is_two and K.e in (2, 3):
        places.append((PlaceKind.TWO_ADIC_PAIR, 2))
    for p in K.shape.odd_primes:
        kind = splitting_in_k(p, K.k)
        places.append((PlaceKind.SPLIT_PAIR if kind is SplittingKind.SPLIT
                       else PlaceKind.INERT_PRIME, p))
    return RamificationProfile(tuple(places))
