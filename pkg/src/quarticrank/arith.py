"""Exact integer primitives: primality, residue symbols, two squares, Pell units.

Everything here works on Python ints, so nothing overflows; the Pell
coefficients for l around 10**4 already run to dozens of digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import InputError, InvariantViolation, NotSquarefreeError

# Witness set that makes Miller-Rabin exact below 3.3e24 (so in particular
# below 2**64).  Above that the same fixed set is used and the answer is
# only probabilistic.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_SMALL_PRIMES = _MR_WITNESSES


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _sign(residue: int, p: int) -> int:
    if residue == 1:
        return 1
    if residue == p - 1:
        return -1
    raise InvariantViolation(f"power residue {residue} mod {p} is not +-1")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion; 0 when p divides a."""
    if p == 2 or not is_prime(p):
        raise InputError(f"legendre: modulus {p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    return _sign(pow(a, (p - 1) // 2, p), p)


def jacobi(a: int, m: int) -> int:
    """Jacobi symbol (a/m) for odd m >= 1, by the binary reciprocity loop."""
    if m < 1 or m % 2 == 0:
        raise InputError(f"jacobi: modulus {m} must be odd and positive")
    a %= m
    acc = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                acc = -acc
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            acc = -acc
        a %= m
    return acc if m == 1 else 0


def quartic_symbol(a: int, p: int) -> int:
    """Rational quartic residue symbol (a/p)_4 = a^((p-1)/4) mod p.

    Only defined here when a is a nonzero square mod p; anything else is
    rejected rather than silently mapped to 0.
    """
    if p % 4 != 1 or not is_prime(p):
        raise InputError(f"quartic_symbol: {p} is not a prime = 1 mod 4")
    if legendre(a, p) != 1:
        raise InputError(f"quartic_symbol: {a} is not a quadratic residue mod {p}")
    return _sign(pow(a % p, (p - 1) // 4, p), p)


def eighth_character(l: int) -> int:
    """(-1)^((l-1)/8) for l = 1 mod 8."""
    if l % 8 != 1:
        raise InputError(f"eighth_character: {l} is not 1 mod 8")
    return -1 if ((l - 1) // 8) % 2 else 1


def two_quartic_at_two(p: int) -> int:
    """The symbol (p/2)_4 used with l = 2, taken as (-1)^((p-1)/8).

    Only meaningful for p = 1 mod 8, which is exactly when 2 is a
    quadratic residue of p and p = 1 mod 4.
    """
    if p % 8 != 1:
        raise InputError(f"(p/2)_4 needs p = 1 mod 8, got {p}")
    return eighth_character(p)


@dataclass(frozen=True)
class TwoSquares:
    b: int
    c: int

    def __post_init__(self):
        if self.b <= 0 or self.c <= 0 or self.c % 2 == 0:
            raise InvariantViolation(f"bad two-squares data {self}")


@dataclass(frozen=True)
class PellUnit:
    """Fundamental unit u + v*sqrt(l) of norm -1."""

    u: int
    v: int

    def norm(self, l: int) -> int:
        return self.u * self.u - l * self.v * self.v


def _sqrt_minus_one(p: int) -> int:
    for z in range(2, p):
        if legendre(z, p) == -1:
            return pow(z, (p - 1) // 4, p)
    raise InvariantViolation(f"no quadratic non-residue mod {p}")


def two_squares(l: int) -> TwoSquares:
    """Write l = b^2 + c^2 with c odd (Cornacchia, seeded by sqrt(-1) mod l)."""
    if l == 2:
        return TwoSquares(1, 1)
    if l % 4 != 1 or not is_prime(l):
        raise InputError(f"two_squares: {l} is neither 2 nor a prime = 1 mod 4")
    x = _sqrt_minus_one(l)
    if 2 * x > l:
        x = l - x
    r0, r1 = l, x
    bound = isqrt(l)
    while r1 > bound:
        r0, r1 = r1, r0 % r1
    first = r1
    second = isqrt(l - first * first)
    if first * first + second * second != l:
        raise InvariantViolation(f"Cornacchia failed for {l}")
    b, c = (first, second) if second % 2 else (second, first)
    return TwoSquares(b, c)


def pell_fundamental_unit(l: int) -> PellUnit:
    """Smallest solution of u^2 - l v^2 = -1 via the continued fraction of sqrt(l).

    For l = 1 mod 8 the ring of integers has half-integral elements, but a
    half-integral unit (u + v sqrt l)/2 with u, v odd would have
    u^2 - l v^2 = 0 mod 8, never +-4.  So the integral solution found here
    is the fundamental unit of the full ring of integers.
    """
    if not (l == 2 or (l % 8 == 1 and is_prime(l))):
        raise InputError(f"pell_fundamental_unit: {l} is not 2 or a prime = 1 mod 8")
    a0 = isqrt(l)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    k_prev, k = 0, 1
    while True:
        norm = h * h - l * k * k
        if norm == -1:
            return PellUnit(h, k)
        if norm == 1:
            raise InvariantViolation(f"norm +1 unit reached before norm -1 for l={l}")
        m = d * a - m
        d = (l - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev


def factor_squarefree(n: int) -> list[int]:
    """Sorted distinct primes of a squarefree n, by trial division."""
    if n < 1:
        raise InputError(f"factor_squarefree: {n} < 1")
    primes = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                raise NotSquarefreeError(n, p)
            primes.append(p)
        p += 1 if p == 2 else 2
    if m > 1:
        primes.append(m)
    return primes


def is_squarefree(n: int) -> bool:
    try:
        factor_squarefree(n)
    except NotSquarefreeError:
        return False
    return True


@dataclass(frozen=True)
class OkElement:
    """(x + y*sqrt(l))/2 in Z[(1+sqrt l)/2] for l = 1 mod 4, stored doubled."""

    x: int
    y: int
    l: int

    def __post_init__(self):
        if (self.x - self.y) % 2:
            raise InvariantViolation(f"{self} is not an algebraic integer")

    @classmethod
    def from_int_coords(cls, a: int, b: int, l: int) -> "OkElement":
        return cls(2 * a, 2 * b, l)

    def __mul__(self, other: "OkElement") -> "OkElement":
        x = (self.x * other.x + self.l * self.y * other.y) // 2
        y = (self.x * other.y + self.y * other.x) // 2
        return OkElement(x, y, self.l)

    def __sub__(self, other: "OkElement") -> "OkElement":
        return OkElement(self.x - other.x, self.y - other.y, self.l)

    def divisible_by(self, m: int) -> bool:
        # self/m = (x/m + (y/m) sqrt l)/2 must again have integral, equal-parity coords
        if self.x % m or self.y % m:
            return False
        return (self.x // m - self.y // m) % 2 == 0


def unit_congruence_check(l: int) -> bool:
    """True iff eps0*sqrt(l) = 1 mod 4 in the ring of integers of Q(sqrt l)."""
    if l % 8 != 1 or not is_prime(l):
        raise InputError(f"unit_congruence_check: {l} is not a prime = 1 mod 8")
    unit = pell_fundamental_unit(l)
    eps = OkElement.from_int_coords(unit.u, unit.v, l)
    root = OkElement.from_int_coords(0, 1, l)
    one = OkElement.from_int_coords(1, 0, l)
    return (eps * root - one).divisible_by(4)


__all__ = [
    "OkElement",
    "PellUnit",
    "TwoSquares",
    "eighth_character",
    "factor_squarefree",
    "is_prime",
    "is_squarefree",
    "jacobi",
    "legendre",
    "pell_fundamental_unit",
    "quartic_symbol",
    "two_quartic_at_two",
    "two_squares",
    "unit_congruence_check",
]
