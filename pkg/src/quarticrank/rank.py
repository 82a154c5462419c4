"""2-rank of the class group of K, computed two independent ways.

``rank_generic`` assembles the table of local norm-residue symbols
(-1, d / P) and (eps0, d / P) at every prime P of k ramified in K, reads
off r* (how many of -1, eps0, -eps0 are norms from K) and applies the
ambiguous class number formula rank = mu + r* - 3.

``rank_closed_form`` dispatches on the factorization shape of n to the
closed-form theorem for that family and never builds the table.

The constants in mu + r* - (r + c + 1) are fixed: one fundamental unit
(r = 1) and -1 in k (c = 1).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from . import arith
from .basefield import BaseField
from .errors import InvariantViolation
from .quarticfield import (FactorizationShape, PlaceKind, QuarticField,
                           ramification_profile)


class Entry(enum.Enum):
    PLUS = "+1"
    MINUS = "-1"
    # the two conjugate primes over a split q = 3 mod 4 carry opposite signs;
    # which one is which depends on labelling, so only the difference is kept
    OPPOSITE = "opp"
    UNKNOWN = "?"

    @classmethod
    def of(cls, sign: int) -> "Entry":
        return cls.PLUS if sign == 1 else cls.MINUS

    def __mul__(self, other: "Entry") -> "Entry":
        signs = {Entry.PLUS: 1, Entry.MINUS: -1}
        if self in signs and other in signs:
            return Entry.of(signs[self] * signs[other])
        if Entry.UNKNOWN in (self, other):
            return Entry.UNKNOWN
        if self is Entry.OPPOSITE and other is Entry.OPPOSITE:
            raise InvariantViolation("product of two opposite-pair entries")
        return Entry.OPPOSITE


@dataclass(frozen=True)
class Column:
    kind: PlaceKind
    prime: int
    conjugate: int = 0  # 0 or 1 for the two primes of a pair


@dataclass(frozen=True)
class SymbolMatrix:
    columns: tuple[Column, ...]
    row_minus1: tuple[Entry, ...]
    row_eps: tuple[Entry, ...]

    @property
    def row_minus_eps(self) -> tuple[Entry, ...]:
        return tuple(a * b for a, b in zip(self.row_minus1, self.row_eps))

    def rows(self) -> dict[str, tuple[Entry, ...]]:
        return {"-1": self.row_minus1, "eps0": self.row_eps,
                "-eps0": self.row_minus_eps}


@dataclass(frozen=True)
class RankResult:
    mu: int
    r_star: int
    rank: int
    case_id: str
    path: str

    def __post_init__(self):
        if self.r_star not in (0, 1, 2) or self.rank != self.mu + self.r_star - 3 \
                or self.rank < 0:
            raise InvariantViolation(f"inconsistent rank data {self}")


def split_prime_one_mod_four_symbol(p: int, k: BaseField) -> int:
    """(eps0, d / P) at either prime P over a split p = 1 (mod 4).

    Equals (p/l)_4 (l/p)_4 for l = 1 mod 8 and (2/p)_4 (p/2)_4 for l = 2.
    """
    if k.is_two:
        return arith.quartic_symbol(2, p) * arith.two_quartic_at_two(p)
    return arith.quartic_symbol(p, k.l) * arith.quartic_symbol(k.l, p)


def two_adic_eps_symbol(K: QuarticField) -> int:
    """(eps0, d / 2_i) when n is even: (2/l)_4 * (-1)^((l-1)/8)."""
    return K.k.two_quartic * K.k.eighth


def symbol_matrix(K: QuarticField) -> SymbolMatrix:
    columns, minus1, eps = [], [], []

    def put(col, m, e):
        columns.append(col)
        minus1.append(m)
        eps.append(e)

    P, M = Entry.PLUS, Entry.MINUS
    for kind, p in ramification_profile(K).places:
        if kind is PlaceKind.SQRT_L:
            put(Column(kind, p), P, P)
        elif kind is PlaceKind.TWO_ADIC_PAIR:
            m = Entry.of((-1) ** K.shape.s)
            e = Entry.of(two_adic_eps_symbol(K)) if K.delta == 2 else Entry.UNKNOWN
            for j in (0, 1):
                put(Column(kind, p, j), m, e)
        elif kind is PlaceKind.INERT_PRIME:
            # [eps0 / p] reduces to (-1/p) since eps0 * conj(eps0) = -1
            put(Column(kind, p), P, P if p % 4 == 1 else M)
        elif p % 4 == 1:
            e = Entry.of(split_prime_one_mod_four_symbol(p, K.k))
            for j in (0, 1):
                put(Column(kind, p, j), P, e)
        else:
            for j in (0, 1):
                put(Column(kind, p, j), M, Entry.OPPOSITE)
    return SymbolMatrix(tuple(columns), tuple(minus1), tuple(eps))


def row_is_norm(row: tuple[Entry, ...]) -> bool:
    """A unit is a norm from K iff all its local symbols are +1.

    The product formula only pins down the product of the two 2-adic
    entries, so an UNKNOWN can never certify a norm.  On valid fields
    every row holding an UNKNOWN already contains a -1 or an opposite
    pair; reaching the raise means the rule table is wrong.
    """
    if any(x in (Entry.MINUS, Entry.OPPOSITE) for x in row):
        return False
    if Entry.UNKNOWN in row:
        raise InvariantViolation("cannot decide norm status: unknown 2-adic symbol")
    return True


def r_star(M: SymbolMatrix) -> int:
    norms = 1 + sum(row_is_norm(row) for row in M.rows().values())
    # the norms among {1, -1, eps0, -eps0} form a subgroup
    if norms not in (1, 2, 4):
        raise InvariantViolation(f"{norms} norm classes among the units mod squares")
    return norms.bit_length() - 1


def rank_generic(K: QuarticField) -> RankResult:
    mu = ramification_profile(K).mu
    rs = r_star(symbol_matrix(K))
    return RankResult(mu=mu, r_star=rs, rank=mu + rs - 3,
                      case_id=case_id(K), path="generic")


# -- closed form ---------------------------------------------------------


def two_quartic_matches(k: BaseField) -> bool:
    """(2/l)_4 == (-1)^((l-1)/8); always False for l = 2, where it is undefined."""
    return not k.is_two and k.two_quartic == k.eighth


def split_quartics_match(shape: FactorizationShape, k: BaseField) -> bool:
    """(p/l)_4 == (l/p)_4 for every split p = 1 (mod 4); (2/p)_4 == (p/2)_4 when l = 2."""
    return all(split_prime_one_mod_four_symbol(p, k) == 1 for p in shape.ones_split)


def _pattern(inert: int, split: int) -> str:
    if split == 0:
        return "inert"
    if inert == 0:
        return "split"
    return "mixed"


def _closed_l1mod8(K: QuarticField) -> tuple[str, int]:
    sh = K.shape
    d = sh.delta
    if sh.s == 0 and sh.t == 0:
        if d == 1:
            return "L1mod8/d1/trivial", 0
        eq = two_quartic_matches(K.k)
        return f"L1mod8/d2/trivial/{'eq' if eq else 'ne'}", 2 if eq else 1
    if sh.s == 0:
        pat = _pattern(sh.t1, sh.t2)
        if d == 1:
            if pat == "inert":
                return "L1mod8/d1/pOnly/inert", sh.t
            eq = split_quartics_match(sh, K.k)
            tag = "eq" if eq else "ne"
            if pat == "split":
                return f"L1mod8/d1/pOnly/split/{tag}", 2 * sh.t - (0 if eq else 1)
            return f"L1mod8/d1/pOnly/mixed/{tag}", sh.t1 + 2 * sh.t2 - (0 if eq else 1)
        A = two_quartic_matches(K.k)
        if pat == "inert":
            return f"L1mod8/d2/pOnly/inert/{'eq' if A else 'ne'}", sh.t + (2 if A else 1)
        eq = A and split_quartics_match(sh, K.k)
        tag = "eq" if eq else "ne"
        if pat == "split":
            return f"L1mod8/d2/pOnly/split/{tag}", 2 * sh.t + (2 if eq else 1)
        return f"L1mod8/d2/pOnly/mixed/{tag}", sh.t1 + 2 * sh.t2 + (2 if eq else 1)

    pat = _pattern(sh.s1, sh.s2)
    family = "qOnly" if sh.t == 0 else "pq"
    if sh.s % 2:
        cid = f"L1mod8/d{d}/{family}/sOdd/{pat}"
        if family == "qOnly":
            rank = {"inert": sh.s, "split": 2 * sh.s,
                    "mixed": sh.s1 + 2 * sh.s2}[pat]
        else:
            rank = {"inert": sh.h + sh.s, "split": sh.h + 2 * sh.s,
                    "mixed": sh.h + sh.s1 + 2 * sh.s2}[pat]
        return cid, rank
    cid = f"L1mod8/d{d}/{family}/sEven/{pat}"
    extra = 2 * (d - 1)
    if family == "qOnly":
        rank = {"inert": sh.s - 1, "split": 2 * sh.s - 2,
                "mixed": sh.s1 + 2 * sh.s2 - 2}[pat]
    else:
        rank = {"inert": sh.h + sh.s - 1, "split": sh.h + 2 * sh.s - 2,
                "mixed": sh.h + sh.s1 + 2 * sh.s2 - 2}[pat]
    return cid, rank + extra


def _closed_l2(K: QuarticField) -> tuple[str, int]:
    sh = K.shape
    if sh.s == 0 and sh.t == 0:
        return "L2/trivial", 0
    if sh.s == 0:
        pat = _pattern(sh.t1, sh.t2)
        if pat == "inert":
            return "L2/pOnly/inert", sh.t
        eq = split_quartics_match(sh, K.k)
        tag = "eq" if eq else "ne"
        if pat == "split":
            return f"L2/pOnly/split/{tag}", 2 * sh.t - (0 if eq else 1)
        return f"L2/pOnly/mixed/{tag}", sh.t1 + 2 * sh.t2 - (0 if eq else 1)
    pat = _pattern(sh.s1, sh.s2)
    if sh.t == 0:
        rank = {"inert": sh.s - 1, "split": 2 * sh.s - 2,
                "mixed": sh.s1 + 2 * sh.s2 - 2}[pat]
        return f"L2/qOnly/{pat}", rank
    rank = {"inert": sh.h + sh.s - 1, "split": sh.h + 2 * sh.s - 2,
            "mixed": sh.h + sh.s1 + 2 * sh.s2 - 2}[pat]
    return f"L2/pq/{pat}", rank


def case_id(K: QuarticField) -> str:
    return (_closed_l2 if K.k.is_two else _closed_l1mod8)(K)[0]


def closed_form_mu(shape: FactorizationShape, l: int) -> int:
    """mu as counted in the proofs: (sqrt l), the two primes over 2 when 2
    ramifies, and h + s1 + 2*s2 primes over the odd factors of n."""
    two_ramifies = l != 2 and (shape.delta == 2 or shape.s % 2 == 1)
    return 1 + 2 * two_ramifies + shape.h + shape.s1 + 2 * shape.s2


def rank_closed_form(K: QuarticField) -> RankResult:
    cid, rank = (_closed_l2 if K.k.is_two else _closed_l1mod8)(K)
    mu = closed_form_mu(K.shape, K.l)
    return RankResult(mu=mu, r_star=rank - mu + 3, rank=rank,
                      case_id=cid, path="closed_form")


# case_id -> (family, rank formula); documents the closed-form branches
CASE_TABLE: dict[str, tuple[str, str]] = {
    "L1mod8/d1/trivial": ("n = 1", "0"),
    "L1mod8/d2/trivial/eq": ("n = 2, (2/l)_4 = (-1)^((l-1)/8)", "2"),
    "L1mod8/d2/trivial/ne": ("n = 2, (2/l)_4 != (-1)^((l-1)/8)", "1"),
    "L1mod8/d1/pOnly/inert": ("n = prod p_i, all (p_i/l) = -1", "t"),
    "L1mod8/d1/pOnly/split/eq": ("n = prod p_i, all split, all quartic pairs agree", "2t"),
    "L1mod8/d1/pOnly/split/ne": ("n = prod p_i, all split, some quartic pair differs", "2t - 1"),
    "L1mod8/d1/pOnly/mixed/eq": ("n = prod p_i prod p'_j, split p' all agree", "t1 + 2 t2"),
    "L1mod8/d1/pOnly/mixed/ne": ("n = prod p_i prod p'_j, some split p' differs", "t1 + 2 t2 - 1"),
    "L1mod8/d2/pOnly/inert/eq": ("n = 2 prod p_i, all inert, (2/l)_4 = (-1)^((l-1)/8)", "t + 2"),
    "L1mod8/d2/pOnly/inert/ne": ("n = 2 prod p_i, all inert, (2/l)_4 != (-1)^((l-1)/8)", "t + 1"),
    "L1mod8/d2/pOnly/split/eq": ("n = 2 prod p_i, all split, 2-condition and all pairs agree", "2t + 2"),
    "L1mod8/d2/pOnly/split/ne": ("n = 2 prod p_i, all split, otherwise", "2t + 1"),
    "L1mod8/d2/pOnly/mixed/eq": ("n = 2 prod p_i prod p'_j, 2-condition and split pairs agree", "t1 + 2 t2 + 2"),
    "L1mod8/d2/pOnly/mixed/ne": ("n = 2 prod p_i prod p'_j, otherwise", "t1 + 2 t2 + 1"),
}
for _d in (1, 2):
    CASE_TABLE.update({
        f"L1mod8/d{_d}/qOnly/sOdd/inert": (f"n = {'2 ' if _d == 2 else ''}prod q_i, s odd, all inert", "s"),
        f"L1mod8/d{_d}/qOnly/sOdd/split": (f"n = {'2 ' if _d == 2 else ''}prod q_i, s odd, all split", "2s"),
        f"L1mod8/d{_d}/qOnly/sOdd/mixed": (f"n = {'2 ' if _d == 2 else ''}prod q_i, s odd, mixed", "s1 + 2 s2"),
        f"L1mod8/d{_d}/qOnly/sEven/inert": (f"n = {'2 ' if _d == 2 else ''}prod q_i, s even, all inert", f"s - 1 + {2 * (_d - 1)}"),
        f"L1mod8/d{_d}/qOnly/sEven/split": (f"n = {'2 ' if _d == 2 else ''}prod q_i, s even, all split", f"2s - 2 + {2 * (_d - 1)}"),
        f"L1mod8/d{_d}/qOnly/sEven/mixed": (f"n = {'2 ' if _d == 2 else ''}prod q_i, s even, mixed", f"s1 + 2 s2 - 2 + {2 * (_d - 1)}"),
        f"L1mod8/d{_d}/pq/sOdd/inert": (f"n = {'2 ' if _d == 2 else ''}prod p prod q, s odd, q all inert", "h + s"),
        f"L1mod8/d{_d}/pq/sOdd/split": (f"n = {'2 ' if _d == 2 else ''}prod p prod q, s odd, q all split", "h + 2s"),
        f"L1mod8/d{_d}/pq/sOdd/mixed": (f"n = {'2 ' if _d == 2 else ''}prod p prod q, s odd, q mixed", "h + s1 + 2 s2"),
        f"L1mod8/d{_d}/pq/sEven/inert": (f"n = {'2 ' if _d == 2 else ''}prod p prod q, s even, q all inert", f"h + s - 1 + {2 * (_d - 1)}"),
        f"L1mod8/d{_d}/pq/sEven/split": (f"n = {'2 ' if _d == 2 else ''}prod p prod q, s even, q all split", f"h + 2s - 2 + {2 * (_d - 1)}"),
        f"L1mod8/d{_d}/pq/sEven/mixed": (f"n = {'2 ' if _d == 2 else ''}prod p prod q, s even, q mixed", f"h + s1 + 2 s2 - 2 + {2 * (_d - 1)}"),
    })
CASE_TABLE.update({
    "L2/trivial": ("n = 1", "0"),
    "L2/pOnly/inert": ("n = prod p_i, all (2/p_i) = -1", "t"),
    "L2/pOnly/split/eq": ("n = prod p_i, all split, (2/p)_4 = (p/2)_4 for all", "2t"),
    "L2/pOnly/split/ne": ("n = prod p_i, all split, some (2/p)_4 != (p/2)_4", "2t - 1"),
    "L2/pOnly/mixed/eq": ("n = prod p_i prod p'_j, split p' all agree", "t1 + 2 t2"),
    "L2/pOnly/mixed/ne": ("n = prod p_i prod p'_j, some split p' differs", "t1 + 2 t2 - 1"),
    "L2/qOnly/inert": ("n = prod q_i, all (2/q_i) = -1", "s - 1"),
    "L2/qOnly/split": ("n = prod q_i, all (2/q_i) = 1", "2s - 2"),
    "L2/qOnly/mixed": ("n = prod q_i, mixed", "s1 + 2 s2 - 2"),
    "L2/pq/inert": ("n = prod p prod q, q all inert", "h + s - 1"),
    "L2/pq/split": ("n = prod p prod q, q all split", "h + 2s - 2"),
    "L2/pq/mixed": ("n = prod p prod q, q mixed", "h + s1 + 2 s2 - 2"),
})
del _d
