"""Shape descriptors characterising the n with a given 2-rank (0 to 3).

Each descriptor is one numbered clause of the classification: a list of
alternative ``Pattern`` objects, each fixing delta, the four prime counts
(p = 1 mod 4 inert/split, q = 3 mod 4 inert/split) and an optional symbol
condition.  ``match_shape`` is a pure predicate over those fields.

Symbol conditions:

``two_eq`` / ``two_ne``
    (2/l)_4 = (-1)^((l-1)/8), resp. !=  (only for l = 1 mod 8)
``quartic_eq`` / ``quartic_ne``
    every split p = 1 mod 4 has (p/l)_4 = (l/p)_4 (for l = 2:
    (2/p)_4 = (p/2)_4), resp. at least one does not
``two_and_quartic_eq`` / ``two_or_quartic_ne``
    conjunction of the two ``eq`` conditions, resp. its negation
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .basefield import BaseField
from .quarticfield import FactorizationShape, factorization_shape
from .errors import InvariantViolation
from .rank import split_quartics_match, two_quartic_matches


@dataclass(frozen=True)
class Pattern:
    delta: tuple[int, ...] = (1,)
    t1: int = 0  # p = 1 mod 4, inert in k
    t2: int = 0  # p = 1 mod 4, split in k
    s1: int = 0  # q = 3 mod 4, inert in k
    s2: int = 0  # q = 3 mod 4, split in k
    condition: str | None = None


@dataclass(frozen=True)
class Descriptor:
    clause: str
    text: str
    patterns: tuple[Pattern, ...]

    def to_dict(self) -> dict:
        return {"clause": self.clause, "text": self.text,
                "patterns": [asdict(p) for p in self.patterns]}


def _d(clause, text, *patterns):
    return Descriptor(clause, text, tuple(patterns))


P = Pattern
BOTH = (1, 2)

_L1MOD8 = {
    0: [
        _d("1", "n = 1", P()),
    ],
    1: [
        _d("1", "n = p with (p/l) = -1, or (p/l) = 1 and (p/l)_4 != (l/p)_4",
           P(t1=1), P(t2=1, condition="quartic_ne")),
        _d("2", "n = 2 and (2/l)_4 != (-1)^((l-1)/8)",
           P(delta=(2,), condition="two_ne")),
        _d("3", "n = delta*q with (q/l) = -1", P(delta=BOTH, s1=1)),
        _d("4", "n = q1*q2 with (q1/l) = -1 or (q2/l) = -1",
           P(s1=2), P(s1=1, s2=1)),
    ],
    2: [
        _d("1", "n = p1*p2, both (p_i/l) = -1, or one -1 and the other split "
                "with (p/l)_4 != (l/p)_4",
           P(t1=2), P(t1=1, t2=1, condition="quartic_ne")),
        _d("2", "n = p, (p/l) = 1 and (p/l)_4 = (l/p)_4",
           P(t2=1, condition="quartic_eq")),
        _d("3", "n = 2p, (p/l) = -1 and (2/l)_4 != (-1)^((l-1)/8)",
           P(delta=(2,), t1=1, condition="two_ne")),
        _d("4", "n = 2 and (2/l)_4 = (-1)^((l-1)/8)",
           P(delta=(2,), condition="two_eq")),
        _d("5", "n = delta*q with (q/l) = 1", P(delta=BOTH, s2=1)),
        _d("6", "n = q1*q2 with (q1/l) = (q2/l) = 1", P(s2=2)),
        _d("7", "n = delta*p*q with (p/l) = (q/l) = -1", P(delta=BOTH, t1=1, s1=1)),
        _d("8", "n = p*q1*q2, (p/l) = -1 and (q1/l) = -1 or (q2/l) = -1",
           P(t1=1, s1=2), P(t1=1, s1=1, s2=1)),
    ],
    3: [
        _d("1", "n = 2p with (p/l) = -1 and (2/l)_4 = (-1)^((l-1)/8), or (p/l) = 1 "
                "and [(2/l)_4 != (-1)^((l-1)/8) or (p/l)_4 != (l/p)_4]",
           P(delta=(2,), t1=1, condition="two_eq"),
           P(delta=(2,), t2=1, condition="two_or_quartic_ne")),
        _d("2", "n = p1*p2, both split with some (p_i/l)_4 != (l/p_i)_4, or one inert "
                "and the split one with (p/l)_4 = (l/p)_4",
           P(t2=2, condition="quartic_ne"), P(t1=1, t2=1, condition="quartic_eq")),
        _d("3", "n = 2*p1*p2, both (p_i/l) = -1 and (2/l)_4 != (-1)^((l-1)/8)",
           P(delta=(2,), t1=2, condition="two_ne")),
        _d("4", "n = p1*p2*p3, all inert, or two inert and the split one with "
                "(p/l)_4 != (l/p)_4",
           P(t1=3), P(t1=2, t2=1, condition="quartic_ne")),
        _d("5", "n = delta*q1*q2*q3 with all (q_i/l) = -1", P(delta=BOTH, s1=3)),
        _d("6", "n = q1*q2*q3*q4 with at most one (q_i/l) = 1",
           P(s1=4), P(s1=3, s2=1)),
        _d("7", "n = 2*q1*q2 with at least one (q_i/l) = -1",
           P(delta=(2,), s1=2), P(delta=(2,), s1=1, s2=1)),
        _d("8", "n = delta*p1*p2*q with all symbols (./l) = -1",
           P(delta=BOTH, t1=2, s1=1)),
        _d("9", "n = delta*p*q with (p/l) != (q/l)",
           P(delta=BOTH, t1=1, s2=1), P(delta=BOTH, t2=1, s1=1)),
        _d("10", "n = p1*p2*q1*q2, (p_i/l) = -1 and at most one (q_i/l) = 1",
           P(t1=2, s1=2), P(t1=2, s1=1, s2=1)),
        _d("11", "n = p*q1*q2 with (p/l) = 1 and at most one (q_i/l) = 1, or "
                 "(p/l) = -1 and both (q_i/l) = 1",
           P(t2=1, s1=2), P(t2=1, s1=1, s2=1), P(t1=1, s2=2)),
    ],
}

_L2 = {
    0: [
        _d("1", "n = 1", P()),
        _d("2", "n = q, a prime = 3 (mod 4)", P(s1=1), P(s2=1)),
    ],
    1: [
        _d("1", "n = p with (2/p) = -1, or (2/p) = 1 and (2/p)_4 != (p/2)_4",
           P(t1=1), P(t2=1, condition="quartic_ne")),
        _d("2", "n = q1*q2 with (2/q1) = -1 or (2/q2) = -1",
           P(s1=2), P(s1=1, s2=1)),
        _d("3", "n = p*q with (2/p) = -1", P(t1=1, s1=1), P(t1=1, s2=1)),
    ],
    2: [
        _d("1", "n = p with (2/p) = 1 and (2/p)_4 = (p/2)_4",
           P(t2=1, condition="quartic_eq")),
        _d("2", "n = p1*p2, both (2/p_i) = -1, or one -1 and the split one with "
                "(2/p)_4 != (p/2)_4",
           P(t1=2), P(t1=1, t2=1, condition="quartic_ne")),
        _d("3", "n = q1*q2 with (2/q1) = (2/q2) = 1", P(s2=2)),
        _d("4", "n = q1*q2*q3 with at most one (2/q_i) = 1",
           P(s1=3), P(s1=2, s2=1)),
        _d("5", "n = p1*p2*q with (2/p1) = (2/p2) = -1",
           P(t1=2, s1=1), P(t1=2, s2=1)),
        _d("6", "n = p*q with (2/p) = 1", P(t2=1, s1=1), P(t2=1, s2=1)),
        _d("7", "n = p*q1*q2 with (2/p) = -1 and (2/q1) = -1 or (2/q2) = -1",
           P(t1=1, s1=2), P(t1=1, s1=1, s2=1)),
    ],
    3: [
        _d("1", "n = p1*p2, both split with some (2/p_i)_4 != (p_i/2)_4, or one "
                "inert and the split one with (2/p)_4 = (p/2)_4",
           P(t2=2, condition="quartic_ne"), P(t1=1, t2=1, condition="quartic_eq")),
        _d("2", "n = p1*p2*p3, all (2/p_i) = -1, or two -1 and the split one with "
                "(2/p)_4 != (p/2)_4",
           P(t1=3), P(t1=2, t2=1, condition="quartic_ne")),
        _d("3", "n = q1*q2*q3 with exactly one (2/q_i) = -1", P(s1=1, s2=2)),
        _d("4", "n = q1*q2*q3*q4 with at most one (2/q_i) = 1",
           P(s1=4), P(s1=3, s2=1)),
        _d("5", "n = p1*p2*p3*q with all (2/p_i) = -1",
           P(t1=3, s1=1), P(t1=3, s2=1)),
        _d("6", "n = p*q1*q2*q3 with (2/p) = -1 and at most one (2/q_i) = 1",
           P(t1=1, s1=3), P(t1=1, s1=2, s2=1)),
        _d("7", "n = p1*p2*q1*q2 with (2/p_i) = -1 and (2/q1) = -1 or (2/q2) = -1",
           P(t1=2, s1=2), P(t1=2, s1=1, s2=1)),
        _d("8", "n = p*q1*q2 with (2/p) = 1 and some (2/q_i) = -1, or (2/p) = -1 "
                "and both (2/q_i) = 1",
           P(t2=1, s1=2), P(t2=1, s1=1, s2=1), P(t1=1, s2=2)),
        _d("9", "n = p1*p2*q with (2/p1) != (2/p2)",
           P(t1=1, t2=1, s1=1), P(t1=1, t2=1, s2=1)),
    ],
}


def classify_shapes(k: BaseField, target_rank: int) -> list[Descriptor]:
    """Clauses describing every n whose field has 2-rank ``target_rank``."""
    if target_rank not in (0, 1, 2, 3):
        raise ValueError(f"target_rank must be 0..3, got {target_rank}")
    table = _L2 if k.is_two else _L1MOD8
    return list(table[target_rank])


def _condition_holds(condition: str | None, k: BaseField,
                     shape: FactorizationShape) -> bool:
    if condition is None:
        return True
    two_eq = two_quartic_matches(k)
    quartic_eq = split_quartics_match(shape, k)
    return {
        "two_eq": two_eq,
        "two_ne": not two_eq,
        "quartic_eq": quartic_eq,
        "quartic_ne": not quartic_eq,
        "two_and_quartic_eq": two_eq and quartic_eq,
        "two_or_quartic_ne": not (two_eq and quartic_eq),
    }[condition]


def pattern_matches(pattern: Pattern, k: BaseField, shape: FactorizationShape) -> bool:
    counts = (shape.t1, shape.t2, shape.s1, shape.s2)
    if shape.delta not in pattern.delta:
        return False
    if counts != (pattern.t1, pattern.t2, pattern.s1, pattern.s2):
        return False
    return _condition_holds(pattern.condition, k, shape)


def match_shape(n: int, k: BaseField, descriptor: Descriptor) -> bool:
    shape = factorization_shape(n, k)
    return any(pattern_matches(p, k, shape) for p in descriptor.patterns)


def matching_rank(n: int, k: BaseField) -> int | None:
    """The r in 0..3 whose descriptors match n, or None if n has rank >= 4."""
    shape = factorization_shape(n, k)
    hits = [r for r in range(4) for d in classify_shapes(k, r)
            if any(pattern_matches(p, k, shape) for p in d.patterns)]
    if len(hits) > 1:
        raise InvariantViolation(f"n={n} matches descriptors of ranks {hits}")
    return hits[0] if hits else None


def descriptors_json(k: BaseField, target_rank: int) -> str:
    return json.dumps([d.to_dict() for d in classify_shapes(k, target_rank)])
