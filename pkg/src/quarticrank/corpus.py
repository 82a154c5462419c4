"""Worked examples with known 2-rank, kept as regression data.

The table lives in ``data/corpus.txt`` (format documented in its header).
Each row records n as a factor list, l, the expected rank, the quoted group
type and a ``family/rN/cM`` tag naming the characterisation clause the
example illustrates.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import prod

from . import arith
from .basefield import make_basefield
from .classify import classify_shapes, match_shape
from .errors import InputError
from .quarticfield import make_quarticfield
from .rank import rank_closed_form, rank_generic

_TAG = re.compile(r"^(L1mod8|L2)/r([0-3])/c(\d+)$")


@dataclass(frozen=True)
class CorpusEntry:
    n_factors: tuple[int, ...]
    l: int
    expected_rank: int
    quoted_type: str
    source: str
    line: int = 0

    @property
    def n(self) -> int:
        return prod(self.n_factors)

    @property
    def type_rank(self) -> int:
        """Rank implied by ``quoted_type``: component count, 0 for 'h=odd'."""
        if self.quoted_type.startswith("h="):
            return 0
        return len(self.quoted_type.strip("()").split(","))


def parse_line(text: str, line: int = 0) -> CorpusEntry | None:
    text = text.strip()
    if not text or text.startswith("#"):
        return None
    parts = [p.strip() for p in text.split("|")]
    if len(parts) != 5:
        raise InputError(f"corpus line {line}: expected 5 fields, got {len(parts)}")
    factors_s, l_s, rank_s, qtype, source = parts
    factors = () if factors_s == "1" else tuple(int(f) for f in factors_s.split("*"))
    if not _TAG.match(source):
        raise InputError(f"corpus line {line}: bad source tag {source!r}")
    entry = CorpusEntry(factors, int(l_s), int(rank_s), qtype, source, line)
    if any(not arith.is_prime(p) for p in factors) or len(set(factors)) != len(factors):
        raise InputError(f"corpus line {line}: factors {factors} are not distinct primes")
    if entry.type_rank != entry.expected_rank:
        raise InputError(f"corpus line {line}: type {qtype} does not have rank "
                         f"{entry.expected_rank}")
    return entry


@lru_cache(maxsize=1)
def _load() -> tuple[CorpusEntry, ...]:
    text = resources.files("quarticrank").joinpath("data/corpus.txt").read_text("utf-8")
    entries = (parse_line(t, i) for i, t in enumerate(text.splitlines(), 1))
    return tuple(e for e in entries if e is not None)


def load_corpus() -> list[CorpusEntry]:
    return list(_load())


# Clauses of the characterisation that come with at least one printed
# example.  Every clause does except "n = 1" for l = 2.
CLAUSES_WITH_EXAMPLES: frozenset[str] = frozenset(
    [f"L1mod8/r{r}/c{c}" for r, count in enumerate((1, 4, 8, 11))
     for c in range(1, count + 1)]
    + [f"L2/r{r}/c{c}" for r, count in enumerate((2, 3, 7, 9))
       for c in range(1, count + 1) if (r, c) != (0, 1)]
)


def clause_coverage(entries: list[CorpusEntry] | None = None) -> dict[str, int]:
    """Number of corpus entries per clause tag in ``CLAUSES_WITH_EXAMPLES``."""
    entries = load_corpus() if entries is None else entries
    counts = dict.fromkeys(sorted(CLAUSES_WITH_EXAMPLES), 0)
    for e in entries:
        if e.source in counts:
            counts[e.source] += 1
    return counts


@dataclass(frozen=True)
class Failure:
    entry: CorpusEntry
    message: str
    case_id: str = ""


@dataclass
class CorpusReport:
    checked: list[CorpusEntry] = field(default_factory=list)
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __len__(self) -> int:
        return len(self.checked)


def _check(entry: CorpusEntry) -> Failure | None:
    try:
        k = make_basefield(entry.l)
        K = make_quarticfield(entry.n, k)
        gen, closed = rank_generic(K), rank_closed_form(K)
    except Exception as exc:  # a bad row is report content, never a crash
        return Failure(entry, f"{type(exc).__name__}: {exc}")
    if (gen.rank, closed.rank) != (entry.expected_rank,) * 2:
        return Failure(entry, f"expected rank {entry.expected_rank}, generic "
                              f"{gen.rank}, closed form {closed.rank}", gen.case_id)
    family, r, c = _TAG.match(entry.source).groups()
    descriptor = classify_shapes(k, int(r))[int(c) - 1]
    if not match_shape(entry.n, k, descriptor):
        return Failure(entry, f"n does not match clause {entry.source}", gen.case_id)
    return None


def verify_corpus(l: int | None = None) -> CorpusReport:
    """Check every entry (optionally only those with this l) on both engines."""
    report = CorpusReport()
    for entry in _load():
        if l is not None and entry.l != l:
            continue
        report.checked.append(entry)
        failure = _check(entry)
        if failure:
            report.failures.append(failure)
    return report
