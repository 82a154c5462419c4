import pytest

from quarticrank.corpus import (CLAUSES_WITH_EXAMPLES, _check, clause_coverage,
                                load_corpus, parse_line, verify_corpus)
from quarticrank.errors import InputError


def test_size_and_spread():
    entries = load_corpus()
    assert len(entries) >= 40
    assert {e.l for e in entries} == {17, 41, 73, 89, 97, 137, 257, 1753, 1889, 1913, 2}


def _find(factors, l):
    return [e for e in load_corpus() if e.n_factors == tuple(factors) and e.l == l]


@pytest.mark.parametrize("factors, l, rank", [
    ([613], 17, 2), ([59], 2, 0), ([769, 977], 2, 3), ([], 257, 0), ([89], 41, 1),
    ([2, 71, 83], 97, 3), ([2, 1993], 1753, 2),
])
def test_anchor_entries(factors, l, rank):
    (entry,) = _find(factors, l)
    assert entry.expected_rank == rank == entry.type_rank


def test_entries_are_well_formed():
    for e in load_corpus():
        assert e.expected_rank == e.type_rank
        assert len(set(e.n_factors)) == len(e.n_factors)
        assert e.n % e.l != 0 if e.l != 2 else e.n % 2 == 1


def test_full_corpus_passes():
    report = verify_corpus()
    assert report.ok, [(f.entry.line, f.message) for f in report.failures]
    assert len(report) == len(load_corpus())


def test_filters():
    assert len(verify_corpus(5)) == 0
    l2 = verify_corpus(2)
    assert l2.ok and len(l2) == 36


def test_clause_coverage_complete():
    cov = clause_coverage()
    assert set(cov) == CLAUSES_WITH_EXAMPLES
    assert [tag for tag, count in cov.items() if count == 0] == []


def test_broken_entry_is_reported_not_raised():
    bad = parse_line("89 | 41 | 2 | (2,2) | L1mod8/r2/c1")
    failure = _check(bad)
    assert failure is not None and "expected rank 2" in failure.message
    assert failure.case_id == "L1mod8/d1/pOnly/inert"


@pytest.mark.parametrize("line", [
    "89 | 41 | 1 | (2)",
    "89 | 41 | 1 | (2) | somewhere",
    "91 | 41 | 1 | (2) | L1mod8/r1/c1",
    "89 | 41 | 2 | (2) | L1mod8/r1/c1",
])
def test_parse_errors(line):
    with pytest.raises(InputError):
        parse_line(line, 7)


def test_parse_skips_comments():
    assert parse_line("# comment") is None
    assert parse_line("   ") is None
    assert parse_line("1 | 257 | 0 | h=3 | L1mod8/r0/c1").n == 1
