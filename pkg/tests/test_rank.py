from math import gcd

import pytest
from hypothesis import given, settings, strategies as st
from sympy.ntheory import sqrt_mod

from quarticrank.arith import is_squarefree, legendre
from quarticrank.basefield import make_basefield
from quarticrank.errors import InvariantViolation
from quarticrank.quarticfield import PlaceKind, make_quarticfield, ramification_profile
from quarticrank.rank import (CASE_TABLE, Entry, RankResult, case_id, r_star,
                              rank_closed_form, rank_generic, row_is_norm,
                              split_prime_one_mod_four_symbol, symbol_matrix)

LS = [17, 41, 73, 89, 97, 113, 137, 2]


def fields(l, bound):
    k = make_basefield(l)
    for n in range(1, bound + 1):
        if gcd(n, l) == 1 and is_squarefree(n):
            yield make_quarticfield(n, k)


# -- independent oracle for the odd-prime columns --------------------------
#
# At a prime P of k over an odd p | n, P ramifies tamely in K = k(sqrt d) and
# d has valuation 1, so (alpha, d / P) is the quadratic residue symbol of the
# unit alpha in the residue field O_k / P.  Split p: O_k/P = F_p with sqrt l
# mapped to a root r of x^2 = l.  Inert p: O_k/P = F_p[x]/(x^2 - l).

def _residue_split(u, v, r, p):
    return legendre(u + v * r, p)


def _residue_inert(u, v, l, p):
    # (u + v x)^((p^2 - 1)/2) in F_p[x]/(x^2 - l)
    def mul(a, b):
        return ((a[0] * b[0] + l * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)
    acc, base, e = (1, 0), (u % p, v % p), (p * p - 1) // 2
    while e:
        if e & 1:
            acc = mul(acc, base)
        base = mul(base, base)
        e >>= 1
    assert acc[1] == 0 and acc[0] in (1, p - 1)
    return 1 if acc[0] == 1 else -1


def oracle_columns(K):
    """{prime: (minus1 entries, eps entries)} for the odd primes of n."""
    k = K.k
    out = {}
    for p in K.shape.odd_primes:
        if legendre(k.l, p) == 1:
            roots = sorted(sqrt_mod(k.l, p, all_roots=True))
            out[p] = ([legendre(-1, p)] * 2, [_residue_split(k.u, k.v, r, p) for r in roots])
        else:
            out[p] = ([_residue_inert(-1, 0, k.l, p)],
                      [_residue_inert(k.u, k.v, k.l, p)])
    return out


def _entry_matches(entries, signs):
    if entries == [Entry.OPPOSITE] * 2:
        return sorted(signs) == [-1, 1]
    return [Entry.of(s) for s in signs] == entries


@pytest.mark.parametrize("l", LS)
def test_symbol_matrix_matches_residue_oracle(l):
    for K in fields(l, 700):
        M = symbol_matrix(K)
        oracle = oracle_columns(K)
        for p, (m_signs, e_signs) in oracle.items():
            idx = [i for i, c in enumerate(M.columns) if c.prime == p]
            assert _entry_matches([M.row_minus1[i] for i in idx], m_signs), (K.n, p)
            assert _entry_matches([M.row_eps[i] for i in idx], e_signs), (K.n, p)


@pytest.mark.parametrize("l", [2, 17, 41, 73, 89, 257])
def test_split_p_symbol_convention(l):
    # the rule (p/l)_4 (l/p)_4, and (2/p)_4 (p/2)_4 with (p/2)_4 = (-1)^((p-1)/8)
    # for l = 2, agrees with the residue of eps0 at both primes over p
    k = make_basefield(l)
    for p in range(5, 4000, 4):
        if p == l or not all(p % q for q in range(2, int(p ** 0.5) + 1)):
            continue
        if legendre(l, p) != 1:
            continue
        want = split_prime_one_mod_four_symbol(p, k)
        for r in sqrt_mod(l, p, all_roots=True):
            assert _residue_split(k.u, k.v, r, p) == want, (l, p)


def test_sqrt_l_column_is_plus():
    # eps0 = u (mod sqrt l) and u^2 = -1 (mod l), so (u/l) = (-1)^((l-1)/4) = 1
    for l in LS[:-1]:
        k = make_basefield(l)
        assert legendre(k.u, l) == 1 and legendre(-1, l) == 1


# -- structural invariants ------------------------------------------------

def test_entry_products():
    P, M, O, U = Entry.PLUS, Entry.MINUS, Entry.OPPOSITE, Entry.UNKNOWN
    assert P * P is P and P * M is M and M * M is P
    assert M * O is O and P * O is O and U * P is U and U * O is U
    with pytest.raises(InvariantViolation):
        O * O


def test_row_is_norm():
    P, M, O, U = Entry.PLUS, Entry.MINUS, Entry.OPPOSITE, Entry.UNKNOWN
    assert row_is_norm((P, P))
    assert not row_is_norm((P, M))
    assert not row_is_norm((O, O))
    assert not row_is_norm((U, U, M))
    with pytest.raises(InvariantViolation):
        row_is_norm((P, U, U))


@pytest.mark.parametrize("l", LS)
def test_matrix_invariants(l):
    for K in fields(l, 1500):
        M = symbol_matrix(K)
        assert len(M.row_minus1) == len(M.row_eps) == len(M.columns)
        assert len(M.columns) == ramification_profile(K).mu
        assert M.row_minus_eps == tuple(a * b for a, b in zip(M.row_minus1, M.row_eps))
        for row in M.rows().values():
            if Entry.UNKNOWN in row:
                assert K.delta == 1
                assert any(x in (Entry.MINUS, Entry.OPPOSITE) for x in row)
            if Entry.OPPOSITE in row:
                assert not row_is_norm(row)
        rs = r_star(M)
        assert rs in (0, 1, 2)
        assert (rs == 2) == (all(x is Entry.PLUS for x in M.row_minus1 + M.row_eps))


def test_two_adic_columns():
    K = make_quarticfield(2, make_basefield(17))
    cols = [c for c in symbol_matrix(K).columns if c.kind is PlaceKind.TWO_ADIC_PAIR]
    assert [c.conjugate for c in cols] == [0, 1]


def test_rank_result_validation():
    with pytest.raises(InvariantViolation):
        RankResult(mu=2, r_star=2, rank=0, case_id="x", path="generic")
    with pytest.raises(InvariantViolation):
        RankResult(mu=1, r_star=1, rank=-1, case_id="x", path="generic")


# -- dual path --------------------------------------------------------------

@pytest.mark.parametrize("l", LS)
def test_dual_path_small(l):
    for K in fields(l, 1000):
        g, c = rank_generic(K), rank_closed_form(K)
        assert (g.rank, g.mu, g.r_star) == (c.rank, c.mu, c.r_star), K.n
        assert g.case_id == c.case_id == case_id(K)
        assert c.case_id in CASE_TABLE


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(LS + [257, 1753, 1889, 1913]), st.integers(1, 10**7))
def test_dual_path_random(l, n):
    if gcd(n, l) > 1 or not is_squarefree(n):
        return
    K = make_quarticfield(n, make_basefield(l))
    assert rank_generic(K).rank == rank_closed_form(K).rank


@pytest.mark.parametrize("l", LS)
def test_rank_zero_characterisation(l):
    for K in fields(l, 1500):
        zero = rank_generic(K).rank == 0
        if l == 2:
            expected = K.n == 1 or (len(K.factors) == 1 and K.n % 4 == 3)
        else:
            expected = K.n == 1
        assert zero == expected, K.n


def test_spot_ranks():
    cases = [(89, 41, 1), (1, 17, 0), (613, 17, 2), (59, 2, 0), (769 * 977, 2, 3),
             (2 * 71 * 83, 97, 3), (2, 1913, 1), (2, 1889, 2)]
    for n, l, r in cases:
        assert rank_generic(make_quarticfield(n, make_basefield(l))).rank == r


def test_every_case_id_is_reached():
    seen = {rank_closed_form(K).case_id for l in LS for K in fields(l, 2000)}
    # delta = 2 with p, and an odd number of q of both kinds, needs n > 2000
    K = make_quarticfield(2 * 3 * 5 * 7 * 19, make_basefield(17))
    assert rank_closed_form(K).case_id == "L1mod8/d2/pq/sOdd/mixed"
    assert rank_generic(K).rank == rank_closed_form(K).rank == 5
    seen.add("L1mod8/d2/pq/sOdd/mixed")
    assert seen == set(CASE_TABLE)
