import json
from math import gcd

import pytest

from quarticrank.arith import is_squarefree
from quarticrank.basefield import make_basefield
from quarticrank.classify import (classify_shapes, descriptors_json, match_shape,
                                  matching_rank)
from quarticrank.quarticfield import make_quarticfield
from quarticrank.rank import rank_generic

LS = [17, 41, 73, 89, 97, 113, 137, 2]


@pytest.mark.parametrize("l, counts", [(17, [1, 4, 8, 11]), (2, [2, 3, 7, 9])])
def test_descriptor_counts(l, counts):
    k = make_basefield(l)
    assert [len(classify_shapes(k, r)) for r in range(4)] == counts
    for r in range(4):
        assert [d.clause for d in classify_shapes(k, r)] == \
            [str(i) for i in range(1, counts[r] + 1)]


def test_bad_rank():
    with pytest.raises(ValueError):
        classify_shapes(make_basefield(17), 4)


@pytest.mark.parametrize("l", LS)
def test_match_iff_rank(l):
    k = make_basefield(l)
    for n in range(1, 1200):
        if gcd(n, l) > 1 or not is_squarefree(n):
            continue
        r = rank_generic(make_quarticfield(n, k)).rank
        assert matching_rank(n, k) == (r if r <= 3 else None), n


def test_match_shape_examples():
    k = make_basefield(17)
    # 613 is split in Q(sqrt 17) with (613/17)_4 = (17/613)_4
    assert match_shape(613, k, classify_shapes(k, 2)[1])
    assert not match_shape(613, k, classify_shapes(k, 1)[0])
    k2 = make_basefield(2)
    assert match_shape(59, k2, classify_shapes(k2, 0)[1])
    assert match_shape(1, k2, classify_shapes(k2, 0)[0])


def test_json_round_trip():
    data = json.loads(descriptors_json(make_basefield(2), 1))
    assert [d["clause"] for d in data] == ["1", "2", "3"]
    assert data[0]["patterns"][1]["condition"] == "quartic_ne"
