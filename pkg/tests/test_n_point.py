import itertools
import random

import pytest

from bzsum.n_point import CouplingQuery, channel_fold, diagram_count_n, multiplicity_n
from bzsum.oracle import singlet_count
from bzsum.weights import RankMismatch, Weight


def W(*a):
    return Weight(tuple(a))


def test_query_validation():
    with pytest.raises(ValueError):
        CouplingQuery.of([W(1), W(1)])
    with pytest.raises(RankMismatch):
        CouplingQuery.of([W(1), W(1), W(1, 0)])
    assert CouplingQuery.of([W(1)] * 5).points == 5


@pytest.mark.parametrize("ws,m", [
    ([W(1), W(1), W(1), W(1), W(2)], 3),
    ([W(1)] * 5, 0),
    ([W(1, 0)] * 3 + [W(0, 0)] * 2, 1),
    ([W(0, 0)] * 5, 1),
])
def test_examples(ws, m):
    assert multiplicity_n(ws) == m


def test_delegation():
    ws = [W(1, 1)] * 4
    assert multiplicity_n(ws) == 8
    assert multiplicity_n(ws[:3]) == 2


def test_fold_directions_su2():
    for q in itertools.product(range(4), repeat=5):
        ws = [W(x) for x in q]
        a = multiplicity_n(ws)
        assert a == multiplicity_n(ws, reverse=True) == singlet_count(ws)


def test_permutation_invariance():
    rng = random.Random(3)
    for _ in range(40):
        ws = [W(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(5)]
        m = multiplicity_n(ws)
        for _ in range(3):
            p = ws[:]
            rng.shuffle(p)
            assert multiplicity_n(p) == m


def test_dropping_zero_weight():
    rng = random.Random(4)
    for _ in range(40):
        ws = [W(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(5)]
        assert multiplicity_n(ws + [W(0, 0)]) == multiplicity_n(ws)


def test_diagram_count_matches_su2_five_points():
    for q in itertools.product(range(3), repeat=5):
        ws = [W(x) for x in q]
        assert diagram_count_n(ws) == multiplicity_n(ws)


def test_diagram_count_small_cases():
    assert diagram_count_n([W(0, 0)] * 5) == 1
    assert diagram_count_n([W(1, 0)] * 5) == 0
    assert diagram_count_n([W(1, 1)] * 3) == 2
    assert diagram_count_n([W(1, 1)] * 4) == 8
    assert diagram_count_n([W(1, 0), W(0, 1), W(1, 0), W(0, 1), W(1, 1)]) == multiplicity_n(
        [W(1, 0), W(0, 1), W(1, 0), W(0, 1), W(1, 1)])


def test_diagram_count_six_points():
    ws = [W(1), W(1), W(2), W(1), W(1), W(2)]
    assert diagram_count_n(ws) == singlet_count(ws)


def test_diagram_count_limits():
    with pytest.raises(ValueError):
        diagram_count_n([W(1)] * 7)
    with pytest.raises(ValueError):
        diagram_count_n([W(0, 0, 0)] * 4)


def test_channel_fold_is_plain_product_sum():
    # 8 x 8 x 8 x 8 x 8 singlets
    assert channel_fold([W(1, 1)] * 5) == singlet_count([W(1, 1)] * 5)
