import itertools

import pytest

from bzsum.four_point import (
    channel_decompose4,
    cone_su2,
    cone_su3,
    derived_bounds4,
    enumerate4,
    multiplicity4,
    multiplicity4_su2,
    multiplicity4_su3,
    multiplicity4_su4,
    closed_form_bounds4,
    params4,
    true_diagrams,
    variables4,
)
from bzsum.oracle import singlet_count
from bzsum.three_point import multiplicity3
from bzsum.weights import RankMismatch, Weight


def W(*a):
    return Weight(tuple(a))


def box(r, L):
    return [Weight(t) for t in itertools.product(range(L + 1), repeat=r)]


@pytest.mark.parametrize("ws,m", [
    ((W(1), W(1), W(1), W(1)), 2),
    ((W(1, 0), W(0, 1), W(1, 0), W(0, 1)), 2),
    ((W(1, 1),) * 4, 8),
    ((W(0, 0),) * 4, 1),
    ((W(0, 0, 0),) * 4, 1),
    ((W(1, 0, 0), W(0, 0, 1), W(1, 0, 0), W(0, 0, 1)), 2),
    ((W(1, 0), W(1, 0), W(1, 0), W(1, 0)), 0),
])
def test_examples(ws, m):
    assert multiplicity4(*ws) == m
    assert channel_decompose4(*ws).total == m


@pytest.mark.parametrize("args,m", [((1, 1, 1, 1), 2), ((1, 1, 1, 3), 1), ((0, 0, 0, 0), 1),
                                    ((2, 2, 2, 2), 3), ((1, 0, 0, 0), 0)])
def test_su2_sum(args, m):
    assert multiplicity4_su2(*args) == m


def test_explicit_sums_examples():
    assert multiplicity4_su3(W(1, 0), W(0, 1), W(1, 0), W(0, 1)) == 2
    assert multiplicity4_su3(W(1, 1), W(1, 1), W(1, 1), W(1, 1)) == 8
    assert multiplicity4_su3(W(0, 0), W(0, 0), W(0, 0), W(0, 0)) == 1
    adj = W(1, 0, 1)
    assert multiplicity4_su4(W(1, 0, 0), W(0, 0, 1), W(1, 0, 0), W(0, 0, 1)) == 2
    assert multiplicity4_su4(adj, adj, adj, adj) == channel_decompose4(adj, adj, adj, adj).total
    assert multiplicity4_su4(W(0, 0, 0), W(0, 0, 0), W(0, 0, 0), W(0, 0, 0)) == 1
    with pytest.raises(RankMismatch):
        multiplicity4_su3(W(1), W(1), W(1), W(1))
    with pytest.raises(RankMismatch):
        multiplicity4_su4(W(1, 0), W(0, 1), W(1, 0), W(0, 1))


def test_channel_breakdown():
    d = channel_decompose4(W(1, 0), W(0, 1), W(1, 0), W(0, 1))
    assert d.total == 2 and set(d.terms) == {W(0, 0), W(1, 1)}
    d = channel_decompose4(W(1), W(1), W(1), W(1))
    assert set(d.terms) == {W(0), W(2)}
    lam, mu, nu = W(2, 1), W(1, 1), W(0, 2)
    assert channel_decompose4(lam, mu, nu, W(0, 0)).total == multiplicity3(lam, mu, nu)


def test_enumerate_examples():
    vs = enumerate4(W(1), W(1), W(1), W(1))
    assert sorted(cv.g for cv in vs) == [(0,), (1,)]
    (z,) = enumerate4(W(0, 0), W(0, 0), W(0, 0), W(0, 0))
    assert set(z.as_tuple()) == {0}
    assert enumerate4(W(1, 0), W(1, 0), W(0, 0), W(0, 0)) == []


def test_enumerated_diagrams_are_true():
    ws = [W(1, 1)] * 4
    ds = true_diagrams(*ws)
    assert len(ds) == 8
    for d in ds:
        assert d.is_true() and d.is_valid_for(ws)
    assert len({d.entries() for d in ds}) == 8


def test_order_of_variables():
    assert variables4(3) == ["a_1_1", "a_2_1", "a_1_2", "g_3", "g_2", "g_1", "b_1_2", "b_2_1", "b_1_1"]


@pytest.mark.parametrize("r,L", [(2, 2), (3, 1)])
def test_closed_form_bounds_against_oracle(r, L):
    pb = closed_form_bounds4(r)
    for ws in itertools.product(box(r, L), repeat=4):
        try:
            P = params4(*(w.labels for w in ws))
        except ValueError:
            continue
        assert pb.count(P) == singlet_count(ws), ws


@pytest.mark.parametrize("r", [2, 3, 4])
def test_closed_form_and_derived_agree(r):
    import random

    rng = random.Random(10 + r)
    pb, db = closed_form_bounds4(r), derived_bounds4(r)
    n = 0
    while n < 150:
        ws = [tuple(rng.randint(0, 2) for _ in range(r)) for _ in range(4)]
        try:
            P = params4(*ws)
        except ValueError:
            continue
        n += 1
        assert pb.count(P) == db.count(P), ws


def test_rank_one_derived():
    db = derived_bounds4(1)
    for q in itertools.product(range(5), repeat=4):
        if sum(q) % 2:
            continue
        assert db.count(params4(*[(x,) for x in q])) == multiplicity4_su2(*q)


def test_s4_symmetry_su3():
    vals = {ws: multiplicity4(*ws) for ws in itertools.product(box(2, 2), repeat=4)}
    for ws, m in vals.items():
        for p in itertools.permutations(ws):
            assert vals[p] == m


def test_reduction_to_three_point():
    for lam, mu, nu in itertools.product(box(2, 3), repeat=3):
        assert multiplicity4(lam, mu, nu, W(0, 0)) == multiplicity3(lam, mu, nu)


def test_cone_examples():
    assert cone_su2(1, 1, 1, 1).member
    rep = cone_su2(3, 0, 0, 1)
    assert not rep.member and "S-lambda_1 >= 0" in rep.violated
    assert cone_su2(0, 0, 0, 0).member
    assert cone_su3(W(1, 0), W(0, 1), W(1, 0), W(0, 1)).member
    assert not cone_su3(W(1, 0), W(1, 0), W(1, 0), W(1, 0)).member
    assert cone_su3(W(1, 0), W(0, 1), W(0, 0), W(0, 0)).member
    with pytest.raises(RankMismatch):
        cone_su3(W(1), W(1), W(1), W(1))


def test_cone_report_consistency():
    for q in itertools.product(range(4), repeat=4):
        rep = cone_su2(*q)
        assert rep.member == (not rep.violated)
