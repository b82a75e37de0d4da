import itertools

import pytest

from bzsum.oracle import dim, singlet_count
from bzsum.three_point import (
    derived_bounds3,
    enumerate3,
    multiplicity3,
    closed_form_bounds3,
    params3,
    summation_order3,
    tensor_coefficient,
    true_triangles,
)
from bzsum.triangles import hexagon_indices, reconstruct_triangle
from bzsum.weights import RankMismatch, Weight, conjugate


def W(*a):
    return Weight(tuple(a))


def box(r, L):
    return [Weight(t) for t in itertools.product(range(L + 1), repeat=r)]


@pytest.mark.parametrize("ws,m", [
    ((W(1, 1), W(1, 1), W(1, 1)), 2),
    ((W(1, 2), W(2, 1), W(3, 3)), 1),
    ((W(0, 0), W(0, 0), W(0, 0)), 1),
    ((W(1, 0), W(1, 0), W(1, 0)), 1),
    ((W(0, 0, 0), W(0, 0, 0), W(0, 0, 0)), 1),
    ((W(1), W(1), W(1)), 0),
    ((W(1, 0), W(1, 0), W(0, 0)), 0),
])
def test_examples(ws, m):
    assert multiplicity3(*ws) == m


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        multiplicity3(W(1), W(1, 0), W(0, 0))


def test_summation_order():
    assert summation_order3(4) == [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 3)]


def test_enumerate_examples():
    assert len(enumerate3(W(1, 1), W(1, 1), W(1, 1))) == 2
    (cv,) = enumerate3(W(1, 0), W(0, 1), W(1, 1))
    assert cv.as_tuple() == (0,)
    assert enumerate3(W(1, 0), W(1, 0), W(0, 0)) == []


def test_enumerated_triangles_are_true():
    for t in true_triangles(W(2, 1), W(1, 2), W(1, 1)):
        assert t.is_true() and t.is_valid_for((2, 1), (1, 2), (1, 1))


def test_tensor_coefficient():
    assert tensor_coefficient(W(1, 0), W(1, 0), W(0, 1)) == 1
    assert tensor_coefficient(W(1, 0), W(1, 0), W(2, 0)) == 1
    assert tensor_coefficient(W(1, 2), W(2, 1), W(3, 3)) == 1
    assert tensor_coefficient(W(1, 0), W(1, 0), W(1, 0)) == 0


@pytest.mark.parametrize("r,L", [(1, 6), (2, 3), (3, 2)])
def test_oracle_equivalence(r, L):
    for ws in itertools.product(box(r, L), repeat=3):
        assert multiplicity3(*ws) == singlet_count(ws), ws


@pytest.mark.parametrize("r,L", [(2, 3), (3, 2)])
def test_symmetries(r, L):
    vals = {ws: multiplicity3(*ws) for ws in itertools.product(box(r, L), repeat=3)}
    for ws, m in vals.items():
        for p in itertools.permutations(ws):
            assert vals[p] == m
        assert vals[tuple(conjugate(w) for w in ws)] == m


@pytest.mark.parametrize("r,L", [(2, 3), (3, 2)])
def test_dimension_sum_rule(r, L):
    from bzsum.four_point import intermediate_weights

    for lam, mu in itertools.product(box(r, L), repeat=2):
        total = sum(tensor_coefficient(lam, mu, nu) * dim(nu) for nu in intermediate_weights(lam, mu))
        assert total == dim(lam) * dim(mu)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_closed_form_and_derived_agree(r):
    import random

    rng = random.Random(r)
    pb, db = closed_form_bounds3(r), derived_bounds3(r)
    n = 0
    while n < 200:
        ws = [tuple(rng.randint(0, 3) for _ in range(r)) for _ in range(3)]
        try:
            P = params3(*ws)
        except ValueError:
            continue
        n += 1
        assert pb.count(P) == db.count(P), ws


def test_box_search_finds_nothing_else():
    # every true triangle of a small coupling is in the enumeration
    for ws in itertools.product(box(2, 2), repeat=3):
        found = {cv.as_tuple() for cv in enumerate3(*ws)}
        if not found and multiplicity3(*ws) == 0:
            continue
        for v in range(-8, 9):
            from bzsum.triangles import CoefficientVector3

            cv = CoefficientVector3(2, {(1, 1): v})
            t = reconstruct_triangle(*ws, cv)
            assert t.is_true() == ((v,) in found)
    assert hexagon_indices(2) == [(1, 1)]
