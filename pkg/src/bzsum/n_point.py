"""N-point multiplicities through string-like channels.

``multiplicity_n`` folds the channel one intermediate weight at a time,
using the three-point nested sums for every factor.  ``diagram_count_n``
counts true glued diagrams directly and serves as a small-scale cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .four_point import intermediate_weights, multiplicity4
from .three_point import multiplicity3
from .triangles import (
    _virtual_entries,
    gluing_root_n,
    hexagon_indices,
    initial_diagram_n,
    initial_entries,
    num_entries,
)
from .weights import RankMismatch, Weight, as_weight, conjugate, root_lattice_check


@dataclass(frozen=True)
class CouplingQuery:
    rank: int
    weights: tuple

    def __post_init__(self):
        ws = tuple(as_weight(w) for w in self.weights)
        if len(ws) < 3:
            raise ValueError("an N-point coupling needs at least three weights")
        if any(w.rank != self.rank for w in ws):
            raise RankMismatch("weights of different ranks")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def of(cls, ws) -> CouplingQuery:
        ws = [as_weight(w) for w in ws]
        if not ws:
            raise ValueError("no weights given")
        return cls(ws[0].rank, tuple(ws))

    @property
    def points(self) -> int:
        return len(self.weights)


def _query(q) -> CouplingQuery:
    return q if isinstance(q, CouplingQuery) else CouplingQuery.of(q)


@lru_cache(maxsize=200_000)
def _couples(rho: Weight, w: Weight) -> tuple:
    """((kappa, mult), ...) for kappa in rho (x) w, each mult computed by the nested sum."""
    out = []
    for kappa in intermediate_weights(rho, w):
        m = multiplicity3(rho, w, conjugate(kappa))
        if m:
            out.append((kappa, m))
    return tuple(out)


def channel_fold(ws) -> int:
    """sum over rho_1..rho_{N-3} of the product of three-point factors along the string."""
    ws = list(ws)
    acc = {ws[0]: 1}
    for w in ws[1:-2]:
        nxt: dict = {}
        for rho, m in acc.items():
            for kappa, k in _couples(rho, w):
                nxt[kappa] = nxt.get(kappa, 0) + m * k
        acc = nxt
    a, b = ws[-2], ws[-1]
    return sum(m * multiplicity3(rho, a, b) for rho, m in acc.items())


def multiplicity_n(q, reverse: bool = False) -> int:
    """Singlet multiplicity of the tensor product of all query weights.

    Three and four points go through the dedicated nested sums; longer
    strings are folded channel by channel (``reverse`` folds from the right).
    """
    q = _query(q)
    ws = list(q.weights)
    if root_lattice_check(ws) is None:
        return 0
    if q.points == 3:
        return multiplicity3(*ws)
    if q.points == 4:
        return multiplicity4(*ws)
    return channel_fold(ws[::-1] if reverse else ws)


class BoxTooSmall(RuntimeError):
    pass


def _coordinates(r: int, points: int):
    """Columns of the diagram lattice: one per hexagon per triangle, one per gluing root."""
    tris = points - 2
    size = num_entries(r)
    cols = []
    for a in range(tris):
        for h in hexagon_indices(r):
            col = [0] * (tris * size)
            for p, c in enumerate(_virtual_entries(r, *h)):
                col[a * size + p] = c
            cols.append((("v", a, h), col))
    for a in range(max(points - 3, 0)):
        for i in range(1, r + 1):
            col = [0] * (tris * size)
            for b, tri in enumerate(gluing_root_n(r, points, a, i)):
                for p, c in enumerate(tri):
                    col[b * size + p] = -c
            cols.append((("g", a, i), col))
    return cols


def diagram_count_n(q, max_points: int = 6, max_rank: int = 2) -> int:
    """Count true glued string diagrams by a pruned search over a finite box.

    B is the largest absolute initial entry plus the total label sum.
    Every coordinate is searched in [-B-1, B+1]; a true diagram on that
    outer layer raises ``BoxTooSmall``.
    """
    q = _query(q)
    r, points = q.rank, q.points
    if points > max_points or r > max_rank:
        raise ValueError(f"diagram counting is limited to N <= {max_points}, r <= {max_rank}")
    ws = list(q.weights)
    if root_lattice_check(ws) is None:
        return 0
    if points == 3:
        base = list(initial_entries(ws[0].labels, ws[1].labels, ws[2].labels))
    else:
        d0 = initial_diagram_n(ws)
        if not d0.is_valid_for(ws):
            raise AssertionError("initial diagram does not satisfy its own constraints")
        base = list(d0.entries())
    cols = _coordinates(r, points)
    B = max(abs(x) for x in base) + sum(sum(w.labels) for w in ws) + 1
    n = len(cols)
    if n == 0:
        return 1 if all(x >= 0 for x in base) else 0
    m = len(base)
    # slack[k][e]: the most that coordinates k.. can still add to entry e
    slack = [[0] * m for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        col = cols[k][1]
        slack[k] = [slack[k + 1][e] + abs(col[e]) * B for e in range(m)]
    nz = [[(e, c) for e, c in enumerate(col) if c] for _, col in cols]

    count = 0
    hits_boundary = False
    cur = list(base)
    xs = [0] * n

    def rec(k):
        nonlocal count, hits_boundary
        if k == n:
            if all(x >= 0 for x in cur):
                count += 1
                if any(abs(x) == B for x in xs):
                    hits_boundary = True
            return
        sl = slack[k + 1]
        for x in range(-B, B + 1):
            ok = True
            for e, c in nz[k]:
                cur[e] += c * x
            for e in range(m):
                if cur[e] + sl[e] < 0:
                    ok = False
                    break
            if ok:
                xs[k] = x
                rec(k + 1)
            for e, c in nz[k]:
                cur[e] -= c * x

    rec(0)
    if hits_boundary:
        raise BoxTooSmall(f"a true diagram reaches |x| = {B}")
    return count

