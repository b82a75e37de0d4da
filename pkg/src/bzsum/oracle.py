"""Independent ground truth: Littlewood-Richardson products and Weyl dimensions.

Nothing here touches triangles or bound systems.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from math import prod
from typing import Sequence

from .weights import Weight, RankMismatch, as_weight


def to_partition(labels: Sequence[int]) -> tuple[int, ...]:
    """Dynkin labels -> partition with r rows, row i = sum_{j>=i} labels_j."""
    parts, acc = [], 0
    for x in reversed(labels):
        acc += x
        parts.append(acc)
    return tuple(reversed(parts))


def from_partition(p: Sequence[int], r: int) -> tuple[int, ...]:
    """Partition with at most r+1 rows -> su(r+1) Dynkin labels (full columns drop out)."""
    p = list(p) + [0] * (r + 1 - len(p))
    return tuple(p[i] - p[i + 1] for i in range(r))


def _add_strips(shape, mu, label, counts, max_rows):
    """Yield (shape, counts) after adding mu[label-1] boxes labelled ``label``.

    ``counts[row][l]`` is how many boxes labelled l+1 sit in that row.  The
    boxes form a horizontal strip and keep the reverse reading word a
    lattice word.
    """
    need = mu[label - 1]
    rows = len(shape)

    def rec(row, left, new_shape, new_counts, placed_above):
        if left == 0:
            yield tuple(new_shape), tuple(new_counts)
            return
        if row >= max_rows:
            return
        cur = shape[row] if row < rows else 0
        # horizontal strip: cannot pass the old length of the row above
        cap = (shape[row - 1] if row - 1 < rows else 0) - cur if row > 0 else left
        cap = min(cap, left)
        for k in range(cap, -1, -1):
            if label > 1 and k:
                prev_above = sum(c[label - 2] for c in new_counts[:row])
                if placed_above + k > prev_above:
                    continue
            ns = list(new_shape)
            nc = list(new_counts)
            if row < len(ns):
                ns[row] = cur + k
            elif k:
                ns.append(k)
            else:
                # nothing to add in an empty row: stop here
                continue
            if row < len(nc):
                c = list(nc[row])
                c[label - 1] += k
                nc[row] = tuple(c)
            else:
                c = [0] * len(mu)
                c[label - 1] = k
                nc.append(tuple(c))
            yield from rec(row + 1, left - k, ns, nc, placed_above + k)

    yield from rec(0, need, list(shape), list(counts), 0)


@lru_cache(maxsize=None)
def lr_partitions(lam: tuple[int, ...], mu: tuple[int, ...], max_rows: int) -> dict:
    """Littlewood-Richardson product s_lam * s_mu truncated to ``max_rows`` rows."""
    lam = tuple(x for x in lam if x)
    mu = tuple(x for x in mu if x)
    zero = (0,) * len(mu)
    states = {(lam, tuple(zero for _ in lam)): 1}
    for label in range(1, len(mu) + 1):
        nxt = {}
        for (shape, counts), m in states.items():
            for s, c in _add_strips(shape, mu, label, counts, max_rows):
                nxt[(s, c)] = nxt.get((s, c), 0) + m
        states = nxt
    out = {}
    for (shape, _), m in states.items():
        out[shape] = out.get(shape, 0) + m
    return out


@lru_cache(maxsize=None)
def _lr_decompose(lam: tuple[int, ...], mu: tuple[int, ...]) -> dict:
    r = len(lam)
    out = {}
    for shape, m in lr_partitions(to_partition(lam), to_partition(mu), r + 1).items():
        key = from_partition(shape, r)
        out[key] = out.get(key, 0) + m
    return out


def lr_decompose(lam, mu) -> dict[Weight, int]:
    """M_lam (x) M_mu as {highest weight: multiplicity}."""
    lam, mu = as_weight(lam), as_weight(mu)
    if lam.rank != mu.rank:
        raise RankMismatch("weights of different ranks")
    return {Weight(k): m for k, m in _lr_decompose(lam.labels, mu.labels).items()}


def _product(acc: dict, w: tuple) -> dict:
    out = {}
    for x, m in acc.items():
        for y, k in _lr_decompose(x, w).items():
            out[y] = out.get(y, 0) + m * k
    return out


def _reduce(ws: list) -> dict:
    if len(ws) == 1:
        return {ws[0]: 1}
    if len(ws) == 2:
        return _lr_decompose(ws[0], ws[1])
    return reduce(_product, ws[1:], {ws[0]: 1})


def singlet_count(ws) -> int:
    """Multiplicity of the trivial module in the tensor product of all weights.

    The weights are split into two halves, each half is decomposed with the
    LR rule, and the singlets are the pairs (X, X^+) across the halves.
    """
    ws = [as_weight(w) for w in ws]
    if len(ws) < 2:
        raise ValueError("need at least two weights")
    r = ws[0].rank
    if any(w.rank != r for w in ws):
        raise RankMismatch("weights of different ranks")
    labels = [w.labels for w in ws]
    half = (len(labels) + 1) // 2
    left, right = _reduce(labels[:half]), _reduce(labels[half:])
    return sum(m * right.get(x[::-1], 0) for x, m in left.items())


def dim(w) -> int:
    """Weyl dimension formula for su(r+1)."""
    lab = as_weight(w).labels
    r = len(lab)
    num = prod(sum(lab[i - 1 : j]) + j - i + 1 for i in range(1, r + 1) for j in range(i, r + 1))
    den = prod(j - i + 1 for i in range(1, r + 1) for j in range(i, r + 1))
    return num // den
