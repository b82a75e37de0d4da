"""Generalised Berenstein-Zelevinsky triangles and glued diagrams.

Layout
------
An su(r+1) triangle is a triangle of ``r(r+1)/2`` small upward triangles.
Small triangle ``(t, k)`` (row ``t = 1..r`` from the top, ``k = 1..t`` from
the left) carries three entries: its top corner ``T(t, k)`` and its two
bottom corners ``L(t, k)`` and ``R(t, k)``.  Entries are stored
in row-major order: for each ``t`` an m-row ``T(t, 1..t)`` followed by an
nl-row ``L(t,1), R(t,1), ..., L(t,t), R(t,t)``.  For su(3) this is::

            m13                     T11
        n12     l23             L11     R11
      m23         m12   <->   T21         T22
    n13  l12   n23  l13     L21  R21   L22  R22

The first weight sits on the left edge (top to bottom), the second on the
bottom edge (left to right) and the third on the right edge (bottom to top).
Each downward gap between rows ``t`` and ``t+1`` is a hexagon; hexagon
``(i, j)`` is the gap below small triangle ``(r - i, j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .weights import (
    Weight,
    NotInRootLattice,
    RankMismatch,
    as_weight,
    conjugate,
    coupling_param_labels,
    root_lattice_check,
    simple_root,
)


def num_entries(r: int) -> int:
    return 3 * r * (r + 1) // 2


def num_hexagons(r: int) -> int:
    return r * (r - 1) // 2


def _offset(t: int) -> int:
    return 3 * t * (t - 1) // 2


def idx_T(t: int, k: int) -> int:
    return _offset(t) + k - 1


def idx_L(t: int, k: int) -> int:
    return _offset(t) + t + 2 * (k - 1)


def idx_R(t: int, k: int) -> int:
    return _offset(t) + t + 2 * (k - 1) + 1


def hexagon_indices(r: int) -> list[tuple[int, int]]:
    """All (i, j) with i, j >= 1 and i + j <= r, in a fixed sorted order."""
    return [(i, j) for i in range(1, r) for j in range(1, r - i + 1)]


def _check_hexagon(r: int, i: int, j: int):
    if not (i >= 1 and j >= 1 and i + j <= r):
        raise ValueError(f"no hexagon ({i},{j}) in an su({r + 1}) triangle")


def _gap(r: int, i: int, j: int) -> tuple[int, int]:
    return r - i, j


def hexagon_relations(r: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Three opposite-edge relations per hexagon: sum(left pair) == sum(right pair)."""
    rels = []
    for t in range(1, r):
        for k in range(1, t + 1):
            rels.append(((idx_L(t, k), idx_T(t + 1, k)), (idx_L(t + 1, k + 1), idx_T(t + 1, k + 1))))
            rels.append(((idx_T(t + 1, k + 1), idx_R(t, k)), (idx_T(t + 1, k), idx_R(t + 1, k))))
            rels.append(((idx_R(t + 1, k), idx_L(t + 1, k + 1)), (idx_R(t, k), idx_L(t, k))))
    return rels


def outer_pairs(r: int) -> dict[tuple[int, int], tuple[int, int]]:
    """Map (face, label index) -> the two boundary entries summing to that label.

    Faces are 0 (left edge), 1 (bottom edge), 2 (right edge).
    """
    pairs = {}
    for i in range(1, r + 1):
        pairs[(0, i)] = (idx_T(i, 1), idx_L(i, 1))
        pairs[(1, i)] = (idx_L(r, i), idx_R(r, i))
        t = r - i + 1
        pairs[(2, i)] = (idx_R(t, t), idx_T(t, t))
    return pairs


def face_weights(r: int, entries: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Dynkin labels read off the three faces (may be negative for virtual objects)."""
    pairs = outer_pairs(r)
    return tuple(
        tuple(entries[a] + entries[b] for a, b in (pairs[(f, i)] for i in range(1, r + 1)))
        for f in range(3)
    )


@lru_cache(maxsize=None)
def constraint_matrix(r: int) -> np.ndarray:
    """Homogeneous system (hexagon relations + zero outer weights); rows act on entries."""
    E = num_entries(r)
    rows = []
    for (a, b), (c, d) in hexagon_relations(r):
        row = np.zeros(E, dtype=np.int64)
        row[a] += 1
        row[b] += 1
        row[c] -= 1
        row[d] -= 1
        rows.append(row)
    for a, b in outer_pairs(r).values():
        row = np.zeros(E, dtype=np.int64)
        row[a] += 1
        row[b] += 1
        rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), E)


@dataclass(frozen=True)
class BZTriangle:
    rank: int
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if len(entries) != num_entries(self.rank):
            raise ValueError(
                f"su({self.rank + 1}) triangle needs {num_entries(self.rank)} entries, got {len(entries)}"
            )
        object.__setattr__(self, "entries", entries)

    def T(self, t, k):
        return self.entries[idx_T(t, k)]

    def L(self, t, k):
        return self.entries[idx_L(t, k)]

    def R(self, t, k):
        return self.entries[idx_R(t, k)]

    def rows(self) -> list[tuple[int, ...]]:
        out = []
        for t in range(1, self.rank + 1):
            o = _offset(t)
            out.append(self.entries[o : o + t])
            out.append(self.entries[o + t : o + 3 * t])
        return out

    def weights(self) -> tuple[tuple[int, ...], ...]:
        return face_weights(self.rank, self.entries)

    def hexagons_hold(self) -> bool:
        e = self.entries
        return all(e[a] + e[b] == e[c] + e[d] for (a, b), (c, d) in hexagon_relations(self.rank))

    def is_valid_for(self, lam, mu, nu) -> bool:
        """Hexagon identities and outer constraints for the given face weights."""
        want = (tuple(lam), tuple(mu), tuple(nu))
        return self.hexagons_hold() and self.weights() == want

    def is_true(self) -> bool:
        return all(x >= 0 for x in self.entries)

    def __add__(self, other: BZTriangle) -> BZTriangle:
        return BZTriangle(self.rank, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: BZTriangle) -> BZTriangle:
        return BZTriangle(self.rank, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scaled(self, c: int) -> BZTriangle:
        return BZTriangle(self.rank, tuple(c * a for a in self.entries))

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def pretty(self) -> str:
        return format_rows(self.rows())

    def to_machine(self) -> str:
        return f"rank {self.rank} points 3\n" + " ".join(str(x) for x in self.entries)

    @classmethod
    def zero(cls, r: int) -> BZTriangle:
        return cls(r, (0,) * num_entries(r))


def is_true_triangle(t: BZTriangle) -> bool:
    return t.is_true()


def format_rows(rows) -> str:
    """Centre each row under the previous one, as triangles are usually drawn."""
    cells = [[f"{x:d}" for x in row] for row in rows]
    w = max((len(c) for row in cells for c in row), default=1)
    lines = [" ".join(c.rjust(w) for c in row) for row in cells]
    width = max(len(s) for s in lines)
    return "\n".join(s.center(width).rstrip() for s in lines)


def parse_machine(text: str):
    """Inverse of ``to_machine`` for triangles and diagrams."""
    header, _, body = text.strip().partition("\n")
    words = header.split()
    r, points = int(words[1]), int(words[3])
    values = [int(x) for x in body.split()]
    E = num_entries(r)
    if points == 3:
        return BZTriangle(r, values)
    chunks = [tuple(values[a * E : (a + 1) * E]) for a in range(points - 2)]
    return GluedDiagram(r, tuple(BZTriangle(r, c) for c in chunks))


def initial_entries(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> tuple[int, ...]:
    """Entries of the initial triangle for arbitrary integer labels.

    The result is linear in the three weights; it is used with dominant
    weights for couplings and with simple roots for gluing increments.
    """
    r = len(lam)
    n, N, Np = coupling_param_labels(lam, mu, nu)
    e = [0] * num_entries(r)
    for t in range(1, r + 1):
        for k in range(1, t):
            e[idx_T(t, k)] = lam[t - 1]
            e[idx_L(t, k)] = 0
            e[idx_R(t, k)] = mu[k - 1]
        s = r - t + 1
        e[idx_T(t, t)] = Np[s - 1]
        e[idx_L(t, t)] = n[s - 1]
        e[idx_R(t, t)] = N[s - 1]
    return tuple(e)


def initial_triangle(lam, mu, third) -> BZTriangle:
    lam, mu, third = as_weight(lam), as_weight(mu), as_weight(third)
    if not lam.rank == mu.rank == third.rank:
        raise RankMismatch("weights of different ranks")
    return BZTriangle(lam.rank, initial_entries(lam.labels, mu.labels, third.labels))


@lru_cache(maxsize=None)
def _virtual_entries(r: int, i: int, j: int) -> tuple[int, ...]:
    _check_hexagon(r, i, j)
    t, k = _gap(r, i, j)
    e = [0] * num_entries(r)
    for pos in (idx_L(t, k), idx_R(t, k), idx_T(t + 1, k), idx_T(t + 1, k + 1),
                idx_R(t + 1, k), idx_L(t + 1, k + 1)):
        e[pos] -= 1
    plus = [idx_T(t, k), idx_L(t + 1, k), idx_R(t + 1, k + 1)]
    if k >= 2:
        plus.append(idx_R(t, k - 1))
    if k + 1 <= t:
        plus.append(idx_L(t, k + 1))
    if t + 2 <= r:
        plus.append(idx_T(t + 2, k + 1))
    for pos in plus:
        e[pos] += 1
    return tuple(e)


def virtual_triangle(r: int, i: int, j: int) -> BZTriangle:
    """Basis virtual triangle of hexagon (i, j): -1 around it, +1 just outside."""
    return BZTriangle(r, _virtual_entries(r, i, j))


@dataclass(frozen=True)
class CoefficientVector3:
    rank: int
    v: dict = field(default_factory=dict)

    def __post_init__(self):
        full = {h: int(self.v.get(h, 0)) for h in hexagon_indices(self.rank)}
        extra = set(self.v) - set(full)
        if extra:
            raise ValueError(f"unknown hexagon indices {sorted(extra)}")
        object.__setattr__(self, "v", full)

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.v.items()))))

    def as_tuple(self):
        return tuple(self.v[h] for h in hexagon_indices(self.rank))


def _combine(r, base: Sequence[int], terms) -> tuple[int, ...]:
    e = list(base)
    for coeff, vec in terms:
        if coeff:
            for p, x in enumerate(vec):
                if x:
                    e[p] += coeff * x
    return tuple(e)


def reconstruct_triangle(lam, mu, third, cv: CoefficientVector3) -> BZTriangle:
    t0 = initial_triangle(lam, mu, third)
    r = t0.rank
    terms = [(c, _virtual_entries(r, i, j)) for (i, j), c in cv.v.items()]
    return BZTriangle(r, _combine(r, t0.entries, terms))


# --- glued diagrams ---------------------------------------------------------


@lru_cache(maxsize=None)
def root_increment(r: int, face: int, i: int) -> tuple[int, ...]:
    """Triangle adding the simple root alpha_i to one face (0, 1 or 2), others zero."""
    a = simple_root(r, i)
    z = (0,) * r
    w = [z, z, z]
    w[face] = a
    return initial_entries(*w)


@dataclass(frozen=True)
class GluedDiagram:
    """String of triangles; see ``string_gluings`` for which faces are glued."""

    rank: int
    triangles: tuple[BZTriangle, ...]

    @property
    def points(self) -> int:
        return len(self.triangles) + 2

    @property
    def gluings(self):
        return string_gluings(self.points)

    def entries(self) -> tuple[int, ...]:
        return tuple(x for t in self.triangles for x in t.entries)

    def is_true(self) -> bool:
        return all(t.is_true() for t in self.triangles)

    def hexagons_hold(self) -> bool:
        return all(t.hexagons_hold() for t in self.triangles)

    def gluings_hold(self) -> bool:
        for a, fa, b, fb in self.gluings:
            wa = self.triangles[a].weights()[fa]
            wb = self.triangles[b].weights()[fb]
            if wa != wb[::-1]:
                return False
        return True

    def outer_weights(self) -> list[tuple[int, ...]]:
        """The N outer weights in coupling order."""
        return outer_weights_of(self.rank, [t.entries for t in self.triangles])

    def is_valid_for(self, ws) -> bool:
        ws = [tuple(as_weight(w).labels) for w in ws]
        return self.hexagons_hold() and self.gluings_hold() and self.outer_weights() == ws

    def __add__(self, other):
        return GluedDiagram(self.rank, tuple(a + b for a, b in zip(self.triangles, other.triangles)))

    def __sub__(self, other):
        return GluedDiagram(self.rank, tuple(a - b for a, b in zip(self.triangles, other.triangles)))

    def pretty(self) -> str:
        return "\n\n".join(t.pretty() for t in self.triangles)

    def to_machine(self) -> str:
        return f"rank {self.rank} points {self.points}\n" + " ".join(str(x) for x in self.entries())


def is_true_diagram(d: GluedDiagram) -> bool:
    return d.is_true()


def string_gluings(points: int) -> list[tuple[int, int, int, int]]:
    """Glued face pairs (tri_a, face_a, tri_b, face_b) of the string channel.

    Triangle 0 couples w1 (x) w2 (x) Q, triangle 1 carries the last outer
    weight on its bottom face and Q^+ on its right face, and every further
    triangle peels off the next outer weight from the right through its
    left face: third-third for the first gluing, left-right afterwards.
    """
    if points < 4:
        return []
    glue = [(0, 2, 1, 2)]
    for a in range(1, points - 3):
        glue.append((a, 0, a + 1, 2))
    return glue


def _string_layout(points: int):
    """For each triangle, which outer weight index sits on faces 0 and 1 (None if glued)."""
    layout = [(0, 1)]
    # triangle a (a >= 1) has outer weight points-a on its bottom face
    for a in range(1, points - 2):
        left = 2 if a == points - 3 else None
        layout.append((left, points - a))
    return layout


def outer_weights_of(r, tri_entries) -> list[tuple[int, ...]]:
    points = len(tri_entries) + 2
    ws = [None] * points
    for a, (f0, f1) in enumerate(_string_layout(points)):
        fw = face_weights(r, tri_entries[a])
        if f0 is not None:
            ws[f0] = fw[0]
        if f1 is not None:
            ws[f1] = fw[1]
    if points == 3:
        ws[2] = face_weights(r, tri_entries[0])[2]
    return ws


def initial_diagram_n(ws) -> GluedDiagram:
    """Initial string diagram: glue the initial triangles of the partial-sum couplings."""
    ws = [as_weight(w) for w in ws]
    if len(ws) < 4:
        raise ValueError("a glued diagram needs at least four weights")
    r = ws[0].rank
    if any(w.rank != r for w in ws):
        raise RankMismatch("weights of different ranks")
    if root_lattice_check(ws) is None:
        raise NotInRootLattice("total weight is not in the root lattice")
    points = len(ws)

    def total(sub):
        acc = Weight.zero(r)
        for w in sub:
            acc = acc + w
        return acc

    tris = [initial_triangle(ws[0], ws[1], total(ws[2:]))]
    # triangle a: (w3 + ... + w_{points-a}) (x) w_{points-a+1} (x) (w3 + ... + w_{points-a+1})^+
    for a in range(1, points - 2):
        last = points - a  # 0-based index of the peeled weight
        left = total(ws[2:last])
        tris.append(initial_triangle(left, ws[last], conjugate(total(ws[2 : last + 1]))))
    return GluedDiagram(r, tuple(tris))


def initial_diagram(lam, mu, nu, sigma) -> GluedDiagram:
    """Initial four-point diagram: lam (x) mu (x) (nu+sigma) glued to nu (x) sigma (x) (nu+sigma)^+."""
    return initial_diagram_n([lam, mu, nu, sigma])


@lru_cache(maxsize=None)
def gluing_root_n(r: int, points: int, a: int, i: int) -> tuple[tuple[int, ...], ...]:
    """Entries (per triangle) of the simple gluing root G_i on gluing ``a``."""
    if not 1 <= i <= r:
        raise ValueError(f"gluing root index {i} outside 1..{r}")
    glue = string_gluings(points)
    ta, fa, tb, fb = glue[a]
    zero = (0,) * num_entries(r)
    out = [zero] * (points - 2)
    out[ta] = root_increment(r, fa, i)
    out[tb] = root_increment(r, fb, r + 1 - i)
    return tuple(out)


def gluing_root(r: int, i: int) -> GluedDiagram:
    """Four-point simple gluing root: alpha_i on the left glued face, alpha_{r+1-i} on the right."""
    tris = gluing_root_n(r, 4, 0, i)
    return GluedDiagram(r, tuple(BZTriangle(r, t) for t in tris))


@dataclass(frozen=True)
class CoefficientVector4:
    rank: int
    v1: dict = field(default_factory=dict)
    v2: dict = field(default_factory=dict)
    g: tuple = ()

    def __post_init__(self):
        hexes = hexagon_indices(self.rank)
        object.__setattr__(self, "v1", {h: int(self.v1.get(h, 0)) for h in hexes})
        object.__setattr__(self, "v2", {h: int(self.v2.get(h, 0)) for h in hexes})
        g = tuple(int(x) for x in self.g) or (0,) * self.rank
        if len(g) != self.rank:
            raise ValueError("need one gluing coefficient per simple root")
        object.__setattr__(self, "g", g)

    def __hash__(self):
        return hash((self.rank, tuple(sorted(self.v1.items())), tuple(sorted(self.v2.items())), self.g))

    def as_tuple(self):
        hexes = hexagon_indices(self.rank)
        return tuple(self.v1[h] for h in hexes) + self.g + tuple(self.v2[h] for h in hexes)


def reconstruct_diagram_n(ws, v: Sequence[dict], g: Sequence[Sequence[int]]) -> GluedDiagram:
    """D0 + sum v^(a) V^(a) - sum g^(a) G^(a) for the string channel."""
    d0 = initial_diagram_n(ws)
    r, points = d0.rank, d0.points
    tris = []
    for a, t in enumerate(d0.triangles):
        terms = [(c, _virtual_entries(r, i, j)) for (i, j), c in v[a].items()]
        tris.append(list(_combine(r, t.entries, terms)))
    for a, coeffs in enumerate(g):
        for i, c in enumerate(coeffs, start=1):
            if c:
                root = gluing_root_n(r, points, a, i)
                for b in range(points - 2):
                    for p, x in enumerate(root[b]):
                        if x:
                            tris[b][p] -= c * x
    return GluedDiagram(r, tuple(BZTriangle(r, t) for t in tris))


def reconstruct_diagram(lam, mu, nu, sigma, cv: CoefficientVector4) -> GluedDiagram:
    return reconstruct_diagram_n([lam, mu, nu, sigma], [cv.v1, cv.v2], [cv.g])
