"""Three-point multiplicities T_{lam,mu,nu} as nested sums over hexagon coefficients."""

from __future__ import annotations

from functools import lru_cache

from .bounds import Affine, BoundSystem, derive_from_entries
from .triangles import (
    CoefficientVector3,
    _virtual_entries,
    hexagon_indices,
    idx_L,
    idx_R,
    idx_T,
    num_entries,
    reconstruct_triangle,
)
from .weights import (
    NotInRootLattice,
    RankMismatch,
    as_weight,
    conjugate,
    coupling_param_labels,
    root_lattice_check,
)


def summation_order3(r: int) -> list[tuple[int, int]]:
    """(v11)(v21 v12)...(v_{r-1,1} ... v_{1,r-1}): by anti-diagonal, i descending."""
    return [(s - j, j) for s in range(2, r + 1) for j in range(1, s)]


def _var(i, j):
    return f"v_{i}_{j}"


def param_names3(r: int) -> list[str]:
    return [f"{b}_{i}" for b in ("lam", "mu", "nu", "n", "N", "Np") for i in range(1, r + 1)]


def params3(lam, mu, nu) -> dict[str, int]:
    """Parameter values; raises NotInRootLattice when the n_i are fractional."""
    n, N, Np = coupling_param_labels(lam, mu, nu)
    P = {}
    for base, seq in (("lam", lam), ("mu", mu), ("nu", nu), ("n", n), ("N", N), ("Np", Np)):
        for i, x in enumerate(seq, start=1):
            P[f"{base}_{i}"] = x
    return P


class _Syms:
    """Symbol lookup where out-of-range indices evaluate to zero."""

    def __init__(self, r: int, hex_name=_var):
        self.r = r
        self.hex_name = hex_name

    def p(self, base: str, i: int) -> Affine:
        return Affine.sym(f"{base}_{i}") if 1 <= i <= self.r else Affine(0)

    def v(self, i: int, j: int) -> Affine:
        if i >= 1 and j >= 1 and i + j <= self.r:
            return Affine.sym(self.hex_name(i, j))
        return Affine(0)


def _delta(a, b) -> int:
    return 1 if a == b else 0


@lru_cache(maxsize=None)
def closed_form_bounds3(r: int) -> BoundSystem:
    """The closed-form bound system, expanded for rank r (r >= 2).

    Clauses referring to hexagons or labels outside the triangle are read
    with those symbols set to zero; all clauses attached to the same
    variable are intersected.
    """
    if r < 2:
        raise ValueError("the nested sum needs at least one hexagon (r >= 2)")
    S = _Syms(r)
    v, lam, mu = S.v, (lambda i: S.p("lam", i)), (lambda i: S.p("mu", i))
    n, N, Np = (lambda i: S.p("n", i)), (lambda i: S.p("N", i)), (lambda i: S.p("Np", i))
    order = summation_order3(r)
    bs = BoundSystem([_var(i, j) for i, j in order], param_names3(r))

    x = _var(1, r - 1)
    for e in (-N(1), v(1, r - 2), -Np(2) + v(2, r - 2),
              -mu(r - 2) + v(1, r - 2) - v(2, r - 3) + v(2, r - 2)):
        bs.add_lower(x, e)
    for e in (n(1), mu(r - 1) + v(1, r - 2), lam(r) - v(1, r - 2) + v(2, r - 2),
              n(2) + v(1, r - 2) - v(2, r - 2), Np(1), N(2) + v(2, r - 2)):
        bs.add_upper(x, e)

    for l in range(2, r - 1):
        x = _var(l, r - l)
        bs.add_lower(x, v(l - 1, r - l) - v(l - 1, r - l - 1) + v(l, r - l - 1))
        bs.add_lower(x, -Np(l + 1) + v(l + 1, r - l - 1))
        bs.add_lower(x, -mu(r - l - 1) + v(l + 1, r - l - 1)
                     - (1 - _delta(l, r - 2)) * v(l + 1, r - l - 2) + v(l, r - l - 1))
        bs.add_upper(x, lam(r - l + 1) - v(l, r - l - 1) + v(l - 1, r - l) + v(l + 1, r - l - 1))
        bs.add_upper(x, n(l + 1) + v(l, r - l - 1) - v(l + 1, r - l - 1))
        bs.add_upper(x, N(l + 1) + v(l + 1, r - l - 1))

    x = _var(r - 1, 1)
    bs.add_lower(x, v(r - 2, 1))
    bs.add_lower(x, -Np(r))
    for e in (lam(2) + v(r - 2, 1), n(r), N(r)):
        bs.add_upper(x, e)

    for j in range(2, r - 1):
        x = _var(1, j)
        bs.add_lower(x, v(1, j - 1))
        bs.add_lower(x, -mu(j - 1) + v(1, j - 1) + v(2, j - 1) - (1 - _delta(j, 2)) * v(2, j - 2))
        bs.add_upper(x, mu(j) + v(1, j - 1))
        bs.add_upper(x, lam(r) - v(1, j - 1) + v(2, j - 1))

    for i in range(2, r):
        for j in range(2, r):
            if i + j > r - 1:
                continue
            x = _var(i, j)
            bs.add_lower(x, v(i, j - 1) + v(i - 1, j) - v(i - 1, j - 1))
            bs.add_lower(x, -mu(j - 1) + v(i, j - 1) + v(i + 1, j - 1)
                         - (1 - _delta(j, 2)) * v(i + 1, j - 2))
            bs.add_upper(x, lam(r - i + 1) - v(i, j - 1) + v(i + 1, j - 1) + v(i - 1, j))

    for i in range(2, r - 1):
        x = _var(i, 1)
        bs.add_lower(x, v(i - 1, 1))
        bs.add_upper(x, lam(r - i + 1) + v(i - 1, 1))

    x = _var(1, 1)
    bs.add_lower(x, Affine(0))
    bs.add_upper(x, mu(1))
    bs.add_upper(x, lam(r))
    bs.validate()
    return bs


def symbolic_initial3(r: int, names=("lam", "mu", "n", "N", "Np")) -> list[Affine]:
    """Initial triangle entries in terms of the parameter symbols."""
    lam, mu, n, N, Np = names
    e = [Affine(0)] * num_entries(r)
    for t in range(1, r + 1):
        for k in range(1, t):
            e[idx_T(t, k)] = Affine.sym(f"{lam}_{t}")
            e[idx_R(t, k)] = Affine.sym(f"{mu}_{k}")
        s = r - t + 1
        e[idx_T(t, t)] = Affine.sym(f"{Np}_{s}") if Np else Affine.sym(f"{lam}_{t}")
        e[idx_L(t, t)] = Affine.sym(f"{n}_{s}") if n else Affine(0)
        e[idx_R(t, t)] = Affine.sym(f"{N}_{s}") if N else Affine.sym(f"{mu}_{t}")
    return e


def add_virtuals(r: int, entries: list[Affine], names: dict) -> list[Affine]:
    """entries + sum_h names[h] * V_h."""
    out = list(entries)
    for (i, j), name in names.items():
        for p, c in enumerate(_virtual_entries(r, i, j)):
            if c:
                out[p] = out[p] + Affine(0, {name: c})
    return out


@lru_cache(maxsize=None)
def derived_bounds3(r: int) -> BoundSystem:
    """Bound system obtained mechanically from the triangle model (any r >= 1)."""
    order = summation_order3(r)
    entries = add_virtuals(r, symbolic_initial3(r), {h: _var(*h) for h in order})
    bs = derive_from_entries([_var(i, j) for i, j in order], param_names3(r), entries)
    bs.validate()
    return bs


def bounds3(r: int) -> BoundSystem:
    return closed_form_bounds3(r) if r >= 2 else derived_bounds3(r)


def _checked(lam, mu, nu):
    lam, mu, nu = as_weight(lam), as_weight(mu), as_weight(nu)
    if not lam.rank == mu.rank == nu.rank:
        raise RankMismatch("weights of different ranks")
    return lam, mu, nu


def multiplicity3(lam, mu, nu) -> int:
    """Number of times the singlet occurs in M_lam (x) M_mu (x) M_nu."""
    lam, mu, nu = _checked(lam, mu, nu)
    if root_lattice_check([lam, mu, nu]) is None:
        return 0
    P = params3(lam.labels, mu.labels, nu.labels)
    return bounds3(lam.rank).count(P)


def enumerate3(lam, mu, nu) -> list[CoefficientVector3]:
    """Coefficient vectors of all true triangles, in summation order."""
    lam, mu, nu = _checked(lam, mu, nu)
    if root_lattice_check([lam, mu, nu]) is None:
        return []
    r = lam.rank
    order = summation_order3(r)
    P = params3(lam.labels, mu.labels, nu.labels)
    return [CoefficientVector3(r, dict(zip(order, pt))) for pt in bounds3(r).enumerate(P)]


def true_triangles(lam, mu, nu):
    return [reconstruct_triangle(lam, mu, nu, cv) for cv in enumerate3(lam, mu, nu)]


def tensor_coefficient(lam, mu, nu) -> int:
    """Multiplicity of M_nu in M_lam (x) M_mu."""
    return multiplicity3(lam, mu, conjugate(as_weight(nu)))


__all__ = [
    "multiplicity3",
    "enumerate3",
    "tensor_coefficient",
    "closed_form_bounds3",
    "derived_bounds3",
    "summation_order3",
    "params3",
    "true_triangles",
    "NotInRootLattice",
    "hexagon_indices",
]
