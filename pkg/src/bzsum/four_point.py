"""Four-point multiplicities T_{lam,mu,nu,sigma}.

The diagram is the initial triangle of lam (x) mu (x) (nu+sigma) glued to the
initial triangle of nu (x) sigma (x) (nu+sigma)^+.  Coordinates are the
hexagon coefficients of the left triangle (``a_i_j``), the gluing
coefficients ``g_i`` and the hexagon coefficients of the right triangle
(``b_i_j``), summed in that order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .bounds import Affine, BoundSystem, derive_from_entries
from .three_point import (
    _Syms,
    _delta,
    add_virtuals,
    multiplicity3,
    summation_order3,
    symbolic_initial3,
)
from .triangles import (
    CoefficientVector4,
    hexagon_indices,
    reconstruct_diagram,
    root_increment,
)
from .weights import (
    RankMismatch,
    Weight,
    as_weight,
    conjugate,
    coupling_param_labels,
    dual_numerators,
    root_lattice_check,
)


def left_order(r):
    return summation_order3(r)


def right_order(r):
    """(v_{1,r-1} ... v_{r-1,1}) ... (v_{1,2} v_{2,1}) (v_{1,1})."""
    return [(i, s - i) for s in range(r, 1, -1) for i in range(1, s)]


def variables4(r: int) -> list[str]:
    return ([f"a_{i}_{j}" for i, j in left_order(r)]
            + [f"g_{i}" for i in range(r, 0, -1)]
            + [f"b_{i}_{j}" for i, j in right_order(r)])


def param_names4(r: int) -> list[str]:
    return [f"{b}_{i}" for b in ("lam", "mu", "nu", "sig", "n", "N", "Np") for i in range(1, r + 1)]


def params4(lam, mu, nu, sig) -> dict[str, int]:
    """Labels plus n, N, N' of lam (x) mu (x) (nu+sigma)."""
    n, N, Np = coupling_param_labels(lam, mu, tuple(a + b for a, b in zip(nu, sig)))
    P = {}
    for base, seq in (("lam", lam), ("mu", mu), ("nu", nu), ("sig", sig),
                      ("n", n), ("N", N), ("Np", Np)):
        for i, x in enumerate(seq, start=1):
            P[f"{base}_{i}"] = x
    return P


class _Syms4(_Syms):
    """Adds the right-triangle and gluing symbols.

    A right-triangle hexagon just across the glued edge (i + j = r + 1) is
    read as the gluing coefficient g_j; other out-of-range symbols are zero.
    """

    def a(self, i, j):
        if i >= 1 and j >= 1 and i + j <= self.r:
            return Affine.sym(f"a_{i}_{j}")
        return Affine(0)

    def b(self, i, j):
        if i >= 1 and j >= 1:
            if i + j <= self.r:
                return Affine.sym(f"b_{i}_{j}")
            if i + j == self.r + 1:
                return self.g(j)
        return Affine(0)

    def g(self, i):
        return Affine.sym(f"g_{i}") if 1 <= i <= self.r else Affine(0)


@lru_cache(maxsize=None)
def closed_form_bounds4(r: int) -> BoundSystem:
    """The closed-form four-point bound system expanded for rank r >= 2."""
    if r < 2:
        raise ValueError("rank 1 uses the dedicated su(2) sum")
    S = _Syms4(r)
    a, b, g = S.a, S.b, S.g
    lam, mu, nu, sig = (lambda i: S.p("lam", i)), (lambda i: S.p("mu", i)), \
        (lambda i: S.p("nu", i)), (lambda i: S.p("sig", i))
    n, N, Np = (lambda i: S.p("n", i)), (lambda i: S.p("N", i)), (lambda i: S.p("Np", i))
    bs = BoundSystem(variables4(r), param_names4(r))

    # right triangle
    x = "b_1_1"
    for e in (Affine(0), -sig(2) + b(1, 2), -nu(r - 1) + b(2, 1)):
        bs.add_lower(x, e)
    if r >= 3:
        # at r = 2 the hexagon b_{2,2} lies beyond the glued edge; the
        # clause is dropped there (matching the explicit su(3) sum)
        bs.add_lower(x, b(1, 2) - b(2, 2) + b(2, 1))
    for e in (sig(1), b(1, 2), nu(r) - b(1, 2) + b(2, 1), sig(1) + b(1, 2) - b(2, 1), b(2, 1), nu(r)):
        bs.add_upper(x, e)

    for i in range(2, r - 1):
        x = f"b_{i}_1"
        bs.add_lower(x, -sig(2) + b(i - 1, 2) - b(i - 1, 3) + b(i, 2))
        bs.add_lower(x, b(i, 2) - (1 - _delta(i, r - 2)) * b(i + 1, 2) - _delta(i, r - 2) * g(2)
                     + b(i + 1, 1))
        bs.add_lower(x, -nu(r - i) + b(i + 1, 1))
        bs.add_upper(x, nu(r - i + 1) + b(i - 1, 2) - b(i, 2) + b(i + 1, 1))
        bs.add_upper(x, sig(1) + b(i, 2) - b(i + 1, 1))
        bs.add_upper(x, b(i + 1, 1))

    for i in range(2, r):
        for j in range(2, r):
            if i + j > r - 1:
                continue
            x = f"b_{i}_{j}"
            d = _delta(i + j, r - 1)
            bs.add_lower(x, b(i + 1, j) + b(i, j + 1) - (1 - d) * b(i + 1, j + 1) - d * g(j + 1))
            bs.add_lower(x, -sig(j + 1) + b(i - 1, j + 1) - b(i - 1, j + 2) + b(i, j + 1))
            bs.add_upper(x, nu(r - i + 1) + b(i - 1, j + 1) - b(i, j + 1) + b(i + 1, j))

    for j in range(2, r - 1):
        x = f"b_1_{j}"
        d = _delta(j, r - 2)
        bs.add_lower(x, -sig(j + 1) + b(1, j + 1))
        bs.add_lower(x, b(1, j + 1) + b(2, j) - (1 - d) * b(2, j + 1) - d * g(r - 1))
        bs.add_upper(x, b(1, j + 1))
        bs.add_upper(x, nu(r) - b(1, j + 1) + b(2, j))

    x = f"b_{r - 1}_1"
    bs.add_lower(x, -nu(1) + g(1))
    bs.add_lower(x, -sig(2) + b(r - 2, 2) + g(2) - g(3))
    bs.add_upper(x, sig(1) - g(1) + g(2))
    bs.add_upper(x, nu(2) + b(r - 2, 2) + g(1) - g(2))
    bs.add_upper(x, g(1))

    for l in range(2, r - 1):
        x = f"b_{r - l}_{l}"
        bs.add_lower(x, -sig(l + 1) + b(r - l - 1, l + 1) + g(l + 1) - g(l + 2))
        bs.add_upper(x, nu(l + 1) + b(r - l - 1, l + 1) + g(l) - g(l + 1))

    x = f"b_1_{r - 1}"
    bs.add_lower(x, -sig(r) + g(r))
    bs.add_upper(x, g(r))
    bs.add_upper(x, nu(r) + g(r - 1) - g(r))

    # gluing coefficients
    bs.add_lower("g_1", -n(1) + a(1, r - 1))
    bs.add_lower("g_1", -N(2) + a(1, r - 1) - a(2, r - 2) + g(2))
    bs.add_upper("g_1", N(1) + a(1, r - 1))
    bs.add_upper("g_1", Np(1) - a(1, r - 1) + g(2))
    for i in range(2, r):
        x = f"g_{i}"
        bs.add_lower(x, -n(i) + a(i - 1, r - i + 1) + a(i, r - i) - a(i - 1, r - i))
        bs.add_lower(x, -N(i + 1) + a(i, r - i) - (1 - _delta(i, r - 1)) * a(i + 1, r - i - 1)
                     + g(i + 1))
        bs.add_upper(x, Np(i) + a(i - 1, r - i + 1) - a(i, r - i) + g(i + 1))
    bs.add_lower(f"g_{r}", -n(r) + a(r - 1, 1))
    bs.add_upper(f"g_{r}", Np(r) + a(r - 1, 1))

    # left triangle
    for j in range(2, r):
        x = f"a_1_{j}"
        bs.add_lower(x, a(1, j - 1))
        bs.add_lower(x, -mu(j - 1) + a(1, j - 1) + a(2, j - 1) - (1 - _delta(j, 2)) * a(2, j - 2))
        bs.add_upper(x, mu(j) + a(1, j - 1))
        bs.add_upper(x, lam(r) - a(1, j - 1) + a(2, j - 1))
    for i in range(2, r + 1):
        for j in range(2, r + 1):
            if i + j > r:
                continue
            x = f"a_{i}_{j}"
            bs.add_lower(x, a(i, j - 1) + a(i - 1, j) - a(i - 1, j - 1))
            bs.add_lower(x, -mu(j - 1) + a(i, j - 1) + a(i + 1, j - 1)
                         - (1 - _delta(j, 2)) * a(i + 1, j - 2))
            bs.add_upper(x, lam(r - i + 1) - a(i, j - 1) + a(i + 1, j - 1) + a(i - 1, j))
    for i in range(2, r):
        x = f"a_{i}_1"
        bs.add_lower(x, a(i - 1, 1))
        bs.add_upper(x, lam(r - i + 1) + a(i - 1, 1))
    bs.add_lower("a_1_1", Affine(0))
    bs.add_upper("a_1_1", mu(1))
    bs.add_upper("a_1_1", lam(r))
    bs.validate()
    return bs


def symbolic_diagram4(r: int) -> tuple[list[Affine], list[Affine]]:
    """Entries of D0 + sum a V1 + sum b V2 - sum g G, symbolic in everything."""
    left = add_virtuals(r, symbolic_initial3(r), {h: f"a_{h[0]}_{h[1]}" for h in hexagon_indices(r)})
    right = add_virtuals(r, symbolic_initial3(r, ("nu", "sig", None, None, None)),
                         {h: f"b_{h[0]}_{h[1]}" for h in hexagon_indices(r)})
    for i in range(1, r + 1):
        gi = f"g_{i}"
        for p, c in enumerate(root_increment(r, 2, i)):
            if c:
                left[p] = left[p] - Affine(0, {gi: c})
        for p, c in enumerate(root_increment(r, 2, r + 1 - i)):
            if c:
                right[p] = right[p] - Affine(0, {gi: c})
    return left, right


@lru_cache(maxsize=None)
def derived_bounds4(r: int) -> BoundSystem:
    """Bound system read off the glued-diagram model (any r >= 1)."""
    left, right = symbolic_diagram4(r)
    bs = derive_from_entries(variables4(r), param_names4(r), left + right)
    bs.validate()
    return bs


def bounds4(r: int) -> BoundSystem:
    return closed_form_bounds4(r) if r >= 2 else derived_bounds4(r)


def _checked(ws):
    ws = [as_weight(w) for w in ws]
    if len({w.rank for w in ws}) != 1:
        raise RankMismatch("weights of different ranks")
    return ws


def multiplicity4(lam, mu, nu, sigma) -> int:
    """Singlet multiplicity of lam (x) mu (x) nu (x) sigma via the nested sum."""
    lam, mu, nu, sigma = _checked([lam, mu, nu, sigma])
    if root_lattice_check([lam, mu, nu, sigma]) is None:
        return 0
    r = lam.rank
    if r == 1:
        return multiplicity4_su2(lam[0], mu[0], nu[0], sigma[0])
    return bounds4(r).count(params4(lam.labels, mu.labels, nu.labels, sigma.labels))


def enumerate4(lam, mu, nu, sigma) -> list[CoefficientVector4]:
    """Coefficient vectors (v1, g, v2) of all true diagrams, in summation order."""
    lam, mu, nu, sigma = _checked([lam, mu, nu, sigma])
    if root_lattice_check([lam, mu, nu, sigma]) is None:
        return []
    r = lam.rank
    names = variables4(r)
    out = []
    for pt in bounds4(r).enumerate(params4(lam.labels, mu.labels, nu.labels, sigma.labels)):
        env = dict(zip(names, pt))
        out.append(CoefficientVector4(
            r,
            {h: env[f"a_{h[0]}_{h[1]}"] for h in hexagon_indices(r)},
            {h: env[f"b_{h[0]}_{h[1]}"] for h in hexagon_indices(r)},
            tuple(env[f"g_{i}"] for i in range(1, r + 1)),
        ))
    return out


def true_diagrams(lam, mu, nu, sigma):
    return [reconstruct_diagram(lam, mu, nu, sigma, cv) for cv in enumerate4(lam, mu, nu, sigma)]


# --- explicit low-rank sums ---------------------------------------------------


def multiplicity4_su2(l1: int, m1: int, n1: int, s1: int) -> int:
    total = l1 + m1 + n1 + s1
    if total % 2:
        return 0
    S = total // 2
    lo = max(0, S - l1 - m1)
    hi = min(S - l1, S - m1, n1, s1)
    return max(0, hi - lo + 1)


def _duals(ws):
    """Dual-label numerators (over r+1) of each weight."""
    return [dual_numerators(as_weight(w).labels) for w in ws]


def multiplicity4_su3(lam, mu, nu, sigma) -> int:
    lam, mu, nu, sigma = _checked([lam, mu, nu, sigma])
    if lam.rank != 2:
        raise RankMismatch("explicit su(3) sum needs rank-2 weights")
    L, M, V, Sg = _duals([lam, mu, nu, sigma])
    nums = [L[i] + M[i] + V[i] + Sg[i] for i in range(2)]
    if any(x % 3 for x in nums):
        return 0

    def q(x):
        return x // 3

    n1 = q(L[1] + M[1] - V[0] - Sg[0])
    n2 = q(L[0] + M[0] - V[1] - Sg[1])
    N1 = q(-L[1] - M[0] + M[1] + V[0] + Sg[0])
    N2 = q(-L[0] + L[1] + M[0] - V[0] + V[1] - Sg[0] + Sg[1])
    N1p = q(L[1] + M[0] - M[1] + V[0] - V[1] + Sg[0] - Sg[1])
    N2p = q(L[0] - L[1] - M[0] + V[1] + Sg[1])
    l1, l2 = lam.labels
    m1, m2 = mu.labels
    u1, u2 = nu.labels
    s1, s2 = sigma.labels
    total = 0
    for v1 in range(0, min(l2, m1) + 1):
        for g2 in range(-n2 + v1, N2p + v1 + 1):
            for g1 in range(max(-N2 + v1 + g2, -n1 + v1), min(N1 + v1, N1p + g2 - v1) + 1):
                lo = max(0, -s2 + g2, -u1 + g1)
                hi = min(u2, s1, g1, g2, u2 + g1 - g2, s1 - g1 + g2)
                if hi >= lo:
                    total += hi - lo + 1
    return total


def multiplicity4_su4(lam, mu, nu, sigma) -> int:
    lam, mu, nu, sigma = _checked([lam, mu, nu, sigma])
    if lam.rank != 3:
        raise RankMismatch("explicit su(4) sum needs rank-3 weights")
    if root_lattice_check([lam, mu, nu, sigma]) is None:
        return 0
    P = params4(lam.labels, mu.labels, nu.labels, sigma.labels)
    l1, l2, l3 = lam.labels
    m1, m2, m3 = mu.labels
    u1, u2, u3 = nu.labels
    s1, s2, s3 = sigma.labels
    n1, n2, n3 = P["n_1"], P["n_2"], P["n_3"]
    N1, N2, N3 = P["N_1"], P["N_2"], P["N_3"]
    N1p, N2p, N3p = P["Np_1"], P["Np_2"], P["Np_3"]
    total = 0
    for a11 in range(0, min(l3, m1) + 1):
        for a21 in range(a11, l2 + a11 + 1):
            for a12 in range(max(-m1 + a21 + a11, a11), min(l3 + a21 - a11, m2 + a11) + 1):
                for g3 in range(-n3 + a21, N3p + a21 + 1):
                    for g2 in range(max(-N3 + g3 + a21, -n2 + a12 + a21 - a11),
                                    N2p + g3 + a12 - a21 + 1):
                        for g1 in range(max(-n1 + a12, -N2 + g2 + a12 - a21),
                                        min(N1p + g2 - a12, N1 + a12) + 1):
                            for b12 in range(-s3 + g3, min(u3 + g2 - g3, g3) + 1):
                                for b21 in range(max(-u1 + g1, -s2 + b12 + g2 - g3),
                                                 min(u2 + b12 + g1 - g2, s1 - g1 + g2, g1) + 1):
                                    lo = max(0, -u2 + b21, -s2 + b12, b21 + b12 - g2)
                                    hi = min(u3, s1, b21, b12, u3 + b21 - b12, s1 - b21 + b12)
                                    if hi >= lo:
                                        total += hi - lo + 1
    return total


# --- channel decomposition ----------------------------------------------------


def intermediate_weights(lam: Weight, mu: Weight) -> tuple:
    """Dominant rho = lam + mu - sum n_i alpha_i with all n_i >= 0.

    The n_i are bounded by the simple-root coordinates of lam + mu.
    """
    return _intermediate(lam.labels, mu.labels)


@lru_cache(maxsize=100_000)
def _intermediate(lam: tuple, mu: tuple) -> tuple:
    r = len(lam)
    top = tuple(a + b for a, b in zip(lam, mu))
    box = [x // (r + 1) for x in dual_numerators(top)]
    out = []
    for ns in product(*(range(b + 1) for b in box)):
        labels = list(top)
        for i, c in enumerate(ns, start=1):
            if c:
                labels[i - 1] -= 2 * c
                if i > 1:
                    labels[i - 2] += c
                if i < r:
                    labels[i] += c
        if all(x >= 0 for x in labels):
            out.append(Weight(tuple(labels)))
    return tuple(out)


@lru_cache(maxsize=500_000)
def _m3(lam: tuple, mu: tuple, nu: tuple) -> int:
    return multiplicity3(Weight(lam), Weight(mu), Weight(nu))


@dataclass
class ChannelDecomposition:
    total: int
    terms: dict = field(default_factory=dict)  # rho -> (T_{lam,mu,rho^+}, T_{rho,nu,sigma})


def channel_decompose4(lam, mu, nu, sigma) -> ChannelDecomposition:
    """sum over rho of T_{lam,mu,rho} T_{rho^+,nu,sigma}; ``terms`` keyed by rho in lam (x) mu."""
    lam, mu, nu, sigma = _checked([lam, mu, nu, sigma])
    terms = {}
    total = 0
    for rho_plus in intermediate_weights(lam, mu):
        left = _m3(lam.labels, mu.labels, rho_plus.labels[::-1])
        if not left:
            continue
        right = _m3(rho_plus.labels, nu.labels, sigma.labels)
        if right:
            terms[rho_plus] = (left, right)
            total += left * right
    return ChannelDecomposition(total, terms)


# --- non-vanishing cones -------------------------------------------------------


@dataclass
class ConeReport:
    member: bool
    violated: list = field(default_factory=list)
    S: tuple = ()


def cone_su2(l1: int, m1: int, n1: int, s1: int) -> ConeReport:
    total = l1 + m1 + n1 + s1
    if total % 2:
        return ConeReport(False, ["S integral"], (Fraction(total, 2),))
    S = total // 2
    checks = {
        "lambda_1 >= 0": l1, "mu_1 >= 0": m1, "nu_1 >= 0": n1, "sigma_1 >= 0": s1,
        "S-lambda_1 >= 0": S - l1, "S-mu_1 >= 0": S - m1,
        "S-nu_1 >= 0": S - n1, "S-sigma_1 >= 0": S - s1,
    }
    violated = [k for k, x in checks.items() if x < 0]
    return ConeReport(not violated, violated, (S,))


def cone_su3(lam, mu, nu, sigma) -> ConeReport:
    ws = _checked([lam, mu, nu, sigma])
    if ws[0].rank != 2:
        raise RankMismatch("su(3) cone needs rank-2 weights")
    duals = _duals(ws)
    nums = [sum(d[i] for d in duals) for i in range(2)]
    if any(x % 3 for x in nums):
        return ConeReport(False, ["S_i integral"], tuple(Fraction(x, 3) for x in nums))
    S = [x // 3 for x in nums]
    names = ["lambda", "mu", "nu", "sigma"]
    checks = {}
    for w, name in zip(ws, names):
        for i in (1, 2):
            checks[f"{name}_{i} >= 0"] = w.label(i)
    for i in (1, 2):
        for w, name in zip(ws, names):
            checks[f"S_{i}-{name}_1-{name}_2 >= 0"] = S[i - 1] - w.label(1) - w.label(2)
        for x in range(4):
            for y in range(x + 1, 4):
                checks[f"S_{i}-{names[x]}_{i}-{names[y]}_{i} >= 0"] = (
                    S[i - 1] - ws[x].label(i) - ws[y].label(i))
    violated = [k for k, v in checks.items() if v < 0]
    return ConeReport(not violated, violated, tuple(S))
