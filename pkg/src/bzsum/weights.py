"""Highest weights of su(r+1) in Dynkin-label form.

Dual (simple-root) labels are kept as integer numerators over the fixed
denominator ``r + 1`` so that every bound computed downstream is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class RankMismatch(ValueError):
    pass


class NotInRootLattice(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    """Dominant integral weight of su(rank+1) given by its Dynkin labels."""

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        if not labels:
            raise ValueError("a weight needs at least one Dynkin label")
        if any(x < 0 for x in labels):
            raise ValueError(f"Dynkin labels must be non-negative: {labels}")
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __getitem__(self, i):
        return self.labels[i]

    def __iter__(self):
        return iter(self.labels)

    def __add__(self, other: Weight) -> Weight:
        _same_rank([self, other])
        return Weight(tuple(a + b for a, b in zip(self.labels, other.labels)))

    def label(self, i: int) -> int:
        """1-based Dynkin label; 0 outside ``1..rank``."""
        if 1 <= i <= self.rank:
            return self.labels[i - 1]
        return 0

    def is_zero(self) -> bool:
        return not any(self.labels)

    def __str__(self):
        return ",".join(str(x) for x in self.labels)

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def parse(cls, text: str) -> Weight:
        return cls(tuple(int(t) for t in text.split(",")))


@dataclass(frozen=True)
class DualLabels:
    """Simple-root coordinates ``numerators[i] / denominator``."""

    rank: int
    numerators: tuple[int, ...]

    @property
    def denominator(self) -> int:
        return self.rank + 1

    def num(self, i: int) -> int:
        """1-based numerator; 0 outside ``1..rank`` (boundary convention)."""
        if 1 <= i <= self.rank:
            return self.numerators[i - 1]
        return 0

    def as_fractions(self):
        from fractions import Fraction

        return tuple(Fraction(n, self.denominator) for n in self.numerators)


@dataclass(frozen=True)
class CouplingParams:
    """The integers n_i, N_i, N'_i fixing the initial triangle and all bounds."""

    rank: int
    n: tuple[int, ...]
    N: tuple[int, ...]
    Nprime: tuple[int, ...]


def as_weight(w) -> Weight:
    if isinstance(w, Weight):
        return w
    if isinstance(w, str):
        return Weight.parse(w)
    return Weight(tuple(w))


def parse_weights(text: str) -> list[Weight]:
    """Parse ``"1,0;0,1;1,1"`` into a list of weights."""
    return [Weight.parse(part) for part in text.split(";") if part.strip()]


def format_weights(ws: Iterable[Weight]) -> str:
    return ";".join(str(w) for w in ws)


def _same_rank(ws: Sequence) -> int:
    ranks = {len(w) for w in ws}
    if len(ranks) != 1:
        raise RankMismatch(f"weights of different ranks: {sorted(ranks)}")
    return ranks.pop()


def conjugate(w: Weight) -> Weight:
    return Weight(w.labels[::-1])


def dual_numerators(labels: Sequence[int]) -> tuple[int, ...]:
    """(r+1) * F @ labels with F the inverse Cartan matrix of A_r.

    Works for arbitrary integer labels (e.g. simple roots), not only dominant
    ones.
    """
    r = len(labels)
    return tuple(
        sum(((r + 1) * min(i, j) - i * j) * labels[j - 1] for j in range(1, r + 1))
        for i in range(1, r + 1)
    )


def dual_labels(w: Weight) -> DualLabels:
    return DualLabels(w.rank, dual_numerators(w.labels))


def congruence_class(w) -> int:
    """Sum_i i * w_i mod (r+1); zero exactly on the root lattice."""
    r = len(w)
    return sum(i * w[i - 1] for i in range(1, r + 1)) % (r + 1)


def root_lattice_check(ws: Sequence[Weight]) -> tuple[int, ...] | None:
    """Simple-root coefficients m_i of the total weight, or None if fractional."""
    if not ws:
        raise ValueError("need at least one weight")
    r = _same_rank(ws)
    totals = [0] * r
    for w in ws:
        for i, x in enumerate(dual_numerators(w.labels)):
            totals[i] += x
    if any(t % (r + 1) for t in totals):
        return None
    return tuple(t // (r + 1) for t in totals)


def simple_root(r: int, i: int) -> tuple[int, ...]:
    """Dynkin labels of the simple root alpha_i of A_r (row i of the Cartan matrix)."""
    if not 1 <= i <= r:
        raise ValueError(f"simple root index {i} outside 1..{r}")
    return tuple(2 if j == i else (-1 if abs(j - i) == 1 else 0) for j in range(1, r + 1))


def coupling_param_labels(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]):
    """n, N, N' as integer tuples for raw label sequences (possibly non-dominant).

    Raises NotInRootLattice if the n_i are fractional.
    """
    r = len(lam)
    if len(mu) != r or len(nu) != r:
        raise RankMismatch("weights of different ranks")
    d = r + 1
    lu, mu_u, nu_u = dual_numerators(lam), dual_numerators(mu), dual_numerators(nu)

    def up(nums, i):
        return nums[i - 1] if 1 <= i <= r else 0

    n = []
    for i in range(1, r + 1):
        num = up(lu, r - i + 1) + up(mu_u, r - i + 1) - up(nu_u, i)
        if num % d:
            raise NotInRootLattice(
                f"n_{i} = {num}/{d} is not an integer for {tuple(lam)}, {tuple(mu)}, {tuple(nu)}"
            )
        n.append(num // d)
    N = []
    for i in range(1, r + 1):
        prev = n[i - 2] if i > 1 else 0
        N.append(prev - n[i - 1] + mu[r - i])
    Np = tuple(nu[i] - N[i] for i in range(r))
    return tuple(n), tuple(N), Np


def coupling_params(lam: Weight, mu: Weight, third: Weight) -> CouplingParams:
    """Parameters of the initial triangle for lam (x) mu (x) third."""
    n, N, Np = coupling_param_labels(lam.labels, mu.labels, third.labels)
    return CouplingParams(lam.rank, n, N, Np)
