"""Exhaustive cross-checks of the counting paths over small label boxes."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .four_point import (
    channel_decompose4,
    multiplicity4,
    multiplicity4_su2,
    multiplicity4_su3,
    multiplicity4_su4,
)
from .n_point import channel_fold, multiplicity_n
from .oracle import singlet_count
from .three_point import multiplicity3
from .weights import Weight, root_lattice_check


def weight_box(r: int, max_label: int) -> list[Weight]:
    return [Weight(t) for t in itertools.product(range(max_label + 1), repeat=r)]


def tuples(r: int, max_label: int, points: int):
    box = weight_box(r, max_label)
    return itertools.product(box, repeat=points)


def explicit4(ws):
    """The dedicated low-rank four-point sum for ranks 1-3, else None."""
    r = ws[0].rank
    if r == 1:
        return multiplicity4_su2(*(w[0] for w in ws))
    if r == 2:
        return multiplicity4_su3(*ws)
    if r == 3:
        return multiplicity4_su4(*ws)
    return None


def methods(points: int):
    """name -> function of the weight list, for every independent path."""
    if points == 3:
        return {"polytope": lambda ws: multiplicity3(*ws), "oracle": singlet_count}
    if points == 4:
        return {
            "polytope": lambda ws: multiplicity4(*ws),
            "explicit": explicit4,
            "channel": lambda ws: channel_decompose4(*ws).total,
            "oracle": singlet_count,
        }
    return {
        "polytope": multiplicity_n,
        "channel": lambda ws: channel_fold(ws[::-1]),
        "oracle": singlet_count,
    }


@dataclass
class SweepResult:
    rank: int
    max_label: int
    points: int
    checked: int = 0
    nonzero: int = 0
    mismatches: int = 0
    first: tuple | None = None
    seconds: float = 0.0
    # root-lattice tuples only: labels -> {method: value}
    table: dict = field(default_factory=dict, repr=False)

    def summary(self) -> str:
        return (f"rank {self.rank} labels<={self.max_label} points {self.points}: "
                f"checked {self.checked}, nonzero {self.nonzero}, "
                f"mismatches: {self.mismatches}, {self.seconds:.1f}s")


def sweep(r: int, max_label: int, points: int, keep_table: bool = False,
          stop_on_mismatch: bool = False) -> SweepResult:
    """Compare every available path on all tuples in the box."""
    t0 = time.perf_counter()
    res = SweepResult(r, max_label, points)
    fns = methods(points)
    for ws in tuples(r, max_label, points):
        res.checked += 1
        lattice = root_lattice_check(ws) is not None
        if not lattice:
            # cheap paths only: everything must vanish
            vals = {"polytope": fns["polytope"](list(ws)), "oracle": singlet_count(ws)}
        else:
            vals = {}
            for name, f in fns.items():
                v = f(list(ws))
                if v is not None:
                    vals[name] = v
        ref = vals["oracle"]
        if ref:
            res.nonzero += 1
        if keep_table and lattice:
            res.table[tuple(w.labels for w in ws)] = vals
        if any(v != ref for v in vals.values()):
            res.mismatches += 1
            if res.first is None:
                res.first = (tuple(str(w) for w in ws), vals)
            if stop_on_mismatch:
                break
    res.seconds = time.perf_counter() - t0
    return res


# the exhaustive ranges used for acceptance
THREE_POINT_RANGES = ((1, 10), (2, 4), (3, 2))
FOUR_POINT_RANGES = ((1, 8), (2, 3), (3, 2))


def acceptance_suite():
    for r, L in THREE_POINT_RANGES:
        yield r, L, 3
    for r, L in FOUR_POINT_RANGES:
        yield r, L, 4
