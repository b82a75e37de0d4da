"""Non-vanishing cones for four-point couplings of su(2) and su(3).

The cone inequalities decide when a four-point multiplicity is nonzero
without evaluating any sum.  We print a few members and non-members and
confirm each verdict with the nested sum.
"""

from bzsum import Weight, cone_su2, cone_su3, multiplicity4, multiplicity4_su2

print("su(2)")
for labels in [(1, 1, 1, 1), (4, 1, 1, 1), (3, 1, 1, 1), (2, 2, 2, 0)]:
    rep = cone_su2(*labels)
    m = multiplicity4_su2(*labels)
    print(f"  {labels}: member={rep.member} multiplicity={m} violated={rep.violated}")

print("su(3)")
cases = [
    [(1, 1)] * 4,
    [(2, 0), (0, 2), (0, 0), (0, 0)],
    [(3, 0), (0, 0), (0, 0), (0, 0)],
    [(4, 0), (0, 1), (0, 1), (0, 1)],
]
for labels in cases:
    ws = [Weight(x) for x in labels]
    rep = cone_su3(*ws)
    print(f"  {labels}: member={rep.member} multiplicity={multiplicity4(*ws)} "
          f"violated={rep.violated}")
