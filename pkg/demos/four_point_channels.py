"""Four-point multiplicities and their channel decomposition.

The four-point nested sum counts glued diagrams in one go.  The same
number splits into a sum over intermediate irreps rho of products of
two three-point multiplicities; this script prints both.
"""

from bzsum import (
    Weight,
    channel_decompose4,
    multiplicity4,
    multiplicity4_su3,
    singlet_count,
)

ws = [Weight((1, 1))] * 4
total = multiplicity4(*ws)
print("su(3): (1,1)^4")
print("  nested sum:  ", total)
print("  explicit su3:", multiplicity4_su3(*ws))
print("  oracle:      ", singlet_count(ws))

dec = channel_decompose4(*ws)
print("  channels (rho in first pair):")
for rho, (left, right) in sorted(dec.terms.items(), key=lambda kv: kv[0].labels):
    print(f"    rho = {rho}: {left} x {right}")
print("  channel total:", dec.total)

# A rank-3 example
ws = [Weight((1, 0, 1)), Weight((0, 1, 0)), Weight((0, 1, 0)), Weight((1, 0, 1))]
print(f"\nsu(4): {'; '.join(map(str, ws))}")
print("  nested sum:", multiplicity4(*ws), " oracle:", singlet_count(ws))
