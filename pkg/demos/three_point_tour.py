"""A walk through three-point couplings of su(3).

We start from the initial triangle of 8 (x) 8 (x) 8, list every true
triangle reached by adding hexagon virtuals, and compare the count with
the Littlewood-Richardson oracle.
"""

from bzsum import (
    Weight,
    enumerate3,
    initial_triangle,
    multiplicity3,
    reconstruct_triangle,
    singlet_count,
)

adj = Weight((1, 1))

print("Initial triangle of (1,1) x (1,1) x (1,1):")
print(initial_triangle(adj, adj, adj).pretty())
print()

vecs = enumerate3(adj, adj, adj)
for n, cv in enumerate(vecs, start=1):
    tri = reconstruct_triangle(adj, adj, adj, cv)
    print(f"true triangle {n}: v = {list(cv.as_tuple())}")
    print(tri.pretty())
    print()

print("nested sum:", multiplicity3(adj, adj, adj))
print("oracle:    ", singlet_count([adj, adj, adj]))

# A larger example where the sum has many terms.
a, b, c = Weight((4, 2)), Weight((3, 3)), Weight((2, 4))
print(f"\nT[{a}; {b}; {c}] = {multiplicity3(a, b, c)} (oracle {singlet_count([a, b, c])})")
