"""
Tables of marks from scratch
============================

The mark m[i][j] counts the points of the coset space G/U_i fixed by U_j.
Computing the whole lower-triangular table for A4 takes a fraction of a
second; each row is the fixed-point vector of one transitive A4-set.
"""

from burnside import compute_tom, decompose_fixed_vector
from burnside.corpus import pair_a4

group, _ = pair_a4()
print("group order:", group.order())

tom = compute_tom(group)
print("subgroup class orders:", tom.orders)
print()

# the triangle itself
for i, row in enumerate(tom.marks):
    cells = " ".join(f"{x:3d}" for x in row[: i + 1])
    print(f"  U_{i + 1} (order {tom.orders[i]:2d}): {cells}")
print()

# Every fixed-point vector of a genuine A4-set decomposes uniquely into
# rows of the table.  A transitive set decomposes to a unit vector:
for i in range(tom.n):
    print(f"row {i + 1} decomposes to", decompose_fixed_vector(tom, tom.row(i)))

# and a made-up vector that no A4-set can realize is rejected:
bad = list(tom.row(0))
bad[0] += 1
try:
    decompose_fixed_vector(tom, bad)
except ValueError as e:
    print("\nbad vector rejected:", e)
