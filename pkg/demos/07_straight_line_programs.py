"""
Straight-line programs as portable subgroup generators
======================================================

A table of marks stores, for each subgroup class, a short program that
rebuilds generators of a representative from the group's own generators.
The same program therefore works in any faithful representation: evaluate
it on permutations to get a permutation copy, on matrices to get a matrix
copy.
"""

from burnside import compute_tom, evaluate, mulclose
from burnside.corpus import pair_s3
from burnside.formats import parse_slp, write_slp

group, action = pair_s3()
tom = compute_tom(group)

print("S3 subgroup classes, orders", tom.orders)
print()

for i, prog in enumerate(tom.slps):
    text = write_slp(prog).rstrip("\n").replace("\n", "; ")
    perm_gens = evaluate(prog, group.generators)
    sub_order = len(mulclose(perm_gens, group.degree)) if perm_gens else 1
    print(f"class {i + 1} (order {tom.orders[i]:2d}): {text!r:40s} -> subgroup of order {sub_order}")

print()

# the same program, evaluated on the matrix copy of S3
prog = parse_slp("r3 = r1 * r2\nreturn r3\n", 2)
g1, g2 = action.matrices
(product,) = evaluate(prog, [g1, g2])
print("on matrices: r1 * r2 =")
print(product)
print("matches direct multiplication:", product == g1 * g2)

# programs survive a text round trip
again = parse_slp(write_slp(prog), 2)
print("round trip preserves the program:",
      (again.statements, again.returns) == (prog.statements, prog.returns))
