"""
Counting orbits on a module without enumerating vectors
=======================================================

Given a permutation copy of a group and matrices for its action on F_q^d,
the orbit census [how many orbits have each stabilizer class] falls out of
the table of marks: compute the fixed-point count of every subgroup class
on the dual space (a nullspace dimension, so polynomial work), then
decompose that vector over the table.

The brute-force route walks every vector of the dual space.  It only
works for small modules, which is exactly what makes it a trustworthy
cross-check here.
"""

from burnside import census_brute_force, census_from_tom, compute_tom
from burnside.corpus import census_corpus

for name, group, action in census_corpus():
    tom = compute_tom(group)
    fast = census_from_tom(tom, action)
    slow = census_brute_force(group, action)
    marker = "ok" if fast == slow else "MISMATCH"
    print(f"{name:15s} |G|={group.order():3d} q^d={fast.fixed[0]:3d} "
          f"regular={fast.regular_orbits} staborders={list(fast.staborders)} [{marker}]")

print()

# A closer look at one report.  A5 = SL(2,4) acting on the 4-dimensional
# GF(2) blow-up of its natural module:
name, group, action = census_corpus()[4]
report = census_from_tom(compute_tom(group), action)
print(name)
print("  fixed vector:", report.fixed)
print("  decomposition:", report.decomp)
print("  nonzero positions (1-based):", report.nonzeropos)
print("  stabilizer orders there:", report.staborders)
print("  orbits in total:", report.orbits)
