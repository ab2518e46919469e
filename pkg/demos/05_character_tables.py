"""
Character tables: rational rows, Galois classes, fields of definition
=====================================================================

Three questions about a character table, answered exactly:

  * how many irreducible characters of each degree are rational-valued?
  * which rows are Galois conjugates of each other?
  * for a Brauer character, over which GF(p^m) is the module realizable?
"""

from importlib.resources import files

from burnside import (
    field_of_definition_size,
    galois_partition_by_degree,
    rational_degree_census,
)
from burnside.formats import parse_chartab

data = files("burnside") / "data"

table = parse_chartab((data / "d18.json").read_text())
print(table.name, "-", table.n_classes, "classes:", ", ".join(table.class_names))
for i, row in enumerate(table.rows):
    print(f"  {table.row_name(i):6s}", [str(v) for v in row.values])

print()
print("rational degree census:", rational_degree_census(table))
for degree, orbits in galois_partition_by_degree(table):
    print(f"degree {degree}: {len(orbits)} Galois class(es):",
          " ".join(str(tuple(o)) for o in orbits))

# Brauer rows: the Frobenius zeta -> zeta^p permutes the irreducible
# p-modular characters; the orbit length of a row under it is the m with
# field of definition GF(p^m).
print()
for fname in ("sz8mod2.json", "m22mod2.json", "j2mod2.json"):
    t = parse_chartab((data / fname).read_text())
    sizes = [field_of_definition_size(r, t.prime) for r in t.rows]
    print(f"{t.name}: field of definition sizes {sizes}")
