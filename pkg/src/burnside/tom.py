"""Tables of marks and the Burnside decomposition of fixed-point vectors.

The marks matrix is lower triangular over the ordered subgroup classes:
m[i][j] counts the cosets of U_i fixed by U_j.  Any G-set is determined by
its fixed-point vector, and back-substitution against the marks matrix
recovers the orbit counts per stabilizer class — exactly, over rationals, so
that corrupted inputs are detected instead of rounded away.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .permgroup import SUBGROUP_BOUND, PermGroup, subgroup_classes
from .slp import SLProgram


class DecompositionError(ValueError):
    """Fixed vector is not a nonnegative-integer combination of marks rows."""

    def __init__(self, index, message):
        super().__init__(message)
        self.index = index  # 1-based class position


@dataclass(frozen=True)
class TableOfMarks:
    n: int
    orders: tuple
    marks: tuple  # n dense rows of length n, zero above the diagonal
    slps: tuple | None = None

    def __post_init__(self):
        if self.n != len(self.orders) or self.n != len(self.marks):
            raise ValueError("size mismatch")
        if self.n == 0:
            raise ValueError("empty table")
        if self.orders[0] != 1:
            raise ValueError("first class must be the trivial subgroup")
        if any(a > b for a, b in zip(self.orders, self.orders[1:])):
            raise ValueError("subgroup orders must be nondecreasing")
        total = self.orders[-1]
        for i, row in enumerate(self.marks):
            if len(row) != self.n:
                raise ValueError("marks rows must have length n")
            if any(row[j] != 0 for j in range(i + 1, self.n)):
                raise ValueError(f"marks entry above the diagonal in row {i + 1}")
            if total % self.orders[i] or row[0] != total // self.orders[i]:
                raise ValueError(f"row {i + 1}: first column must be the index of U_{i + 1}")
            if row[i] < 1:
                raise ValueError(f"diagonal mark of class {i + 1} must be positive")
            for j in range(i + 1):
                if self.orders[i] % self.orders[j] and row[j] != 0:
                    raise ValueError(f"mark ({i + 1},{j + 1}) nonzero but order does not divide")
        if any(self.marks[-1][j] != 1 for j in range(self.n)):
            raise ValueError("last row (the one-point G-set) must be all ones")
        if self.slps is not None and len(self.slps) != self.n:
            raise ValueError("need one straight-line program per class")

    @property
    def index(self):
        return tuple(self.orders[-1] // o for o in self.orders)

    def row(self, i):
        return self.marks[i]


def compute_tom(group: PermGroup, bound: int = SUBGROUP_BOUND, classes=None, with_slps: bool = True) -> TableOfMarks:
    """Marks by explicit coset counting over the subgroup classes.

    m[i][j] = number of cosets gU_i with g^-1 U_j g inside U_i.  When
    with_slps is set, each class also gets a program expressing its
    generators as words in the group generators (breadth-first words), so the
    table can replay subgroup generators on matrix representations.
    """
    if classes is None:
        classes = subgroup_classes(group, bound)
    els = group.elements()
    n = len(classes)
    rows = []
    for i, ci in enumerate(classes):
        used = set()
        reps = []
        for g in els:
            if g not in used:
                reps.append(g)
                used.update(g * u for u in ci.elements)
        row = [0] * n
        for j in range(i + 1):
            cj = classes[j]
            if ci.order % cj.order:
                continue
            gens_j = [x for x in cj.subgroup.generators if not x.is_identity()]
            count = 0
            for g in reps:
                ginv = g.inverse()
                if all(ginv * x * g in ci.elements for x in gens_j):
                    count += 1
            row[j] = count
        rows.append(tuple(row))

    slps = None
    if with_slps:
        words = group.element_words()
        m = max(1, len(group.generators))
        progs = []
        for ci in classes:
            if ci.order == 1:
                progs.append(SLProgram(m, (), ()))
                continue
            gen_words = [tuple(idx + 1 for idx in words[g]) for g in ci.subgroup.generators if not g.is_identity()]
            progs.append(SLProgram.from_words(m, gen_words))
        slps = tuple(progs)

    return TableOfMarks(n, tuple(c.order for c in classes), tuple(rows), slps)


def decompose_fixed_vector(tom: TableOfMarks, fixed) -> tuple:
    """Solve a * marks = fixed by back-substitution, demanding a >= 0 integral.

    The unique rational solution exists because diagonal marks are positive;
    non-integral or negative entries mean the vector does not come from a
    genuine G-set (or the table and the data are mismatched) and raise a
    DecompositionError naming the first offending class.
    """
    n = tom.n
    fixed = list(fixed)
    if len(fixed) != n:
        raise ValueError(f"fixed vector length {len(fixed)} != {n} classes")
    marks = tom.marks
    a = [Fraction(0)] * n
    for j in range(n - 1, -1, -1):
        s = Fraction(fixed[j]) - sum(a[i] * marks[i][j] for i in range(j + 1, n))
        a[j] = s / marks[j][j]
    for j in range(n):
        if a[j].denominator != 1 or a[j] < 0:
            raise DecompositionError(j + 1, f"inconsistent fixed vector: entry {j + 1} solves to {a[j]}")
    return tuple(int(x) for x in a)


def orders_of(tom: TableOfMarks, positions) -> list:
    """Subgroup orders at the given 1-based class positions."""
    out = []
    for pos in positions:
        if not 1 <= pos <= tom.n:
            raise ValueError(f"position {pos} outside 1..{tom.n}")
        out.append(tom.orders[pos - 1])
    return out
