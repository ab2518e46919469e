"""Rationality, Galois orbits, and fields of definition on frozen tables.

The dihedral and small Brauer rows below were transcribed by hand from
printed tables; expected outputs are frozen values, re-derived where cheap
by a second route (explicit sigma images) inside the tests.
"""

import math
from fractions import Fraction

import pytest

from burnside.chartab import (
    CharacterRow,
    CharacterTable,
    field_of_definition_size,
    galois_partition_by_degree,
    rational_degree_census,
)
from burnside.cyclotomic import Cyclotomic, galois, multiplicative_order, zeta


def zsum(n, *exps):
    return sum((zeta(n, e) for e in exps), Cyclotomic())


def dihedral18_table():
    # classes 1a 9a 9b 3a 9c 2a; a = zeta9 + zeta9^-1 and its sigma_2 images
    a = zsum(9, 1, 8)
    b = zsum(9, 2, 7)
    c = zsum(9, 4, 5)
    rows = (
        CharacterRow((1, 1, 1, 1, 1, 1)),
        CharacterRow((1, 1, 1, 1, 1, -1)),
        CharacterRow((2, a, b, -1, c, 0)),
        CharacterRow((2, b, c, -1, a, 0)),
        CharacterRow((2, -1, -1, 2, -1, 0)),
        CharacterRow((2, c, a, -1, b, 0)),
    )
    return CharacterTable(
        "Dihedral(18)", rows, ("1a", "9a", "9b", "3a", "9c", "2a")
    )


def sz8_mod2_rows():
    a = zsum(7, 2, 3, 4, 5)
    b = zsum(7, 1, 2, 5, 6)
    c = zsum(7, 1, 3, 4, 6)
    d = zsum(13, 1, 5, 8, 12)
    e = zsum(13, 4, 6, 7, 9)
    f = zsum(13, 2, 3, 10, 11)
    return (
        CharacterRow((1, 1, 1, 1, 1, 1, 1, 1)),
        CharacterRow((4, -1, a, c, b, d, f, e)),
        CharacterRow((4, -1, b, a, c, e, d, f)),
        CharacterRow((4, -1, c, b, a, f, e, d)),
    )


def m22_mod2_rows():
    a = zsum(7, 1, 2, 4)
    abar = zsum(7, 3, 5, 6)
    return (
        CharacterRow((1, 1, 1, 1, 1, 1, 1)),
        CharacterRow((10, 1, 0, a, abar, -1, -1)),
        CharacterRow((10, 1, 0, abar, a, -1, -1)),
    )


def j2_mod2_rows():
    a = -2 * zeta(5) - 2 * zeta(5, 4)
    astar = -2 * zeta(5, 2) - 2 * zeta(5, 3)
    b = zeta(5) + 2 * zeta(5, 2) + 2 * zeta(5, 3) + zeta(5, 4)
    bstar = 2 * zeta(5) + zeta(5, 2) + zeta(5, 3) + 2 * zeta(5, 4)
    c = zsum(5, 1, 4)
    cstar = zsum(5, 2, 3)
    return (
        CharacterRow((1, 1, 1, 1, 1, 1, 1, 1, 1, 1)),
        CharacterRow((6, -3, 0, a, astar, b, bstar, -1, c, cstar)),
        CharacterRow((6, -3, 0, astar, a, bstar, b, -1, cstar, c)),
    )


# ---------------------------------------------------------------------------


def test_row_degree_validation():
    assert CharacterRow((3, 0, 1)).degree == 3
    with pytest.raises(ValueError):
        CharacterRow((0, 1))
    with pytest.raises(ValueError):
        CharacterRow((zeta(5), 1))
    with pytest.raises(ValueError):
        CharacterRow((Fraction(1, 2), 1))
    with pytest.raises(ValueError):
        CharacterRow(())


def test_table_validation():
    with pytest.raises(ValueError):
        CharacterTable("bad", (CharacterRow((1, 1)), CharacterRow((1, 1, 1))))
    with pytest.raises(ValueError):
        CharacterTable("bad", (CharacterRow((1, 1)),), ("1a",))
    with pytest.raises(ValueError):
        CharacterTable("bad", (CharacterRow((1, 1)),), prime=6)
    t = dihedral18_table()
    assert t.n_classes == 6
    assert t.row_name(2) == "X.3"


def test_dihedral18_rational_census():
    assert rational_degree_census(dihedral18_table()) == [(1, 2), (2, 1)]


def test_dihedral18_galois_orbits():
    parts = galois_partition_by_degree(dihedral18_table())
    assert parts == [(1, ((1,), (2,))), (2, ((3, 4, 6), (5,)))]
    degree_two = dict(parts)[2]
    assert len(degree_two) == 2  # equal degree, not Galois conjugate


def test_sigma_two_cycles_dihedral_rows():
    t = dihedral18_table()
    assert t.rows[2].conjugate(2).values == t.rows[3].values
    assert t.rows[3].conjugate(2).values == t.rows[5].values
    assert t.rows[5].conjugate(2).values == t.rows[2].values


def test_field_of_definition_frozen_lists():
    assert [field_of_definition_size(r, 2) for r in sz8_mod2_rows()] == [2, 8, 8, 8]
    assert [field_of_definition_size(r, 2) for r in m22_mod2_rows()] == [2, 2, 2]
    assert [field_of_definition_size(r, 2) for r in j2_mod2_rows()] == [2, 4, 4]


def test_field_of_definition_matches_orbit_scan():
    # second route: walk sigma_p images until the row recurs
    for rows in (sz8_mod2_rows(), m22_mod2_rows(), j2_mod2_rows()):
        for row in rows:
            image = row.conjugate(2)
            m = 1
            while image.values != row.values:
                image = image.conjugate(2)
                m += 1
            assert field_of_definition_size(row, 2) == 2**m


def test_field_of_definition_divides_frobenius_order():
    for row in sz8_mod2_rows():
        lift = math.lcm(*[v.level for v in row.values])
        size = field_of_definition_size(row, 2)
        m = size.bit_length() - 1
        assert 2**m == size
        assert multiplicative_order(2, lift) % m == 0


def test_field_of_definition_errors():
    row = CharacterRow((1, zeta(7)))
    with pytest.raises(ValueError):
        field_of_definition_size(row, 7)
    with pytest.raises(ValueError):
        field_of_definition_size(row, 4)
    assert field_of_definition_size(row, 3) == 3**6  # 3 generates (Z/7Z)*


def test_rational_rows_are_singleton_orbits():
    rows = (
        CharacterRow((2, -1, 0)),
        CharacterRow((2, 0, -1)),
        CharacterRow((2, zeta(5) + zeta(5, 4), 0)),
        CharacterRow((2, zeta(5, 2) + zeta(5, 3), 0)),
    )
    parts = galois_partition_by_degree(CharacterTable("t", rows))
    assert parts == [(2, ((1,), (2,), (3, 4)))]


def test_no_rational_rows_gives_empty_census():
    rows = (CharacterRow((1, zeta(5))),)
    assert rational_degree_census(CharacterTable("t", rows)) == []


def test_conjugation_preserves_degree():
    for row in sz8_mod2_rows():
        assert row.conjugate(3).degree == row.degree
