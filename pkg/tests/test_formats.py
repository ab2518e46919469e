"""Format round trips and parse errors with line/column reporting."""

import random

import pytest

from burnside.chartab import (
    CharacterRow,
    CharacterTable,
    galois_partition_by_degree,
    rational_degree_census,
)
from burnside.cyclotomic import Cyclotomic, zeta
from burnside.ffield import ExtField, FFMatrix, PrimeField, blow_up
from burnside.formats import (
    ParseError,
    parse_chartab,
    parse_cyclotomic,
    parse_ext_matrix,
    parse_fixed_vector,
    parse_meataxe,
    parse_slp,
    parse_tom,
    write_chartab,
    write_ext_matrix,
    write_fixed_vector,
    write_meataxe,
    write_slp,
    write_tom,
)
from burnside.permgroup import Perm, PermGroup
from burnside.slp import INV, MUL, POW, SLProgram, evaluate
from burnside.tom import compute_tom

GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)


def random_matrix(field, rows, cols, rng):
    return FFMatrix(field, rows, cols, [rng.randrange(field.q) for _ in range(rows * cols)])


# ---------------------------------------------------------------------------
# MeatAxe text


def test_mode1_identity():
    m = parse_meataxe("1 2 2 2\n10\n01\n")
    assert m == FFMatrix.identity(GF2, 2)


def test_mode12_three_cycle():
    perms = parse_meataxe("12 1 3 1\n2\n3\n1\n")
    assert perms == [Perm.from_cycles(3, [(0, 1, 2)])]


def test_mode5_reduction():
    m = parse_meataxe("5 5 1 3\n6 -1 2\n")
    assert m == FFMatrix.from_rows(GF5, [[1, 4, 2]])


def test_mode1_and_mode5_parse_equal():
    rng = random.Random(0)
    for field in (GF2, GF3, GF5):
        m = random_matrix(field, 3, 4, rng)
        assert parse_meataxe(write_meataxe(m, 1)) == parse_meataxe(write_meataxe(m, 5))


def test_meataxe_round_trips():
    rng = random.Random(1)
    for field in (GF2, GF3, GF5, PrimeField(7)):
        m = random_matrix(field, 4, 3, rng)
        for mode in (1, 5):
            assert parse_meataxe(write_meataxe(m, mode)) == m
    big = random_matrix(PrimeField(11), 2, 5, rng)
    assert parse_meataxe(write_meataxe(big)) == big  # q > 9 falls back to mode 5
    perms = [Perm.from_cycles(5, [(0, 1, 2, 3, 4)]), Perm.from_cycles(5, [(1, 4), (2, 3)])]
    assert parse_meataxe(write_meataxe(perms)) == perms


def test_meataxe_arbitrary_line_breaks():
    assert parse_meataxe("1 3 2 2\n12\n21\n") == parse_meataxe("1 3 2 2\n1221\n")
    assert parse_meataxe("1 3 2 2\n1\n2 2\n1\n") == parse_meataxe("1 3 2 2\n1221\n")


@pytest.mark.parametrize(
    "text",
    [
        "",
        "1 2 2\n",
        "9 2 2 2\n",
        "1 4 1 1\n0\n",  # 4 is not prime
        "1 11 1 1\n0\n",  # mode 1 caps the field size
        "12 2 3 1\n1\n2\n3\n",  # mode 12 wants q = 1
        "1 2 2 2\n10\n0\n",  # too few digits
        "1 2 2 2\n10\n011\n",  # too many digits
        "5 5 1 2\n3 x\n",
        "12 1 3 1\n1\n1\n2\n",  # repeated image
        "12 1 3 1\n1\n4\n2\n",  # image out of range
    ],
)
def test_meataxe_rejects(text):
    with pytest.raises(ParseError):
        parse_meataxe(text)


def test_meataxe_error_locations():
    with pytest.raises(ParseError) as info:
        parse_meataxe("1 2 2 2\n10\n21\n")
    assert info.value.line == 3 and info.value.col == 1
    with pytest.raises(ParseError) as info:
        parse_meataxe("12 1 3 1\n1\n1\n2\n")
    assert info.value.line == 3
    assert "line 3" in str(info.value)


def test_write_meataxe_rejects_unwritable():
    with pytest.raises(ValueError):
        write_meataxe(random_matrix(PrimeField(11), 2, 2, random.Random(2)), 1)
    with pytest.raises(ValueError):
        write_meataxe([])
    gf4 = ExtField(2, 2)
    with pytest.raises(ValueError):
        write_meataxe(FFMatrix.identity(gf4, 2))


# ---------------------------------------------------------------------------
# extension-field matrix wrapper


def test_ext_matrix_round_trip_and_blowup():
    gf4 = ExtField(2, 2)
    m = FFMatrix(gf4, 1, 1, [gf4.gen])
    text = write_ext_matrix(m)
    back = parse_ext_matrix(text)
    assert back == m
    assert blow_up(back) == FFMatrix.from_rows(GF2, [[0, 1], [1, 1]])


def test_ext_matrix_round_trip_random():
    rng = random.Random(3)
    gf8 = ExtField(2, 3)
    gf9 = ExtField(3, 2)
    for field in (gf8, gf9):
        m = random_matrix(field, 3, 2, rng)
        assert parse_ext_matrix(write_ext_matrix(m)) == m


def test_ext_matrix_rejects():
    with pytest.raises(ParseError):
        parse_ext_matrix("{")
    with pytest.raises(ParseError):
        parse_ext_matrix("[]")
    with pytest.raises(ParseError):
        parse_ext_matrix('{"p": 2, "k": 2, "rows": 1, "cols": 1}')
    with pytest.raises(ParseError):  # reducible modulus
        parse_ext_matrix(
            '{"p": 2, "k": 2, "modulus": [1, 0, 1], "rows": 1, "cols": 1, "entries": [[[1]]]}'
        )
    with pytest.raises(ParseError):  # coefficient list too long
        parse_ext_matrix(
            '{"p": 2, "k": 2, "rows": 1, "cols": 1, "entries": [[[1, 0, 1]]]}'
        )
    with pytest.raises(ValueError):
        write_ext_matrix(FFMatrix.identity(GF2, 1))


# ---------------------------------------------------------------------------
# tables of marks


def s4_group():
    return PermGroup(4, [Perm.from_cycles(4, [(0, 1, 2, 3)]), Perm.from_cycles(4, [(0, 1)])])


def test_tom_round_trip_with_slps():
    tom = compute_tom(s4_group())
    back = parse_tom(write_tom(tom))
    assert back.n == tom.n and back.orders == tom.orders and back.marks == tom.marks
    assert back.slps == tom.slps
    assert parse_tom(write_tom(back)) == back


def test_tom_minimal_file():
    tom = parse_tom('{"n_classes": 1, "orders": [1], "marks": [[1, 1, 1]]}')
    assert tom.marks == ((1,),)
    assert tom.slps is None


def test_tom_s3_literal():
    text = """
    {"n_classes": 4, "orders": [1, 2, 3, 6],
     "marks": [[1,1,6], [2,1,3], [2,2,1], [3,1,2], [3,3,2],
               [4,1,1], [4,2,1], [4,3,1], [4,4,1]]}
    """
    tom = parse_tom(text)
    assert tom.marks == ((6, 0, 0, 0), (3, 1, 0, 0), (2, 0, 2, 0), (1, 1, 1, 1))


@pytest.mark.parametrize(
    "text",
    [
        '{"n_classes": 1, "orders": [1]}',
        '{"n_classes": 2, "orders": [1, 2], "marks": [[1,1,2], [1,2,1], [2,1,1], [2,2,1]]}',
        '{"n_classes": 2, "orders": [1, 2], "marks": [[1,1,2], [2,1,1], [2,2,1], [2,2,1]]}',
        '{"n_classes": 2, "orders": [1, 2], "marks": [[1,1,3], [2,1,1], [2,2,1]]}',
        '{"n_classes": 2, "orders": [1, 2], "marks": [[1,1,2], [2,1,1], [2,2,1]], "slps": ["return r1\\n"]}',
        '{"n_classes": 2, "orders": [2, 1], "marks": [[1,1,2], [2,1,1], [2,2,1]]}',
    ],
)
def test_tom_rejects(text):
    with pytest.raises(ParseError):
        parse_tom(text)


def test_fixed_vector_round_trip():
    values = [4, 2, 1, 1]
    assert parse_fixed_vector(write_fixed_vector(values)) == values
    with pytest.raises(ParseError):
        parse_fixed_vector('{"values": [1, "x"]}')
    with pytest.raises(ParseError):
        parse_fixed_vector("[1, 2]")


# ---------------------------------------------------------------------------
# straight-line programs


def test_slp_identity_program():
    prog = parse_slp("return r1\n")
    assert prog == SLProgram(1, (), (1,))


def test_slp_product_program():
    prog = parse_slp("r3 = r1 * r2\nreturn r3\n")
    assert prog == SLProgram(2, ((3, MUL, 1, 2),), (3,))


def test_slp_inverse_then_product():
    prog = parse_slp("r3 = r1^-1\nr4 = r3 * r2\nreturn r4\n")
    rng = random.Random(4)
    while True:
        a = random_matrix(GF3, 2, 2, rng)
        b = random_matrix(GF3, 2, 2, rng)
        if a.is_invertible() and b.is_invertible():
            break
    assert evaluate(prog, [a, b]) == [a.inverse() * b]


def test_slp_power_statements():
    assert parse_slp("r2 = r1^5\nreturn r2\n").statements == ((2, POW, 1, 5),)
    assert parse_slp("r2 = r1^-1\nreturn r2\n").statements == ((2, INV, 1),)
    assert parse_slp("r2 = r1^-3\nreturn r2\n").statements == ((2, POW, 1, -3),)


def test_slp_bare_return_is_trivial_subgroup():
    prog = parse_slp("return\n")
    assert prog.returns == ()


def test_slp_round_trip():
    progs = [
        SLProgram(2, ((3, MUL, 1, 2), (4, INV, 3), (5, POW, 4, 7)), (5, 2)),
        SLProgram(1, (), (1,)),
        SLProgram(3, (), ()),
    ]
    for prog in progs:
        text = write_slp(prog)
        assert parse_slp(text, prog.n_inputs) == prog
    tom = compute_tom(s4_group())
    for prog in tom.slps:
        assert parse_slp(write_slp(prog), prog.n_inputs) == prog


def test_slp_input_inference():
    assert parse_slp("r3 = r1 * r2\nreturn r3\n").n_inputs == 2
    assert parse_slp("r2 = r7 * r7\nreturn r2\n").n_inputs == 7
    assert parse_slp("return\n").n_inputs == 1


def test_slp_rejects():
    with pytest.raises(ParseError):
        parse_slp("r3 = r1 * r2\n")  # missing return
    with pytest.raises(ParseError):
        parse_slp("r3 = r1 + r2\nreturn r3\n")  # malformed statement
    with pytest.raises(ParseError):
        parse_slp("return r3\nr3 = r1 * r1\n")  # statement after return
    with pytest.raises(ParseError):
        parse_slp("return r1, x2\n")
    with pytest.raises(ParseError):  # use before define with explicit inputs
        parse_slp("r4 = r3 * r1\nreturn r4\n", n_inputs=2)
    err = None
    try:
        parse_slp("r2 = r1 * r1\nr3 = r2 @ r2\nreturn r3\n")
    except ParseError as exc:
        err = exc
    assert err is not None and err.line == 2


# ---------------------------------------------------------------------------
# cyclotomic expressions


def test_expr_known_values():
    a = parse_cyclotomic("E(7)+E(7)^2+E(7)^4")
    assert a == zeta(7) + zeta(7, 2) + zeta(7, 4)
    assert parse_cyclotomic("E(4)^2") == -1
    c = parse_cyclotomic("E(5)+E(5)^4")
    assert c.level == 5
    assert (2 * c + 1) ** 2 == 5  # c = (-1+sqrt(5))/2


def test_expr_grammar_forms():
    assert parse_cyclotomic("3/2") == Cyclotomic.from_rational(3) / 2
    assert parse_cyclotomic("-E(9)") == -zeta(9)
    assert parse_cyclotomic("2*E(9)^2") == 2 * zeta(9, 2)
    assert parse_cyclotomic("(1+E(4))*(1-E(4))") == 2
    assert parse_cyclotomic("E(7)^-1") == zeta(7, 6)
    assert parse_cyclotomic(" 1 + 2 * E(3) ") == 1 + 2 * zeta(3)
    assert parse_cyclotomic("--1") == 1


def random_expr(rng, depth=0):
    if depth >= 2 or rng.random() < 0.45:
        kind = rng.randrange(4)
        if kind == 0:
            return str(rng.randrange(0, 9))
        if kind == 1:
            return f"{rng.randrange(1, 9)}/{rng.randrange(1, 9)}"
        n = rng.randrange(1, 13)
        if kind == 2:
            return f"E({n})"
        return f"E({n})^{rng.randrange(-6, 12)}"
    if rng.random() < 0.2:
        return f"-({random_expr(rng, depth + 1)})"
    op = rng.choice("+-*")
    return f"({random_expr(rng, depth + 1)}){op}({random_expr(rng, depth + 1)})"


def test_expr_random_round_trips():
    rng = random.Random(5)
    for _ in range(80):
        text = random_expr(rng)
        value = parse_cyclotomic(text)
        assert parse_cyclotomic(str(value)) == value


def test_parser_commutes_with_addition():
    rng = random.Random(6)
    for _ in range(40):
        a = random_expr(rng)
        b = random_expr(rng)
        assert parse_cyclotomic(f"({a})+({b})") == parse_cyclotomic(a) + parse_cyclotomic(b)


def test_expr_rejects():
    for bad in ["", "E(0)", "E(-3)", "1/0", "2+", "(1", "1)", "E(7", "E(7)^", "x"]:
        with pytest.raises(ParseError):
            parse_cyclotomic(bad)
    with pytest.raises(ParseError) as info:
        parse_cyclotomic("1 + 1/0")
    assert info.value.col == 7
    with pytest.raises(ParseError) as info:
        parse_cyclotomic("E(0)")
    assert info.value.col == 3


# ---------------------------------------------------------------------------
# character tables


def d18_json():
    return """
    {"name": "Dihedral(18)", "n_classes": 6,
     "class_names": ["1a", "9a", "9b", "3a", "9c", "2a"],
     "irreducibles": [
       ["1", "1", "1", "1", "1", "1"],
       ["1", "1", "1", "1", "1", "-1"],
       ["2", "E(9)+E(9)^8", "E(9)^2+E(9)^7", "-1", "E(9)^4+E(9)^5", "0"],
       ["2", "E(9)^2+E(9)^7", "E(9)^4+E(9)^5", "-1", "E(9)+E(9)^8", "0"],
       ["2", "-1", "-1", "2", "-1", "0"],
       ["2", "E(9)^4+E(9)^5", "E(9)+E(9)^8", "-1", "E(9)^2+E(9)^7", "0"]
     ]}
    """


def test_chartab_parse_and_reports():
    table = parse_chartab(d18_json())
    assert table.name == "Dihedral(18)"
    assert table.n_classes == 6
    assert table.prime is None
    assert rational_degree_census(table) == [(1, 2), (2, 1)]
    assert galois_partition_by_degree(table) == [
        (1, ((1,), (2,))),
        (2, ((3, 4, 6), (5,))),
    ]


def test_chartab_round_trip():
    table = parse_chartab(d18_json())
    assert parse_chartab(write_chartab(table)) == table
    brauer = CharacterTable(
        "toy mod 2",
        (CharacterRow((1, 1)), CharacterRow((2, zeta(7) + zeta(7, 2) + zeta(7, 4)))),
        ("1a", "7a"),
        prime=2,
    )
    assert parse_chartab(write_chartab(brauer)) == brauer


def test_chartab_rejects():
    with pytest.raises(ParseError):
        parse_chartab('{"name": "t", "n_classes": 2, "irreducibles": [["1"]]}')
    with pytest.raises(ParseError):
        parse_chartab('{"name": "t", "n_classes": 1, "irreducibles": [["E(0)"]]}')
    with pytest.raises(ParseError):
        parse_chartab('{"name": "t", "n_classes": 2, "irreducibles": [["0", "1"]]}')
    with pytest.raises(ParseError):
        parse_chartab('{"name": "t", "n_classes": 1, "irreducibles": [["1"]], "prime": "x"}')
