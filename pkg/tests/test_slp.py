"""Straight-line program construction and evaluation."""

import random

import pytest

from burnside.ffield import FFMatrix, PrimeField
from burnside.permgroup import Perm
from burnside.slp import INV, MUL, POW, SLProgram, evaluate

GF3 = PrimeField(3)


def random_invertible(field, n, rng):
    while True:
        m = FFMatrix(field, n, n, [rng.randrange(field.q) for _ in range(n * n)])
        if m.is_invertible():
            return m


def test_identity_program():
    prog = SLProgram(1, (), (1,))
    a = FFMatrix.from_rows(GF3, [[1, 2], [0, 1]])
    assert evaluate(prog, [a]) == [a]


def test_product_program_on_perms():
    prog = SLProgram(2, ((3, MUL, 1, 2),), (3,))
    a = Perm.from_cycles(3, [(0, 1)])
    b = Perm.from_cycles(3, [(1, 2)])
    assert evaluate(prog, [a, b]) == [a * b]


def test_inverse_then_product_program():
    prog = SLProgram(2, ((3, INV, 1), (4, MUL, 3, 2)), (4,))
    rng = random.Random(0)
    a = random_invertible(GF3, 2, rng)
    b = random_invertible(GF3, 2, rng)
    assert evaluate(prog, [a, b]) == [a.inverse() * b]


def test_pow_zero_gives_identity():
    prog = SLProgram(1, ((2, POW, 1, 0),), (2,))
    a = random_invertible(GF3, 3, random.Random(1))
    assert evaluate(prog, [a]) == [FFMatrix.identity(GF3, 3)]
    p = Perm.from_cycles(4, [(0, 1, 2, 3)])
    assert evaluate(prog, [p]) == [Perm.identity(4)]


def test_pow_matches_repeated_mul_and_inverse():
    rng = random.Random(2)
    a = random_invertible(GF3, 2, rng)
    acc = FFMatrix.identity(GF3, 2)
    for e in range(9):
        prog = SLProgram(1, ((2, POW, 1, e),), (2,))
        assert evaluate(prog, [a]) == [acc]
        neg = SLProgram(1, ((2, POW, 1, -e),), (2,))
        assert evaluate(neg, [a]) == [acc.inverse()]
        acc = acc * a


def test_empty_returns_encode_trivial_subgroup():
    prog = SLProgram(2, (), ())
    assert evaluate(prog, [Perm.identity(2), Perm.identity(2)]) == []


def test_evaluate_distributes_over_conjugation():
    rng = random.Random(3)
    prog = SLProgram(
        2,
        ((3, MUL, 1, 2), (4, INV, 2), (5, MUL, 4, 3), (6, POW, 5, 3)),
        (3, 6),
    )
    for _ in range(10):
        x1 = random_invertible(GF3, 3, rng)
        x2 = random_invertible(GF3, 3, rng)
        g = random_invertible(GF3, 3, rng)
        ginv = g.inverse()
        base = evaluate(prog, [x1, x2])
        conj = evaluate(prog, [ginv * x1 * g, ginv * x2 * g])
        assert conj == [ginv * r * g for r in base]


def test_validation_errors():
    with pytest.raises(ValueError):
        SLProgram(1, ((3, MUL, 1, 2),), (3,))  # r2 never defined
    with pytest.raises(ValueError):
        SLProgram(1, (), (2,))  # returned slot undefined
    with pytest.raises(ValueError):
        SLProgram(1, ((10_001, INV, 1),), (1,))  # slot cap
    with pytest.raises(ValueError):
        SLProgram(0, (), ())
    with pytest.raises(ValueError):
        SLProgram(1, ((2, "NOP", 1),), (1,))


def test_overwriting_slots_is_allowed():
    prog = SLProgram(2, ((1, MUL, 1, 2), (1, MUL, 1, 2)), (1,))
    a = Perm.from_cycles(3, [(0, 1, 2)])
    b = Perm.from_cycles(3, [(0, 1)])
    assert evaluate(prog, [a, b]) == [a * b * b]


def test_carrier_mismatch():
    prog = SLProgram(2, ((3, MUL, 1, 2),), (3,))
    with pytest.raises(ValueError):
        evaluate(prog, [Perm.identity(3), FFMatrix.identity(GF3, 3)])
    with pytest.raises(ValueError):
        evaluate(prog, [Perm.identity(3), Perm.identity(4)])
    with pytest.raises(ValueError):
        evaluate(prog, [FFMatrix.identity(GF3, 2), FFMatrix.identity(GF3, 3)])
    with pytest.raises(ValueError):
        evaluate(prog, [FFMatrix.identity(GF3, 2), FFMatrix.identity(PrimeField(2), 2)])
    with pytest.raises(ValueError):
        evaluate(prog, [Perm.identity(3)])


def test_from_words():
    prog = SLProgram.from_words(2, [(1, 2, 1), (2,)])
    a = Perm.from_cycles(3, [(0, 1, 2)])
    b = Perm.from_cycles(3, [(0, 1)])
    assert evaluate(prog, [a, b]) == [a * b * a, b]
    trivial = SLProgram.from_words(2, [])
    assert trivial.returns == ()
