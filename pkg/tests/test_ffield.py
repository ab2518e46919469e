"""Field and matrix arithmetic against independent oracles.

The multiply oracle below is a deliberately naive triple loop over field ops,
kept separate from the production paths (bit-packed GF(2), numpy for odd
primes) so the two never share code.
"""

import random

import pytest

from burnside.ffield import ExtField, FFMatrix, PrimeField, blow_up, default_modulus, norm

GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF5 = PrimeField(5)
GF4 = ExtField(2, 2)
GF8 = ExtField(2, 3)


def mul_oracle(a, b):
    """Reference product: plain scalar loops, no packing, no numpy."""
    f = a.field
    out = []
    for i in range(a.rows):
        for j in range(b.cols):
            acc = f.zero
            for t in range(a.cols):
                acc = f.add(acc, f.mul(a[i, t], b[t, j]))
            out.append(acc)
    return FFMatrix(f, a.rows, b.cols, out)


def random_matrix(field, rows, cols, rng):
    return FFMatrix(field, rows, cols, [rng.randrange(field.q) for _ in range(rows * cols)])


# ---------------------------------------------------------------------------
# fields


def test_prime_field_rejects_composites():
    for n in (0, 1, 4, 9, 12):
        with pytest.raises(ValueError):
            PrimeField(n)


def test_prime_field_ops():
    f = GF5
    assert f.add(3, 4) == 2
    assert f.sub(1, 3) == 3
    assert f.mul(3, 4) == 2
    assert f.inv(3) == 2
    assert f.pow(2, -1) == 3


def test_default_modulus_small_fields():
    assert default_modulus(2, 2) == (1, 1, 1)  # x^2+x+1
    assert default_modulus(2, 3) == (1, 1, 0, 1)  # x^3+x+1
    assert default_modulus(3, 2) == (1, 0, 1)  # x^2+1
    assert default_modulus(2, 4) == (1, 1, 0, 0, 1)


def test_ext_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ExtField(2, 2, (1, 0, 1))  # x^2+1 = (x+1)^2 over GF(2)
    with pytest.raises(ValueError):
        ExtField(2, 2, (1, 1))  # wrong degree
    with pytest.raises(ValueError):
        ExtField(2, 17)


def test_ext_field_axioms_exhaustive():
    for f in (GF4, GF8, ExtField(3, 2), ExtField(5, 2)):
        els = list(f.elements())
        for a in els:
            assert f.add(a, f.zero) == a
            assert f.mul(a, f.one) == a
            assert f.add(a, f.neg(a)) == f.zero
            if a != f.zero:
                assert f.mul(a, f.inv(a)) == f.one
        for a in els:
            for b in els:
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
        rng = random.Random(1)
        for _ in range(200):
            a, b, c = (rng.randrange(f.q) for _ in range(3))
            assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
            assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


def test_gf4_multiplication_table():
    # z = 2, z+1 = 3 with z^2 = z+1 from x^2+x+1
    z = GF4.gen
    assert z == 2
    assert GF4.mul(z, z) == 3
    assert GF4.mul(z, 3) == 1  # z*(z+1) = z^2+z = 1
    assert GF4.add(z, GF4.one) == 3


def test_frobenius_trivial_cases():
    assert GF4.frobenius(0) == 0
    assert GF4.frobenius(1) == 1


def test_frobenius_gf4_generator():
    # z^2 = z+1 from the modulus
    assert GF4.frobenius(GF4.gen) == 3


def test_frobenius_order_k():
    for f in (GF4, GF8, ExtField(3, 3)):
        for a in f.elements():
            x = a
            for _ in range(f.k):
                x = f.frobenius(x)
            assert x == a


def test_frobenius_is_additive_and_multiplicative():
    f = GF8
    for a in f.elements():
        for b in f.elements():
            assert f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b))
            assert f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b))


# ---------------------------------------------------------------------------
# matrix product


def test_identity_times_matrix():
    rng = random.Random(7)
    for f in (GF2, GF3, GF4):
        m = random_matrix(f, 3, 3, rng)
        eye = FFMatrix.identity(f, 3)
        assert eye * m == m
        assert m * eye == m


def test_gf2_hand_product():
    a = FFMatrix.from_rows(GF2, [[1, 1], [0, 1]])
    b = FFMatrix.from_rows(GF2, [[1, 0], [1, 1]])
    assert a * b == FFMatrix.from_rows(GF2, [[0, 1], [1, 1]])


def test_product_matches_scalar_oracle():
    rng = random.Random(11)
    for f in (GF2, GF3, GF5, GF4, GF8):
        for _ in range(25):
            a = random_matrix(f, 4, 3, rng)
            b = random_matrix(f, 3, 5, rng)
            assert a * b == mul_oracle(a, b)


def test_associativity_random_gf3():
    rng = random.Random(3)
    for _ in range(20):
        a = random_matrix(GF3, 5, 5, rng)
        b = random_matrix(GF3, 5, 5, rng)
        c = random_matrix(GF3, 5, 5, rng)
        lhs = mul_oracle(mul_oracle(a, b), c)
        assert (a * b) * c == lhs
        assert a * (b * c) == lhs


def test_product_shape_and_field_errors():
    a = FFMatrix.identity(GF2, 2)
    b = FFMatrix.identity(GF2, 3)
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        a * FFMatrix.identity(GF3, 2)


# ---------------------------------------------------------------------------
# nullspace / rank / inverse


def test_nullspace_zero_matrix():
    for f in (GF2, GF3, GF4):
        basis = FFMatrix.zero(f, 3, 2).nullspace()
        assert len(basis) == 3


def test_nullspace_invertible_matrix_empty():
    m = FFMatrix.from_rows(GF3, [[1, 2], [0, 1]])
    assert m.nullspace() == []


def test_nullspace_gf2_ones_matrix():
    # frozen from enumerating all 4 row vectors v with v*m = 0
    m = FFMatrix.from_rows(GF2, [[1, 1], [1, 1]])
    assert m.nullspace() == [(1, 1)]


def nullspace_oracle(m):
    """Enumerate every row vector over small fields and test v*m = 0."""
    f = m.field
    vecs = []
    for code in range(f.q**m.rows):
        v = []
        x = code
        for _ in range(m.rows):
            v.append(x % f.q)
            x //= f.q
        prod = [f.zero] * m.cols
        for i, vi in enumerate(v):
            for j in range(m.cols):
                prod[j] = f.add(prod[j], f.mul(vi, m[i, j]))
        if all(x == f.zero for x in prod):
            vecs.append(tuple(v))
    return vecs


def test_nullspace_members_and_dimension_match_enumeration():
    rng = random.Random(23)
    for f in (GF2, GF3, GF4):
        for _ in range(12):
            m = random_matrix(f, 3, 3, rng)
            basis = m.nullspace()
            all_null = set(nullspace_oracle(m))
            assert f.q ** len(basis) == len(all_null)
            for v in basis:
                assert v in all_null


def test_rank_nullity():
    rng = random.Random(5)
    for f in (GF2, GF3, GF5, GF4):
        for _ in range(15):
            r, c = rng.randrange(1, 5), rng.randrange(1, 5)
            m = random_matrix(f, r, c, rng)
            assert m.rank() + len(m.nullspace()) == r


def test_inverse_round_trip():
    rng = random.Random(9)
    for f in (GF2, GF3, GF4, GF8):
        count = 0
        while count < 10:
            m = random_matrix(f, 3, 3, rng)
            if not m.is_invertible():
                continue
            count += 1
            assert m * m.inverse() == FFMatrix.identity(f, 3)
            assert m ** -1 == m.inverse()
    with pytest.raises(ValueError):
        FFMatrix.zero(GF2, 2, 2).inverse()


def test_matrix_power():
    m = FFMatrix.from_rows(GF2, [[0, 1], [1, 1]])
    assert m**0 == FFMatrix.identity(GF2, 2)
    assert m**3 == FFMatrix.identity(GF2, 2)  # order 3 in GL(2,2)
    assert m**-2 == m


# ---------------------------------------------------------------------------
# blow-up


def test_blow_up_identity():
    for d in (1, 2, 4):
        m = FFMatrix.identity(GF4, d)
        assert blow_up(m) == FFMatrix.identity(GF2, 2 * d)


def test_blow_up_gf4_generator():
    # z*1 = z -> (0,1); z*z = 1+z -> (1,1)
    m = FFMatrix(GF4, 1, 1, (GF4.gen,))
    assert blow_up(m) == FFMatrix.from_rows(GF2, [[0, 1], [1, 1]])


def test_blow_up_multiplicative_gf8():
    rng = random.Random(17)
    for _ in range(20):
        a = random_matrix(GF8, 3, 3, rng)
        b = random_matrix(GF8, 3, 3, rng)
        assert blow_up(a * b) == blow_up(a) * blow_up(b)


def test_blow_up_additive_and_injective():
    rng = random.Random(19)
    seen = {}
    for _ in range(30):
        a = random_matrix(GF4, 2, 2, rng)
        b = random_matrix(GF4, 2, 2, rng)
        assert blow_up(a + b) == blow_up(a) + blow_up(b)
        seen[blow_up(a).entries] = a.entries
    for packed, original in seen.items():
        assert blow_up(FFMatrix(GF4, 2, 2, original)).entries == packed


def test_blow_up_k1_is_identity_transformation():
    f1 = ExtField(3, 1)
    m = FFMatrix.from_rows(f1, [[1, 2], [0, 1]])
    out = blow_up(m)
    assert out.entries == m.entries
    assert out.field == GF3
    m2 = FFMatrix.from_rows(GF3, [[1, 2], [0, 1]])
    assert blow_up(m2) is m2


def test_blow_up_det_is_field_norm():
    rng = random.Random(29)
    for f in (GF4, GF8):
        for _ in range(10):
            a = random_matrix(f, 3, 3, rng)
            assert blow_up(a).det() == norm(f, a.det())
