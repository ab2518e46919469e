"""
Rewriting GF(p^k) matrices over the prime field
===============================================

blow_up replaces each GF(p^k) scalar by its k x k multiplication matrix in
the power basis of the field modulus.  The construction is a ring
homomorphism, so group representations survive it: a d-dimensional module
over GF(p^k) becomes a dk-dimensional module over GF(p) with the same
orbit structure on the underlying set of vectors.
"""

import random

from burnside import ExtField, FFMatrix, PrimeField, blow_up

f4 = ExtField(2, 2)  # GF(4) = GF(2)[z]/(z^2+z+1)
z = f4.from_coeffs((0, 1))

m = FFMatrix.from_rows(f4, [[z, 1], [0, z]])
print("over GF(4):")
print(m)
print("blown up over GF(2):")
print(blow_up(m))

# homomorphism check on random pairs
rng = random.Random(4)
f8 = ExtField(2, 3)
for field in (f4, f8):
    ok = all(
        blow_up(a * b) == blow_up(a) * blow_up(b)
        for a, b in (
            (
                FFMatrix.from_rows(field, [[rng.randrange(field.q) for _ in range(3)] for _ in range(3)]),
                FFMatrix.from_rows(field, [[rng.randrange(field.q) for _ in range(3)] for _ in range(3)]),
            )
            for _ in range(50)
        )
    )
    print(f"GF({field.q}): blow_up(AB) == blow_up(A) blow_up(B) on 50 random pairs:", ok)

# k = 1 is a no-op
f3 = PrimeField(3)
a = FFMatrix.from_rows(f3, [[1, 2], [0, 1]])
print("prime field blow-up is the identity:", blow_up(a) == a)
