"""
Exact cyclotomic arithmetic
===========================

Character values are sums of roots of unity.  Cyclotomic keeps them exact:
every value is stored against the smallest cyclotomic field containing it,
so rationality is a property you can read off, not a float comparison.
"""

from fractions import Fraction

from burnside import Cyclotomic, galois, is_rational, zeta

z5 = zeta(5)
print("z5 =", z5)

# the five fifth roots of unity sum to zero, exactly
print("1 + z5 + z5^2 + z5^3 + z5^4 =", sum(zeta(5, e) for e in range(5)))

# the golden ratio lives in Q(zeta_5)
gold = z5 + zeta(5, 4)
print("z5 + z5^-1 =", gold, "  rational?", is_rational(gold))
print("(z5 + z5^-1) satisfies x^2 + x - 1 = 0:", gold * gold + gold - 1 == 0)

# conductor minimization: zeta_12^3 is just i, and i^2 is -1
i = zeta(12, 3)
print("zeta_12^3 =", i, " squared:", i * i)

# Galois automorphisms zeta_n -> zeta_n^k permute conjugates and fix Q
print("sigma_2(z5) =", galois(z5, 2))
print("sigma_2 fixes 7/3:", galois(Cyclotomic(1, (Fraction(7, 3),)), 2))

# the trace of z5 over Q: sum over the Galois group
trace = sum(galois(z5, k) for k in (1, 2, 3, 4))
print("trace of z5:", trace, " rational?", is_rational(trace))
