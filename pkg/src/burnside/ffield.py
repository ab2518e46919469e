"""Exact arithmetic over GF(p) and GF(p^k), dense matrices, and subfield blow-ups.

Scalars are plain ints.  In a prime field they are residues 0..p-1; in an
extension field GF(p^k) an int encodes the polynomial c_0 + c_1*z + ... by its
base-p digits, where z is a root of the defining modulus.  Matrices hold their
entries in a flat row-major tuple, so every value here is immutable and safe
to share between workers.

Dimensions in this package stay small (module actions top out around 28), so
matrices are dense.  The only speed tricks worth having are a bit-packed path
for GF(2) and a numpy path for odd prime fields; extension fields take the
plain digit-convolution route.
"""

from __future__ import annotations

import numpy as np


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomials over GF(p), as tuples of ints in ascending degree


def _ptrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, f, p):
    # remainder of a modulo f; f need not be monic
    a = list(a)
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        while a and a[-1] == 0:
            a.pop()
    return tuple(a)


def _pgcd(a, b, p):
    a, b = _ptrim(a), _ptrim(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base, e, f, p):
    result = (1,)
    base = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _minus_x(poly, p):
    d = list(poly) + [0] * (2 - len(poly))
    d[1] = (d[1] - 1) % p
    return _ptrim(d)


def _poly_is_irreducible(f, p):
    """Rabin test: x^(p^k) = x mod f, and gcd(x^(p^(k/r)) - x, f) = 1."""
    k = len(f) - 1
    if k < 1:
        return False
    if k == 1:
        return True
    if f[0] == 0:
        return False  # divisible by x
    x = (0, 1)
    if _minus_x(_ppowmod(x, p**k, f, p), p) != ():
        return False
    for r in _prime_factors(k):
        g = _minus_x(_ppowmod(x, p ** (k // r), f, p), p)
        if len(_pgcd(g, f, p)) - 1 != 0:
            return False
    return True


def default_modulus(p: int, k: int) -> tuple:
    """Lexicographically smallest monic irreducible of degree k over GF(p).

    Candidates x^k + c are ordered by the base-p integer encoding of the
    non-leading part c, so the choice is deterministic.  For GF(4) this gives
    x^2+x+1 and for GF(8) x^3+x+1.
    """
    for m in range(p**k):
        cand = tuple((m // p**i) % p for i in range(k)) + (1,)
        if _poly_is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible of degree {k} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------
# fields


class PrimeField:
    """GF(p) with int scalars 0..p-1."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.k = 1
        self.q = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def frobenius(self, a):
        return a % self.p

    def elements(self):
        return range(self.p)

    def coeffs(self, a):
        return (a,)

    def from_coeffs(self, c):
        if len(c) != 1:
            raise ValueError("prime-field scalar has one coefficient")
        return c[0] % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class ExtField:
    """GF(p^k) presented as GF(p)[z] modulo a monic irreducible of degree k.

    The modulus is a coefficient tuple in ascending degree, e.g. x^2+x+1 is
    (1, 1, 1).  When omitted it defaults to the lexicographically smallest
    irreducible; any choice gives an isomorphic field and everything computed
    downstream (fixed-space dimensions, orbit counts) is basis-independent.
    """

    def __init__(self, p: int, k: int, modulus: tuple | None = None):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not 1 <= k <= 16:
            raise ValueError("extension degree must be between 1 and 16")
        if modulus is None:
            modulus = default_modulus(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _poly_is_irreducible(modulus, p):
            raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.zero = 0
        self.one = 1
        # digits of z^j for j = k .. 2k-2, used to fold products back down
        red = []
        cur = [(-c) % p for c in modulus[:k]]  # z^k
        red.append(tuple(cur))
        for _ in range(k - 2):
            nxt = [0] + cur[: k - 1]
            top = cur[k - 1]
            if top:
                for t in range(k):
                    nxt[t] = (nxt[t] + top * red[0][t]) % p
            red.append(tuple(nxt))
            cur = nxt
        self._red = red

    def coeffs(self, a) -> tuple:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.k))

    def from_coeffs(self, c) -> int:
        if len(c) > self.k:
            raise ValueError("too many coefficients")
        return sum((ci % self.p) * self.p**i for i, ci in enumerate(c))

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.k):
            out += (a % p + b % p) % p * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a):
        p = self.p
        if p == 2:
            return a
        out = 0
        mult = 1
        for _ in range(self.k):
            out += (p - a % p) % p * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        p, k = self.p, self.k
        ad = self.coeffs(a)
        bd = self.coeffs(b)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(ad):
            if ai:
                for j, bj in enumerate(bd):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        for j in range(2 * k - 2, k - 1, -1):
            c = prod[j]
            if c:
                row = self._red[j - k]
                for t in range(k):
                    prod[t] = (prod[t] + c * row[t]) % p
        return self.from_coeffs(prod[:k])

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        out = 1
        while e:
            if e & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            e >>= 1
        return out

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.pow(a, self.q - 2)

    def frobenius(self, a):
        return self.pow(a, self.p)

    def elements(self):
        return range(self.q)

    @property
    def gen(self):
        """The modulus root z as a scalar (for k = 1 the root of x + c is -c)."""
        if self.k > 1:
            return self.from_coeffs((0, 1))
        return -self.modulus[0] % self.p

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.k == self.k
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("GF", self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


def norm(field, a):
    """Field norm GF(p^k) -> GF(p): the product of all Frobenius images."""
    out = field.one
    x = a
    for _ in range(field.k):
        out = field.mul(out, x)
        x = field.frobenius(x)
    return field.coeffs(out)[0]


# ---------------------------------------------------------------------------
# matrices


class FFMatrix:
    """Dense matrix over a PrimeField or ExtField; immutable by convention."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows, cols, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, field, rowlists):
        rows = len(rowlists)
        cols = len(rowlists[0]) if rows else 0
        flat = []
        for r in rowlists:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(field, rows, cols, flat)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, tuple(field.one if i == j else field.zero for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, FFMatrix)
            and other.field == self.field
            and other.rows == self.rows
            and other.cols == self.cols
            and other.entries == self.entries
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __repr__(self):
        return f"FFMatrix({self.field!r}, {self.to_rows()!r})"

    # -- arithmetic

    def _check_compatible(self, other):
        if not isinstance(other, FFMatrix):
            raise TypeError("expected FFMatrix")
        if other.field != self.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check_compatible(other)
        if (other.rows, other.cols) != (self.rows, self.cols):
            raise ValueError("shape mismatch")
        f = self.field
        return FFMatrix(f, self.rows, self.cols, tuple(f.add(a, b) for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other):
        self._check_compatible(other)
        if (other.rows, other.cols) != (self.rows, self.cols):
            raise ValueError("shape mismatch")
        f = self.field
        return FFMatrix(f, self.rows, self.cols, tuple(f.sub(a, b) for a, b in zip(self.entries, other.entries)))

    def __mul__(self, other):
        self._check_compatible(other)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch in product")
        f = self.field
        if f.q == 2:
            return self._mul_gf2(other)
        if f.k == 1:
            a = np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)
            b = np.array(other.entries, dtype=np.int64).reshape(other.rows, other.cols)
            c = (a @ b) % f.p
            return FFMatrix(f, self.rows, other.cols, tuple(int(x) for x in c.ravel()))
        out = []
        bcols = other.cols
        bt = other.transpose()
        for i in range(self.rows):
            arow = self.row(i)
            for j in range(bcols):
                bcol = bt.row(j)
                acc = f.zero
                for x, y in zip(arow, bcol):
                    if x and y:
                        acc = f.add(acc, f.mul(x, y))
                out.append(acc)
        return FFMatrix(f, self.rows, bcols, out)

    def _mul_gf2(self, other):
        bw = other.cols
        brows = _pack_gf2(other)
        out = []
        for i in range(self.rows):
            acc = 0
            arow = self.row(i)
            for j, bit in enumerate(arow):
                if bit:
                    acc ^= brows[j]
            out.extend((acc >> j) & 1 for j in range(bw))
        return FFMatrix(self.field, self.rows, bw, out)

    def __pow__(self, e):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        if e < 0:
            return self.inverse() ** (-e)
        out = FFMatrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def transpose(self):
        r, c = self.rows, self.cols
        ent = self.entries
        return FFMatrix(self.field, c, r, tuple(ent[i * c + j] for j in range(c) for i in range(r)))

    def is_identity(self):
        return self.rows == self.cols and self == FFMatrix.identity(self.field, self.rows)

    # -- elimination-based operations

    def nullspace(self):
        """Row-reduced basis of the left nullspace {v : v*m = 0}."""
        if self.field.q == 2:
            return self._nullspace_gf2()
        f = self.field
        r, c = self.rows, self.cols
        aug = [list(self.row(i)) + [f.one if t == i else f.zero for t in range(r)] for i in range(r)]
        _eliminate(f, aug, c)
        basis = [row[c:] for row in aug if all(x == f.zero for x in row[:c])]
        _eliminate(f, basis, r)
        return [tuple(b) for b in basis]

    def _nullspace_gf2(self):
        r, c = self.rows, self.cols
        rows = [_pack_bits(self.row(i)) | (1 << (c + i)) for i in range(r)]
        pivots = []
        rank = 0
        for col in range(c):
            bit = 1 << col
            piv = next((i for i in range(rank, r) if rows[i] & bit), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for i in range(r):
                if i != rank and rows[i] & bit:
                    rows[i] ^= rows[rank]
            pivots.append(col)
            rank += 1
        mask = (1 << c) - 1
        basis = [row >> c for row in rows if not row & mask]
        basis = _rref_gf2(basis, r)
        return [tuple((b >> j) & 1 for j in range(r)) for b in basis]

    def rank(self):
        return self.rows - len(self.nullspace())

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        f = self.field
        n = self.rows
        rows = self.to_rows()
        det = f.one
        for col in range(n):
            piv = next((i for i in range(col, n) if rows[i][col] != f.zero), None)
            if piv is None:
                return f.zero
            if piv != col:
                rows[col], rows[piv] = rows[piv], rows[col]
                det = f.neg(det)
            pval = rows[col][col]
            det = f.mul(det, pval)
            pinv = f.inv(pval)
            for i in range(col + 1, n):
                factor = rows[i][col]
                if factor != f.zero:
                    scale = f.mul(factor, pinv)
                    rows[i] = [f.sub(x, f.mul(scale, y)) for x, y in zip(rows[i], rows[col])]
        return det

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        f = self.field
        n = self.rows
        aug = [list(self.row(i)) + [f.one if t == i else f.zero for t in range(n)] for i in range(n)]
        pivots = _eliminate(f, aug, n)
        if len(pivots) < n:
            raise ValueError("matrix is singular")
        return FFMatrix.from_rows(f, [row[n:] for row in aug])

    def is_invertible(self):
        return self.rows == self.cols and self.rank() == self.rows


def _pack_bits(bits):
    out = 0
    for j, b in enumerate(bits):
        if b:
            out |= 1 << j
    return out


def _pack_gf2(m):
    c = m.cols
    ent = m.entries
    return [_pack_bits(ent[i * c : (i + 1) * c]) for i in range(m.rows)]


def _rref_gf2(rows, width):
    rows = [r for r in rows if r]
    out = []
    for col in range(width):
        bit = 1 << col
        idx = next((i for i, r in enumerate(rows) if r & bit), None)
        if idx is None:
            continue
        piv = rows.pop(idx)
        rows = [r ^ piv if r & bit else r for r in rows]
        rows = [r for r in rows if r]
        out = [r ^ piv if r & bit else r for r in out]
        out.append(piv)
    return out


def _eliminate(field, rows, width):
    """In-place RREF using pivots among the first `width` columns.

    Rows are lists possibly longer than `width` (augmented columns ride
    along).  Returns the pivot column list.
    """
    pivots = []
    rank = 0
    nrows = len(rows)
    for col in range(width):
        piv = next((i for i in range(rank, nrows) if rows[i][col] != field.zero), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pinv = field.inv(rows[rank][col])
        if rows[rank][col] != field.one:
            rows[rank] = [field.mul(pinv, x) for x in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][col] != field.zero:
                factor = rows[i][col]
                rows[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(rows[i], rows[rank])]
        pivots.append(col)
        rank += 1
    return pivots


# ---------------------------------------------------------------------------
# blow-up


def blow_up(m: FFMatrix) -> FFMatrix:
    """Rewrite a matrix over GF(p^k) as a (rows*k) x (cols*k) matrix over GF(p).

    Each scalar a is replaced by the k x k matrix of multiplication-by-a in
    the power basis {1, z, ..., z^(k-1)} of the modulus root: block row s
    holds the coefficients of a*z^s.  The map is a ring homomorphism, so
    blow_up(A*B) = blow_up(A)*blow_up(B).  Over a prime field (k = 1) this is
    the identity transformation.
    """
    f = m.field
    if isinstance(f, PrimeField):
        return m
    k = f.k
    target = PrimeField(f.p)
    zpows = [f.pow(f.from_coeffs((0, 1)) if k > 1 else f.one, s) for s in range(k)]
    R, C = m.rows * k, m.cols * k
    out = [0] * (R * C)
    for i in range(m.rows):
        for j in range(m.cols):
            a = m[i, j]
            if a == 0:
                continue
            for s in range(k):
                digits = f.coeffs(f.mul(a, zpows[s]))
                base = (i * k + s) * C + j * k
                for t in range(k):
                    out[base + t] = digits[t]
    return FFMatrix(target, R, C, out)
