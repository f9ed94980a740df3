"""Finite fields GF(p^f) and small matrix algebra over them.

Field elements are encoded as integers ``0..q-1``: the base-p digits of the
integer are the coefficients of a polynomial in the generator ``x`` (digit 0 is
the constant term). The modulus is the lexicographically least monic
irreducible polynomial of degree f, i.e. the one whose lower coefficients give
the smallest integer code.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from .numtheory import is_prime, prime_factors

MAX_FIELD_SIZE = 1 << 20


class FieldError(ValueError):
    pass


# polynomials over Z_p as coefficient lists, lowest degree first --------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    inv_lead = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, m, p)


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over Z_p (coefficients low to high)."""
    f = len(poly) - 1
    if f < 1:
        return False
    if f == 1:
        return True
    if poly[0] % p == 0:
        return False
    x = [0, 1]
    if _psub(_ppowmod(x, p**f, poly, p), x, p):
        return False
    for d in prime_factors(f):
        h = _psub(_ppowmod(x, p ** (f // d), poly, p), x, p)
        if len(_pgcd(poly, h, p)) > 1:
            return False
    return True


def least_irreducible(p: int, f: int) -> tuple[int, ...]:
    for code in range(p**f):
        low = [(code // p**i) % p for i in range(f)]
        poly = low + [1]
        if is_irreducible(poly, p):
            return tuple(poly)
    raise AssertionError(f"no irreducible polynomial of degree {f} over GF({p})")


class GF:
    """The field of order ``p**f`` with integer-coded elements."""

    def __init__(self, p: int, f: int = 1):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if f < 1:
            raise FieldError("extension degree must be positive")
        if p**f > MAX_FIELD_SIZE:
            raise FieldError(f"field size {p}^{f} exceeds cap {MAX_FIELD_SIZE}")
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = least_irreducible(p, f) if f > 1 else (0, 1)
        self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.f})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self) -> int:
        return hash((self.p, self.f))

    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.f)]

    def from_digits(self, d: Sequence[int]) -> int:
        return sum((c % self.p) * self.p**i for i, c in enumerate(d))

    def _build_tables(self):
        p, q = self.p, self.q
        if self.f > 1:
            self._dig = [self.digits(a) for a in range(q)]
        # find the first element of multiplicative order q-1
        mod = list(self.modulus)
        order_primes = prime_factors(q - 1)

        def polymul(a, b):
            if self.f == 1:
                return (a * b) % p
            r = _pmulmod(self.digits(a), self.digits(b), mod, p)
            return self.from_digits(r)

        gen = None
        for g in range(2 if q > 2 else 1, q):
            ok = True
            for r in order_primes:
                x, e, base = 1, (q - 1) // r, g
                while e:
                    if e & 1:
                        x = polymul(x, base)
                    base = polymul(base, base)
                    e >>= 1
                if x == 1:
                    ok = False
                    break
            if ok:
                gen = g
                break
        if gen is None:
            raise AssertionError("no primitive element found")
        self.primitive_element = gen
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = polymul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        if len(set(exp)) != q - 1:
            raise AssertionError("multiplicative group is not cyclic of order q-1")
        self._exp = exp
        self._log = log

    # arithmetic on integer codes -------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.f == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self._dig[a], self._dig[b]
        return self.from_digits([x + y for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.f == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_digits([-x for x in self._dig[a]])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in finite field")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        return (self.q - 1) // math.gcd(self._log[a], self.q - 1)

    def is_primitive(self, a: int) -> bool:
        return a != 0 and self.mult_order(a) == self.q - 1

    def elements(self) -> range:
        return range(self.q)

    def prime_subfield(self) -> list[int]:
        # codes 0..p-1 are the constants
        return list(range(self.p))

    def __call__(self, a: int) -> FieldElement:
        return FieldElement(self, a)

    def basis_matrix(self, a: int) -> list[list[int]]:
        """Matrix over GF(p) of multiplication by ``a`` in the polynomial basis (row convention)."""
        rows = []
        for i in range(self.f):
            rows.append(self.digits(self.mul(self.p**i, a)))
        return rows


@lru_cache(maxsize=None)
def gf(p: int, f: int = 1) -> GF:
    """Cached field constructor."""
    return GF(p, f)


def gf_make(p: int, f: int = 1) -> GF:
    return gf(p, f)


class FieldElement:
    __slots__ = ("field", "value")

    def __init__(self, field: GF, value: int):
        if not 0 <= value < field.q:
            raise FieldError(f"code {value} outside {field}")
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("elements from different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def frobenius(self) -> FieldElement:
        return FieldElement(self.field, self.field.frobenius(self.value))

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p and self.value < self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.q, self.value))

    def __repr__(self) -> str:
        return f"{self.field}({self.value})"


def frobenius(x: FieldElement, field: GF | None = None) -> FieldElement:
    field = field or x.field
    return FieldElement(field, field.frobenius(x.value))


# matrices: tuples of row tuples of integer codes --------------------------

Matrix = tuple


def mat(rows) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def identity_matrix(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def mat_mul(a: Matrix, b: Matrix, F: GF) -> Matrix:
    k, m = len(a), len(b[0])
    if len(a[0]) != len(b):
        raise FieldError("matrix shapes do not match")
    if F.f == 1:
        p = F.p
        cols = list(zip(*b))
        return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a)
    out = []
    for i in range(k):
        row = []
        for j in range(m):
            acc = 0
            for t in range(len(b)):
                acc = F.add(acc, F.mul(a[i][t], b[t][j]))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def vec_mat(v: Sequence[int], a: Matrix, F: GF) -> tuple:
    """Row vector times matrix."""
    if F.f == 1:
        p = F.p
        return tuple(sum(x * a[i][j] for i, x in enumerate(v)) % p for j in range(len(a[0])))
    out = []
    for j in range(len(a[0])):
        acc = 0
        for i, x in enumerate(v):
            acc = F.add(acc, F.mul(x, a[i][j]))
        out.append(acc)
    return tuple(out)


def _rref(rows: list[list[int]], F: GF) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                fac = rows[i][c]
                rows[i] = [F.sub(x, F.mul(fac, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def mat_rank(a: Matrix, F: GF) -> int:
    return len(_rref(list(a), F)[1]) if a else 0


def row_space(vectors: Sequence[Sequence[int]], F: GF) -> list[tuple]:
    """Reduced echelon basis of the span of ``vectors``."""
    if not vectors:
        return []
    rows, _ = _rref([list(v) for v in vectors], F)
    return [tuple(r) for r in rows]


def mat_det(a: Matrix, F: GF) -> int:
    k = len(a)
    m = [list(r) for r in a]
    det = 1
    for c in range(k):
        piv = next((i for i in range(c, k) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = F.neg(det)
        det = F.mul(det, m[c][c])
        inv = F.inv(m[c][c])
        for i in range(c + 1, k):
            if m[i][c]:
                fac = F.mul(m[i][c], inv)
                m[i] = [F.sub(x, F.mul(fac, y)) for x, y in zip(m[i], m[c])]
    return det


def mat_inv(a: Matrix, F: GF) -> Matrix:
    k = len(a)
    aug = [list(a[i]) + [1 if i == j else 0 for j in range(k)] for i in range(k)]
    rows, pivots = _rref(aug, F)
    if pivots[:k] != list(range(k)) or len(pivots) < k:
        raise FieldError("matrix is singular")
    return tuple(tuple(r[k:]) for r in rows)


def mat_sub_identity(a: Matrix, F: GF) -> Matrix:
    return tuple(tuple(F.sub(x, 1) if i == j else x for j, x in enumerate(r))
                 for i, r in enumerate(a))


def left_kernel(a: Matrix, F: GF) -> list[tuple]:
    """Basis of {v : v a = 0} (row vectors)."""
    k = len(a)
    # v a = 0  <=>  a^T v^T = 0
    at = [list(col) for col in zip(*a)]
    rows, pivots = _rref(at, F) if at else ([], [])
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * k
        v[fc] = 1
        for r, pc in zip(rows, pivots):
            v[pc] = F.neg(r[fc])
        basis.append(tuple(v))
    return basis


def mat_fixed_space(m: Matrix, F: GF) -> tuple[int, list[tuple]]:
    """Dimension and basis of the fixed row vectors {v : v m = v} = ker(m - I)."""
    basis = left_kernel(mat_sub_identity(m, F), F)
    return len(basis), basis


def mat_order(m: Matrix, F: GF, limit: int = 10**7) -> int:
    ident = identity_matrix(len(m))
    x = m
    k = 1
    while x != ident:
        x = mat_mul(x, m, F)
        k += 1
        if k > limit:
            raise FieldError("matrix order exceeds search limit")
    return k


def restrict_scalars(m: Matrix, F: GF) -> Matrix:
    """View a k x k matrix over GF(p^f) as a kf x kf matrix over GF(p).

    Vector (a_1..a_k) in F^k maps to the concatenated digit vectors; the
    block (i, j) is the prime-field matrix of multiplication by m[i][j].
    """
    k = len(m)
    f = F.f
    big = [[0] * (k * f) for _ in range(k * f)]
    for i in range(k):
        for j in range(k):
            blk = F.basis_matrix(m[i][j])
            for s in range(f):
                for t in range(f):
                    big[i * f + s][j * f + t] = blk[s][t]
    return mat(big)
