"""Small finite fields and dense linear algebra over them.

Field elements are plain integers.  For a field built as an extension of a
base field of order ``Q`` by a monic modulus of degree ``n``, the element
``sum(c_i * X**i)`` has index ``sum(c_i * Q**i)``, so index 0 is zero and
index 1 is one.  Expanding an index in base ``p`` lists its coordinates over
the prime field, which makes addition digit-wise mod ``p`` at every level of
a tower.

Vectors of ``F_q^d`` are packed into integer codes with coordinate 1 as the
most significant base-``q`` digit.  Matrices act on row vectors from the
right, ``v -> v @ M``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

MAX_FIELD_ORDER = 1 << 16
TABLE_LIMIT = 256


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
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


def factorize(n: int) -> dict[int, int]:
    """Prime factorisation by trial division (orders here have small factors)."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out: dict[int, int] = {}
    for f in (2, 3):
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
    f = 5
    step = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += step
        step = 6 - step
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(n: int) -> tuple[int, int]:
    """Return ``(p, k)`` with ``n == p**k``; raise if ``n`` is not a prime power."""
    fac = factorize(n) if n > 1 else {}
    if len(fac) != 1:
        raise FieldError(f"{n} is not a prime power")
    ((p, k),) = fac.items()
    return p, k


def _scalar(x):
    return int(x) if isinstance(x, np.generic) else x


class Field:
    """The field ``GF(Q**degree)`` over a base field of order ``Q``.

    With ``base=None`` the base is the prime field ``GF(p)``.  The modulus
    defaults to the monic irreducible polynomial of the given degree whose
    non-leading coefficients have the least encoding ``sum(c_i * Q**i)``.
    """

    def __init__(self, p: int, degree: int = 1, base: Field | None = None,
                 modulus=None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if degree < 1:
            raise FieldError("degree must be positive")
        if base is not None and base.p != p:
            raise FieldError("base field has a different characteristic")
        self.p = p
        self.base = base
        self.base_order = base.order if base is not None else p
        self.degree = degree
        self.k = (base.k if base is not None else 1) * degree
        if self.base_order ** degree > MAX_FIELD_ORDER:
            raise FieldError(f"field order {self.base_order}^{degree} exceeds {MAX_FIELD_ORDER}")
        self.order = self.base_order ** degree
        if modulus is None:
            self.modulus = self._least_irreducible()
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != degree + 1 or modulus[-1] != 1:
                raise FieldError("modulus must be monic of the field degree")
            if not self._irreducible(modulus):
                raise FieldError(f"modulus {modulus} is reducible")
            self.modulus = modulus
        self._build_tables()

    # -- construction -------------------------------------------------------

    def _badd(self, a, b):
        if self.base is None:
            return (a + b) % self.p
        return self.base.add(a, b)

    def _bmul(self, a, b):
        if self.base is None:
            return (a * b) % self.p
        return self.base.mul(a, b)

    def _bneg(self, a):
        if self.base is None:
            return (-a) % self.p
        return self.base.neg(a)

    def _poly_rem(self, a: list, m: tuple) -> list:
        """Remainder of ``a`` modulo the monic polynomial ``m`` (low degree first)."""
        a = list(a)
        n = len(m) - 1
        for t in range(len(a) - 1, n - 1, -1):
            c = a[t]
            if c:
                for i in range(n + 1):
                    a[t - n + i] = self._badd(a[t - n + i], self._bneg(self._bmul(c, m[i])))
        return a[:n]

    def _irreducible(self, m: tuple) -> bool:
        n = len(m) - 1
        if n == 1:
            return True
        Q = self.base_order
        for deg in range(1, n // 2 + 1):
            for low in range(Q ** deg):
                div = [(low // Q ** i) % Q for i in range(deg)] + [1]
                if not any(self._poly_rem(list(m), tuple(div))):
                    return False
        return True

    def _least_irreducible(self) -> tuple:
        Q, n = self.base_order, self.degree
        for low in range(Q ** n):
            m = tuple((low // Q ** i) % Q for i in range(n)) + (1,)
            if self._irreducible(m):
                return m
        raise FieldError("no irreducible polynomial found")  # pragma: no cover

    def _digits(self, a: int) -> list:
        Q = self.base_order
        return [(a // Q ** i) % Q for i in range(self.degree)]

    def _undigits(self, ds) -> int:
        Q = self.base_order
        return sum(int(c) * Q ** i for i, c in enumerate(ds))

    def _slow_mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.degree - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = self._badd(prod[i + j], self._bmul(x, y))
        return self._undigits(self._poly_rem(prod, self.modulus))

    def _slow_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._slow_mul(r, a)
            a = self._slow_mul(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        q = self.order
        n = q - 1
        primes = list(factorize(n)) if n > 1 else []
        gen = 1
        for cand in range(1, q):
            if all(self._slow_pow(cand, n // f) != 1 for f in primes):
                gen = cand
                break
        self.primitive_element = gen
        exp = np.zeros(2 * n, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        exp[n:] = exp[:n]
        self._exp, self._log = exp, log
        self._mul_table = None
        self._add_table = None
        idx = np.arange(q, dtype=np.int64)
        if q <= TABLE_LIMIT and self.k > 1:
            a, b = np.meshgrid(idx, idx, indexing="ij")
            self._mul_table = self._mul_via_log(a, b)
            if self.p != 2:
                self._add_table = self._digitwise(a, b, 1)
        self._neg = self._digitwise(np.zeros_like(idx), idx, -1)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(n - log[1:]) % n] if n else 1
        self._inv = inv

    # -- vectorised arithmetic ----------------------------------------------

    def _digitwise(self, a, b, sign):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.k):
            out += ((a // scale % p + sign * (b // scale % p)) % p) * scale
            scale *= p
        return out

    def _mul_via_log(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        r = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, r)

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return _scalar(self._add_table[a, b])
        return _scalar(self._digitwise(a, b, 1)[()])

    def neg(self, a):
        if self.p == 2:
            return a
        return _scalar(self._neg[a])

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        if self._mul_table is not None:
            return _scalar(self._mul_table[a, b])
        return _scalar(self._mul_via_log(a, b)[()])

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("inverse of zero")
        return _scalar(self._inv[a])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        a_arr = np.asarray(a, dtype=np.int64)
        n = self.order - 1
        if e == 0:
            r = np.ones_like(a_arr)
        else:
            r = self._exp[(self._log[a_arr] * (e % n if n else 0)) % n] if n else np.ones_like(a_arr)
            r = np.where(a_arr == 0, 0, r)
        return _scalar(r[()]) if r.ndim == 0 else r

    def frobenius(self, a, times: int = 1):
        """``x -> x**(p**times)``."""
        return self.pow(a, self.p ** (times % self.k))

    def sum(self, arr, axis: int = -1):
        """Field sum along an axis of an index array."""
        arr = np.asarray(arr, dtype=np.int64)
        if self.k == 1:
            return arr.sum(axis=axis) % self.p
        if self.p == 2:
            return np.bitwise_xor.reduce(arr, axis=axis)
        arr = np.moveaxis(arr, axis, 0)
        out = np.zeros(arr.shape[1:], dtype=np.int64)
        for row in arr:
            out = np.asarray(self.add(out, row))
        return out

    def matmul(self, A, B):
        """Matrix product over the field with numpy broadcasting."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.k == 1:
            return (A @ B) % self.p
        acc = None
        for j in range(A.shape[-1]):
            term = self._mul_any(A[..., :, j, None], B[..., None, j, :])
            acc = term if acc is None else self._add_any(acc, term)
        return acc

    def _mul_any(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._mul_via_log(a, b)

    def _add_any(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._digitwise(a, b, 1)

    # -- field structure ----------------------------------------------------

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.order - 1
        return n // math.gcd(n, int(self._log[a])) if n else 1

    def in_subfield(self, a, sub_order: int):
        """Membership in the subfield of order ``sub_order`` via ``x**sub_order == x``."""
        return np.asarray(self.pow(a, sub_order)) == np.asarray(a)

    def extension(self, degree: int) -> Field:
        """The degree-``degree`` extension with this field as base."""
        return Field(self.p, degree, base=self)

    def element_str(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        if self.order == 4:
            return ("0", "1", "w", "w2")[a]
        return str(a)

    def describe(self) -> dict:
        d = {"p": self.p, "k": self.k, "q": self.order, "modulus": list(self.modulus)}
        if self.base is not None:
            d["base"] = self.base.describe()
        return d

    def __repr__(self):
        if self.base is None:
            return f"GF({self.order})"
        return f"GF({self.base.order}^{self.degree})"

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Field) and self.p == other.p and self.k == other.k \
            and self.modulus == other.modulus and self.base == other.base

    def __hash__(self):
        return hash((self.p, self.k, self.modulus, self.base))


_FIELD_CACHE: dict[tuple[int, int], Field] = {}


def field_build(p: int, k: int = 1) -> Field:
    """``GF(p**k)`` over its prime field with the deterministic modulus."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if k < 1 or p ** k > MAX_FIELD_ORDER:
        raise FieldError(f"field order {p}^{k} out of range (max {MAX_FIELD_ORDER})")
    key = (p, k)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, k)
    return _FIELD_CACHE[key]


def gf(q: int) -> Field:
    p, k = prime_power(q)
    return field_build(p, k)


def primitive_root_of_unity(F: Field, r: int) -> int:
    """Element of multiplicative order exactly ``r``: a power of the primitive element."""
    if r < 1 or (F.order - 1) % r:
        raise FieldError(f"{r} does not divide q-1 = {F.order - 1}")
    return F.pow(F.primitive_element, (F.order - 1) // r)


def find_sum_of_squares(F: Field) -> tuple[int, int]:
    """Least ``(alpha, beta)`` in index order with ``alpha**2 + beta**2 == -1``."""
    target = F.neg(1)
    sq = [F.mul(a, a) for a in range(F.order)]
    for a in range(F.order):
        for b in range(F.order):
            if F.add(sq[a], sq[b]) == target:
                return a, b
    raise FieldError("no solution")  # pragma: no cover


# -- packed vectors ---------------------------------------------------------

def pack(q: int, digits) -> int:
    code = 0
    for x in digits:
        code = code * q + int(x)
    return code


def unpack(q: int, code: int, d: int) -> tuple:
    out = [0] * d
    for i in range(d - 1, -1, -1):
        code, out[i] = divmod(code, q)
    return tuple(out)


def unpack_array(q: int, codes, d: int) -> np.ndarray:
    codes = np.asarray(codes, dtype=np.int64)
    pw = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return (codes[..., None] // pw) % q


def pack_array(q: int, digits) -> np.ndarray:
    digits = np.asarray(digits, dtype=np.int64)
    d = digits.shape[-1]
    pw = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    return (digits * pw).sum(axis=-1)


@dataclass(frozen=True)
class PackedVector:
    field: Field
    dim: int
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.field.order ** self.dim:
            raise ValueError("code out of range")

    @classmethod
    def from_digits(cls, F: Field, digits) -> PackedVector:
        return cls(F, len(digits), pack(F.order, digits))

    @property
    def digits(self) -> tuple:
        return unpack(self.field.order, self.code, self.dim)

    def __str__(self):
        return "(" + ",".join(self.field.element_str(x) for x in self.digits) + ")"


# -- matrices ---------------------------------------------------------------

class Matrix:
    """Dense immutable matrix of field indices."""

    __slots__ = ("field", "entries", "_key")

    def __init__(self, field: Field, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise ValueError("entry is not a field index")
        arr.setflags(write=False)
        self.field = field
        self.entries = arr
        self._key = None

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def key(self):
        if self._key is None:
            self._key = (self.entries.shape, self.entries.tobytes())
        return self._key

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.field == other.field and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise FieldError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return Matrix(self.field, self.field.matmul(self.entries, other.entries))

    def __sub__(self, other: Matrix) -> Matrix:
        F = self.field
        if F.p == 2:
            return Matrix(F, self.entries ^ other.entries)
        return Matrix(F, F._digitwise(self.entries, other.entries, -1))

    def is_identity(self) -> bool:
        return self.rows == self.cols and np.array_equal(self.entries, np.eye(self.rows, dtype=np.int64))

    def inverse(self) -> Matrix:
        n = self.rows
        if n != self.cols:
            raise ValueError("only square matrices are invertible")
        aug = np.concatenate([self.entries, np.eye(n, dtype=np.int64)], axis=1)
        R, piv = rref(self.field, aug)
        if piv[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(self.field, R[:, n:])

    def apply(self, code: int) -> int:
        return mat_vec_apply(self, code)

    def apply_array(self, codes) -> np.ndarray:
        q = self.field.order
        v = unpack_array(q, codes, self.rows)
        return pack_array(q, self.field.matmul(v, self.entries))

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.entries.tolist()})"


def identity_matrix(F: Field, n: int) -> Matrix:
    return Matrix(F, np.eye(n, dtype=np.int64))


def diagonal_matrix(F: Field, diag) -> Matrix:
    return Matrix(F, np.diag(np.asarray(diag, dtype=np.int64)))


def permutation_matrix(F: Field, images) -> Matrix:
    """Matrix sending ``e_i`` to ``e_{images[i]}`` (0-based) under ``v -> vM``."""
    n = len(images)
    M = np.zeros((n, n), dtype=np.int64)
    M[np.arange(n), list(images)] = 1
    return Matrix(F, M)


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise FieldError("field mismatch")
    F = A.field
    big = F._mul_any(A.entries[:, None, :, None], B.entries[None, :, None, :]) if F.k > 1 else \
        (A.entries[:, None, :, None] * B.entries[None, :, None, :]) % F.p
    return Matrix(F, big.reshape(A.rows * B.rows, A.cols * B.cols))


def kron_vectors(F: Field, u, v) -> np.ndarray:
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if F.k == 1:
        return (u[:, None] * v[None, :] % F.p).reshape(-1)
    return F._mul_any(u[:, None], v[None, :]).reshape(-1)


def mat_vec_apply(M: Matrix, v) -> int:
    """Packed code of ``v @ M``; ``v`` is a code or a :class:`PackedVector`."""
    F = M.field
    if isinstance(v, PackedVector):
        if v.field != F or v.dim != M.rows:
            raise ValueError("vector does not match matrix")
        v = v.code
    if M.rows != M.cols:
        raise ValueError("matrix must be square")
    digits = np.array(unpack(F.order, v, M.rows), dtype=np.int64)
    return pack(F.order, F.matmul(digits[None, :], M.entries)[0])


# -- elimination ------------------------------------------------------------

def _rref_prime_lists(p: int, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    # plain lists beat numpy on the small matrices met in subspace work
    R = [[int(x) % p for x in row] for row in A.tolist()]
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        i = next((i for i in range(r, rows) if R[i][c]), None)
        if i is None:
            continue
        R[r], R[i] = R[i], R[r]
        inv = pow(R[r][c], p - 2, p)
        piv = [x * inv % p for x in R[r]]
        R[r] = piv
        for t in range(rows):
            f = R[t][c]
            if t != r and f:
                R[t] = [(x - f * y) % p for x, y in zip(R[t], piv)]
        pivots.append(c)
        r += 1
    return np.array(R, dtype=np.int64).reshape(rows, cols), pivots


def rref(F: Field, A) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = np.array(A, dtype=np.int64)
    rows, cols = R.shape
    if F.k == 1 and rows * cols <= 1024:
        return _rref_prime_lists(F.p, R)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = np.asarray(F.mul(int(F._inv[R[r, c]]), R[r]))
        factors = R[:, c].copy()
        factors[r] = 0
        if factors.any():
            R = np.asarray(F._add_any(R, F._neg[F._mul_any(factors[:, None], R[r][None, :])])) if F.k > 1 \
                else (R - factors[:, None] * R[r][None, :]) % F.p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(F: Field, A) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: Field, A) -> np.ndarray:
    """Basis (rows) of ``{x : A @ x = 0}``."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(cols, dtype=np.int64)
    R, piv = rref(F, A)
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for i, pc in enumerate(piv):
            basis[t, pc] = F._neg[R[i, f]]
    return basis


def left_nullspace(F: Field, A) -> np.ndarray:
    """Basis (rows) of ``{u : u @ A = 0}``."""
    return nullspace(F, np.asarray(A, dtype=np.int64).T)


def row_space(F: Field, A) -> np.ndarray:
    """Canonical basis of the row space: the non-zero rows of the RREF."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0:
        return A.reshape(0, A.shape[1] if A.ndim == 2 else 0)
    R, piv = rref(F, A)
    return R[: len(piv)]
