import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irrbase.algebra import (
    Field,
    FieldError,
    Matrix,
    factorize,
    find_sum_of_squares,
    gf,
    identity_matrix,
    is_prime,
    kron_vectors,
    kronecker,
    left_nullspace,
    nullspace,
    pack,
    pack_array,
    prime_power,
    primitive_root_of_unity,
    rank,
    rref,
    unpack,
    unpack_array,
)

SMALL_FIELDS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 64, 81, 125, 256]


def poly_mul(F, a, b):
    """Independent GF(p^k) product: little-endian digits reduced by the modulus."""
    p, k = F.p, F.k
    da = [(a // p ** i) % p for i in range(k)]
    db = [(b // p ** i) % p for i in range(k)]
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    mod = list(F.modulus)
    lead_inv = pow(mod[-1], p - 2, p)
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg] * lead_inv % p
        if c:
            for t, m in enumerate(mod):
                prod[deg - k + t] = (prod[deg - k + t] - c * m) % p
    return sum(prod[i] * p ** i for i in range(k))


def test_primes_and_factorization():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_power(243) == (3, 5)
    with pytest.raises(FieldError):
        prime_power(12)


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_multiplication_matches_polynomial_oracle(q):
    F = gf(q)
    rng = np.random.default_rng(q)
    for a, b in rng.integers(0, q, size=(200, 2)):
        assert F.mul(int(a), int(b)) == poly_mul(F, int(a), int(b))


@pytest.mark.parametrize("q", SMALL_FIELDS)
def test_multiplicative_group_is_cyclic(q):
    F = gf(q)
    g = F.primitive_element
    assert F.element_order(g) == q - 1
    assert len({F.pow(g, e) for e in range(q - 1)}) == q - 1
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_FIELDS), st.data())
def test_field_axioms(q, data):
    F = gf(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    # Frobenius is additive and multiplicative
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b))
    assert F.frobenius(a, F.k) == a


def test_vectorised_ops_agree_with_scalar_ops():
    F = gf(27)
    a = np.arange(27)
    b = (a * 5 + 3) % 27
    assert F.mul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    assert F.add(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]


def test_large_field_uses_consistent_arithmetic():
    F = gf(2 ** 10)
    rng = np.random.default_rng(1)
    for a, b in rng.integers(1, 2 ** 10, size=(100, 2)):
        assert F.mul(int(a), int(b)) == poly_mul(F, int(a), int(b))


def test_field_order_limits():
    with pytest.raises(FieldError):
        Field(4)
    with pytest.raises(FieldError):
        gf(2 ** 17)


def test_roots_of_unity_and_sums_of_squares():
    F = gf(13)
    z = primitive_root_of_unity(F, 3)
    assert F.element_order(z) == 3
    with pytest.raises(FieldError):
        primitive_root_of_unity(F, 5)
    for q in (5, 7, 9, 11, 13):
        F = gf(q)
        a, b = find_sum_of_squares(F)
        assert F.add(F.mul(a, a), F.mul(b, b)) == F.neg(1)


@given(st.sampled_from([2, 3, 4, 5, 9]), st.integers(1, 6), st.data())
def test_pack_roundtrip(q, d, data):
    digits = tuple(data.draw(st.lists(st.integers(0, q - 1), min_size=d, max_size=d)))
    code = pack(q, digits)
    assert 0 <= code < q ** d
    assert unpack(q, code, d) == digits
    assert pack_array(q, unpack_array(q, [code], d))[0] == code


def test_pack_puts_first_coordinate_most_significant():
    assert pack(3, [1, 0]) == 3
    assert pack(3, [0, 1]) == 1


def random_matrix(F, n, m, rng):
    return Matrix(F, rng.integers(0, F.order, size=(n, m)))


def random_invertible(F, n, rng):
    while True:
        M = random_matrix(F, n, n, rng)
        if rank(F, M.entries) == n:
            return M


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_row_vector_action_composes(q):
    F = gf(q)
    rng = np.random.default_rng(q)
    A, B = random_invertible(F, 3, rng), random_invertible(F, 3, rng)
    for v in range(q ** 3):
        assert (A @ B).apply(v) == B.apply(A.apply(v))
    assert (A @ A.inverse()).is_identity()
    codes = np.arange(q ** 3)
    assert A.apply_array(codes).tolist() == [A.apply(int(v)) for v in codes]


@pytest.mark.parametrize("q", [2, 3, 4, 7])
def test_nullspaces_and_rank(q):
    F = gf(q)
    rng = np.random.default_rng(7 * q)
    for _ in range(10):
        A = rng.integers(0, q, size=(3, 5))
        A[2] = 0 if q == 2 else A[2]
        N = nullspace(F, A)
        assert rank(F, A) + N.shape[0] == 5
        for row in N:
            assert not np.any(F.matmul(A, row[:, None]))
        L = left_nullspace(F, A)
        for row in L:
            assert not np.any(F.matmul(row[None, :], A))
        R, piv = rref(F, A)
        assert len(piv) == rank(F, A)
        for r, c in enumerate(piv):
            assert R[r, c] == 1


def test_kronecker_mixed_product_and_vectors():
    F = gf(5)
    rng = np.random.default_rng(3)
    A, C = random_matrix(F, 2, 2, rng), random_matrix(F, 2, 2, rng)
    B, D = random_matrix(F, 3, 3, rng), random_matrix(F, 3, 3, rng)
    assert kronecker(A, B) @ kronecker(C, D) == kronecker(A @ C, B @ D)
    u, v = [1, 2], [3, 0, 4]
    uv = pack(5, kron_vectors(F, u, v))
    lhs = kronecker(A, B).apply(uv)
    uA = unpack(5, A.apply(pack(5, u)), 2)
    vB = unpack(5, B.apply(pack(5, v)), 3)
    assert lhs == pack(5, kron_vectors(F, uA, vB))


def test_matrix_validation():
    F = gf(3)
    with pytest.raises(ValueError):
        Matrix(F, [[3]])
    with pytest.raises(ValueError):
        Matrix(F, [[1, 0], [2, 0]]).inverse()
    assert identity_matrix(F, 4).is_identity()
