import math

import pytest

from _oracle import close_generators
from irrbase.census import H_ORDER
from irrbase.constructions import (
    ExtraspecialSpec,
    PreconditionError,
    build_counterexample,
    build_extraspecial,
    build_gl1,
    build_semilinear,
    build_tensor_product,
    build_wreath_imprimitive,
    check_extraspecial_relations,
    cyclic_group,
    direct_product,
    find_gluck_partition,
    is_absolutely_irreducible,
    is_irreducible,
    is_linearly_primitive,
    perm_wreath,
    symmetric_group,
    witness_extraspecial_base,
    witness_semilinear_chain,
)
from irrbase.groups import Perm, perm_group
from irrbase.search import verify_irredundant


def elements_of(G):
    return close_generators(G.perm_tables(), G.degree)


def compose(g, h):
    return tuple(h[g[i]] for i in range(len(g)))


def centre(elements):
    return [z for z in elements if all(compose(z, g) == compose(g, z) for g in elements)]


SMALL_E = [(2, 1, 5, "+"), (2, 1, 5, "-"), (2, 1, 5, "s"), (3, 1, 7, "+"), (2, 2, 5, "+"),
           (2, 1, 13, "s")]


@pytest.mark.parametrize("params", SMALL_E)
def test_extraspecial_structure_by_closure(params):
    spec = ExtraspecialSpec(*params)
    E = build_extraspecial(spec)
    elems = elements_of(E)
    assert len(elems) == spec.order == E.order
    Z = centre(elems)
    # the centre is cyclic of order r, or the order-4 scalars for the symplectic type
    assert len(Z) == (4 if spec.variant == "symplectic" else spec.r)
    assert is_absolutely_irreducible(E)


@pytest.mark.parametrize("params", SMALL_E + [(3, 2, 7, "+"), (5, 1, 11, "+"), (2, 2, 13, "s")])
def test_relation_report(params):
    rep = check_extraspecial_relations(ExtraspecialSpec(*params))
    assert rep["passed"]
    assert all(r["holds"] for r in rep["relations"])


@pytest.mark.parametrize("params,message", [
    ((3, 1, 5, "+"), "r | q-1"),
    ((3, 1, 7, "-"), "needs r = 2"),
    ((2, 1, 7, "s"), "4 | q-1"),
    ((4, 1, 5, "+"), "not prime"),
    ((2, 0, 5, "+"), "at least 1"),
    ((2, 1, 6, "+"), "prime"),
    ((2, 1, 5, "?"), "unknown variant"),
])
def test_extraspecial_preconditions(params, message):
    with pytest.raises(PreconditionError, match=message):
        ExtraspecialSpec(*params)


@pytest.mark.parametrize("params", [(2, 1, 5, "+"), (2, 2, 5, "+"), (3, 1, 7, "+"), (2, 1, 5, "-")])
def test_extraspecial_witness_chain(params):
    spec = ExtraspecialSpec(*params)
    E = build_extraspecial(spec)
    w = witness_extraspecial_base(spec)
    elems = elements_of(E)
    orders = [len(elems)]
    K = elems
    for p in w.points:
        K = [g for g in K if g[p] == p]
        orders.append(len(K))
    assert orders == w.expected_orders
    assert verify_irredundant(E, w.points).chain == orders
    assert orders[-1] == 1


def test_tensor_product_order_and_irreducibility():
    T = build_tensor_product([ExtraspecialSpec(2, 1, 7), ExtraspecialSpec(3, 1, 7)])
    assert T.degree == 7 ** 6
    # the tensor map only identifies scalar pairs (z, 1/z); the centres have coprime orders
    assert T.order == 8 * 27
    assert is_irreducible(T)


@pytest.mark.parametrize("q,d", [(2, 4), (3, 2), (2, 6), (4, 3), (3, 3)])
def test_semilinear_order_and_primitivity(q, d):
    G = build_semilinear(q, d)
    assert G.order == (q ** d - 1) * d
    assert len(elements_of(G)) == G.order
    assert is_irreducible(G)
    assert is_linearly_primitive(G)
    w = witness_semilinear_chain(q, d)
    assert verify_irredundant(G, w.points).chain == w.expected_orders


def test_semilinear_subgroup_precondition():
    assert build_semilinear(3, 3, mult_order=13, galois_order=3).order == 39
    with pytest.raises(PreconditionError):
        build_semilinear(3, 3, mult_order=5)


@pytest.mark.parametrize("q,d", [(3, 2), (3, 3), (4, 2), (5, 2)])
def test_gl1_wreath(q, d):
    H = build_wreath_imprimitive(build_gl1(q), cyclic_group(d))
    assert H.order == (q - 1) ** d * d
    assert len(elements_of(H)) == H.order
    assert is_irreducible(H)
    assert not is_linearly_primitive(H)


def test_gl2_wreath_is_reducible():
    H = build_wreath_imprimitive(build_gl1(2), cyclic_group(2))
    assert not is_irreducible(H)


def test_counterexample_shape():
    H = build_counterexample()
    assert H.degree == 4 ** 12
    assert H.order == H_ORDER == 6 ** 12 * math.factorial(4) ** 3 * 6
    assert len(H.generators) == 6
    P = perm_wreath(symmetric_group(4), symmetric_group(3))
    assert P.order == 24 ** 3 * 6


def test_direct_products():
    A, B = build_gl1(5), build_gl1(5)
    D = direct_product(A, B)
    assert D.order == 16 and D.degree == 25
    assert len(elements_of(D)) == 16
    P = direct_product(symmetric_group(3), cyclic_group(4))
    assert P.order == 24 and P.degree == 7
    with pytest.raises(PreconditionError):
        direct_product(build_gl1(5), symmetric_group(3))


@pytest.mark.parametrize("T", [
    cyclic_group(3),
    cyclic_group(5),
    cyclic_group(9),
    perm_group([Perm([1, 2, 3, 4, 5, 6, 0]), Perm([0, 2, 4, 6, 1, 3, 5])], 7),  # order 21
])
def test_gluck_partition_has_trivial_setwise_stabilizer(T):
    q1, q2 = find_gluck_partition(T)
    assert sorted(q1 + q2) == list(range(1, T.degree + 1))
    part = {i - 1 for i in q1}
    movers = [g for g in elements_of(T) if {g[i] for i in part} == part]
    assert movers == [tuple(range(T.degree))]
