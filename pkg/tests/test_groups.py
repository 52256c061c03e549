import json
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracle import close_generators
from irrbase import kernels
from irrbase.constructions import (
    build_gl1,
    build_semilinear,
    build_wreath_imprimitive,
    cyclic_group,
    symmetric_group,
)
from irrbase.groups import (
    GroupError,
    Perm,
    dumps_group,
    kernel_tables,
    omega,
    orbit,
    orbit_partition,
    perm_group,
)
from irrbase.schreier import chain_from_permutations, pointwise_stabilizer, schreier_sims


def perm_lists(max_degree=7, max_gens=3):
    return st.integers(2, max_degree).flatmap(
        lambda n: st.lists(st.permutations(list(range(n))), min_size=1, max_size=max_gens))


def test_perm_product_applies_left_factor_first():
    p, q = Perm([1, 2, 0]), Perm([1, 0, 2])
    assert (p * q).apply(0) == q.apply(p.apply(0))
    assert (p * p.inverse()).is_identity()
    # cycle notation is 1-based
    assert Perm.from_cycles(4, (1, 2, 3)).cycles() == [(1, 2, 3)]
    assert Perm.from_cycles(4, (1, 2, 3)).apply(2) == 0


@settings(max_examples=40, deadline=None)
@given(perm_lists())
def test_schreier_sims_order_matches_closure(gens):
    n = len(gens[0])
    G = perm_group([Perm(g) for g in gens], n)
    elements = close_generators(G.perm_tables(), n)
    chain = schreier_sims(G)
    assert chain.order() == len(elements) == G.order
    for g in elements[:50]:
        assert chain.contains(np.array(g))


@settings(max_examples=30, deadline=None)
@given(perm_lists(), st.data())
def test_pointwise_stabilizer_order(gens, data):
    n = len(gens[0])
    G = perm_group([Perm(g) for g in gens], n)
    pts = data.draw(st.lists(st.integers(0, n - 1), max_size=3, unique=True))
    expected = sum(1 for g in close_generators(G.perm_tables(), n) if all(g[p] == p for p in pts))
    assert pointwise_stabilizer(G, pts).order == expected


def test_chain_respects_base_prefix_and_rejects_non_members():
    S = symmetric_group(5)
    chain = chain_from_permutations([g.array for g in S.generators], 5, base_prefix=[3, 1])
    assert chain.base[:2] == [3, 1]
    assert chain.order() == 120
    A = perm_group([Perm([1, 2, 0, 3]), Perm([0, 2, 3, 1])], 4)  # alternating group of degree 4
    assert A.order == 12
    assert not A.chain().contains(np.array([1, 0, 2, 3]))
    rng = random.Random(0)
    for _ in range(20):
        assert A.chain().contains(A.chain().random_element(rng))


@settings(max_examples=30, deadline=None)
@given(perm_lists(max_degree=9))
def test_orbit_partition_matches_closure(gens):
    n = len(gens[0])
    G = perm_group([Perm(g) for g in gens], n)
    elements = close_generators(G.perm_tables(), n)
    expected = {}
    for p in range(n):
        orb = {g[p] for g in elements}
        expected.setdefault(min(orb), len(orb))
    assert orbit_partition(G) == sorted(expected.items())
    assert orbit(G, 0).size == len({g[0] for g in elements})


BACKEND_GROUPS = [
    lambda: build_wreath_imprimitive(build_gl1(3), cyclic_group(4)),
    lambda: build_wreath_imprimitive(build_semilinear(2, 2), symmetric_group(3)),
    lambda: build_semilinear(2, 6),
    lambda: symmetric_group(6),
]


@pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled kernel not built")
@pytest.mark.parametrize("make", BACKEND_GROUPS)
def test_backends_agree(make):
    G = make()
    tables, tops, B, k = kernel_tables(G)
    a = kernels.orbit_labels(tables, tops, B, k, backend_name="compiled")
    b = kernels.orbit_labels(tables, tops, B, k, backend_name="numpy")
    assert np.array_equal(np.asarray(a[0]), np.asarray(b[0]))
    assert list(a[1]) == list(b[1]) and list(a[2]) == list(b[2])
    for seed in (0, 1, G.degree - 1):
        assert kernels.orbit_size(tables, tops, B, k, seed, backend_name="compiled") == \
            kernels.orbit_size(tables, tops, B, k, seed, backend_name="numpy")


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.backend("fortran")


def test_group_json_and_errors():
    G = build_wreath_imprimitive(build_gl1(3), cyclic_group(2))
    doc = json.loads(dumps_group(G))
    assert doc["order"] == "8" and doc["linear"] is True
    with pytest.raises(GroupError):
        orbit(G, G.degree)


def test_omega():
    assert [omega(n) for n in (1, 2, 8, 12, 360, 97)] == [0, 1, 3, 3, 6, 1]
    with pytest.raises(ValueError):
        omega(0)
