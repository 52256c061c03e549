import itertools
import math
from collections import Counter

import numpy as np
import pytest

from irrbase import kernels
from irrbase.census import (
    CHUNK_SIZE,
    DOMAIN,
    H_ORDER,
    ODD_INSTANCES,
    W_CODE,
    W_STABILIZER_ORDER,
    CensusError,
    MemoryBudgetError,
    case_table_check,
    chunk_profile,
    chunk_zero_counts,
    code_of,
    digits_of,
    embed_K_and_check,
    gamma_transitivity,
    largest_orbit_analysis,
    run_census,
    sample_largest_members,
    sign_flip_mechanism,
    stabilizer_order_of,
)


def orbit_size_closed_form(zeros):
    """Gamma is transitive on nonzero scalars coordinatewise, so only zero patterns matter."""
    arrangements = len(set(itertools.permutations(zeros)))
    patterns = math.prod(math.comb(CHUNK_SIZE, z) for z in zeros)
    return arrangements * patterns * 3 ** (12 - sum(zeros))


def top_group_permutations():
    for sigma in itertools.permutations(range(3)):
        for taus in itertools.product(itertools.permutations(range(4)), repeat=3):
            yield [4 * sigma[c] + taus[c][j] for c in range(3) for j in range(4)]


def stabilizer_order_by_sum(code):
    """|H_v| = sum over top permutations pi of prod_i #{g in Gamma : g(v_i) = v_pi(i)}."""
    v = digits_of(code)

    def count(a, b):
        if a == 0 or b == 0:
            return 6 if a == b else 0
        return 2

    return sum(math.prod(count(v[i], v[pi[i]]) for i in range(12)) for pi in top_group_permutations())


def test_census_partitions_the_space(census):
    assert len(census.records) == 35
    assert sum(r.size for r in census.records) == DOMAIN
    assert all(r.size * r.stab_order == H_ORDER for r in census.records)
    reps = [r.rep for r in census.records]
    assert reps == sorted(reps)
    assert all(census.labels[r.rep] == i for i, r in enumerate(census.records))


def test_every_orbit_matches_closed_form(census):
    seen = Counter()
    for r in census.records:
        zeros = r.profile.zeros
        assert r.size == orbit_size_closed_form(zeros), r.profile.signature_str
        seen[r.profile.signature] += 1
    # one orbit per multiset of per-chunk zero counts
    assert len(seen) == math.comb(5 + 2, 3) and set(seen.values()) == {1}


def test_w_stabilizer_by_independent_sum(census):
    assert stabilizer_order_by_sum(W_CODE) == W_STABILIZER_ORDER == 63700992
    assert census.record_of(W_CODE).stab_order == W_STABILIZER_ORDER


@pytest.mark.parametrize("digits", [
    (1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 1, 1, 1, 0, 2, 2, 3, 1, 1, 1, 1),
])
def test_other_stabilizers_by_independent_sum(census, digits):
    code = code_of(digits)
    assert census.record_of(code).stab_order == stabilizer_order_by_sum(code)


def test_single_orbit_search_agrees(census):
    assert stabilizer_order_of(W_CODE) == W_STABILIZER_ORDER
    assert stabilizer_order_of(W_CODE, census) == W_STABILIZER_ORDER


def test_case_table(census):
    assert all(row["match"] for row in case_table_check(census))


def test_largest_orbit_analysis(census):
    a = largest_orbit_analysis(census)
    assert a["max_orbit_size"] == 2834352
    assert a["min_stabilizer_order"] == W_STABILIZER_ORDER
    assert a["w_orbit_size"] == a["max_orbit_size"]
    assert a["branch"] == "greedy may choose w"
    assert a["some_largest_rep_has_two_zero_chunk"]
    assert a["no_two_zero_chunk_bound_holds"]
    assert sorted(r["signature"] for r in a["largest_orbits"]) == ["0-1-1", "0-1-2"]


def test_chunk_profiles_vectorised():
    rng = np.random.default_rng(0)
    codes = rng.integers(0, DOMAIN, size=500)
    zc = chunk_zero_counts(codes)
    for c, row in zip(codes, zc):
        assert tuple(int(x) for x in row) == chunk_profile(int(c)).zeros
    assert chunk_profile(W_CODE).signature_str == "0-1-2"


def test_embedded_wreath_at_w():
    rep = embed_K_and_check(W_CODE)
    assert rep["passed"]
    assert rep["K_order"] == 72 and rep["pairs_checked"] == 256
    assert rep["b_K"] == 3
    assert sum(rep["case_witnesses"]["counts"].values()) == 256


def test_embed_needs_two_zero_chunk():
    with pytest.raises(CensusError):
        embed_K_and_check(code_of((1,) * 12))


def test_sampled_members_are_deterministic(census):
    a = sample_largest_members(census, 10, seed=3)
    assert a == sample_largest_members(census, 10, seed=3)
    assert all(chunk_profile(u).has_two_zero_chunk() for u in a)


def test_gamma_is_two_transitive():
    g = gamma_transitivity()
    assert g == {"order": 6, "transitive": True, "two_transitive": True}


def test_memory_budget_refusal():
    with pytest.raises(MemoryBudgetError):
        run_census(memory_mb=16)


def test_csv_format(census):
    lines = census.to_csv().splitlines()
    assert lines[0] == "rep_code,orbit_size,stab_order,chunk_signature"
    assert len(lines) == 36
    assert lines[1] == "0,1,180551034077184,4-4-4"


@pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled kernel not built")
def test_numpy_backend_census_matches(census):
    other = run_census(backend="numpy")
    assert other.to_csv() == census.to_csv()
    assert np.array_equal(other.labels, census.labels)


def test_sign_flip_mechanism_small_instance():
    inst = ODD_INSTANCES[0]
    rep = sign_flip_mechanism(inst, inst.build())
    assert rep["passed"]
    assert rep["orbits_odd"] and rep["L_x_equals_L_minus_x"]
