"""Named verification checks and the manifest that drives ``irrbase verify``.

Every check returns a JSON-ready dict with ``passed`` and ``exact`` flags
and the claim it evidences.  Reports hold no timings or other run-dependent
data, so repeated runs are byte-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .constructions import (
    ExtraspecialSpec,
    build_extraspecial,
    build_gl1,
    build_semilinear,
    build_tensor_product,
    build_wreath_imprimitive,
    check_extraspecial_relations,
    cyclic_group,
    generator_matrices,
    is_absolutely_irreducible,
    is_irreducible,
    is_linearly_primitive,
    matrix_group,
    primitive_irredundant_bound,
    symmetric_group,
    witness_extraspecial_base,
    witness_semilinear_chain,
    witness_tensor_sequence,
)
from .algebra import Matrix
from .groups import GroupHandle, Mat, Wreath, omega
from .search import (
    brute_force_statistics,
    check_subgroup_inequalities,
    greedy_max,
    max_irredundant,
    min_base,
    verify_irredundant,
)

MANIFEST_VERSION = "irrbase.manifest/1"

EXTRASPECIAL_PARAMS = [(2, 1, 5, "+"), (2, 2, 5, "+"), (3, 1, 7, "+"), (3, 2, 7, "+"),
                       (5, 1, 11, "+"), (2, 2, 13, "s")]
MINUS_PARAMS = [(2, 1, 5, "-"), (2, 2, 5, "-")]
TENSOR_PARAMS = [[(2, 1, 7, "+"), (3, 1, 7, "+")], [(2, 1, 13, "+"), (3, 1, 13, "+")]]
WREATH_PARAMS = [(3, 2), (3, 3), (3, 4), (4, 2), (5, 2), (5, 3)]
SEMILINEAR_PARAMS = [(2, 4), (2, 6), (3, 2), (3, 4), (2, 8)]


def _spec(t) -> ExtraspecialSpec:
    return ExtraspecialSpec(*t)


# -- individual checks ---------------------------------------------------------------------

def check_relations() -> dict:
    rows = []
    for t in EXTRASPECIAL_PARAMS + MINUS_PARAMS:
        rep = check_extraspecial_relations(_spec(t))
        rows.append({"group": rep["group"], "passed": rep["passed"],
                     "relations": [{"name": r["name"], "holds": r["holds"]} for r in rep["relations"]]})
    return {"instances": rows, "passed": all(r["passed"] for r in rows), "exact": True}


def check_extraspecial_witnesses() -> dict:
    rows = []
    for t in EXTRASPECIAL_PARAMS + MINUS_PARAMS:
        spec = _spec(t)
        E = build_extraspecial(spec)
        w = witness_extraspecial_base(spec)
        ver = verify_irredundant(E, w.points)
        rep = max_irredundant(E)
        need = spec.m if spec.variant == "minus" else spec.m + 1
        first_drop = spec.r ** spec.m if spec.variant != "minus" else 2 ** (spec.m - 1)
        rows.append({
            "group": spec.label, "order": E.order, "points": w.points,
            "chain": ver.chain, "expected_chain": w.expected_orders,
            "irredundant_base": ver.is_base, "chain_matches": ver.chain == w.expected_orders,
            "first_stabilizer": ver.chain[1] if len(ver.chain) > 1 else None,
            "first_stabilizer_expected": first_drop,
            "witness_length": len(w.points), "required_length": need,
            "I": rep.value, "I_exact": rep.exact, "I_witness": rep.points,
            "passed": (ver.is_base and ver.chain == w.expected_orders and len(w.points) >= need
                       and rep.value >= need and (len(ver.chain) < 2 or ver.chain[1] == first_drop)),
        })
    return {"instances": rows, "passed": all(r["passed"] for r in rows),
            "exact": all(r["I_exact"] for r in rows)}


def check_tensor_witnesses() -> dict:
    rows = []
    for params in TENSOR_PARAMS:
        specs = [_spec(t) for t in params]
        T = build_tensor_product(specs)
        factors = [witness_extraspecial_base(s) for s in specs]
        w = witness_tensor_sequence(T, factors, [s.dim for s in specs])
        ver = verify_irredundant(T, w.points)
        expected_len = len(factors[0]) + sum(len(f) - 1 for f in factors[1:])
        rep = max_irredundant(T)
        rows.append({
            "group": T.name, "order": T.order, "points": w.points, "chain": ver.chain,
            "expected_chain": w.expected_orders, "irredundant_base": ver.is_base,
            "length": len(w.points), "expected_length": expected_len,
            "I": rep.value, "I_exact": rep.exact,
            "passed": (ver.is_base and ver.chain == w.expected_orders and len(w.points) == expected_len
                       and rep.value >= expected_len),
        })
    return {"instances": rows, "passed": all(r["passed"] for r in rows),
            "exact": all(r["I_exact"] for r in rows)}


def _gl1_wreath(q: int, d: int) -> GroupHandle:
    return build_wreath_imprimitive(build_gl1(q), cyclic_group(d))


def check_wreath_irredundant() -> dict:
    rows = []
    for q, d in WREATH_PARAMS:
        H = _gl1_wreath(q, d)
        rep = max_irredundant(H)
        irred = is_irreducible(H) if q > 2 else None
        rows.append({"group": H.name, "q": q, "d": d, "order": H.order, "I": rep.value,
                     "I_exact": rep.exact, "witness": rep.points, "irreducible": irred,
                     "passed": rep.value == d and rep.exact and (q <= 2 or irred)})
    return {"instances": rows, "passed": all(r["passed"] for r in rows),
            "exact": all(r["I_exact"] for r in rows)}


def check_semilinear_lower_bound() -> dict:
    rows = []
    for q, d in SEMILINEAR_PARAMS:
        G = build_semilinear(q, d)
        w = witness_semilinear_chain(q, d)
        ver = verify_irredundant(G, w.points)
        rep = max_irredundant(G)
        bound = omega(d) + 1
        rows.append({"group": G.name, "order": G.order, "witness": w.points, "chain": ver.chain,
                     "irredundant_base": ver.is_base, "bound": bound, "I": rep.value,
                     "I_exact": rep.exact,
                     "passed": ver.is_base and len(w.points) == bound and rep.value >= bound})
    return {"instances": rows, "passed": all(r["passed"] for r in rows),
            "exact": all(r["I_exact"] for r in rows)}


# -- invariant matrix ------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixEntry:
    name: str
    build: Callable[[], GroupHandle]


def _odd(p, l, k, mult, gal=1):
    def b():
        L = build_semilinear(p, l, mult, gal)
        return build_wreath_imprimitive(L, cyclic_group(k))
    return b


def instance_matrix() -> list[MatrixEntry]:
    out = []
    for t in EXTRASPECIAL_PARAMS + MINUS_PARAMS + [(2, 1, 5, "s")]:
        out.append(MatrixEntry(_spec(t).label, lambda t=t: build_extraspecial(_spec(t))))
    out.append(MatrixEntry("E(2,1,7,+) (x) E(3,1,7,+)",
                           lambda: build_tensor_product([_spec((2, 1, 7, "+")), _spec((3, 1, 7, "+"))])))
    for q, d in SEMILINEAR_PARAMS + [(4, 3), (5, 2)]:
        out.append(MatrixEntry(f"GammaL(1,{q}^{d})", lambda q=q, d=d: build_semilinear(q, d)))
    for q in (3, 4, 5, 7):
        out.append(MatrixEntry(f"GL(1,{q})", lambda q=q: build_gl1(q)))
    for q, d in WREATH_PARAMS:
        out.append(MatrixEntry(f"GL(1,{q}) wr Cyc({d})", lambda q=q, d=d: _gl1_wreath(q, d)))
    out.append(MatrixEntry("GL(1,3) wr Sym(3)",
                           lambda: build_wreath_imprimitive(build_gl1(3), symmetric_group(3))))
    out.append(MatrixEntry("GammaL(1,2^2) wr Sym(2)",
                           lambda: build_wreath_imprimitive(build_semilinear(2, 2), symmetric_group(2))))
    out.append(MatrixEntry("C3<=GammaL(1,7^1) wr Cyc(3)", _odd(7, 1, 3, 3)))
    out.append(MatrixEntry("C13:C3<=GammaL(1,3^3)", lambda: build_semilinear(3, 3, 13, 3)))
    out.append(MatrixEntry("C171:C3<=GammaL(1,7^3)", lambda: build_semilinear(7, 3, 171, 3)))
    return out


def _is_monomial(G: GroupHandle) -> bool:
    """Every generator permutes the coordinate lines: a decomposition certificate."""
    if G.ctx.dim < 2 or not all(isinstance(g, Mat) for g in G.generators):
        return False
    for M in generator_matrices(G):
        if not all(np.count_nonzero(row) == 1 for row in np.asarray(M.entries)):
            return False
    return True


def classify(G: GroupHandle, primitive_limit: int = 1 << 12) -> dict:
    irred = is_irreducible(G)
    if not irred:
        primitive = False
        how = "reducible"
    elif G.ctx.dim == 1:
        primitive, how = True, "dimension one"
    elif _is_monomial(G):
        primitive, how = False, "monomial generators"
    elif G.degree <= primitive_limit:
        primitive = is_linearly_primitive(G, primitive_limit)
        how = "decomposition search"
    else:
        primitive, how = None, "not decided"
    return {"irreducible": irred, "primitive": primitive, "primitive_by": how}


def check_upper_bounds() -> dict:
    rows = []
    for entry in instance_matrix():
        G = entry.build()
        d = G.ctx.dim
        i_rep = max_irredundant(G)
        b_rep = min_base(G)
        g_rep = greedy_max(G)
        cls = classify(G)
        I = i_rep.value
        bound = primitive_irredundant_bound(d)
        ok_order = I <= omega(G.order)
        ok_triple = b_rep.value <= g_rep.value <= I
        ok_irred = (not cls["irreducible"]) or I <= d
        ok_prim = cls["primitive"] is not True or I <= bound
        rows.append({"group": entry.name, "order": G.order, "dim": d, **cls,
                     "b": b_rep.value, "greedy": g_rep.value, "I": I,
                     "exact": i_rep.exact and b_rep.exact and g_rep.exact,
                     "I_at_most_omega": ok_order, "b_greedy_I_ordered": ok_triple,
                     "I_at_most_dim": ok_irred,
                     "primitive_bound": round(bound, 6), "I_within_primitive_bound": ok_prim,
                     "passed": ok_order and ok_triple and ok_irred and ok_prim})
    return {"instances": rows, "passed": all(r["passed"] for r in rows),
            "exact": all(r["exact"] for r in rows),
            "scope": "finite instances; the bounds for all dimensions are not machine-checked"}


def check_pruning_soundness(limit: int = 200) -> dict:
    rows = []
    for entry in instance_matrix():
        G = entry.build()
        if G.degree > limit:
            continue
        brute = brute_force_statistics(G, limit)
        got = {"min_base": min_base(G).value, "max_irredundant": max_irredundant(G).value,
               "greedy_max": greedy_max(G).value}
        rows.append({"group": entry.name, "degree": G.degree, "pruned": got, "brute_force": brute,
                     "passed": got == brute})
    return {"instances": rows, "passed": all(r["passed"] for r in rows), "exact": True}


# -- subgroup inequality triples ------------------------------------------------------------

def _wreath_base_group(H: GroupHandle) -> GroupHandle:
    L = H.meta["base"]
    k = H.ctx.blocks
    e = L.identity
    gens = []
    for b in range(k):
        for g in L.generators:
            base = [e] * k
            base[b] = g
            gens.append(Wreath(base, range(k)))
    return H.subgroup(gens, name=f"{L.name}^{k}", order=L.order ** k)


def _hadamard_extension(E: GroupHandle) -> GroupHandle:
    F = E.ctx.field
    h = Matrix(F, [[1, 1], [1, F.neg(1)]])
    return E.subgroup(list(E.generators) + [Mat(h)], name=f"<{E.name}, hadamard>")


def _scalar_extension(E: GroupHandle) -> GroupHandle:
    F = E.ctx.field
    d = E.ctx.dim
    z = Matrix(F, [[F.primitive_element if i == j else 0 for j in range(d)] for i in range(d)])
    return E.subgroup(list(E.generators) + [Mat(z)], name=f"<{E.name}, scalars>")


def subgroup_triples() -> list[tuple[str, GroupHandle, GroupHandle, GroupHandle]]:
    out = []
    G = build_semilinear(2, 4)
    out.append(("GammaL(1,2^4) over its multiplicative group", G,
                G.subgroup(build_semilinear(2, 4, 5, 2).generators, "C5:C2"),
                G.subgroup(build_semilinear(2, 4, 15, 1).generators, "C15")))
    G = build_semilinear(2, 6)
    out.append(("GammaL(1,2^6) over C63:C2", G,
                G.subgroup(build_semilinear(2, 6, 9, 3).generators, "C9:C3"),
                G.subgroup(build_semilinear(2, 6, 63, 2).generators, "C63:C2")))
    G = build_semilinear(3, 4)
    out.append(("GammaL(1,3^4) over GL(1,3^4)", G,
                G.subgroup(build_semilinear(3, 4, 16, 4).generators, "C16:C4"),
                G.subgroup(build_semilinear(3, 4, 80, 1).generators, "C80")))
    for q, d in [(3, 2), (3, 3), (4, 2), (5, 2)]:
        H = _gl1_wreath(q, d)
        base = _wreath_base_group(H)
        S = H.subgroup([H.generators[0]], name="one coordinate")
        out.append((f"GL(1,{q}) wr Cyc({d}) over its base group", H, S, base))
    K = build_wreath_imprimitive(build_semilinear(2, 2), symmetric_group(2))
    out.append(("GammaL(1,4) wr Sym(2) over its base group", K,
                K.subgroup(K.generators[:1], "Gamma on one coordinate"), _wreath_base_group(K)))
    E = build_extraspecial(_spec((2, 1, 5, "+")))
    H = _hadamard_extension(E)
    out.append(("extraspecial normal in its Hadamard extension", H, E, H.subgroup(E.generators, E.name)))
    E = build_extraspecial(_spec((2, 2, 5, "+")))
    H = _scalar_extension(E)
    out.append(("extraspecial normal in its scalar extension", H, E, H.subgroup(E.generators, E.name)))
    E = build_extraspecial(_spec((3, 1, 7, "+")))
    out.append(("normal subgroup equal to the group", E, E.subgroup(E.generators[:1], "x1"), E))
    T = build_tensor_product([_spec((2, 1, 7, "+")), _spec((3, 1, 7, "+"))])
    n2 = len(build_extraspecial(_spec((2, 1, 7, "+"))).generators)
    out.append(("tensor product over its first factor", T,
                T.subgroup(T.generators[n2:], "second factor"),
                T.subgroup(T.generators[:n2], "first factor")))
    return out


def check_subgroup_inequalities_suite() -> dict:
    rows = []
    for label, G, S, N in subgroup_triples():
        rep = check_subgroup_inequalities(G, S, N)
        rows.append({"triple": label, **rep,
                     "passed": rep["subgroup_holds"] and rep["quotient_holds"]})
    return {"instances": rows, "passed": all(r["passed"] for r in rows) and len(rows) >= 10,
            "exact": all(r["exact"] for r in rows)}


def check_odd_order() -> dict:
    from .census import verify_odd_order_instances
    rep = verify_odd_order_instances()
    rep["exact"] = all(r["exact"] for r in rep["instances"])
    return rep


def check_counterexample() -> dict:
    from .census import verify_greedy_counterexample
    rep = verify_greedy_counterexample()
    rep["exact"] = True
    return rep


# -- manifest ---------------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    claim: str
    run: Callable[[], dict]


MANIFEST: dict[str, Check] = {c.name: c for c in [
    Check("extraspecial-relations",
          "extraspecial-type generators satisfy their commutator relations and have order r^(1+2m) "
          "(2^(2+2m) for the symplectic type)", check_relations),
    Check("extraspecial-witnesses",
          "the coordinate witnesses form irredundant bases of length m+1 (m for the minus type)",
          check_extraspecial_witnesses),
    Check("tensor-witnesses",
          "tensor products of extraspecial groups with distinct primes carry an irredundant base of "
          "length I(E_1) + sum over later factors of (I(E_j) - 1)", check_tensor_witnesses),
    Check("wreath-irredundant",
          "GL(1,q) wr C_d has maximum irredundant base length exactly d and is irreducible for q > 2",
          check_wreath_irredundant),
    Check("semilinear-lower-bound",
          "GammaL(1,q^d) has an irredundant base of length Omega(d)+1 built from a subfield chain",
          check_semilinear_lower_bound),
    Check("upper-bounds",
          "irreducible groups have I <= d, primitive ones I <= 6.49 log2(d) + 1, and b <= greedy <= I",
          check_upper_bounds),
    Check("subgroup-inequalities",
          "I(S) <= I(G) for subgroups and I(G) <= I(N) + Omega(|G:N|) for normal subgroups",
          check_subgroup_inequalities_suite),
    Check("odd-order-greedy",
          "primitive affine groups of odd order have greedy base size equal to the minimum base size",
          check_odd_order),
    Check("greedy-counterexample",
          "some soluble primitive group has greedy base size greater than 4", check_counterexample),
    Check("pruning-soundness",
          "orbit-representative pruning agrees with a search over all points on small domains",
          check_pruning_soundness),
]}


def run_check(name: str) -> dict:
    if name not in MANIFEST:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(MANIFEST)}")
    c = MANIFEST[name]
    result = c.run()
    return {"check": c.name, "claim": c.claim, "passed": bool(result["passed"]),
            "exact": bool(result.get("exact", True)), "result": result}


def run_all(names=None) -> list[dict]:
    return [run_check(n) for n in (names or list(MANIFEST))]
