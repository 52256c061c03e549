"""Builders for the soluble linear group families and their witness sequences.

All matrix groups act on row vectors (``v -> v M``) of ``F_q^d`` packed
with coordinate 1 as the most significant base-``q`` digit.  Tensor factors
are placed so that the leftmost factor owns the most significant digits.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import (
    Field,
    FieldError,
    Matrix,
    diagonal_matrix,
    factorize,
    field_build,
    find_sum_of_squares,
    gf,
    identity_matrix,
    is_prime,
    kron_vectors,
    kronecker,
    pack,
    permutation_matrix,
    prime_power,
    primitive_root_of_unity,
    rank,
    row_space,
    unpack,
)
from .groups import (
    ActionContext,
    GroupError,
    GroupHandle,
    Mat,
    Perm,
    Semilinear,
    Wreath,
    perm_group,
)

VARIANTS = ("plus", "minus", "symplectic")
_VARIANT_ALIASES = {"+": "plus", "-": "minus", "s": "symplectic",
                    "plus": "plus", "minus": "minus", "symplectic": "symplectic"}


class PreconditionError(GroupError):
    """A construction was requested outside the parameters where it exists."""


# -- extraspecial-type groups -----------------------------------------------------

@dataclass(frozen=True)
class ExtraspecialSpec:
    r: int
    m: int
    q: int
    variant: str = "plus"

    def __post_init__(self):
        v = _VARIANT_ALIASES.get(self.variant)
        if v is None:
            raise PreconditionError(f"unknown variant {self.variant!r}")
        object.__setattr__(self, "variant", v)
        if not is_prime(self.r):
            raise PreconditionError(f"r = {self.r} is not prime")
        if self.m < 1:
            raise PreconditionError("m must be at least 1")
        try:
            prime_power(self.q)
        except FieldError as exc:
            raise PreconditionError(str(exc)) from None
        if (self.q - 1) % self.r:
            raise PreconditionError(
                f"r | q-1 fails: {self.r} does not divide {self.q - 1} "
                "(an absolutely irreducible r-group of extraspecial type needs r | q-1)")
        if v in ("minus", "symplectic") and self.r != 2:
            raise PreconditionError(f"the {v} variant needs r = 2")
        if v == "symplectic" and (self.q - 1) % 4:
            raise PreconditionError(
                f"4 | q-1 fails for q = {self.q} (the symplectic type needs a scalar of order 4)")

    @property
    def field(self) -> Field:
        return gf(self.q)

    @property
    def dim(self) -> int:
        return self.r ** self.m

    @property
    def order(self) -> int:
        if self.variant == "symplectic":
            return 2 ** (2 + 2 * self.m)
        return self.r ** (1 + 2 * self.m)

    @property
    def label(self) -> str:
        sign = {"plus": "+", "minus": "-", "symplectic": "s"}[self.variant]
        return f"E({self.r},{self.m},{self.q},{sign})"


def linear_context(F: Field, d: int) -> ActionContext:
    return ActionContext(degree=F.order ** d, field=F, dim=d, block_size=F.order ** d)


def matrix_group(F: Field, d: int, matrices, name: str = "", order: int | None = None,
                 meta: dict | None = None) -> GroupHandle:
    return GroupHandle([Mat(M) for M in matrices], linear_context(F, d),
                       Mat(identity_matrix(F, d)), name=name, order=order, linear=True, meta=meta)


def _positioned(F: Field, r: int, m: int, i: int, small: Matrix) -> Matrix:
    """``I_{r^(m-i)} (x) small (x) I_{r^(i-1)}``."""
    left = identity_matrix(F, r ** (m - i)) if m - i else None
    right = identity_matrix(F, r ** (i - 1)) if i > 1 else None
    M = small
    if left is not None:
        M = kronecker(left, M)
    if right is not None:
        M = kronecker(M, right)
    return M


def extraspecial_matrices(spec: ExtraspecialSpec) -> dict[str, Matrix]:
    """The named generators ``x1..xm, y1..ym`` plus ``z`` or ``x1', y1'`` as needed."""
    F = spec.field
    r, m = spec.r, spec.m
    w = primitive_root_of_unity(F, r)
    x = diagonal_matrix(F, [F.pow(w, i) for i in range(r)])
    y = permutation_matrix(F, [(i + 1) % r for i in range(r)])
    mats = {}
    for i in range(1, m + 1):
        mats[f"x{i}"] = _positioned(F, r, m, i, x)
        mats[f"y{i}"] = _positioned(F, r, m, i, y)
    if spec.variant == "symplectic":
        zeta = F.primitive_element
        mats["z"] = diagonal_matrix(F, [F.pow(zeta, (F.order - 1) // 4)] * spec.dim)
    if spec.variant == "minus":
        a, b = find_sum_of_squares(F)
        left = identity_matrix(F, 2 ** (m - 1))
        mats["x1'"] = kronecker(left, Matrix(F, [[a, b], [b, F.neg(a)]]))
        mats["y1'"] = kronecker(left, Matrix(F, [[0, F.neg(1)], [1, 0]]))
    return mats


def _generator_names(spec: ExtraspecialSpec) -> list[str]:
    m = spec.m
    if spec.variant == "minus":
        return ["x1'"] + [f"x{i}" for i in range(2, m + 1)] + ["y1'"] + [f"y{i}" for i in range(2, m + 1)]
    names = [f"x{i}" for i in range(1, m + 1)] + [f"y{i}" for i in range(1, m + 1)]
    if spec.variant == "symplectic":
        names.append("z")
    return names


def build_extraspecial(spec: ExtraspecialSpec) -> GroupHandle:
    mats = extraspecial_matrices(spec)
    names = _generator_names(spec)
    return matrix_group(spec.field, spec.dim, [mats[n] for n in names], name=spec.label,
                        order=spec.order,
                        meta={"kind": "extraspecial", "spec": spec, "generator_names": names})


def _commutator(A: Matrix, B: Matrix) -> Matrix:
    return A.inverse() @ B.inverse() @ A @ B


def _small_group_profile(F: Field, gens: list[Matrix]) -> dict:
    """Order, centre order and involution count of ``<gens>`` by closure."""
    d = gens[0].rows
    G = matrix_group(F, d, gens)
    elems = [e.matrix for e in G.elements()]
    centre = [z for z in elems if all(z @ g == g @ z for g in gens)]
    inv = [e for e in elems if not e.is_identity() and (e @ e).is_identity()]
    exponent = 1
    for e in elems:
        k, p = 1, e
        while not p.is_identity():
            p = p @ e
            k += 1
        exponent = math.lcm(exponent, k)
    return {"order": len(elems), "centre": len(centre), "involutions": len(inv), "exponent": exponent}


def check_extraspecial_relations(spec: ExtraspecialSpec) -> dict:
    """Check every commutator relation and the isomorphism types of the rank-one pieces.

    Returns ``{"passed": bool, "relations": [{"name", "holds"}, ...], ...}``.
    """
    mats = extraspecial_matrices(spec)
    F, r, m = spec.field, spec.r, spec.m
    rel = []

    def record(name, holds, detail=None):
        entry = {"name": name, "holds": bool(holds)}
        if detail is not None:
            entry["detail"] = detail
        rel.append(entry)

    first = 2 if spec.variant == "minus" else 1
    for i in range(1, m + 1):
        for j in range(1, m + 1):
            if i == j or i < first or j < first:
                continue
            if i < j:
                record(f"[x{i},x{j}] = 1", _commutator(mats[f"x{i}"], mats[f"x{j}"]).is_identity())
                record(f"[y{i},y{j}] = 1", _commutator(mats[f"y{i}"], mats[f"y{j}"]).is_identity())
            record(f"[x{i},y{j}] = 1", _commutator(mats[f"x{i}"], mats[f"y{j}"]).is_identity())
    for i in range(first, m + 1):
        prof = _small_group_profile(F, [mats[f"x{i}"], mats[f"y{i}"]])
        ok = prof["order"] == r ** 3 and prof["centre"] == r
        if r == 2:
            ok = ok and prof["involutions"] == 5  # dihedral of order 8
        else:
            ok = ok and prof["exponent"] == r
        record(f"<x{i},y{i}> is {r}_+^(1+2)", ok, prof)
    if spec.variant == "minus":
        prof = _small_group_profile(F, [mats["x1'"], mats["y1'"]])
        record("<x1',y1'> is Q8", prof["order"] == 8 and prof["involutions"] == 1, prof)
        for i in range(2, m + 1):
            for a in ("x1'", "y1'"):
                for b in (f"x{i}", f"y{i}"):
                    record(f"[{a},{b}] = 1", _commutator(mats[a], mats[b]).is_identity())
    if spec.variant == "symplectic":
        z = mats["z"]
        zz = z @ z
        record("z has order 4", not zz.is_identity() and (zz @ zz).is_identity())
        record("z is central", all((z @ g) == (g @ z) for g in mats.values()))
    G = build_extraspecial(spec)
    enumerated = len(G.elements())
    record(f"|E| = {spec.order}", enumerated == spec.order, {"enumerated": enumerated})
    return {"group": spec.label, "passed": all(e["holds"] for e in rel), "relations": rel}


# -- tensor products ---------------------------------------------------------------

def tensor_groups(groups: list[GroupHandle], name: str = "", meta: dict | None = None) -> GroupHandle:
    """Kronecker-positioned generators of matrix groups over one field; order by closure."""
    F = groups[0].ctx.field
    for G in groups:
        if G.ctx.field != F or not all(isinstance(g, Mat) for g in G.generators):
            raise PreconditionError("tensor factors must be matrix groups over a common field")
    dims = [G.ctx.dim for G in groups]
    gens = []
    for j, G in enumerate(groups):
        left = int(np.prod(dims[:j])) if j else 1
        right = int(np.prod(dims[j + 1:])) if j + 1 < len(dims) else 1
        for g in G.generators:
            M = g.matrix
            if left > 1:
                M = kronecker(identity_matrix(F, left), M)
            if right > 1:
                M = kronecker(M, identity_matrix(F, right))
            gens.append(M)
    d = int(np.prod(dims))
    H = matrix_group(F, d, gens, name=name or " (x) ".join(G.name for G in groups), meta=meta)
    H.declared_order = len(H.elements())
    return H


def build_tensor_product(specs: list[ExtraspecialSpec]) -> GroupHandle:
    if not specs:
        raise PreconditionError("need at least one factor")
    primes = [s.r for s in specs]
    if len(set(primes)) != len(primes):
        raise PreconditionError("tensor factors need pairwise distinct primes")
    if len({s.q for s in specs}) != 1:
        raise PreconditionError("tensor factors need a common field")
    if len(specs) == 1:
        return build_extraspecial(specs[0])
    factors = [build_extraspecial(s) for s in specs]
    return tensor_groups(factors, meta={"kind": "tensor", "specs": list(specs)})


# -- semilinear groups ---------------------------------------------------------------

def semilinear_field(q: int, d: int) -> Field:
    """``GF(q^d)`` as a degree-``d`` extension of ``GF(q)``."""
    p, k = prime_power(q)
    if k == 1:
        return field_build(p, d)
    return gf(q).extension(d)


def build_semilinear(q: int, d: int, mult_order: int | None = None,
                     galois_order: int | None = None) -> GroupHandle:
    """``GammaL_1(q^d)`` on ``F_q^d`` or its subgroup ``C_mult : C_galois``.

    The identification of ``GF(q^d)`` with ``F_q^d`` sends the coordinate
    vector ``(c_{d-1}, ..., c_0)`` to ``sum c_i X^i``, so point codes equal
    field indices.
    """
    ext = semilinear_field(q, d)
    n = ext.order - 1
    mult = n if mult_order is None else mult_order
    gal = d if galois_order is None else galois_order
    if n % mult or d % gal:
        raise PreconditionError(f"C_{mult} : C_{gal} is not a subgroup of GammaL_1({q}^{d})")
    gens = []
    if mult > 1:
        gens.append(Semilinear(ext, ext.pow(ext.primitive_element, n // mult), 0))
    if gal > 1:
        gens.append(Semilinear(ext, 1, d // gal))
    full = mult == n and gal == d
    name = f"GammaL(1,{q}^{d})" if full else f"C{mult}:C{gal}<=GammaL(1,{q}^{d})"
    ctx = ActionContext(degree=ext.order, field=gf(q), dim=d, block_size=ext.order)
    return GroupHandle(gens, ctx, Semilinear(ext, 1, 0), name=name, order=mult * gal, linear=True,
                       meta={"kind": "semilinear", "q": q, "d": d, "ext": ext,
                             "mult_order": mult, "galois_order": gal})


def build_gl1(q: int) -> GroupHandle:
    F = gf(q)
    gens = [Matrix(F, [[F.primitive_element]])] if q > 2 else []
    return matrix_group(F, 1, gens, name=f"GL(1,{q})", order=q - 1, meta={"kind": "gl1", "q": q})


# -- permutation groups ----------------------------------------------------------------

def symmetric_group(k: int) -> GroupHandle:
    gens = []
    if k >= 2:
        gens.append(Perm.from_cycles(k, (1, 2)))
    if k >= 3:
        gens.append(Perm.from_cycles(k, tuple(range(1, k + 1))))
    return perm_group(gens, k, name=f"Sym({k})", order=math.factorial(k))


def cyclic_group(k: int) -> GroupHandle:
    gens = [Perm.from_cycles(k, tuple(range(1, k + 1)))] if k >= 2 else []
    return perm_group(gens, k, name=f"Cyc({k})", order=k)


def _orbit_firsts(T: GroupHandle) -> list[int]:
    from .groups import orbit
    seen, firsts = set(), []
    for i in range(T.degree):
        if i not in seen:
            firsts.append(i)
            seen |= orbit(T, i).points
    return firsts


def perm_wreath(A: GroupHandle, T: GroupHandle) -> GroupHandle:
    """Imprimitive action of ``A wr T`` on ``n*k`` points, block ``i`` = points ``i*n .. i*n+n-1``."""
    n, k = A.degree, T.degree
    gens = []
    for b in _orbit_firsts(T):
        for a in A.generators:
            img = list(range(n * k))
            for j in range(n):
                img[b * n + j] = b * n + a.apply(j)
            gens.append(Perm(img))
    for t in T.generators:
        img = [t.apply(i // n) * n + i % n for i in range(n * k)]
        gens.append(Perm(img))
    order = A.order ** k * T.order
    return perm_group(gens, n * k, name=f"{A.name} wr {_paren(T.name)}", order=order)


def _paren(name: str) -> str:
    return f"({name})" if " " in name else name


# -- imprimitive wreath products on direct sums -------------------------------------------

def build_wreath_imprimitive(L: GroupHandle, T: GroupHandle, name: str | None = None) -> GroupHandle:
    """``L wr T`` on ``V_1 + ... + V_k``; block 0 holds the most significant digits."""
    if not all(isinstance(t, Perm) for t in T.generators):
        raise PreconditionError("the top group must be a permutation group")
    k = T.degree
    B = L.degree
    if B ** k >= 1 << 62:
        raise PreconditionError(f"{B}^{k} points exceed the packing bound")
    e = L.identity
    gens = []
    for b in _orbit_firsts(T):
        for g in L.generators:
            base = [e] * k
            base[b] = g
            gens.append(Wreath(base, range(k)))
    for t in T.generators:
        gens.append(Wreath([e] * k, t.images))
    ctx = ActionContext(degree=B ** k, field=L.ctx.field, dim=L.ctx.dim * k, blocks=k, block_size=B)
    order = L.order ** k * T.order
    ident = Wreath([e] * k, range(k))
    return GroupHandle(gens, ctx, ident, name=name or f"{L.name} wr {_paren(T.name)}", order=order,
                       linear=L.linear, meta={"kind": "wreath", "base": L, "top": T})


def build_counterexample() -> GroupHandle:
    """``GammaL_1(4) wr (S_4 wr S_3)`` on ``F_4^12`` with six generators."""
    gamma = build_semilinear(2, 2)
    P = perm_wreath(symmetric_group(4), symmetric_group(3))
    H = build_wreath_imprimitive(gamma, P, name="counterexample")
    H.meta.update({"kind": "counterexample", "gamma": gamma, "P": P, "chunks": 3, "chunk_size": 4})
    return H


def direct_product(G1: GroupHandle, G2: GroupHandle) -> GroupHandle:
    """Block-diagonal action on ``V_1 + V_2`` for linear groups, disjoint union for permutation groups."""
    if G1.linear and G2.linear and G1.ctx.field == G2.ctx.field:
        e1, e2 = G1.identity, G2.identity
        B1, B2 = G1.degree, G2.degree
        if B1 != B2:
            # pad the smaller block through a product with explicit images
            gens = [_pair_perm(g, e2, B1, B2) for g in G1.generators] + \
                   [_pair_perm(e1, h, B1, B2) for h in G2.generators]
            ctx = ActionContext(degree=B1 * B2, field=G1.ctx.field, dim=G1.ctx.dim + G2.ctx.dim,
                                block_size=B1 * B2)
            return GroupHandle(gens, ctx, Perm.identity(B1 * B2), name=f"{G1.name} x {G2.name}",
                               order=G1.order * G2.order, linear=True)
        gens = [Wreath([g, e2], (0, 1)) for g in G1.generators] + \
               [Wreath([e1, h], (0, 1)) for h in G2.generators]
        ctx = ActionContext(degree=B1 * B2, field=G1.ctx.field, dim=G1.ctx.dim + G2.ctx.dim,
                            blocks=2, block_size=B1)
        return GroupHandle(gens, ctx, Wreath([e1, e2], (0, 1)), name=f"{G1.name} x {G2.name}",
                           order=G1.order * G2.order, linear=True)
    if all(isinstance(g, Perm) for g in G1.generators + G2.generators) and \
            not G1.linear and not G2.linear:
        n1, n2 = G1.degree, G2.degree
        gens = [Perm(list(g.images) + list(range(n1, n1 + n2))) for g in G1.generators] + \
               [Perm(list(range(n1)) + [n1 + i for i in h.images]) for h in G2.generators]
        return perm_group(gens, n1 + n2, name=f"{G1.name} x {G2.name}", order=G1.order * G2.order)
    raise PreconditionError("direct product needs two linear groups over one field or two permutation groups")


def _pair_perm(g, h, B1, B2) -> Perm:
    a = g.table()
    b = h.table()
    img = (a[:, None] * B2 + b[None, :]).reshape(-1)
    return Perm(img.tolist())


# -- witness sequences --------------------------------------------------------------------

@dataclass
class WitnessSequence:
    """Points with the stabilizer orders claimed for every prefix (first entry ``|G|``)."""

    group: str
    claim: str
    points: list[int]
    vectors: list[tuple]
    expected_orders: list[int]
    notes: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.points)

    @property
    def is_base(self) -> bool:
        return self.expected_orders[-1] == 1

    def to_json(self) -> dict:
        return {"group": self.group, "claim": self.claim, "points": self.points,
                "vectors": [list(v) for v in self.vectors],
                "expected_orders": [str(o) for o in self.expected_orders]}


def _unit_code(q: int, d: int, index: int) -> int:
    return q ** (d - 1 - index)


def extraspecial_basis_vector_index(r: int, m: int, i: int) -> int:
    """Coordinate of ``w_i = e_1 (x)...(x) e_1 (x) e_2 (x)...(x) e_2`` (``i`` trailing ``e_2``)."""
    return sum(r ** t for t in range(i))


def witness_extraspecial_base(spec: ExtraspecialSpec) -> WitnessSequence:
    q, d, r, m = spec.q, spec.dim, spec.r, spec.m
    idx = [0] + [extraspecial_basis_vector_index(r, m, i) for i in range(1, m + 1)]
    if spec.variant == "minus":
        idx = [idx[0]] + idx[2:]
        orders = [spec.order] + [2 ** (m - 1 - t) for t in range(m)]
    else:
        orders = [spec.order] + [r ** (m - t) for t in range(m + 1)]
    points = [_unit_code(q, d, i) for i in idx]
    vectors = [unpack(q, c, d) for c in points]
    return WitnessSequence(spec.label, "irredundant base", points, vectors, orders,
                           {"coordinates": idx})


def witness_semilinear_chain(q: int, d: int) -> WitnessSequence:
    ext = semilinear_field(q, d)
    primes = sorted(p for p, e in factorize(d).items() for _ in range(e)) if d > 1 else []
    points = [1]
    orders = [d * (ext.order - 1), d]
    inner = 1
    for f in primes:
        outer = inner * f
        codes = np.arange(ext.order, dtype=np.int64)
        inside = np.asarray(ext.in_subfield(codes, q ** outer)) & ~np.asarray(ext.in_subfield(codes, q ** inner))
        points.append(int(np.flatnonzero(inside)[0]))
        orders.append(d // outer)
        inner = outer
    vectors = [unpack(q, c, d) for c in points]
    return WitnessSequence(f"GammaL(1,{q}^{d})", "irredundant base", points, vectors, orders,
                           {"prime_factors": primes})


def witness_tensor_sequence(T: GroupHandle, factors: list[WitnessSequence],
                            dims: list[int]) -> WitnessSequence:
    """Tensor witness: factor 1 in full, then factors ``j >= 2`` from their second point."""
    if len(factors) == 1:
        return factors[0]
    F = T.ctx.field
    q = F.order
    chains = [w.expected_orders for w in factors]
    total = 1
    for c in chains:
        total *= c[0]
    points, vectors, orders = [], [], [total]
    for j, w in enumerate(factors):
        start = 0 if j == 0 else 1
        for t in range(start, len(w)):
            parts = [factors[i].vectors[0] for i in range(len(factors))]
            parts[j] = w.vectors[t]
            v = np.asarray(parts[0], dtype=np.int64)
            for part in parts[1:]:
                v = kron_vectors(F, v, part)
            points.append(pack(q, v.tolist()))
            vectors.append(tuple(int(x) for x in v))
            o = chains[j][t + 1]
            for i in range(j + 1, len(factors)):
                o *= chains[i][1]
            orders.append(o)
    return WitnessSequence(T.name, "irredundant sequence", points, vectors, orders)


# -- Gluck partition -----------------------------------------------------------------------

def find_gluck_partition(T: GroupHandle) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least ``Q1`` (as a bitmask) whose setwise stabilizer in ``T`` is trivial; 1-based parts."""
    k = T.degree
    if k > 24:
        raise PreconditionError("subset search limited to 24 points")
    elems = [e for e in T.elements() if not e.is_identity()]
    imgs = [e.images for e in elems]
    for mask in range(1 << k):
        ok = True
        for img in imgs:
            moved = 0
            for i in range(k):
                if mask >> i & 1:
                    moved |= 1 << img[i]
            if moved == mask:
                ok = False
                break
        if ok:
            q1 = tuple(i + 1 for i in range(k) if mask >> i & 1)
            q2 = tuple(i + 1 for i in range(k) if not mask >> i & 1)
            return q1, q2
    raise GroupError("no partition with trivial setwise stabilizer exists")


# -- linear structure checks -----------------------------------------------------------

def linear_matrix(g, ctx: ActionContext) -> Matrix:
    """Matrix of a linear element from the images of the standard basis."""
    F, d = ctx.field, ctx.dim
    q = F.order
    rows = [unpack(q, g.apply(_unit_code(q, d, i)), d) for i in range(d)]
    return Matrix(F, rows)


def generator_matrices(G: GroupHandle) -> list[Matrix]:
    if not G.linear:
        raise GroupError(f"{G.name} is not a linear group")
    return [g.matrix if isinstance(g, Mat) else linear_matrix(g, G.ctx) for g in G.generators]


def spin(F: Field, v, mats: list[Matrix]) -> np.ndarray:
    """Basis of the smallest subspace containing ``v`` and invariant under ``mats``."""
    basis = row_space(F, np.asarray([v], dtype=np.int64))
    frontier = list(basis)
    while frontier:
        u = frontier.pop()
        for M in mats:
            w = F.matmul(np.asarray(u)[None, :], M.entries)[0]
            ext = np.vstack([basis, w[None, :]])
            if rank(F, ext) > basis.shape[0]:
                basis = row_space(F, ext)
                frontier.append(w)
    return basis


def algebra_dimension(G: GroupHandle) -> int:
    """Dimension of the matrix algebra spanned by ``G`` (``d^2`` means absolutely irreducible)."""
    F, d = G.ctx.field, G.ctx.dim
    mats = generator_matrices(G)
    span = row_space(F, np.eye(d, dtype=np.int64).reshape(1, -1))
    frontier = [np.eye(d, dtype=np.int64)]
    while frontier:
        A = frontier.pop()
        for M in mats:
            B = F.matmul(A, M.entries)
            ext = np.vstack([span, B.reshape(1, -1)])
            if rank(F, ext) > span.shape[0]:
                span = row_space(F, ext)
                frontier.append(B)
                if span.shape[0] == d * d:
                    return d * d
    return span.shape[0]


def is_absolutely_irreducible(G: GroupHandle) -> bool:
    return algebra_dimension(G) == G.ctx.dim ** 2


def is_irreducible(G: GroupHandle) -> bool:
    """No proper non-zero invariant subspace: every orbit representative spins to the whole space."""
    F, d = G.ctx.field, G.ctx.dim
    if is_absolutely_irreducible(G):
        return True
    from .groups import orbit_partition
    mats = generator_matrices(G)
    q = F.order
    for rep, _ in orbit_partition(G):
        if rep == 0:
            continue
        if spin(F, unpack(q, rep, d), mats).shape[0] < d:
            return False
    return True


def _subspaces_through(F: Field, d: int, u: np.ndarray, m: int):
    """All ``m``-dimensional subspaces containing ``u``, as basis arrays (first row ``u``)."""
    piv = int(np.flatnonzero(u)[0])
    others = [c for c in range(d) if c != piv]
    n = len(others)
    q = F.order
    k = m - 1
    for pivots in itertools.combinations(range(n), k):
        free = [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = np.zeros((k, d), dtype=np.int64)
            for i, p in enumerate(pivots):
                rows[i, others[p]] = 1
            for (i, c), val in zip(free, values):
                rows[i, others[c]] = val
            yield np.vstack([u[None, :], rows]) if k else u[None, :]


def preserved_decomposition(G: GroupHandle, limit: int = 1 << 12) -> list[np.ndarray] | None:
    """A direct-sum decomposition permuted by ``G`` into ``k >= 2`` parts, or None.

    Brute force over subspaces through one representative of each non-zero orbit;
    meant for small irreducible groups (``q^d <= limit``).
    """
    F, d = G.ctx.field, G.ctx.dim
    if G.degree > limit:
        raise GroupError(f"decomposition search limited to {limit} points")
    from .groups import orbit_partition
    mats = generator_matrices(G)
    q = F.order

    def key(B):
        return row_space(F, B).tobytes()

    reps = [r for r, _ in orbit_partition(G) if r]
    for m in (m for m in range(1, d) if d % m == 0):
        k = d // m
        for rep in reps:
            u = np.asarray(unpack(q, rep, d), dtype=np.int64)
            for W in _subspaces_through(F, d, u, m):
                W = row_space(F, W)
                ok = True
                for M in mats:
                    img = F.matmul(W, M.entries)
                    rk = rank(F, np.vstack([W, img]))
                    if rk not in (m, 2 * m):
                        ok = False
                        break
                if not ok:
                    continue
                seen = {key(W): W}
                frontier = [W]
                while frontier and len(seen) <= k:
                    X = frontier.pop()
                    for M in mats:
                        Y = row_space(F, F.matmul(X, M.entries))
                        ky = Y.tobytes()
                        if ky not in seen:
                            seen[ky] = Y
                            frontier.append(Y)
                if len(seen) == k and rank(F, np.vstack(list(seen.values()))) == d:
                    return [seen[kk] for kk in sorted(seen)]
    return None


def is_linearly_primitive(G: GroupHandle, limit: int = 1 << 12) -> bool:
    return is_irreducible(G) and preserved_decomposition(G, limit) is None


# -- numeric bounds ---------------------------------------------------------------------

def soluble_order_bound(q: int, d: int) -> float:
    """``24^(-1/3) q^(2.244 d)`` for completely reducible soluble subgroups of ``GL_d(q)``."""
    return 24 ** (-1 / 3) * q ** (2.244 * d)


def satisfies_soluble_order_bound(order: int, q: int, d: int) -> bool:
    return math.log2(order) <= math.log2(soluble_order_bound(q, d)) + 1e-9


def extraspecial_normaliser_bound(q: int, r: int, m: int) -> float:
    """``(q-1) r^(6.49 m)``."""
    return (q - 1) * r ** (6.49 * m)


def primitive_irredundant_bound(d: int) -> float:
    """``6.49 log2(d) + 1``."""
    return 6.49 * math.log2(d) + 1
