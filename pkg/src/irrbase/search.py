"""Exact minimum base size, maximum irredundant base length and greedy base size.

The default engine works on subgroups of an enumerated group as bitmasks
over its element list.  A :class:`StabilizerAtlas` records every distinct
point stabilizer ``G_v`` once, with the number of points having exactly that
stabilizer and the least such point.  For a subgroup ``K`` the stabilizers
of single points are then ``K & mask`` over the atlas, so a search node
costs one pass over the atlas regardless of the degree.

Points in one ``K``-orbit have conjugate stabilizers and identical residual
statistics; identical stabilizers are merged outright and the recursion is
memoised on the subgroup mask.

A second engine (``engine="chain"``) branches on orbit representatives
using Schreier-Sims stabilizer chains and is used where the group is too
large to enumerate.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from .algebra import unpack_array
from .groups import (
    EXPLICIT_LIMIT,
    ELEMENT_LIMIT,
    DegreeError,
    GroupError,
    GroupHandle,
    Mat,
    omega,
)

DEFAULT_NODE_BUDGET = 10 ** 7
PERM_MODE_LIMIT = 1 << 16
STATISTICS = ("min_base", "max_irredundant", "greedy_max", "greedy_run")
REPORT_VERSION = "irrbase.report/1"


def node_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("IRRBASE_NODE_BUDGET")
    return int(env) if env else DEFAULT_NODE_BUDGET


class BudgetExceeded(RuntimeError):
    pass


# -- reports -------------------------------------------------------------------

@dataclass
class BaseReport:
    statistic: str
    group: str
    points: list[int]
    vectors: list[str]
    order_chain: list[int]
    exact: bool = True
    nodes: int = 0
    millis: float = 0.0
    engine: str = ""

    @property
    def value(self) -> int:
        return len(self.points)

    @property
    def is_base(self) -> bool:
        return self.order_chain[-1] == 1

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "format": REPORT_VERSION,
            "statistic": self.statistic,
            "group": self.group,
            "value": self.value,
            "sequence": [{"code": c, "vector": v} for c, v in zip(self.points, self.vectors)],
            "order_chain": [str(o) for o in self.order_chain],
            "exact": self.exact,
            "nodes": self.nodes,
            "engine": self.engine,
        }
        if timing:
            out["millis"] = round(self.millis, 3)
        return out


def _report(G: GroupHandle, stat, points, chain, exact, nodes, t0, engine) -> BaseReport:
    return BaseReport(stat, G.name, list(points), [G.ctx.vector_str(p) for p in points],
                      list(chain), exact, nodes, (time.perf_counter() - t0) * 1000, engine)


# -- stabilizer atlas ------------------------------------------------------------------

@dataclass
class AtlasEntry:
    mask: int
    count: int
    rep: int


@dataclass
class StabilizerAtlas:
    """Distinct point stabilizers of an enumerated group, sorted by least point."""

    order: int
    entries: list[AtlasEntry]
    mode: str
    degree: int
    meta: dict = field(default_factory=dict)

    @property
    def full(self) -> int:
        return (1 << self.order) - 1

    def check(self) -> bool:
        """Counts cover the domain and orbit sizes divide the order."""
        return sum(e.count for e in self.entries) == self.degree


def _bits_to_masks(packed_columns: np.ndarray) -> list[int]:
    return [int.from_bytes(row.tobytes(), "little") for row in packed_columns]


def _perm_atlas(G: GroupHandle, elems) -> StabilizerAtlas:
    N = G.degree
    n = len(elems)
    nbytes = (n + 7) // 8
    packed = np.zeros((nbytes, N), dtype=np.uint8)
    pts = np.arange(N, dtype=np.int64)
    for i, e in enumerate(elems):
        fixed = e.apply_array(pts) == pts
        packed[i // 8] |= fixed.astype(np.uint8) << np.uint8(i % 8)
    cols = np.ascontiguousarray(packed.T)
    uniq, first, counts = np.unique(cols, axis=0, return_index=True, return_counts=True)
    masks = _bits_to_masks(uniq)
    entries = [AtlasEntry(m, int(c), int(f)) for m, f, c in zip(masks, first, counts)]
    entries.sort(key=lambda e: e.rep)
    return StabilizerAtlas(n, entries, "perm", N)


def _lattice_atlas(G: GroupHandle, elems) -> StabilizerAtlas:
    """Stabilizers from the lattice of fixed subspaces, closed under intersection."""
    from .algebra import left_nullspace, nullspace, row_space
    from .constructions import linear_matrix

    F, d = G.ctx.field, G.ctx.dim
    q = F.order
    mats = np.stack([(e.matrix if isinstance(e, Mat) else linear_matrix(e, G.ctx)).entries
                     for e in elems])
    eye = np.eye(d, dtype=np.int64)
    diff = np.asarray(F._add_any(mats, F._neg[eye])) if F.k > 1 else (mats - eye) % F.p
    n = len(elems)

    def key(B):
        return (B.shape[0], B.tobytes())

    annihilators = {}

    def annihilator(B):
        kb = key(B)
        ann = annihilators.get(kb)
        if ann is None:
            ann = nullspace(F, B).T if B.shape[0] else np.eye(d, dtype=np.int64)
            annihilators[kb] = ann
        return ann

    def x_mask(B):
        if B.shape[0] == 0:
            return (1 << n) - 1
        prod = F.matmul(B, diff)
        ok = ~np.asarray(prod).reshape(n, -1).any(axis=1)
        bits = np.packbits(ok, bitorder="little")
        return int.from_bytes(bits.tobytes(), "little")

    fixes = {}
    for i in range(n):
        B = row_space(F, left_nullspace(F, diff[i]))
        fixes.setdefault(key(B), (B, i))
    spaces = {kb: B for kb, (B, _) in fixes.items()}
    witnesses = [i for _, i in fixes.values()]
    queue = list(spaces.values())
    while queue:
        S = queue.pop()
        if S.shape[0] == 0:
            continue
        prods = np.asarray(F.matmul(S, diff[witnesses]))
        for t in range(len(witnesses)):
            P = prods[t]
            if not P.any():
                continue
            C = left_nullspace(F, P)
            W = row_space(F, np.asarray(F.matmul(C, S))) if C.shape[0] else C
            kw = key(W)
            if kw not in spaces:
                spaces[kw] = W
                queue.append(W)
    items = sorted(spaces.values(), key=lambda B: B.shape[0])
    masks = [x_mask(B) for B in items]
    exact = []
    for i, B in enumerate(items):
        m = masks[i]
        below = [j for j in range(i) if masks[j] != m and masks[j] & m == m]
        exact.append(q ** B.shape[0] - sum(exact[j] for j in below))
    entries = []
    for i, B in enumerate(items):
        if exact[i] <= 0:
            continue
        m = masks[i]
        below = [annihilator(items[j]) for j in range(i) if masks[j] != m and masks[j] & m == m]
        entries.append(AtlasEntry(m, exact[i], _least_generic(F, B, below)))
    entries.sort(key=lambda e: e.rep)
    return StabilizerAtlas(n, entries, "lattice", G.degree, {"subspaces": len(items)})


def _least_generic(F, B, below_annihilators, batch: int = 4096) -> int:
    """Least code in the row space of ``B`` (RREF) lying in none of the smaller subspaces."""
    q = F.order
    k, d = B.shape
    if k == 0:
        return 0
    total = q ** k
    pw = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    start = 0
    while start < total:
        coeffs = unpack_array(q, np.arange(start, min(start + batch, total), dtype=np.int64), k)
        vecs = np.asarray(F.matmul(coeffs, B))
        inside = np.zeros(len(vecs), dtype=bool)
        for ann in below_annihilators:
            if ann.shape[1] == 0:
                inside[:] = True
                break
            inside |= ~np.asarray(F.matmul(vecs, ann)).any(axis=1)
        hit = np.flatnonzero(~inside)
        if hit.size:
            return int((vecs[hit[0]] * pw).sum())
        start += batch
    raise GroupError("lattice count inconsistent")  # pragma: no cover


def build_atlas(G: GroupHandle, mode: str | None = None) -> StabilizerAtlas:
    cache = G.__dict__.setdefault("_atlases", {})
    elems = G.elements()
    if mode is None:
        mode = "lattice" if (G.linear and G.degree > PERM_MODE_LIMIT) else "perm"
    if mode not in cache:
        if mode == "perm":
            if G.degree > EXPLICIT_LIMIT:
                raise DegreeError(f"degree {G.degree} too large for explicit fixed-point tables")
            cache[mode] = _perm_atlas(G, elems)
        elif mode == "lattice":
            if not G.linear:
                raise GroupError("lattice atlas needs a linear group")
            cache[mode] = _lattice_atlas(G, elems)
        else:
            raise ValueError(f"unknown atlas mode {mode!r}")
    return cache[mode]


# -- bitmask engine -------------------------------------------------------------------------

class _MaskSearch:
    TRIVIAL = 1  # the identity is element 0

    def __init__(self, atlas: StabilizerAtlas, budget: int):
        self.atlas = atlas
        self.budget = budget
        self.nodes = 0
        self._children: dict[int, list[tuple[int, int]]] = {}

    def children(self, K: int) -> list[tuple[int, int]]:
        """Distinct proper point stabilizers ``(mask, least point)`` of ``K``, by point."""
        out = self._children.get(K)
        if out is None:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded
            seen = {}
            for e in self.atlas.entries:
                c = K & e.mask
                if c != K and c not in seen:
                    seen[c] = e.rep
            out = sorted(((c, r) for c, r in seen.items()), key=lambda t: t[1])
            self._children[K] = out
        return out

    def longest(self, K: int) -> list[tuple[int, int]]:
        ch = self.children(K)
        if not ch:
            return ch
        smallest = min(c.bit_count() for c, _ in ch)
        return [(c, r) for c, r in ch if c.bit_count() == smallest]

    def max_irredundant(self) -> tuple[int, list[int]]:
        memo: dict[int, tuple[int, int, int]] = {}

        def rec(K):
            if K == self.TRIVIAL:
                return 0
            hit = memo.get(K)
            if hit is not None:
                return hit[0]
            cap = omega(K.bit_count())
            best, bc, br = -1, None, None
            for c, r in self.children(K):
                if best >= 0 and 1 + omega(c.bit_count()) <= best:
                    continue
                v = 1 + rec(c)
                if v > best:
                    best, bc, br = v, c, r
                    if best == cap:
                        break
            memo[K] = (best, bc, br)
            return best

        rec(self.atlas.full)
        return self._walk(memo)

    def min_base(self) -> tuple[int, list[int]]:
        memo: dict[int, tuple[int, int, int]] = {}

        def rec(K):
            if K == self.TRIVIAL:
                return 0
            hit = memo.get(K)
            if hit is not None:
                return hit[0]
            ch = self.children(K)
            best, bc, br = None, None, None
            for c, r in ch:
                if c == self.TRIVIAL:
                    best, bc, br = 1, c, r
                    break
            if best is None:
                for c, r in ch:
                    if best is not None and best <= 2:
                        break
                    v = 1 + rec(c)
                    if best is None or v < best:
                        best, bc, br = v, c, r
            memo[K] = (best, bc, br)
            return best

        rec(self.atlas.full)
        return self._walk(memo)

    def greedy_max(self) -> tuple[int, list[int]]:
        memo: dict[int, tuple[int, int, int]] = {}

        def rec(K):
            if K == self.TRIVIAL:
                return 0
            hit = memo.get(K)
            if hit is not None:
                return hit[0]
            best, bc, br = -1, None, None
            for c, r in self.longest(K):
                v = 1 + rec(c)
                if v > best:
                    best, bc, br = v, c, r
            memo[K] = (best, bc, br)
            return best

        rec(self.atlas.full)
        return self._walk(memo)

    def greedy_run(self) -> tuple[int, list[int]]:
        K, pts, masks = self.atlas.full, [], [self.atlas.full]
        while K != self.TRIVIAL:
            c, r = self.longest(K)[0]
            pts.append(r)
            K = c
            masks.append(K)
        return len(pts), pts, [m.bit_count() for m in masks]

    def _walk(self, memo):
        K = self.atlas.full
        pts, masks = [], [K]
        while K != self.TRIVIAL:
            _, c, r = memo[K]
            pts.append(r)
            K = c
            masks.append(K)
        return len(pts), pts, [m.bit_count() for m in masks]


def _descend(search: _MaskSearch, pick) -> tuple[list[int], list[int]]:
    """Follow ``pick`` (a child chooser) to the trivial group without the node budget."""
    search.budget = float("inf")
    K = search.atlas.full
    pts, orders = [], [K.bit_count()]
    while K != _MaskSearch.TRIVIAL:
        c, r = pick(search, K)
        pts.append(r)
        K = c
        orders.append(K.bit_count())
    return pts, orders


_FALLBACK_PICK = {
    "max_irredundant": lambda s, K: max(s.children(K), key=lambda t: (t[0].bit_count(), -t[1])),
    "min_base": lambda s, K: min(s.children(K), key=lambda t: (t[0].bit_count(), t[1])),
    "greedy_max": lambda s, K: s.longest(K)[0],
}


def _mask_statistic(G: GroupHandle, stat: str, budget: int | None, mode: str | None) -> BaseReport:
    t0 = time.perf_counter()
    atlas = build_atlas(G, mode)
    search = _MaskSearch(atlas, node_budget(budget))
    engine = f"atlas-{atlas.mode}"
    try:
        _, pts, chain = getattr(search, stat)()
        return _report(G, stat, pts, chain, True, search.nodes, t0, engine)
    except BudgetExceeded:
        nodes = search.nodes
        pts, chain = _descend(search, _FALLBACK_PICK[stat])
        return _report(G, stat, pts, chain, False, nodes, t0, engine)


# -- chain engine -------------------------------------------------------------------------

class _ChainSearch:
    """Branching on orbit representatives of explicit stabilizer generators."""

    def __init__(self, G: GroupHandle, budget: int):
        if G.degree > EXPLICIT_LIMIT:
            raise DegreeError(f"degree {G.degree} exceeds the stabilizer-chain limit")
        self.N = G.degree
        self.gens = [np.asarray(t, dtype=np.int32) for t in G.perm_tables()]
        self.order = G.order
        self.budget = budget
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded

    def orbits(self, gens) -> list[tuple[int, int]]:
        if not gens:
            return [(p, 1) for p in range(self.N)]
        from .kernels import orbit_labels
        tables = np.stack(gens)[:, None, :]
        tops = np.zeros((len(gens), 1), dtype=np.int32)
        _, reps, sizes = orbit_labels(tables, tops, self.N, 1)
        return list(zip(reps, sizes))

    def stabilizer(self, gens, v) -> list[np.ndarray]:
        from .schreier import chain_from_permutations
        if not gens:
            return []
        ch = chain_from_permutations(gens, self.N, base_prefix=[v])
        return ch.level_generators(1)

    def max_irredundant(self):
        best = [0, []]

        def rec(gens, order, prefix):
            self.tick()
            if order == 1:
                if len(prefix) > best[0]:
                    best[:] = [len(prefix), list(prefix)]
                return
            for v, size in self.orbits(gens):
                if size == 1:
                    continue
                child = order // size
                if len(prefix) + 1 + omega(child) <= best[0]:
                    continue
                prefix.append(v)
                rec(self.stabilizer(gens, v), child, prefix)
                prefix.pop()

        rec(self.gens, self.order, [])
        return best[1]

    def greedy_max(self):
        best = [-1, []]

        def rec(gens, order, prefix):
            self.tick()
            if order == 1:
                if len(prefix) > best[0]:
                    best[:] = [len(prefix), list(prefix)]
                return
            orbs = self.orbits(gens)
            top = max(s for _, s in orbs)
            for v, size in orbs:
                if size == top:
                    prefix.append(v)
                    rec(self.stabilizer(gens, v), order // size, prefix)
                    prefix.pop()

        rec(self.gens, self.order, [])
        return best[1]

    def greedy_run(self):
        gens, order, pts = self.gens, self.order, []
        while order > 1:
            self.tick()
            orbs = self.orbits(gens)
            top = max(s for _, s in orbs)
            v = next(p for p, s in orbs if s == top)
            pts.append(v)
            gens, order = self.stabilizer(gens, v), order // top
        return pts

    def min_base(self):
        def feasible(gens, order, depth, prefix):
            self.tick()
            if order == 1:
                return True
            if depth == 0:
                return False
            orbs = self.orbits(gens)
            top = max(s for _, s in orbs)
            if top ** depth < order:
                return False
            for v, size in orbs:
                if size == 1:
                    continue
                prefix.append(v)
                if feasible(self.stabilizer(gens, v), order // size, depth - 1, prefix):
                    return True
                prefix.pop()
            return False

        depth = 0
        while True:
            prefix: list[int] = []
            if feasible(self.gens, self.order, depth, prefix):
                return prefix
            depth += 1


def _chain_statistic(G: GroupHandle, stat: str, budget: int | None) -> BaseReport:
    t0 = time.perf_counter()
    search = _ChainSearch(G, node_budget(budget))
    try:
        pts = getattr(search, stat)()
        exact = True
    except BudgetExceeded:
        nodes = search.nodes
        search.budget = float("inf")
        pts = search.greedy_run()
        search.nodes = nodes
        exact = False
    chain = verify_irredundant(G, pts).chain
    return _report(G, stat, pts, chain, exact, search.nodes, t0, "chain")


# -- public operations -----------------------------------------------------------------------

def _dispatch(G: GroupHandle, stat: str, engine: str, budget: int | None, mode: str | None = None):
    if G.is_trivial():
        return _report(G, stat, [], [1], True, 0, time.perf_counter(), "trivial")
    if engine == "auto":
        engine = "atlas" if G.enumerable() else "chain"
    if engine == "atlas":
        return _mask_statistic(G, stat, budget, mode)
    if engine == "chain":
        return _chain_statistic(G, stat, budget)
    raise ValueError(f"unknown engine {engine!r}")


def max_irredundant(G: GroupHandle, engine: str = "auto", budget: int | None = None,
                    mode: str | None = None) -> BaseReport:
    """Exact ``I(G)`` with a witness base (flagged inexact if the node budget runs out)."""
    return _dispatch(G, "max_irredundant", engine, budget, mode)


def min_base(G: GroupHandle, engine: str = "auto", budget: int | None = None,
             mode: str | None = None) -> BaseReport:
    """Exact ``b(G)`` with a witness base."""
    return _dispatch(G, "min_base", engine, budget, mode)


def greedy_max(G: GroupHandle, engine: str = "auto", budget: int | None = None,
               mode: str | None = None) -> BaseReport:
    """Largest base the greedy algorithm can produce over all tie choices."""
    return _dispatch(G, "greedy_max", engine, budget, mode)


def greedy_run(G: GroupHandle, engine: str = "auto", budget: int | None = None,
               mode: str | None = None) -> BaseReport:
    """One greedy base, taking the least point of a longest orbit at each step."""
    return _dispatch(G, "greedy_run", engine, budget, mode)


@dataclass
class IrredundanceCheck:
    chain: list[int]
    failure: int | None

    @property
    def irredundant(self) -> bool:
        return self.failure is None

    @property
    def is_base(self) -> bool:
        return self.failure is None and self.chain[-1] == 1


def stabilizer_orders(G: GroupHandle, seq) -> list[int]:
    """``|G|, |G_{s1}|, |G_{(s1,s2)}|, ...`` for the points of ``seq``."""
    seq = [int(p) for p in seq]
    for p in seq:
        if not 0 <= p < G.degree:
            raise GroupError(f"point {p} outside the domain")
    if G.is_trivial():
        return [1] * (len(seq) + 1)
    if G.enumerable():
        elems = G.elements()
        out = [len(elems)]
        for p in seq:
            elems = [e for e in elems if e.apply(p) == p]
            out.append(len(elems))
        return out
    if G.degree > EXPLICIT_LIMIT:
        raise DegreeError(f"stabilizers at degree {G.degree} need an enumerable group")
    from .schreier import schreier_sims
    distinct = list(dict.fromkeys(seq))
    chain = schreier_sims(G, base_prefix=distinct)
    by_depth = chain.prefix_orders(len(distinct))
    out, seen = [by_depth[0]], []
    for p in seq:
        if p not in seen:
            seen.append(p)
        out.append(by_depth[len(seen)])
    return out


def verify_irredundant(G: GroupHandle, seq) -> IrredundanceCheck:
    """Stabilizer chain of ``seq`` and the first index where it fails to drop (or None)."""
    chain = stabilizer_orders(G, seq)
    for i in range(len(seq)):
        if chain[i + 1] == chain[i]:
            return IrredundanceCheck(chain, i)
    return IrredundanceCheck(chain, None)


def longest_orbit_choices(G: GroupHandle, seq) -> list[bool]:
    """For each point of ``seq``: does it lie in a longest orbit of the preceding stabilizer?"""
    out = []
    elems = G.elements()
    for p in seq:
        orbits = _orbit_sizes_from_elements(elems, G.degree)
        out.append(orbits[p] == max(orbits.values()))
        elems = [e for e in elems if e.apply(p) == p]
    return out


def _orbit_sizes_from_elements(elems, N) -> dict[int, int]:
    pts = np.arange(N, dtype=np.int64)
    imgs = np.stack([e.apply_array(pts) for e in elems])
    sizes = {}
    for p in range(N):
        sizes[p] = int(np.unique(imgs[:, p]).size)
    return sizes


# -- brute force oracle ------------------------------------------------------------------

def brute_force_statistics(G: GroupHandle, limit: int = 200) -> dict[str, int]:
    """``b``, ``I`` and greedy size by trying every point at every step (no orbit pruning)."""
    N = G.degree
    if N > limit:
        raise DegreeError(f"brute force limited to {limit} points")
    elems = G.elements()
    pts = np.arange(N, dtype=np.int64)
    imgs = np.stack([e.apply_array(pts) for e in elems])
    full = frozenset(range(len(elems)))
    memo: dict[frozenset, tuple[int, int, int]] = {}

    def stab(K, p):
        return frozenset(i for i in K if imgs[i, p] == p)

    def rec(K):
        if len(K) == 1:
            return (0, 0, 0)
        if K in memo:
            return memo[K]
        idx = sorted(K)
        orbit_len = [len(set(imgs[idx, p].tolist())) for p in range(N)]
        longest = max(orbit_len)
        b, irr, gr = None, -1, -1
        for p in range(N):
            S = stab(K, p)
            if len(S) == len(K):
                continue
            sb, si, sg = rec(S)
            b = 1 + sb if b is None else min(b, 1 + sb)
            irr = max(irr, 1 + si)
            if orbit_len[p] == longest:
                gr = max(gr, 1 + sg)
        memo[K] = (b, irr, gr)
        return memo[K]

    b, irr, gr = rec(full)
    return {"min_base": b, "max_irredundant": irr, "greedy_max": gr}


# -- inequalities and affine adjustment -----------------------------------------------------

def _is_subgroup(S: GroupHandle, G: GroupHandle) -> bool:
    keys = {e.key for e in G.elements()}
    return all(g.key in keys for g in S.generators)


def _is_normal(N: GroupHandle, G: GroupHandle) -> bool:
    if not _is_subgroup(N, G):
        return False
    keys = {e.key for e in N.elements()}
    return all((g.inverse() * n * g).key in keys for g in G.generators for n in N.generators)


def check_subgroup_inequalities(G: GroupHandle, S: GroupHandle, N: GroupHandle,
                                engine: str = "auto") -> dict:
    """``I(S) <= I(G)`` and ``I(G) <= I(N) + Omega(|G:N|)`` for ``S <= G`` and normal ``N``."""
    if not _is_subgroup(S, G):
        raise GroupError(f"{S.name} is not a subgroup of {G.name}")
    if not _is_normal(N, G):
        raise GroupError(f"{N.name} is not normal in {G.name}")
    iG = max_irredundant(G, engine)
    iS = max_irredundant(S, engine)
    iN = max_irredundant(N, engine)
    quotient_bound = omega(G.order // N.order)
    exact = iG.exact and iS.exact and iN.exact
    return {
        "G": G.name, "S": S.name, "N": N.name,
        "I(G)": iG.value, "I(S)": iS.value, "I(N)": iN.value,
        "Omega(|G:N|)": quotient_bound,
        "subgroup_holds": iS.value <= iG.value,
        "quotient_holds": iG.value <= iN.value + quotient_bound,
        "exact": exact,
    }


def affine_adjust(report: BaseReport, degree: int) -> BaseReport:
    """Statistic of the transitive affine group ``V : H`` from that of ``H = G_0``."""
    return BaseReport(report.statistic, f"V:{report.group}", [0] + report.points,
                      ["0"] + report.vectors, [degree * report.order_chain[0]] + report.order_chain,
                      report.exact, report.nodes, report.millis, report.engine)
