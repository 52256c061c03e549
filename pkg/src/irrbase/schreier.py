"""Schreier-Sims stabilizer chains over explicit permutation arrays.

Permutations are int32 numpy arrays of images; ``a * b`` (apply ``a`` first)
is ``b[a]``.  Transversals are stored as Schreier vectors.  A seeded random
sifting phase builds most of the chain quickly, then every Schreier generator
is sifted deterministically, so the finished chain is exact whatever the seed.
"""

from __future__ import annotations

import random

import numpy as np

from .groups import EXPLICIT_LIMIT, DegreeError, GroupHandle, Perm


def _inverse(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size, dtype=p.dtype)
    return inv


class _Level:
    __slots__ = ("point", "gens", "invs", "vec", "orbit")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.invs: list[np.ndarray] = []
        self.vec: dict[int, int] = {}
        self.orbit: list[int] = []
        self._rebuild()

    def add(self, g: np.ndarray):
        self.gens.append(g)
        self.invs.append(_inverse(g))
        self._rebuild()

    def _rebuild(self):
        vec = {self.point: -1}
        orb = [self.point]
        i = 0
        while i < len(orb):
            x = orb[i]
            for t, g in enumerate(self.gens):
                y = int(g[x])
                if y not in vec:
                    vec[y] = t
                    orb.append(y)
            i += 1
        self.vec, self.orbit = vec, orb

    def unwind(self, g: np.ndarray) -> np.ndarray | None:
        """``g * u^-1`` where ``u`` is the transversal element for ``point^g``; None if off-orbit."""
        y = int(g[self.point])
        if y not in self.vec:
            return None
        while y != self.point:
            t = self.vec[y]
            inv = self.invs[t]
            g = inv[g]
            y = int(inv[y])
        return g

    def transversal(self, y: int) -> np.ndarray:
        word = []
        while y != self.point:
            t = self.vec[y]
            word.append(t)
            y = int(self.invs[t][y])
        u = None
        for t in reversed(word):
            u = self.gens[t].copy() if u is None else self.gens[t][u]
        return u


class StabilizerChain:
    """Base, per-level Schreier vectors and strong generators.

    Level ``i`` holds generators of the pointwise stabilizer of
    ``base[:i]``; its orbit is the orbit of ``base[i]`` under them.
    """

    def __init__(self, degree: int, levels: list[_Level]):
        self.degree = degree
        self._levels = levels
        self._ident = np.arange(degree, dtype=np.int32)

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self._levels]

    @property
    def orbit_sizes(self) -> list[int]:
        return [len(lv.orbit) for lv in self._levels]

    def level_generators(self, i: int) -> list[np.ndarray]:
        if i >= len(self._levels):
            return []
        return list(self._levels[i].gens)

    def orbit_of_level(self, i: int) -> list[int]:
        return list(self._levels[i].orbit)

    def order(self) -> int:
        out = 1
        for s in self.orbit_sizes:
            out *= s
        return out

    def stabilizer_order(self, depth: int) -> int:
        """Order of the pointwise stabilizer of ``base[:depth]``."""
        out = 1
        for s in self.orbit_sizes[depth:]:
            out *= s
        return out

    def prefix_orders(self, depth: int) -> list[int]:
        return [self.stabilizer_order(i) for i in range(depth + 1)]

    def strip(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        g = np.asarray(g, dtype=np.int32)
        for i in range(start, len(self._levels)):
            h = self._levels[i].unwind(g)
            if h is None:
                return g, i
            g = h
        return g, len(self._levels)

    def contains(self, g) -> bool:
        r, i = self.strip(g)
        return i == len(self._levels) and np.array_equal(r, self._ident)

    def random_element(self, rng: random.Random) -> np.ndarray:
        g = self._ident.copy()
        for lv in reversed(self._levels):
            u = lv.transversal(rng.choice(lv.orbit))
            if u is not None:
                g = u[g]
        return g


def _least_moved(g: np.ndarray) -> int:
    moved = np.flatnonzero(g != np.arange(g.size, dtype=g.dtype))
    return int(moved[0]) if moved.size else -1


def _is_identity(g: np.ndarray) -> bool:
    return _least_moved(g) < 0


def chain_from_permutations(perms, degree: int, base_prefix=(), seed: int = 0,
                            random_rounds: int = 20) -> StabilizerChain:
    gens = [np.asarray(p, dtype=np.int32) for p in perms]
    gens = [g for g in gens if not _is_identity(g)]
    levels: list[_Level] = []
    seen = set()
    for b in base_prefix:
        if b in seen:
            raise ValueError(f"repeated base point {b}")
        seen.add(b)
        levels.append(_Level(int(b)))
    for g in gens:
        if all(int(g[lv.point]) == lv.point for lv in levels):
            levels.append(_Level(_least_moved(g)))
    for g in gens:
        for lv in levels:
            lv.add(g)
            if int(g[lv.point]) != lv.point:
                break
    chain = StabilizerChain(degree, levels)

    def absorb(h: np.ndarray, start: int) -> int | None:
        r, j = chain.strip(h, start)
        if j == len(levels) and _is_identity(r):
            return None
        if j == len(levels):
            levels.append(_Level(_least_moved(r)))
        for lv in levels[start:j + 1]:
            lv.add(r)
        return j

    if gens:
        rng = random.Random(seed)
        quiet = 0
        while quiet < random_rounds:
            g = gens[rng.randrange(len(gens))]
            for _ in range(rng.randrange(1, 8)):
                g = gens[rng.randrange(len(gens))][g]
            quiet = quiet + 1 if absorb(g, 0) is None else 0

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        restart = None
        for x in list(lv.orbit):
            ux = lv.transversal(x)
            for s in list(lv.gens):
                h = s if ux is None else s[ux]
                h = lv.unwind(h)
                if h is None or _is_identity(h):
                    continue
                j = absorb(h, i + 1)
                if j is not None:
                    restart = j
                    break
            if restart is not None:
                break
        i = restart if restart is not None else i - 1
    return chain


def schreier_sims(G: GroupHandle, base_prefix=(), seed: int = 0) -> StabilizerChain:
    """Verified stabilizer chain for ``G`` whose base starts with ``base_prefix``."""
    if G.degree > EXPLICIT_LIMIT:
        raise DegreeError(f"degree {G.degree} exceeds the stabilizer-chain limit {EXPLICIT_LIMIT}")
    return chain_from_permutations(G.perm_tables(), G.degree, base_prefix, seed)


def pointwise_stabilizer(G: GroupHandle, pts) -> GroupHandle:
    """The subgroup fixing every point of ``pts``, with exact order.

    Enumerable groups keep their element type; otherwise the generators come
    from a stabilizer chain as explicit permutations.
    """
    pts = list(dict.fromkeys(int(p) for p in pts))
    if G.enumerable():
        elems = [e for e in G.elements() if all(e.apply(p) == p for p in pts)]
        from .groups import small_generating_set
        gens = small_generating_set(elems, G.identity)
        return G.subgroup(gens, name=f"{G.name}_{tuple(pts)}", order=len(elems))
    chain = schreier_sims(G, base_prefix=pts)
    depth = len(pts)
    gens = [Perm(g.tolist()) for g in chain.level_generators(depth)]
    H = GroupHandle(gens, G.ctx, Perm.identity(G.degree), name=f"{G.name}_{tuple(pts)}",
                    order=chain.stabilizer_order(depth), linear=G.linear)
    return H
