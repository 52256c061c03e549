"""Slow reference implementations used only by the tests.

Everything here works on plain tuples of images, closed under composition
from the generator tables, so it shares no code with the search engine.
"""

from __future__ import annotations

from functools import lru_cache


def close_generators(tables, n: int) -> list[tuple[int, ...]]:
    """All products of the generator image tables on ``n`` points (left factor first)."""
    gens = [tuple(int(x) for x in t) for t in tables]
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[g[i]] for i in range(n))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


def statistics(elements: list[tuple[int, ...]]) -> dict[str, int]:
    """Minimum base, maximum irredundant base and greedy base sizes by exhaustion."""
    n = len(elements[0])
    full = frozenset(elements)

    def stab(K, p):
        return frozenset(g for g in K if g[p] == p)

    @lru_cache(maxsize=None)
    def rec(K):
        if len(K) == 1:
            return 0, 0, 0
        orbit = [len({g[p] for g in K}) for p in range(n)]
        top = max(orbit)
        b, irr, gr = 10 ** 9, 0, 0
        for p in range(n):
            S = stab(K, p)
            if len(S) == len(K):
                continue
            sb, si, sg = rec(S)
            b = min(b, sb + 1)
            irr = max(irr, si + 1)
            if orbit[p] == top:
                gr = max(gr, sg + 1)
        return b, irr, gr

    b, irr, gr = rec(full)
    return {"min_base": b, "max_irredundant": irr, "greedy_max": gr}


def stabilizer_chain_orders(elements, points) -> list[int]:
    K = list(elements)
    out = [len(K)]
    for p in points:
        K = [g for g in K if g[p] == p]
        out.append(len(K))
    return out


def omega(n: int) -> int:
    count, d = 0, 2
    while d * d <= n:
        while n % d == 0:
            n //= d
            count += 1
        d += 1
    return count + (1 if n > 1 else 0)
