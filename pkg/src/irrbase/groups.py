"""Group elements acting on packed point codes, group handles and orbits.

Every element acts on the right: ``apply(g * h, x) == apply(h, apply(g, x))``.
Four element kinds share one small interface (``apply``, ``apply_array``,
``*``, ``inverse``, ``key``):

* :class:`Perm` -- explicit image tuple on ``n`` points;
* :class:`Mat` -- invertible matrix acting on ``F_q^d`` codes;
* :class:`Semilinear` -- ``v -> (alpha * v) ** (Q ** j)`` on ``GF(Q^d)``
  identified with ``F_Q^d`` through the polynomial basis;
* :class:`Wreath` -- imprimitive wreath element: per-block base elements
  followed by a permutation of the blocks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .algebra import Field, Matrix, factorize, identity_matrix, unpack

ELEMENT_LIMIT = 200_000
EXPLICIT_LIMIT = 1_000_000
PARTITION_LIMIT = 1 << 28

FORMAT_VERSION = "irrbase.group/1"


class GroupError(ValueError):
    pass


class DegreeError(GroupError):
    """A computation was requested at a degree beyond its configured limit."""


class GroupElement:
    degree: int

    def __mul__(self, other):
        raise NotImplementedError

    def inverse(self):
        raise NotImplementedError

    def apply(self, pt: int) -> int:
        raise NotImplementedError

    def apply_array(self, pts) -> np.ndarray:
        raise NotImplementedError

    @property
    def key(self):
        raise NotImplementedError

    def is_identity(self) -> bool:
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.identity_like()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def identity_like(self):
        raise NotImplementedError

    def table(self) -> np.ndarray:
        """Images of all points, as an int64 array."""
        return self.apply_array(np.arange(self.degree, dtype=np.int64))


class Perm(GroupElement):
    __slots__ = ("images", "degree", "_arr")

    def __init__(self, images):
        self.images = tuple(int(i) for i in images)
        self.degree = len(self.images)
        self._arr = None

    @classmethod
    def identity(cls, n: int) -> Perm:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, *cycles) -> Perm:
        """Build from 1-based cycles, e.g. ``Perm.from_cycles(4, (1, 2, 3, 4))``."""
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @property
    def key(self):
        return self.images

    @property
    def array(self) -> np.ndarray:
        if self._arr is None:
            self._arr = np.array(self.images, dtype=np.int64)
        return self._arr

    def apply(self, pt):
        return self.images[pt]

    def apply_array(self, pts):
        return self.array[np.asarray(pts, dtype=np.int64)]

    def __mul__(self, other: Perm) -> Perm:
        o = other.images
        return Perm([o[i] for i in self.images])

    def inverse(self) -> Perm:
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(inv)

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def identity_like(self):
        return Perm.identity(self.degree)

    def cycles(self) -> list[tuple]:
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen or self.images[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def to_json(self):
        return {"type": "perm", "images": list(self.images)}

    def __repr__(self):
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


class Mat(GroupElement):
    __slots__ = ("matrix", "degree")

    def __init__(self, matrix: Matrix):
        if matrix.rows != matrix.cols:
            raise GroupError("group matrices must be square")
        self.matrix = matrix
        self.degree = matrix.field.order ** matrix.rows

    @property
    def field(self) -> Field:
        return self.matrix.field

    @property
    def dim(self) -> int:
        return self.matrix.rows

    @property
    def key(self):
        return self.matrix.key

    def apply(self, pt):
        return self.matrix.apply(pt)

    def apply_array(self, pts):
        return self.matrix.apply_array(pts)

    def __mul__(self, other: Mat) -> Mat:
        return Mat(self.matrix @ other.matrix)

    def inverse(self) -> Mat:
        return Mat(self.matrix.inverse())

    def is_identity(self):
        return self.matrix.is_identity()

    def identity_like(self):
        return Mat(identity_matrix(self.field, self.dim))

    def to_json(self):
        return {"type": "mat", "rows": self.matrix.entries.tolist()}

    def __repr__(self):
        return f"Mat({self.matrix.entries.tolist()})"


class Semilinear(GroupElement):
    """``xi -> (alpha * xi) ** (Q ** j)`` on ``GF(Q^d)``, ``Q`` the base order."""

    __slots__ = ("ext", "alpha", "j", "degree")

    def __init__(self, ext: Field, alpha: int, j: int = 0):
        if alpha == 0:
            raise GroupError("semilinear multiplier must be non-zero")
        self.ext = ext
        self.alpha = int(alpha)
        self.j = j % ext.degree
        self.degree = ext.order

    @property
    def key(self):
        return (self.alpha, self.j)

    def _frob(self, x, j):
        return self.ext.pow(x, self.ext.base_order ** j)

    def apply(self, pt):
        return int(self._frob(self.ext.mul(self.alpha, pt), self.j))

    def apply_array(self, pts):
        pts = np.asarray(pts, dtype=np.int64)
        return np.asarray(self._frob(self.ext.mul(self.alpha, pts), self.j), dtype=np.int64)

    def __mul__(self, other: Semilinear) -> Semilinear:
        d = self.ext.degree
        a2 = self._frob(other.alpha, (-self.j) % d)
        return Semilinear(self.ext, self.ext.mul(a2, self.alpha), self.j + other.j)

    def inverse(self) -> Semilinear:
        return Semilinear(self.ext, self._frob(self.ext.inv(self.alpha), self.j), -self.j)

    def is_identity(self):
        return self.alpha == 1 and self.j == 0

    def identity_like(self):
        return Semilinear(self.ext, 1, 0)

    def to_json(self):
        return {"type": "semilinear", "alpha": self.alpha, "frobenius": self.j}

    def __repr__(self):
        return f"Semilinear(alpha={self.alpha}, j={self.j})"


class Wreath(GroupElement):
    """``(f_1, ..., f_k; pi)``: block ``i`` is mapped by ``f_i`` then moved to block ``pi(i)``.

    Block 0 holds the most significant digits of a code.
    """

    __slots__ = ("base", "top", "block_size", "blocks", "degree", "_tables", "_key")

    def __init__(self, base, top):
        self.base = tuple(base)
        self.top = tuple(int(t) for t in top)
        if len(self.base) != len(self.top):
            raise GroupError("wreath element needs one base element per block")
        self.blocks = len(self.top)
        self.block_size = self.base[0].degree
        self.degree = self.block_size ** self.blocks
        self._tables = None
        self._key = None

    @property
    def key(self):
        if self._key is None:
            self._key = (tuple(b.key for b in self.base), self.top)
        return self._key

    @property
    def tables(self) -> np.ndarray:
        if self._tables is None:
            self._tables = np.stack([b.table() for b in self.base]).astype(np.int64)
        return self._tables

    def _powers(self):
        return [self.block_size ** (self.blocks - 1 - i) for i in range(self.blocks)]

    def apply(self, pt):
        B = self.block_size
        pw = self._powers()
        tab = self.tables
        out = 0
        for i in range(self.blocks):
            x = (pt // pw[i]) % B
            out += int(tab[i, x]) * pw[self.top[i]]
        return out

    def apply_array(self, pts):
        pts = np.asarray(pts, dtype=np.int64)
        B = self.block_size
        pw = self._powers()
        out = np.zeros_like(pts)
        for i in range(self.blocks):
            out += self.tables[i][(pts // pw[i]) % B] * pw[self.top[i]]
        return out

    def __mul__(self, other: Wreath) -> Wreath:
        base = [self.base[i] * other.base[self.top[i]] for i in range(self.blocks)]
        top = [other.top[self.top[i]] for i in range(self.blocks)]
        return Wreath(base, top)

    def inverse(self) -> Wreath:
        inv_top = [0] * self.blocks
        for i, t in enumerate(self.top):
            inv_top[t] = i
        base = [self.base[inv_top[j]].inverse() for j in range(self.blocks)]
        return Wreath(base, inv_top)

    def is_identity(self):
        return all(t == i for i, t in enumerate(self.top)) and all(b.is_identity() for b in self.base)

    def identity_like(self):
        e = self.base[0].identity_like()
        return Wreath([e] * self.blocks, range(self.blocks))

    def to_json(self):
        return {"type": "wreath", "base": [b.to_json() for b in self.base], "top": list(self.top)}

    def __repr__(self):
        return f"Wreath({list(self.base)}, {self.top})"


@dataclass(frozen=True)
class ActionContext:
    """The domain ``{0, ..., degree - 1}``; for vector spaces, ``F_q^dim`` packed."""

    degree: int
    field: Field | None = None
    dim: int = 0
    blocks: int = 1
    block_size: int = 0

    def describe(self) -> dict:
        d = {"degree": self.degree, "dim": self.dim, "blocks": self.blocks,
             "block_size": self.block_size or self.degree}
        if self.field is not None:
            d["field"] = self.field.describe()
        return d

    def vector(self, code: int) -> tuple | None:
        if self.field is None or not self.dim:
            return None
        return unpack(self.field.order, code, self.dim)

    def vector_str(self, code: int) -> str:
        v = self.vector(code)
        if v is None:
            return str(code + 1)
        return "(" + ",".join(self.field.element_str(x) for x in v) + ")"


def apply(g: GroupElement, pt: int, ctx: ActionContext | None = None) -> int:
    if ctx is not None:
        if g.degree != ctx.degree:
            raise GroupError(f"element acts on {g.degree} points, context has {ctx.degree}")
        if not 0 <= pt < ctx.degree:
            raise GroupError(f"point {pt} outside the domain")
    return g.apply(pt)


class GroupHandle:
    """Generators plus their action and, when known, the exact order.

    ``linear`` marks groups acting ``F``-linearly on ``ctx.field ** ctx.dim``.
    Derived data (elements, stabilizer chain, computed order) is cached on
    first use; the handle is otherwise immutable.
    """

    def __init__(self, generators, ctx: ActionContext, identity: GroupElement,
                 name: str = "", order: int | None = None, linear: bool = False,
                 meta: dict | None = None):
        self.generators = tuple(g for g in generators if not g.is_identity())
        self.ctx = ctx
        self.identity = identity
        self.name = name
        self.declared_order = order
        self.linear = linear
        self.meta = dict(meta or {})
        for g in self.generators:
            if g.degree != ctx.degree:
                raise GroupError("generator degree does not match the action context")

    @property
    def degree(self) -> int:
        return self.ctx.degree

    @cached_property
    def order(self) -> int:
        if self.declared_order is not None:
            return self.declared_order
        if self.degree <= EXPLICIT_LIMIT:
            from .schreier import schreier_sims
            return schreier_sims(self).order()
        return len(self.elements())

    def is_trivial(self) -> bool:
        return not self.generators

    def elements(self, limit: int = ELEMENT_LIMIT) -> list[GroupElement]:
        """All elements, identity first, in breadth-first order over the generators."""
        cached = self.__dict__.get("_elements")
        if cached is not None:
            return cached
        if self.declared_order is not None and self.declared_order > limit:
            raise GroupError(f"group order {self.declared_order} exceeds the element limit {limit}")
        elems = [self.identity]
        seen = {self.identity.key}
        i = 0
        while i < len(elems):
            e = elems[i]
            for s in self.generators:
                h = e * s
                k = h.key
                if k not in seen:
                    seen.add(k)
                    elems.append(h)
                    if len(elems) > limit:
                        raise GroupError(f"group has more than {limit} elements")
            i += 1
        self.__dict__["_elements"] = elems
        return elems

    def enumerable(self, limit: int = ELEMENT_LIMIT) -> bool:
        if "_elements" in self.__dict__:
            return True
        if self.declared_order is not None:
            return self.declared_order <= limit
        try:
            self.elements(limit)
        except GroupError:
            return False
        return True

    def chain(self):
        if "_chain" not in self.__dict__:
            from .schreier import schreier_sims
            self.__dict__["_chain"] = schreier_sims(self)
        return self.__dict__["_chain"]

    def perm_tables(self) -> list[np.ndarray]:
        """Explicit images of the generators (degree must be within the explicit limit)."""
        if self.degree > EXPLICIT_LIMIT:
            raise DegreeError(f"degree {self.degree} exceeds explicit limit {EXPLICIT_LIMIT}")
        if "_perm_tables" not in self.__dict__:
            self.__dict__["_perm_tables"] = [g.table() for g in self.generators]
        return self.__dict__["_perm_tables"]

    def subgroup(self, generators, name: str = "", order: int | None = None) -> GroupHandle:
        return GroupHandle(generators, self.ctx, self.identity, name=name, order=order,
                           linear=self.linear, meta={"parent": self.name})

    def to_json(self) -> dict:
        return {
            "format": FORMAT_VERSION,
            "name": self.name,
            "context": self.ctx.describe(),
            "order": str(self.order),
            "linear": self.linear,
            "generators": [g.to_json() for g in self.generators],
        }

    def __repr__(self):
        return f"GroupHandle({self.name or '?'}, degree={self.degree})"


def dumps_group(G: GroupHandle) -> str:
    return json.dumps(G.to_json(), sort_keys=True)


def perm_group(gens, n: int, name: str = "", order: int | None = None) -> GroupHandle:
    return GroupHandle([g if isinstance(g, Perm) else Perm(g) for g in gens],
                       ActionContext(degree=n, block_size=n), Perm.identity(n),
                       name=name, order=order)


# -- orbits -----------------------------------------------------------------

@dataclass
class Orbit:
    points: frozenset
    seed: int

    @property
    def size(self) -> int:
        return len(self.points)


def orbit(G: GroupHandle, seed: int) -> Orbit:
    """Breadth-first closure of ``seed`` under the generators."""
    if not 0 <= seed < G.degree:
        raise GroupError("seed outside the domain")
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for x in frontier:
            for g in G.generators:
                y = g.apply(x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return Orbit(frozenset(seen), seed)


def kernel_tables(G: GroupHandle) -> tuple[np.ndarray, np.ndarray, int, int]:
    """Generator data for the orbit kernels: ``(tables, tops, block_size, blocks)``.

    Wreath generators with a common block structure stay structured; anything
    else is expanded to explicit images (one block of the full degree).
    """
    gens = G.generators
    if gens and all(isinstance(g, Wreath) for g in gens) and \
            len({(g.block_size, g.blocks) for g in gens}) == 1:
        B, k = gens[0].block_size, gens[0].blocks
        tables = np.stack([g.tables for g in gens]).astype(np.int32)
        tops = np.array([g.top for g in gens], dtype=np.int32)
        return tables, tops, B, k
    N = G.degree
    if N > EXPLICIT_LIMIT:
        raise DegreeError(f"degree {N} needs structured generators for orbit enumeration")
    if gens:
        tables = np.stack([t for t in G.perm_tables()])[:, None, :].astype(np.int32)
    else:
        tables = np.zeros((0, 1, N), dtype=np.int32)
    tops = np.zeros((len(gens), 1), dtype=np.int32)
    return tables, tops, N, 1


def orbit_partition(G: GroupHandle, threads: int = 1) -> list[tuple[int, int]]:
    """``(least point, size)`` for every orbit, ordered by least point."""
    if G.degree > PARTITION_LIMIT:
        raise DegreeError(f"domain of {G.degree} points is too large for a visited set")
    from .kernels import orbit_labels
    tables, tops, B, k = kernel_tables(G)
    _, reps, sizes = orbit_labels(tables, tops, B, k, threads=threads)
    return list(zip(reps, sizes))


# -- counting utilities -------------------------------------------------------

def omega(n: int) -> int:
    """Number of prime divisors of ``n`` counted with multiplicity."""
    if n < 1:
        raise ValueError("omega needs a positive integer")
    return sum(factorize(n).values()) if n > 1 else 0


def subgroup_chain_bound(G: GroupHandle) -> int:
    """``Omega(|G|)``, an upper bound for the longest subgroup chain of ``G``."""
    return omega(G.order)


def small_generating_set(elements: list[GroupElement], identity: GroupElement) -> list[GroupElement]:
    """A few elements generating the same group as ``elements`` (which must be a group)."""
    gens: list[GroupElement] = []
    span = {identity.key: identity}
    target = len({e.key for e in elements})
    for e in elements:
        if len(span) == target:
            break
        if e.key in span:
            continue
        gens.append(e)
        frontier = list(span.values())
        i = 0
        while i < len(frontier):
            x = frontier[i]
            for s in gens:
                y = x * s
                if y.key not in span:
                    span[y.key] = y
                    frontier.append(y)
            i += 1
    return gens
