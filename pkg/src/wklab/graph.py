"""Simple undirected graphs on vertices 0..n-1 backed by integer bitmasks.

Every vertex subset is an ``int`` internally (bit v set iff v is a member).
:class:`VertexSet` is the public wrapper with set algebra and ascending
iteration; hot loops elsewhere in the package work on raw masks.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphInputError(ValueError):
    """Raised for malformed graph or vertex-set input."""


class FamilyError(GraphInputError):
    """Raised when a tuple of sets is not pairwise disjoint and independent."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


class VertexSet:
    """Immutable set of vertex ids with O(1) membership.

    Iteration is always in ascending vertex order.
    """

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        mask = 0
        for v in vertices:
            if v < 0:
                raise GraphInputError(f"negative vertex id {v}")
            mask |= 1 << v
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0:
            raise GraphInputError("vertex mask must be non-negative")
        vs = cls.__new__(cls)
        object.__setattr__(vs, "mask", mask)
        return vs

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __reduce__(self):
        return (VertexSet.from_mask, (self.mask,))

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return set(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("VertexSet", self.mask))

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask | _mask_of(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & _mask_of(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~_mask_of(other))

    def __xor__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask ^ _mask_of(other))

    def __le__(self, other: "VertexSet") -> bool:
        return self.mask & ~_mask_of(other) == 0

    def __ge__(self, other: "VertexSet") -> bool:
        return _mask_of(other) & ~self.mask == 0

    def issubset(self, other) -> bool:
        return self <= other

    def isdisjoint(self, other) -> bool:
        return self.mask & _mask_of(other) == 0

    def complement(self, n: int) -> "VertexSet":
        """Complement within the universe 0..n-1."""
        return VertexSet.from_mask(((1 << n) - 1) & ~self.mask)

    def max_vertex(self) -> int:
        return self.mask.bit_length() - 1

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"

    def to_list(self) -> list[int]:
        return list(self)


def _mask_of(s) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    return VertexSet(s).mask


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``nbr[v]`` is the open neighbourhood of v as a bitmask. Instances are
    immutable; use :meth:`from_edges` to build one.
    """

    __slots__ = ("n", "nbr", "_hash")

    def __init__(self, n: int, nbr: Sequence[int]):
        if n < 0:
            raise GraphInputError("vertex count must be non-negative")
        if len(nbr) != n:
            raise GraphInputError("need one neighbourhood per vertex")
        full = (1 << n) - 1
        for v, m in enumerate(nbr):
            if m & ~full:
                raise GraphInputError(f"neighbour of {v} out of range")
            if m >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
            for u in iter_bits(m):
                if not nbr[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "nbr", tuple(nbr))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __reduce__(self):
        return (Graph, (self.n, self.nbr))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbr = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
        return cls(n, nbr)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.from_mask(self.full_mask)

    @property
    def m(self) -> int:
        return sum(popcount(x) for x in self.nbr) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.nbr[u] >> (u + 1) << (u + 1))]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.nbr[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.nbr[v])

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet.from_mask(self.nbr[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        return VertexSet.from_mask(self.nbr[v] | 1 << v)

    def neighborhood_of_set(self, s) -> VertexSet:
        """Union of open neighbourhoods of the members of ``s``."""
        out = 0
        for v in iter_bits(self.check_set(s)):
            out |= self.nbr[v]
        return VertexSet.from_mask(out)

    def isolated_vertices(self) -> VertexSet:
        return VertexSet(v for v in range(self.n) if self.nbr[v] == 0)

    def check_set(self, s) -> int:
        """Return the mask of ``s``, raising if any id is outside ``0..n-1``."""
        mask = _mask_of(s)
        if mask & ~self.full_mask:
            raise GraphInputError(f"vertex set {VertexSet.from_mask(mask)} not within 0..{self.n - 1}")
        return mask

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.nbr == other.nbr

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.n, self.nbr))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class IndependentFamily:
    """Ordered tuple of pairwise disjoint independent vertex sets.

    Empty members are allowed.
    """

    sets: tuple[VertexSet, ...]

    def __init__(self, sets: Iterable):
        object.__setattr__(self, "sets", tuple(s if isinstance(s, VertexSet) else VertexSet(s) for s in sets))

    @classmethod
    def from_masks(cls, masks: Iterable[int]) -> "IndependentFamily":
        return cls(VertexSet.from_mask(m) for m in masks)

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __getitem__(self, i) -> VertexSet:
        return self.sets[i]

    def problems(self, g: Graph) -> list[str]:
        out = []
        for i, s in enumerate(self.sets):
            try:
                g.check_set(s)
            except GraphInputError as exc:
                out.append(f"set {i}: {exc}")
                continue
            if not is_independent(g, s):
                out.append(f"set {i} {s} is not independent")
        for i, j in combinations(range(len(self.sets)), 2):
            if not self.sets[i].isdisjoint(self.sets[j]):
                out.append(f"sets {i} and {j} intersect")
        return out

    def check(self, g: Graph) -> "IndependentFamily":
        problems = self.problems(g)
        if problems:
            raise FamilyError("; ".join(problems))
        return self

    def to_lists(self) -> list[list[int]]:
        return [s.to_list() for s in self.sets]

    def __repr__(self) -> str:
        return "(" + ", ".join(map(repr, self.sets)) + ")"


# -- independent sets ------------------------------------------------------


def _is_independent_mask(nbr: Sequence[int], mask: int) -> bool:
    for v in iter_bits(mask):
        if nbr[v] & mask:
            return False
    return True


def _dominated_mask(nbr: Sequence[int], mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= nbr[v]
    return out


def is_independent(g: Graph, s) -> bool:
    return _is_independent_mask(g.nbr, g.check_set(s))


def is_maximal_independent(g: Graph, s) -> bool:
    """True iff ``s`` is independent and dominates every other vertex."""
    mask = g.check_set(s)
    return _is_independent_mask(g.nbr, mask) and _dominated_mask(g.nbr, mask) == g.full_mask


def _maximal_is_masks(nbr: Sequence[int], universe: int) -> list[int]:
    # Bron-Kerbosch with Tomita pivoting on the complement graph.
    comp = [universe & ~(nbr[v] | 1 << v) for v in range(len(nbr))]
    out: list[int] = []
    stack = [(0, universe, 0)]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                out.append(r)
            continue
        px = p | x
        pivot = max(iter_bits(px), key=lambda u: popcount(p & comp[u]))
        for v in iter_bits(p & ~comp[pivot]):
            bit = 1 << v
            stack.append((r | bit, p & comp[v], x & comp[v]))
            p &= ~bit
            x |= bit
    out.sort()
    return out


def maximal_independent_masks(g: Graph) -> list[int]:
    """All maximal independent sets as masks, ascending by mask value."""
    return _maximal_is_masks(g.nbr, g.full_mask)


def enumerate_maximal_independent_sets(g: Graph) -> Iterator[VertexSet]:
    """Yield every maximal independent set once, ordered by bit pattern.

    The empty graph yields the empty set.
    """
    for m in maximal_independent_masks(g):
        yield VertexSet.from_mask(m)


def _alpha_mask(nbr: Sequence[int], mask: int, memo: dict[int, int]) -> int:
    if not mask:
        return 0
    hit = memo.get(mask)
    if hit is not None:
        return hit
    best_v, best_deg, low_v, low_deg = -1, -1, -1, 1 << 30
    for v in iter_bits(mask):
        d = popcount(nbr[v] & mask)
        if d > best_deg:
            best_v, best_deg = v, d
        if d < low_deg:
            low_v, low_deg = v, d
    if low_deg <= 1:
        # a vertex of degree <= 1 is in some maximum independent set
        res = 1 + _alpha_mask(nbr, mask & ~(nbr[low_v] | 1 << low_v), memo)
    else:
        res = max(
            _alpha_mask(nbr, mask & ~(1 << best_v), memo),
            1 + _alpha_mask(nbr, mask & ~(nbr[best_v] | 1 << best_v), memo),
        )
    memo[mask] = res
    return res


def alpha_of_mask(g: Graph, mask: int) -> int:
    """Independence number of the subgraph induced by ``mask``."""
    return _alpha_mask(g.nbr, mask, {})


def alpha(g: Graph) -> int:
    """Independence number; 0 for the empty graph."""
    return _alpha_mask(g.nbr, g.full_mask, {})


def beta(g: Graph) -> int:
    """Size of a smallest maximal independent set; 0 for the empty graph."""
    return min(popcount(m) for m in maximal_independent_masks(g))


def maximum_independent_masks(g: Graph) -> list[int]:
    masks = maximal_independent_masks(g)
    a = max(popcount(m) for m in masks)
    return [m for m in masks if popcount(m) == a]


def induced_subgraph(g: Graph, keep) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``keep``, relabelled monotonically.

    Returns the new graph and the old-to-new vertex map.
    """
    mask = g.check_set(keep)
    old = list(iter_bits(mask))
    index = {v: i for i, v in enumerate(old)}
    nbr = []
    for v in old:
        m = 0
        for u in iter_bits(g.nbr[v] & mask):
            m |= 1 << index[u]
        nbr.append(m)
    return Graph(len(old), nbr), index


# -- small named graphs ------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
