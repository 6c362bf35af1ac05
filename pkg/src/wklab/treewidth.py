"""Tree decompositions and the alpha / beta dynamic programs over them.

Decompositions come from greedy elimination orderings (min-fill by default)
or from PACE-style ``.td`` files. Both DPs run on a nice decomposition and
touch at most ``2**(w+1)`` (alpha) or ``3**(w+1)`` (beta) states per node.
Comparing the two numbers decides well-coveredness.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphInputError, iter_bits, popcount


class DecompositionError(GraphInputError):
    def __init__(self, message: str, violations: Sequence[str] = ()):
        super().__init__(message + ("".join(f"\n  - {v}" for v in violations)))
        self.violations = list(violations)


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags (as vertex bitmasks) on tree nodes ``0..len(bags)-1``, rooted at node 0."""

    bags: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __init__(self, bags: Sequence, edges: Sequence[tuple[int, int]]):
        object.__setattr__(self, "bags", tuple(b if isinstance(b, int) else _mask(b) for b in bags))
        object.__setattr__(self, "edges", tuple((int(a), int(b)) for a, b in edges))

    @property
    def width(self) -> int:
        return max((popcount(b) for b in self.bags), default=0) - 1

    def bag(self, t: int) -> list[int]:
        return list(iter_bits(self.bags[t]))

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def validate_decomposition(g: Graph, td: TreeDecomposition) -> tuple[bool, list[str]]:
    """Check the tree shape, edge coverage and vertex connectivity.

    Returns ``(ok, violations)``.
    """
    problems = []
    nodes = len(td.bags)
    if nodes == 0:
        return False, ["decomposition has no nodes"]
    for t, b in enumerate(td.bags):
        if b & ~g.full_mask:
            problems.append(f"bag {t} has vertices outside 0..{g.n - 1}")
    seen_edges = set()
    for a, b in td.edges:
        if not (0 <= a < nodes and 0 <= b < nodes):
            problems.append(f"tree edge ({a}, {b}) refers to a missing node")
            continue
        if a == b:
            problems.append(f"tree edge ({a}, {b}) is a loop")
        key = (min(a, b), max(a, b))
        if key in seen_edges:
            problems.append(f"tree edge {key} repeated")
        seen_edges.add(key)
    if problems:
        return False, problems
    adj = td.adjacency()
    reach = {0}
    queue = deque([0])
    while queue:
        t = queue.popleft()
        for u in adj[t]:
            if u not in reach:
                reach.add(u)
                queue.append(u)
    if len(reach) != nodes or len(td.edges) != nodes - 1:
        problems.append("tree edges do not form a tree")
        return False, problems
    covered = 0
    for b in td.bags:
        covered |= b
    for v in iter_bits(g.full_mask & ~covered):
        problems.append(f"vertex {v} is in no bag")
    for u, v in g.edges():
        pair = 1 << u | 1 << v
        if not any(b & pair == pair for b in td.bags):
            problems.append(f"edge {u}-{v} is in no bag")
    for v in iter_bits(g.full_mask & covered):
        holders = [t for t, b in enumerate(td.bags) if b >> v & 1]
        start = holders[0]
        hold = set(holders)
        got = {start}
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for u in adj[t]:
                if u in hold and u not in got:
                    got.add(u)
                    queue.append(u)
        if len(got) != len(hold):
            problems.append(f"nodes holding vertex {v} are not connected")
    return not problems, problems


def require_valid(g: Graph, td: TreeDecomposition) -> None:
    ok, problems = validate_decomposition(g, td)
    if not ok:
        raise DecompositionError("invalid tree decomposition", problems)


# -- heuristic decompositions -------------------------------------------------


def elimination_decomposition(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Decomposition induced by eliminating vertices in ``order``.

    Node 0 holds the bag of the last eliminated vertex and is the root.
    """
    n = g.n
    if sorted(order) != list(range(n)):
        raise GraphInputError("order must be a permutation of the vertices")
    if n == 0:
        return TreeDecomposition([0], [])
    pos = {v: i for i, v in enumerate(order)}
    nbr = list(g.nbr)
    bags = {}
    for v in order:
        later = nbr[v]
        bags[v] = later | 1 << v
        for u in iter_bits(later):
            nbr[u] |= later & ~(1 << u)
            nbr[u] &= ~(1 << v)
    node_of = {v: n - 1 - pos[v] for v in order}
    edges = []
    prev_root = None
    for v in reversed(order):
        later = bags[v] & ~(1 << v)
        if later:
            parent = min(iter_bits(later), key=pos.__getitem__)
            edges.append((node_of[parent], node_of[v]))
        else:
            if prev_root is not None:
                edges.append((node_of[prev_root], node_of[v]))
            prev_root = v
    out_bags = [0] * n
    for v in order:
        out_bags[node_of[v]] = bags[v]
    return TreeDecomposition(out_bags, sorted(edges))


def _greedy_order(g: Graph, score) -> list[int]:
    nbr = list(g.nbr)
    alive = g.full_mask
    order = []
    while alive:
        v = min(iter_bits(alive), key=lambda x: (score(nbr, x), x))
        later = nbr[v]
        for u in iter_bits(later):
            nbr[u] = (nbr[u] | later) & ~(1 << u) & ~(1 << v)
        nbr[v] = 0
        alive &= ~(1 << v)
        order.append(v)
    return order


def _fill_in(nbr: Sequence[int], v: int) -> int:
    ns = list(iter_bits(nbr[v]))
    missing = 0
    for u in ns:
        missing += popcount(nbr[v] & ~nbr[u] & ~(1 << u) & ~((1 << (u + 1)) - 1))
    return missing


def min_fill_order(g: Graph) -> list[int]:
    """Greedy min-fill elimination order, ties broken by degree then id."""
    return _greedy_order(g, lambda nbr, v: (_fill_in(nbr, v), popcount(nbr[v])))


def min_degree_order(g: Graph) -> list[int]:
    return _greedy_order(g, lambda nbr, v: popcount(nbr[v]))


def min_fill_decomposition(g: Graph) -> TreeDecomposition:
    td = elimination_decomposition(g, min_fill_order(g))
    require_valid(g, td)
    return td


def min_degree_decomposition(g: Graph) -> TreeDecomposition:
    td = elimination_decomposition(g, min_degree_order(g))
    require_valid(g, td)
    return td


def reroot(td: TreeDecomposition, node: int) -> TreeDecomposition:
    """Same decomposition with ``node`` renumbered to 0 (and so made the root)."""
    perm = list(range(len(td.bags)))
    perm[0], perm[node] = perm[node], perm[0]
    bags = [td.bags[perm[i]] for i in range(len(td.bags))]
    edges = sorted((perm[a], perm[b]) for a, b in td.edges)
    return TreeDecomposition(bags, edges)


# -- nice decompositions ------------------------------------------------------

LEAF, INTRODUCE, FORGET, JOIN = "leaf", "introduce", "forget", "join"


@dataclass
class NiceTreeDecomposition:
    """Nice decomposition stored in post-order: children precede parents.

    The last node is the root and has an empty bag, like every leaf.
    """

    kind: list[str] = field(default_factory=list)
    bags: list[int] = field(default_factory=list)
    vertex: list[int] = field(default_factory=list)
    children: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def root(self) -> int:
        return len(self.kind) - 1

    @property
    def width(self) -> int:
        return max((popcount(b) for b in self.bags), default=0) - 1

    def __len__(self) -> int:
        return len(self.kind)

    def _add(self, kind: str, bag: int, vertex: int, children: tuple[int, ...]) -> int:
        self.kind.append(kind)
        self.bags.append(bag)
        self.vertex.append(vertex)
        self.children.append(children)
        return len(self.kind) - 1

    def as_tree_decomposition(self) -> TreeDecomposition:
        """Plain decomposition with the root renumbered to node 0."""
        order = list(range(len(self.kind) - 1, -1, -1))
        index = {t: i for i, t in enumerate(order)}
        edges = sorted((index[p], index[c]) for p in range(len(self.kind)) for c in self.children[p])
        return TreeDecomposition([self.bags[t] for t in order], edges)

    def structure_problems(self) -> list[str]:
        out = []
        for t, kind in enumerate(self.kind):
            ch = self.children[t]
            bag = self.bags[t]
            if any(c >= t for c in ch):
                out.append(f"node {t} is not after its children")
                continue
            if kind == LEAF:
                if ch or bag:
                    out.append(f"leaf {t} must be childless with an empty bag")
            elif kind == INTRODUCE:
                v = self.vertex[t]
                if len(ch) != 1 or bag != self.bags[ch[0]] | 1 << v or self.bags[ch[0]] >> v & 1:
                    out.append(f"introduce node {t} does not add exactly vertex {v}")
            elif kind == FORGET:
                v = self.vertex[t]
                if len(ch) != 1 or bag != self.bags[ch[0]] & ~(1 << v) or not self.bags[ch[0]] >> v & 1:
                    out.append(f"forget node {t} does not drop exactly vertex {v}")
            elif kind == JOIN:
                if len(ch) != 2 or any(self.bags[c] != bag for c in ch):
                    out.append(f"join node {t} needs two children with identical bags")
            else:
                out.append(f"node {t} has unknown kind {kind!r}")
        if self.kind and self.bags[self.root]:
            out.append("root bag must be empty")
        return out


def _rooted_children(td: TreeDecomposition) -> tuple[list[list[int]], list[int]]:
    adj = td.adjacency()
    children: list[list[int]] = [[] for _ in td.bags]
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        t = order[i]
        i += 1
        for u in sorted(adj[t]):
            if u not in seen:
                seen.add(u)
                children[t].append(u)
                order.append(u)
    return children, order


def to_nice(td: TreeDecomposition, g: Graph | None = None) -> NiceTreeDecomposition:
    """Convert to nice form rooted at node 0, keeping the width.

    If ``g`` is given, the input is validated against it first.
    """
    if g is not None:
        require_valid(g, td)
    elif not td.bags:
        raise DecompositionError("decomposition has no nodes")
    children, bfs = _rooted_children(td)
    if len(bfs) != len(td.bags) or len(td.edges) != len(td.bags) - 1:
        raise DecompositionError("tree edges do not form a tree")
    nice = NiceTreeDecomposition()

    def walk(cur: int, cur_bag: int, target: int) -> int:
        for v in iter_bits(cur_bag & ~target):
            cur_bag &= ~(1 << v)
            cur = nice._add(FORGET, cur_bag, v, (cur,))
        for v in iter_bits(target & ~cur_bag):
            cur_bag |= 1 << v
            cur = nice._add(INTRODUCE, cur_bag, v, (cur,))
        return cur

    top: dict[int, int] = {}
    for t in reversed(bfs):
        bag = td.bags[t]
        if not children[t]:
            top[t] = walk(nice._add(LEAF, 0, -1, ()), 0, bag)
            continue
        subs = [walk(top[c], td.bags[c], bag) for c in children[t]]
        cur = subs[0]
        for other in subs[1:]:
            cur = nice._add(JOIN, bag, -1, (cur, other))
        top[t] = cur
    walk(top[0], td.bags[0], 0)
    return nice


def _check_nice(g: Graph, ntd: NiceTreeDecomposition) -> None:
    problems = ntd.structure_problems()
    if problems:
        raise DecompositionError("not a nice tree decomposition", problems)
    require_valid(g, ntd.as_tree_decomposition())


# -- dynamic programs ---------------------------------------------------------


def dp_alpha(g: Graph, ntd: NiceTreeDecomposition, *, table_sizes: list[int] | None = None) -> int:
    """Independence number by DP over independent subsets of each bag."""
    _check_nice(g, ntd)
    nbr = g.nbr
    tables: list[dict[int, int] | None] = [None] * len(ntd)
    for t, kind in enumerate(ntd.kind):
        ch = ntd.children[t]
        if kind == LEAF:
            tab = {0: 0}
        elif kind == INTRODUCE:
            v = ntd.vertex[t]
            bit = 1 << v
            tab = {}
            for s, val in tables[ch[0]].items():
                tab[s] = val
                if not nbr[v] & s:
                    tab[s | bit] = val + 1
        elif kind == FORGET:
            keep = ~(1 << ntd.vertex[t])
            tab = {}
            for s, val in tables[ch[0]].items():
                key = s & keep
                if tab.get(key, -1) < val:
                    tab[key] = val
        else:
            left, right = tables[ch[0]], tables[ch[1]]
            tab = {s: val + right[s] - popcount(s) for s, val in left.items() if s in right}
        for c in ch:
            tables[c] = None
        tables[t] = tab
        if table_sizes is not None:
            table_sizes.append(len(tab))
    return tables[ntd.root][0]


def dp_beta(g: Graph, ntd: NiceTreeDecomposition, *, table_sizes: list[int] | None = None) -> int:
    """Independent domination number (smallest maximal independent set).

    State per bag: the chosen vertices I and the unchosen vertices D that are
    already dominated; the rest of the bag is unchosen and undominated and
    may not be forgotten.
    """
    _check_nice(g, ntd)
    nbr = g.nbr
    tables: list[dict[tuple[int, int], int] | None] = [None] * len(ntd)
    for t, kind in enumerate(ntd.kind):
        ch = ntd.children[t]
        if kind == LEAF:
            tab = {(0, 0): 0}
        elif kind == INTRODUCE:
            v = ntd.vertex[t]
            bit = 1 << v
            child_bag = ntd.bags[ch[0]]
            tab = {}
            for (i, d), val in tables[ch[0]].items():
                if nbr[v] & i:
                    key = (i, d | bit)
                    if tab.get(key, 1 << 30) > val:
                        tab[key] = val
                else:
                    key = (i, d)
                    if tab.get(key, 1 << 30) > val:
                        tab[key] = val
                    key = (i | bit, d | (nbr[v] & child_bag))
                    if tab.get(key, 1 << 30) > val + 1:
                        tab[key] = val + 1
        elif kind == FORGET:
            bit = 1 << ntd.vertex[t]
            tab = {}
            for (i, d), val in tables[ch[0]].items():
                if i & bit:
                    key = (i & ~bit, d)
                elif d & bit:
                    key = (i, d & ~bit)
                else:
                    continue
                if tab.get(key, 1 << 30) > val:
                    tab[key] = val
        else:
            by_i: dict[int, list[tuple[int, int]]] = {}
            for (i, d), val in tables[ch[1]].items():
                by_i.setdefault(i, []).append((d, val))
            tab = {}
            for (i, d1), v1 in tables[ch[0]].items():
                size = popcount(i)
                for d2, v2 in by_i.get(i, ()):
                    key = (i, d1 | d2)
                    val = v1 + v2 - size
                    if tab.get(key, 1 << 30) > val:
                        tab[key] = val
        for c in ch:
            tables[c] = None
        tables[t] = tab
        if table_sizes is not None:
            table_sizes.append(len(tab))
    return tables[ntd.root][(0, 0)]


@dataclass
class FptResult:
    width: int
    alpha: int
    beta: int

    @property
    def well_covered(self) -> bool:
        return self.alpha == self.beta


def fpt_analysis(g: Graph, td: TreeDecomposition | None = None) -> FptResult:
    if td is None:
        td = min_fill_decomposition(g)
    else:
        require_valid(g, td)
    ntd = to_nice(td)
    return FptResult(td.width, dp_alpha(g, ntd), dp_beta(g, ntd))


def well_covered_fpt(g: Graph, td: TreeDecomposition | None = None) -> bool:
    """Well-coveredness via alpha == beta over one nice decomposition."""
    return fpt_analysis(g, td).well_covered


# -- PACE .td format ----------------------------------------------------------


def parse_td(text: str) -> TreeDecomposition:
    """Parse ``s td <nodes> <max bag size> <n>`` / ``b <id> <v>...`` / ``<id> <id>`` (1-based)."""
    header = None
    bags: dict[int, int] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "s":
                if len(parts) != 5 or parts[1] != "td" or header is not None:
                    raise DecompositionError(f"line {lineno}: malformed solution line")
                header = tuple(int(x) for x in parts[2:])
            elif parts[0] == "b":
                if header is None:
                    raise DecompositionError(f"line {lineno}: bag before 's td' line")
                node = int(parts[1])
                if not 1 <= node <= header[0]:
                    raise DecompositionError(f"line {lineno}: bag id {node} out of range")
                if node in bags:
                    raise DecompositionError(f"line {lineno}: bag {node} repeated")
                verts = [int(x) for x in parts[2:]]
                if any(not 1 <= v <= header[2] for v in verts):
                    raise DecompositionError(f"line {lineno}: vertex out of range 1..{header[2]}")
                bags[node] = _mask(v - 1 for v in verts)
            else:
                if header is None or len(parts) != 2:
                    raise DecompositionError(f"line {lineno}: malformed tree edge")
                edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
        except ValueError as exc:
            if isinstance(exc, DecompositionError):
                raise
            raise DecompositionError(f"line {lineno}: non-integer token") from None
    if header is None:
        raise DecompositionError("missing 's td' line")
    count = header[0]
    missing = [i for i in range(1, count + 1) if i not in bags]
    if missing:
        raise DecompositionError(f"bags missing for nodes {missing}")
    return TreeDecomposition([bags[i] for i in range(1, count + 1)], edges)


def emit_td(td: TreeDecomposition, n: int) -> str:
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for t, b in enumerate(td.bags, 1):
        lines.append(" ".join(["b", str(t)] + [str(v + 1) for v in iter_bits(b)]))
    lines += [f"{a + 1} {b + 1}" for a, b in td.edges]
    return "\n".join(lines) + "\n"
