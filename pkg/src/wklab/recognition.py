"""Recognizers for well-covered, 1-well-covered and W_k graphs.

A graph is W_k when any k pairwise disjoint independent sets A_1..A_k
(empty sets allowed) can be grown into k pairwise disjoint maximum
independent sets S_i containing A_i.

The checkers share one engine, :class:`_ExtensionSearch`. It takes a list of
candidate target sets (all maximum independent sets, or all maximal ones for
the logical variant) and looks for a disjoint independent k-tuple that no
disjoint choice of candidates can contain. Since the property is antitone in
every A_i, only tuples that are maximal under componentwise inclusion are
examined, and sets are treated as unordered.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .graph import (
    FamilyError,
    Graph,
    GraphInputError,
    IndependentFamily,
    VertexSet,
    induced_subgraph,
    iter_bits,
    maximal_independent_masks,
    popcount,
)


@dataclass
class WkReport:
    """Verdict of one recognizer run.

    ``witness`` is a failing A-tuple when the verdict is false, or an S-tuple
    when the caller asked for one. ``elapsed`` is wall-clock seconds.
    """

    property: str
    verdict: bool
    alpha: int
    beta: int
    witness: IndependentFamily | None = None
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict,
            "alpha": self.alpha,
            "beta": self.beta,
            "witness": None if self.witness is None else self.witness.to_lists(),
            "elapsed_s": round(self.elapsed, 6) if timing else None,
            "notes": list(self.notes),
        }


class _ExtensionSearch:
    """Disjoint-system-of-candidates search over a fixed candidate list."""

    def __init__(self, g: Graph, candidates: Sequence[int], k: int):
        self.g = g
        self.k = k
        self.cands = list(candidates)
        m = len(self.cands)
        self.all = (1 << m) - 1
        self.contain = [0] * g.n
        for ci, c in enumerate(self.cands):
            for v in iter_bits(c):
                self.contain[v] |= 1 << ci
        self.disjoint = []
        for c in self.cands:
            d = 0
            for cj, other in enumerate(self.cands):
                if not c & other:
                    d |= 1 << cj
            self.disjoint.append(d)
        self._memo: dict[tuple[int, ...], bool] = {}

    def compatible(self, a: int) -> int:
        """Candidate-index mask of candidates containing the vertex set ``a``."""
        c = self.all
        for v in iter_bits(a):
            c &= self.contain[v]
        return c

    def choose(self, options: Sequence[int]) -> list[int] | None:
        """Pick one candidate index per option mask, pairwise disjoint.

        Returns the indices in option order or None. Options with the fewest
        candidates are tried first.
        """
        options = list(options)
        order = sorted(range(len(options)), key=lambda i: popcount(options[i]))
        picked = [0] * len(options)

        def rec(pos: int, opts: list[int]) -> bool:
            if pos == len(order):
                return True
            # fail-first on the remaining slot with fewest options
            best = min(range(pos, len(order)), key=lambda j: popcount(opts[order[j]]))
            order[pos], order[best] = order[best], order[pos]
            slot = order[pos]
            for ci in iter_bits(opts[slot]):
                nxt = list(opts)
                d = self.disjoint[ci]
                dead = False
                for j in order[pos + 1:]:
                    nxt[j] &= d
                    if not nxt[j]:
                        dead = True
                        break
                if dead:
                    continue
                picked[slot] = ci
                if rec(pos + 1, nxt):
                    return True
            return False

        if any(o == 0 for o in options):
            return None
        return picked if rec(0, options) else None

    def feasible(self, options: Sequence[int]) -> bool:
        key = tuple(sorted(options))
        hit = self._memo.get(key)
        if hit is None:
            hit = self.choose(key) is not None
            self._memo[key] = hit
        return hit

    def find_failing_tuple(self) -> tuple[int, ...] | None:
        """First failing tuple in canonical order, or None if none exists.

        Vertices are processed in classes of true twins (equal closed
        neighbourhoods), ordered by least member. Twins are interchangeable,
        so a class only decides which sets receive one of its vertices; the
        lowest ids go to the lowest set indices. Sets are interchangeable
        too, so a set index is opened only after all lower ones.
        """
        k, nbr, n = self.k, self.g.nbr, self.g.n
        if not self.feasible((self.all,) * k):
            return (0,) * k
        classes = _true_twin_classes(nbr, n)
        undecided = [0] * (len(classes) + 1)
        for c in range(len(classes) - 1, -1, -1):
            undecided[c] = undecided[c + 1]
            for v in classes[c]:
                undecided[c] |= 1 << v
        a = [0] * k
        opts = [self.all] * k
        outside: list[int] = []
        found: list[tuple[int, ...]] = []

        def outside_ok(c: int) -> bool:
            # an outside vertex with no undecided neighbour left must already
            # be blocked from every set, else the tuple cannot become maximal
            rest = undecided[c]
            for u in outside:
                if nbr[u] & rest:
                    continue
                for i in range(k):
                    if not nbr[u] & a[i]:
                        return False
            return True

        def placements(members: list[int], opened: int):
            t = len(members)
            usable = [i for i in range(min(opened + t, k)) if not nbr[members[0]] & a[i]]
            for r in range(min(t, len(usable)), -1, -1):
                for idx in combinations(usable, r):
                    new = [i for i in idx if i >= opened]
                    if new != list(range(opened, opened + len(new))):
                        continue
                    yield idx, opened + len(new)

        def rec(c: int, opened: int) -> bool:
            if c == len(classes):
                if not self.feasible(opts):
                    found.append(tuple(a))
                    return True
                return False
            members = classes[c]
            for idx, now_open in placements(members, opened):
                saved = [(i, a[i], opts[i]) for i in idx]
                dead = False
                for v, i in zip(members, idx):
                    a[i] |= 1 << v
                    opts[i] &= self.contain[v]
                    if not opts[i]:
                        dead = True
                if dead:
                    found.append(tuple(a))
                    return True
                rest = members[len(idx):]
                outside.extend(rest)
                if outside_ok(c + 1) and rec(c + 1, now_open):
                    return True
                del outside[len(outside) - len(rest):]
                for i, old_a, old_o in saved:
                    a[i], opts[i] = old_a, old_o
            return False

        rec(0, 0)
        return found[0] if found else None


def _true_twin_classes(nbr: Sequence[int], n: int) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(nbr[v] | 1 << v, []).append(v)
    return sorted(groups.values())


def _components(g: Graph) -> list[int]:
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.nbr[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def _failing_tuple_by_component(g: Graph, k: int, maximum_only: bool) -> tuple[int, ...] | None:
    # both properties hold for a disjoint union iff they hold on every
    # component, because any component tuple pads with empty sets elsewhere
    for comp in _components(g):
        h, index = induced_subgraph(g, comp)
        masks = maximal_independent_masks(h)
        if maximum_only:
            masks = _maximum_masks(masks)[1]
        failing = _ExtensionSearch(h, masks, k).find_failing_tuple()
        if failing is not None:
            back = {new: old for old, new in index.items()}
            return tuple(sum(1 << back[v] for v in iter_bits(m)) for m in failing)
    return None


def _beta_from(masks: list[int]) -> int:
    return min(popcount(m) for m in masks)


def is_well_covered(g: Graph) -> WkReport:
    """Well-covered test: every maximal independent set is maximum.

    On failure the witness holds the first maximal independent set (by bit
    pattern) that is smaller than alpha.
    """
    start = time.perf_counter()
    masks = maximal_independent_masks(g)
    a = max(popcount(m) for m in masks)
    b = _beta_from(masks)
    witness = None
    if a != b:
        small = next(m for m in masks if popcount(m) < a)
        witness = IndependentFamily.from_masks([small])
    return WkReport("W1", a == b, a, b, witness, time.perf_counter() - start)


def is_one_well_covered(g: Graph) -> bool:
    """Well-covered, and still well-covered after deleting any single vertex."""
    if not is_well_covered(g).verdict:
        return False
    for v in range(g.n):
        h, _ = induced_subgraph(g, g.full_mask & ~(1 << v))
        if not is_well_covered(h).verdict:
            return False
    return True


def _maximum_masks(masks: list[int]) -> tuple[int, list[int]]:
    a = max(popcount(m) for m in masks)
    return a, [m for m in masks if popcount(m) == a]


def find_disjoint_maximum_extensions(g: Graph, family) -> IndependentFamily | None:
    """Pairwise disjoint maximum independent sets S_i containing each A_i.

    Raises :class:`FamilyError` if ``family`` is not a disjoint independent
    tuple; returns None when no extension exists.
    """
    if not isinstance(family, IndependentFamily):
        family = IndependentFamily(family)
    family.check(g)
    if family.k == 0:
        return IndependentFamily([])
    _, maximum = _maximum_masks(maximal_independent_masks(g))
    search = _ExtensionSearch(g, maximum, family.k)
    options = [search.compatible(m) for m in family.masks]
    picked = search.choose(options)
    if picked is None:
        return None
    return IndependentFamily.from_masks(maximum[ci] for ci in picked)


def is_wk(g: Graph, k: int) -> WkReport:
    """Decide the W_k property exhaustively.

    Fast-fails when ``k * alpha > n`` (the all-empty tuple has no extension)
    and when the graph is not well-covered (a small maximal set cannot grow
    into a maximum one).
    """
    if not isinstance(k, int) or k < 1:
        raise GraphInputError(f"k must be a positive integer, got {k!r}")
    start = time.perf_counter()
    masks = maximal_independent_masks(g)
    a, maximum = _maximum_masks(masks)
    b = _beta_from(masks)
    prop = f"W{k}"

    def done(verdict, witness=None, note=None):
        rep = WkReport(prop, verdict, a, b, witness, time.perf_counter() - start)
        if note:
            rep.notes.append(note)
        return rep

    if k * a > g.n:
        return done(False, IndependentFamily.from_masks([0] * k), "k*alpha exceeds n")
    if a != b:
        small = next(m for m in masks if popcount(m) < a)
        return done(False, IndependentFamily.from_masks([small] + [0] * (k - 1)), "not well-covered")
    failing = _failing_tuple_by_component(g, k, maximum_only=True)
    if failing is None:
        return done(True)
    return done(False, IndependentFamily.from_masks(failing))


def wk_extensions(g: Graph, k: int) -> IndependentFamily | None:
    """Some k pairwise disjoint maximum independent sets, if any exist."""
    return find_disjoint_maximum_extensions(g, [VertexSet()] * k)


# -- logical predicates -------------------------------------------------------
# Evaluated by explicit quantification over elements, independent of the
# bitmask routines above.


def eval_indep(g: Graph, x) -> bool:
    xs = list(VertexSet(x) if not isinstance(x, VertexSet) else x)
    return all(not g.adjacent(u, v) for u in xs for v in xs if u != v)


def eval_maximal(g: Graph, x) -> bool:
    xs = set(x)
    if not eval_indep(g, xs):
        return False
    return all(any(g.adjacent(u, v) for v in xs) for u in range(g.n) if u not in xs)


def eval_disjoint(g: Graph, x, y) -> bool:
    return all(u != v for u in x for v in y)


def eval_subset(g: Graph, x, x_prime) -> bool:
    xp = set(x_prime)
    return all(u in xp for u in x)


def eval_indep_k(g: Graph, xs: Sequence, maximal_sets: Sequence[VertexSet]) -> bool:
    """The implication body of the formula for one tuple ``xs``.

    ``maximal_sets`` ranges over the second-order existential; passing all
    maximal independent sets of ``g`` gives the formula's semantics.
    """
    k = len(xs)
    premise = all(eval_indep(g, x) for x in xs) and all(
        eval_disjoint(g, xs[i], xs[j]) for i, j in combinations(range(k), 2))
    if not premise:
        return True

    def rec(i: int, chosen: list) -> bool:
        if i == k:
            return True
        for cand in maximal_sets:
            if not eval_subset(g, xs[i], cand):
                continue
            if all(eval_disjoint(g, cand, c) for c in chosen):
                if rec(i + 1, chosen + [cand]):
                    return True
        return False

    return rec(0, [])


def models_formula_wk(g: Graph, k: int) -> bool:
    """Whether every disjoint independent k-tuple extends to disjoint *maximal* sets."""
    return formula_wk_counterexample(g, k) is None


def formula_wk_counterexample(g: Graph, k: int) -> IndependentFamily | None:
    if not isinstance(k, int) or k < 1:
        raise GraphInputError(f"k must be a positive integer, got {k!r}")
    failing = _failing_tuple_by_component(g, k, maximum_only=False)
    return None if failing is None else IndependentFamily.from_masks(failing)


__all__ = [
    "FamilyError",
    "WkReport",
    "eval_disjoint",
    "eval_indep",
    "eval_indep_k",
    "eval_maximal",
    "eval_subset",
    "find_disjoint_maximum_extensions",
    "formula_wk_counterexample",
    "is_one_well_covered",
    "is_well_covered",
    "is_wk",
    "models_formula_wk",
    "wk_extensions",
]
