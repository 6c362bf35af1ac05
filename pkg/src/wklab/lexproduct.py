"""The reduction G -> H = G . K_k (lexicographic product with a k-clique).

Vertex (v, i) of H has id ``v * k + i``, so the clique block K^v is the id
range ``[v*k, v*k + k)``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    FamilyError,
    Graph,
    GraphInputError,
    IndependentFamily,
    VertexSet,
    is_independent,
)
from .recognition import is_well_covered, is_wk


@dataclass(frozen=True)
class ProductGraph:
    base: Graph
    k: int
    product: Graph

    def encode(self, v: int, i: int) -> int:
        if not (0 <= v < self.base.n and 0 <= i < self.k):
            raise GraphInputError(f"({v}, {i}) is not a vertex of the product")
        return v * self.k + i

    def decode(self, x: int) -> tuple[int, int]:
        return divmod(x, self.k)

    def block(self, v: int) -> VertexSet:
        return VertexSet(range(v * self.k, v * self.k + self.k))


def lex_product_with_clique(g: Graph, k: int) -> ProductGraph:
    if not isinstance(k, int) or k < 1:
        raise GraphInputError(f"k must be a positive integer, got {k!r}")
    block = (1 << k) - 1
    nbr = []
    for v in range(g.n):
        outer = 0
        for u in range(g.n):
            if g.nbr[v] >> u & 1:
                outer |= block << (u * k)
        for i in range(k):
            own = (block & ~(1 << i)) << (v * k)
            nbr.append(outer | own)
    return ProductGraph(g, k, Graph(g.n * k, nbr))


def project(p: ProductGraph, a) -> VertexSet:
    """Base vertices whose clique block meets ``a``."""
    mask = p.product.check_set(a)
    return VertexSet(sorted({x // p.k for x in VertexSet.from_mask(mask)}))


def lift(p: ProductGraph, a, label: int) -> VertexSet:
    """The copy ``a x {label}`` of an independent base set inside H."""
    if not 0 <= label < p.k:
        raise GraphInputError(f"label {label} outside 0..{p.k - 1}")
    if not is_independent(p.base, a):
        raise GraphInputError(f"{a} is not independent in the base graph")
    return VertexSet(v * p.k + label for v in VertexSet.from_mask(p.base.check_set(a)))


def star_labeling(p: ProductGraph, family) -> list[dict[int, int]]:
    """Label each block K^v bijectively with 1..k so that A_i's vertex in K^v gets label i.

    Returns one ``{product vertex: label}`` dict per base vertex. Vertices
    not constrained by the family receive the unused labels in ascending
    order of vertex id.
    """
    if not isinstance(family, IndependentFamily):
        family = IndependentFamily(family)
    if family.k > p.k:
        raise FamilyError(f"family has {family.k} sets but blocks have only {p.k} vertices")
    family.check(p.product)
    out = []
    for v in range(p.base.n):
        block = p.block(v)
        forced: dict[int, int] = {}
        for i, a in enumerate(family, 1):
            hit = list(block & a)
            assert len(hit) <= 1, "an independent set meets a clique block at most once"
            if hit:
                assert hit[0] not in forced, "disjoint sets cannot share a vertex"
                forced[hit[0]] = i
        free_labels = iter(sorted(set(range(1, p.k + 1)) - set(forced.values())))
        labels = {x: forced[x] if x in forced else next(free_labels) for x in block}
        assert sorted(labels.values()) == list(range(1, p.k + 1))
        out.append(labels)
    return out


def extensions_from_base(p: ProductGraph, labeling: list[dict[int, int]], bases) -> IndependentFamily:
    """Build S_i = {a_i^u : u in T_i} in H from base sets T_1..T_j.

    With T_i a maximum independent set of G containing the projection of
    A_i, the result is a disjoint family of maximum independent sets of H
    containing the A_i.
    """
    by_label = [{lab: x for x, lab in block.items()} for block in labeling]
    out = []
    for i, t in enumerate(bases, 1):
        out.append(VertexSet(sorted(by_label[u][i] for u in t)))
    return IndependentFamily(out)


def theorem1_sides(g: Graph, k: int) -> tuple[bool, bool]:
    """(g is well-covered, g . K_k is W_k), each decided from scratch."""
    base = is_well_covered(g).verdict
    product = is_wk(lex_product_with_clique(g, k).product, k).verdict
    return base, product


def verify_theorem1(g: Graph, k: int) -> bool:
    """Whether ``g`` is well-covered exactly when ``g . K_k`` is W_k."""
    base, product = theorem1_sides(g, k)
    return base == product
