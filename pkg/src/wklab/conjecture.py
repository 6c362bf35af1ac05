"""Joins of two matchings and the neighbourhood condition they are tested against.

G(s, t) takes an s-matching on vertices ``0..2s-1`` (edges ``2i, 2i+1``), a
t-matching on ``2s..2s+2t-1`` laid out the same way, and joins every vertex
of the first to every vertex of the second.

The condition checked: for every vertex v and every maximal independent set
S of ``G - N[v]``, the largest independent subset of ``N(v) - N(S)``
("closed" variant) or of ``N(v) - S`` ("open" variant) has exactly one vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import (
    Graph,
    GraphInputError,
    VertexSet,
    alpha_of_mask,
    induced_subgraph,
    iter_bits,
    maximal_independent_masks,
    popcount,
)
from .recognition import is_well_covered, is_wk

VARIANTS = ("closed", "open")


class RefutationError(AssertionError):
    """One leg of a refutation report did not hold."""

    def __init__(self, message: str, report: "RefutationReport"):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class MatchingJoin:
    s: int
    t: int
    graph: Graph
    side_a: VertexSet
    side_b: VertexSet

    def sibling(self, v: int) -> int:
        if not 0 <= v < self.graph.n:
            raise GraphInputError(f"vertex {v} not in G({self.s}, {self.t})")
        return v ^ 1


def matching_join(s: int, t: int) -> MatchingJoin:
    if not (isinstance(s, int) and isinstance(t, int)) or s < 1 or t < 1:
        raise GraphInputError(f"s and t must be positive integers, got s={s!r}, t={t!r}")
    n = 2 * s + 2 * t
    side_a = (1 << 2 * s) - 1
    side_b = ((1 << n) - 1) & ~side_a
    nbr = []
    for v in range(n):
        other_side = side_b if side_a >> v & 1 else side_a
        nbr.append(other_side | 1 << (v ^ 1))
    return MatchingJoin(s, t, Graph(n, nbr), VertexSet.from_mask(side_a), VertexSet.from_mask(side_b))


@dataclass(frozen=True)
class ConditionStep:
    vertex: int
    s: VertexSet
    residual: VertexSet
    residual_alpha: int

    @property
    def ok(self) -> bool:
        return self.residual_alpha == 1

    def to_dict(self) -> dict:
        return {
            "v": self.vertex,
            "S": self.s.to_list(),
            "residual": self.residual.to_list(),
            "residual_alpha": self.residual_alpha,
            "ok": self.ok,
        }


@dataclass
class ConditionResult:
    variant: str
    holds: bool
    trace: list[ConditionStep]

    def failures(self) -> list[ConditionStep]:
        return [st for st in self.trace if not st.ok]


def check_levit_tankus_condition(g: Graph, variant: str = "closed") -> ConditionResult:
    """Scan every (v, S) pair; trace is ordered by v, then S by bit pattern.

    If ``G - N[v]`` has no vertices, its only maximal independent set is the
    empty set and the residual is all of ``N(v)``.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    trace = []
    for v in range(g.n):
        rest = g.full_mask & ~(g.nbr[v] | 1 << v)
        h, index = induced_subgraph(g, rest)
        back = {new: old for old, new in index.items()}
        for m in maximal_independent_masks(h):
            s_mask = sum(1 << back[u] for u in iter_bits(m))
            if variant == "closed":
                blocked = 0
                for u in iter_bits(s_mask):
                    blocked |= g.nbr[u]
            else:
                blocked = s_mask
            residual = g.nbr[v] & ~blocked
            trace.append(ConditionStep(v, VertexSet.from_mask(s_mask), VertexSet.from_mask(residual),
                                       alpha_of_mask(g, residual)))
    return ConditionResult(variant, all(st.ok for st in trace), trace)


@dataclass
class RefutationReport:
    s: int
    t: int
    condition_variant: str
    condition_holds: bool
    well_covered: bool
    w2: bool
    witnesses: list[VertexSet]
    residuals_are_siblings: bool
    failures: list[str] = field(default_factory=list)

    @property
    def confirmed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "condition_variant": self.condition_variant,
            "condition_holds": self.condition_holds,
            "well_covered": self.well_covered,
            "w2": self.w2,
            "witnesses": [w.to_list() for w in self.witnesses],
            "residuals_are_siblings": self.residuals_are_siblings,
            "confirmed": self.confirmed,
            "failures": list(self.failures),
        }


def build_refutation_report(s: int, t: int, variant: str = "closed") -> RefutationReport:
    """Evaluate every leg of the G(s, t) refutation without raising."""
    if not (isinstance(s, int) and isinstance(t, int)) or s < 1 or t < 1:
        raise GraphInputError(f"s and t must be positive integers, got s={s!r}, t={t!r}")
    if s >= t:
        raise GraphInputError(f"the family needs s < t, got s={s}, t={t}")
    mj = matching_join(s, t)
    g = mj.graph
    cond = check_levit_tankus_condition(g, variant)
    wc = is_well_covered(g)
    w2 = is_wk(g, 2)
    masks = maximal_independent_masks(g)
    small = next((m for m in masks if popcount(m) == s), None)
    large = next((m for m in masks if popcount(m) == t), None)
    witnesses = [VertexSet.from_mask(m) for m in (small, large) if m is not None]
    siblings = all(st.residual == VertexSet([mj.sibling(st.vertex)]) for st in cond.trace)

    failures = []
    if not cond.holds:
        bad = cond.failures()
        first = bad[0]
        failures.append(
            f"{variant} condition fails at {len(bad)} (v, S) pairs, first v={first.vertex} "
            f"S={first.s} residual={first.residual} alpha={first.residual_alpha}")
    if wc.verdict:
        failures.append("G(s, t) is well-covered")
    if small is None or large is None:
        failures.append(f"missing maximal independent sets of sizes {s} and {t}")
    if w2.verdict:
        failures.append("G(s, t) is W2")
    return RefutationReport(s, t, variant, cond.holds, wc.verdict, w2.verdict, witnesses, siblings, failures)


def refute_conjecture(s: int, t: int, variant: str = "closed") -> RefutationReport:
    """Confirm that G(s, t) satisfies the condition yet is not W2.

    Raises :class:`RefutationError` (carrying the report) if any leg fails.
    """
    report = build_refutation_report(s, t, variant)
    if report.failures:
        raise RefutationError(f"G({s}, {t}) refutation failed: " + "; ".join(report.failures), report)
    return report
