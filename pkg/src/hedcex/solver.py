"""Exact decision searches with explicit budgets and three-valued verdicts.

Every search answers ``some`` (witness found), ``none`` (exhaustive proof of
nonexistence) or ``exhausted`` (budget hit first).  ``exhausted`` is never
collapsed into ``none``; callers must treat it as "no verdict".

Colorability runs saturation-guided backtracking: branch on the uncolored
vertex seeing the most distinct neighbor colors, ties broken by lowest
vertex index, candidate colors tried ascending and capped at one fresh color
beyond those already in use (interchangeable-color symmetry).  A maximal
greedy clique is pre-colored first unless the budget disables it.  With
identical inputs and budgets the transcript (verdict, node count, witness)
is identical run to run.

Homomorphism search maps source vertices in a fixed connectivity-aware order
with forward-checked target domains held as bitmasks.  Coloring is the
special case of a complete target, which the tests cross-check.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

import numpy as np

from .graphs import Graph, edge_arrays, iter_bits

__all__ = [
    "SOME",
    "NONE",
    "EXHAUSTED",
    "SearchBudget",
    "ColoringResult",
    "HomResult",
    "ChromaticResult",
    "greedy_clique",
    "find_coloring",
    "chromatic_number",
    "find_homomorphism",
    "verify_coloring",
    "verify_homomorphism",
]

SOME = "some"
NONE = "none"
EXHAUSTED = "exhausted"

MAX_COLORS = 62  # color sets live in machine-word bitmasks


@dataclass(frozen=True)
class SearchBudget:
    """Limits for one exact search; defaults fit the shipped pipelines."""

    node_limit: int = 100_000_000
    time_limit: float = 600.0
    use_clique: bool = True


DEFAULT_BUDGET = SearchBudget()


@dataclass
class ColoringResult:
    status: str
    colors: int
    assignment: list[int] | None
    nodes: int
    reason: str | None = None


@dataclass
class HomResult:
    status: str
    mapping: list[int] | None
    nodes: int
    reason: str | None = None


@dataclass
class ChromaticResult:
    status: str  # "value" | "unknown" | "none_in_range" | "no_finite"
    value: int | None
    assignment: list[int] | None
    nodes: int
    decisions: list[tuple[int, str]] = field(default_factory=list)


class _BudgetHit(Exception):
    def __init__(self, which: str):
        self.which = which


class _Meter:
    """Node and wall-clock accounting shared by both searches."""

    __slots__ = ("nodes", "limit", "deadline", "started")

    def __init__(self, budget: SearchBudget):
        self.nodes = 0
        self.limit = budget.node_limit
        self.started = time.perf_counter()
        self.deadline = self.started + budget.time_limit

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise _BudgetHit("nodes")
        if self.nodes & 1023 == 0 and time.perf_counter() > self.deadline:
            raise _BudgetHit("time")


def greedy_clique(g: Graph) -> list[int]:
    """Maximal clique grown greedily by descending degree, ties low index."""
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    clique: list[int] = []
    mask = 0
    for v in order:
        if mask & ~g.adj[v] == 0:
            clique.append(v)
            mask |= 1 << v
    return clique


def verify_coloring(g: Graph, assignment: list[int], c: int) -> bool:
    """Linear scan, independent of the search: proper c-coloring or not."""
    if len(assignment) != g.n:
        return False
    if g.n == 0:
        return True
    arr = np.asarray(assignment, dtype=np.int64)
    if arr.min() < 1 or arr.max() > c:
        return False
    eu, ev = edge_arrays(g)
    if eu.size == 0:
        return True
    return bool(np.all(arr[eu] != arr[ev]))


def verify_homomorphism(g: Graph, h: Graph, mapping: list[int]) -> bool:
    """Edge-preservation scan for a claimed map V(G) -> V(H)."""
    if len(mapping) != g.n:
        return False
    if any(not (0 <= t < h.n) for t in mapping):
        return False
    for u, v in g.edges():
        if not h.has_edge(mapping[u], mapping[v]):
            return False
    return True


def find_coloring(g: Graph, c: int, budget: SearchBudget = DEFAULT_BUDGET) -> ColoringResult:
    """Decide c-colorability exactly, within the budget.

    A graph with a loop is immediately uncolorable for every c.  The node
    count tallies color assignment attempts, including the clique
    pre-coloring.
    """
    if c < 0:
        raise ValueError("color count must be nonnegative")
    if c > MAX_COLORS:
        raise ValueError(f"color count above supported {MAX_COLORS}")
    if g.has_loop():
        return ColoringResult(NONE, c, None, 0, reason="loop")
    if g.n == 0:
        return ColoringResult(SOME, c, [], 0)
    if c == 0:
        return ColoringResult(NONE, c, None, 0, reason="no-colors")

    meter = _Meter(budget)
    color = [0] * g.n
    forbid = [0] * g.n
    score = np.zeros(g.n, dtype=np.int32)  # -1 once colored, else saturation
    uncolored = (1 << g.n) - 1
    trail: list[int] = []

    def assign(v: int, col: int) -> int:
        nonlocal uncolored
        meter.tick()
        color[v] = col
        score[v] = -1
        uncolored ^= 1 << v
        bit = 1 << col
        mark = len(trail)
        for u in iter_bits(g.adj[v] & uncolored):
            if not forbid[u] & bit:
                forbid[u] |= bit
                score[u] += 1
                trail.append(u)
        return mark

    def retract(v: int, mark: int) -> None:
        nonlocal uncolored
        col = color[v]
        bit = 1 << col
        while len(trail) > mark:
            u = trail.pop()
            forbid[u] ^= bit
            score[u] -= 1
        color[v] = 0
        uncolored |= 1 << v
        score[v] = forbid[v].bit_count()

    clique: list[int] = []
    if budget.use_clique:
        clique = greedy_clique(g)
        if len(clique) > c:
            return ColoringResult(NONE, c, None, 0, reason="clique")

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, g.n + 500))

    def solve(used: int) -> bool:
        v = int(np.argmax(score))
        if score[v] < 0:
            return True
        cap = min(c, used + 1)
        avail = ~forbid[v] & ((1 << (cap + 1)) - 2)  # color bits 1..cap
        for col in iter_bits(avail):
            mark = assign(v, col)
            if solve(max(used, col)):
                return True
            retract(v, mark)
        return False

    try:
        for i, v in enumerate(clique):
            assign(v, i + 1)
        found = solve(len(clique))
    except _BudgetHit as hit:
        return ColoringResult(EXHAUSTED, c, None, meter.nodes, reason=hit.which)
    finally:
        sys.setrecursionlimit(old_limit)

    if found:
        witness = list(color)
        if not verify_coloring(g, witness, c):  # defensive; scan is independent
            raise RuntimeError("search produced an improper coloring")
        return ColoringResult(SOME, c, witness, meter.nodes)
    return ColoringResult(NONE, c, None, meter.nodes, reason="search")


def chromatic_number(
    g: Graph,
    lo: int = 1,
    hi: int | None = None,
    budget: SearchBudget = DEFAULT_BUDGET,
) -> ChromaticResult:
    """Smallest c in [lo, hi] admitting a coloring, if the range resolves.

    Walks c upward, so a ``some`` at c together with ``none`` below it pins
    the value.  Any ``exhausted`` decision stops the walk with status
    ``unknown``; a graph with a loop reports ``no_finite``.
    """
    if g.has_loop():
        return ChromaticResult("no_finite", None, None, 0)
    if g.n == 0:
        return ChromaticResult("value", 0, [], 0)
    if hi is None:
        hi = g.n
    if not (0 <= lo <= hi):
        raise ValueError(f"bad range [{lo}, {hi}]")
    total = 0
    transcript: list[tuple[int, str]] = []
    for c in range(lo, hi + 1):
        res = find_coloring(g, c, budget)
        total += res.nodes
        transcript.append((c, res.status))
        if res.status == SOME:
            return ChromaticResult("value", c, res.assignment, total, transcript)
        if res.status == EXHAUSTED:
            return ChromaticResult("unknown", None, None, total, transcript)
    return ChromaticResult("none_in_range", None, None, total, transcript)


def _hom_order(g: Graph) -> list[int]:
    # max degree first, then greedily the vertex with most ordered neighbors
    # (ties: higher degree, then lower index); keeps propagation connected.
    if g.n == 0:
        return []
    pool = set(range(g.n))
    first = max(pool, key=lambda v: (g.degree(v), -v))
    order = [first]
    pool.discard(first)
    placed = 1 << first
    while pool:
        nxt = max(
            pool,
            key=lambda v: ((g.adj[v] & placed).bit_count(), g.degree(v), -v),
        )
        order.append(nxt)
        pool.discard(nxt)
        placed |= 1 << nxt
    return order


def find_homomorphism(g: Graph, h: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> HomResult:
    """Search for an edge-preserving map V(G) -> V(H), within the budget."""
    if g.n == 0:
        return HomResult(SOME, [], 0)
    if h.n == 0:
        return HomResult(NONE, None, 0, reason="empty-target")

    full = (1 << h.n) - 1
    looped = 0
    for t in range(h.n):
        if h.has_edge(t, t):
            looped |= 1 << t
    dom = [looped if g.has_edge(v, v) else full for v in range(g.n)]
    if any(d == 0 for d in dom):
        return HomResult(NONE, None, 0, reason="loop-unmatchable")

    order = _hom_order(g)
    pos = {v: i for i, v in enumerate(order)}
    mapping = [-1] * g.n
    meter = _Meter(budget)

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, g.n + 500))

    def solve(p: int) -> bool:
        if p == len(order):
            return True
        v = order[p]
        for t in iter_bits(dom[v]):
            meter.tick()
            mapping[v] = t
            saved: list[tuple[int, int]] = []
            ok = True
            for u in iter_bits(g.adj[v]):
                if pos[u] <= p:
                    continue
                nd = dom[u] & h.adj[t]
                if nd != dom[u]:
                    saved.append((u, dom[u]))
                    dom[u] = nd
                    if nd == 0:
                        ok = False
                        break
            if ok and solve(p + 1):
                return True
            for u, d in saved:
                dom[u] = d
            mapping[v] = -1
        return False

    try:
        found = solve(0)
    except _BudgetHit as hit:
        return HomResult(EXHAUSTED, None, meter.nodes, reason=hit.which)
    finally:
        sys.setrecursionlimit(old_limit)

    if found:
        out = list(mapping)
        if not verify_homomorphism(g, h, out):
            raise RuntimeError("search produced a non-homomorphism")
        return HomResult(SOME, out, meter.nodes)
    return HomResult(NONE, None, meter.nodes, reason="search")
