"""Loopy undirected graphs on dense integer vertices, stored as bitset rows.

Row ``adj[v]`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge;
bit ``v`` itself marks a loop.  Arbitrary-precision ints make row operations
word-parallel, which the walk sweeps and independence checks elsewhere in the
package lean on.  Graphs are treated as immutable once built; no function here
mutates a published instance, so instances can be shared freely between
threads.

Vertex sets are plain ints used as bitmasks over ``0..n-1``.  Any labels
(tuples, subsets) live in side tables kept by the callers; this module only
ever sees dense integers.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "Graph",
    "new_graph",
    "mask_from",
    "iter_bits",
    "neighbors",
    "is_independent",
    "induced_subgraph",
    "is_isomorphic",
    "parse_dimacs",
    "emit_dimacs",
    "graph_sha256",
    "edge_arrays",
]


def mask_from(vertices: Iterable[int]) -> int:
    """Bitmask with one bit per listed vertex."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Undirected graph, loops allowed, vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "label", "_m", "_earrays")

    def __init__(self, n: int, adj: list[int], label: str | None = None):
        self.n = n
        self.adj = adj
        self.label = label
        self._m: int | None = None
        self._earrays = None

    # -- basic queries ----------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_loop(self) -> bool:
        return any(row >> v & 1 for v, row in enumerate(self.adj))

    def loops(self) -> int:
        return sum(row >> v & 1 for v, row in enumerate(self.adj))

    @property
    def edge_count(self) -> int:
        """Number of edges; a loop counts once."""
        if self._m is None:
            total = sum(row.bit_count() for row in self.adj)
            nloops = self.loops()
            self._m = (total - nloops) // 2 + nloops
        return self._m

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u <= v``, ascending."""
        for u in range(self.n):
            row = self.adj[u] >> u  # keep v >= u only
            for off in iter_bits(row):
                yield (u, u + off)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, tuple(self.adj)))

    def __repr__(self) -> str:
        tag = f" {self.label!r}" if self.label else ""
        return f"<Graph{tag} n={self.n} m={self.edge_count}>"


def new_graph(n: int, edges: Iterable[tuple[int, int]], label: str | None = None) -> Graph:
    """Build a graph from an edge list.

    The list is symmetrized and de-duplicated; ``(v, v)`` entries become
    loops.  Raises ValueError on an endpoint outside ``0..n-1``.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj, label)


def neighbors(g: Graph, v: int) -> int:
    """Neighborhood of ``v`` as a bitmask (contains ``v`` iff ``v`` is looped)."""
    return g.adj[v]


def is_independent(g: Graph, members: int) -> bool:
    """True iff no edge, loops included, joins two vertices of ``members``."""
    for v in iter_bits(members):
        if g.adj[v] & members:
            return False
    return True


def induced_subgraph(g: Graph, members: int) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by the bitmask ``members`` plus the old-to-new map.

    New indices follow the ascending order of the old ones, so the result is
    deterministic.
    """
    old = list(iter_bits(members))
    remap = {v: i for i, v in enumerate(old)}
    adj = [0] * len(old)
    for i, v in enumerate(old):
        row = g.adj[v] & members
        for u in iter_bits(row):
            adj[i] |= 1 << remap[u]
    return Graph(len(old), adj), remap


def edge_arrays(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays ``(eu, ev)`` listing every edge once, loops included.

    Cached on the graph; used by the bulk adjacency checks that compare
    function tables along every edge at once.
    """
    if g._earrays is None:
        eu = np.fromiter((u for u, _ in g.edges()), dtype=np.int32, count=g.edge_count)
        ev = np.fromiter((v for _, v in g.edges()), dtype=np.int32, count=g.edge_count)
        g._earrays = (eu, ev)
    return g._earrays


# -- isomorphism ----------------------------------------------------------


def _refine_colors(g: Graph, colors: list[int]) -> list[int]:
    """One round of neighborhood color refinement; colors are dense ints."""
    sigs = []
    for v in range(g.n):
        neigh = sorted(colors[u] for u in iter_bits(g.adj[v]))
        sigs.append((colors[v], tuple(neigh)))
    canon: dict[tuple, int] = {}
    for s in sorted(set(sigs)):
        canon[s] = len(canon)
    return [canon[s] for s in sigs]


def _stable_coloring(g: Graph) -> list[int]:
    # initial color = (degree, loop flag), then refine to a fixed point
    init = sorted({(g.degree(v), g.adj[v] >> v & 1) for v in range(g.n)})
    rank = {s: i for i, s in enumerate(init)}
    colors = [rank[(g.degree(v), g.adj[v] >> v & 1)] for v in range(g.n)]
    while True:
        nxt = _refine_colors(g, colors)
        if len(set(nxt)) == len(set(colors)):
            return nxt
        colors = nxt


def is_isomorphic(g: Graph, h: Graph, *, max_vertices: int = 200) -> bool:
    """Exact isomorphism test for graphs up to ``max_vertices`` vertices.

    Vertices are partitioned by iterated neighborhood refinement (degree
    sequence pruning and then some); the remaining search is backtracking
    with forward-checked candidate domains.  Deterministic.
    """
    if g.n > max_vertices or h.n > max_vertices:
        raise ValueError(
            f"isomorphism guard: {g.n} and {h.n} vertices vs limit {max_vertices}"
        )
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if g.n == 0:
        return True

    cg = _stable_coloring(g)
    ch = _stable_coloring(h)
    if sorted(cg) != sorted(ch):
        return False

    by_color: dict[int, int] = {}
    for t, c in enumerate(ch):
        by_color[c] = by_color.get(c, 0) | (1 << t)

    full = (1 << h.n) - 1
    dom = [by_color[cg[v]] for v in range(g.n)]
    order_pool = set(range(g.n))
    assigned: list[tuple[int, list[int]]] = []  # (vertex, saved domains) trail

    def pick() -> int:
        # most-constrained vertex, ties by lowest index
        best, best_size = -1, 1 << 62
        for v in sorted(order_pool):
            s = dom[v].bit_count()
            if s < best_size:
                best, best_size = v, s
        return best

    def assign(v: int, t: int) -> bool:
        saved = dom[:]
        adj_t = h.adj[t]
        not_adj_t = full ^ adj_t
        tbit = 1 << t
        for u in order_pool:
            if u == v:
                continue
            if g.has_edge(u, v):
                dom[u] &= adj_t
            else:
                dom[u] &= not_adj_t
            dom[u] &= ~tbit
            if dom[u] == 0:
                dom[:] = saved
                return False
        assigned.append((v, saved))
        return True

    def undo():
        _, saved = assigned.pop()
        dom[:] = saved

    def search() -> bool:
        if not order_pool:
            return True
        v = pick()
        order_pool.discard(v)
        for t in iter_bits(dom[v]):
            if assign(v, t):
                if search():
                    return True
                undo()
        order_pool.add(v)
        return False

    return search()


# -- DIMACS col format ----------------------------------------------------


def parse_dimacs(text: str) -> Graph:
    """Parse the DIMACS ``.col`` dialect: ``p edge N M`` then ``e u v`` lines.

    Vertices are 1-based in the file and 0-based in the result.  ``c`` lines
    are comments.  Duplicate edge lines collapse; ``e v v`` is a loop.
    Raises ValueError on malformed lines or endpoints outside ``1..N``.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {ln}: repeated problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ValueError(f"line {ln}: malformed problem line {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ValueError(f"line {ln}: malformed problem line {line!r}") from None
            if n < 0:
                raise ValueError(f"line {ln}: negative vertex count")
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {ln}: edge before problem line")
            if len(parts) != 3:
                raise ValueError(f"line {ln}: malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"line {ln}: malformed edge line {line!r}") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"line {ln}: endpoint out of range in {line!r}")
            edges.append((u - 1, v - 1))
        else:
            raise ValueError(f"line {ln}: unknown line type {line!r}")
    if n is None:
        raise ValueError("missing problem line")
    return new_graph(n, edges)


def emit_dimacs(g: Graph, *, comment: str | None = None) -> str:
    """Canonical DIMACS emission: sorted ``e`` lines, 1-based, ``u <= v``.

    ``comment`` adds a leading ``c`` line; the canonical form used for
    hashing passes no comment.
    """
    out = []
    if comment is not None:
        for piece in comment.splitlines() or [""]:
            out.append(f"c {piece}".rstrip())
    out.append(f"p edge {g.n} {g.edge_count}")
    for u, v in g.edges():
        out.append(f"e {u + 1} {v + 1}")
    return "\n".join(out) + "\n"


def graph_sha256(g: Graph) -> str:
    """SHA-256 of the canonical DIMACS emission (no comments)."""
    return hashlib.sha256(emit_dimacs(g).encode("utf-8")).hexdigest()


def emit_dot(g: Graph, labels: list[str] | None = None) -> str:
    """Undirected DOT text, one node per vertex; loops render as self-edges."""
    if labels is not None and len(labels) != g.n:
        raise ValueError("label list does not match the vertex count")
    out = ["graph {"]
    for v in range(g.n):
        name = labels[v] if labels is not None else str(v)
        out.append(f'  {v} [label="{name}"];')
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
