"""Ground-truth oriented diameter of small graphs by exhaustive or pruned search.

Vertex sets are Python-int bitmasks, so one reachability step for a whole
frontier is a handful of ORs.  Both modes fix the direction of the first edge:
reversing every arc preserves the diameter, so this halves the space exactly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional, Union

from .digraph import INF, ArcSet, directed_diameter
from .powgraph import UndirectedGraph, is_two_edge_connected

__all__ = ["SearchBudget", "Unknown", "Decision", "exact_od", "exists_orientation_diam_le",
           "exhaustive_od", "robbins_orientation"]

Dist = Union[int, float]


@dataclass(frozen=True)
class SearchBudget:
    max_edges_exhaustive: int = 20
    max_nodes: int = 2_000_000
    time_limit: float = 60.0

    def __post_init__(self):
        if self.max_edges_exhaustive <= 0 or self.max_nodes <= 0 or self.time_limit <= 0:
            raise ValueError("search budget fields must be positive")


@dataclass(frozen=True)
class Unknown:
    """Search ran out of budget; the oriented diameter lies in ``[lo, hi]``."""

    lo: Dist
    hi: Dist

    def __str__(self) -> str:
        return f"unknown[{self.lo}, {self.hi}]"


@dataclass
class Decision:
    answer: str  # "yes" | "no" | "unknown"
    witness: Optional[ArcSet] = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.answer == "yes"


@dataclass
class _Clock:
    budget: SearchBudget
    nodes: int = 0
    start: float = field(default_factory=time.perf_counter)

    def tick(self) -> bool:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            return False
        if self.nodes & 1023 == 0 and time.perf_counter() - self.start > self.budget.time_limit:
            return False
        return True


def _all_within(adj: list[int], k: int) -> bool:
    """Every vertex reaches every other in at most ``k`` steps."""
    n = len(adj)
    full = (1 << n) - 1
    for s in range(n):
        seen = 1 << s
        frontier = seen
        for _ in range(k):
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            nxt &= ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
        if seen != full:
            return False
    return True


def _diameter_below(adj: list[int], cap: int) -> Optional[int]:
    """The diameter if it is below ``cap``, else None."""
    for k in range(1, cap):
        if _all_within(adj, k):
            return k
    return None


def _edge_order(X: UndirectedGraph) -> list[tuple[int, int]]:
    deg = X.degrees
    return sorted(X.edges, key=lambda e: (-(int(deg[e[0]]) + int(deg[e[1]])), e))


def _arcset(X: UndirectedGraph, arcs) -> ArcSet:
    return ArcSet(X, frozenset(arcs))


def robbins_orientation(X: UndirectedGraph) -> ArcSet:
    """Strong orientation of a 2-edge-connected graph: DFS tree edges downward, back edges upward."""
    n = X.n
    depth = [-1] * n
    arcs = set()
    stack = [(0, iter(X.neighbors(0)))]
    depth[0] = 0
    while stack:
        u, it = stack[-1]
        for v in it:
            if (v, u) in arcs:
                continue
            if depth[v] < 0:
                depth[v] = depth[u] + 1
                arcs.add((u, v))
                stack.append((v, iter(X.neighbors(v))))
                break
            if depth[v] < depth[u]:
                arcs.add((u, v))
        else:
            stack.pop()
    return _arcset(X, arcs)


def exhaustive_od(X: UndirectedGraph, halve: bool = True, stop_at: int = 2) -> tuple[Dist, Optional[ArcSet], int]:
    """Minimum diameter over every full orientation (Gray-code walk).

    Returns ``(value, witness, orientations visited)``; stops early once
    ``stop_at`` is reached since nothing can beat it.
    """
    edges = X.edges
    n, m = X.n, len(edges)
    if n <= 1:
        return 0, _arcset(X, ()), 1
    adj = [0] * n
    for u, v in edges:  # start with every edge low -> high
        adj[u] |= 1 << v
    free = m - 1 if halve and m else m
    best: Dist = INF
    best_bits = None
    bits = 0
    count = 0
    for step in range(1 << free):
        if step:
            i = (step & -step).bit_length() - 1  # Gray code: flip edge i
            u, v = edges[i]
            bits ^= 1 << i
            if bits >> i & 1:
                adj[u] &= ~(1 << v)
                adj[v] |= 1 << u
            else:
                adj[v] &= ~(1 << u)
                adj[u] |= 1 << v
        count += 1
        cap = n if best == INF else int(best)
        d = _diameter_below(adj, cap)
        if d is not None:
            best, best_bits = d, bits
            if best <= stop_at:
                break
    if best_bits is None:
        return INF, None, count
    arcs = [((v, u) if best_bits >> i & 1 else (u, v)) for i, (u, v) in enumerate(edges)]
    return best, _arcset(X, arcs), count


def _branch(X: UndirectedGraph, k: int, clock: _Clock) -> Decision:
    n = X.n
    edges = _edge_order(X)
    out = [0] * n
    und = [0] * n
    for u, v in edges:
        und[u] |= 1 << v
        und[v] |= 1 << u
    chosen: list[tuple[int, int]] = []
    exhausted = [False]

    def feasible() -> bool:
        # optimistic relaxation: unoriented edges usable both ways
        return _all_within([out[i] | und[i] for i in range(n)], k)

    def rec(i: int) -> bool:
        if not clock.tick():
            exhausted[0] = True
            return False
        if i == len(edges):
            return True
        u, v = edges[i]
        und[u] &= ~(1 << v)
        und[v] &= ~(1 << u)
        options = [(u, v)] if i == 0 else [(u, v), (v, u)]
        for a, b in options:
            out[a] |= 1 << b
            chosen.append((a, b))
            if feasible() and rec(i + 1):
                return True
            chosen.pop()
            out[a] &= ~(1 << b)
            if exhausted[0]:
                break
        und[u] |= 1 << v
        und[v] |= 1 << u
        return False

    if not _all_within(und, k):
        return Decision("no", nodes=0)
    if rec(0):
        return Decision("yes", _arcset(X, chosen), clock.nodes)
    return Decision("unknown" if exhausted[0] else "no", nodes=clock.nodes)


def exists_orientation_diam_le(X: UndirectedGraph, k: int, budget: Optional[SearchBudget] = None,
                               mode: str = "auto") -> Decision:
    """Is there a full orientation of directed diameter at most ``k``?

    ``mode`` is "exhaustive", "backtrack" or "auto" (exhaustive up to
    ``budget.max_edges_exhaustive`` edges).  "no" is only reported after a
    complete search.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    budget = budget or SearchBudget()
    if X.n <= 1:
        return Decision("yes", _arcset(X, ()), 0)
    if not is_two_edge_connected(X):
        return Decision("no")
    if mode == "auto":
        mode = "exhaustive" if X.num_edges <= budget.max_edges_exhaustive else "backtrack"
    if mode == "exhaustive":
        d, wit, count = exhaustive_od(X, stop_at=k)
        return Decision("yes", wit, count) if d <= k else Decision("no", nodes=count)
    if mode == "backtrack":
        return _branch(X, k, _Clock(budget))
    raise ValueError(f"unknown mode {mode!r}")


def exact_od(X: UndirectedGraph, budget: Optional[SearchBudget] = None, mode: str = "auto",
             stats: Optional[dict] = None) -> Union[Dist, Unknown]:
    """Exact oriented diameter, or :class:`Unknown` bounds if the budget runs out."""
    budget = budget or SearchBudget()
    stats = stats if stats is not None else {}
    if X.n <= 1:
        return 0
    if not is_two_edge_connected(X):
        stats["reason"] = "bridge"
        return INF
    if mode == "auto":
        mode = "exhaustive" if X.num_edges <= budget.max_edges_exhaustive else "backtrack"
    if mode == "exhaustive":
        d, wit, count = exhaustive_od(X)
        stats.update(mode="exhaustive", nodes=count, witness=wit)
        return d
    if mode != "backtrack":
        raise ValueError(f"unknown mode {mode!r}")
    hi_arcs = robbins_orientation(X)
    hi = directed_diameter(hi_arcs)
    stats.update(mode="backtrack", nodes=0, witness=hi_arcs)
    clock = _Clock(budget)
    lo = 2 if X.n >= 3 else 1
    for k in range(lo, int(hi)):
        dec = _branch(X, k, clock)
        stats["nodes"] = clock.nodes
        if dec.answer == "yes":
            stats["witness"] = dec.witness
            return k
        if dec.answer == "unknown":
            return Unknown(k, hi)
    return hi
