"""Power graphs (and the enhanced power / commuting variants) of realized groups."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .errors import GroupValidationError, UnsupportedGroupError
from .groups import Cyclic, Group, is_nilpotent, realize

__all__ = [
    "UndirectedGraph", "BaseNonBasePartition", "Connectivity", "DegreeSizeReport",
    "power_graph", "variant_graph", "is_two_edge_connected", "dominating_vertices",
    "base_nonbase_partition", "degree_size_report", "complete_graph",
]


@dataclass(frozen=True, eq=False)
class UndirectedGraph:
    """Simple undirected graph on vertices ``0..n-1`` stored as a symmetric boolean matrix."""

    adj: np.ndarray
    labels: tuple[str, ...] = field(default=(), repr=False)
    orders: tuple[int, ...] = field(default=(), repr=False)

    def __post_init__(self):
        a = self.adj
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if a.diagonal().any():
            raise ValueError("adjacency must be irreflexive")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        a.setflags(write=False)

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u, v])

    def neighbors(self, v: int) -> list[int]:
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def degree(self, v: int) -> int:
        return int(self.adj[v].sum())

    @cached_property
    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return tuple(zip(us.tolist(), vs.tolist()))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def rows(self) -> tuple[int, ...]:
        """Adjacency rows as Python-int bitsets."""
        return tuple(sum(1 << int(u) for u in np.flatnonzero(r)) for r in self.adj)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)

    # -- export -----------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    @classmethod
    def from_json(cls, text: str) -> "UndirectedGraph":
        data = json.loads(text)
        return cls.from_edges(data["n"], data["edges"])

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], **kw) -> "UndirectedGraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u, v] = adj[v, u] = True
        return cls(adj, **kw)

    def to_dot(self, name: str = "G") -> str:
        lines = [f'graph "{name}" {{']
        for v in range(self.n):
            extra = f"\\no={self.orders[v]}" if self.orders else ""
            lines.append(f'  {v} [label="{v}{extra}"];')
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        return isinstance(other, UndirectedGraph) and np.array_equal(self.adj, other.adj)

    def __hash__(self) -> int:
        return hash(self.edges)


def complete_graph(n: int) -> UndirectedGraph:
    adj = np.ones((n, n), dtype=bool)
    np.fill_diagonal(adj, False)
    return UndirectedGraph(adj)


def _from_group(G: Group, adj: np.ndarray) -> UndirectedGraph:
    adj = adj.copy()
    np.fill_diagonal(adj, False)
    return UndirectedGraph(adj, labels=G.labels, orders=tuple(int(o) for o in G.order_of))


def power_graph(G: Group) -> UndirectedGraph:
    """Edge ``{x, y}`` iff one of them is a power of the other."""
    mem = G.membership
    return _from_group(G, mem | mem.T)


def variant_graph(G: Group, kind: str) -> UndirectedGraph:
    """``kind='enhanced'``: common cyclic subgroup; ``kind='commuting'``: ``xy = yx``."""
    if kind in ("enhanced", "epow"):
        mem = G.membership.astype(np.int32)
        return _from_group(G, (mem.T @ mem) > 0)
    if kind in ("commuting", "com"):
        return _from_group(G, G.mul == G.mul.T)
    if kind in ("power", "pow"):
        return power_graph(G)
    raise GroupValidationError(f"unknown graph kind {kind!r} (expected 'enhanced' or 'commuting')")


@dataclass(frozen=True)
class Connectivity:
    """Outcome of a 2-edge-connectivity test.

    ``bridge`` is a bridge edge when one exists; ``split`` is a pair of
    vertices in different components when the graph is disconnected.
    """

    two_edge_connected: bool
    bridge: Optional[tuple[int, int]] = None
    split: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.two_edge_connected


def _bridges(X: UndirectedGraph) -> tuple[list[tuple[int, int]], list[int]]:
    """Iterative DFS low-link; returns (bridges, component root of each vertex)."""
    n = X.n
    nbrs = [X.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    comp = [-1] * n
    bridges = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        comp[root] = root
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = t
                    t += 1
                    comp[w] = root
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > disc[parent]:
                    bridges.append((min(parent, v), max(parent, v)))
    return sorted(bridges), comp


def is_two_edge_connected(X: UndirectedGraph) -> Connectivity:
    if X.n <= 1:
        return Connectivity(True)
    bridges, comp = _bridges(X)
    roots = sorted(set(comp))
    if len(roots) > 1:
        other = next(v for v in range(X.n) if comp[v] != comp[0])
        return Connectivity(False, bridge=bridges[0] if bridges else None, split=(0, other))
    if bridges:
        return Connectivity(False, bridge=bridges[0])
    return Connectivity(True)


def dominating_vertices(X: UndirectedGraph) -> frozenset[int]:
    return frozenset(int(v) for v in np.flatnonzero(X.degrees == X.n - 1))


@dataclass(frozen=True)
class BaseNonBasePartition:
    """Non-identity elements split by how many primes divide their order.

    ``base_by_prime[p]`` holds the elements of order ``p^k`` (``k >= 1``);
    ``nonbase`` holds the elements whose order has at least two prime divisors.
    """

    base_by_prime: dict[int, frozenset[int]]
    nonbase: frozenset[int]

    @property
    def base(self) -> frozenset[int]:
        return frozenset().union(*self.base_by_prime.values())


def _prime_count(k: int) -> int:
    from .groups import factorize
    return len(factorize(k)) if k > 1 else 0


def base_nonbase_partition(G: Group) -> BaseNonBasePartition:
    if not is_nilpotent(G):
        raise UnsupportedGroupError(f"{G.name}: base/non-base split needs a nilpotent group (is_nilpotent failed)")
    if G.is_cyclic:
        raise UnsupportedGroupError(f"{G.name}: base/non-base split needs a non-cyclic group (is_cyclic held)")
    if len(G.prime_divisors) < 2:
        raise UnsupportedGroupError(f"{G.name}: base/non-base split needs at least two prime divisors of |G|")
    base: dict[int, set[int]] = {p: set() for p in G.prime_divisors}
    nonbase = set()
    for x in range(1, G.n):
        o = int(G.order_of[x])
        if _prime_count(o) == 1:
            p = next(q for q in G.prime_divisors if o % q == 0)
            base[p].add(x)
        else:
            nonbase.add(x)
    return BaseNonBasePartition({p: frozenset(s) for p, s in base.items()}, frozenset(nonbase))


@dataclass(frozen=True)
class DegreeSizeReport:
    n: int
    min_degree: int
    degree_threshold: float
    num_edges: int
    edge_threshold: int

    @property
    def degree_condition_holds(self) -> bool:
        return self.min_degree >= self.degree_threshold

    @property
    def edge_condition_holds(self) -> bool:
        return self.num_edges >= self.edge_threshold


def degree_size_report(n: int) -> DegreeSizeReport:
    """Compare Pow(Z_n) with the min-degree and edge-count sufficient conditions for oriented diameter 2."""
    if n < 3:
        raise ValueError("degree_size_report needs n >= 3")
    X = power_graph(realize(Cyclic(n)))
    return DegreeSizeReport(
        n=n,
        min_degree=int(X.degrees.min()),
        degree_threshold=n / 2 + math.log(n) / math.log(4 / 3),
        num_edges=X.num_edges,
        edge_threshold=math.comb(n, 2) - n + 5,
    )
