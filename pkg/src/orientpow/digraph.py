"""Partial orientations and directed distances."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Union

import numpy as np

from .errors import ConstructionError
from .powgraph import UndirectedGraph

__all__ = [
    "INF", "ArcSet", "ArcBuilder", "Violation", "validate", "distance_matrix",
    "directed_diameter", "eccentricity", "complete", "fmt_dist",
]

INF = math.inf
Dist = Union[int, float]


@dataclass(frozen=True)
class Violation:
    kind: str  # "anti-parallel pair" | "arc without edge" | "unoriented edge" | "self-loop"
    pair: tuple[int, int]

    def __str__(self) -> str:
        return f"{self.kind}: {self.pair}"


@dataclass(frozen=True, eq=False)
class ArcSet:
    """A set of arcs ``(u, v)`` over the vertices of ``graph``.

    Construction does not validate; call :func:`validate` (or build through
    :class:`ArcBuilder`, which rejects bad arcs eagerly).
    """

    graph: UndirectedGraph
    arcs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    @property
    def n(self) -> int:
        return self.graph.n

    def __len__(self) -> int:
        return len(self.arcs)

    def __contains__(self, arc) -> bool:
        return tuple(arc) in self.arcs

    def __iter__(self):
        return iter(sorted(self.arcs))

    @cached_property
    def out_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        if self.arcs:
            us, vs = zip(*self.arcs)
            m[list(us), list(vs)] = True
        m.setflags(write=False)
        return m

    @cached_property
    def unoriented(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v in self.graph.edges
                     if (u, v) not in self.arcs and (v, u) not in self.arcs)

    @property
    def is_total(self) -> bool:
        return not self.unoriented

    def union(self, other: "ArcSet | Iterable[tuple[int, int]]") -> "ArcSet":
        extra = other.arcs if isinstance(other, ArcSet) else frozenset(map(tuple, other))
        return ArcSet(self.graph, self.arcs | extra)

    def reversed(self) -> "ArcSet":
        return ArcSet(self.graph, frozenset((v, u) for u, v in self.arcs))

    def restricted(self, vertices: Iterable[int]) -> frozenset[tuple[int, int]]:
        vs = set(vertices)
        return frozenset(a for a in self.arcs if a[0] in vs and a[1] in vs)

    # -- export -----------------------------------------------------------

    def to_dict(self) -> dict:
        return {"arcs": [list(a) for a in sorted(self.arcs)],
                "unoriented": [list(e) for e in self.unoriented]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dot(self, name: str = "O", header: Optional[str] = None) -> str:
        lines = []
        if header:
            lines.extend(f"// {h}" for h in header.splitlines())
        lines.append(f'digraph "{name}" {{')
        orders = self.graph.orders
        for v in range(self.n):
            extra = f"\\no={orders[v]}" if orders else ""
            lines.append(f'  {v} [label="{v}{extra}"];')
        for u, v in sorted(self.arcs):
            lines.append(f"  {u} -> {v};")
        # a digraph cannot hold `--` edges, so unoriented edges are drawn undirected
        for u, v in self.unoriented:
            lines.append(f"  {u} -> {v} [dir=none, style=dashed];")
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, graph: UndirectedGraph, data: dict) -> "ArcSet":
        return cls(graph, frozenset((int(u), int(v)) for u, v in data["arcs"]))


class ArcBuilder:
    """Accumulates arcs for a construction, refusing contradictions."""

    def __init__(self, graph: UndirectedGraph):
        self.graph = graph
        self._arcs: set[tuple[int, int]] = set()

    def add(self, u: int, v: int) -> None:
        if u == v:
            raise ConstructionError(f"self-loop at {u}")
        if not self.graph.adj[u, v]:
            raise ConstructionError(f"arc without edge: ({u}, {v})")
        if (v, u) in self._arcs:
            raise ConstructionError(f"anti-parallel pair: ({u}, {v}) conflicts with ({v}, {u})")
        self._arcs.add((u, v))

    def add_all(self, arcs: Iterable[tuple[int, int]]) -> None:
        for u, v in arcs:
            self.add(u, v)

    def has(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def oriented(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs or (v, u) in self._arcs

    def build(self) -> ArcSet:
        return ArcSet(self.graph, frozenset(self._arcs))


def validate(arcs: ArcSet, require_total: bool = False) -> Optional[Violation]:
    """Return ``None`` if ``arcs`` is a legal (partial) orientation, else the first violation."""
    for u, v in sorted(arcs.arcs):
        if u == v:
            return Violation("self-loop", (u, v))
        if not arcs.graph.adj[u, v]:
            return Violation("arc without edge", (u, v))
        if (v, u) in arcs.arcs:
            return Violation("anti-parallel pair", (min(u, v), max(u, v)))
    if require_total and arcs.unoriented:
        return Violation("unoriented edge", arcs.unoriented[0])
    return None


def distance_matrix(arcs: ArcSet | np.ndarray, within: Optional[Iterable[int]] = None) -> np.ndarray:
    """All-pairs directed distances (float array, ``inf`` for unreachable).

    Level-synchronous BFS from every source at once: the frontier matrix is
    pushed through the out-adjacency with one matrix product per level.
    ``within`` restricts the digraph to an induced vertex subset (rows and
    columns then follow the sorted subset).
    """
    out = arcs.out_matrix if isinstance(arcs, ArcSet) else np.asarray(arcs, dtype=bool)
    if within is not None:
        idx = sorted(set(within))
        out = out[np.ix_(idx, idx)]
    n = out.shape[0]
    dist = np.full((n, n), np.inf)
    if n == 0:
        return dist
    a = out.astype(np.float32)
    reach = np.eye(n, dtype=bool)
    frontier = reach.copy()
    np.fill_diagonal(dist, 0)
    d = 0
    while frontier.any():
        d += 1
        nxt = (frontier.astype(np.float32) @ a) > 0
        nxt &= ~reach
        dist[nxt] = d
        reach |= nxt
        frontier = nxt
    return dist


def _as_dist(x: float) -> Dist:
    return INF if math.isinf(x) else int(x)


def directed_diameter(arcs: ArcSet, within: Optional[Iterable[int]] = None) -> Dist:
    """Largest directed distance over ordered pairs; ``inf`` if not strongly connected."""
    dist = distance_matrix(arcs, within)
    if dist.size == 0:
        return 0
    return _as_dist(float(dist.max()))


def eccentricity(arcs: ArcSet, v: int) -> Dist:
    """``max_u max(d(v,u), d(u,v))``."""
    if not 0 <= v < arcs.n:
        raise IndexError(f"vertex {v} out of range 0..{arcs.n - 1}")
    dist = distance_matrix(arcs)
    return _as_dist(float(max(dist[v].max(), dist[:, v].max())))


def complete(arcs: ArcSet) -> ArcSet:
    """Orient every remaining edge from the lower id to the higher id."""
    return arcs.union(arcs.unoriented)


def fmt_dist(x: Dist) -> Union[int, str]:
    """JSON-friendly distance: integers stay integers, infinity becomes ``"inf"``."""
    return "inf" if isinstance(x, float) and math.isinf(x) else int(x)
