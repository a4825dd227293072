"""Three-layer strategy for diameter-2 orientations.

Given vertex layers L_T, L_M, L_B where L_M consists of dominating vertices,
L_T already has a diameter-2 orientation and L_B pairs are joined by directed
paths of length <= 2, the layers are stitched through a P4 gadget a->b->c->d
inside a tournament on L_M and through the remaining L_M vertices taken in
pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from ..digraph import ArcBuilder, ArcSet, distance_matrix
from ..errors import UnsupportedGroupError
from ..powgraph import UndirectedGraph
from ._verify import checked
from .complete import tournament

__all__ = ["LayeredPartition", "orient_layered", "complete_within"]


@dataclass(frozen=True)
class LayeredPartition:
    L_T: tuple[int, ...]
    L_M: tuple[int, ...]
    L_B: tuple[int, ...]

    def __post_init__(self):
        for name in ("L_T", "L_M", "L_B"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.L_T + self.L_M + self.L_B))

    def check(self, X: UndirectedGraph) -> None:
        sets = [set(self.L_T), set(self.L_M), set(self.L_B)]
        if sum(map(len, sets)) != len(set().union(*sets)):
            raise UnsupportedGroupError("layers are not disjoint")
        m = len(self.L_M)
        if m < 4 or m % 2:
            raise UnsupportedGroupError(f"|L_M| must be even and >= 4, got {m}")
        V = np.array(self.vertices)
        sub = X.adj[np.ix_(V, V)]
        pos = {v: i for i, v in enumerate(self.vertices)}
        for v in self.L_M:
            if sub[pos[v]].sum() != len(V) - 1:
                raise UnsupportedGroupError(f"L_M vertex {v} is not dominating")
        if m == 4 and not self.L_B:
            raise UnsupportedGroupError("|L_M| = 4 needs a nonempty L_B for the a->r->d repair")


def _pair_dist(arcs: Iterable[tuple[int, int]], n: int, within: tuple[int, ...]) -> float:
    if len(within) <= 1:
        return 0
    out = np.zeros((n, n), dtype=bool)
    for u, v in arcs:
        out[u, v] = True
    dist = distance_matrix(out)
    idx = np.array(within)
    return float(dist[np.ix_(idx, idx)].max())


def orient_layered(X: UndirectedGraph, part: LayeredPartition,
                   arcs_T: Iterable[tuple[int, int]], arcs_B: Iterable[tuple[int, int]],
                   complete: bool = True) -> ArcSet:
    """Diameter-2 orientation of ``X`` restricted to the partition's vertices.

    ``arcs_T`` must give X[L_T] diameter <= 2 on its own; ``arcs_B`` must join
    every ordered L_B pair by a path of length <= 2 (it may use vertices of
    L_T).  Edges left over are oriented low->high when ``complete``.
    """
    part.check(X)
    arcs_T = set(map(tuple, arcs_T))
    arcs_B = set(map(tuple, arcs_B))
    if any(u not in part.L_T or v not in part.L_T for u, v in arcs_T):
        raise UnsupportedGroupError("arcs_T leaves L_T")
    if _pair_dist(arcs_T, X.n, part.L_T) > 2:
        raise UnsupportedGroupError("condition (a) fails: arcs_T does not give X[L_T] diameter <= 2")
    if _pair_dist(arcs_B, X.n, part.L_B) > 2:
        raise UnsupportedGroupError("condition (c) fails: arcs_B does not join all L_B pairs within 2 steps")

    b = ArcBuilder(X)
    b.add_all(arcs_T)
    b.add_all(arcs_B)
    M = part.L_M
    local, gadget = tournament(len(M))
    tour = {(M[u], M[v]) for u, v in local}
    b.add_all(tour)
    a, bb, c, d = (M[i] for i in gadget)
    for u in part.L_T:
        b.add_all([(u, a), (bb, u), (u, c), (d, u)])
    a_to_d = (a, d) in tour
    for r in part.L_B:
        b.add_all([(c, r), (r, bb)])
        b.add_all([(d, r), (r, a)] if a_to_d else [(a, r), (r, d)])
    rest = [v for v in M if v not in (a, bb, c, d)]
    for v, w in zip(rest[::2], rest[1::2]):
        if (w, v) in tour:
            v, w = w, v
        for x in part.L_T + part.L_B:
            b.add_all([(w, x), (x, v)])
    out = b.build()
    if complete:
        out = complete_within(out, part.vertices)
    return checked(out, "orient_layered", 2, within=part.vertices)


def complete_within(arcs: ArcSet, vertices: Iterable[int]) -> ArcSet:
    """Orient the unoriented edges inside ``vertices`` from lower to higher id."""
    vs = set(vertices)
    extra = [(u, v) for u, v in arcs.unoriented if u in vs and v in vs]
    return arcs.union(extra)
