"""Optimal tournaments on complete graphs, with an embedded P4 gadget."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..digraph import ArcSet, distance_matrix
from ..errors import ConstructionError, NoStrongOrientationError
from ..powgraph import complete_graph
from ._verify import checked

__all__ = ["GadgetHandle", "tournament", "orient_complete", "extend_tournament", "K4_ARCS"]

# a->b, b->c, c->d, d->a, d->b, c->a: diameter 3, only d(a, d) = 3
K4_ARCS = ((0, 1), (1, 2), (2, 3), (3, 0), (3, 1), (2, 0))


@dataclass(frozen=True)
class GadgetHandle:
    """A named vertex pattern inside an orientation.

    ``kind == "P4"``: ``vertices = (a, b, c, d)`` with arcs a->b->c->d.
    ``kind == "C4"``: ``vertices = (n1, n2)`` and ``parts = (M1, M2)`` with
    n1->M1->n2->M2->n1.
    """

    kind: str
    vertices: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...] = ()

    def arcs(self) -> list[tuple[int, int]]:
        if self.kind == "P4":
            a, b, c, d = self.vertices
            return [(a, b), (b, c), (c, d)]
        n1, n2 = self.vertices
        m1, m2 = self.parts
        return ([(n1, u) for u in m1] + [(u, n2) for u in m1]
                + [(n2, u) for u in m2] + [(u, n1) for u in m2])

    def present_in(self, arcs: ArcSet) -> bool:
        return all(a in arcs.arcs for a in self.arcs())


def tournament(m: int) -> tuple[list[tuple[int, int]], Optional[tuple[int, int, int, int]]]:
    """Arcs of an optimal tournament on ``0..m-1`` and a P4 gadget ``(a, b, c, d)`` (None if m < 4).

    Odd m uses the rotational tournament ``i -> i+1..i+(m-1)/2``; even m >= 6
    adds a vertex beating the even ids of the rotational tournament on m-1
    vertices.  Diameter is 2 except m = 4 (3) and m <= 2.
    """
    if m <= 1:
        return [], None
    if m == 2:
        return [(0, 1)], None
    if m == 4:
        return list(K4_ARCS), (0, 1, 2, 3)
    k = m if m % 2 else m - 1
    h = (k - 1) // 2
    arcs = [(i, (i + s) % k) for i in range(k) for s in range(1, h + 1)]
    if k < m:
        v = k
        arcs += [(v, u) if u % 2 == 0 else (u, v) for u in range(k)]
    return arcs, ((0, 1, 2, 3) if m >= 5 else None)


def orient_complete(n: int, keep_gadget: bool = False):
    """Optimal orientation of K_n: diameter 2, or 3 when n = 4.

    With ``keep_gadget`` returns ``(arcs, GadgetHandle)``.
    """
    if n <= 2:
        raise NoStrongOrientationError(f"K_{n} has a bridge or is trivial; no diameter-bounded tournament",
                                       witness=(0, 1) if n == 2 else None)
    arcs, gadget = tournament(n)
    out = checked(ArcSet(complete_graph(n), frozenset(arcs)), f"orient_complete({n})",
                  3 if n == 4 else 2, exact=True, total=True)
    if keep_gadget:
        if gadget is None:
            raise NoStrongOrientationError(f"K_{n} is too small to hold a P4 gadget")
        return out, GadgetHandle("P4", gadget)
    return out


def extend_tournament(arcs: ArcSet | Sequence[tuple[int, int]], n: int) -> list[tuple[int, int]]:
    """Add vertex ``n`` to a diameter-2 tournament on ``0..n-1`` keeping diameter 2.

    Backtracking over the new vertex's out-set S: every old vertex must be in S
    or beaten by S, and in T = V \\ S or beating T.  Lower ids are tried as
    out-neighbours first.  Returns only the new arcs.
    """
    pairs = arcs.arcs if isinstance(arcs, ArcSet) else set(map(tuple, arcs))
    out = np.zeros((n, n), dtype=bool)
    for u, v in pairs:
        out[u, v] = True
    if n >= 2 and distance_matrix(out).max() > 2:
        raise ConstructionError("extend_tournament needs a diameter-2 tournament to start from")
    ins = [set(np.flatnonzero(out[:, u]).tolist()) for u in range(n)]
    outs = [set(np.flatnonzero(out[u]).tolist()) for u in range(n)]
    choice: list[bool] = []

    def ok_so_far(final: bool) -> bool:
        S = {u for u, c in enumerate(choice) if c}
        T = {u for u, c in enumerate(choice) if not c}
        undecided = set(range(len(choice), n))
        for u in range(n):
            reach_from = u in S or ins[u] & S or (not final and (u in undecided or ins[u] & undecided))
            reach_to = u in T or outs[u] & T or (not final and (u in undecided or outs[u] & undecided))
            if not (reach_from and reach_to):
                return False
        return True

    def search() -> bool:
        if len(choice) == n:
            return ok_so_far(True)
        for c in (True, False):
            choice.append(c)
            if ok_so_far(False) and search():
                return True
            choice.pop()
        return False

    if not search():
        raise ConstructionError(f"no diameter-2 extension of the given tournament on {n} vertices")
    return [(n, u) if c else (u, n) for u, c in enumerate(choice)]
