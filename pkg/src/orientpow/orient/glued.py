"""Diameter-4 orientation for any power graph without bridges.

The non-identity elements split into cliques (GE-classes of order > 2, each
order-2 element attached to the class of a generator of a cyclic subgroup
containing it).  Each clique together with ``e`` gets a tournament in which
``e`` has eccentricity 2, so any two vertices are joined through ``e`` by a
path of length at most 4.
"""

from __future__ import annotations

from ..digraph import ArcBuilder, ArcSet
from ..errors import NoStrongOrientationError
from ..groups import Group, ge_classes
from ..powgraph import is_two_edge_connected, power_graph
from ._verify import check_ecc, checked
from .complete import tournament

__all__ = ["glued_cliques", "orient_glued_diam4"]


def glued_cliques(G: Group) -> list[tuple[int, ...]]:
    """Cliques covering G \\ {e}; raises if some order-2 element is maximal cyclic."""
    part = ge_classes(G)
    mem = G.membership
    order = G.order_of
    cliques: dict[int, list[int]] = {}
    for ci, cls in enumerate(part.classes):
        if part.class_order[ci] > 2:
            cliques[ci] = list(cls)
    for y in G.elements_of_order(2):
        hosts = [x for x in range(G.n) if order[x] > 2 and mem[x, y]]
        if not hosts:
            raise NoStrongOrientationError(
                f"{G.name}: <{G.label(y)}> is a maximal cyclic subgroup of order 2, so Pow(G) has a bridge",
                witness=(0, y))
        cliques[part.class_of[min(hosts)]].append(y)
    return [tuple(sorted(c)) for _, c in sorted(cliques.items())]


def orient_glued_diam4(G: Group) -> ArcSet:
    X = power_graph(G)
    if G.n == 1:
        return ArcSet(X)
    conn = is_two_edge_connected(X)
    if not conn:
        raise NoStrongOrientationError(f"{G.name}: power graph has a bridge {conn.bridge}",
                                       witness=conn.bridge)
    b = ArcBuilder(X)
    for clique in glued_cliques(G):
        m = len(clique) + 1
        arcs, _ = tournament(m)
        # put e at local index 1: in the K4 tournament vertex 1 has eccentricity 2
        local = list(clique)
        local.insert(1, 0)
        b.add_all((local[u], local[v]) for u, v in arcs)
    out = b.build()
    check_ecc(out, 0, 2, f"orient_glued_diam4({G.name})")
    return checked(out, f"orient_glued_diam4({G.name})", 4)
