"""Diameter-3 partial orientation of Pow(Q_{2^k})."""

from __future__ import annotations

from ..digraph import ArcBuilder, ArcSet
from ..errors import UnsupportedGroupError
from ..groups import Group, Quaternion, cyclic_subgroup, is_generalized_quaternion, realize
from ..powgraph import power_graph
from ._verify import checked

__all__ = ["orient_quaternion", "quaternion_arcs"]


def quaternion_arcs(G: Group) -> ArcSet:
    """Diameter-3 arc pattern on any realization of a generalized quaternion group.

    Every vertex other than e and the involution y is put in a pair
    {c1, c2} adjacent to both hubs: the two order-4 elements of each order-4
    subgroup outside <x>, and consecutive ids of <x> \\ {e, y}.  With e -> y,
    each pair gets c1 -> e, y -> c1, e -> c2, c2 -> y and c1 -> c2.
    """
    if not is_generalized_quaternion(G):
        raise UnsupportedGroupError(f"{G.name} is not generalized quaternion")
    X = power_graph(G)
    e = 0
    (y,) = G.elements_of_order(2)
    x = G.elements_of_order(G.n // 2)[0]
    cyc = cyclic_subgroup(G, x)
    inner = sorted(cyc - {e, y})
    pairs = list(zip(inner[::2], inner[1::2]))
    seen = set(cyc)
    for c in range(G.n):
        if c not in seen:
            c1, c2 = sorted(cyclic_subgroup(G, c) - {e, y})
            seen.update((c1, c2))
            pairs.append((c1, c2))
    b = ArcBuilder(X)
    b.add(e, y)
    for c1, c2 in pairs:
        b.add_all([(c1, e), (y, c1), (e, c2), (c2, y), (c1, c2)])
    return b.build()


def orient_quaternion(k: int) -> ArcSet:
    if k < 3:
        raise UnsupportedGroupError(f"Q(2^k) needs k >= 3, got {k} (Q(4) would be Z(4))")
    G = realize(Quaternion(2 ** k))
    return checked(quaternion_arcs(G), f"orient_quaternion({k})", 3, exact=True)
