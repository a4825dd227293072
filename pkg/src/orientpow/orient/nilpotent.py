"""Diameter-3 partial orientations for non-cyclic nilpotent groups.

Shared core (O1-O3): non-base elements point to e, e points to base elements,
each non-base class N is tied to every adjacent base class M of odd prime
order by a C4 gadget on two anchors of N, and odd prime-power base elements
of higher order point to their non-base neighbours.  Each condition of the
classification adds its own extra arcs on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..conditions import evaluate_conditions, require_nilpotent_mixed
from ..digraph import ArcBuilder, ArcSet
from ..errors import UnsupportedGroupError
from ..groups import Group, factorize, ge_classes, maximal_cyclic_subgroups
from ..powgraph import is_two_edge_connected, power_graph
from ._verify import checked
from .complete import GadgetHandle
from .glued import orient_glued_diam4

__all__ = ["NilpotentCore", "orient_nilpotent_o123", "orient_two_odd_primes", "orient_no_mcs_2pk",
           "orient_one_p_order", "orient_one_2_order", "orient_nilpotent"]


@dataclass
class NilpotentCore:
    """Builder state after O1-O3 plus the gadget anchor registry.

    ``anchors[(n_cls, m_cls)]`` is the C4 gadget between non-base class
    ``n_cls`` and base class ``m_cls``; ``used[n_cls]`` lists anchors taken.
    """

    G: Group
    builder: ArcBuilder
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    class_order: tuple[int, ...]
    anchors: dict[tuple[int, int], GadgetHandle] = field(default_factory=dict)
    used: dict[int, list[int]] = field(default_factory=dict)

    def is_base(self, x: int) -> bool:
        return len(factorize(int(self.G.order_of[x]))) == 1

    def nonbase_classes(self) -> list[int]:
        return [i for i, k in enumerate(self.class_order) if len(factorize(k)) >= 2]

    def base_classes(self) -> list[int]:
        return [i for i, k in enumerate(self.class_order) if len(factorize(k)) == 1]

    def sub_class(self, n_cls: int, k: int) -> int:
        """Class of the unique order-k elements inside the cyclic subgroup of class ``n_cls``."""
        n = self.classes[n_cls][0]
        return self.class_of[self.G.power(n, self.class_order[n_cls] // k)]

    def gadget(self, n_cls: int, m_cls: int) -> GadgetHandle:
        """C4 gadget between N and M on the next two unused anchors of N; the rest of N receives from M."""
        N = self.classes[n_cls]
        taken = self.used.setdefault(n_cls, [])
        free = [v for v in N if v not in taken]
        if len(free) < 2:
            raise UnsupportedGroupError(f"class {n_cls} has no free anchor pair")
        n1, n2 = free[:2]
        taken.extend((n1, n2))
        M = self.classes[m_cls]
        g = GadgetHandle("C4", (n1, n2), (M[:1], M[1:]))
        self.builder.add_all(g.arcs())
        self.builder.add_all((u, v) for u in M for v in N if v not in (n1, n2))
        self.anchors[(n_cls, m_cls)] = g
        return g

    def neighbors_out(self, sources, pred) -> None:
        """Arcs from each source to every adjacent element satisfying ``pred``."""
        X = self.builder.graph
        for u in sources:
            for v in X.neighbors(u):
                if v != 0 and pred(v):
                    self.builder.add(u, v)


def _order_factors(G: Group, x: int) -> dict[int, int]:
    return factorize(int(G.order_of[x]))


def orient_nilpotent_o123(G: Group) -> NilpotentCore:
    require_nilpotent_mixed(G, "orient_nilpotent_o123")
    X = power_graph(G)
    part = ge_classes(G)
    core = NilpotentCore(G, ArcBuilder(X), part.classes, part.class_of, part.class_order)
    b = core.builder
    for x in range(1, G.n):
        if core.is_base(x):
            b.add(0, x)
        else:
            b.add(x, 0)
    for n_cls in core.nonbase_classes():
        for p in sorted(factorize(core.class_order[n_cls])):
            if p != 2:
                core.gadget(n_cls, core.sub_class(n_cls, p))
    odd_high = [x for x in range(1, G.n)
                if core.is_base(x) and 2 not in (f := _order_factors(G, x)) and max(f.values()) >= 2]
    core.neighbors_out(odd_high, lambda v: not core.is_base(v))
    return core


def _even_extras(core: NilpotentCore, nb_to_involution) -> None:
    """O5 (order-4 gadgets) and O6 (2^a, a >= 3, to non-base), then NB -> involution per predicate."""
    G = core.G
    for n_cls in core.nonbase_classes():
        if core.class_order[n_cls] % 4 == 0:
            core.gadget(n_cls, core.sub_class(n_cls, 4))
    high2 = [x for x in range(1, G.n) if core.is_base(x) and _order_factors(G, x).get(2, 0) >= 3]
    core.neighbors_out(high2, lambda v: not core.is_base(v))
    for n_cls in core.nonbase_classes():
        if nb_to_involution(factorize(core.class_order[n_cls])):
            inv = core.classes[core.sub_class(n_cls, 2)][0]
            core.builder.add_all((v, inv) for v in core.classes[n_cls])


def _finish(core: NilpotentCore, name: str) -> ArcSet:
    return checked(core.builder.build(), f"{name}({core.G.name})", 3, exact=True)


def orient_two_odd_primes(G: Group) -> ArcSet:
    require_nilpotent_mixed(G, "orient_two_odd_primes")
    if len([p for p in G.prime_divisors if p != 2]) < 2:
        raise UnsupportedGroupError(f"orient_two_odd_primes: |{G.name}| has fewer than two odd prime divisors")
    core = orient_nilpotent_o123(G)
    if G.n % 2 == 0:
        # O4: involution -> non-base neighbours of order 2^a p^b (one odd prime)
        core.neighbors_out(G.elements_of_order(2),
                           lambda v: not core.is_base(v) and len(_order_factors(G, v)) == 2)
        # O7: non-base of order 2 p^a q^b ... -> its involution
        _even_extras(core, lambda f: f.get(2) == 1 and len(f) >= 3)
    return _finish(core, "orient_two_odd_primes")


def _require_2p(G: Group, what: str) -> int:
    require_nilpotent_mixed(G, what)
    primes = G.prime_divisors
    if len(primes) != 2 or primes[0] != 2:
        raise UnsupportedGroupError(f"{what}: |{G.name}| = {G.n} is not of the form 2^m p^n")
    return primes[1]


def orient_no_mcs_2pk(G: Group) -> ArcSet:
    _require_2p(G, "orient_no_mcs_2pk")
    for C in maximal_cyclic_subgroups(G):
        f = factorize(len(C))
        if f.get(2) == 1 and len(f) == 2:
            raise UnsupportedGroupError(
                f"orient_no_mcs_2pk: {G.name} has a maximal cyclic subgroup of order {len(C)}")
    core = orient_nilpotent_o123(G)
    # O4: involution -> non-base neighbours of order 2 p^b
    core.neighbors_out(G.elements_of_order(2),
                       lambda v: not core.is_base(v) and _order_factors(G, v).get(2) == 1)
    # O7: non-base of order 4 p^b -> its involution
    _even_extras(core, lambda f: f.get(2) == 2)
    return _finish(core, "orient_no_mcs_2pk")


def orient_one_p_order(G: Group) -> ArcSet:
    p = _require_2p(G, "orient_one_p_order")
    if len(G.elements_of_order(p)) != p - 1:
        raise UnsupportedGroupError(f"orient_one_p_order: {G.name} has more than one subgroup of order {p}")
    core = orient_nilpotent_o123(G)
    twos = [x for x in range(1, G.n) if core.is_base(x) and 2 in _order_factors(G, x)]
    core.neighbors_out(twos, lambda v: not core.is_base(v))
    return _finish(core, "orient_one_p_order")


def orient_one_2_order(G: Group) -> ArcSet:
    """Unique involution x.  Without a maximal cyclic subgroup of order 2p^k the
    no-mcs construction applies; otherwise every class M of order p^i is matched
    with the class N of order 2p^i above it and the pieces hang off e and x.
    """
    _require_2p(G, "orient_one_2_order")
    inv = G.elements_of_order(2)
    if len(inv) != 1:
        raise UnsupportedGroupError(f"orient_one_2_order: {G.name} has {len(inv)} elements of order 2")
    has_2pk = any(factorize(len(C)).get(2) == 1 for C in maximal_cyclic_subgroups(G))
    if not has_2pk:
        return orient_no_mcs_2pk(G)
    (x,) = inv
    X = power_graph(G)
    part = ge_classes(G)
    b = ArcBuilder(X)
    b.add(0, x)
    for ci, M in enumerate(part.classes):
        k = part.class_order[ci]
        if k == 1 or k % 2 == 0:
            continue
        N = part.classes[part.class_of[int(G.mul[M[0], x])]]
        a, B = N[0], N[1:]
        for v in B:
            b.add_all([(a, v), (0, v), (v, x)])
        b.add_all([(a, 0), (x, a)])
        b.add_all((v, u) for v in N for u in M)
        b.add_all((u, 0) for u in M)
    return checked(b.build(), f"orient_one_2_order({G.name})", 3, exact=True)


def orient_nilpotent(G: Group) -> tuple[int, ArcSet]:
    """``(claimed oriented diameter, orientation)`` following the first satisfied condition."""
    require_nilpotent_mixed(G, "orient_nilpotent")
    conn = is_two_edge_connected(power_graph(G))
    if not conn:
        raise UnsupportedGroupError(f"orient_nilpotent: {G.name} has a maximal cyclic subgroup of order 2 "
                                    f"(bridge {conn.bridge})")
    cond = evaluate_conditions(G)
    dispatch = {"a": orient_two_odd_primes, "b": orient_no_mcs_2pk,
                "c": orient_one_p_order, "d": orient_one_2_order}
    if cond.first is None:
        return 4, checked(orient_glued_diam4(G), f"orient_nilpotent({G.name})", 4, exact=True)
    return 3, dispatch[cond.first](G)
