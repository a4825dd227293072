"""Orientations of Pow(Z_n) achieving the optimal diameter."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..digraph import ArcBuilder, ArcSet, INF, distance_matrix
from ..errors import ConstructionError, NoStrongOrientationError, UnsupportedGroupError
from ..groups import Cyclic, Group, direct_product, factorize, is_prime, realize
from ..powgraph import power_graph
from ._verify import checked
from .complete import orient_complete, tournament
from .layered import LayeredPartition, orient_layered

__all__ = ["orient_cyclic_diam3", "orient_cyclic_2q", "extend_by_prime_power",
           "orient_cyclic", "crt_relabel"]


@lru_cache(maxsize=None)
def _cyclic_pow(n: int):
    G = realize(Cyclic(n))
    return G, power_graph(G)


def _orders(n: int) -> np.ndarray:
    x = np.arange(n)
    return n // np.gcd(x, n)


def orient_cyclic_diam3(n: int) -> ArcSet:
    """Partial orientation of Pow(Z_n) with diameter <= 3 through two generators d1 = 1, d2 = n-1."""
    if n < 3:
        raise NoStrongOrientationError(f"Pow(Z_{n}) needs n >= 3 for this construction")
    _, X = _cyclic_pow(n)
    d1, d2 = 1, n - 1
    b = ArcBuilder(X)
    b.add(d1, d2)
    for u in range(n):
        if u not in (d1, d2):
            b.add(u, d1)
            b.add(d2, u)
    return checked(b.build(), f"orient_cyclic_diam3({n})", 3)


def _tournament_on(vertices) -> list[tuple[int, int]]:
    vs = sorted(vertices)
    arcs, _ = tournament(len(vs))
    return [(vs[u], vs[v]) for u, v in arcs]


def orient_cyclic_2q(alpha: int, beta: int, q: int) -> ArcSet:
    """Diameter-2 orientation of Pow(Z_N), N = 2^alpha q^beta, by induction on the q-part.

    G_j is the subgroup of order 2^alpha q^j (multiples of q^(beta-j)).  Each
    step runs the layered strategy with L_B = G_{j-1}, L_M = gen(G_j) and L_T
    the elements of order 2^k q^j, k < alpha.
    """
    if alpha < 1 or beta < 1 or q == 2 or not is_prime(q):
        raise UnsupportedGroupError(f"orient_cyclic_2q needs alpha, beta >= 1 and an odd prime q, got "
                                    f"({alpha}, {beta}, {q})")
    if (alpha, beta, q) == (1, 1, 3):
        raise UnsupportedGroupError("Pow(Z_6) has oriented diameter 3; use orient_cyclic_diam3(6)")
    N = 2 ** alpha * q ** beta
    _, X = _cyclic_pow(N)
    o = _orders(N)
    two = 2 ** alpha

    def with_order(pred):
        return [x for x in range(N) if pred(int(o[x]))]

    if (alpha, q) == (1, 3):
        j0 = 2
        part = LayeredPartition(
            L_T=with_order(lambda k: k in (1, 3, 9)),
            L_M=with_order(lambda k: k == 18),
            L_B=with_order(lambda k: k in (2, 6)),
        )
    else:
        j0 = 1
        part = LayeredPartition(
            L_T=with_order(lambda k: k > 1 and two % k == 0),
            L_M=with_order(lambda k: k == two * q),
            L_B=with_order(lambda k: k == 1 or (k % q == 0 and two % (k // q) == 0 and k < two * q)),
        )
    arcs = orient_layered(X, part, _tournament_on(part.L_T), _tournament_on(part.L_B))
    for j in range(j0 + 1, beta + 1):
        qj = q ** j
        part = LayeredPartition(
            L_T=with_order(lambda k: k % qj == 0 and two % (k // qj) == 0 and k < two * qj),
            L_M=with_order(lambda k: k == two * qj),
            L_B=with_order(lambda k: (two * q ** (j - 1)) % k == 0),
        )
        arcs = orient_layered(X, part, _tournament_on(part.L_T), arcs.arcs)
    return checked(arcs, f"orient_cyclic_2q({alpha}, {beta}, {q})", 2, exact=True, total=True)


def extend_by_prime_power(H: Group, arcs_H: ArcSet, p: int, alpha: int) -> ArcSet:
    """Diameter-2 orientation of Pow(H x Z_{p^alpha}) from one of Pow(H).

    Element ``(h, z)`` has id ``h * p**alpha + z``.  Layer j adds the
    elements whose second coordinate has order p^j: L_T is the previous
    layer, L_M = gen(H) x ([g_j] minus g_j), and L_B copies ``arcs_H`` while
    ignoring the second coordinate.  When |[g_j]| is 2 or 4 the single far
    pair inside each clique {u} x [g_j] is closed by a triangle through e.
    """
    if not is_prime(p) or p == 2:
        raise UnsupportedGroupError(f"extend_by_prime_power needs an odd prime, got {p}")
    if alpha < 1:
        raise UnsupportedGroupError(f"alpha must be >= 1, got {alpha}")
    if H.n % p == 0:
        raise UnsupportedGroupError(f"gcd(|H|, p) must be 1, got |H| = {H.n}, p = {p}")
    if not H.is_cyclic:
        raise UnsupportedGroupError(f"{H.name} is not cyclic; the extension needs generators of H")
    if arcs_H.n != H.n:
        raise UnsupportedGroupError("arcs_H is not an orientation of Pow(H)")
    if not arcs_H.is_total:
        arcs_H = arcs_H.union(arcs_H.unoriented)
    dH = distance_matrix(arcs_H)
    if dH.max() != 2:
        raise UnsupportedGroupError(f"arcs_H must have directed diameter 2, has {dH.max()}")

    m, P = H.n, p ** alpha
    G = direct_product(H, realize(Cyclic(P)))
    X = power_graph(G)
    gen_H = set(H.elements_of_order(m))
    OH = arcs_H.out_matrix
    oz = _orders(P)
    arcs = ArcSet(X, frozenset((u * P, v * P) for u, v in arcs_H.arcs))
    prev = [h * P for h in range(m)]
    for j in range(1, alpha + 1):
        g = p ** (alpha - j)
        cls = [z for z in range(P) if oz[z] == p ** j]
        L_M = [h * P + z for h in sorted(gen_H) for z in cls if z != g]
        L_B = [h * P + z for h in range(m) for z in cls if h not in gen_H] + [h * P + g for h in sorted(gen_H)]
        lb = np.array(L_B)
        hu = lb // P
        mimic = OH[np.ix_(hu, hu)]
        us, vs = np.nonzero(mimic)
        b = ArcBuilder(X)
        b.add_all(zip(lb[us].tolist(), lb[vs].tolist()))
        local, _ = tournament(len(cls))
        local_d = distance_matrix(np.array([[(i, k) in set(local) for k in range(len(cls))]
                                            for i in range(len(cls))]))
        far = [(i, k) for i in range(len(cls)) for k in range(len(cls)) if i != k and local_d[i, k] > 2]
        for h in range(m):
            if h in gen_H:
                continue
            ids = [h * P + z for z in cls]
            b.add_all((ids[u], ids[v]) for u, v in local)
            for u, v in far:
                b.add(ids[u], 0)
                b.add(0, ids[v])
        part = LayeredPartition(L_T=prev, L_M=L_M, L_B=L_B)
        arcs = orient_layered(X, part, arcs.arcs, b.build().arcs)
        prev = list(part.vertices)
    return checked(arcs, f"extend_by_prime_power({H.name}, {p}, {alpha})", 2, exact=True, total=True)


def crt_relabel(arcs: ArcSet, m: int, P: int) -> ArcSet:
    """Move an orientation of Pow(Z_m x Z_P) (ids h*P + z) onto Pow(Z_{mP}) via x -> (x mod m, x mod P)."""
    n = m * P
    to_cyc = np.empty(n, dtype=np.int64)
    x = np.arange(n)
    to_cyc[(x % m) * P + (x % P)] = x
    _, X = _cyclic_pow(n)
    return ArcSet(X, frozenset((int(to_cyc[u]), int(to_cyc[v])) for u, v in arcs.arcs))


def orient_cyclic(n: int) -> tuple[float, ArcSet | None]:
    """Return ``(claimed oriented diameter, orientation)`` for Pow(Z_n)."""
    if n < 1:
        raise UnsupportedGroupError(f"Z(n) needs n >= 1, got {n}")
    if n == 1:
        return 0, ArcSet(_cyclic_pow(1)[1])
    if n == 2:
        return INF, None
    if n in (4, 6):
        arcs = orient_cyclic_diam3(n)
        return 3, checked(arcs, f"orient_cyclic({n})", 3, exact=True)
    f = factorize(n)
    primes = sorted(f)
    if len(primes) == 1:
        _, X = _cyclic_pow(n)
        return 2, ArcSet(X, orient_complete(n).arcs)
    if primes[0] == 2:
        q = primes[-1]
        m = 2 ** f[2] * q ** f[q]
        arcs = orient_cyclic_2q(f[2], f[q], q)
        rest = primes[1:-1]
    else:
        m = primes[0] ** f[primes[0]]
        arcs = ArcSet(_cyclic_pow(m)[1], orient_complete(m).arcs)
        rest = primes[1:]
    for p in rest:
        P = p ** f[p]
        arcs = crt_relabel(extend_by_prime_power(_cyclic_pow(m)[0], arcs, p, f[p]), m, P)
        m *= P
    if m != n:
        raise ConstructionError(f"orient_cyclic({n}): composed order {m}")
    return 2, checked(arcs, f"orient_cyclic({n})", 2, exact=True, total=True)
