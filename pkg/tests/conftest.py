import itertools
from collections import deque

import pytest

from orientpow.expr import parse_group_expr
from orientpow.groups import realize


def group(expr):
    return realize(parse_group_expr(expr))


def naive_closure(G, x):
    """Powers of x by repeated multiplication, independent of cached tables."""
    out, cur = {0}, x
    while cur not in out:
        out.add(cur)
        cur = int(G.mul[cur, x])
    return out


def naive_power_edges(G):
    pows = [naive_closure(G, x) for x in range(G.n)]
    return {(u, v) for u, v in itertools.combinations(range(G.n), 2) if v in pows[u] or u in pows[v]}


def bfs_diameter(n, arcs):
    """Plain queue BFS from every vertex; inf if not strongly connected."""
    out = [[] for _ in range(n)]
    for u, v in arcs:
        out[u].append(v)
    worst = 0
    for s in range(n):
        dist = {s: 0}
        q = deque([s])
        while q:
            u = q.popleft()
            for w in out[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    q.append(w)
        if len(dist) < n:
            return float("inf")
        worst = max(worst, max(dist.values()))
    return worst


@pytest.fixture
def G():
    return group
