"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Run standalone with ``python3 tests/test_acceptance.py`` or through pytest.
"""

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conftest import bfs_diameter, group  # noqa: E402

from orientpow.classify import classify_od, verify_certificate  # noqa: E402
from orientpow.corpus import CORPUS  # noqa: E402
from orientpow.digraph import INF, eccentricity  # noqa: E402
from orientpow.groups import (count_order_p_subgroups, cyclic_subgroup, direct_product, euler_phi,  # noqa: E402
                              ge_classes, maximal_cyclic_subgroups, realize, Cyclic)
from orientpow.oracle import exact_od, exists_orientation_diam_le  # noqa: E402
from orientpow.orient import orient_glued_diam4, orient_quaternion  # noqa: E402
from orientpow.powgraph import (complete_graph, degree_size_report, is_two_edge_connected,  # noqa: E402
                                power_graph, variant_graph)


def check_1():
    """Cyclic table n = 1..60, exact values and exact BFS diameters, under 10 s."""
    t = time.perf_counter()
    bad = []
    for n in range(1, 61):
        want = {1: 0, 2: INF, 4: 3, 6: 3}.get(n, 2)
        r = classify_od(realize(Cyclic(n)), orient=True)
        if r.od != want:
            bad.append((n, "od", r.od))
        if n >= 3 and bfs_diameter(n, r.orientation.arcs) != want:
            bad.append((n, "bfs"))
    dt = time.perf_counter() - t
    return not bad and dt < 10, f"{60 - len(bad)}/60 rows exact, {dt:.2f}s (limit 10s)"


def check_2():
    """exact_od agrees with classify_od on the eight small graphs, under 60 s."""
    t = time.perf_counter()
    cases = [("Z(4)", 3), ("Z(5)", 2), ("Z(6)", 3), ("Z(3)xZ(3)", 4), ("Q(8)", 3), ("Z(2)xZ(2)", INF)]
    bad = []
    for expr, want in cases:
        G = group(expr)
        X = power_graph(G)
        got, cls = exact_od(X), classify_od(G).od
        if X.num_edges > 16 or not got == cls == want:
            bad.append((expr, got, cls))
    for n, want in ((4, 3), (5, 2)):
        if exact_od(complete_graph(n)) != want:
            bad.append((f"K{n}",))
    dt = time.perf_counter() - t
    return not bad and dt < 60, f"{8 - len(bad)}/8 agree, {dt:.2f}s (limit 60s) {bad or ''}"


def check_3():
    """Quaternion constructions have diameter exactly 3; Pow(Q8) has no diameter-2 orientation."""
    diams = {2 ** k: bfs_diameter(2 ** k, orient_quaternion(k).arcs) for k in (3, 4, 5)}
    no2 = exists_orientation_diam_le(power_graph(group("Q(8)")), 2).answer
    return all(d == 3 for d in diams.values()) and no2 == "no", f"diameters {diams}, Q8 diam<=2: {no2}"


NILPOTENT = [("Z(2)xZ(6)", 3, "c"), ("Q(8)xZ(3)", 3, "d"), ("Z(12)xZ(20)", 3, "b"),
             ("Z(3)xZ(3)xZ(5)", 3, "a"), ("Z(2)xZ(2)xZ(9)", 3, "c"), ("Z(6)xZ(6)", 4, None)]


def check_4():
    """Nilpotent corpus: values, named condition holds, BFS exact, certificates re-verified, under 2 min."""
    t = time.perf_counter()
    notes, bad = [], []
    for expr, want, cond in NILPOTENT:
        G = group(expr)
        r = classify_od(G, verify=True)
        X = power_graph(G)
        certs_ok = r.certificates and all(verify_certificate(X, c) for c in r.certificates)
        common_ok = all(c.kind != "commonNeighborGE3" or not (X.adj[c.vertices[0]] & X.adj[c.vertices[1]]
                                                              )[[v for v in range(G.n) if v not in c.hubs]].any()
                        for c in r.certificates)
        bfs = bfs_diameter(G.n, r.orientation.arcs)
        matched = r.conditions.matched
        ok = r.od == want and bfs == want and certs_ok and common_ok and r.verified
        if cond is None:
            ok = ok and not matched and r.lower_bound == "by-theorem"
        else:
            ok = ok and cond in matched and r.lower_bound == "certified"
        if cond is not None and r.rule != f"thm-nilpotent-{cond}":
            notes.append(f"{expr}: first match {r.rule[-1]}, all {''.join(matched)}")
        if not ok:
            bad.append(expr)
    dt = time.perf_counter() - t
    detail = f"{6 - len(bad)}/6 verified, {dt:.2f}s (limit 120s)"
    if notes:
        detail += "; " + "; ".join(notes)
    return not bad and dt < 120, detail


def check_5():
    """Glued construction on every bridgeless corpus power graph: ecc(e) <= 2 and diameter <= 4."""
    count, bad = 0, []
    for entry in CORPUS:
        G = group(entry.expr)
        if G.n < 2 or not is_two_edge_connected(power_graph(G)):
            continue
        count += 1
        A = orient_glued_diam4(G)
        if eccentricity(A, 0) > 2 or bfs_diameter(G.n, A.arcs) > 4:
            bad.append(entry.expr)
    return not bad, f"{count - len(bad)}/{count} graphs pass {bad or ''}"


def check_6():
    """Property suites over the corpus plus 1000 random coprime-generation instances."""
    fails = []
    groups = [group(e.expr) for e in CORPUS] + [group(e) for e in ("D(6)", "D(10)", "Q(16)xZ(9)", "Z(4)xZ(4)")]
    for G in groups:
        for p in G.prime_divisors:
            if count_order_p_subgroups(G, p) % p != 1:
                fails.append(("frobenius", G.name, p))
        part = ge_classes(G)
        if any(len(c) != euler_phi(k) for c, k in zip(part.classes, part.class_order)):
            fails.append(("ge", G.name))
        P, E, C = (variant_graph(G, k).adj for k in ("pow", "epow", "com"))
        if (P & ~E).any() or (E & ~C).any():
            fails.append(("chain", G.name))
        mcs2 = any(len(S) == 2 for S in maximal_cyclic_subgroups(G))
        if mcs2 == bool(is_two_edge_connected(power_graph(G))):
            fails.append(("bridge", G.name))
    rng = np.random.default_rng(2024)
    pool = [group(e) for e in ("Z(2)", "Z(3)", "Z(4)", "Z(5)", "Z(7)", "Z(8)", "Z(9)", "D(6)", "Q(8)", "D(10)")]
    pairs = [(a, b) for a in pool for b in pool if math.gcd(a.n, b.n) == 1]
    products = {}
    for _ in range(1000):
        G, H = pairs[rng.integers(len(pairs))]
        key = (G.name, H.name)
        P = products.setdefault(key, direct_product(G, H))
        g1, h1 = int(rng.integers(G.n)), int(rng.integers(H.n))
        g2 = int(rng.choice(sorted(cyclic_subgroup(G, g1))))
        h2 = int(rng.choice(sorted(cyclic_subgroup(H, h1))))
        if g2 * H.n + h2 not in cyclic_subgroup(P, g1 * H.n + h1):
            fails.append(("coprime", key, g1, h1, g2, h2))
    return not fails, f"{len(groups)} groups x 4 properties + 1000 coprime instances, {len(fails)} failures"


def check_7():
    """Pow(Z_210) violates both the min-degree and the edge-count conditions."""
    r = degree_size_report(210)
    deg_thr = 105 + math.log(210) / math.log(4 / 3)
    edge_thr = math.comb(210, 2) - 210 + 5
    ok = r.min_degree < deg_thr and r.num_edges < edge_thr
    return ok, f"min degree {r.min_degree} < {deg_thr:.2f}, |E| {r.num_edges} < {edge_thr}"


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7]


def _report(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", range(1, 8), ids=lambda i: f"criterion_{i}")
def test_acceptance(i, capsys):
    ok, detail = CHECKS[i - 1]()
    with capsys.disabled():
        print("\n" + _report(i, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(i, *fn()) for i, fn in enumerate(CHECKS, 1)]
    for r in results:
        print(_report(*r))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
