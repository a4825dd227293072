import math
from collections import Counter

import numpy as np
import pytest

from orientpow.errors import GroupValidationError
from orientpow.groups import (CayleyTable, Cyclic, Dihedral, DirectProduct, Quaternion, count_order_p_subgroups,
                              cyclic_subgroup, direct_product, element_order, euler_phi, factorize, ge_classes,
                              is_generalized_quaternion, is_nilpotent, maximal_cyclic_subgroups, prime_divisors,
                              realize)

from conftest import group, naive_closure


def test_trivial_group():
    G = realize(Cyclic(1))
    assert G.n == 1 and list(G.order_of) == [1]


def test_z6_orders_match_gcd_formula():
    G = realize(Cyclic(6))
    assert sorted(G.order_of) == sorted(6 // math.gcd(6, k) for k in range(6))
    assert sorted(G.order_of) == [1, 2, 3, 3, 6, 6]


def test_z2xz6_order_census():
    G = realize(DirectProduct((Cyclic(2), Cyclic(6))))
    expect = Counter(math.lcm(2 // math.gcd(2, a), 6 // math.gcd(6, b)) for a in range(2) for b in range(6))
    got = Counter(int(k) for k in G.order_of)
    assert got == expect
    assert got[2] == 3 and got[3] == 2 and got[6] == 6


def test_element_order():
    G = realize(Cyclic(12))
    assert element_order(G, 8) == 3
    assert element_order(G, 0) == 1
    with pytest.raises(IndexError):
        element_order(G, 12)


def test_quaternion_outside_tower_has_order_4():
    G = realize(Quaternion(8))
    (y,) = G.elements_of_order(2)
    x = G.elements_of_order(4)[0]
    tower = cyclic_subgroup(G, x)
    for g in range(G.n):
        if g not in tower:
            assert element_order(G, g) == 4
    assert y in tower


def test_cyclic_subgroups():
    G = realize(Cyclic(6))
    assert cyclic_subgroup(G, 2) == {0, 2, 4}
    assert cyclic_subgroup(G, 1) == set(range(6))
    H = realize(DirectProduct((Cyclic(2), Cyclic(6))))
    x = 1 * 6 + 1
    expect = {((k % 2) * 6 + k % 6) for k in range(6)}
    assert cyclic_subgroup(H, x) == expect
    assert len(expect) == 6


def test_ge_classes():
    assert set(map(frozenset, ge_classes(realize(Cyclic(6))).classes)) == {
        frozenset({0}), frozenset({3}), frozenset({2, 4}), frozenset({1, 5})}
    assert set(map(frozenset, ge_classes(realize(Cyclic(4))).classes)) == {
        frozenset({0}), frozenset({2}), frozenset({1, 3})}


@pytest.mark.parametrize("expr", ["Z(12)", "Q(16)", "Z(2)xZ(6)", "D(12)", "Z(3)xZ(3)"])
def test_ge_class_sizes_are_phi(expr):
    G = group(expr)
    part = ge_classes(G)
    assert part.classes[part.class_of[0]] == (0,)
    for cls, k in zip(part.classes, part.class_order):
        assert len(cls) == euler_phi(k)
        assert len({frozenset(naive_closure(G, x)) for x in cls}) == 1


def test_maximal_cyclic_subgroups():
    assert maximal_cyclic_subgroups(realize(Cyclic(6))) == [frozenset(range(6))]
    q = maximal_cyclic_subgroups(realize(Quaternion(8)))
    assert len(q) == 3 and all(len(C) == 4 for C in q)
    y = realize(Quaternion(8)).elements_of_order(2)[0]
    assert all(q[i] & q[j] == {0, y} for i in range(3) for j in range(i + 1, 3))
    v4 = maximal_cyclic_subgroups(group("Z(2)xZ(2)"))
    assert len(v4) == 3 and all(len(C) == 2 for C in v4)


def test_maximal_cyclic_cover_and_no_containment():
    G = group("Z(4)xZ(6)")
    mcs = maximal_cyclic_subgroups(G)
    assert set().union(*mcs) == set(range(G.n))
    for A in mcs:
        assert not any(A < B for B in mcs)


def test_nilpotency():
    assert is_nilpotent(group("Z(2)xZ(6)"))
    assert is_nilpotent(realize(Quaternion(8)))
    S3 = realize(Dihedral(6))
    assert not is_nilpotent(S3)
    # an explicit non-commuting coprime pair exists
    o = S3.order_of
    assert any(o[a] == 2 and o[b] == 3 and S3.mul[a, b] != S3.mul[b, a] for a in range(6) for b in range(6))


def test_generalized_quaternion():
    assert is_generalized_quaternion(realize(Quaternion(16)))
    assert not is_generalized_quaternion(realize(Cyclic(8)))
    assert not is_generalized_quaternion(group("Z(2)xZ(4)"))
    assert len(group("Z(2)xZ(4)").elements_of_order(2)) == 3


def test_count_order_p_subgroups():
    assert count_order_p_subgroups(group("Z(3)xZ(3)"), 3) == 4
    assert count_order_p_subgroups(realize(Quaternion(8)), 2) == 1
    assert count_order_p_subgroups(realize(Cyclic(6)), 5) == 0
    with pytest.raises(GroupValidationError):
        count_order_p_subgroups(realize(Cyclic(6)), 4)


def test_euler_phi_against_bruteforce():
    assert euler_phi(1) == 1 and euler_phi(12) == 4
    assert euler_phi(210) == sum(math.gcd(k, 210) == 1 for k in range(1, 211)) == 48
    for n in range(1, 200):
        assert euler_phi(n) == sum(math.gcd(k, n) == 1 for k in range(1, n + 1))


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_divisors(210) == [2, 3, 5, 7]


@pytest.mark.parametrize("bad", [Quaternion(4), Quaternion(12), Cyclic(0), Dihedral(5)])
def test_invalid_specs(bad):
    with pytest.raises(GroupValidationError):
        realize(bad)


def test_cayley_table_validation():
    z3 = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert realize(CayleyTable(3, z3)).n == 3
    with pytest.raises(GroupValidationError, match="Latin"):
        realize(CayleyTable(3, ((0, 1, 2), (1, 1, 0), (2, 0, 1))))
    with pytest.raises(GroupValidationError, match="identity"):
        realize(CayleyTable(3, ((0, 2, 1), (2, 1, 0), (1, 0, 2))))
    # identity not at id 0 gets moved there
    shifted = ((2, 0, 1), (0, 1, 2), (1, 2, 0))
    G = realize(CayleyTable(3, shifted))
    assert list(G.mul[0]) == [0, 1, 2]
    assert sorted(G.order_of) == [1, 3, 3]


def test_non_associative_latin_square_rejected():
    # a loop of order 5 that is not a group
    t = ((0, 1, 2, 3, 4), (1, 0, 3, 4, 2), (2, 4, 0, 1, 3), (3, 2, 4, 0, 1), (4, 3, 1, 2, 0))
    with pytest.raises(GroupValidationError, match="associative"):
        realize(CayleyTable(5, t))


def test_direct_product_helper_matches_realize():
    a, b = realize(Cyclic(4)), realize(Cyclic(6))
    assert np.array_equal(direct_product(a, b).mul, realize(DirectProduct((Cyclic(4), Cyclic(6)))).mul)


@pytest.mark.parametrize("expr", ["Z(12)", "Z(3)xZ(3)", "Q(16)", "D(10)", "Z(2)xZ(2)xZ(9)"])
def test_group_axioms_and_lagrange(expr):
    G = group(expr)
    mul = G.mul
    assert (mul[0] == np.arange(G.n)).all() and (mul[:, 0] == np.arange(G.n)).all()
    assert (mul[np.arange(G.n), G.inverse] == 0).all()
    assert all(G.n % int(k) == 0 for k in G.order_of)
    assert list(G.order_of).count(1) == 1


@pytest.mark.parametrize("n", [1, 6, 12, 30, 36])
def test_cyclic_unique_subgroup_per_divisor(n):
    G = realize(Cyclic(n))
    subs = {frozenset(cyclic_subgroup(G, x)) for x in range(n)}
    sizes = sorted(len(s) for s in subs)
    assert sizes == [d for d in range(1, n + 1) if n % d == 0]
