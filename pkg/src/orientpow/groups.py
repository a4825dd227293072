"""Finite groups realized as Cayley tables.

Groups are built from a small expression tree (:class:`Cyclic`,
:class:`Dihedral`, :class:`Quaternion`, :class:`CayleyTable` leaves and
:class:`DirectProduct` nodes) and realized as dense multiplication tables over
element ids ``0..n-1`` with the identity at id 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from .errors import GroupValidationError

__all__ = [
    "Cyclic", "Dihedral", "Quaternion", "CayleyTable", "DirectProduct", "GroupSpec",
    "Group", "GEPartition",
    "realize", "direct_product", "element_order", "cyclic_subgroup", "ge_classes",
    "maximal_cyclic_subgroups", "is_nilpotent", "is_generalized_quaternion",
    "count_order_p_subgroups", "euler_phi", "factorize", "prime_divisors", "is_prime",
]


# ---------------------------------------------------------------------------
# number theory
# ---------------------------------------------------------------------------

def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_divisors(n: int) -> list[int]:
    return sorted(factorize(n))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def euler_phi(n: int) -> int:
    """Euler's totient."""
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


# ---------------------------------------------------------------------------
# symbolic group descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cyclic:
    n: int

    def __str__(self) -> str:
        return f"Z({self.n})"


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of the given *order* (``D(8)`` is the symmetry group of a square)."""

    order: int

    def __str__(self) -> str:
        return f"D({self.order})"


@dataclass(frozen=True)
class Quaternion:
    """Generalized quaternion group of order ``2**k``, ``k >= 3``."""

    order: int

    def __str__(self) -> str:
        return f"Q({self.order})"


@dataclass(frozen=True)
class CayleyTable:
    n: int
    table: tuple[tuple[int, ...], ...]
    name: str = "cayley"

    def __str__(self) -> str:
        return f"@{self.name}"


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple["GroupSpec", ...]

    def __str__(self) -> str:
        return "x".join(str(f) for f in self.factors)


GroupSpec = Union[Cyclic, Dihedral, Quaternion, CayleyTable, DirectProduct]


# ---------------------------------------------------------------------------
# realized groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Group:
    """A realized finite group.

    ``mul[i, j]`` is the id of ``i*j``; id 0 is the identity.  Only immutable
    data is stored; derived tables are cached on first use.
    """

    mul: np.ndarray
    name: str = "G"
    labels: tuple[str, ...] = field(default=(), repr=False)

    def __post_init__(self):
        self.mul.setflags(write=False)

    @property
    def n(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.n

    def label(self, x: int) -> str:
        return self.labels[x] if self.labels else str(x)

    @cached_property
    def order_of(self) -> np.ndarray:
        n = self.n
        idx = np.arange(n)
        cur = idx.copy()
        orders = np.zeros(n, dtype=np.int64)
        k = 1
        while True:
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            cur = self.mul[cur, idx]
            k += 1
            if k > n:
                raise GroupValidationError("element with no finite order: table is not a group")
        orders.setflags(write=False)
        return orders

    @cached_property
    def membership(self) -> np.ndarray:
        """``membership[x, y]`` is True iff ``y`` lies in the cyclic subgroup generated by ``x``."""
        n = self.n
        idx = np.arange(n)
        mem = np.zeros((n, n), dtype=bool)
        cur = idx.copy()
        for _ in range(int(self.order_of.max())):
            mem[idx, cur] = True
            cur = self.mul[cur, idx]
        mem.setflags(write=False)
        return mem

    @cached_property
    def inverse(self) -> np.ndarray:
        inv = np.argmin(self.mul, axis=1)  # the 0 entry in each row
        inv.setflags(write=False)
        return inv

    def power(self, x: int, k: int) -> int:
        k %= int(self.order_of[x])
        r = 0
        for _ in range(k):
            r = int(self.mul[r, x])
        return r

    @property
    def prime_divisors(self) -> list[int]:
        return prime_divisors(self.n) if self.n > 1 else []

    @property
    def is_cyclic(self) -> bool:
        return bool((self.order_of == self.n).any())

    @property
    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    @property
    def is_p_group(self) -> bool:
        return len(self.prime_divisors) == 1

    def elements_of_order(self, k: int) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.order_of == k)]

    def __repr__(self) -> str:
        return f"Group({self.name}, n={self.n})"


@dataclass(frozen=True)
class GEPartition:
    """Generator-equivalence classes: ``x ~ y`` iff they generate the same cyclic subgroup."""

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    class_order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------

def _cyclic_table(n: int) -> np.ndarray:
    idx = np.arange(n)
    return (idx[:, None] + idx[None, :]) % n


def _dihedral_table(order: int) -> np.ndarray:
    # a^i b^j -> i + m*j, with b a b^-1 = a^-1
    m = order // 2
    i = np.arange(order) % m
    j = np.arange(order) // m
    sign = np.where(j == 1, -1, 1)
    ii = (i[:, None] + sign[:, None] * i[None, :]) % m
    jj = (j[:, None] + j[None, :]) % 2
    return ii + m * jj


def _quaternion_table(order: int) -> np.ndarray:
    # a^i b^j with a^m = 1, b^2 = a^(m/2), b a b^-1 = a^-1
    m = order // 2
    i = np.arange(order) % m
    j = np.arange(order) // m
    sign = np.where(j == 1, -1, 1)
    ii = i[:, None] + sign[:, None] * i[None, :]
    jsum = j[:, None] + j[None, :]
    ii = np.where(jsum == 2, ii + m // 2, ii) % m
    return ii + m * (jsum % 2)


def _validate_cayley(n: int, table: Sequence[Sequence[int]]) -> np.ndarray:
    if n < 1:
        raise GroupValidationError("Cayley table: n must be >= 1")
    try:
        mul = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise GroupValidationError(f"Cayley table: entries must be integers ({exc})") from None
    if mul.shape != (n, n):
        raise GroupValidationError(f"Cayley table: expected a {n}x{n} table, got shape {mul.shape}")
    if mul.min() < 0 or mul.max() >= n:
        raise GroupValidationError(f"Cayley table: entries must lie in 0..{n - 1}")
    full = np.arange(n)
    for r in range(n):
        if not np.array_equal(np.sort(mul[r]), full):
            raise GroupValidationError(f"Cayley table: not a Latin square (row {r} repeats an entry)")
        if not np.array_equal(np.sort(mul[:, r]), full):
            raise GroupValidationError(f"Cayley table: not a Latin square (column {r} repeats an entry)")
    ids = [e for e in range(n) if np.array_equal(mul[e], full) and np.array_equal(mul[:, e], full)]
    if not ids:
        raise GroupValidationError("Cayley table: no two-sided identity element")
    e = ids[0]
    if e != 0:
        perm = np.arange(n)
        perm[0], perm[e] = e, 0  # perm is its own inverse
        mul = perm[mul[np.ix_(perm, perm)]]
    _check_associative(mul)
    return mul


def _check_associative(mul: np.ndarray, exhaustive_limit: int = 64, samples: int = 20000) -> None:
    n = mul.shape[0]
    if n <= exhaustive_limit:
        left = mul[mul, :]  # (x*y)*z indexed [x, y, z]
        right = mul[:, mul]  # x*(y*z) indexed [x, y, z]
        bad = np.argwhere(left != right)
        if len(bad):
            x, y, z = bad[0]
            raise GroupValidationError(f"Cayley table: not associative at ({x}, {y}, {z})")
        return
    rng = np.random.default_rng(0)
    x, y, z = rng.integers(0, n, size=(3, samples))
    bad = np.flatnonzero(mul[mul[x, y], z] != mul[x, mul[y, z]])
    if len(bad):
        k = bad[0]
        raise GroupValidationError(f"Cayley table: not associative at ({x[k]}, {y[k]}, {z[k]})")


def _product_table(g: np.ndarray, h: np.ndarray) -> np.ndarray:
    # (g1, h1) -> g1 * n2 + h1
    n1, n2 = g.shape[0], h.shape[0]
    return (g[:, None, :, None] * n2 + h[None, :, None, :]).reshape(n1 * n2, n1 * n2)


def _leaves(spec: GroupSpec) -> list[GroupSpec]:
    if isinstance(spec, DirectProduct):
        return [leaf for f in spec.factors for leaf in _leaves(f)]
    return [spec]


def _power_labels(m: int, j_symbol: str | None, gen: str = "a") -> tuple[str, ...]:
    out = []
    for x in range(m * (2 if j_symbol else 1)):
        i, j = x % m, x // m
        parts = []
        if i:
            parts.append(gen if i == 1 else f"{gen}^{i}")
        if j:
            parts.append(j_symbol)
        out.append("".join(parts) or "e")
    return tuple(out)


def realize(spec: GroupSpec) -> Group:
    """Build the Cayley table of a symbolic group description."""
    if isinstance(spec, Cyclic):
        if not isinstance(spec.n, int) or spec.n < 1:
            raise GroupValidationError(f"Z(n) needs n >= 1, got {spec.n!r}")
        return Group(_cyclic_table(spec.n), name=str(spec),
                     labels=tuple(str(k) for k in range(spec.n)))
    if isinstance(spec, Dihedral):
        if not isinstance(spec.order, int) or spec.order < 2 or spec.order % 2:
            raise GroupValidationError(f"D(2n) needs an even order >= 2, got {spec.order!r}")
        m = spec.order // 2
        return Group(_dihedral_table(spec.order), name=str(spec), labels=_power_labels(m, "s", "r"))
    if isinstance(spec, Quaternion):
        k = spec.order.bit_length() - 1 if isinstance(spec.order, int) and spec.order > 0 else -1
        if k < 3 or spec.order != 1 << k:
            raise GroupValidationError(
                f"Q(2^k) needs an order that is a power of 2 and at least 8, got {spec.order!r}")
        m = spec.order // 2
        return Group(_quaternion_table(spec.order), name=str(spec), labels=_power_labels(m, "b"))
    if isinstance(spec, CayleyTable):
        return Group(_validate_cayley(spec.n, spec.table), name=str(spec))
    if isinstance(spec, DirectProduct):
        if len(spec.factors) < 2:
            raise GroupValidationError("a direct product needs at least two factors")
        parts = [realize(leaf) for leaf in _leaves(spec)]
        mul = parts[0].mul
        labels: list[tuple[str, ...]] = [(parts[0].label(x),) for x in range(parts[0].n)]
        for part in parts[1:]:
            mul = _product_table(mul, part.mul)
            labels = [a + (part.label(y),) for a in labels for y in range(part.n)]
        return Group(mul, name=str(spec), labels=tuple(f"({', '.join(t)})" for t in labels))
    raise GroupValidationError(f"unknown group description {spec!r}")


def direct_product(G: Group, H: Group) -> Group:
    """``G x H`` with element ``(g, h)`` at id ``g * |H| + h``."""
    labels = tuple(f"({G.label(g)}, {H.label(h)})" for g in range(G.n) for h in range(H.n))
    return Group(_product_table(G.mul, H.mul), name=f"{G.name}x{H.name}", labels=labels)


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------

def _check_element(G: Group, x: int) -> int:
    if not 0 <= x < G.n:
        raise IndexError(f"element {x} out of range for a group of order {G.n}")
    return int(x)


def element_order(G: Group, x: int) -> int:
    return int(G.order_of[_check_element(G, x)])


def cyclic_subgroup(G: Group, x: int) -> frozenset[int]:
    """The subgroup generated by ``x``."""
    x = _check_element(G, x)
    return frozenset(int(y) for y in np.flatnonzero(G.membership[x]))


def ge_classes(G: Group) -> GEPartition:
    mem = G.membership
    # x ~ y iff each lies in the other's cyclic subgroup
    same = mem & mem.T
    class_of = [-1] * G.n
    classes: list[tuple[int, ...]] = []
    for x in range(G.n):
        if class_of[x] >= 0:
            continue
        members = tuple(int(y) for y in np.flatnonzero(same[x]))
        for y in members:
            class_of[y] = len(classes)
        classes.append(members)
    orders = tuple(int(G.order_of[c[0]]) for c in classes)
    return GEPartition(tuple(classes), tuple(class_of), orders)


def maximal_cyclic_subgroups(G: Group) -> list[frozenset[int]]:
    """Cyclic subgroups not properly contained in another cyclic subgroup, sorted by (order, elements)."""
    part = ge_classes(G)
    mem = G.membership
    reps = np.array([c[0] for c in part.classes])
    # contains[d, c]: class c's generator lies in <rep_d>
    contains = mem[np.ix_(reps, reps)]
    np.fill_diagonal(contains, False)
    out = []
    for c in range(len(reps)):
        if not contains[:, c].any():
            out.append(cyclic_subgroup(G, int(reps[c])))
    out.sort(key=lambda s: (len(s), sorted(s)))
    return out


def is_nilpotent(G: Group) -> bool:
    """Coprime-order elements commute (equivalent to nilpotency for finite groups)."""
    o = G.order_of
    coprime = np.gcd.outer(o, o) == 1
    return not bool((coprime & (G.mul != G.mul.T)).any())


def is_generalized_quaternion(G: Group) -> bool:
    n = G.n
    if n < 8 or n & (n - 1):
        return False
    return not G.is_cyclic and len(G.elements_of_order(2)) == 1


def count_order_p_subgroups(G: Group, p: int) -> int:
    """Number of subgroups of prime order ``p``."""
    if not is_prime(p):
        raise GroupValidationError(f"{p} is not prime")
    return len(G.elements_of_order(p)) // (p - 1)


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // math.gcd(out, x)
    return out
