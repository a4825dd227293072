"""The four structural conditions that decide between oriented diameter 3 and 4
for non-cyclic nilpotent groups whose order has at least two prime divisors."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import UnsupportedGroupError
from .groups import Group, count_order_p_subgroups, factorize, is_nilpotent, maximal_cyclic_subgroups

__all__ = ["NilpotentConditions", "evaluate_conditions", "require_nilpotent_mixed"]


@dataclass(frozen=True)
class NilpotentConditions:
    """(a) two distinct odd primes divide |G|; (b) no maximal cyclic subgroup of
    order 2p^k (p odd); (c) a unique subgroup of order p for an odd prime p;
    (d) a unique subgroup of order 2.  ``evidence`` holds a witness per letter.
    """

    a: bool
    b: bool
    c: bool
    d: bool
    evidence: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict[str, bool]:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}

    @property
    def matched(self) -> tuple[str, ...]:
        return tuple(k for k, v in self.as_dict().items() if v)

    @property
    def first(self) -> str | None:
        m = self.matched
        return m[0] if m else None

    def __bool__(self) -> bool:
        return bool(self.matched)


def require_nilpotent_mixed(G: Group, what: str) -> None:
    if not is_nilpotent(G):
        raise UnsupportedGroupError(f"{what}: {G.name} is not nilpotent")
    if G.is_cyclic:
        raise UnsupportedGroupError(f"{what}: {G.name} is cyclic")
    if len(G.prime_divisors) < 2:
        raise UnsupportedGroupError(f"{what}: |{G.name}| = {G.n} is a prime power")


def _is_2_odd_prime_power(k: int) -> bool:
    f = factorize(k)
    return f.get(2) == 1 and len(f) == 2


def evaluate_conditions(G: Group) -> NilpotentConditions:
    require_nilpotent_mixed(G, "evaluate_conditions")
    odd = [p for p in G.prime_divisors if p != 2]
    ev: dict = {}
    a = len(odd) >= 2
    ev["a"] = {"odd_primes": odd}
    bad = [sorted(C) for C in maximal_cyclic_subgroups(G) if _is_2_odd_prime_power(len(C))]
    b = not bad
    ev["b"] = {"maximal_cyclic_2pk": bad[0] if bad else None, "order": len(bad[0]) if bad else None}
    unique_p = [p for p in odd if count_order_p_subgroups(G, p) == 1]
    c = bool(unique_p)
    ev["c"] = {"primes_with_unique_subgroup": unique_p}
    inv = G.elements_of_order(2)
    d = len(inv) == 1
    ev["d"] = {"involutions": len(inv)}
    return NilpotentConditions(a, b, c, d, ev)
