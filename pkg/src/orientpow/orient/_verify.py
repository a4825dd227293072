"""Post-construction checks shared by every orienter."""

from __future__ import annotations

from typing import Iterable, Optional

from ..digraph import ArcSet, directed_diameter, eccentricity, validate
from ..errors import ConstructionError


def checked(arcs: ArcSet, name: str, max_diam: float, *, exact: bool = False,
            total: bool = False, within: Optional[Iterable[int]] = None) -> ArcSet:
    """Validate ``arcs`` and confirm its BFS diameter, raising ConstructionError otherwise."""
    bad = validate(arcs, require_total=total and within is None)
    if bad is not None:
        raise ConstructionError(f"{name}: {bad}")
    d = directed_diameter(arcs, within)
    if d > max_diam or (exact and d != max_diam):
        want = f"exactly {max_diam}" if exact else f"<= {max_diam}"
        raise ConstructionError(f"{name}: directed diameter {d}, expected {want}")
    return arcs


def check_ecc(arcs: ArcSet, v: int, bound: int, name: str) -> None:
    ecc = eccentricity(arcs, v)
    if ecc > bound:
        raise ConstructionError(f"{name}: eccentricity of {v} is {ecc}, expected <= {bound}")
