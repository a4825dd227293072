"""Built-in catalogue of groups spanning every branch of the classifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .digraph import INF

__all__ = ["CorpusEntry", "CORPUS", "corpus"]

Dist = Union[int, float]


@dataclass(frozen=True)
class CorpusEntry:
    expr: str
    od: Optional[Dist]  # None: only an interval is known
    condition: Optional[str] = None  # the condition this group illustrates
    note: str = ""


def _cyclic(n: int) -> Dist:
    return {1: 0, 2: INF, 4: 3, 6: 3}.get(n, 2)


def corpus() -> list[CorpusEntry]:
    out = [CorpusEntry(f"Z({n})", _cyclic(n), note="cyclic") for n in range(1, 61)]
    out += [CorpusEntry(f"Q({k})", 3, note="generalized quaternion") for k in (8, 16, 32)]
    out += [
        CorpusEntry("Z(3)xZ(3)", 4, note="non-cyclic p-group"),
        CorpusEntry("Z(2)xZ(2)", INF, note="bridge"),
        CorpusEntry("D(8)", INF, note="bridge"),
        CorpusEntry("Z(3)xZ(3)xZ(5)", 3, "a"),
        CorpusEntry("Z(12)xZ(20)", 3, "b"),
        CorpusEntry("Z(2)xZ(6)", 3, "c"),
        CorpusEntry("Z(2)xZ(2)xZ(9)", 3, "c"),
        CorpusEntry("Q(8)xZ(3)", 3, "d"),
        CorpusEntry("Z(6)xZ(6)", 4, note="none of (a)-(d)"),
        CorpusEntry("D(6)xZ(3)", None, note="non-nilpotent, bridgeless"),
    ]
    return out


CORPUS = tuple(corpus())
