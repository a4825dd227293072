"""Oriented diameter of power graphs of finite groups."""

from .classify import ODReport, classify_od
from .expr import parse_group_expr
from .groups import realize
from .oracle import exact_od
from .powgraph import power_graph

__version__ = "0.1.0"
__all__ = ["ODReport", "classify_od", "exact_od", "parse_group_expr", "power_graph", "realize"]
