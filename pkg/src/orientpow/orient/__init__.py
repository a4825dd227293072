"""Explicit orientations of power graphs and their building blocks."""

from .complete import GadgetHandle, extend_tournament, orient_complete, tournament
from .cyclic import crt_relabel, extend_by_prime_power, orient_cyclic, orient_cyclic_2q, orient_cyclic_diam3
from .glued import glued_cliques, orient_glued_diam4
from .layered import LayeredPartition, complete_within, orient_layered
from .nilpotent import (NilpotentCore, orient_nilpotent, orient_nilpotent_o123, orient_no_mcs_2pk,
                        orient_one_2_order, orient_one_p_order, orient_two_odd_primes)
from .quaternion import orient_quaternion, quaternion_arcs

__all__ = [
    "GadgetHandle", "tournament", "orient_complete", "extend_tournament",
    "glued_cliques", "orient_glued_diam4",
    "LayeredPartition", "orient_layered", "complete_within",
    "orient_cyclic_diam3", "orient_cyclic_2q", "extend_by_prime_power", "crt_relabel", "orient_cyclic",
    "orient_quaternion", "quaternion_arcs",
    "NilpotentCore", "orient_nilpotent_o123", "orient_two_odd_primes", "orient_no_mcs_2pk",
    "orient_one_p_order", "orient_one_2_order", "orient_nilpotent",
]
