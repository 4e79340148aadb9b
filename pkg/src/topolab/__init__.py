"""Finite topologies, their open-set polynomials, and exhaustive checks of claims about them."""
from .errors import TopolabError
from .topology import (
    PartitionType,
    Topology,
    canonical_form,
    cotopology,
    discrete,
    disjoint_union,
    generate_from_subbasis,
    indiscrete,
    is_partition_induced,
    is_t0,
    minimal_open_sets,
    open_polynomial,
    partition_topology,
    relabel,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "PartitionType",
    "Topology",
    "TopolabError",
    "canonical_form",
    "cotopology",
    "discrete",
    "disjoint_union",
    "generate_from_subbasis",
    "indiscrete",
    "is_partition_induced",
    "is_t0",
    "minimal_open_sets",
    "open_polynomial",
    "partition_topology",
    "relabel",
    "validate",
]
