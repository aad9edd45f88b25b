"""Exact Hopf-algebra computations for symmetric and quasi-symmetric
functions in noncommuting variables.

Index types are SetPartition and SetComposition; linear data lives in
sparse integer Elements tagged by basis (m/p/q/w/qdual on the partition
side, M/Q/W/V/Qdual on the composition side).  ncsym and ncqsym carry
the products, coproducts, basis changes and antipodes; realization is
an independent polynomial oracle; posets, counting and verify provide
the order-theoretic and enumerative machinery with exhaustive checks.
"""

from .linalg import (ALL_BASES, COMPOSITION_BASES, Element, PARTITION_BASES,
                     TensorElement, element_from_json, element_to_json,
                     pairing, pairing_tensor, tensor)
from .posets import FinitePoset
from .setcomp import SetComposition, SetCompositionError
from .setpart import SetPartition, SetPartitionError

__all__ = [
    "ALL_BASES",
    "COMPOSITION_BASES",
    "Element",
    "FinitePoset",
    "PARTITION_BASES",
    "SetComposition",
    "SetCompositionError",
    "SetPartition",
    "SetPartitionError",
    "TensorElement",
    "element_from_json",
    "element_to_json",
    "pairing",
    "pairing_tensor",
    "tensor",
]

__version__ = "1.0.0"
