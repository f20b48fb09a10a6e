"""Distance measures on the lattice of set partitions.

Public surface: canonical partitions with the full complement of lattice
operations (`partlat.core`), six integer distance measures with an exact
[0,1) normalization (`partlat.measures`), exhaustive property classifiers
(`partlat.classifiers`), indicator-Hamming bounds per distance value with a
greedy constrained construction (`partlat.bounds`), and brute-force oracles
plus a claim verifier (`partlat.oracle`).
"""

from .core import (CapacityError, ClassVector, GroundSetMismatchError,
                   InducedPartition, InvalidPartitionError, LiteralParseError,
                   PairIndicator, Partition, PartitionError, atom, atoms_of,
                   bottom, enumerate_modular, enumerate_partitions, from_blocks,
                   from_labels, modular_partition, pair_count, pair_index,
                   parse_literal, top)
from .measures import (DistanceValue, MeasureId, delta_ih, delta_rb,
                       delta_rb_plus, delta_sb, delta_sd, distance, normalize,
                       pd_distance, raw_distance)

__version__ = "0.1.0"

__all__ = [
    "CapacityError", "ClassVector", "DistanceValue", "GroundSetMismatchError",
    "InducedPartition", "InvalidPartitionError", "LiteralParseError",
    "MeasureId", "PairIndicator", "Partition", "PartitionError",
    "atom", "atoms_of", "bottom", "delta_ih", "delta_rb", "delta_rb_plus",
    "delta_sb", "delta_sd", "distance", "enumerate_modular",
    "enumerate_partitions", "from_blocks", "from_labels", "modular_partition",
    "normalize", "pair_count", "pair_index", "parse_literal", "pd_distance",
    "raw_distance", "top",
]
