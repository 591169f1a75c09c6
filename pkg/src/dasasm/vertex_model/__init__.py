"""The six-vertex model on T_n: weights, partition functions and local relations."""

from .partition import (
    ClearedPartitionFunction,
    SECTORS,
    configuration_weight,
    normalize_sector,
    partition_function_bruteforce,
    partition_function_eval,
    partition_function_pm,
    partition_function_symbolic,
    partition_function_value,
    sector_symbolic,
    symbolic_ring,
)
from .weights import (
    WeightContext,
    clearing_factor,
    vertex_parameter,
    weight,
    weight_cleared,
)

__all__ = [
    "ClearedPartitionFunction",
    "SECTORS",
    "WeightContext",
    "clearing_factor",
    "configuration_weight",
    "normalize_sector",
    "partition_function_bruteforce",
    "partition_function_eval",
    "partition_function_pm",
    "partition_function_symbolic",
    "partition_function_value",
    "sector_symbolic",
    "symbolic_ring",
    "vertex_parameter",
    "weight",
    "weight_cleared",
]
