"""Exact k-type computations for fundamental series of reductive pairs."""

from ._gkmod import (
    CapExceeded,
    Error,
    ParseError,
    ReductivePair,
    RootSystem,
    ValidationError,
    cartan_pair,
    compatible_parabolic,
    explicit_pair,
    fundseries,
    is_generic,
    kostant_weights,
    levi_pair,
    norm2_shifted,
    partition_count,
    run_job,
    sl2_pair,
    sl2_threshold,
)

__all__ = [
    "CapExceeded",
    "Error",
    "ParseError",
    "ReductivePair",
    "RootSystem",
    "ValidationError",
    "cartan_pair",
    "compatible_parabolic",
    "explicit_pair",
    "fundseries",
    "is_generic",
    "kostant_weights",
    "levi_pair",
    "norm2_shifted",
    "partition_count",
    "run_job",
    "sl2_pair",
    "sl2_threshold",
]
