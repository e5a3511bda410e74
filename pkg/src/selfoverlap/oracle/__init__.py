"""Ground truth by exhaustive enumeration and by sampling."""

from .backend import ENV_FLAG, default_backend_name, get_backend
from .enumeration import (
    DEFAULT_MAX_N,
    HARD_MAX_N,
    ClassificationReport,
    brute_pattern_table,
    brute_pattern_tables,
    enumerate_classify,
)
from .sampling import SampleEstimate, SplitMix64, derive_seed, estimate_probability, sample_run, sample_uniform

__all__ = [
    "ENV_FLAG",
    "DEFAULT_MAX_N",
    "HARD_MAX_N",
    "ClassificationReport",
    "SampleEstimate",
    "SplitMix64",
    "brute_pattern_table",
    "brute_pattern_tables",
    "default_backend_name",
    "derive_seed",
    "enumerate_classify",
    "estimate_probability",
    "get_backend",
    "sample_run",
    "sample_uniform",
]
