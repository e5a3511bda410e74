"""Self-overlapping permutations: detection, palindromic decomposition,
exact enumeration, falling-factorial expansions and very tight pattern
distributions, with exhaustive and Monte-Carlo oracles."""

__version__ = "0.1.0"

from .errors import DomainError
from .perm import (
    OverlapProfile,
    PalindromicDecomposition,
    Permutation,
    block_count,
    decompose,
    direct_sum,
    is_self_overlapping,
    overlap_profile,
    parse_permutation,
    pattern_of,
    reconstruct,
    reverse,
)
from .series import TruncatedSeries, count_nso, count_nso_m, count_so, count_so_m

__all__ = [
    "DomainError",
    "OverlapProfile",
    "PalindromicDecomposition",
    "Permutation",
    "TruncatedSeries",
    "block_count",
    "count_nso",
    "count_nso_m",
    "count_so",
    "count_so_m",
    "decompose",
    "direct_sum",
    "is_self_overlapping",
    "overlap_profile",
    "parse_permutation",
    "pattern_of",
    "reconstruct",
    "reverse",
]
