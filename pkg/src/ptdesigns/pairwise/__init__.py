"""Pairwise transitivity checks and block-action classification."""

from .certificate import format_certificate
from .verify import (
    PAIR_SETS,
    BlockActionReport,
    PairwiseReport,
    brute_verify,
    classify_block_action,
    fast_verify,
    is_normal,
    verify,
)

__all__ = [
    "PAIR_SETS", "BlockActionReport", "PairwiseReport", "brute_verify", "classify_block_action",
    "fast_verify", "format_certificate", "is_normal", "verify",
]
