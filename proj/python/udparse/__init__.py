"""Python bindings for the udp dependency parser."""

from ._udparse import (
    AlignmentError,
    FormatError,
    adp_direction,
    error_propagation,
    evaluate,
    parse_conllu,
    parse_tags,
    rank,
)

__all__ = [
    "AlignmentError",
    "FormatError",
    "adp_direction",
    "error_propagation",
    "evaluate",
    "parse_conllu",
    "parse_tags",
    "rank",
]
