"""Exact combinatorics and sampling for single-peaked elections."""

from ._singlepeaked import (
    CapabilityError,
    avoids_forbidden_configurations,
    contains_pattern,
    count_single_peaked,
    enumerate_sp_votes,
    estimate_sp_probability,
    iac_exact,
    ic_probability_bounds,
    is_sp_wrt_axis,
    mallows_lower,
    polya_lower,
    recognize,
    sample,
    schroder,
)

__all__ = [
    "CapabilityError",
    "avoids_forbidden_configurations",
    "contains_pattern",
    "count_single_peaked",
    "enumerate_sp_votes",
    "estimate_sp_probability",
    "iac_exact",
    "ic_probability_bounds",
    "is_sp_wrt_axis",
    "mallows_lower",
    "polya_lower",
    "recognize",
    "sample",
    "schroder",
]
