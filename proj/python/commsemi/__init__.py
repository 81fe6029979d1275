"""Finite-semigroup and commuting-graph engine."""

from ._commsemi import (
    CommutingGraph,
    DistanceResult,
    FiniteSemigroup,
    Transformation,
    __version__,
    check_an,
    check_quasi_identity_1,
    distance4_witnesses,
    knit_degree,
    lower_bound_certificate,
    s0_band,
    s1_band,
    small_semigroup,
    small_semigroup_names,
    tdia2_witnesses,
    tdia3_witnesses,
    verify,
)

__all__ = [
    "CommutingGraph",
    "DistanceResult",
    "FiniteSemigroup",
    "Transformation",
    "__version__",
    "check_an",
    "check_quasi_identity_1",
    "distance4_witnesses",
    "knit_degree",
    "lower_bound_certificate",
    "s0_band",
    "s1_band",
    "small_semigroup",
    "small_semigroup_names",
    "tdia2_witnesses",
    "tdia3_witnesses",
    "verify",
]
