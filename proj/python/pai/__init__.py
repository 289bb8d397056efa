"""Dressed-state photoassociation rate ratios (C++ core)."""

from ._pai import (
    DEFAULT_EPSILON,
    PaiError,
    cg_table,
    eigenvalues,
    find_band_minimum,
    ground_state,
    rate_ratio,
    rf_amplitudes,
    sweep_delta,
    sweep_omega,
    sweep_populations,
    sweep_theta,
)

__all__ = [
    "DEFAULT_EPSILON",
    "PaiError",
    "cg_table",
    "eigenvalues",
    "find_band_minimum",
    "ground_state",
    "rate_ratio",
    "rf_amplitudes",
    "sweep_delta",
    "sweep_omega",
    "sweep_populations",
    "sweep_theta",
]
