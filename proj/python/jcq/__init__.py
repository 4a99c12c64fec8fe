"""Josephson charge qubit decoherence: path-integral propagation and Bloch estimates."""

from ._jcq import (
    HBAR,
    K_B,
    BathModel,
    CapacityError,
    InfiniteTimeError,
    InstabilityError,
    ItmSettings,
    NoDecayError,
    NumericalError,
    QubitParameters,
    SaturationError,
    bloch_times,
    compare,
    eta_coefficients,
    fit_exponential,
    memory_time,
    oracle_deviation,
    power_spectrum,
    response_function,
    response_samples,
    simulate,
    spectral_density,
    thermal_beta,
)

__all__ = [
    "HBAR",
    "K_B",
    "BathModel",
    "CapacityError",
    "InfiniteTimeError",
    "InstabilityError",
    "ItmSettings",
    "NoDecayError",
    "NumericalError",
    "QubitParameters",
    "SaturationError",
    "bloch_times",
    "compare",
    "eta_coefficients",
    "fit_exponential",
    "memory_time",
    "oracle_deviation",
    "power_spectrum",
    "response_function",
    "response_samples",
    "simulate",
    "spectral_density",
    "thermal_beta",
]
