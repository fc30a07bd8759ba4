"""Photon generation and quantum statistics of a damped cavity containing a
degenerate OPA driven by an amplitude-modulated pump.

The compiled extension carries all the functionality; this package re-exports
it and adds a ratio-style convenience constructor.
"""

from dceopa._core import *  # noqa: F401,F403
from dceopa._core import (
    CavityParams,
    PumpProfile,
    SystemConfig,
    validate_config,
    __version__,
)

TWO_PI = 6.283185307179586


def make_config(
    epsilon_over_kappa: float,
    eta_over_kappa: float = 0.0,
    kappa_over_omega: float = 0.0,
    kappa_over_2pi_hz: float = 1e4,
) -> SystemConfig:
    """Build a validated config from the dimensionless figure-style ratios."""
    kappa = TWO_PI * kappa_over_2pi_hz
    omega = kappa / kappa_over_omega if eta_over_kappa > 0.0 else 0.0
    return validate_config(
        PumpProfile(epsilon_over_kappa * kappa, eta_over_kappa * kappa, omega),
        CavityParams(kappa),
    )
