"""Numerical engines: adaptive quadrature and Monte Carlo sampling."""

from .quadrature import (
    DEFAULT_1D,
    DEFAULT_2D,
    QuadratureSpec,
    VolumeEstimate,
    gauss_legendre_doubling,
    orbit_volume_qubit,
    orbit_volume_qutrit,
    orbit_volume_simplex,
    qutrit_full_volume,
    qutrit_polar_integrand,
)
from .sampling import (
    McSpec,
    McmcResult,
    positive_fraction_iid,
    positive_fraction_mcmc,
    sample_bures_spectra,
    sample_bures_spectrum,
    sample_hs_spectra,
    sample_hs_spectrum,
    sample_mcmc_spectra,
    sample_spectrum_mcmc,
)

__all__ = [
    "DEFAULT_1D",
    "DEFAULT_2D",
    "QuadratureSpec",
    "VolumeEstimate",
    "McSpec",
    "McmcResult",
    "gauss_legendre_doubling",
    "orbit_volume_qubit",
    "orbit_volume_qutrit",
    "orbit_volume_simplex",
    "qutrit_full_volume",
    "qutrit_polar_integrand",
    "positive_fraction_iid",
    "positive_fraction_mcmc",
    "sample_bures_spectra",
    "sample_bures_spectrum",
    "sample_hs_spectra",
    "sample_hs_spectrum",
    "sample_mcmc_spectra",
    "sample_spectrum_mcmc",
]
