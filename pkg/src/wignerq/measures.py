"""Volume densities on the orbit space for the three supported metrics.

Each metric induces a measure on the eigenvalue simplex.  Restricted to
the simplex the densities are, up to normalization constants that cancel
in every volume ratio:

* Hilbert-Schmidt:  ``prod_{i<j} (r_i - r_j)^2``  (squared Vandermonde),
* Bures / BKM:      ``prod_i r_i^(-1/2) * prod_{i<j} c(r_i, r_j) (r_i - r_j)^2``,

where ``c`` is the Morozova-Chentsov weight of the metric: ``2/(x+y)``
for Bures and ``ln(x/y)/(x-y)`` for BKM.  Normalization constants are
deliberately never computed -- all consumers take ratios.

For two-level systems everything reduces to one radial coordinate (the
Bloch radius) and the ball volumes have closed forms, kept here both as
the fast path and as the oracle the quadrature engines are tested
against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .spectra import MetricKind, StateSpectrum

#: Relative separation below which the BKM weight switches to its series.
_BKM_SERIES_CUTOFF = 1e-9

_POSITIVE_BALL_RADIUS = 1.0 / math.sqrt(3.0)


def morozova_chentsov(metric: MetricKind, x: float, y: float) -> float:
    """Morozova-Chentsov weight c(x, y) of the metric for x, y > 0.

    Bures: ``2/(x+y)``.  BKM: ``ln(x/y)/(x-y)`` with the analytic limit
    ``1/x`` at coinciding arguments, evaluated through a short series in
    ``(x-y)/x`` below relative separation 1e-9 to avoid cancellation.
    HS: 1 by convention (the flat metric carries no weight).
    """
    if x <= 0.0 or y <= 0.0:
        raise DomainError(f"Morozova-Chentsov arguments must be positive, got ({x}, {y})")
    if metric is MetricKind.HS:
        return 1.0
    if metric is MetricKind.BURES:
        return 2.0 / (x + y)
    d = (x - y) / x
    if abs(x - y) < _BKM_SERIES_CUTOFF * x:
        return (1.0 + d / 2.0 + d * d / 3.0) / x
    # log1p keeps the quotient accurate as the arguments approach each other
    return math.log1p((x - y) / y) / (x - y)


def _density_from_values(metric: MetricKind, vals) -> float:
    """Unnormalized density at an eigenvalue tuple, any order."""
    n = len(vals)
    out = 1.0
    if metric is not MetricKind.HS:
        prod = 1.0
        for v in vals:
            prod *= v
        out = prod ** -0.5
    for i in range(n):
        for j in range(i + 1, n):
            d = vals[i] - vals[j]
            out *= d * d
            if metric is not MetricKind.HS:
                out *= morozova_chentsov(metric, vals[i], vals[j])
    return out


def radial_density(metric: MetricKind, r: StateSpectrum) -> float:
    """Unnormalized orbit-space density of the metric at a spectrum.

    Bures and BKM require a strictly interior spectrum (all eigenvalues
    positive); the inverse-square-root boundary singularity is
    integrable but not evaluable.  HS accepts any spectrum.
    """
    if metric is not MetricKind.HS and min(r.values) <= 0.0:
        raise DomainError("Bures/BKM density requires strictly positive eigenvalues")
    return _density_from_values(metric, r.values)


@dataclass(frozen=True)
class RadialDensity:
    """Callable handle for the (unnormalized) orbit-space density of a
    metric at fixed dimension."""

    metric: MetricKind
    n: int

    def __call__(self, r: StateSpectrum) -> float:
        if r.n != self.n:
            raise DomainError(f"expected a {self.n}-level spectrum, got {r.n}")
        return radial_density(self.metric, r)


def log_radial_density(metric: MetricKind, points: np.ndarray) -> np.ndarray:
    """Log of the unnormalized density for an (m, n) batch of simplex
    points (any eigenvalue order; the density is permutation symmetric).

    Rows touching the boundary (a non-positive entry) get ``-inf``.
    Used as the Markov-chain target; kept vectorized for speed.
    """
    pts = np.asarray(points, dtype=float)
    m, n = pts.shape
    out = np.zeros(m)
    interior = pts.min(axis=1) > 0.0
    safe = np.where(pts > 0.0, pts, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        if metric is not MetricKind.HS:
            out -= 0.5 * np.log(safe).sum(axis=1)
        for i in range(n):
            for j in range(i + 1, n):
                a, b = safe[:, i], safe[:, j]
                d = np.abs(a - b)
                out += 2.0 * np.log(d)
                if metric is MetricKind.BURES:
                    out += math.log(2.0) - np.log(a + b)
                elif metric is MetricKind.BKM:
                    hi = np.maximum(a, b)
                    lo = np.minimum(a, b)
                    near = d < _BKM_SERIES_CUTOFF * hi
                    s = (hi - lo) / hi
                    series = (1.0 + s / 2.0 + s * s / 3.0) / hi
                    ratio = np.log1p(d / lo) / np.where(near, 1.0, d)
                    out += np.log(np.where(near, series, ratio))
    out = np.where(interior, out, -np.inf)
    return np.where(np.isnan(out), -np.inf, out)


def qubit_radial_density(metric: MetricKind, rho: float) -> float:
    """Two-level density reduced to the Bloch radius.

    HS: ``rho^2``;  Bures: ``rho^2 / sqrt(1 - rho^2)``;
    BKM: ``rho * artanh(rho) / sqrt(1 - rho^2)``.
    Unnormalized, like everything in this module.
    """
    r = float(rho)
    if r < 0.0:
        raise DomainError(f"Bloch radius {r!r} must be non-negative")
    if metric is MetricKind.HS:
        if r > 1.0:
            raise DomainError(f"Bloch radius {r!r} exceeds 1")
        return r * r
    if r >= 1.0:
        raise DomainError("Bures/BKM densities diverge at the pure-state boundary")
    if metric is MetricKind.BURES:
        return r * r / math.sqrt(1.0 - r * r)
    return r * math.atanh(r) / math.sqrt(1.0 - r * r)


def qubit_ball_volume(metric: MetricKind, radius: float) -> float:
    """Closed-form (unnormalized) volume of the Bloch ball of the given
    radius; the antiderivative of ``qubit_radial_density``.

    HS: ``R^3/3``;  Bures: ``(arcsin R - R*sqrt(1-R^2))/2``;
    BKM: ``arcsin R - sqrt(1-R^2)*artanh R`` (value pi/2 at R=1 by limit).
    """
    R = float(radius)
    if not 0.0 <= R <= 1.0:
        raise DomainError(f"radius {R!r} outside [0, 1]")
    if metric is MetricKind.HS:
        return R ** 3 / 3.0
    if metric is MetricKind.BURES:
        return (math.asin(R) - R * math.sqrt(1.0 - R * R)) / 2.0
    if R == 1.0:
        return math.pi / 2.0
    return math.asin(R) - math.sqrt(1.0 - R * R) * math.atanh(R)


def positive_ball_radius() -> float:
    """Bloch radius 1/sqrt(3) bounding the Wigner-positive two-level states."""
    return _POSITIVE_BALL_RADIUS
