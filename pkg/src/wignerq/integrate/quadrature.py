"""Deterministic quadrature over the orbit space.

Volume integrals are set up so that every integrable endpoint
singularity is removed by substitution before the adaptive routine sees
it:

* two-level radial integrals use the arcsine substitution, turning the
  inverse-square-root factor at the pure-state boundary into a bounded
  (or merely logarithmic) integrand;
* three-level integrals run in polar coordinates; the radial variable
  is mapped by ``r = b*(1 - u^2)`` so the smallest eigenvalue, computed
  through an exact boundary-gap identity, stays positive and accurate
  all the way to the edge;
* the general-N nested simplex integration applies the same quadratic
  map on its innermost level.

All volumes are unnormalized; only ratios are meaningful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate as _sciint

from ..errors import ConvergenceError, DomainError
from ..measures import _density_from_values, qubit_radial_density
from ..spectra import MetricKind
from ..positivity import qutrit_orbit_bound, qutrit_positivity_bound

_SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and subdivision budget for adaptive quadrature."""

    rel_tol: float = 1e-8
    abs_tol: float = 1e-15
    max_subdivisions: int = 200

    def __post_init__(self):
        if self.rel_tol <= 0.0 or self.abs_tol <= 0.0:
            raise DomainError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be at least 1")


#: Default tolerances: 1e-8 for one-dimensional, 1e-7 for two-dimensional work.
DEFAULT_1D = QuadratureSpec(rel_tol=1e-8)
DEFAULT_2D = QuadratureSpec(rel_tol=1e-7)


@dataclass(frozen=True)
class VolumeEstimate:
    """Value of one volume integral with its statistical error (zero for
    deterministic quadrature) and the method that produced it."""

    value: float
    std_error: float
    method: str

    def __post_init__(self):
        if self.value < 0.0:
            raise DomainError(f"volumes are non-negative, got {self.value!r}")
        if self.std_error < 0.0:
            raise DomainError("std_error must be non-negative")


def _quad(f, a, b, rel_tol, abs_tol, limit):
    """scipy.integrate.quad with failure turned into ConvergenceError."""
    res = _sciint.quad(f, a, b, epsabs=abs_tol, epsrel=rel_tol, limit=limit, full_output=1)
    value, abserr = res[0], res[1]
    if len(res) == 4 and abserr > max(abs_tol, rel_tol * abs(value)):
        raise ConvergenceError(
            f"quadrature stalled: error estimate {abserr:.3e} for value {value:.6e} ({res[3]})",
            estimate=VolumeEstimate(max(value, 0.0), 0.0, "quadrature"),
        )
    return value


def _atanh_sin(theta: float) -> float:
    # artanh(sin t) with 1 - sin t = 2*sin^2(pi/4 - t/2) to survive t -> pi/2
    s = math.sin(theta)
    one_minus = 2.0 * math.sin(math.pi / 4.0 - theta / 2.0) ** 2
    return 0.5 * math.log((1.0 + s) / one_minus)


def _qubit_integrand_theta(metric: MetricKind):
    # density(sin t) * cos t after rho = sin t; the 1/sqrt(1-rho^2) factor
    # cancels analytically for Bures/BKM
    if metric is MetricKind.HS:
        return lambda t: math.sin(t) ** 2 * math.cos(t)
    if metric is MetricKind.BURES:
        return lambda t: math.sin(t) ** 2
    return lambda t: math.sin(t) * _atanh_sin(t)


def orbit_volume_qubit(metric: MetricKind, radius: float, spec: QuadratureSpec | None = None) -> VolumeEstimate:
    """Unnormalized volume of the two-level orbit region with Bloch
    radius up to ``radius``, by adaptive quadrature of the radial
    density (arcsine-substituted)."""
    R = float(radius)
    if not 0.0 <= R <= 1.0:
        raise DomainError(f"radius {R!r} outside [0, 1]")
    spec = spec or DEFAULT_1D
    if R == 0.0:
        return VolumeEstimate(0.0, 0.0, "quadrature")
    f = _qubit_integrand_theta(metric)
    value = _quad(f, 0.0, math.asin(R), spec.rel_tol, spec.abs_tol, spec.max_subdivisions)
    return VolumeEstimate(max(value, 0.0), 0.0, "quadrature")


# --- three-level polar integration -----------------------------------------

def _qutrit_bounds(phi: float, zeta: float | None):
    """Radial bound b for the region and the exact gap orbit_bound - b.

    The gap is evaluated from a cancellation-free closed form so that
    eigenvalues near the simplex boundary keep full relative accuracy.
    """
    co = math.cos(phi / 3.0)
    r_orbit = 1.0 / (2.0 * _SQRT3 * co)
    if zeta is None:
        return r_orbit, 0.0
    cp = math.cos(phi / 3.0 + zeta - math.pi / 3.0)
    if cp <= 0.0:
        return r_orbit, 0.0
    r_pos = 1.0 / (4.0 * _SQRT3 * cp)
    if r_pos >= r_orbit:
        return r_orbit, 0.0
    gap = (2.0 * cp - co) / (4.0 * _SQRT3 * co * cp)
    return r_pos, gap


def _qutrit_eigs(phi: float, b: float, gap0: float, u: float):
    """Eigenvalues at r = b*(1 - u^2) on the ray phi.

    The smallest eigenvalue is proportional to the distance from the
    orbit boundary, computed as gap0 + b*u^2 without cancellation.
    """
    psi = phi / 3.0
    c = math.cos(psi)
    s = math.sin(psi)
    r = b * (1.0 - u * u)
    e3 = (2.0 * c / _SQRT3) * (gap0 + b * u * u)
    rc = (r / _SQRT3) * c
    e1 = 1.0 / 3.0 + rc + r * s
    e2 = 1.0 / 3.0 + rc - r * s
    return e1, e2, e3, r


def qutrit_polar_integrand(metric: MetricKind, r: float, phi: float) -> float:
    """Orbit-space density in polar coordinates, including the radial
    Jacobian.  For the flat metric this is proportional to
    ``r^7 * sin(phi)^2``."""
    scale = 2.0 * r / _SQRT3
    vals = (
        1.0 / 3.0 - scale * math.cos((phi + 2.0 * math.pi) / 3.0),
        1.0 / 3.0 - scale * math.cos((phi + 4.0 * math.pi) / 3.0),
        1.0 / 3.0 - scale * math.cos(phi / 3.0),
    )
    return _density_from_values(metric, vals) * r


def orbit_volume_qutrit(
    metric: MetricKind,
    zeta: float | None = None,
    spec: QuadratureSpec | None = None,
) -> VolumeEstimate:
    """Unnormalized volume of the three-level orbit space (``zeta=None``)
    or of its Wigner-positive part for the kernel at apex angle ``zeta``.

    Two nested adaptive quadratures in polar coordinates; radial
    direction substituted by ``r = b*(1-u^2)``, the angle by
    ``phi = pi - w^2`` to soften the corner where two eigenvalues vanish
    together.
    """
    if zeta is not None and not 0.0 <= float(zeta) <= math.pi / 3.0 + 1e-12:
        raise DomainError(f"zeta {zeta!r} outside [0, pi/3]")
    spec = spec or DEFAULT_2D
    inner_rel = spec.rel_tol / 4.0
    outer_rel = spec.rel_tol / 2.0

    def inner(phi):
        b, gap0 = _qutrit_bounds(phi, zeta)

        def f(u):
            e1, e2, e3, r = _qutrit_eigs(phi, b, gap0, u)
            return _density_from_values(metric, (e1, e2, e3)) * r * 2.0 * b * u

        return _quad(f, 0.0, 1.0, inner_rel, spec.abs_tol / 4.0, spec.max_subdivisions)

    def outer(w):
        return inner(math.pi - w * w) * 2.0 * w

    value = _quad(outer, 0.0, math.sqrt(math.pi), outer_rel, spec.abs_tol, spec.max_subdivisions)
    return VolumeEstimate(max(value, 0.0), 0.0, "quadrature")


@lru_cache(maxsize=32)
def _qutrit_full_volume_cached(metric: MetricKind, rel_tol: float, abs_tol: float, limit: int) -> float:
    spec = QuadratureSpec(rel_tol=rel_tol, abs_tol=abs_tol, max_subdivisions=limit)
    return orbit_volume_qutrit(metric, None, spec).value


def qutrit_full_volume(metric: MetricKind, spec: QuadratureSpec | None = None) -> float:
    """Full three-level orbit-space volume, cached per metric and tolerance
    (it is the zeta-independent denominator of every indicator ratio)."""
    spec = spec or DEFAULT_2D
    return _qutrit_full_volume_cached(metric, spec.rel_tol, spec.abs_tol, spec.max_subdivisions)


# --- general-N nested simplex integration ----------------------------------

def orbit_volume_simplex(
    metric: MetricKind,
    n: int,
    kernel=None,
    spec: QuadratureSpec | None = None,
) -> VolumeEstimate:
    """Unnormalized volume of the ordered eigenvalue simplex (or of its
    positive cone for the given kernel spectrum) by nested adaptive
    quadrature in the coordinates r_1 >= ... >= r_{n-1}.

    The positivity constraint is linear in the innermost variable and is
    resolved there as an upper-bound cut.  Cost grows exponentially with
    ``n``; practical up to n = 5.
    """
    if n < 2:
        raise DomainError("simplex integration needs n >= 2")
    spec = spec or DEFAULT_2D
    pi_asc = None
    if kernel is not None:
        if kernel.n != n:
            raise DomainError(f"kernel has {kernel.n} levels, expected {n}")
        pi_asc = list(kernel.values)
    limit = spec.max_subdivisions
    hs = metric is MetricKind.HS

    def level(k, prefix, remaining, rel_tol):
        # choose r_k; eigenvalues r_1..r_{k-1} fixed in prefix
        levels_left = n - k + 1          # r_k .. r_n
        lo = remaining / levels_left
        hi = min(prefix[-1], remaining) if prefix else 1.0
        if hi <= lo:
            return 0.0
        if k < n - 1:
            def f(x):
                return level(k + 1, prefix + [x], remaining - x, rel_tol / 4.0)

            return _quad(f, lo, hi, rel_tol, spec.abs_tol, limit)

        # innermost: r_{n-1} free, r_n = remaining - r_{n-1}
        singular_edge = hi >= remaining  # r_n -> 0 reachable at the top end
        if pi_asc is not None:
            partial = sum(p * q for p, q in zip(prefix, pi_asc)) + remaining * pi_asc[n - 1]
            slope = pi_asc[n - 1] - pi_asc[n - 2]
            if slope > 0.0:
                cut = partial / slope
                if cut <= lo:
                    return 0.0
                if cut < hi:
                    hi = cut
                    singular_edge = False
            elif partial < 0.0:
                return 0.0

        def g(x):
            vals = tuple(prefix) + (x, remaining - x)
            return _density_from_values(metric, vals)

        if hs or not singular_edge:
            return _quad(g, lo, hi, rel_tol, spec.abs_tol, limit)

        # quadratic map keeps r_n = (remaining - hi) + t^2 exact near zero
        base = remaining - hi
        span = hi - lo

        def g_sub(t):
            x = hi - t * t
            vals = tuple(prefix) + (x, base + t * t)
            return _density_from_values(metric, vals) * 2.0 * t

        return _quad(g_sub, 0.0, math.sqrt(span), rel_tol, spec.abs_tol, limit)

    value = level(1, [], 1.0, spec.rel_tol / 2.0)
    return VolumeEstimate(max(value, 0.0), 0.0, "quadrature")


# --- fixed-order Gauss-Legendre with doubling -------------------------------

def gauss_legendre_doubling(
    f,
    a: float,
    b: float,
    rel_tol: float = 1e-6,
    abs_tol: float = 1e-15,
    start_order: int = 16,
    max_doublings: int = 4,
):
    """Integrate ``f`` on [a, b] with Gauss-Legendre rules of doubling
    order until two consecutive orders agree.  Returns (value, error
    estimate).  Meant for smooth integrands whose evaluations are
    expensive (each one may itself be a multidimensional quadrature).
    """
    if b <= a:
        raise DomainError("empty integration interval")
    if max_doublings < 1:
        raise DomainError("max_doublings must be at least 1")
    prev = None
    order = start_order
    for _ in range(max_doublings + 1):
        nodes, weights = np.polynomial.legendre.leggauss(order)
        xs = 0.5 * (b - a) * nodes + 0.5 * (a + b)
        total = 0.5 * (b - a) * math.fsum(w * f(x) for x, w in zip(xs, weights))
        if prev is not None:
            err = abs(total - prev)
            if err <= max(abs_tol, rel_tol * abs(total)):
                return total, err
        prev = total
        order *= 2
    raise ConvergenceError(
        f"Gauss-Legendre doubling did not settle below rel_tol={rel_tol:g} "
        f"by order {order // 2}",
        estimate=VolumeEstimate(max(prev, 0.0), 0.0, "quadrature"),
    )
