"""Top-level classicality indicators.

The global indicator of an N-level system is the ratio of the measure
of the Wigner-positive part of the orbit space to the measure of the
whole orbit space, under one of the three supported metrics.  It is a
function of the chosen Wigner representation; averaging it uniformly
over the moduli of representations, or minimizing over them, gives
representation-independent figures.

Three evaluation paths exist and cross-check each other: closed forms
(two-level systems and the flat three-level case), deterministic
quadrature, and Monte Carlo.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Union

from .errors import DomainError
from .integrate.quadrature import (
    DEFAULT_2D,
    QuadratureSpec,
    gauss_legendre_doubling,
    orbit_volume_qubit,
    orbit_volume_qutrit,
    qutrit_full_volume,
)
from .integrate.sampling import (
    McSpec,
    positive_fraction_iid,
    positive_fraction_mcmc,
    sample_bures_spectra,
    sample_hs_spectra,
    sample_mcmc_spectra,
)
from .measures import positive_ball_radius, qubit_ball_volume
from .positivity import DEFAULT_CONE_TOL
from .spectra import MetricKind, ModuliPoint
from .sw_kernel import kernel_for

#: Moduli tag carried by averaged results instead of a point.
AVERAGED = "averaged"

_ZETA_MAX = math.pi / 3.0


@dataclass(frozen=True)
class IndicatorResult:
    """One indicator value with its error estimate and provenance.

    ``moduli`` is the moduli point the value belongs to, or the string
    ``"averaged"`` for moduli averages.  ``error`` is a standard error
    for Monte Carlo results and a tolerance-based bound for
    deterministic ones.
    """

    value: float
    error: float
    metric: MetricKind
    n: int
    moduli: Union[ModuliPoint, str, None]
    method: str
    warnings: tuple[str, ...] = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if not -1e-9 <= self.value <= 1.0 + 1e-9:
            raise DomainError(f"indicator value {self.value!r} outside [0, 1]")
        if self.error < 0.0:
            raise DomainError("error must be non-negative")

    def to_json_dict(self) -> dict:
        if isinstance(self.moduli, ModuliPoint):
            if self.moduli.n == 2:
                moduli = None
            elif self.moduli.n == 3:
                moduli = self.moduli.zeta
            else:
                moduli = list(self.moduli.direction)
        else:
            moduli = self.moduli
        return {
            "value": self.value,
            "error": self.error,
            "metric": self.metric.value,
            "n": self.n,
            "moduli": moduli,
            "method": self.method,
            "warnings": list(self.warnings),
            "meta": dict(self.meta),
        }


def _default_moduli(n: int, moduli: ModuliPoint | None) -> ModuliPoint:
    if moduli is None:
        if n == 2:
            return ModuliPoint.qubit()
        raise DomainError(f"a moduli point is required for n = {n}")
    if moduli.n != n:
        raise DomainError(f"moduli point is for n = {moduli.n}, expected {n}")
    return moduli


def qutrit_indicator_closed_form(zeta: float) -> float:
    """Flat-metric three-level indicator as a function of the apex angle:
    ``(1/128) * (1 + 20 c^2) / (4 c^2 - 1)^5`` with ``c = cos(zeta - pi/6)``."""
    z = float(zeta)
    if not 0.0 <= z <= _ZETA_MAX + 1e-12:
        raise DomainError(f"zeta {z!r} outside [0, pi/3]")
    c2 = math.cos(z - math.pi / 6.0) ** 2
    return (1.0 + 20.0 * c2) / (128.0 * (4.0 * c2 - 1.0) ** 5)


def closed_indicator(metric: MetricKind, n: int, moduli: ModuliPoint | None = None) -> IndicatorResult:
    """Closed-form indicator where one exists: any metric at n=2, the
    flat metric at n=3."""
    moduli = _default_moduli(n, moduli)
    if n == 2:
        value = qubit_ball_volume(metric, positive_ball_radius()) / qubit_ball_volume(metric, 1.0)
    elif n == 3 and metric is MetricKind.HS:
        value = qutrit_indicator_closed_form(moduli.zeta)
    else:
        raise DomainError(f"no closed form for metric {metric.value} at n = {n}")
    return IndicatorResult(value, 0.0, metric, n, moduli, "closed-form")


def _quadrature_indicator(metric, n, moduli, spec: QuadratureSpec) -> IndicatorResult:
    if n == 2:
        num = orbit_volume_qubit(metric, positive_ball_radius(), spec).value
        den = orbit_volume_qubit(metric, 1.0, spec).value
    elif n == 3:
        num = orbit_volume_qutrit(metric, moduli.zeta, spec).value
        den = qutrit_full_volume(metric, spec)
    else:
        raise DomainError(
            "the quadrature path covers n in {2, 3}; use the Monte Carlo path "
            "or integrate.orbit_volume_simplex for larger systems"
        )
    value = num / den
    return IndicatorResult(
        value,
        2.0 * spec.rel_tol * value + spec.abs_tol,
        metric,
        n,
        moduli,
        "quadrature",
        meta={"rel_tol": spec.rel_tol},
    )


def _mc_indicator(metric, n, moduli, spec: McSpec, sampler, cone_tol) -> IndicatorResult:
    kernel = kernel_for(moduli)
    if sampler is None:
        sampler = "mcmc" if metric is MetricKind.BKM else "matrix"
    warnings: tuple[str, ...] = ()
    if sampler == "matrix":
        if metric is MetricKind.HS:
            arr = sample_hs_spectra(n, spec)
        elif metric is MetricKind.BURES:
            arr = sample_bures_spectra(n, spec)
        else:
            raise DomainError("no matrix model is available for the BKM measure; use sampler='mcmc'")
        p, se = positive_fraction_iid(arr, kernel, cone_tol)
        drawn = arr.shape[0]
    elif sampler == "mcmc":
        res = sample_mcmc_spectra(metric, n, spec)
        p, se = positive_fraction_mcmc(res, kernel, cone_tol)
        warnings = res.warnings
        drawn = res.flat.shape[0]
    else:
        raise DomainError(f"unknown sampler {sampler!r}; expected 'matrix' or 'mcmc'")
    return IndicatorResult(
        p,
        se,
        metric,
        n,
        moduli,
        "monte-carlo",
        warnings=warnings,
        meta={"sampler": sampler, "samples": drawn, "seed": spec.seed, "workers": spec.workers},
    )


def global_indicator(
    metric: MetricKind,
    n: int,
    moduli: ModuliPoint | None = None,
    spec: Union[QuadratureSpec, McSpec, None] = None,
    sampler: str | None = None,
    cone_tol: float = DEFAULT_CONE_TOL,
) -> IndicatorResult:
    """Relative volume of the Wigner-positive orbit-space region.

    The type of ``spec`` selects the path: a ``QuadratureSpec`` (or
    ``None``) runs deterministic quadrature, an ``McSpec`` estimates the
    positive-cone fraction from random spectra.  ``sampler`` overrides
    the Monte Carlo sampler choice ('matrix' or 'mcmc'); by default the
    BKM metric uses the Markov chain and the others their matrix models.
    """
    moduli = _default_moduli(n, moduli)
    if isinstance(spec, McSpec):
        return _mc_indicator(metric, n, moduli, spec, sampler, cone_tol)
    if spec is None:
        spec = DEFAULT_2D if n == 3 else QuadratureSpec()
    return _quadrature_indicator(metric, n, moduli, spec)


def average_indicator(
    metric: MetricKind,
    n: int = 3,
    spec: QuadratureSpec | None = None,
    inner: str = "auto",
) -> IndicatorResult:
    """Indicator averaged uniformly over the three-level moduli angle.

    The one-dimensional moduli integral is done by Gauss-Legendre
    doubling; each node evaluates the indicator either in closed form
    (flat metric, the default) or by two-dimensional quadrature.
    """
    if n != 3:
        raise DomainError("moduli averaging is implemented for n = 3")
    if isinstance(spec, McSpec):
        raise DomainError("averaging is deterministic; pass a QuadratureSpec")
    spec = spec or DEFAULT_2D
    if inner not in ("auto", "closed", "quadrature"):
        raise DomainError(f"unknown inner path {inner!r}")
    use_closed = metric is MetricKind.HS if inner == "auto" else inner == "closed"
    if use_closed and metric is not MetricKind.HS:
        raise DomainError(f"no closed form for metric {metric.value} at n = 3")

    if use_closed:
        f = qutrit_indicator_closed_form
    else:
        den = qutrit_full_volume(metric, spec)

        def f(z):
            return orbit_volume_qutrit(metric, z, spec).value / den

    avg_tol = max(100.0 * spec.rel_tol, 1e-6)
    total, gl_err = gauss_legendre_doubling(f, 0.0, _ZETA_MAX, rel_tol=avg_tol, abs_tol=spec.abs_tol)
    value = total / _ZETA_MAX
    err = gl_err / _ZETA_MAX + (0.0 if use_closed else 2.0 * spec.rel_tol * value)
    return IndicatorResult(
        value,
        err,
        metric,
        3,
        AVERAGED,
        "closed-form" if use_closed else "quadrature",
        meta={"moduli_measure": "uniform"},
    )


def _golden_section_min(f, a: float, b: float, tol: float):
    """Golden-section search for the minimum of a unimodal function."""
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - inv * (b - a)
    d = a + inv * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    return x, f(x)


def minimize_indicator(
    metric: MetricKind,
    n: int = 3,
    spec: QuadratureSpec | None = None,
    method: str = "auto",
    zeta_tol: float = 1e-6,
) -> tuple[float, float]:
    """Minimize the three-level indicator over the moduli angle.

    Returns ``(zeta_star, q_star)`` from a golden-section search on
    [0, pi/3].  ``method`` picks the evaluation path: 'closed' (flat
    metric only), 'quadrature', or 'auto' (closed form when available).
    """
    if n != 3:
        raise DomainError("moduli minimization is implemented for n = 3")
    if method not in ("auto", "closed", "quadrature"):
        raise DomainError(f"unknown method {method!r}")
    use_closed = metric is MetricKind.HS if method == "auto" else method == "closed"
    if use_closed:
        if metric is not MetricKind.HS:
            raise DomainError(f"no closed form for metric {metric.value} at n = 3")
        f = qutrit_indicator_closed_form
    else:
        # quadrature noise flattens the valley floor; the flat metric is
        # cheap enough to run extra-tight by default
        if spec is None:
            spec = QuadratureSpec(rel_tol=1e-9) if metric is MetricKind.HS else DEFAULT_2D
        den = qutrit_full_volume(metric, spec)

        def f(z):
            return orbit_volume_qutrit(metric, z, spec).value / den

    return _golden_section_min(f, 0.0, _ZETA_MAX, zeta_tol)


def qubit_positivity_probability(metric: MetricKind, radius: float) -> float:
    """Probability that a two-level state drawn uniformly (under the
    metric's measure) from the Bloch ball of the given radius has a
    non-negative Wigner function; 1 for radii inside the positive ball."""
    R = float(radius)
    if not 0.0 <= R <= 1.0:
        raise DomainError(f"radius {R!r} outside [0, 1]")
    rp = positive_ball_radius()
    if R <= rp:
        return 1.0
    return qubit_ball_volume(metric, rp) / qubit_ball_volume(metric, R)


def positivity_curve(radii) -> list[tuple[float, float, float, float]]:
    """Rows (R, HS, Bures, BKM) of the positivity probability on a radius
    grid; the data behind the qubit probability plot."""
    return [
        (
            float(R),
            qubit_positivity_probability(MetricKind.HS, R),
            qubit_positivity_probability(MetricKind.BURES, R),
            qubit_positivity_probability(MetricKind.BKM, R),
        )
        for R in radii
    ]
