"""Monte Carlo samplers for eigenvalue spectra under the three measures.

* Hilbert-Schmidt: square of a complex Gaussian matrix, trace-normalized.
* Bures: the (I + U) G construction with a Haar-random unitary U.
* BKM (and, as a cross-check, the other two): random-walk Metropolis on
  the simplex in logit coordinates, targeting the radial density.

Parallelism and reproducibility: the master seed is split into one
independent child stream per worker; chunks are combined in worker
order, so results are a pure function of (samples, seed, workers).
Worker processes are an execution detail only -- running the same spec
sequentially yields bit-identical output.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..errors import DomainError
from ..measures import log_radial_density
from ..positivity import min_pairing_batch
from ..spectra import KernelSpectrum, MetricKind, StateSpectrum

#: Batch size bounding temporary memory in vectorized linear algebra.
_EIG_BATCH = 1 << 17

#: Metropolis acceptance-rate window considered healthy after adaptation.
_ACCEPT_WINDOW = (0.1, 0.9)

_ADAPT_TARGET = 0.4
_ADAPT_INTERVAL = 100


@dataclass(frozen=True)
class McSpec:
    """Sample budget, seeding and parallel layout of a Monte Carlo run.

    ``burn_in``, ``thin`` and ``chains_per_worker`` only affect the
    Markov-chain sampler.  The worker count is part of the
    reproducibility contract: changing it changes the random streams.
    """

    samples: int
    seed: int = 0
    workers: int = 1
    burn_in: int = 10_000
    thin: int = 10
    chains_per_worker: int = 32

    def __post_init__(self):
        if self.samples < 1:
            raise DomainError("samples must be at least 1")
        if self.seed < 0:
            raise DomainError("seed must be a non-negative integer")
        if self.workers < 1:
            raise DomainError("workers must be at least 1")
        if self.burn_in < 0 or self.thin < 1 or self.chains_per_worker < 1:
            raise DomainError("invalid Markov-chain layout")


@dataclass(frozen=True)
class McmcResult:
    """Markov-chain output: equal-length chains plus diagnostics.

    ``samples`` has shape (chains, per_chain, n) with descending
    spectra; the total sample count is rounded up from the request so
    every chain has the same length.
    """

    samples: np.ndarray
    acceptance_rate: float
    step_scale: float
    warnings: tuple[str, ...]

    @property
    def flat(self) -> np.ndarray:
        return self.samples.reshape(-1, self.samples.shape[-1])


def _worker_rng(seed: int, workers: int, index: int) -> np.random.Generator:
    child = np.random.SeedSequence(seed).spawn(workers)[index]
    return np.random.Generator(np.random.PCG64(child))


def _split_counts(total: int, workers: int) -> list[int]:
    base, extra = divmod(total, workers)
    return [base + (1 if i < extra else 0) for i in range(workers)]


def _map_ordered(fn, jobs, workers: int):
    """Run jobs, in parallel when asked, returning results in job order."""
    if workers == 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    try:
        with ProcessPoolExecutor(max_workers=min(workers, os.cpu_count() or 1)) as pool:
            futures = [pool.submit(fn, *job) for job in jobs]
            return [f.result() for f in futures]
    except (OSError, PermissionError):
        return [fn(*job) for job in jobs]


# --- independent samplers ----------------------------------------------------

def _ginibre(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    return rng.standard_normal((m, n, n)) + 1j * rng.standard_normal((m, n, n))


def _haar_unitary(rng: np.random.Generator, m: int, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_ginibre(rng, m, n))
    d = np.einsum("...ii->...i", r)
    return q * (d / np.abs(d))[:, None, :]


def _spectra_of(w: np.ndarray) -> np.ndarray:
    ev = np.linalg.eigvalsh(w)
    ev = ev / ev.sum(axis=1, keepdims=True)
    return ev[:, ::-1]


def _hs_chunk(n: int, count: int, seed: int, workers: int, index: int) -> np.ndarray:
    rng = _worker_rng(seed, workers, index)
    out = np.empty((count, n))
    done = 0
    while done < count:
        m = min(_EIG_BATCH, count - done)
        g = _ginibre(rng, m, n)
        out[done:done + m] = _spectra_of(g @ g.conj().swapaxes(1, 2))
        done += m
    return out


def _bures_chunk(n: int, count: int, seed: int, workers: int, index: int) -> np.ndarray:
    rng = _worker_rng(seed, workers, index)
    eye = np.eye(n)
    out = np.empty((count, n))
    done = 0
    while done < count:
        m = min(_EIG_BATCH, count - done)
        g = _ginibre(rng, m, n)
        a = (eye + _haar_unitary(rng, m, n)) @ g
        out[done:done + m] = _spectra_of(a @ a.conj().swapaxes(1, 2))
        done += m
    return out


def sample_hs_spectra(n: int, spec: McSpec) -> np.ndarray:
    """Spectra of trace-normalized squared Ginibre matrices: the
    Hilbert-Schmidt ensemble.  Returns (samples, n), rows descending."""
    if n < 2:
        raise DomainError("sampling needs n >= 2")
    counts = _split_counts(spec.samples, spec.workers)
    jobs = [(n, c, spec.seed, spec.workers, i) for i, c in enumerate(counts) if c > 0]
    return np.concatenate(_map_ordered(_hs_chunk, jobs, spec.workers), axis=0)


def sample_bures_spectra(n: int, spec: McSpec) -> np.ndarray:
    """Spectra from the (I + U) G matrix model: the Bures ensemble.
    Returns (samples, n), rows descending."""
    if n < 2:
        raise DomainError("sampling needs n >= 2")
    counts = _split_counts(spec.samples, spec.workers)
    jobs = [(n, c, spec.seed, spec.workers, i) for i, c in enumerate(counts) if c > 0]
    return np.concatenate(_map_ordered(_bures_chunk, jobs, spec.workers), axis=0)


# --- Metropolis on the simplex ----------------------------------------------

def _logit_to_simplex(y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Additive-logistic map and its log-Jacobian, vectorized over rows."""
    z = np.concatenate([y, np.zeros((y.shape[0], 1))], axis=1)
    zmax = z.max(axis=1, keepdims=True)
    lse = zmax[:, 0] + np.log(np.exp(z - zmax).sum(axis=1))
    logr = z - lse[:, None]
    return np.exp(logr), logr.sum(axis=1)


def _log_target(metric: MetricKind, y: np.ndarray) -> np.ndarray:
    r, jac = _logit_to_simplex(y)
    return log_radial_density(metric, r) + jac


def _mh_step(metric, y, logp, sigma, rng):
    prop = y + sigma * rng.standard_normal(y.shape)
    lp = _log_target(metric, prop)
    accept = np.log(rng.random(y.shape[0])) < lp - logp
    y = np.where(accept[:, None], prop, y)
    logp = np.where(accept, lp, logp)
    return y, logp, int(accept.sum())


def _mcmc_chunk(metric, n, chains, per_chain, burn_in, thin, seed, workers, index):
    rng = _worker_rng(seed, workers, index)
    y = rng.normal(0.0, 0.5, (chains, n - 1))
    logp = _log_target(metric, y)
    sigma = 0.8
    hits = 0
    for step in range(burn_in):
        y, logp, acc = _mh_step(metric, y, logp, sigma, rng)
        hits += acc
        if (step + 1) % _ADAPT_INTERVAL == 0:
            rate = hits / (_ADAPT_INTERVAL * chains)
            sigma = min(max(sigma * math.exp(0.8 * (rate - _ADAPT_TARGET)), 1e-3), 50.0)
            hits = 0
    out = np.empty((chains, per_chain, n))
    hits = 0
    for k in range(per_chain):
        for _ in range(thin):
            y, logp, acc = _mh_step(metric, y, logp, sigma, rng)
            hits += acc
        r, _ = _logit_to_simplex(y)
        out[:, k, :] = -np.sort(-r, axis=1)
    rate = hits / (chains * per_chain * thin)
    return out, sigma, rate


def sample_mcmc_spectra(metric: MetricKind, n: int, spec: McSpec) -> McmcResult:
    """Markov-chain sample of the radial density of any supported metric.

    The chain walks in logit coordinates of the full simplex (the
    density is permutation symmetric) and reports sorted spectra.  The
    step scale adapts toward ~40% acceptance during burn-in and is then
    frozen; a post-adaptation acceptance rate outside [0.1, 0.9] is
    reported as a warning.  The only sampler available for the BKM
    metric, and a cross-check for the other two.
    """
    if n < 2:
        raise DomainError("sampling needs n >= 2")
    chains_total = spec.workers * spec.chains_per_worker
    per_chain = -(-spec.samples // chains_total)  # ceil
    jobs = [
        (metric, n, spec.chains_per_worker, per_chain, spec.burn_in, spec.thin,
         spec.seed, spec.workers, i)
        for i in range(spec.workers)
    ]
    parts = _map_ordered(_mcmc_chunk, jobs, spec.workers)
    samples = np.concatenate([p[0] for p in parts], axis=0)
    rate = float(np.mean([p[2] for p in parts]))
    scale = float(np.mean([p[1] for p in parts]))
    warnings = ()
    if not _ACCEPT_WINDOW[0] <= rate <= _ACCEPT_WINDOW[1]:
        warnings = (
            f"Metropolis acceptance rate {rate:.3f} outside "
            f"[{_ACCEPT_WINDOW[0]}, {_ACCEPT_WINDOW[1]}] after adaptation",
        )
    return McmcResult(samples=samples, acceptance_rate=rate, step_scale=scale, warnings=warnings)


# --- streaming facades -------------------------------------------------------

def sample_hs_spectrum(n: int, spec: McSpec) -> Iterator[StateSpectrum]:
    """Stream of Hilbert-Schmidt-distributed spectra."""
    for row in sample_hs_spectra(n, spec):
        yield StateSpectrum(tuple(row))


def sample_bures_spectrum(n: int, spec: McSpec) -> Iterator[StateSpectrum]:
    """Stream of Bures-distributed spectra."""
    for row in sample_bures_spectra(n, spec):
        yield StateSpectrum(tuple(row))


def sample_spectrum_mcmc(metric: MetricKind, n: int, spec: McSpec) -> Iterator[StateSpectrum]:
    """Stream of Markov-chain spectra for any metric (truncated to the
    requested count)."""
    flat = sample_mcmc_spectra(metric, n, spec).flat
    for row in flat[: spec.samples]:
        yield StateSpectrum(tuple(row))


# --- fraction estimators -----------------------------------------------------

def positive_fraction_iid(spectra: np.ndarray, kernel: KernelSpectrum, tol: float = 1e-12):
    """Fraction of independent spectra inside the positive cone, with
    its binomial standard error."""
    inside = min_pairing_batch(spectra, kernel) >= -tol
    m = inside.shape[0]
    p = float(inside.mean())
    return p, math.sqrt(p * (1.0 - p) / m)


def positive_fraction_mcmc(result: McmcResult, kernel: KernelSpectrum, tol: float = 1e-12):
    """Positive-cone fraction from chain output; the standard error comes
    from the spread of per-chain means, so residual autocorrelation
    within chains is accounted for."""
    chains, per_chain, n = result.samples.shape
    inside = min_pairing_batch(result.flat, kernel) >= -tol
    per = inside.reshape(chains, per_chain).mean(axis=1)
    p = float(per.mean())
    if chains > 1:
        se = float(per.std(ddof=1) / math.sqrt(chains))
    else:
        se = math.sqrt(max(p * (1.0 - p), 1e-300) / per_chain)
    return p, se
