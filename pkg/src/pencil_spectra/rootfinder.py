"""All N roots of p(lambda) = det(H_{N;c} - lambda D_{m,n}).

Simultaneous Aberth-Ehrlich iteration driven by the O(N) recurrence for
``p/p'``; no polynomial coefficients are ever formed (they overflow long
before N = 1000).  Converged approximations are then grouped into clusters
with inclusion disks to read off algebraic multiplicities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .analytic import imag_axis_root
from .asymptotics import c0_grid, lambda0
from .pencil import PencilSpec, charpoly_arrays, leading_coefficient, taylor_arrays

__all__ = [
    "SolverOptions",
    "Eigenvalue",
    "Spectrum",
    "ClusterError",
    "compute_spectrum",
    "cached_spectrum",
    "initial_guesses",
    "aberth",
    "classify_and_cluster",
    "real_axis_scan",
    "relative_residual",
]

_EPS = 2.0 ** -52
ELLIPSE_ASPECT = 0.1
_LOG2 = math.log(2.0)


class ClusterError(RuntimeError):
    """Cluster multiplicities do not add up to the degree."""


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-13
    residual_tolerance: float = 1e-9
    real_threshold: float = 1e-10
    cluster_radius: float = 1e-10
    pairing_tolerance: float = 1e-8
    max_iter: int = 200
    grid_points: int = 20001
    # rounding-noise floor for |p|, in units of N * eps * (largest minor)
    noise_factor: float = 1.0
    # "double", or "extended" for an mpmath Newton polish after clustering
    precision: str = "double"
    extended_dps: int = 32
    # use the large-m predictions as starting points when m = n and |c| <= this
    asymptotic_guess_c: float = 0.0

    def __post_init__(self):
        if self.precision not in ("double", "extended"):
            raise ValueError(f"unknown precision {self.precision!r}")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


@dataclass(frozen=True)
class Eigenvalue:
    value: complex
    residual: float
    algebraic_multiplicity: int = 1
    is_real: bool = False
    newton_steps: int = 0


@dataclass(frozen=True)
class Spectrum:
    spec: PencilSpec
    eigenvalues: tuple[Eigenvalue, ...]
    iterations: int
    converged: bool
    raw: np.ndarray = field(repr=False, compare=False, default=None)

    def values(self) -> np.ndarray:
        """Eigenvalues repeated according to algebraic multiplicity."""
        out = [e.value for e in self.eigenvalues for _ in range(e.algebraic_multiplicity)]
        return np.array(out, dtype=complex)

    def distinct(self) -> np.ndarray:
        return np.array([e.value for e in self.eigenvalues], dtype=complex)

    @property
    def real(self) -> list[Eigenvalue]:
        return [e for e in self.eigenvalues if e.is_real]

    @property
    def nonreal(self) -> list[Eigenvalue]:
        return [e for e in self.eigenvalues if not e.is_real]


def relative_residual(spec: PencilSpec, lam, mult: int = 1) -> np.ndarray:
    """Relative Newton correction |q / q'| / (1 + |lambda|) with q = p^(mult-1).

    For a simple root this is the usual first-order forward error estimate;
    for a k-fold root the (k-1)-th derivative has a simple zero there, so the
    same measure stays meaningful.
    """
    lam = np.atleast_1d(np.asarray(lam, dtype=complex))
    coef, _ = taylor_arrays(spec, lam, mult)
    num = np.abs(coef[mult - 1])
    den = mult * np.abs(coef[mult])
    with np.errstate(divide="ignore", invalid="ignore"):
        res = np.where(num == 0, 0.0, num / den) / (1 + np.abs(lam))
    return np.where(np.isnan(res), np.inf, res)


def initial_guesses(spec: PencilSpec, opts: SolverOptions | None = None) -> np.ndarray:
    """Deterministic starting points for the Aberth iteration.

    For m = n, c = 0 (m >= 4) these are the large-m predictions.  Otherwise
    real seeds at sign changes of p plus a flat ellipse for the remainder.
    """
    opts = opts or SolverOptions()
    m, N, c = spec.m, spec.N, spec.c
    if spec.m == spec.n and abs(c) <= opts.asymptotic_guess_c and m >= 4 and spec.is_default:
        u = c0_grid(m)
        v = np.array([lambda0(x) for x in u]) / (2 * m)
        quad = u + 1j * v
        pts = [quad, np.conj(quad), -quad, -np.conj(quad)]
        if m % 2:
            y = imag_axis_root(m)
            pts.append(np.array([1j * (y - 1 / y), -1j * (y - 1 / y)]))
        guesses = np.concatenate(pts)
        if len(guesses) == N and _min_separation(guesses) > 1e-8:
            return guesses
    # real roots of odd multiplicity are located by sign changes and seeded
    # directly; the rest start on a flat ellipse hugging the real segment
    # (from a round circle Aberth needs about N sweeps to migrate inwards)
    real = _sign_change_midpoints(spec, opts.grid_points)
    k = N - len(real)
    if k <= 0:
        return real[:N]
    half_width = 2 + abs(c)
    if abs(c) < 2:
        # observed (not proven) home of the non-real eigenvalues: |Re| < 2 - |c|
        half_width = max(2 - abs(c), 0.2)
    angles = 2 * np.pi * np.arange(k) / k + 0.5 / k
    rest = half_width * (np.cos(angles) + ELLIPSE_ASPECT * 1j * np.sin(angles))
    return np.concatenate([real, rest])


def _sign_change_midpoints(spec: PencilSpec, points: int) -> np.ndarray:
    R = 2 + abs(spec.c)
    xs = np.linspace(-R, R, points)
    d, _, _, _ = charpoly_arrays(spec, xs)
    sgn = np.sign(d.real)
    idx = np.flatnonzero(sgn[:-1] * sgn[1:] < 0)
    return 0.5 * (xs[idx] + xs[idx + 1]).astype(complex)


def _min_separation(z: np.ndarray) -> float:
    if len(z) < 2:
        return math.inf
    diff = np.abs(z[:, None] - z[None, :])
    np.fill_diagonal(diff, math.inf)
    return float(diff.min())


def aberth(spec: PencilSpec, z0, opts: SolverOptions | None = None):
    """Jacobi-style Aberth-Ehrlich sweeps.

    An approximation is frozen once its correction drops below
    ``tol * (1 + |z|)`` or ``|p|`` reaches the rounding-noise floor.

    Returns ``(roots, iterations, converged)``.
    """
    opts = opts or SolverOptions()
    z = np.array(z0, dtype=complex)
    N = len(z)
    active = np.ones(N, dtype=bool)
    noise = opts.noise_factor * N * _EPS
    for it in range(1, opts.max_iter + 1):
        idx = np.flatnonzero(active)
        d, dp, s, _ = charpoly_arrays(spec, z[idx])
        diff = z[idx, None] - z[None, :]
        diff[np.arange(len(idx)), idx] = 1.0
        inv = 1.0 / diff
        inv[np.arange(len(idx)), idx] = 0.0
        sums = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            denom = dp / d - sums
            corr = np.where(d == 0, 0.0, 1.0 / denom)
        bad = ~np.isfinite(corr)
        if bad.any():
            # nudge off an exact singular configuration
            corr[bad] = 1e-3 * (1 + np.abs(z[idx][bad])) * np.exp(0.7j * (it + np.arange(bad.sum())))
        z[idx] = z[idx] - corr
        done = (np.abs(corr) <= opts.tol * (1 + np.abs(z[idx]))) | (np.abs(d) <= noise * s)
        active[idx[done]] = False
        if not active.any():
            return z, it, True
    return z, opts.max_iter, False


def _log_inclusion_radii(spec: PencilSpec, z: np.ndarray, opts: SolverOptions) -> np.ndarray:
    """log of N (|p(z_i)| + noise) / |lead * prod_{j != i} (z_i - z_j)|.

    The union of overlapping disks with these radii contains exactly as many
    roots as approximations.
    """
    N = len(z)
    d, _, s, e = charpoly_arrays(spec, z)
    noise = opts.noise_factor * N * _EPS * s
    with np.errstate(divide="ignore"):
        log_p = np.log(np.abs(d) + noise) + e * _LOG2
        logdiff = np.log(np.abs(z[:, None] - z[None, :]))
    # exact duplicates are merged by adjacency anyway; leave them out of the product
    logdiff[np.isneginf(logdiff)] = 0.0
    log_lead = math.log(abs(leading_coefficient(spec)))
    return math.log(N) + log_p - log_lead - logdiff.sum(axis=1)


def _refine(spec: PencilSpec, lam: np.ndarray, mult: int, real: bool, steps: int = 12):
    """Newton on p^(mult-1), where a root of multiplicity ``mult`` is simple.

    Vectorised over ``lam``; an entry stops once its step no longer shrinks
    (rounding noise reached).  Returns ``(values, steps_used)``.
    """
    lam = np.array(lam, dtype=complex)
    if real:
        lam = lam.real.astype(complex)
    used = np.zeros(len(lam), dtype=int)
    last = np.full(len(lam), np.inf)
    active = np.ones(len(lam), dtype=bool)
    for _ in range(steps):
        idx = np.flatnonzero(active)
        if len(idx) == 0:
            break
        coef, _ = taylor_arrays(spec, lam[idx], mult)
        num, den = coef[mult - 1], mult * coef[mult]
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(num == 0, 0.0, num / den)
        if real:
            step = step.real.astype(complex)
        ok = np.isfinite(step) & (np.abs(step) < 0.5 * last[idx]) & (step != 0)
        take = idx[ok]
        lam[take] -= step[ok]
        used[take] += 1
        last[take] = np.abs(step[ok])
        tiny = last[idx] <= 2 * _EPS * (1 + np.abs(lam[idx]))
        active[idx[~ok | tiny]] = False
    return lam, used


def classify_and_cluster(raw, spec: PencilSpec, opts: SolverOptions | None = None) -> list[Eigenvalue]:
    """Group raw roots into eigenvalues with multiplicities; snap real ones.

    Roots are merged when their inclusion disks overlap or they lie within
    ``cluster_radius * (1 + |lambda|)`` of each other.  Each cluster of size k
    is refined by Newton on p^(k-1), for which the root is simple.
    """
    opts = opts or SolverOptions()
    z = np.asarray(raw, dtype=complex)
    N = len(z)
    if N != spec.N:
        raise ClusterError(f"expected {spec.N} raw roots, got {N}")
    radii = np.exp(_log_inclusion_radii(spec, z, opts))
    radii = np.maximum(radii, 0.5 * opts.cluster_radius * (1 + np.abs(z)))
    dist = np.abs(z[:, None] - z[None, :])
    adj = dist <= radii[:, None] + radii[None, :]
    n_comp, labels = connected_components(csr_matrix(adj), directed=False)

    mults = np.bincount(labels, minlength=n_comp)
    centres = np.bincount(labels, weights=z.real, minlength=n_comp) / mults
    centres = centres + 1j * np.bincount(labels, weights=z.imag, minlength=n_comp) / mults
    steps = np.zeros(n_comp, dtype=int)
    for k in np.unique(mults):
        sel = np.flatnonzero(mults == k)
        centres[sel], steps[sel] = _refine(spec, centres[sel], int(k), real=False)
    is_real = np.abs(centres.imag) <= opts.real_threshold
    for k in np.unique(mults[is_real]):
        sel = np.flatnonzero(is_real & (mults == k))
        centres[sel], more = _refine(spec, centres[sel], int(k), real=True)
        steps[sel] += more
    residuals = np.empty(n_comp)
    for k in np.unique(mults):
        sel = np.flatnonzero(mults == k)
        residuals[sel] = relative_residual(spec, centres[sel], int(k))

    out = [
        Eigenvalue(complex(centres[i]), float(residuals[i]), int(mults[i]), bool(is_real[i]), int(steps[i]))
        for i in range(n_comp)
    ]
    if sum(e.algebraic_multiplicity for e in out) != N:
        raise ClusterError("cluster multiplicities do not sum to N")
    out.sort(key=lambda e: (round(e.value.real, 12), e.value.imag))
    return out


def _polish_extended(spec: PencilSpec, eigs: list[Eigenvalue], dps: int) -> list[Eigenvalue]:
    import mpmath

    with mpmath.workdps(dps):
        c = mpmath.mpf(spec.c)
        sig, tau = mpmath.mpc(spec.sigma), mpmath.mpc(spec.tau)

        def p_dp(lam):
            d0, d1 = mpmath.mpf(1), c - lam * sig
            q0, q1 = mpmath.mpf(0), -sig
            for k in range(2, spec.N + 1):
                w = sig if k <= spec.m else tau
                a = c - lam * w
                d0, d1 = d1, a * d1 - d0
                q0, q1 = q1, -w * d0 + a * q1 - q0
            return d1, q1

        out = []
        for e in eigs:
            lam = mpmath.mpc(e.value) if not e.is_real else mpmath.mpf(e.value.real)
            steps = 0
            for _ in range(30):
                d, dp = p_dp(lam)
                if dp == 0:
                    break
                step = e.algebraic_multiplicity * d / dp
                if e.is_real:
                    step = mpmath.re(step)
                lam -= step
                steps += 1
                if abs(step) <= mpmath.mpf(10) ** (-dps + 4) * (1 + abs(lam)):
                    break
            value = complex(lam)
            res = float(relative_residual(spec, [value], e.algebraic_multiplicity)[0])
            out.append(replace(e, value=value, residual=res, newton_steps=e.newton_steps + steps))
        return out


def compute_spectrum(spec: PencilSpec, opts: SolverOptions | None = None) -> Spectrum:
    """Every eigenvalue of the pencil, with residuals and multiplicities."""
    opts = opts or SolverOptions()
    if not spec.is_default:
        raise ValueError("the root finder supports only sigma = 1, tau = -1")
    z0 = initial_guesses(spec, opts)
    raw, iterations, converged = aberth(spec, z0, opts)
    eigs = classify_and_cluster(raw, spec, opts)
    if opts.precision == "extended":
        eigs = _polish_extended(spec, eigs, opts.extended_dps)
    return Spectrum(spec, tuple(eigs), iterations, converged, raw)


@lru_cache(maxsize=128)
def cached_spectrum(spec: PencilSpec, opts: SolverOptions | None = None) -> Spectrum:
    """Memoised :func:`compute_spectrum` (both arguments are hashable)."""
    return compute_spectrum(spec, opts)


def real_axis_scan(spec: PencilSpec, opts: SolverOptions | None = None) -> np.ndarray:
    """Real roots of odd multiplicity, from sign changes of p on a uniform grid.

    Even-multiplicity roots produce no sign change and are missed.
    """
    opts = opts or SolverOptions()
    R = 2 + abs(spec.c)
    xs = np.linspace(-R, R, opts.grid_points)
    d, _, _, _ = charpoly_arrays(spec, xs)
    sgn = np.sign(d.real)
    roots = list(xs[sgn == 0])
    change = np.flatnonzero(sgn[:-1] * sgn[1:] < 0)

    def sign_at(x):
        return np.sign(charpoly_arrays(spec, [x])[0][0].real)

    for i in change:
        lo, hi = xs[i], xs[i + 1]
        s_lo = sgn[i]
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if mid in (lo, hi):
                break
            s_mid = sign_at(mid)
            if s_mid == 0:
                lo = hi = mid
                break
            if s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    return np.sort(np.array(roots, dtype=float))
