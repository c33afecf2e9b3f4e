"""Large-m predictions for the non-real eigenvalues of the m = n pencil.

Eigenvalues are written as ``lambda = u + i v / N``.  For ``c = 0`` they lie
near the curve ``v = Lambda_0(u)``; for ``0 < c < 2`` the curve ``Lambda_c``
bounds them from above.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

__all__ = [
    "ScaledEigenvalue",
    "AnsatzParams",
    "CircleParams",
    "CurveSample",
    "lambda0",
    "c0_grid",
    "imag_pair_prediction",
    "crude_bound",
    "fractional_circle",
    "X_cu",
    "lambda_c_target",
    "lambda_c",
    "ansatz_params",
    "intersect_forms",
    "intersect_condition",
    "curve_samples",
    "LAMBDA_C_CAP",
]

LAMBDA_C_CAP = 1e3


@dataclass(frozen=True)
class ScaledEigenvalue:
    u: float
    v: float

    @classmethod
    def from_lambda(cls, lam: complex, N: int) -> "ScaledEigenvalue":
        return cls(lam.real, N * lam.imag)

    def to_lambda(self, N: int) -> complex:
        return complex(self.u, self.v / N)


@dataclass(frozen=True)
class AnsatzParams:
    theta: float
    phi: float
    s0: float
    t0: float


@dataclass(frozen=True)
class CircleParams:
    center: complex
    radius: float


@dataclass(frozen=True)
class CurveSample:
    u: float
    lambda_value: float  # math.inf marks a value beyond the inversion cap


def lambda0(u: float) -> float:
    """sqrt(4 - u^2) * log(tan(pi/4 + arccos(u/2)/2)) for 0 < u < 2.

    Uses ``log tan(pi/4 + a/2) = 2 atanh(sqrt((2-u)/(2+u)))``, which stays
    accurate as u -> 2 where the curve vanishes like 2 - u.
    """
    if not 0 < u < 2:
        raise ValueError(f"lambda0 is defined on (0, 2), got u={u}")
    t = math.sqrt((2 - u) / (2 + u))
    return math.sqrt((2 - u) * (2 + u)) * 2 * math.atanh(t)


def c0_grid(mm: int) -> np.ndarray:
    """Predicted positive real parts 2cos(2 pi k/(2m+1)), k = 1..floor(m/2)."""
    if mm < 2:
        raise ValueError("mm must be >= 2")
    k = np.arange(1, mm // 2 + 1)
    return 2 * np.cos(2 * np.pi * k / (2 * mm + 1))


def imag_pair_prediction(mm: int) -> float:
    """Leading-order Im(lambda) = log(m)/m of the imaginary pair (odd m only)."""
    if mm < 1:
        raise ValueError("mm must be >= 1")
    if mm % 2 == 0:
        raise ValueError(f"even m={mm} has no purely imaginary eigenvalues")
    return math.log(mm) / mm


def crude_bound(mm: int, nn: int) -> float:
    """max(log m / m, log n / n), the leading-order bound on |Im lambda|."""
    if mm < 2 or nn < 2:
        raise ValueError("mm and nn must be >= 2")
    return max(math.log(mm) / mm, math.log(nn) / nn)


def fractional_circle(xi: complex, kappa: float) -> CircleParams:
    """The circle {zeta : |zeta - 1/xi| = kappa |zeta - xi|}."""
    if xi == 0:
        raise ValueError("xi must be non-zero")
    if kappa <= 0:
        raise ValueError("kappa must be positive")
    if kappa == 1:
        raise ValueError("kappa = 1 gives a line, not a circle")
    xi = complex(xi)
    k = kappa - 1 / kappa
    center = (kappa * xi - 1 / (kappa * xi)) / k
    radius = abs((xi - 1 / xi) / k)
    return CircleParams(center, radius)


def _check_cu(c: float, u: float) -> None:
    if not 0 < c < 2:
        raise ValueError(f"c must lie in (0, 2), got {c}")
    if not 0 < u < 2 - c:
        raise ValueError(f"u must lie in (0, 2 - c) = (0, {2 - c}), got {u}")


def X_cu(c: float, u: float, v: float) -> float:
    """tanh(v / (2 sqrt(4-(u-c)^2))) * tanh(v / (2 sqrt(4-(u+c)^2)))."""
    _check_cu(c, u)
    if v <= 0:
        raise ValueError("v must be positive")
    return math.tanh(v / (2 * math.sqrt(4 - (u - c) ** 2))) * math.tanh(
        v / (2 * math.sqrt(4 - (u + c) ** 2))
    )


def lambda_c_target(c: float, u: float) -> float:
    """tan(arccos((u-c)/2)/2) * tan(arccos((u+c)/2)/2), always in (0, 1)."""
    _check_cu(c, u)
    # tan(arccos(x)/2) = sqrt((1-x)/(1+x))
    return math.sqrt((2 - u + c) / (2 + u - c) * (2 - u - c) / (2 + u + c))


def lambda_c(c: float, u: float) -> float:
    """Bounding curve for 0 < c < 2: the v solving X_cu(c, u, v) = target.

    Returns ``math.inf`` when the solution exceeds :data:`LAMBDA_C_CAP`
    (the target tends to 1 as u -> 0).
    """
    target = lambda_c_target(c, u)
    hi = 1.0
    while X_cu(c, u, hi) < target:
        hi *= 2
        if hi > LAMBDA_C_CAP:
            return math.inf
    lo = hi / 2 if hi > 1 else 0.0
    if lo == 0.0:
        lo = 1e-300
        if X_cu(c, u, lo) >= target:
            return lo
    return brentq(lambda v: X_cu(c, u, v) - target, lo, hi, xtol=1e-14, rtol=1e-14, maxiter=500)


def ansatz_params(c: float, u: float, v: float) -> AnsatzParams:
    """Leading-order angles and radial rates of z and w for lambda = u + iv/(2m)."""
    if not (abs(u - c) < 2 and abs(u + c) < 2):
        raise ValueError("need |u - c| < 2 and |u + c| < 2")
    if v <= 0:
        raise ValueError("v must be positive")
    theta = math.acos((u - c) / 2)
    phi = math.acos((u + c) / 2)
    s0 = v / (2 * math.sqrt(4 - (u - c) ** 2))
    t0 = v / (2 * math.sqrt(4 - (u + c) ** 2))
    return AnsatzParams(theta, phi, s0, t0)


def intersect_forms(theta: float, phi: float, s0: float, t0: float) -> tuple[bool, bool]:
    """Circle-intersection test in its raw and simplified forms.

    The raw form compares the distance between the centres of the two
    zeta-circles with the sum of their radii.  The simplified form is
    ``tanh(s0) tanh(t0) <= tan(theta/2) tan(phi/2)``; when
    ``theta + phi > pi`` the right side exceeds 1 and its reciprocal is the
    correct bound, so the reciprocal is used there.
    """
    for name, val in (("theta", theta), ("phi", phi)):
        if not 0 < val < math.pi:
            raise ValueError(f"{name} must lie in (0, pi)")
    if s0 <= 0 or t0 <= 0:
        raise ValueError("s0 and t0 must be positive")
    first = fractional_circle(complex(math.cos(theta), math.sin(theta)), math.exp(2 * s0))
    second = fractional_circle(-complex(math.cos(phi), -math.sin(phi)), math.exp(2 * t0))
    raw = abs(first.center - second.center) ** 2 <= (first.radius + second.radius) ** 2

    bound = math.tan(theta / 2) * math.tan(phi / 2)
    bound = min(bound, 1 / bound)
    simplified = math.tanh(s0) * math.tanh(t0) <= bound
    return raw, simplified


def intersect_condition(theta: float, phi: float, s0: float, t0: float) -> bool:
    """Whether the two zeta-circles intersect; both evaluation forms must agree."""
    raw, simplified = intersect_forms(theta, phi, s0, t0)
    if raw != simplified:
        raise ArithmeticError(
            f"intersection forms disagree at theta={theta}, phi={phi}, s0={s0}, t0={t0}"
        )
    return raw


def curve_samples(c: float, samples: int = 2000, trim: float = 1e-6) -> list[CurveSample]:
    """Uniform samples of Lambda_0 (c = 0) or Lambda_c (0 < c < 2)."""
    if samples < 2:
        raise ValueError("samples must be >= 2")
    if c == 0:
        us = np.linspace(trim, 2 - trim, samples)
        return [CurveSample(float(u), lambda0(float(u))) for u in us]
    if not 0 < c < 2:
        raise ValueError("curves exist only for 0 <= c < 2")
    us = np.linspace(trim, 2 - c - trim, samples)
    return [CurveSample(float(u), lambda_c(c, float(u))) for u in us]
