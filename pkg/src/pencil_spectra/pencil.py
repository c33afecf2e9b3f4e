"""Pencil instances H_{N;c} - lambda*D_{m,n} and their characteristic polynomial.

The determinant of the tridiagonal matrix is evaluated with the three-term
recurrence ``d_k = a_k d_{k-1} - d_{k-2}``.  Values and derivatives share a
power-of-two exponent stream so that ``p/p'`` never overflows, even for
N in the thousands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "PencilSpec",
    "ScaledValue",
    "CharPolyEval",
    "diag_entry",
    "charpoly_eval",
    "charpoly_arrays",
    "h_eigenvalues",
    "delta_Nc",
    "h_charpoly_at",
    "trace_and_det",
    "leading_coefficient",
]

RESCALE_BITS = 512
_BIG = 2.0 ** RESCALE_BITS
_DOWN = 2.0 ** -RESCALE_BITS


@dataclass(frozen=True)
class PencilSpec:
    """Problem instance: ``m`` rows weighted by ``sigma``, ``n`` rows by ``tau``."""

    m: int
    n: int
    c: float = 0.0
    sigma: complex = 1.0
    tau: complex = -1.0

    def __post_init__(self):
        if int(self.m) != self.m or int(self.n) != self.n:
            raise ValueError("m and n must be integers")
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be >= 1, got m={self.m}, n={self.n}")
        if self.sigma == 0 or self.tau == 0:
            raise ValueError("sigma and tau must be non-zero (D must be invertible)")
        if isinstance(self.c, complex) or not math.isfinite(self.c):
            raise ValueError("c must be a finite real number")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "c", float(self.c))

    @property
    def N(self) -> int:
        return self.m + self.n

    @property
    def is_default(self) -> bool:
        return self.sigma == 1 and self.tau == -1


@dataclass(frozen=True)
class ScaledValue:
    """Complex number ``mantissa * 2**exponent`` with an unbounded exponent."""

    mantissa: complex
    exponent: int = 0

    def normalized(self) -> "ScaledValue":
        """Rescale so that ``1 <= |mantissa| < 2`` (or the value is zero)."""
        mant = complex(self.mantissa)
        if mant == 0:
            return ScaledValue(0j, 0)
        if not (math.isfinite(mant.real) and math.isfinite(mant.imag)):
            raise ValueError("cannot normalize a non-finite mantissa")
        _, e = math.frexp(max(abs(mant.real), abs(mant.imag)))
        shift = e - 1
        mant = _ldexp_c(mant, -shift)
        # max-norm is in [1, 2); the 2-norm may still reach 2
        while abs(mant) >= 2.0:
            mant = _ldexp_c(mant, -1)
            shift += 1
        return ScaledValue(mant, int(self.exponent) + shift)

    @classmethod
    def from_complex(cls, x: complex) -> "ScaledValue":
        return cls(complex(x), 0).normalized()

    def to_complex(self) -> complex:
        """The represented value; overflows to ``inf`` if out of range."""
        e = int(self.exponent)
        if self.mantissa == 0:
            return 0j
        if e > 2000:
            big = lambda t: math.copysign(math.inf, t) if t else 0.0  # noqa: E731
            return complex(big(self.mantissa.real), big(self.mantissa.imag))
        return _ldexp_c(complex(self.mantissa), max(e, -2100))

    def log_abs(self) -> float:
        """Natural log of the modulus (``-inf`` for zero)."""
        if self.mantissa == 0:
            return -math.inf
        return math.log(abs(self.mantissa)) + self.exponent * math.log(2.0)

    def __abs__(self) -> float:
        return abs(self.to_complex())

    def __mul__(self, other: "ScaledValue") -> "ScaledValue":
        return ScaledValue(self.mantissa * other.mantissa, self.exponent + other.exponent).normalized()

    def __truediv__(self, other: "ScaledValue") -> "ScaledValue":
        return ScaledValue(self.mantissa / other.mantissa, self.exponent - other.exponent).normalized()


def _ldexp_c(z: complex, e: int) -> complex:
    return complex(math.ldexp(z.real, e), math.ldexp(z.imag, e))


@dataclass(frozen=True)
class CharPolyEval:
    value: ScaledValue
    derivative: ScaledValue
    newton_ratio: complex
    scale: ScaledValue = ScaledValue(1.0, 0)
    """Largest |d_k| met in the recurrence; rounding error in p is below N*eps*scale."""


def diag_entry(spec: PencilSpec, k: int, lam: complex) -> complex:
    """k-th (1-based) diagonal entry of H_{N;c} - lambda*D."""
    if not 1 <= k <= spec.N:
        raise IndexError(f"diagonal index {k} outside 1..{spec.N}")
    weight = spec.sigma if k <= spec.m else spec.tau
    return spec.c - lam * weight


def _recurrence(lam, c, sigma, tau, m, n):
    """Vectorised determinant recurrence.

    Returns mantissa arrays ``(d, dp, s)`` and the shared integer exponent,
    such that ``p = d * 2**e``, ``p' = dp * 2**e`` and ``s * 2**e`` is the
    largest intermediate minor ``max(1, |d_1|, ..., |d_N|)``.
    ``m`` or ``n`` may be zero here (used for q_m and the general-diagonal
    determinant identity).
    """
    lam = np.atleast_1d(np.asarray(lam, dtype=complex))
    N = m + n
    exp = np.zeros(lam.shape, dtype=np.int64)
    if N == 0:
        one = np.ones(lam.shape, dtype=complex)
        return one, np.zeros_like(one), np.ones(lam.shape), exp

    sigma = complex(sigma)
    tau = complex(tau)
    a_sig = c - lam * sigma
    a_tau = c - lam * tau
    abs_sig = np.abs(a_sig)
    abs_tau = np.abs(a_tau)

    first_sig = m >= 1
    d0 = np.ones(lam.shape, dtype=complex)
    d1 = (a_sig if first_sig else a_tau).copy()
    dp0 = np.zeros(lam.shape, dtype=complex)
    dp1 = np.full(lam.shape, -(sigma if first_sig else tau), dtype=complex)
    s1 = np.maximum(1.0, abs_sig if first_sig else abs_tau)

    for k in range(2, N + 1):
        if k <= m:
            a, da = a_sig, -sigma
        else:
            a, da = a_tau, -tau
        d2 = a * d1 - d0
        dp2 = da * d1 + a * dp1 - dp0
        d0, d1 = d1, d2
        dp0, dp1 = dp1, dp2
        s1 = np.maximum(s1, np.abs(d2))
        mag = np.maximum(s1, np.abs(dp1))
        hi = mag > _BIG
        if hi.any():
            d0[hi] *= _DOWN
            d1[hi] *= _DOWN
            dp0[hi] *= _DOWN
            dp1[hi] *= _DOWN
            s1[hi] *= _DOWN
            exp[hi] += RESCALE_BITS
    return d1, dp1, s1, exp


def charpoly_arrays(spec: PencilSpec, lam):
    """Vectorised :func:`charpoly_eval`: mantissas ``(d, dp, s)`` and exponents."""
    return _recurrence(lam, spec.c, spec.sigma, spec.tau, spec.m, spec.n)


def taylor_arrays(spec: PencilSpec, lam, order: int):
    """Taylor coefficients ``p^(j)(lambda)/j!`` for ``j = 0..order``.

    Returns an ``(order + 1, len(lam))`` mantissa array and the shared
    exponent array.  Each minor is expanded as a truncated polynomial in the
    shift ``h``; since ``a_k(lambda + h) = a_k(lambda) - w_k h`` the
    coefficients obey ``D_k[j] = a_k D_{k-1}[j] - w_k D_{k-1}[j-1] - D_{k-2}[j]``.
    """
    lam = np.atleast_1d(np.asarray(lam, dtype=complex))
    K = order + 1
    sigma, tau = complex(spec.sigma), complex(spec.tau)
    exp = np.zeros(lam.shape, dtype=np.int64)
    prev = np.zeros((K,) + lam.shape, dtype=complex)
    prev[0] = 1.0
    cur = np.zeros_like(prev)
    cur[0] = spec.c - lam * sigma
    if K > 1:
        cur[1] = -sigma
    for k in range(2, spec.N + 1):
        w = sigma if k <= spec.m else tau
        a = spec.c - lam * w
        nxt = a * cur - prev
        nxt[1:] -= w * cur[:-1]
        prev, cur = cur, nxt
        hi = np.abs(cur).max(axis=0) > _BIG
        if hi.any():
            prev[:, hi] *= _DOWN
            cur[:, hi] *= _DOWN
            exp[hi] += RESCALE_BITS
    return cur, exp


def charpoly_eval(spec: PencilSpec, lam: complex) -> CharPolyEval:
    """p(lambda) = det(H_{N;c} - lambda*D) and p'(lambda) in O(N)."""
    d, dp, s, e = charpoly_arrays(spec, [lam])
    d, dp, s, e = complex(d[0]), complex(dp[0]), float(s[0]), int(e[0])
    ratio = d / dp if dp != 0 else complex(math.inf, 0.0)
    return CharPolyEval(
        value=ScaledValue(d, e).normalized(),
        derivative=ScaledValue(dp, e).normalized(),
        newton_ratio=ratio,
        scale=ScaledValue(s, e).normalized(),
    )


def h_eigenvalues(N: int, c: float = 0.0) -> np.ndarray:
    """Spectrum of H_{N;c}, in descending order."""
    if N < 1:
        raise ValueError("N must be >= 1")
    j = np.arange(1, N + 1)
    return c + 2.0 * np.cos(np.pi * j / (N + 1))


def delta_Nc(N: int, c: float) -> float:
    """Distance from -c to spec(H_{N;0}); a lower bound for dist(spec, 0)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    return float(np.min(np.abs(c - h_eigenvalues(N))))


def h_charpoly_at(mm: int, lam: complex) -> ScaledValue:
    """q_m(lambda) = det(H_m - lambda I_m)."""
    if mm < 1:
        raise ValueError("mm must be >= 1")
    d, _, _, e = _recurrence([lam], 0.0, 1.0, 1.0, mm, 0)
    return ScaledValue(complex(d[0]), int(e[0])).normalized()


def trace_and_det(spec: PencilSpec) -> tuple[complex, ScaledValue]:
    """Trace and determinant of D^{-1} H_{N;c}: the sum and product of the eigenvalues."""
    sigma, tau = complex(spec.sigma), complex(spec.tau)
    trace = spec.c * (spec.m / sigma + spec.n / tau)
    p0 = charpoly_eval(spec, 0.0).value
    det_d = sigma ** spec.m * tau ** spec.n
    if spec.is_default:
        det_d = complex((-1) ** spec.n)
    return trace, p0 / ScaledValue.from_complex(det_d)


def leading_coefficient(spec: PencilSpec) -> complex:
    """Coefficient of lambda**N in p: (-1)**N * sigma**m * tau**n."""
    return (-1) ** spec.N * complex(spec.sigma) ** spec.m * complex(spec.tau) ** spec.n
