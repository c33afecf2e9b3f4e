"""The (z, w) substitution and the functions built on it.

``lambda - c = z + 1/z`` and ``lambda + c = w + 1/w``.  For non-real
eigenvalues the roots with ``|z| > 1`` and ``|w| > 1`` are used, and
eigenvalues are zeros of ``beta_{m,n}(z, w)`` or, equivalently off the real
axis, of ``F_m(z) F_n(w) + 1``.

Large powers are never formed directly: ``beta`` and ``F`` are evaluated
after dividing through by the dominant ``z**(m+1)``.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from scipy.optimize import brentq

__all__ = [
    "Branch",
    "ZWPair",
    "UndefinedValueError",
    "lambda_to_zw",
    "zw_to_lambda",
    "beta",
    "beta_normalized",
    "gamma",
    "F",
    "F_tilde",
    "G",
    "r1",
    "r2",
    "imag_axis_root",
    "n1_root",
    "BOUNDARY_RTOL",
]

BOUNDARY_RTOL = 1e-9


class UndefinedValueError(ValueError):
    """A function was evaluated at a pole or outside its domain."""


class Branch(enum.Enum):
    outside_unit = "outside_unit"
    boundary = "boundary"
    real_branch = "real_branch"


@dataclass(frozen=True)
class ZWPair:
    z: complex
    w: complex
    branch_note: Branch


def _outer_root(b: complex) -> complex:
    """Root of ``x**2 - b x + 1`` with ``|x| >= 1``; on the unit circle pick Im >= 0."""
    disc = cmath.sqrt(b * b - 4)
    r1 = (b + disc) / 2
    r2 = (b - disc) / 2
    # the two roots are reciprocal; take the larger and rebuild the other from it
    big = r1 if abs(r1) >= abs(r2) else r2
    if abs(abs(big) - 1.0) <= BOUNDARY_RTOL:
        small = 1 / big
        if big.imag < 0 or (big.imag == 0 and small.imag > 0):
            big = small
    return big


def lambda_to_zw(lam: complex, c: float = 0.0) -> ZWPair:
    lam = complex(lam)
    z = _outer_root(lam - c)
    w = _outer_root(lam + c)
    on_circle = abs(abs(z) - 1) <= BOUNDARY_RTOL or abs(abs(w) - 1) <= BOUNDARY_RTOL
    if on_circle:
        note = Branch.boundary
    elif abs(z.imag) <= BOUNDARY_RTOL * abs(z) and abs(w.imag) <= BOUNDARY_RTOL * abs(w):
        note = Branch.real_branch
    else:
        note = Branch.outside_unit
    return ZWPair(z, w, note)


def zw_to_lambda(z: complex, c: float = 0.0) -> complex:
    if z == 0:
        raise UndefinedValueError("z must be non-zero")
    return c + z + 1 / z


def _diff_normalized(x: complex, k: int) -> complex:
    """``(x**k - x**-k) / x**k`` for ``|x| >= 1``."""
    return 1 - x ** (-2 * k)


def _outside(x: complex) -> tuple[complex, int]:
    """Map ``x`` to ``|x| >= 1`` using ``x -> 1/x``; returns the sign flip of ``x**k - x**-k``."""
    if abs(x) < 1:
        return 1 / x, -1
    return x, 1


def beta_normalized(mm: int, nn: int, z: complex, w: complex) -> complex:
    """beta_{m,n}(z, w) divided by ``zeta**(m+1) * omega**(n+1)``.

    ``zeta`` is whichever of ``z, 1/z`` lies outside the unit disk (likewise
    ``omega``), so the result is O(1) and never overflows.
    """
    if z == 0 or w == 0:
        raise UndefinedValueError("z and w must be non-zero")
    zz, sz = _outside(complex(z))
    ww, sw = _outside(complex(w))
    first = _diff_normalized(zz, mm + 1) * _diff_normalized(ww, nn + 1)
    second = _diff_normalized(zz, mm) * _diff_normalized(ww, nn) / (zz * ww)
    return sz * sw * (first + second)


def _sym_diff(x: complex, k: int) -> complex:
    return x ** k - x ** (-k)


def beta(mm: int, nn: int, z: complex, w: complex) -> complex:
    """(z^{m+1} - z^{-m-1})(w^{n+1} - w^{-n-1}) + (z^m - z^{-m})(w^n - w^{-n})."""
    if z == 0 or w == 0:
        raise UndefinedValueError("z and w must be non-zero")
    zz, _ = _outside(complex(z))
    ww, _ = _outside(complex(w))
    scale = cmath.exp((mm + 1) * cmath.log(zz) + (nn + 1) * cmath.log(ww))
    return beta_normalized(mm, nn, z, w) * scale


def gamma(mm: int, nn: int, z: complex, w: complex) -> complex:
    """Same as :func:`beta` with the second product subtracted."""
    if z == 0 or w == 0:
        raise UndefinedValueError("z and w must be non-zero")
    z, w = complex(z), complex(w)
    return _sym_diff(z, mm + 1) * _sym_diff(w, nn + 1) - _sym_diff(z, mm) * _sym_diff(w, nn)


def F(mm: int, z: complex) -> complex:
    """F_m(z) = (z^{m+1} - z^{-m-1}) / (z^m - z^{-m}).

    Raises :class:`UndefinedValueError` where ``z**(2m) == 1``; callers then
    fall back on :func:`beta`.
    """
    if z == 0:
        raise UndefinedValueError("z must be non-zero")
    zz, _ = _outside(complex(z))  # F_m(1/z) = F_m(z)
    den = _diff_normalized(zz, mm)
    if abs(den) <= 4 * mm * 2.0 ** -52:
        raise UndefinedValueError(f"F_{mm} has a pole at z={z!r}")
    return zz * _diff_normalized(zz, mm + 1) / den


_INF = complex(math.inf, 0.0)


def _is_inf(x: complex) -> bool:
    return math.isinf(x.real) or math.isinf(x.imag)


def F_tilde(mm: int, zeta: complex) -> complex:
    """Continued-fraction iterate F~_1 = zeta, F~_{k+1} = zeta - 1/F~_k.

    Works on the extended plane: ``inf`` is returned for a pole and 1/inf = 0.
    """
    if mm < 1:
        raise ValueError("mm must be >= 1")
    zeta = complex(zeta)
    if _is_inf(zeta):
        return _INF
    f = zeta
    for _ in range(mm - 1):
        if _is_inf(f):
            f = zeta
        elif f == 0:
            f = _INF
        else:
            f = zeta - 1 / f
    return f


def G(mm: int, s: float) -> float:
    """Lower bound for |F_m(e^{s + i theta})|: e^s tanh(m s)."""
    if s <= 0:
        raise ValueError("s must be positive")
    return math.exp(s) * math.tanh(mm * s)


def r1(mm: int, z: complex) -> complex:
    z = complex(z)
    return (z + 1j) * z ** (2 * mm + 1) - 1j * (z - 1j)


def r2(mm: int, z: complex) -> complex:
    z = complex(z)
    return (z - 1j) * z ** (2 * mm + 1) + 1j * (z + 1j)


def imag_axis_root(mm: int) -> float:
    """Unique y > 1 with (y - 1) y^{2m} = 1 + 1/y, for odd m.

    Then z = iy gives the purely imaginary eigenvalue i(y - 1/y) of the
    m = n, c = 0 pencil.  Solved in log form, which has the same root and is
    free of overflow for any m.
    """
    if mm < 1:
        raise ValueError("mm must be >= 1")
    if mm % 2 == 0:
        raise UndefinedValueError(f"no imaginary-axis root for even m={mm}")

    def g(y):
        return math.log(y - 1) + 2 * mm * math.log(y) - math.log1p(1 / y)

    y = brentq(g, 1 + 1e-12, 2.0, xtol=1e-16, rtol=4 * 2.0 ** -52, maxiter=500)
    # Newton polish on f_m itself when it is representable
    for _ in range(3):
        try:
            p = y ** (2 * mm)
        except OverflowError:
            break
        f = (y - 1) * p - 1 - 1 / y
        df = p + 2 * mm * (y - 1) * p / y + 1 / (y * y)
        step = f / df
        if not math.isfinite(step) or abs(step) > 1e-10:
            break
        y -= step
    return y


def n1_root(mm: int) -> float:
    """Root in (5/4, 3/2) of g_m(y) = (-1)^m y^{2m+4} - 2(-1)^m y^{2m+2} + 2y^2 - 1.

    Gives the eigenvalue i(y - 1/y) of the n = 1, c = 0 pencil.
    """
    if mm <= 3:
        raise ValueError("mm must be > 3")
    sign = -1.0 if mm % 2 else 1.0

    def g_scaled(y):
        # g_m / y^{2m+2}
        return sign * (y * y - 2) + (2 * y * y - 1) * math.exp(-(2 * mm + 2) * math.log(y))

    return brentq(g_scaled, 1.25, 1.5, xtol=1e-16, rtol=4 * 2.0 ** -52, maxiter=500)
