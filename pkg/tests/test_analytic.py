import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pencil_spectra.analytic import (
    F,
    G,
    Branch,
    F_tilde,
    UndefinedValueError,
    beta,
    beta_normalized,
    gamma,
    imag_axis_root,
    lambda_to_zw,
    n1_root,
    r1,
    r2,
    zw_to_lambda,
)

PHI = (1 + math.sqrt(5)) / 2

finite_complex = st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False)


def annulus(lo, hi):
    return st.tuples(st.floats(lo, hi), st.floats(-math.pi, math.pi)).map(lambda t: cmath.rect(*t))


def upper_half(min_im=1e-3):
    return st.tuples(st.floats(-4, 4), st.floats(min_im, 4)).map(lambda t: complex(*t))


class TestSubstitution:
    def test_examples(self):
        assert lambda_to_zw(1j).z == pytest.approx(1j * PHI)
        zw = lambda_to_zw(2.5)
        assert zw.z == pytest.approx(2) and zw.branch_note is Branch.real_branch
        zw = lambda_to_zw(2.5, 0.5)
        assert zw.z == pytest.approx(1) and zw.w == pytest.approx((3 + math.sqrt(5)) / 2)
        assert zw.branch_note is Branch.boundary

    def test_inverse_examples(self):
        assert zw_to_lambda(1j) == 0
        assert zw_to_lambda(2, 1) == 3.5
        assert zw_to_lambda(1j * PHI) == pytest.approx(1j)
        with pytest.raises(UndefinedValueError):
            zw_to_lambda(0)

    def test_band_tie_break(self):
        zw = lambda_to_zw(0.5)
        assert abs(zw.z) == pytest.approx(1) and zw.z.imag >= 0 and zw.w.imag >= 0
        assert zw.branch_note is Branch.boundary

    def test_round_trip_bulk(self):
        rng = np.random.default_rng(1)
        for _ in range(10_000):
            lam = cmath.rect(rng.uniform(0, 5), rng.uniform(-math.pi, math.pi))
            c = rng.uniform(0, 2)
            zw = lambda_to_zw(lam, c)
            assert abs(zw_to_lambda(zw.z, c) - lam) <= 1e-12 * max(1, abs(lam))
            assert abs(zw_to_lambda(zw.w, -c) - lam) <= 1e-12 * max(1, abs(lam))

    @given(upper_half(), st.floats(0, 1.99))
    def test_outside_unit_for_non_real(self, lam, c):
        zw = lambda_to_zw(lam, c)
        assert abs(zw.z) > 1 and abs(zw.w) > 1
        assert zw.branch_note is Branch.outside_unit


class TestBetaGamma:
    def test_examples(self):
        assert beta(1, 1, 2, 2) == pytest.approx(261 / 16)
        assert abs(beta(1, 1, 1j * PHI, 1j * PHI)) < 1e-14
        assert beta(2, 2, 1, 1) == 0
        assert gamma(1, 1, 2, 2) == pytest.approx(189 / 16)
        assert gamma(1, 1, 1, 1) == 0

    def test_zero_argument(self):
        for fn in (beta, gamma, beta_normalized):
            with pytest.raises(UndefinedValueError):
                fn(1, 1, 0, 1)

    @given(st.integers(1, 20), st.integers(1, 20), annulus(0.3, 3), annulus(0.3, 3))
    def test_normalised_matches_raw(self, m, n, z, w):
        raw = (z ** (m + 1) - z ** (-m - 1)) * (w ** (n + 1) - w ** (-n - 1)) + (z ** m - z ** -m) * (w ** n - w ** -n)
        assert beta(m, n, z, w) == pytest.approx(raw, rel=1e-9, abs=1e-9)

    def test_large_power_does_not_overflow(self):
        val = beta_normalized(5000, 5000, 1.5j, 1.2 + 0.3j)
        assert cmath.isfinite(val)

    def test_factorisation(self):
        rng = np.random.default_rng(2)
        for m in (1, 2, 7, 50, 200):
            for _ in range(20):
                z = cmath.rect(rng.uniform(0.9, 1.3), rng.uniform(-math.pi, math.pi))
                lhs = beta_normalized(m, m, z, z)
                # beta(z, z) z^(2m+2) = r1 r2; the normalisation divides beta by max(|z|, 1/|z|)^(2m+2)
                rhs = r1(m, z) * r2(m, z)
                if abs(z) >= 1:
                    rhs /= z ** (4 * m + 4)
                assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-12)


class TestF:
    def test_examples(self):
        assert F(1, 2) == pytest.approx(2.5)
        assert F(2, 2) == pytest.approx(2.1)
        with pytest.raises(UndefinedValueError):
            F(3, 1)
        assert F_tilde(1, 2.5) == 2.5
        assert F_tilde(2, 2.5) == pytest.approx(2.1)
        assert F_tilde(5, 0.3 + 2j).imag > 2

    def test_extended_plane(self):
        assert F_tilde(2, 0) == complex(math.inf, 0)
        assert F_tilde(3, 0) == 0
        assert math.isinf(F_tilde(3, complex(math.inf, 0)).real)

    @settings(max_examples=200)
    @given(st.integers(1, 50), annulus(1.05, 4))
    def test_F_equals_continued_fraction(self, m, zeta):
        assert F(m, zeta) == pytest.approx(F_tilde(m, zeta + 1 / zeta), rel=1e-11)

    @given(st.integers(1, 40), upper_half(1e-2))
    def test_herglotz(self, m, zeta):
        val = F_tilde(m, zeta)
        if m == 1:
            assert val.imag == zeta.imag
        else:
            assert val.imag > zeta.imag

    @given(st.integers(1, 40), annulus(2.001, 50))
    def test_lower_bound_outside_disk(self, m, zeta):
        assert abs(F_tilde(m, zeta)) > 1

    @given(st.integers(1, 60), st.floats(0.01, 1.5), st.floats(-math.pi, math.pi))
    def test_F_above_G(self, m, s, theta):
        z = cmath.exp(complex(s, theta))
        try:
            val = F(m, z)
        except UndefinedValueError:
            return
        assert abs(val) > G(m, s) * (1 - 1e-12)


class TestG:
    def test_examples(self):
        assert G(1, 1e-9) < 1e-8
        assert G(2, math.log(2)) == pytest.approx(2 * 15 / 17)
        assert G(7, 1) < math.e

    def test_domain(self):
        with pytest.raises(ValueError):
            G(2, 0)


class TestR:
    def test_examples(self):
        assert r2(5, 0) == -1
        assert abs(r2(1, 1j * PHI)) < 1e-14

    @given(st.integers(1, 30), finite_complex)
    def test_conjugation(self, m, z):
        assert np.conj(r2(m, z)) == pytest.approx(r1(m, z.conjugate()), rel=1e-12, abs=1e-12)

    @given(st.integers(1, 20), annulus(0.5, 2))
    def test_inversion(self, m, z):
        for r in (r1, r2):
            assert r(m, 1 / z) == pytest.approx(-(z ** (-2 * m - 2)) * r(m, z), rel=1e-10, abs=1e-12)

    @given(st.integers(1, 30), st.floats(-2, 2))
    def test_imaginary_axis_form(self, m, y):
        expect = (-1) ** (m + 1) * (y - 1) * y ** (2 * m + 1) - (y + 1)
        assert r2(m, 1j * y) == pytest.approx(expect, rel=1e-12, abs=1e-12)


class TestScalarRoots:
    def test_imag_axis_root(self):
        assert imag_axis_root(1) == pytest.approx(PHI, rel=1e-15)
        assert imag_axis_root(55) < math.exp(math.log(55) / 110)
        with pytest.raises(UndefinedValueError):
            imag_axis_root(2)

    @pytest.mark.parametrize("m", [1, 3, 21, 55, 501, 100_001])
    def test_imag_axis_root_solves_f(self, m):
        y = imag_axis_root(m)
        # log form of (y - 1) y^2m = 1 + 1/y
        slope = 1 / (y - 1) + 2 * m
        # residual of at most a couple of ulps in y
        assert math.log(y - 1) + 2 * m * math.log(y) == pytest.approx(math.log1p(1 / y), abs=4 * 2.0**-52 * slope)

    @pytest.mark.parametrize("m", [4, 5, 10, 200])
    def test_n1_root(self, m):
        y = n1_root(m)
        assert 1.25 < y < 1.5
        assert y - 1 / y > 9 / 20

    def test_n1_limit(self):
        assert abs(n1_root(200) - math.sqrt(2)) < 0.01

    def test_n1_domain(self):
        with pytest.raises(ValueError):
            n1_root(3)
