import cmath
import math

import numpy as np
import pytest
import scipy.linalg

from pencil_spectra.analytic import F, beta_normalized, lambda_to_zw
from pencil_spectra.pencil import PencilSpec, trace_and_det
from pencil_spectra.rootfinder import (
    ClusterError,
    SolverOptions,
    aberth,
    classify_and_cluster,
    compute_spectrum,
    initial_guesses,
    real_axis_scan,
    relative_residual,
)
from pencil_spectra.verify import hausdorff

SQRT2 = math.sqrt(2)


def dense_eigs(m, n, c):
    N = m + n
    H = np.diag(np.full(N, c)) + np.diag(np.ones(N - 1), 1) + np.diag(np.ones(N - 1), -1)
    D = np.diag([1.0] * m + [-1.0] * n)
    return scipy.linalg.eigvals(H, D)


class TestSmallCases:
    def test_two_by_two(self, spectrum_of):
        sp = spectrum_of(1, 1)
        assert sp.converged
        assert sorted(sp.values(), key=lambda z: z.imag) == pytest.approx([-1j, 1j], abs=1e-14)
        assert not any(e.is_real for e in sp.eigenvalues)

    def test_four_by_four(self, spectrum_of):
        vals = spectrum_of(2, 2).values()
        expect = [cmath.exp(1j * math.pi / 6) * s for s in (1, -1)]
        expect += [np.conj(x) for x in expect]
        assert hausdorff(vals, expect) < 1e-14

    def test_seven_by_seven(self, spectrum_of):
        eigs = spectrum_of(3, 4).eigenvalues
        got = [(e.value, e.algebraic_multiplicity, e.is_real) for e in eigs]
        assert [g[1] for g in got] == [2, 3, 2]
        assert [g[0] for g in got] == pytest.approx([-SQRT2, 0, SQRT2], abs=1e-12)
        assert all(g[2] for g in got)

    @pytest.mark.parametrize("m,n,c", [(3, 7, 1.0), (5, 2, -0.4), (6, 6, 0.9), (8, 1, 0.0), (12, 11, 0.0)])
    def test_against_dense_solver(self, spectrum_of, m, n, c):
        sp = spectrum_of(m, n, c)
        assert sp.converged
        assert sum(e.algebraic_multiplicity for e in sp.eigenvalues) == m + n
        assert hausdorff(sp.values(), dense_eigs(m, n, c)) < 1e-6


class TestInvariants:
    @pytest.mark.parametrize("m,n,c", [(20, 20, 0.0), (30, 10, 0.5), (15, 25, 1.5), (25, 25, 2.5), (40, 41, 0.0)])
    def test_root_set(self, spectrum_of, m, n, c):
        spec = PencilSpec(m, n, c)
        sp = spectrum_of(m, n, c)
        vals = sp.values()
        trace, det = trace_and_det(spec)
        assert abs(vals.sum() - trace) <= 1e-8 * spec.N * max(1, abs(trace))
        assert np.all(np.abs(vals) < 2 + abs(c))
        assert hausdorff(vals, np.conj(vals)) <= 1e-8
        for e in sp.eigenvalues:
            assert e.residual <= 1e-9
            if e.is_real:
                assert e.value.imag == 0

    def test_product_of_roots(self, spectrum_of):
        spec = PencilSpec(20, 15, 0.3)
        vals = spectrum_of(20, 15, 0.3).values()
        _, det = trace_and_det(spec)
        assert np.prod(vals) == pytest.approx(det.to_complex(), rel=1e-8)

    def test_m_equals_n_symmetries(self, spectrum_of):
        a = spectrum_of(40, 40, 0.8).values()
        b = spectrum_of(40, 40, -0.8).values()
        assert hausdorff(a, -a) <= 1e-8
        assert hausdorff(a, b) <= 1e-8

    def test_main1_residuals(self, spectrum_of):
        c = 0.6
        for e in spectrum_of(30, 45, c).eigenvalues:
            zw = lambda_to_zw(e.value, c)
            assert abs(beta_normalized(30, 45, zw.z, zw.w)) < 1e-6
            if not e.is_real:
                assert abs(F(30, zw.z) * F(45, zw.w) + 1) < 1e-6

    def test_real_for_large_shift(self, spectrum_of):
        sp = spectrum_of(50, 50, 2.0)
        assert all(e.is_real for e in sp.eigenvalues)


class TestInitialGuesses:
    def test_asymptotic_positions(self):
        z = initial_guesses(PencilSpec(10, 10))
        assert len(z) == 20
        assert np.min(np.abs(z.imag)) > 0
        assert hausdorff(z, -z) < 1e-12 and hausdorff(z, np.conj(z)) < 1e-12

    def test_real_seeds_and_ellipse(self):
        spec = PencilSpec(3, 7, 1)
        z = initial_guesses(spec)
        assert len(z) == 10
        assert np.max(np.abs(z)) <= 3
        diff = np.abs(z[:, None] - z[None, :]) + np.eye(10)
        assert diff.min() > 1e-8
        # every sign change of p on the real axis contributes one real seed
        seeds = z[z.imag == 0].real
        assert len(seeds) == len(real_axis_scan(spec))
        assert np.max(np.abs(np.sort(seeds) - real_axis_scan(spec))) < 1e-3

    def test_all_real_spectrum_seeded_on_axis(self):
        z = initial_guesses(PencilSpec(30, 30, 2.5))
        assert np.all(z.imag == 0) and len(z) == 60

    def test_asymptotic_switch(self):
        default = initial_guesses(PencilSpec(10, 10, 0.1))
        forced = initial_guesses(PencilSpec(10, 10, 0.1), SolverOptions(asymptotic_guess_c=0.5))
        assert not np.allclose(default, forced)


class TestAberth:
    def test_reports_non_convergence(self):
        spec = PencilSpec(60, 60, 1.1)
        sp = compute_spectrum(spec, SolverOptions(max_iter=2))
        assert not sp.converged
        assert sp.iterations == 2

    def test_raw_output(self):
        spec = PencilSpec(5, 4, 0.2)
        z, it, ok = aberth(spec, initial_guesses(spec))
        assert ok and len(z) == 9 and it < 200
        assert np.max(relative_residual(spec, z)) < 1e-12

    def test_large_degree(self, spectrum_of):
        sp = spectrum_of(500, 500, 0.0)
        assert sp.converged and len(sp.values()) == 1000


class TestClustering:
    def test_merges_double_roots(self):
        spec = PencilSpec(3, 4)
        triple = [1e-6 * cmath.exp(2j * math.pi * k / 3 + 0.1j) for k in range(3)]
        raw = triple + [SQRT2 + 1e-9, SQRT2 - 1e-9, -SQRT2 + 1e-9j, -SQRT2 - 1e-9j]
        eigs = classify_and_cluster(raw, spec)
        assert [e.algebraic_multiplicity for e in eigs] == [2, 3, 2]
        assert [e.value for e in eigs] == pytest.approx([-SQRT2, 0, SQRT2], abs=1e-14)
        assert all(e.is_real for e in eigs)

    def test_exact_duplicates(self):
        raw = [0, 0, 0, SQRT2, SQRT2, -SQRT2, -SQRT2]
        eigs = classify_and_cluster(raw, PencilSpec(3, 4))
        assert [e.algebraic_multiplicity for e in eigs] == [2, 3, 2]

    def test_simple_pair(self):
        eigs = classify_and_cluster([1j, -1j], PencilSpec(1, 1))
        assert [e.algebraic_multiplicity for e in eigs] == [1, 1]
        assert not any(e.is_real for e in eigs)

    def test_wrong_count(self):
        with pytest.raises(ClusterError):
            classify_and_cluster([0.0], PencilSpec(1, 1))

    def test_extended_precision(self):
        sp = compute_spectrum(PencilSpec(3, 4), SolverOptions(precision="extended"))
        assert [e.algebraic_multiplicity for e in sp.eigenvalues] == [2, 3, 2]
        assert sp.eigenvalues[2].value == pytest.approx(SQRT2, abs=1e-15)

    def test_options_validation(self):
        with pytest.raises(ValueError):
            SolverOptions(precision="quad")
        with pytest.raises(ValueError):
            SolverOptions(max_iter=0)

    def test_general_weights_rejected(self):
        with pytest.raises(ValueError):
            compute_spectrum(PencilSpec(2, 2, sigma=2))


class TestRealAxisScan:
    def test_matches_solver(self, spectrum_of):
        spec = PencilSpec(50, 50, 2.2)
        scan = real_axis_scan(spec)
        vals = np.sort(spectrum_of(50, 50, 2.2).values().real)
        assert len(scan) == 100
        assert np.max(np.abs(scan - vals)) < 1e-9

    def test_no_real_roots(self):
        assert len(real_axis_scan(PencilSpec(1, 1))) == 0

    def test_even_order_roots_missed(self):
        assert real_axis_scan(PencilSpec(3, 4)) == pytest.approx([0.0], abs=1e-12)
