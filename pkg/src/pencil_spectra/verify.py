"""Numerical checks of the structural and asymptotic claims about the pencil.

Every check returns one or more :class:`CheckResult` records with a single
worst-case metric and the tolerance it is compared against, so a report can
be inspected, serialised, and diffed.  Claims of the form "strictly
decreasing in m" are encoded as the largest ratio of consecutive errors with
tolerance ``nextafter(1, 0)``.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from .analytic import (
    F,
    UndefinedValueError,
    beta_normalized,
    gamma,
    imag_axis_root,
    lambda_to_zw,
    n1_root,
)
from .asymptotics import c0_grid, crude_bound, lambda0, lambda_c
from .pencil import PencilSpec, ScaledValue, charpoly_eval, delta_Nc, h_charpoly_at, h_eigenvalues, trace_and_det
from .rootfinder import SolverOptions, Spectrum, cached_spectrum

__all__ = [
    "CheckResult",
    "VerificationReport",
    "SUITES",
    "STRICTLY_BELOW_ONE",
    "brute_force_det",
    "hausdorff",
    "zero_distance_grid",
    "zero_distance_rows",
    "check_localisation",
    "check_symmetries",
    "check_root_set",
    "check_charpoly_oracle",
    "check_det_identity",
    "check_main1",
    "check_c0_theorem",
    "check_cne0_theorem",
    "check_crude_bound",
    "check_nm1_theorem",
    "check_zero_distance",
    "check_n1_lemma",
    "run_suite",
]

STRICTLY_BELOW_ONE = math.nextafter(1.0, 0.0)
HAUSDORFF_TOL = 1e-8
MAIN1_TOL = 1e-6
EXCLUDED_MARGIN = 1e-3
C0_LADDER = (100, 250, 500)
CNE0_WINDOW = 0.05
CNE0_SLACK = 1.05
CRUDE_FACTOR = 1.5
ZERO_LOWER_TOL = 1e-10
ZERO_VANISH_TOL = 1e-8
N1_MATCH_TOL = 1e-8
N1_LOWER = 9 / 20


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    metric: float
    tolerance: float
    detail: str = ""

    @classmethod
    def compare(cls, name: str, metric: float, tolerance: float, detail: str = "") -> "CheckResult":
        """Build a result with ``passed = metric <= tolerance`` (NaN fails)."""
        metric = float(metric)
        return cls(name, bool(metric <= tolerance), metric, float(tolerance), detail)

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("metric", "tolerance"):
            if not math.isfinite(out[key]):
                out[key] = repr(out[key])
        return out


@dataclass(frozen=True)
class VerificationReport:
    spec: dict
    checks: tuple[CheckResult, ...] = field(default_factory=tuple)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    def to_table(self) -> str:
        width = max([len(c.name) for c in self.checks] + [5])
        lines = [f"{'check':<{width}}  result  {'metric':>12}  {'tolerance':>12}  detail"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{c.name:<{width}}  {mark:<6}  {c.metric:>12.4g}  {c.tolerance:>12.4g}  {c.detail}")
        lines.append(f"all_passed: {str(self.all_passed).lower()}")
        return "\n".join(lines) + "\n"


# helpers


def _spectrum(spec: PencilSpec, opts: SolverOptions | None) -> Spectrum:
    return cached_spectrum(spec, opts or SolverOptions())


def hausdorff(a, b) -> float:
    """Hausdorff distance between two finite point sets in the plane."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if len(a) == 0 or len(b) == 0:
        return 0.0 if len(a) == len(b) else math.inf
    dist = np.abs(a[:, None] - b[None, :])
    return float(max(dist.min(axis=1).max(), dist.min(axis=0).max()))


def brute_force_det(mat) -> complex:
    """Determinant by Laplace expansion along successive rows.

    Minors are memoised on the set of columns still available, so an N x N
    matrix costs O(N 2^N) instead of O(N!).  Meant only as an oracle for
    N <= 12.
    """
    a = np.asarray(mat, dtype=complex)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    memo: dict[int, complex] = {}

    def minor(row: int, cols: int) -> complex:
        if row == n:
            return 1.0
        if cols in memo:
            return memo[cols]
        total = 0j
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                if a[row, j] != 0:
                    total += sign * a[row, j] * minor(row + 1, cols & ~(1 << j))
                sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)


def _pencil_matrix(N: int, c: float, diag) -> np.ndarray:
    mat = np.diag(np.full(N, c, dtype=complex)) - np.diag(np.asarray(diag, dtype=complex))
    idx = np.arange(N - 1)
    mat[idx, idx + 1] = 1.0
    mat[idx + 1, idx] = 1.0
    return mat


def _fmt(x: complex) -> str:
    return f"{x.real:.6g}{x.imag:+.6g}i"


# localisation and symmetry


def check_localisation(spec: PencilSpec, opts: SolverOptions | None = None) -> list[CheckResult]:
    """Spectrum inside |lambda| < 2 + |c|, closed under conjugation, and real when |c| >= 2."""
    sp = _spectrum(spec, opts)
    vals = sp.values()
    bound = 2 + abs(spec.c)
    out = [
        CheckResult.compare(
            "localisation_bound",
            float(np.max(np.abs(vals))),
            math.nextafter(bound, 0.0),
            f"max|lambda| must stay below 2+|c| = {bound:.6g}",
        ),
        CheckResult.compare(
            "localisation_conjugation",
            hausdorff(vals, np.conj(vals)),
            HAUSDORFF_TOL,
            "Hausdorff distance between the spectrum and its conjugate",
        ),
    ]
    if abs(spec.c) >= 2:
        out.append(
            CheckResult.compare(
                "localisation_reality",
                float(np.max(np.abs(vals.imag))),
                HAUSDORFF_TOL,
                "max|Im lambda| for |c| >= 2",
            )
        )
    return out


def check_symmetries(spec: PencilSpec, opts: SolverOptions | None = None) -> list[CheckResult]:
    """For m = n: invariance under lambda -> -lambda and under c -> -c."""
    if spec.m != spec.n:
        return []
    vals = _spectrum(spec, opts).values()
    mirror = _spectrum(PencilSpec(spec.m, spec.n, -spec.c), opts).values()
    return [
        CheckResult.compare(
            "symmetry_negation",
            hausdorff(vals, -vals),
            HAUSDORFF_TOL,
            "Hausdorff distance between the spectrum and its negative",
        ),
        CheckResult.compare(
            "symmetry_c_sign",
            hausdorff(vals, mirror),
            HAUSDORFF_TOL,
            f"Hausdorff distance between the spectra at c={spec.c:g} and c={-spec.c:g}",
        ),
    ]


def check_root_set(spec: PencilSpec, opts: SolverOptions | None = None) -> list[CheckResult]:
    """Sum and product of the computed roots against trace and determinant of D^-1 H."""
    sp = _spectrum(spec, opts)
    vals = sp.values()
    N = spec.N
    trace, det = trace_and_det(spec)
    sum_err = abs(vals.sum() - trace) / max(1.0, abs(trace))

    # compare products in log form; an exact or rounding-level zero on
    # both sides counts as agreement
    scale = charpoly_eval(spec, 0.0).scale
    det_is_zero = det.mantissa == 0 or det.log_abs() <= scale.log_abs() + math.log(N * 2.0 ** -52)
    if det_is_zero:
        prod_err = float(np.min(np.abs(vals)))
        prod_detail = "det(D^-1 H) vanishes to rounding; metric is min|lambda|"
    else:
        with np.errstate(divide="ignore"):
            log_mod = float(np.sum(np.log(np.abs(vals))))
        phase = float(np.sum(np.angle(vals)))
        diff = complex(log_mod - det.log_abs(), phase - cmath.phase(det.mantissa))
        diff = complex(diff.real, math.remainder(diff.imag, 2 * math.pi))
        prod_err = abs(cmath.exp(diff) - 1) if abs(diff) < 1 else math.inf
        prod_detail = "relative error of prod(lambda) against det(D^-1 H)"
    return [
        CheckResult.compare("roots_sum_trace", sum_err, 1e-8 * N, f"sum(lambda) = {_fmt(vals.sum())}, trace = {_fmt(trace)}"),
        CheckResult.compare("roots_product_det", prod_err, 1e-8 * N, prod_detail),
    ]


# brute-force oracles


def check_charpoly_oracle(max_N: int = 8, trials: int = 100, seed: int = 0) -> CheckResult:
    """The recurrence against cofactor-expansion determinants for every m + n <= max_N."""
    if max_N > 12:
        raise ValueError("brute-force oracle is capped at N <= 12")
    rng = np.random.default_rng(seed)
    worst = 0.0
    where = ""
    for N in range(2, max_N + 1):
        for m in range(1, N):
            n = N - m
            for _ in range(trials):
                c = float(rng.uniform(-3, 3))
                lam = complex(*rng.uniform(-3, 3, size=2))
                spec = PencilSpec(m, n, c)
                diag = lam * np.array([1.0] * m + [-1.0] * n)
                exact = brute_force_det(_pencil_matrix(N, c, diag))
                got = charpoly_eval(spec, lam).value.to_complex()
                err = abs(got - exact) / abs(exact)
                if err > worst:
                    worst, where = err, f"(m,n,c)=({m},{n},{c:.4g}), lambda={_fmt(lam)}"
    return CheckResult.compare("charpoly_bruteforce", worst, 1e-12, f"worst at {where}")


def _random_away(rng) -> complex:
    """Random z in the annulus 0.5 < |z| < 2 kept away from 0 and +-1."""
    while True:
        z = cmath.rect(rng.uniform(0.5, 2.0), rng.uniform(-math.pi, math.pi))
        if min(abs(z - 1), abs(z + 1)) > 0.1:
            return z


def check_det_identity(max_N: int = 8, trials: int = 20, seed: int = 0) -> CheckResult:
    """det(H_N - diag(sigma..., tau...)) = (-1)^N gamma(z, w) / ((z - 1/z)(w - 1/w)).

    Here ``sigma = z + 1/z`` fills the first m diagonal slots and
    ``tau = w + 1/w`` the remaining n; either block may be empty.
    """
    if max_N > 8:
        raise ValueError("max_N must be <= 8")
    rng = np.random.default_rng(seed)
    worst = 0.0
    where = ""
    for N in range(1, max_N + 1):
        for m in range(0, N + 1):
            n = N - m
            for _ in range(trials):
                z, w = _random_away(rng), _random_away(rng)
                sigma, tau = z + 1 / z, w + 1 / w
                exact = brute_force_det(_pencil_matrix(N, 0.0, [sigma] * m + [tau] * n))
                formula = (-1) ** N * gamma(m, n, z, w) / ((z - 1 / z) * (w - 1 / w))
                err = abs(formula - exact) / max(abs(exact), 1e-300)
                if err > worst:
                    worst, where = err, f"(m,n)=({m},{n}), z={_fmt(z)}, w={_fmt(w)}"
    return CheckResult.compare("lemma_det_identity", worst, 1e-10, f"worst at {where}")


# theorem checks


def _off_excluded(lam: complex, c: float) -> bool:
    points = (2 + c, 2 - c, -2 + c, -2 - c)
    return min(abs(lam - p) for p in points) > EXCLUDED_MARGIN


def check_main1(spec: PencilSpec, opts: SolverOptions | None = None) -> list[CheckResult]:
    """Eigenvalues are zeros of beta (all) and of F_m F_n + 1 (non-real)."""
    sp = _spectrum(spec, opts)
    worst_beta = 0.0
    worst_f = 0.0
    skipped = 0
    for e in sp.eigenvalues:
        if not _off_excluded(e.value, spec.c):
            skipped += 1
            continue
        zw = lambda_to_zw(e.value, spec.c)
        worst_beta = max(worst_beta, abs(beta_normalized(spec.m, spec.n, zw.z, zw.w)))
        if not e.is_real:
            try:
                val = F(spec.m, zw.z) * F(spec.n, zw.w) + 1
            except UndefinedValueError:
                val = math.inf
            worst_f = max(worst_f, abs(val))
    note = f"{skipped} eigenvalue(s) within {EXCLUDED_MARGIN:g} of +-2+-c skipped"
    return [
        CheckResult.compare("thm_main1a_beta", worst_beta, MAIN1_TOL, "max normalised |beta|; " + note),
        CheckResult.compare("thm_main1c_residual", worst_f, MAIN1_TOL, "max |F_m(z) F_n(w) + 1| over non-real; " + note),
    ]


def _ratio_metric(errors: list[float]) -> float:
    """Largest ratio of consecutive errors; below one iff strictly decreasing."""
    ratios = [b / a if a > 0 else math.inf for a, b in zip(errors, errors[1:])]
    return max(ratios) if ratios else 0.0


def _c0_errors(mm: int, opts: SolverOptions | None, u_min: float, axis_tol: float):
    sp = _spectrum(PencilSpec(mm, mm, 0.0), opts)
    vals = sp.distinct()
    off = vals[np.abs(vals.real) > axis_tol]
    off = off[np.abs(off.real) > u_min]
    u = np.abs(off.real)
    curve = np.array([lambda0(x) if 0 < x < 2 else math.inf for x in u])
    lam_err = float(np.max(np.abs(2 * mm * np.abs(off.imag) - curve))) if len(off) else 0.0
    grid = c0_grid(mm)
    grid_err = float(np.max(np.min(np.abs(u[:, None] - grid[None, :]), axis=1))) if len(off) else 0.0
    return sp, lam_err, grid_err


def check_c0_theorem(
    mm: int,
    ladder: tuple[int, ...] = C0_LADDER,
    u_min: float = 0.0,
    opts: SolverOptions | None = None,
) -> list[CheckResult]:
    """Four checks for m = n, c = 0.

    No real eigenvalues (on ``mm`` and the ladder); the scaled curve error
    and the real-part grid error both strictly decreasing along ``ladder``;
    and the purely imaginary pair at ``mm`` (present iff ``mm`` is odd).
    ``u_min`` optionally drops eigenvalues with ``|Re| <= u_min`` from the
    curve and grid errors; the default 0 keeps every off-axis eigenvalue.
    """
    opts = opts or SolverOptions()
    axis_tol = opts.pairing_tolerance
    sizes = sorted(set(ladder) | {mm})
    n_real = {m: len(_spectrum(PencilSpec(m, m, 0.0), opts).real) for m in sizes}
    real_count = sum(n_real.values())

    lam_errs, grid_errs = [], []
    for m in ladder:
        _, le, ge = _c0_errors(m, opts, u_min, axis_tol)
        lam_errs.append(le)
        grid_errs.append(ge)
    ladder_txt = ",".join(str(m) for m in ladder)

    sp = _spectrum(PencilSpec(mm, mm, 0.0), opts)
    axis = [e for e in sp.eigenvalues if abs(e.value.real) <= axis_tol and not e.is_real]
    axis_count = sum(e.algebraic_multiplicity for e in axis)
    if mm % 2:
        y = imag_axis_root(mm)
        target = y - 1 / y
        y_bound = math.exp(math.log(mm) / (2 * mm))
        if axis_count == 2 and y < y_bound:
            ims = sorted(e.value.imag for e in axis)
            pair_err = max(abs(ims[0] + target), abs(ims[1] - target))
        else:
            pair_err = math.inf
        pair_detail = (
            f"m={mm}: {axis_count} axis eigenvalue(s), predicted +-{target:.12g}i, "
            f"y={y:.15g} vs bound {y_bound:.15g}"
        )
    else:
        pair_err = 0.0 if axis_count == 0 else math.inf
        pair_detail = f"m={mm} even: {axis_count} axis eigenvalue(s), expected none"

    return [
        CheckResult.compare(
            "thm_c0_no_real",
            real_count,
            0,
            "real eigenvalue counts " + ", ".join(f"m={m}: {k}" for m, k in n_real.items()),
        ),
        CheckResult.compare(
            "thm_c0_curve_decrease",
            _ratio_metric(lam_errs),
            STRICTLY_BELOW_ONE,
            f"max |2m Im - Lambda0(|Re|)| on m={ladder_txt}: " + ", ".join(f"{e:.6g}" for e in lam_errs),
        ),
        CheckResult.compare(
            "thm_c0_grid_decrease",
            _ratio_metric(grid_errs),
            STRICTLY_BELOW_ONE,
            f"max grid distance on m={ladder_txt}: " + ", ".join(f"{e:.6g}" for e in grid_errs),
        ),
        CheckResult.compare("thm_c0_imaginary_pair", pair_err, 1e-8, pair_detail),
    ]


def check_cne0_theorem(mm: int, c: float, opts: SolverOptions | None = None) -> CheckResult:
    """2m |Im lambda| <= 1.05 Lambda_c(|Re lambda|) away from the window edges."""
    if not 0 < c < 2:
        raise ValueError("c must lie in (0, 2)")
    sp = _spectrum(PencilSpec(mm, mm, c), opts)
    worst = 0.0
    counted = 0
    for e in sp.nonreal:
        u = abs(e.value.real)
        if CNE0_WINDOW < u < 2 - c - CNE0_WINDOW:
            counted += 1
            worst = max(worst, 2 * mm * abs(e.value.imag) / lambda_c(c, u))
    vals = sp.values()
    conj = float(np.max(np.maximum(np.abs(vals - c), np.abs(vals + c)))) - 2
    return CheckResult.compare(
        "thm_cne0_bound",
        worst,
        CNE0_SLACK,
        f"max 2m|Im|/Lambda_c over {counted} eigenvalue(s); "
        f"reported only: max(|lambda-c|,|lambda+c|)-2 = {conj:.6g}",
    )


def check_crude_bound(mm: int, opts: SolverOptions | None = None) -> CheckResult:
    """max |Im lambda| <= 1.5 log(m)/m for m = n, c = 0."""
    sp = _spectrum(PencilSpec(mm, mm, 0.0), opts)
    top = float(np.max(np.abs(sp.values().imag)))
    bound = crude_bound(mm, mm)
    return CheckResult.compare(
        "thm_crude_bound",
        top / bound,
        CRUDE_FACTOR,
        f"max|Im lambda| = {top:.6g}, log(m)/m = {bound:.6g}",
    )


def check_nm1_theorem(mm: int, opts: SolverOptions | None = None) -> CheckResult:
    """n = m + 1, c = 0: real spectrum given by the roots of q_m with known multiplicities."""
    spec = PencilSpec(mm, mm + 1, 0.0)
    sp = _spectrum(spec, opts)
    problems = []
    if not all(e.is_real for e in sp.eigenvalues):
        problems.append("non-real eigenvalue present")

    expected: dict[float, int] = {}
    for r_val in h_eigenvalues(mm):
        key = 0.0 if abs(r_val) < 1e-12 else float(r_val)
        expected[key] = expected.get(key, 0) + 2
    expected[0.0] = expected.get(0.0, 0) + 1

    worst = 0.0
    got = sorted(((e.value.real, e.algebraic_multiplicity) for e in sp.eigenvalues))
    want = sorted(expected.items())
    if [k for _, k in got] != [k for _, k in want]:
        problems.append(f"multiplicities {[k for _, k in got]} != {[k for _, k in want]}")
    else:
        worst = max(abs(a - b) for (a, _), (b, _) in zip(got, want))
        worst = max(worst, float(np.max(np.abs(sp.distinct().imag))))

    # factorisation p = (-1)^m lambda q_m(lambda)^2 at a few off-axis points
    fact = 0.0
    for lam in (0.3 + 0.7j, -1.1 + 0.2j, 1.7 - 0.4j, 2.5j):
        p = charpoly_eval(spec, lam).value
        q = h_charpoly_at(mm, lam)
        rhs = q * q * ScaledValue.from_complex(lam * (-1) ** mm)
        fact = max(fact, abs((p / rhs).to_complex() - 1))
    worst = max(worst, fact)
    zero_mult = next((k for v, k in got if abs(v) < 1e-12), 0)
    detail = f"N={spec.N}, zero multiplicity {zero_mult}, factorisation rel. err {fact:.3g}"
    if problems:
        return CheckResult("thm_nm1_real", False, math.inf, 1e-8, detail + "; " + "; ".join(problems))
    return CheckResult.compare("thm_nm1_real", worst, 1e-8, detail)


def zero_distance_grid(N: int, points: int = 400, hi: float = 2.05) -> np.ndarray:
    """Sorted c-grid on [0, hi]: the vanishing values 2cos(pi j/(N+1)) plus uniform fill.

    The uniform part has ``points - K`` nodes where K is the number of
    vanishing values, so the grid has exactly ``points`` entries unless a
    uniform node coincides with a vanishing value.
    """
    special = h_eigenvalues(N)
    special = special[(special >= 0) & (special <= hi)]
    uniform = np.linspace(0.0, hi, points - len(special))
    return np.unique(np.concatenate([uniform, special]))


def zero_distance_rows(mm: int, nn: int, c_grid, opts: SolverOptions | None = None) -> list[tuple[float, float, float]]:
    """(c, dist(spectrum, 0), delta_{N;c}) for each c."""
    rows = []
    N = mm + nn
    for c in c_grid:
        c = float(c)
        vals = _spectrum(PencilSpec(mm, nn, c), opts).values()
        rows.append((c, float(np.min(np.abs(vals))), delta_Nc(N, abs(c))))
    return rows


def check_zero_distance(mm: int, nn: int, c_grid=None, opts: SolverOptions | None = None) -> list[CheckResult]:
    """d >= delta - 1e-10 at every c, and d = 0 where delta vanishes."""
    N = mm + nn
    if c_grid is None:
        c_grid = zero_distance_grid(N)
    rows = zero_distance_rows(mm, nn, c_grid, opts)
    lower = max(delta - d for _, d, delta in rows)
    special = [(c, d) for c, d, delta in rows if delta <= 1e-12]
    vanish = max((d for _, d in special), default=0.0)
    return [
        CheckResult.compare(
            "thm_zero_lower_bound",
            lower,
            ZERO_LOWER_TOL,
            f"max(delta - d) over {len(rows)} c-value(s) at (m,n)=({mm},{nn})",
        ),
        CheckResult.compare(
            "thm_zero_vanishing",
            vanish,
            ZERO_VANISH_TOL,
            f"max d over {len(special)} c-value(s) with delta = 0",
        ),
    ]


def check_n1_lemma(mm: int, opts: SolverOptions | None = None) -> list[CheckResult]:
    """n = 1, c = 0: the eigenvalue i(y - 1/y) exists and has Im > 9/20."""
    if mm <= 3:
        raise ValueError("mm must be > 3")
    y = n1_root(mm)
    target = 1j * (y - 1 / y)
    vals = _spectrum(PencilSpec(mm, 1, 0.0), opts).values()
    dist = float(np.min(np.abs(vals - target)))
    nearest = complex(vals[np.argmin(np.abs(vals - target))])
    return [
        CheckResult.compare(
            "lem_n1_root_match",
            dist,
            N1_MATCH_TOL,
            f"y={y:.15g}, predicted {_fmt(target)}, nearest {_fmt(nearest)}",
        ),
        CheckResult.compare(
            "lem_n1_lower",
            N1_LOWER / nearest.imag if nearest.imag > 0 else math.inf,
            STRICTLY_BELOW_ONE,
            f"(9/20) / Im lambda with Im lambda = {nearest.imag:.12g}; "
            f"|Im lambda - 1/sqrt(2)| = {abs(nearest.imag - 2 ** -0.5):.3g}",
        ),
    ]


# suites


def _suite_all(m, n, c, opts):
    spec = PencilSpec(m, n, c)
    checks = []
    checks += check_localisation(spec, opts)
    checks += check_symmetries(spec, opts)
    checks += check_root_set(spec, opts)
    checks.append(check_charpoly_oracle())
    checks.append(check_det_identity())
    checks += check_main1(spec, opts)
    if m == n and c == 0 and m >= 2:
        checks += check_c0_theorem(m, opts=opts)
        checks.append(check_crude_bound(m, opts))
    if m == n and 0 < abs(c) < 2:
        checks.append(check_cne0_theorem(m, abs(c), opts))
    if n == m + 1 and c == 0:
        checks.append(check_nm1_theorem(m, opts))
    if n == 1 and c == 0 and m > 3:
        checks += check_n1_lemma(m, opts)
    checks += check_zero_distance(m, n, [c], opts)
    return checks


def _need(value, name):
    if value is None:
        raise ValueError(f"--{name} is required for this suite")
    return value


SUITES = {
    "all": _suite_all,
    "localisation": lambda m, n, c, o: check_localisation(PencilSpec(m, n, c), o)
    + check_symmetries(PencilSpec(m, n, c), o)
    + check_root_set(PencilSpec(m, n, c), o),
    "det_identity": lambda m, n, c, o: [check_charpoly_oracle(), check_det_identity()],
    "main1": lambda m, n, c, o: check_main1(PencilSpec(m, n, c), o),
    "c0": lambda m, n, c, o: check_c0_theorem(m, opts=o) + [check_crude_bound(m, o)],
    "cne0": lambda m, n, c, o: [check_cne0_theorem(m, c, o)],
    "nm1": lambda m, n, c, o: [check_nm1_theorem(m, o)],
    "zero_distance": lambda m, n, c, o: check_zero_distance(m, n, None, o),
    "n1": lambda m, n, c, o: check_n1_lemma(m, o),
}

# suites that only read m; n and c are implied
_M_ONLY = {"c0": lambda m: (m, 0.0), "nm1": lambda m: (m + 1, 0.0), "n1": lambda m: (1, 0.0)}


def run_suite(
    suite: str,
    m: int | None = None,
    n: int | None = None,
    c: float | None = None,
    opts: SolverOptions | None = None,
) -> VerificationReport:
    """Run a named suite and collect its checks into a report."""
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    opts = opts or SolverOptions()
    if suite == "det_identity":
        params = {}
    elif suite in _M_ONLY:
        m = _need(m, "m")
        n, c = _M_ONLY[suite](m)
        params = {"m": m, "n": n, "c": c}
    else:
        m = _need(m, "m")
        n = m if n is None else n
        c = 0.0 if c is None else float(c)
        params = {"m": m, "n": n, "c": c}
    checks = SUITES[suite](m, n, c, opts)
    return VerificationReport({"suite": suite, **params}, tuple(checks))
