"""Spectra of the indefinite tridiagonal pencil H_{N;c} - lambda D_{m,n}."""

from .pencil import PencilSpec, ScaledValue, CharPolyEval, charpoly_eval, delta_Nc, h_eigenvalues
from .rootfinder import Eigenvalue, SolverOptions, Spectrum, compute_spectrum
from .verify import CheckResult, VerificationReport, run_suite

__all__ = [
    "PencilSpec",
    "ScaledValue",
    "CharPolyEval",
    "charpoly_eval",
    "delta_Nc",
    "h_eigenvalues",
    "Eigenvalue",
    "SolverOptions",
    "Spectrum",
    "compute_spectrum",
    "CheckResult",
    "VerificationReport",
    "run_suite",
]

__version__ = "0.1.0"
