import pytest

from pencil_spectra.rootfinder import SolverOptions, cached_spectrum
from pencil_spectra.pencil import PencilSpec


@pytest.fixture(scope="session")
def spectrum_of():
    """Memoised solver shared by every test module."""

    def get(m, n, c=0.0, **opts):
        return cached_spectrum(PencilSpec(m, n, c), SolverOptions(**opts))

    return get
