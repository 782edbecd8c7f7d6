import pytest

from spheredisp import (ConstantResponse, LorentzPolarisability, MediumSpec,
                        MolecularSpecies, Oscillator, OscillatorResponse,
                        QuadratureSpec, SphereSpec)
from spheredisp.constants import EPS0


def rel_err(found, want):
    return abs(found - want) / abs(want)


@pytest.fixture
def vacuum():
    return ConstantResponse(1.0)


@pytest.fixture
def single_osc():
    # eps(i xi) = 1 + wp^2/(w0^2 + xi^2) with wp = w0 = 1e16 rad/s
    return OscillatorResponse(Oscillator(1e16, 1e16, 0.0))


@pytest.fixture
def quad():
    return QuadratureSpec(scale=1e16, rtol=1e-9, max_doublings=10)


@pytest.fixture
def vacuum_medium(vacuum):
    return MediumSpec(vacuum, vacuum)


@pytest.fixture
def reference_sphere(single_osc, vacuum):
    return SphereSpec(1e-9, single_osc, vacuum)


@pytest.fixture
def reference_species():
    # static polarisability eps0 * 1e-30 m^3, resonance 1e16 rad/s
    return MolecularSpecies(1e27, LorentzPolarisability(EPS0 * 1e-30, 1e16))
