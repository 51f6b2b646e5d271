import numpy as np
import pytest

from isingring import (
    IsingParams,
    ThermalParams,
    build_hamiltonian,
    gibbs_state,
    ground_state,
    thermal_pair_concurrence,
    thermal_sweep,
)
from isingring.entanglement import concurrence
from isingring.qcore import partial_trace


class TestThermalParams:
    def test_temperature_positive(self):
        with pytest.raises(ValueError):
            ThermalParams(IsingParams(3, 1.0), 0.0)
        with pytest.raises(ValueError):
            ThermalParams(IsingParams(3, 1.0), -1.0)


class TestGibbsState:
    def test_valid_density_matrix(self):
        rho = gibbs_state(ThermalParams(IsingParams(3, 1.2), 0.7))
        rho.validate()
        assert abs(np.trace(rho.elements).real - 1.0) < 1e-10

    def test_high_temperature_limit(self):
        rho = gibbs_state(ThermalParams(IsingParams(3, 1.0), 1e8))
        assert np.max(np.abs(rho.elements - np.eye(8) / 8)) < 1e-6

    def test_low_temperature_limit(self):
        # at tiny T only the ground level survives
        rho = gibbs_state(ThermalParams(IsingParams(3, 0.5), 1e-3))
        psi = ground_state(IsingParams(3, 0.5))
        proj = np.outer(psi.amplitudes, psi.amplitudes.conj())
        assert np.max(np.abs(rho.elements - proj)) < 1e-8

    def test_energy_monotone_in_temperature(self):
        H = build_hamiltonian(IsingParams(3, 1.3))
        energies = []
        for T in (0.2, 0.5, 1.0, 2.0, 5.0):
            rho = gibbs_state(ThermalParams(IsingParams(3, 1.3), T))
            energies.append(np.trace(rho.elements @ H).real)
        assert np.all(np.diff(energies) > 0)

    def test_commutes_with_hamiltonian(self):
        H = build_hamiltonian(IsingParams(3, 0.8))
        rho = gibbs_state(ThermalParams(IsingParams(3, 0.8), 0.9)).elements
        assert np.max(np.abs(H @ rho - rho @ H)) < 1e-10


class TestThermalConcurrence:
    def test_matches_manual_route(self):
        got = thermal_pair_concurrence(3, 1.0, 0.5, pair=(1, 2))
        rho = gibbs_state(ThermalParams(IsingParams(3, 1.0), 0.5))
        want = concurrence(partial_trace(rho, [1, 2]))
        assert got == pytest.approx(want, abs=1e-12)

    def test_translation_symmetry_of_pairs(self):
        # all nearest-neighbour pairs of the ring are equivalent
        vals = [
            thermal_pair_concurrence(3, 1.0, 0.8, pair=p)
            for p in ((1, 2), (2, 3), (1, 3))
        ]
        assert max(vals) - min(vals) < 1e-9

    def test_decreases_with_temperature(self):
        temps = [0.1, 0.5, 1.0, 2.0, 4.0]
        vals = [thermal_pair_concurrence(3, 1.0, T) for T in temps]
        assert np.all(np.diff(vals) <= 1e-9)

    def test_vanishes_at_high_temperature(self):
        assert thermal_pair_concurrence(3, 1.0, 1e6) < 1e-5


class TestThermalSweep:
    def test_shape_and_order(self):
        rows = thermal_sweep(3, [0.5, 1.0], [0.2, 0.4, 0.8])
        assert rows.shape == (6, 3)
        assert np.allclose(rows[:3, 0], 0.5) and np.allclose(rows[3:, 0], 1.0)
        assert np.allclose(rows[:3, 1], [0.2, 0.4, 0.8])

    def test_matches_pointwise(self):
        rows = thermal_sweep(3, [1.0], [0.3, 0.9])
        for lam, T, c in rows:
            assert c == pytest.approx(
                thermal_pair_concurrence(3, lam, T), abs=1e-10
            )

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            thermal_sweep(3, [], [1.0])
        with pytest.raises(ValueError):
            thermal_sweep(3, [1.0], [])
