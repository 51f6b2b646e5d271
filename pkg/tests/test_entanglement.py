import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from isingring import (
    DensityMatrix,
    IsingParams,
    StateVector,
    concurrence,
    ground_state,
    spin_flip,
    tangle,
    three_tangle,
    von_neumann_entropy,
)
from isingring.specialstates import ghz_limit_state

from conftest import random_density_matrix, random_state


def bell_density():
    amps = np.zeros(4)
    amps[[0, 3]] = 1 / np.sqrt(2)
    return StateVector(2, amps).density()


def werner(p):
    amps = np.zeros(4)
    amps[[1, 2]] = np.array([1.0, -1.0]) / np.sqrt(2)
    singlet = np.outer(amps, amps)
    return DensityMatrix(2, p * singlet + (1 - p) * np.eye(4) / 4)


class TestSpinFlip:
    def test_bell_is_invariant(self):
        rho = bell_density()
        assert np.max(np.abs(spin_flip(rho).elements - rho.elements)) < 1e-12

    def test_involution(self, rng):
        rho = random_density_matrix(2, rng)
        twice = spin_flip(spin_flip(rho))
        assert np.max(np.abs(twice.elements - rho.elements)) < 1e-12

    def test_two_qubit_only(self, rng):
        with pytest.raises(ValueError):
            spin_flip(random_density_matrix(3, rng))


class TestConcurrence:
    def test_bell_state(self):
        assert concurrence(bell_density()) == pytest.approx(1.0, abs=1e-12)

    def test_product_state(self):
        amps = np.zeros(4)
        amps[0] = 1.0
        assert concurrence(StateVector(2, amps).density()) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_maximally_mixed(self):
        rho = DensityMatrix(2, np.eye(4) / 4)
        assert concurrence(rho) == pytest.approx(0.0, abs=1e-12)

    def test_werner_closed_form(self):
        # C = max(0, (3p - 1) / 2) for the singlet Werner family
        for p in (0.0, 0.2, 1 / 3, 0.5, 0.8, 1.0):
            expected = max(0.0, (3 * p - 1) / 2)
            assert concurrence(werner(p)) == pytest.approx(expected, abs=1e-10)

    def test_partially_entangled_pure(self):
        # C = 2|ab| for a|00> + b|11>
        a, b = np.cos(0.3), np.sin(0.3)
        amps = np.zeros(4)
        amps[0], amps[3] = a, b
        got = concurrence(StateVector(2, amps).density())
        # near-zero eigenvalues of rho*rho_tilde contribute sqrt(eps) noise
        assert got == pytest.approx(2 * a * b, abs=1e-7)

    def test_range(self, rng):
        for _ in range(25):
            c = concurrence(random_density_matrix(2, rng))
            assert -1e-12 <= c <= 1.0 + 1e-12

    def test_local_unitary_invariance(self, rng):
        from conftest import random_unitary

        rho = random_density_matrix(2, rng)
        U = np.kron(random_unitary(2, rng), random_unitary(2, rng))
        rotated = DensityMatrix(2, U @ rho.elements @ U.conj().T)
        assert concurrence(rotated) == pytest.approx(concurrence(rho), abs=1e-9)


class TestTangle:
    def test_bell_state(self):
        amps = np.zeros(4)
        amps[[0, 3]] = 1 / np.sqrt(2)
        assert tangle(StateVector(2, amps), 1) == pytest.approx(1.0, abs=1e-12)

    def test_product_state(self):
        amps = np.zeros(8)
        amps[0] = 1.0
        assert tangle(StateVector(3, amps), 2) == pytest.approx(0.0, abs=1e-12)

    def test_position_checked(self):
        amps = np.zeros(4)
        amps[0] = 1.0
        with pytest.raises(ValueError):
            tangle(StateVector(2, amps), 3)

    def test_pure_state_tangle_equals_squared_concurrence(self, rng):
        # for 2-qubit pure states the tangle is the concurrence squared
        psi = random_state(2, rng)
        assert tangle(psi, 1) == pytest.approx(
            concurrence(psi.density()) ** 2, abs=1e-7
        )


class TestThreeTangle:
    def test_ghz(self):
        assert three_tangle(ghz_limit_state(3).normalize()) >= 0.0
        amps = np.zeros(8)
        amps[[0, 7]] = 1 / np.sqrt(2)
        assert three_tangle(StateVector(3, amps)) == pytest.approx(1.0, abs=1e-10)

    def test_w_state(self):
        # the W state carries no three-partite tangle
        amps = np.zeros(8)
        amps[[1, 2, 4]] = 1 / np.sqrt(3)
        assert three_tangle(StateVector(3, amps)) == pytest.approx(0.0, abs=1e-10)

    def test_three_qubits_only(self, rng):
        with pytest.raises(ValueError):
            three_tangle(random_state(2, rng))

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 2**31 - 1))
    def test_monogamy_and_permutation_invariance(self, seed):
        rng = np.random.default_rng(seed)
        psi = random_state(3, rng)
        tau = three_tangle(psi)
        assert tau >= -1e-9
        # anchor at qubit 2 instead of qubit 1
        alt = (
            tangle(psi, 2)
            - concurrence(psi.marginal([2, 1])) ** 2
            - concurrence(psi.marginal([2, 3])) ** 2
        )
        assert tau == pytest.approx(alt, abs=1e-6)

    def test_ground_state_three_tangle_grows(self):
        weak = three_tangle(ground_state(IsingParams(3, 0.2)))
        strong = three_tangle(ground_state(IsingParams(3, 50.0)))
        assert strong > weak
        assert strong > 0.95


class TestEntropy:
    def test_pure_state_zero(self):
        amps = np.zeros(4)
        amps[0] = 1.0
        assert von_neumann_entropy(StateVector(2, amps).density()) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_maximally_mixed(self):
        rho = DensityMatrix(2, np.eye(4) / 4)
        assert von_neumann_entropy(rho) == pytest.approx(2 * np.log(2), abs=1e-12)

    def test_bell_marginal(self):
        from isingring import partial_trace

        rho = partial_trace(bell_density(), [1])
        assert von_neumann_entropy(rho) == pytest.approx(np.log(2), abs=1e-12)

    def test_unitary_invariance(self, rng):
        from conftest import random_unitary

        rho = random_density_matrix(2, rng)
        U = random_unitary(4, rng)
        rotated = DensityMatrix(2, U @ rho.elements @ U.conj().T)
        assert von_neumann_entropy(rotated) == pytest.approx(
            von_neumann_entropy(rho), abs=1e-9
        )
