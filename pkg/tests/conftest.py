import numpy as np
import pytest

from isingring import DensityMatrix, StateVector


def random_state(num_qubits: int, rng: np.random.Generator) -> StateVector:
    dim = 1 << num_qubits
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return StateVector(num_qubits, amps).normalize()


def random_density_matrix(num_qubits: int, rng: np.random.Generator) -> DensityMatrix:
    dim = 1 << num_qubits
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    M = A @ A.conj().T
    return DensityMatrix(num_qubits, M / np.trace(M).real)


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    A = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    Q, R = np.linalg.qr(A)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def brute_force_partial_trace(rho: np.ndarray, num_qubits: int, keep) -> np.ndarray:
    """Loop-based reference for partial_trace; independent of the einsum path."""
    keep0 = [p - 1 for p in keep]
    traced = [q for q in range(num_qubits) if q not in keep0]
    k = len(keep0)
    out = np.zeros((1 << k, 1 << k), dtype=complex)

    def full_index(kept_bits, traced_bits):
        bits = [0] * num_qubits
        for q, b in zip(keep0, kept_bits):
            bits[q] = b
        for q, b in zip(traced, traced_bits):
            bits[q] = b
        idx = 0
        for b in bits:
            idx = (idx << 1) | b
        return idx

    for r in range(1 << k):
        rb = [(r >> (k - 1 - t)) & 1 for t in range(k)]
        for c in range(1 << k):
            cb = [(c >> (k - 1 - t)) & 1 for t in range(k)]
            for t in range(1 << len(traced)):
                tb = [(t >> (len(traced) - 1 - s)) & 1 for s in range(len(traced))]
                out[r, c] += rho[full_index(rb, tb), full_index(cb, tb)]
    return out


def closed_form_levels_n3(lam: float) -> np.ndarray:
    """The eight analytic eigenvalues of the three-qubit ring, sorted."""
    r_plus = np.sqrt(1 + lam + lam**2)
    r_minus = np.sqrt(1 - lam + lam**2)
    return np.sort(
        [
            lam + 1,
            lam + 1,
            lam - 1,
            lam - 1,
            1 - lam - 2 * r_plus,
            1 - lam + 2 * r_plus,
            -1 - lam - 2 * r_minus,
            -1 - lam + 2 * r_minus,
        ]
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
