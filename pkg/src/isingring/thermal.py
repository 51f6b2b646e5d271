"""Gibbs states of the Ising ring and entanglement-vs-temperature sweeps."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import concurrence
from .hamiltonian import IsingParams, build_hamiltonian
from .qcore import DensityMatrix, hermitian_eig, partial_trace


@dataclass(frozen=True)
class ThermalParams:
    """Ising parameters plus temperature T > 0 (Boltzmann constant 1).

    T = 0 is excluded; callers map it to the ground state explicitly.
    """

    ising: IsingParams
    temperature: float

    def __post_init__(self):
        if not self.temperature > 0:
            raise ValueError("temperature must be strictly positive")


def gibbs_state(p: ThermalParams) -> DensityMatrix:
    """rho(T) = sum_i w_i |e_i><e_i| with w_i proportional to exp(-E_i / T).

    Energies are shifted by the minimum before exponentiation to avoid
    overflow at small T.
    """
    es = hermitian_eig(build_hamiltonian(p.ising))
    w = np.exp(-(es.eigenvalues - es.eigenvalues[0]) / p.temperature)
    w /= w.sum()
    rho = (es.eigenvectors * w) @ es.eigenvectors.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return DensityMatrix(p.ising.num_qubits, rho)


def thermal_pair_concurrence(N: int, lam: float, T: float, pair=(1, 2)) -> float:
    rho = gibbs_state(ThermalParams(IsingParams(N, lam), T))
    return concurrence(partial_trace(rho, list(pair)))


def thermal_sweep(N: int, lambda_grid, T_grid, pair=(1, 2)) -> np.ndarray:
    """Rows (lambda, T, pair concurrence) in row-major grid order."""
    lambda_grid = np.asarray(lambda_grid, dtype=float)
    T_grid = np.asarray(T_grid, dtype=float)
    if lambda_grid.size == 0 or T_grid.size == 0:
        raise ValueError("grids must be non-empty")
    rows = np.empty((lambda_grid.size * T_grid.size, 3))
    k = 0
    for lam in lambda_grid:
        # one diagonalisation per lambda, reused across temperatures
        es = hermitian_eig(build_hamiltonian(IsingParams(N, lam)))
        for T in T_grid:
            w = np.exp(-(es.eigenvalues - es.eigenvalues[0]) / T)
            w /= w.sum()
            rho = (es.eigenvectors * w) @ es.eigenvectors.conj().T
            rho = 0.5 * (rho + rho.conj().T)
            c = concurrence(partial_trace(DensityMatrix(N, rho), list(pair)))
            rows[k] = (lam, T, c)
            k += 1
    return rows
