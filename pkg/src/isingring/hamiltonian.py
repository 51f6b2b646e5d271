"""Transverse-field Ising ring: Hamiltonian construction, symmetries, spectra.

The Hamiltonian acts on N qubits arranged on a circle:

    H = E * ( -lam * sum_n sx_n sx_{n+1}  +  sum_n sz_n ),   sx_{N+1} = sx_1

with the sign convention sz|1> = +|1>, sz|0> = -|0>, so the field part is
diagonal with entry 2K - N on a basis state with K qubits up.  Note that for
N = 2 the single bond is counted twice by the cyclic sum; this is deliberate
and matched by the free-fermion solution.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .exceptions import ConventionError
from .qcore import StateVector, bit_weights, hermitian_eig

DEGENERACY_TOL = 1e-9


@dataclass(frozen=True)
class IsingParams:
    """Ring size N, dimensionless coupling lam = C_I / B, energy scale E = B."""

    num_qubits: int
    lam: float
    energy_scale: float = 1.0

    def __post_init__(self):
        if self.num_qubits < 2:
            raise ValueError("num_qubits must be at least 2")
        if not np.isfinite(self.lam):
            raise ValueError("lam must be finite")
        if not self.energy_scale > 0:
            raise ValueError("energy_scale must be positive")


def _pair_masks(N: int) -> list[int]:
    """Bit masks flipping the two qubits of each ring bond (n, n+1)."""
    masks = []
    for n in range(N):
        m = (1 << (N - 1 - n)) | (1 << (N - 1 - (n + 1) % N))
        masks.append(m)
    return masks


def build_hamiltonian(p: IsingParams) -> np.ndarray:
    """Dense 2^N x 2^N matrix of the ring Hamiltonian."""
    N = p.num_qubits
    dim = 1 << N
    H = np.zeros((dim, dim), dtype=complex)
    idx = np.arange(dim)
    H[idx, idx] = 2 * bit_weights(N) - N
    for mask in _pair_masks(N):
        H[idx ^ mask, idx] += -p.lam
    return p.energy_scale * H


def apply_hamiltonian(p: IsingParams, vec: np.ndarray) -> np.ndarray:
    """H @ vec without materialising the dense matrix."""
    N = p.num_qubits
    dim = 1 << N
    vec = np.asarray(vec)
    if vec.shape != (dim,):
        raise ValueError(f"vector has shape {vec.shape}, expected ({dim},)")
    idx = np.arange(dim)
    out = (2 * bit_weights(N) - N) * vec.astype(complex)
    for mask in _pair_masks(N):
        out[idx ^ mask] += -p.lam * vec
    return p.energy_scale * out


def parity_operator(N: int) -> np.ndarray:
    """Diagonal of (-1)^K where K counts qubits up; commutes with H."""
    if N < 2:
        raise ValueError("N must be at least 2")
    return np.where(bit_weights(N) % 2 == 0, 1, -1).astype(float)


def translation_operator(N: int) -> np.ndarray:
    """Permutation matrix moving qubit n to position n+1 (mod N)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    dim = 1 << N
    T = np.zeros((dim, dim))
    src = np.arange(dim)
    dst = (src >> 1) | ((src & 1) << (N - 1))
    T[dst, src] = 1.0
    return T


def inversion_operator(N: int) -> np.ndarray:
    """Permutation matrix reversing the qubit order, n -> N - n + 1."""
    if N < 2:
        raise ValueError("N must be at least 2")
    dim = 1 << N
    P = np.zeros((dim, dim))
    for i in range(dim):
        j = int(f"{i:0{N}b}"[::-1], 2)
        P[j, i] = 1.0
    return P


@dataclass(frozen=True)
class SpectrumTable:
    """Per-lambda sorted eigenvalues plus detected level crossings."""

    lambda_grid: np.ndarray
    levels: np.ndarray  # shape (len(grid), 2^N), each row ascending
    crossings: list = field(default_factory=list)  # (lambda_star, (branch_a, branch_b))


def spectrum_sweep(N: int, lambda_grid) -> SpectrumTable:
    """Sorted spectrum over a lambda grid with crossing detection.

    Branches are continued from one grid point to the next by maximal
    eigenvector overlap (optimal assignment); a crossing is recorded when two
    continued branches swap energy order between adjacent grid points.
    """
    grid = np.asarray(lambda_grid, dtype=float)
    if grid.size == 0:
        raise ValueError("lambda grid must be non-empty")
    if grid.size > 1 and np.any(np.diff(grid) <= 0):
        raise ValueError("lambda grid must be strictly ascending")

    levels = np.empty((grid.size, 1 << N))
    crossings: list[tuple[float, tuple[int, int]]] = []
    prev_vecs = None
    branch_energy = None  # energy per branch label, previous grid point
    for t, lam in enumerate(grid):
        es = hermitian_eig(build_hamiltonian(IsingParams(N, lam)))
        levels[t] = es.eigenvalues
        if prev_vecs is None:
            branch_energy = es.eigenvalues.copy()
        else:
            overlap = np.abs(prev_vecs.conj().T @ es.eigenvectors) ** 2
            rows, cols = linear_sum_assignment(-overlap)
            new_energy = branch_energy.copy()
            new_energy[rows] = es.eigenvalues[cols]
            d0 = branch_energy[:, None] - branch_energy[None, :]
            d1 = new_energy[:, None] - new_energy[None, :]
            swap = (
                (np.abs(d0) > DEGENERACY_TOL)
                & (np.abs(d1) > DEGENERACY_TOL)
                & (d0 * d1 < 0)
            )
            swap &= np.triu(np.ones_like(swap, dtype=bool), k=1)
            for a, b in np.argwhere(swap):
                frac = d0[a, b] / (d0[a, b] - d1[a, b])
                lam_star = grid[t - 1] + frac * (lam - grid[t - 1])
                crossings.append((float(lam_star), (int(a), int(b))))
            branch_energy = new_energy
        prev_vecs = es.eigenvectors
    return SpectrumTable(grid, levels, crossings)


def ground_state(p: IsingParams) -> StateVector:
    """Lowest eigenvector of H.

    When the lowest level is degenerate within 1e-9 the returned state is the
    unique even-parity unit vector in that eigenspace (the lambda -> infinity
    convention).  Raises ConventionError if no such vector exists or if the
    even subspace is more than one-dimensional.
    """
    es = hermitian_eig(build_hamiltonian(p))
    sel = es.eigenvalues - es.eigenvalues[0] <= DEGENERACY_TOL
    block = es.eigenvectors[:, sel]
    if block.shape[1] == 1:
        vec = block[:, 0]
    else:
        par = parity_operator(p.num_qubits)
        even = 0.5 * (block + par[:, None] * block)
        u, s, _ = np.linalg.svd(even, full_matrices=False)
        rank = int(np.sum(s > 1e-6))
        if rank != 1:
            raise ConventionError(
                f"degenerate ground level has even-parity dimension {rank}, "
                "cannot apply the even-parity convention"
            )
        vec = u[:, 0]
    # deterministic global phase: largest amplitude real positive
    k = int(np.argmax(np.abs(vec)))
    vec = vec * (np.conj(vec[k]) / abs(vec[k]))
    return StateVector(p.num_qubits, vec).normalize()


def ground_energy(p: IsingParams) -> float:
    return float(np.linalg.eigvalsh(build_hamiltonian(p))[0])
