"""Entanglement measures: concurrence, tangle, three-tangle, entropy."""

from __future__ import annotations

import numpy as np

from .exceptions import NumericalError
from .qcore import DensityMatrix, StateVector

CLIP_TOL = 1e-10

_SY = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SYSY = np.kron(_SY, _SY).real  # real matrix, diag(-1,1,1,-1) on the anti-diagonal


def spin_flip(rho: DensityMatrix) -> DensityMatrix:
    """Spin-flipped two-qubit state (sy x sy) rho* (sy x sy)."""
    if rho.num_qubits != 2:
        raise ValueError("spin_flip is defined for two-qubit states only")
    return DensityMatrix(2, _SYSY @ rho.elements.conj() @ _SYSY)


def concurrence(rho: DensityMatrix) -> float:
    """Two-qubit concurrence from the spectrum of rho * rho_tilde.

    The eigenvalues are taken from the Hermitian form sqrt(rho) * rho_tilde *
    sqrt(rho), which shares the spectrum of the plain product but is stable.
    Negative eigenvalues in [-1e-10, 0) are clipped; anything lower raises
    NumericalError.
    """
    if rho.num_qubits != 2:
        raise ValueError("concurrence is defined for two-qubit states only")
    flipped = spin_flip(rho)
    w, v = np.linalg.eigh(rho.elements)
    w = np.clip(w, 0.0, None)
    sqrt_rho = (v * np.sqrt(w)) @ v.conj().T
    ev = np.linalg.eigvalsh(sqrt_rho @ flipped.elements @ sqrt_rho)
    if ev[0] < -CLIP_TOL:
        raise NumericalError(f"rho*rho_tilde eigenvalue {ev[0]} below -{CLIP_TOL}")
    ev = np.sqrt(np.clip(ev, 0.0, None))[::-1]
    return float(max(ev[0] - ev[1] - ev[2] - ev[3], 0.0))


def tangle(psi: StateVector, qubit: int) -> float:
    """Tangle between one qubit and the rest of a pure state: 4 det(rho_A)."""
    if not 1 <= qubit <= psi.num_qubits:
        raise ValueError(f"qubit position {qubit} outside 1..{psi.num_qubits}")
    rho_a = psi.marginal([qubit]).elements
    return float(np.real(4.0 * np.linalg.det(rho_a)))


def three_tangle(psi: StateVector) -> float:
    """Intrinsic three-partite entanglement of a 3-qubit pure state.

    Computed with qubit 1 as the anchor; the value is invariant under qubit
    permutations (asserted in the test suite, not assumed here).
    """
    if psi.num_qubits != 3:
        raise ValueError("three_tangle is defined for exactly 3 qubits")
    c_rest = tangle(psi, 1)
    c12 = concurrence(psi.marginal([1, 2]))
    c13 = concurrence(psi.marginal([1, 3]))
    return float(c_rest - c12**2 - c13**2)


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """-sum p ln p over the eigenvalues, natural logarithm, 0 ln 0 := 0."""
    p = np.clip(np.linalg.eigvalsh(rho.elements), 0.0, None)
    p = p[p > 0.0]
    return float(-np.sum(p * np.log(p)))
