"""Qubit-register primitives: basis indexing, states, partial trace, eigensolver.

Convention used everywhere in this package: qubit 1 is the *most significant*
bit of the basis index, so the three-qubit ket |011> sits at index 3 and the
ket reads left to right.  Qubit positions in public APIs are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-10
PSD_TOL = 1e-10


def basis_index(bits: Sequence[int]) -> int:
    """Index of the computational basis ket with the given binary digits.

    ``bits[0]`` is qubit 1 (most significant).  Raises ValueError for digits
    outside {0, 1}.
    """
    idx = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"basis digit must be 0 or 1, got {b!r}")
        idx = (idx << 1) | b
    return idx


def bits_of(index: int, num_qubits: int) -> tuple[int, ...]:
    """Binary digits of a basis index, qubit 1 first."""
    return tuple((index >> (num_qubits - k)) & 1 for k in range(1, num_qubits + 1))


def bit_weights(num_qubits: int) -> np.ndarray:
    """Number of qubits 'up' (bit 1) for every basis index."""
    dim = 1 << num_qubits
    w = np.zeros(dim, dtype=np.int64)
    for k in range(num_qubits):
        w += (np.arange(dim) >> k) & 1
    return w


@dataclass(frozen=True)
class StateVector:
    """Pure state of ``num_qubits`` qubits as a complex amplitude array."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        amps = np.asarray(self.amplitudes, dtype=complex)
        if amps.shape != (1 << self.num_qubits,):
            raise ValueError(
                f"amplitude array has shape {amps.shape}, "
                f"expected ({1 << self.num_qubits},)"
            )
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalize(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.num_qubits, self.amplitudes / n)

    def density(self) -> "DensityMatrix":
        a = self.amplitudes
        return DensityMatrix(self.num_qubits, np.outer(a, a.conj()))

    def marginal(self, keep: Sequence[int]) -> "DensityMatrix":
        """Reduced density matrix of the qubits in ``keep`` (1-based, ordered).

        Computed directly from the amplitudes without forming the full
        projector, so it stays cheap for large registers.
        """
        keep = _check_keep(keep, self.num_qubits)
        n = self.num_qubits
        t = self.amplitudes.reshape((2,) * n)
        keep0 = [p - 1 for p in keep]
        kept = set(keep0)
        # bra axes reuse the ket axis label for traced qubits
        ket_subs = list(range(n))
        bra_subs = [n + q if q in kept else q for q in range(n)]
        out_subs = [q for q in keep0] + [n + q for q in keep0]
        k = len(keep0)
        red = np.einsum(t, ket_subs, t.conj(), bra_subs, out_subs)
        return DensityMatrix(k, red.reshape(1 << k, 1 << k))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive semidefinite matrix on ``num_qubits`` qubits.

    Hermiticity and trace are checked on construction; positivity is checked
    by :meth:`validate` (it costs a full eigendecomposition).
    """

    num_qubits: int
    elements: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        m = np.asarray(self.elements, dtype=complex)
        dim = 1 << self.num_qubits
        if m.shape != (dim, dim):
            raise ValueError(f"matrix has shape {m.shape}, expected ({dim}, {dim})")
        if np.max(np.abs(m - m.conj().T)) > 1e-12:
            raise ValueError("density matrix is not Hermitian within 1e-12")
        if abs(np.trace(m).real - 1.0) > TRACE_TOL or abs(np.trace(m).imag) > TRACE_TOL:
            raise ValueError("density matrix trace differs from 1 beyond 1e-10")
        object.__setattr__(self, "elements", m)

    def validate(self) -> "DensityMatrix":
        """Raise if any eigenvalue lies below -1e-10; return self otherwise."""
        ev = np.linalg.eigvalsh(self.elements)
        if ev[0] < -PSD_TOL:
            raise ValueError(f"density matrix has eigenvalue {ev[0]} < -{PSD_TOL}")
        return self

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.elements)


@dataclass(frozen=True)
class EigenSystem:
    """Ascending eigenvalues and column-aligned orthonormal eigenvectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eig(H: np.ndarray) -> EigenSystem:
    """Dense eigendecomposition of a Hermitian matrix.

    Raises ValueError if the input is not square or deviates from Hermiticity
    by more than 1e-10.
    """
    H = np.asarray(H)
    if H.ndim != 2 or H.shape[0] != H.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    if np.max(np.abs(H - H.conj().T)) > HERMITICITY_TOL:
        raise ValueError("matrix is not Hermitian within 1e-10")
    vals, vecs = np.linalg.eigh(H)
    return EigenSystem(vals, vecs)


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Trace out every qubit not listed in ``keep``.

    ``keep`` is an ordered set of 1-based positions; the result carries those
    qubits in the given order.  Trace and Hermiticity are preserved.
    """
    keep = _check_keep(keep, rho.num_qubits)
    n = rho.num_qubits
    t = rho.elements.reshape((2,) * (2 * n))
    keep0 = [p - 1 for p in keep]
    kept = set(keep0)
    row_subs = list(range(n))
    col_subs = [n + q if q in kept else q for q in range(n)]
    out_subs = [q for q in keep0] + [n + q for q in keep0]
    k = len(keep0)
    red = np.einsum(t, row_subs + col_subs, out_subs)
    return DensityMatrix(k, red.reshape(1 << k, 1 << k))


def _check_keep(keep: Sequence[int], num_qubits: int) -> list[int]:
    keep = list(keep)
    if not keep:
        raise ValueError("keep must name at least one qubit")
    if len(set(keep)) != len(keep):
        raise ValueError("keep positions must be distinct")
    for p in keep:
        if not 1 <= p <= num_qubits:
            raise ValueError(f"qubit position {p} outside 1..{num_qubits}")
    return keep
