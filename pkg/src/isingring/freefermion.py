"""Analytic spectrum of the Ising ring via its free-fermion representation.

The spin Hamiltonian maps to quadratic fermions whose boundary condition is
tied to fermion-number parity: states with an odd number of fermions live on
the cyclic momentum grid q = 2*pi*l/N, even states on the anticyclic grid
q = pi*(2l+1)/N.  Paired momenta (q, 2pi - q) form 4-level blocks; q = 0 and
q = pi (when present in a grid) form 2-level blocks.  Summing block energies
over parity-consistent selections reproduces the full 2^N spectrum, which
serves as an independent oracle for the dense solver.

Many-body eigenvectors are not assembled back in the spin basis here; the
dense solver owns eigenvectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .exceptions import ConsistencyError

CYCLIC = "cyclic"  # odd fermion parity
ANTICYCLIC = "anticyclic"  # even fermion parity

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class MomentumSector:
    sector: str
    q_values: np.ndarray


@dataclass(frozen=True)
class BlockEigenData:
    """Eigenvalues of one momentum block, with fermion occupations.

    Paired momenta carry four levels: two one-fermion states at -2*lam*cos(q)
    and the two zero/two-fermion mixtures.  The occupations of the mixtures
    are recorded as 0 and 2; only the (even) parity matters downstream.
    """

    q: float
    eigenvalues: np.ndarray
    occupations: np.ndarray


def momentum_values(N: int, sector: str) -> MomentumSector:
    """Allowed momenta in [0, 2*pi) for the given boundary-condition sector."""
    if N < 2:
        raise ValueError("N must be at least 2")
    ls = np.arange(N)
    if sector == CYCLIC:
        q = TWO_PI * ls / N
    elif sector == ANTICYCLIC:
        q = np.pi * (2 * ls + 1) / N
    else:
        raise ValueError(f"unknown sector {sector!r}")
    return MomentumSector(sector, np.mod(q, TWO_PI))


def block_eigenvalues(q: float, lam: float) -> BlockEigenData:
    """Closed-form eigenvalues of the momentum block at q."""
    if not 0.0 <= q < TWO_PI:
        raise ValueError("q must lie in [0, 2*pi)")
    if np.isclose(q, 0.0, atol=1e-12):
        return BlockEigenData(q, np.array([-1.0, -2.0 * lam + 1.0]), np.array([0, 1]))
    if np.isclose(q, np.pi, atol=1e-12):
        return BlockEigenData(q, np.array([-1.0, 2.0 * lam + 1.0]), np.array([0, 1]))
    root = np.sqrt((lam - 1.0) ** 2 + 2.0 * lam * (1.0 - np.cos(q)))
    a12 = -2.0 * lam * np.cos(q)
    a3 = 2.0 * (-lam * np.cos(q) + root)
    a4 = 2.0 * (-lam * np.cos(q) - root)
    return BlockEigenData(q, np.array([a12, a12, a3, a4]), np.array([1, 1, 0, 2]))


def block_amplitudes(q: float, lam: float) -> tuple[complex, complex, complex, complex]:
    """Mixing amplitudes (d3, e3, d4, e4) of the zero/two-fermion eigenvectors."""
    data = block_eigenvalues(q, lam)
    if data.eigenvalues.size != 4:
        raise ValueError("q = 0 and q = pi blocks have no mixing amplitudes")
    out = []
    for a in data.eigenvalues[2:]:
        e = 1.0 / np.sqrt(1.0 + 4.0 * lam**2 * np.sin(q) ** 2 / (a + 2.0) ** 2)
        d = -2.0j * lam * np.sin(q) / (a + 2.0) * e
        out.extend([d, e])
    return tuple(out)


def _sector_blocks(N: int, sector: str, lam: float) -> list[list[tuple[float, int]]]:
    """Per-block lists of (energy, fermion occupation) options."""
    blocks = []
    if sector == CYCLIC:
        # q = 2*pi*l/N; partner of l is (N - l) % N
        self_paired = [0] + ([N // 2] if N % 2 == 0 else [])
        reps = [l for l in range(1, (N + 1) // 2)]
        qs_special = [TWO_PI * l / N for l in self_paired]
        qs_paired = [TWO_PI * l / N for l in reps]
    else:
        # q = pi*(2l+1)/N; partner of l is N - 1 - l
        self_paired = [(N - 1) // 2] if N % 2 == 1 else []
        reps = [l for l in range(N // 2)]
        qs_special = [np.pi * (2 * l + 1) / N for l in self_paired]
        qs_paired = [np.pi * (2 * l + 1) / N for l in reps]
    for q in qs_special + qs_paired:
        data = block_eigenvalues(q, lam)
        blocks.append(list(zip(data.eigenvalues.tolist(), data.occupations.tolist())))
    return blocks


def assemble_spectrum(N: int, lam: float) -> np.ndarray:
    """All 2^N energies, from parity-consistent block selections, sorted."""
    if N < 2:
        raise ValueError("N must be at least 2")
    energies: list[float] = []
    for sector, target in ((CYCLIC, 1), (ANTICYCLIC, 0)):
        for combo in itertools.product(*_sector_blocks(N, sector, lam)):
            if sum(occ for _, occ in combo) % 2 == target:
                energies.append(sum(e for e, _ in combo))
    if len(energies) != 1 << N:
        raise ConsistencyError(
            f"assembled {len(energies)} energies, expected {1 << N}"
        )
    return np.sort(np.asarray(energies))
