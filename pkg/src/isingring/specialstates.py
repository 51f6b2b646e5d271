"""Closed-form special states of the Ising ring and the Bell-extraction protocol.

Two states are constructed analytically:

* the strong-coupling ground-state limit: equal amplitudes on every basis
  state with an even number of qubits up (locally unitary equivalent to a
  GHZ state in the x basis);
* the zero-energy "X" state at lam = 1 for odd N = 2n + 1, whose amplitudes
  on even-weight basis states carry the sign (-1)^(sum of pairwise ring
  distances of the up positions).

The alpha-vector machinery splits the X state over the configurations of a
contiguous block of n qubits; the mutual orthogonality of the alpha vectors
is what makes every such block maximally mixed and enables the extraction of
n Bell pairs by a unitary acting on the complementary n + 1 qubits alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .exceptions import ConsistencyError, TrackingError
from .hamiltonian import DEGENERACY_TOL, IsingParams, build_hamiltonian
from .qcore import StateVector, bit_weights, hermitian_eig

_H1 = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)


def ring_distance(i: int, j: int, N: int) -> int:
    """Shortest arc length between positions i and j on the N-cycle."""
    if not (1 <= i <= N and 1 <= j <= N):
        raise ValueError(f"positions must lie in 1..{N}")
    d = abs(i - j)
    return min(d, N - d)


def ghz_limit_state(N: int) -> StateVector:
    """Equal superposition of all even-weight basis states."""
    if N < 2:
        raise ValueError("N must be at least 2")
    amps = np.where(bit_weights(N) % 2 == 0, 1.0, 0.0) / np.sqrt(2.0 ** (N - 1))
    return StateVector(N, amps)


def ghz_equivalence_check(psi: StateVector) -> float:
    """Fidelity with the standard GHZ state after an x-basis rotation.

    Applies the Hadamard rotation on every qubit and returns
    |<GHZ_standard | result>|^2.
    """
    N = psi.num_qubits
    a = psi.amplitudes.reshape((2,) * N)
    for k in range(N):
        a = np.moveaxis(np.tensordot(_H1, a, axes=(1, k)), 0, k)
    flat = a.reshape(-1)
    amp = (flat[0] + flat[-1]) / np.sqrt(2.0)
    return float(abs(amp) ** 2)


def _up_positions(index: int, N: int) -> list[int]:
    return [k for k in range(1, N + 1) if (index >> (N - k)) & 1]


def _pair_distance_sum(positions, N: int) -> int:
    return sum(
        ring_distance(a, b, N) for a, b in itertools.combinations(positions, 2)
    )


def xstate(N: int) -> StateVector:
    """Zero-energy eigenstate of the ring at lam = 1, odd N = 2n + 1.

    Amplitude on an even-weight basis state is (-1)^(sum of pairwise ring
    distances of its up positions) / 2^n; odd-weight amplitudes vanish.
    """
    if N % 2 == 0:
        raise ValueError("the X state exists for odd N only")
    if N < 3:
        raise ValueError("N must be at least 3")
    n = (N - 1) // 2
    amps = np.zeros(1 << N)
    for idx in np.flatnonzero(bit_weights(N) % 2 == 0):
        ups = _up_positions(int(idx), N)
        amps[idx] = (-1.0) ** _pair_distance_sum(ups, N)
    return StateVector(N, amps / 2.0**n)


def _is_ring_contiguous(block, N: int) -> bool:
    s = set(block)
    if len(s) != len(block) or not all(1 <= p <= N for p in block):
        return False
    if len(s) == N:
        return True
    links = sum(1 for p in s if (p % N) + 1 in s)
    return links == len(s) - 1


def verify_block_mixedness(psi: StateVector, block) -> float:
    """Max entrywise deviation of a contiguous block's marginal from 1/2^k.

    ``block`` must be contiguous on the ring (wrap-around allowed).
    """
    block = list(block)
    if not _is_ring_contiguous(block, psi.num_qubits):
        raise ValueError(f"block {block} is not contiguous on the ring")
    k = len(block)
    rho = psi.marginal(block).elements
    return float(np.max(np.abs(rho - np.eye(1 << k) / 2.0**k)))


@dataclass(frozen=True)
class AlphaFamily:
    """X-state components over the configurations of a contiguous block.

    ``vectors[c]`` is the un-normalised state of the complementary n + 1
    qubits paired with configuration ``c`` of the block (c's most significant
    bit belongs to the first position in ``region``).  Each vector has squared
    norm 2^n and distinct configurations are orthogonal.
    """

    num_qubits: int
    region: tuple[int, ...]
    complement: tuple[int, ...]
    vectors: np.ndarray  # shape (2^n, 2^(n+1))

    def gram(self) -> np.ndarray:
        return self.vectors.conj() @ self.vectors.T


def alpha_family(N: int, region) -> AlphaFamily:
    """Decompose the X state over the configurations of ``region``.

    ``region`` must be an ordered contiguous run of n = (N - 1) / 2 positions.
    """
    if N % 2 == 0 or N < 3:
        raise ValueError("the X state exists for odd N >= 3 only")
    n = (N - 1) // 2
    region = tuple(region)
    if len(region) != n:
        raise ValueError(f"region must contain exactly n = {n} positions")
    if not _is_ring_contiguous(region, N):
        raise ValueError(f"region {list(region)} is not contiguous on the ring")
    complement = tuple(p for p in range(1, N + 1) if p not in region)

    vectors = np.zeros((1 << n, 1 << (n + 1)))
    for c in range(1 << n):
        ups_o = [region[t] for t in range(n) if (c >> (n - 1 - t)) & 1]
        base = _pair_distance_sum(ups_o, N)
        for m in range(1 << (n + 1)):
            ups_c = [complement[t] for t in range(n + 1) if (m >> (n - t)) & 1]
            if (len(ups_c) - len(ups_o)) % 2 != 0:
                continue
            cross = sum(
                ring_distance(a, b, N) for a in ups_o for b in ups_c
            )
            expo = base + _pair_distance_sum(ups_c, N) + cross
            vectors[c, m] = (-1.0) ** expo
    return AlphaFamily(N, region, complement, vectors)


def assemble_from_alpha(family: AlphaFamily) -> StateVector:
    """Rebuild the normalised X state from an alpha family."""
    N = family.num_qubits
    n = len(family.region)
    amps = np.zeros(1 << N)
    for c in range(1 << n):
        for m in range(1 << (n + 1)):
            v = family.vectors[c, m]
            if v == 0.0:
                continue
            idx = 0
            for t, p in enumerate(family.region):
                if (c >> (n - 1 - t)) & 1:
                    idx |= 1 << (N - p)
            for t, p in enumerate(family.complement):
                if (m >> (n - t)) & 1:
                    idx |= 1 << (N - p)
            amps[idx] = v
    return StateVector(N, amps / 2.0**n)


def bob_extraction_unitary(N: int, region) -> np.ndarray:
    """Unitary on the complementary n + 1 qubits extracting n Bell pairs.

    Maps each normalised alpha vector to |config> (x) |0> on the complement
    register; the orthogonal remainder is completed deterministically by
    Gram-Schmidt over the computational basis in index order.
    """
    family = alpha_family(N, region)
    n = len(family.region)
    dim = 1 << (n + 1)
    gram = family.gram()
    if np.max(np.abs(gram - 2.0**n * np.eye(1 << n))) > 1e-9:
        raise ConsistencyError("alpha family failed its orthogonality check")

    sources = [family.vectors[c].astype(complex) / 2.0 ** (n / 2.0) for c in range(1 << n)]
    targets = [c << 1 for c in range(1 << n)]  # |config> (x) |0>
    spare_targets = [m for m in range(dim) if m not in set(targets)]
    for m in range(dim):
        v = np.zeros(dim, dtype=complex)
        v[m] = 1.0
        for b in sources:
            v -= b * np.vdot(b, v)
        norm = np.linalg.norm(v)
        if norm > 1e-8:
            sources.append(v / norm)
            targets.append(spare_targets[len(sources) - (1 << n) - 1])
        if len(sources) == dim:
            break
    U = np.zeros((dim, dim), dtype=complex)
    for t, b in zip(targets, sources):
        U[t, :] += b.conj()
    return U


def bell_extraction_fidelity(N: int, region=None) -> float:
    """Fidelity of (1 (x) U_B) |X> with n Bell pairs (x) |0>.

    The comparison state pairs block qubit t with the t-th complement qubit
    and leaves the last complement qubit in |0>, matching the protocol's
    qubit reordering.
    """
    if region is None:
        region = tuple(range(1, (N - 1) // 2 + 1))
    family = alpha_family(N, region)
    n = len(family.region)
    U = bob_extraction_unitary(N, region)

    psi = xstate(N)
    perm = [p - 1 for p in family.region] + [p - 1 for p in family.complement]
    t = psi.amplitudes.reshape((2,) * N).transpose(perm).reshape(1 << n, 1 << (n + 1))
    result = t @ U.T  # U applied to the complement factor

    expected = np.zeros((1 << n, 1 << (n + 1)))
    for c in range(1 << n):
        expected[c, c << 1] = 1.0 / 2.0 ** (n / 2.0)
    return float(abs(np.vdot(expected.reshape(-1), result.reshape(-1))) ** 2)


@dataclass(frozen=True)
class XStateTrack:
    """X level continued along a lambda grid by eigenvector overlap."""

    lambdas: np.ndarray
    energies: np.ndarray
    states: list[StateVector]


def _continue_level(prev: np.ndarray, evals: np.ndarray, evecs: np.ndarray):
    """Project ``prev`` onto the best-matching (possibly degenerate) level."""
    edges = [0]
    for i in range(1, evals.size):
        if evals[i] - evals[i - 1] > DEGENERACY_TOL:
            edges.append(i)
    edges.append(evals.size)
    weights = []
    for s, e in zip(edges[:-1], edges[1:]):
        coeff = evecs[:, s:e].conj().T @ prev
        weights.append(float(np.linalg.norm(coeff) ** 2))
    order = np.argsort(weights)[::-1]
    if len(weights) > 1 and weights[order[0]] - weights[order[1]] < 1e-6:
        raise TrackingError(
            f"ambiguous continuation: overlaps {weights[order[0]]:.6g} "
            f"and {weights[order[1]]:.6g}"
        )
    s, e = list(zip(edges[:-1], edges[1:]))[order[0]]
    block = evecs[:, s:e]
    vec = block @ (block.conj().T @ prev)
    vec = vec / np.linalg.norm(vec)
    ph = np.vdot(prev, vec)
    vec = vec * (np.conj(ph) / abs(ph))
    return float(np.mean(evals[s:e])), vec


def xstate_track(N: int, lambda_grid) -> XStateTrack:
    """Follow the X level away from lam = 1 by maximal-overlap continuation.

    The grid must contain lam = 1; tracking starts there from the analytic
    X state and walks outward in both directions.  Raises TrackingError when
    two candidate levels overlap the previous vector almost equally.
    """
    grid = np.asarray(lambda_grid, dtype=float)
    anchor = np.flatnonzero(np.abs(grid - 1.0) < 1e-12)
    if anchor.size == 0:
        raise ValueError("lambda grid must contain lambda = 1")
    i0 = int(anchor[0])

    energies = np.empty(grid.size)
    states: list = [None] * grid.size

    def eig_at(lam):
        es = hermitian_eig(build_hamiltonian(IsingParams(N, lam)))
        return es.eigenvalues, es.eigenvectors

    cur = xstate(N).amplitudes
    for t in range(i0, grid.size):
        evals, evecs = eig_at(grid[t])
        energies[t], cur = _continue_level(cur, evals, evecs)
        states[t] = StateVector(N, cur)
    cur = states[i0].amplitudes
    for t in range(i0 - 1, -1, -1):
        evals, evecs = eig_at(grid[t])
        energies[t], cur = _continue_level(cur, evals, evecs)
        states[t] = StateVector(N, cur)
    return XStateTrack(grid, energies, states)
