"""Spectral and entanglement structure of the finite transverse-field Ising ring."""

__version__ = "0.1.0"

from .entanglement import (
    concurrence,
    spin_flip,
    tangle,
    three_tangle,
    von_neumann_entropy,
)
from .exceptions import (
    ConsistencyError,
    ConventionError,
    NumericalError,
    ResourceLimitError,
    TrackingError,
)
from .freefermion import (
    ANTICYCLIC,
    CYCLIC,
    BlockEigenData,
    MomentumSector,
    assemble_spectrum,
    block_eigenvalues,
    momentum_values,
)
from .hamiltonian import (
    IsingParams,
    SpectrumTable,
    apply_hamiltonian,
    build_hamiltonian,
    ground_energy,
    ground_state,
    inversion_operator,
    parity_operator,
    spectrum_sweep,
    translation_operator,
)
from .qcore import (
    DensityMatrix,
    EigenSystem,
    StateVector,
    basis_index,
    bits_of,
    hermitian_eig,
    partial_trace,
)
from .specialstates import (
    AlphaFamily,
    XStateTrack,
    alpha_family,
    assemble_from_alpha,
    bell_extraction_fidelity,
    bob_extraction_unitary,
    ghz_equivalence_check,
    ghz_limit_state,
    ring_distance,
    verify_block_mixedness,
    xstate,
    xstate_track,
)
from .thermal import ThermalParams, gibbs_state, thermal_pair_concurrence, thermal_sweep

__all__ = [name for name in dir() if not name.startswith("_")]
