"""Generalized graph states from symmetric complex Hadamard matrices.

Construct |psi_{G,H}> for an undirected graph G and a symmetric complex
Hadamard matrix H, analyze entanglement and local symmetries, test
Hadamard-matrix equivalence, and build graph quantum codes from classical
codes.
"""

from . import errors
from .codes import (
    ClassicalCode,
    DecodedError,
    QuantumCode,
    build_code,
    decoded_error,
    encode,
    kl_distance,
    weight_enumerators,
    weyl_operators,
)
from .entangle import (
    DensityMatrix,
    i6,
    kraus_commutation_test,
    partial_transpose,
    reduced_density,
    schmidt_spectrum,
)
from .graphs import Graph, bipartition, build, family
from .hadamard import (
    GENERAL,
    P_EQUIV,
    S_SYMMETRY,
    DiagonalUnitary,
    EquivalenceWitness,
    HadamardMatrix,
    Permutation,
    apply_witness,
    catalog,
    check_witness,
    dephase,
    find_equivalence,
    fourier,
    s_symmetries,
    tensor_product,
    validate,
)
from .qstate import (
    LocalOperator,
    StateVector,
    apply_ch,
    apply_local,
    basis_state,
    circuit_unitary,
    digits_to_index,
    ghz,
    graph_state,
    hamiltonian_ground_check,
    index_to_digits,
    overlap,
    reorder_qudits,
)
from .symmetry import (
    StabilizerOperator,
    auto_bipartite_parts,
    lu_witness_bipartite,
    lu_witness_p_equiv,
    pauli_xz,
    stabilizer_from_symmetry,
    verify_stabilizer,
)
from .tensornet import BondState, bond_state, peps_contract

__version__ = "0.1.0"

__all__ = [
    "errors",
    "ClassicalCode",
    "DecodedError",
    "QuantumCode",
    "build_code",
    "decoded_error",
    "encode",
    "kl_distance",
    "weight_enumerators",
    "weyl_operators",
    "DensityMatrix",
    "i6",
    "kraus_commutation_test",
    "partial_transpose",
    "reduced_density",
    "schmidt_spectrum",
    "Graph",
    "bipartition",
    "build",
    "family",
    "GENERAL",
    "P_EQUIV",
    "S_SYMMETRY",
    "DiagonalUnitary",
    "EquivalenceWitness",
    "HadamardMatrix",
    "Permutation",
    "apply_witness",
    "catalog",
    "check_witness",
    "dephase",
    "find_equivalence",
    "fourier",
    "s_symmetries",
    "tensor_product",
    "validate",
    "LocalOperator",
    "StateVector",
    "apply_ch",
    "apply_local",
    "basis_state",
    "circuit_unitary",
    "digits_to_index",
    "ghz",
    "graph_state",
    "hamiltonian_ground_check",
    "index_to_digits",
    "overlap",
    "reorder_qudits",
    "StabilizerOperator",
    "auto_bipartite_parts",
    "lu_witness_bipartite",
    "lu_witness_p_equiv",
    "pauli_xz",
    "stabilizer_from_symmetry",
    "verify_stabilizer",
    "BondState",
    "bond_state",
    "peps_contract",
    "__version__",
]
