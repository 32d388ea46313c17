"""Stabilizer operators from S-symmetries and explicit local-unitary witnesses.

An S-symmetry (P, D) of H with P H D = H yields, for every vertex a, the
operator P at a times D at each neighbor of a, which fixes the graph state.
The witness constructors turn equivalence witnesses between two Hadamard
matrices into per-site unitaries mapping one graph state onto the other; the
mapping is always verified numerically before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from . import errors
from ._tol import TOL_ENTRY
from .graphs import Graph, bipartition
from .hadamard import (
    GENERAL,
    P_EQUIV,
    S_SYMMETRY,
    EquivalenceWitness,
    HadamardMatrix,
    apply_witness,
    check_witness,
    dephase,
)
from .qstate import LocalOperator, StateVector, apply_local, graph_state, overlap


def pauli_xz(d: int) -> Tuple[np.ndarray, np.ndarray]:
    """Generalized Pauli pair: X|i> = |i-1 mod d>, Z|i> = q^i |i>, XZ = qZX."""
    if d < 2:
        raise errors.BadSize("pauli_xz needs d >= 2")
    X = np.roll(np.eye(d, dtype=np.complex128), -1, axis=0)
    Z = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    return X, Z


@dataclass(frozen=True, eq=False)
class StabilizerOperator:
    n: int
    d: int
    factors: tuple  # n matrices, identity where the operator does not act

    def apply(self, s: StateVector) -> StateVector:
        out = s
        for site, f in enumerate(self.factors):
            out = apply_local(LocalOperator(d=self.d, site=site, matrix=f), out)
        return out


def stabilizer_from_symmetry(
    G: Graph, H: HadamardMatrix, w: EquivalenceWitness, a: int
) -> StabilizerOperator:
    """P at vertex a, D at each neighbor of a, identity elsewhere."""
    if w.kind != S_SYMMETRY:
        raise errors.InvalidWitness("expected an S-symmetry witness")
    dev = check_witness(H, H, w)
    if dev > TOL_ENTRY:
        raise errors.InvalidWitness(f"P H D deviates from H by {dev:.3e}")
    if not (0 <= a < G.n):
        raise errors.BadVertex(f"vertex {a} out of range for n={G.n}")
    eye = np.eye(H.d, dtype=np.complex128)
    factors = [eye] * G.n
    factors[a] = w.p1.matrix().astype(np.complex128)
    for b in G.neighbors(a):
        factors[b] = w.d1.matrix()
    return StabilizerOperator(n=G.n, d=H.d, factors=tuple(factors))


def verify_stabilizer(op: StabilizerOperator, s: StateVector) -> Tuple[bool, float]:
    if (op.n, op.d) != (s.n, s.d):
        raise errors.DimensionMismatch(
            f"operator (n={op.n}, d={op.d}) vs state (n={s.n}, d={s.d})"
        )
    deviation = float(np.linalg.norm(op.apply(s).amps - s.amps))
    return deviation <= 1e-9, deviation


def _diag_power(phases: np.ndarray, k: int) -> np.ndarray:
    # unimodular phases: negative powers through conjugation
    if k >= 0:
        return np.diag(phases**k)
    return np.diag(phases.conj() ** (-k))


def _verify_lu(G, H1, H2, unitaries) -> None:
    s1 = graph_state(G, H1)
    s2 = graph_state(G, H2)
    built = s1
    for site, u in enumerate(unitaries):
        built = apply_local(LocalOperator(d=H1.d, site=site, matrix=u), built)
    ov = abs(overlap(built, s2))
    if ov < 1 - 1e-9:
        raise errors.InvalidWitness(f"witness maps with |overlap| = {ov:.12f} < 1")


def lu_witness_p_equiv(
    G: Graph, H1: HadamardMatrix, w: EquivalenceWitness
) -> List[np.ndarray]:
    """Per-site unitaries U with (U x ... x U') psi_{G,H1} = psi_{G,H2}.

    H2 is the matrix the witness reconstructs from H1 (H2 = P D1 H1 D2 P^T).
    On dephased forms the witness diagonals are forced by the permutation, so
    each site gets P * diag(conj(H1'[:, c]))^deg with c = P^{-1}(0); diagonal
    corrections splice in when either matrix is not dephased. The composite is
    verified by overlap before it is returned.
    """
    if w.kind != P_EQUIV:
        raise errors.InvalidWitness("expected a P-equivalence witness")
    H2 = apply_witness(H1, w)
    if not H2.symmetric or not H1.symmetric:
        raise errors.NotSymmetric("graph-state witnesses need symmetric matrices")
    H1d = H1 if H1.dephased else dephase(H1)[2]
    H2_entries = H2.entries
    pi = w.p1
    c = pi.inverse().map[0]
    M = pi.matrix().astype(np.complex128)
    col = H1d.entries[:, c].conj()
    unitaries = []
    for u in range(G.n):
        g = G.degree(u)
        site = M @ _diag_power(col, g)
        if not H1.dephased:
            site = site @ _diag_power(H1.entries[:, 0].conj(), g + 1)
        if not H2.dephased:
            site = _diag_power(H2_entries[:, 0], g + 1) @ site
        unitaries.append(site)
    _verify_lu(G, H1, H2, unitaries)
    return unitaries


def lu_witness_bipartite(
    G: Graph,
    parts: Tuple[Sequence[int], Sequence[int]],
    H1: HadamardMatrix,
    w: EquivalenceWitness,
) -> List[np.ndarray]:
    """Per-site unitaries mapping psi_{G,H1} to psi_{G,H2} on a bipartite G.

    H2 = D1 P1 H1 P2 D2 per the witness; V1 sites carry the P1-type factor and
    V2 sites the P2-type factor. Both matrices must be symmetric.
    """
    if w.kind != GENERAL:
        raise errors.InvalidWitness("expected a General witness")
    v1, v2 = (frozenset(int(x) for x in parts[0]), frozenset(int(x) for x in parts[1]))
    if v1 | v2 != frozenset(range(G.n)) or (v1 & v2):
        raise errors.NotBipartite("parts must partition the vertex set")
    for a, b in G.edges:
        if not ((a in v1 and b in v2) or (a in v2 and b in v1)):
            raise errors.NotBipartite(f"edge ({a},{b}) stays inside one part")
    H2 = apply_witness(H1, w)
    if not H2.symmetric or not H1.symmetric:
        raise errors.NotSymmetric("graph-state witnesses need symmetric matrices")
    H1d = H1 if H1.dephased else dephase(H1)[2]
    pi1 = w.p1
    rho2 = w.p2
    c2 = rho2.map[0]
    c1 = pi1.inverse().map[0]
    M1 = pi1.matrix().astype(np.complex128)
    NT = rho2.matrix().astype(np.complex128).T
    col_v1 = H1d.entries[:, c2].conj()
    col_v2 = H1d.entries[:, c1].conj()
    unitaries = []
    for u in range(G.n):
        g = G.degree(u)
        if u in v1:
            site = M1 @ _diag_power(col_v1, g)
        else:
            site = NT @ _diag_power(col_v2, g)
        if not H1.dephased:
            site = site @ _diag_power(H1.entries[:, 0].conj(), g + 1)
        if not H2.dephased:
            site = _diag_power(H2.entries[:, 0], g + 1) @ site
        unitaries.append(site)
    _verify_lu(G, H1, H2, unitaries)
    return unitaries


def auto_bipartite_parts(G: Graph):
    parts = bipartition(G)
    if parts is None:
        raise errors.NotBipartite("graph contains an odd cycle")
    return parts
