"""Reduced density matrices, Schmidt spectra, the degree-6 invariant, and the
Kraus-commutation obstruction to GHZ equivalence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from . import errors
from .hadamard import HadamardMatrix, dephase
from .qstate import StateVector


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    dims: tuple
    mat: np.ndarray


def reduced_density(s: StateVector, keep: Sequence[int]) -> DensityMatrix:
    """Partial trace over the complement of `keep` (a sorted site list)."""
    keep = sorted(set(int(k) for k in keep))
    if not keep:
        raise errors.EmptyKeep("keep at least one site")
    for k in keep:
        if not (0 <= k < s.n):
            raise errors.BadSite(f"site {k} out of range for n={s.n}")
    rest = [a for a in range(s.n) if a not in keep]
    T = s.tensor()
    rho = np.tensordot(T, T.conj(), axes=(rest, rest))
    dk = s.d ** len(keep)
    return DensityMatrix(dims=tuple(s.d for _ in keep), mat=rho.reshape(dk, dk))


def partial_transpose(rho: DensityMatrix, slot: int) -> np.ndarray:
    """Transpose one tensor slot; result is Hermitian but may be non-PSD."""
    m = len(rho.dims)
    if not (0 <= slot < m):
        raise errors.BadSlot(f"slot {slot} out of range for {m} slots")
    T = rho.mat.reshape(rho.dims + rho.dims)
    T = np.swapaxes(T, slot, slot + m)
    size = rho.mat.shape[0]
    return T.reshape(size, size)


def i6(s: StateVector) -> float:
    """Tr((rho_01^{T_0})^3), the degree-6 local-unitary invariant.

    Sites {0, 1} are kept and the transpose acts on slot 0. The trace of an
    odd power of a Hermitian matrix is real; the double-precision imaginary
    residue is asserted, not ignored.
    """
    if s.n < 3:
        raise errors.TooFewSites("the invariant convention needs n >= 3")
    rho = reduced_density(s, [0, 1])
    pt = partial_transpose(rho, 0)
    val = complex(np.trace(pt @ pt @ pt))
    if abs(val.imag) > 1e-9:
        raise errors.GGHSError(f"imaginary residue {val.imag:.3e} too large")
    return float(val.real)


def schmidt_spectrum(s: StateVector, part: Sequence[int]) -> List[float]:
    """Squared Schmidt coefficients across (part | rest), descending."""
    part = sorted(set(int(k) for k in part))
    if not part or len(part) >= s.n:
        raise errors.BadPartition("part must be a proper nonempty site subset")
    rho = reduced_density(s, part)
    herm = (rho.mat + rho.mat.conj().T) / 2.0
    vals = np.linalg.eigvalsh(herm)
    return [float(x) for x in vals[::-1]]


def kraus_commutation_test(H: HadamardMatrix):
    """Necessary condition for the triangle state to be GHZ up to local unitaries.

    Builds F_i = Gamma_i H' Gamma_i on the dephased form H', Gamma_i being the
    diagonal of column i. Passing means every pair F_i^dagger F_j, F_k^dagger F_l
    commutes entrywise within 1e-9; failing certifies the triangle state is not
    LU-equivalent to the GHZ state. Returns (passed, max_violation).
    """
    d = H.d
    if d == 1:
        return True, 0.0
    hd = H if H.dephased else dephase(H)[2]
    A = hd.entries
    F = [np.diag(A[:, i]) @ A @ np.diag(A[:, i]) for i in range(d)]
    G = [f.conj().T @ g for f in F for g in F]
    worst = 0.0
    for x in G:
        for y in G:
            dev = float(np.max(np.abs(x @ y - y @ x)))
            if dev > worst:
                worst = dev
    return worst <= 1e-9, worst
