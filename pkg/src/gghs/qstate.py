"""Dense state-vector engine for n qudits of local dimension d.

Basis index convention is big-endian: qudit 0 is the most significant digit,
k = sum_k i_k * d^(n-1-k). States are compared by |overlap|, never
componentwise, since every local-unitary statement is phase-insensitive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Optional, Sequence, Tuple

import numpy as np

from . import errors
from ._tol import TOL_NORM
from .graphs import Graph
from .hadamard import HadamardMatrix

DENSE_AMP_CAP = 2**24      # largest d**n a StateVector may hold
DENSE_MATRIX_CAP = 4096    # largest d**n for dense d**n x d**n operators


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    d: int
    amps: np.ndarray  # (d**n,) complex128

    def tensor(self) -> np.ndarray:
        return self.amps.reshape((self.d,) * self.n)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """A d x d operator acting on one site. Not necessarily unitary."""

    d: int
    site: int
    matrix: np.ndarray


def digits_to_index(d: int, digits: Sequence[int]) -> int:
    k = 0
    for x in digits:
        k = k * d + int(x)
    return k


def index_to_digits(n: int, d: int, k: int) -> Tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(k % d)
        k //= d
    return tuple(reversed(out))


def _check_cap(n: int, d: int):
    if d**n > DENSE_AMP_CAP:
        raise errors.TooLarge(f"d**n = {d**n} exceeds the dense cap {DENSE_AMP_CAP}")


def basis_state(n: int, d: int, digits: Sequence[int]) -> StateVector:
    if len(digits) != n:
        raise errors.DigitOutOfRange(f"expected {n} digits, got {len(digits)}")
    for x in digits:
        if not (0 <= int(x) < d):
            raise errors.DigitOutOfRange(f"digit {x} out of range for d={d}")
    _check_cap(n, d)
    amps = np.zeros(d**n, dtype=np.complex128)
    amps[digits_to_index(d, digits)] = 1.0
    return StateVector(n=n, d=d, amps=amps)


def apply_local(U: LocalOperator, s: StateVector) -> StateVector:
    if U.d != s.d:
        raise errors.DimensionMismatch(f"operator d={U.d}, state d={s.d}")
    if not (0 <= U.site < s.n):
        raise errors.SiteOutOfRange(f"site {U.site} out of range for n={s.n}")
    d = s.d
    pre = d**U.site
    post = d ** (s.n - U.site - 1)
    T = s.amps.reshape(pre, d, post)
    out = np.einsum("ab,ibj->iaj", np.asarray(U.matrix, dtype=np.complex128), T)
    return StateVector(n=s.n, d=s.d, amps=out.reshape(-1))


def apply_ch(H: HadamardMatrix, s: StateVector, i: int, j: int) -> StateVector:
    """Diagonal two-qudit gate: amplitude at (.., a_i, .., a_j, ..) times h[a_i, a_j]."""
    if i == j:
        raise errors.SameSite("the gate acts on two distinct sites")
    if H.d != s.d:
        raise errors.DimensionMismatch(f"matrix d={H.d}, state d={s.d}")
    if not H.symmetric:
        raise errors.NotSymmetric("the gate requires a symmetric matrix")
    for site in (i, j):
        if not (0 <= site < s.n):
            raise errors.SiteOutOfRange(f"site {site} out of range for n={s.n}")
    d = s.d
    lo, hi = min(i, j), max(i, j)
    w = H.entries if i < j else H.entries.T
    shape = [1] * s.n
    shape[lo] = d
    shape[hi] = d
    T = s.tensor() * w.reshape(shape)
    return StateVector(n=s.n, d=s.d, amps=T.reshape(-1))


def graph_state(
    G: Graph, H: HadamardMatrix, input_digits: Optional[Sequence[int]] = None
) -> StateVector:
    """Apply (H/sqrt(d)) on every site of a basis state, then the edge gates.

    All edge gates are diagonal, so their order is irrelevant; they are applied
    in sorted edge order for bitwise reproducibility.
    """
    if not H.symmetric:
        raise errors.NotSymmetric("graph states need a symmetric matrix")
    n, d = G.n, H.d
    digits = tuple(input_digits) if input_digits is not None else (0,) * n
    s = basis_state(n, d, digits)
    u = H.entries / math.sqrt(d)
    for site in range(n):
        s = apply_local(LocalOperator(d=d, site=site, matrix=u), s)
    for u_, v_ in G.edges:
        s = apply_ch(H, s, u_, v_)
    nrm = s.norm()
    return StateVector(n=n, d=d, amps=s.amps / nrm)


def ghz(n: int, d: int) -> StateVector:
    if n < 1 or d < 2:
        raise errors.BadSize("ghz needs n >= 1 and d >= 2")
    _check_cap(n, d)
    amps = np.zeros(d**n, dtype=np.complex128)
    for i in range(d):
        amps[digits_to_index(d, (i,) * n)] = 1.0 / math.sqrt(d)
    return StateVector(n=n, d=d, amps=amps)


def overlap(s1: StateVector, s2: StateVector) -> complex:
    if (s1.n, s1.d) != (s2.n, s2.d):
        raise errors.DimensionMismatch(
            f"states differ: (n={s1.n}, d={s1.d}) vs (n={s2.n}, d={s2.d})"
        )
    return complex(np.vdot(s1.amps, s2.amps))


def reorder_qudits(s: StateVector, perm: Sequence[int]) -> StateVector:
    """Relocate amplitudes so input qudit k becomes output qudit perm[k]."""
    perm = tuple(int(p) for p in perm)
    if sorted(perm) != list(range(s.n)):
        raise errors.BadPermutation(f"{perm} is not a permutation of 0..{s.n - 1}")
    axes = np.argsort(perm)  # output axis m holds input axis axes[m]
    T = s.tensor().transpose(axes)
    return StateVector(n=s.n, d=s.d, amps=np.ascontiguousarray(T).reshape(-1))


def _all_digit_grid(n: int, d: int) -> np.ndarray:
    """(d**n, n) integer array; row k holds the big-endian digits of k."""
    N = d**n
    k = np.arange(N)
    cols = []
    for site in range(n):
        cols.append((k // d ** (n - 1 - site)) % d)
    return np.stack(cols, axis=1)


def circuit_unitary(G: Graph, H: HadamardMatrix) -> np.ndarray:
    """Dense matrix of the full encoding circuit.

    Column c is the circuit applied to basis state c: the Kronecker power of
    H/sqrt(d) with each row scaled by the product of edge entries.
    """
    n, d = G.n, H.d
    if d**n > DENSE_MATRIX_CAP:
        raise errors.TooLarge(f"d**n = {d**n} exceeds the dense operator cap")
    u = H.entries / math.sqrt(d)
    U = reduce(np.kron, [u] * n) if n > 0 else np.eye(1)
    dig = _all_digit_grid(n, d)
    phases = np.ones(d**n, dtype=np.complex128)
    for a, b in G.edges:
        phases *= H.entries[dig[:, a], dig[:, b]]
    return phases[:, None] * U


def hamiltonian_ground_check(G: Graph, H: HadamardMatrix):
    """Diagonalize -sum_i U |0_i><0_i| U^dagger densely.

    Returns (gap, ground_dim, fidelity): the spectral gap above the ground
    energy, the ground-space dimension, and the overlap magnitude between the
    ground space and the circuit's output state.
    """
    n, d = G.n, H.d
    U = circuit_unitary(G, H)
    dig = _all_digit_grid(n, d)
    n_zero = (dig == 0).sum(axis=1).astype(np.float64)
    Hmat = -(U * n_zero[None, :]) @ U.conj().T
    w, v = np.linalg.eigh(Hmat)
    ground_dim = int(np.sum(w < w[0] + 1e-6))
    gap = float(w[ground_dim] - w[0]) if ground_dim < len(w) else float("inf")
    psi = graph_state(G, H)
    proj = v[:, :ground_dim].conj().T @ psi.amps
    fidelity = float(np.linalg.norm(proj))
    return gap, ground_dim, fidelity
