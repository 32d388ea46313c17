"""Complex Hadamard matrices: construction, validation, catalog, equivalence.

A complex Hadamard matrix is a d x d matrix with unimodular entries satisfying
H^dagger H = d*I. Throughout the package H is additionally required to be
symmetric wherever it drives a two-qudit gate. Equivalence of two Hadamard
matrices means H1 = D1 P1 H2 P2 D2 for permutations P1, P2 and unimodular
diagonals D1, D2; P-equivalence restricts to a single simultaneous row/column
permutation, H1 = P D1 H2 D2 P^T; an S-symmetry of H is a pair (P, D) with
P H D = H.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import errors
from ._tol import TOL_ENTRY, tol_unitary


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    d: int
    entries: np.ndarray  # (d, d) complex128, read-only
    symmetric: bool
    dephased: bool


@dataclass(frozen=True, eq=False)
class DiagonalUnitary:
    d: int
    phases: np.ndarray  # (d,) complex128, unimodular

    def matrix(self) -> np.ndarray:
        return np.diag(self.phases)


@dataclass(frozen=True, eq=False)
class Permutation:
    """Bijection of {0..d-1}; as an operator, P|i> = |map[i]>."""

    d: int
    map: tuple

    def matrix(self) -> np.ndarray:
        m = np.zeros((self.d, self.d))
        m[list(self.map), range(self.d)] = 1.0
        return m

    def inverse(self) -> "Permutation":
        inv = [0] * self.d
        for i, j in enumerate(self.map):
            inv[j] = i
        return Permutation(self.d, tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        # (self o other)|i> = self(other(i))
        return Permutation(self.d, tuple(self.map[j] for j in other.map))


GENERAL = "General"
P_EQUIV = "PEquiv"
S_SYMMETRY = "SSymmetry"


@dataclass(frozen=True, eq=False)
class EquivalenceWitness:
    """Witness for one of the three relations.

    General:   H1 = D1 P1 H2 P2 D2
    PEquiv:    H1 = P D1 H2 D2 P^T  (P stored in p1; p2 unused)
    SSymmetry: P H D = H            (P in p1, D in d1; p2, d2 unused)
    """

    kind: str
    p1: Permutation
    d1: DiagonalUnitary
    p2: Optional[Permutation] = None
    d2: Optional[DiagonalUnitary] = None


def _as_complex_square(entries) -> np.ndarray:
    a = np.array(entries, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise errors.NotHadamard(f"expected a square matrix, got shape {a.shape}")
    return a


def validate(entries, require_symmetric: bool = False) -> HadamardMatrix:
    """Check the Hadamard invariants and return the matrix with its flags."""
    a = _as_complex_square(entries)
    d = a.shape[0]
    mod_dev = float(np.max(np.abs(np.abs(a) - 1.0)))
    if mod_dev > TOL_ENTRY:
        raise errors.NotUnimodular(f"entry modulus deviates from 1 by {mod_dev:.3e}")
    gram_dev = float(np.max(np.abs(a.conj().T @ a - d * np.eye(d))))
    if gram_dev > tol_unitary(d):
        raise errors.NotHadamard(f"H^dagger H deviates from d*I by {gram_dev:.3e}")
    symmetric = bool(np.max(np.abs(a - a.T)) <= TOL_ENTRY)
    if require_symmetric and not symmetric:
        raise errors.NotSymmetric("matrix is not symmetric")
    dephased = bool(
        np.max(np.abs(a[0, :] - 1.0)) <= TOL_ENTRY
        and np.max(np.abs(a[:, 0] - 1.0)) <= TOL_ENTRY
    )
    a = a.copy()
    a.setflags(write=False)
    return HadamardMatrix(d=d, entries=a, symmetric=symmetric, dephased=dephased)


def fourier(d: int) -> HadamardMatrix:
    """The d-dimensional discrete Fourier matrix, entries q^(i*j), q = exp(2*pi*i/d)."""
    if d < 1:
        raise errors.BadSize("d must be >= 1")
    k = np.arange(d)
    roots = np.exp(2j * np.pi * k / d)
    return validate(roots[np.outer(k, k) % d])


def _h_alpha(alpha: float) -> np.ndarray:
    e = np.exp(1j * alpha)
    return np.array(
        [
            [1, 1, 1, 1],
            [1, 1, -1, -1],
            [1, -1, e, -e],
            [1, -1, -e, e],
        ],
        dtype=np.complex128,
    )


_TILDE = {
    "tilde_a": [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]],
    "tilde_b": [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -1, 1, -1]],
    "tilde_c": [[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]],
    "tilde_d": [[1, 1, 1, 1], [1, -1, -1, 1], [1, -1, 1, -1], [1, 1, -1, -1]],
}


def _h_d6() -> np.ndarray:
    i = 1j
    return np.array(
        [
            [1, 1, 1, 1, 1, 1],
            [1, -1, i, -i, -i, i],
            [1, i, -1, i, -i, -i],
            [1, -i, i, -1, i, -i],
            [1, -i, -i, i, -1, i],
            [1, i, -i, -i, i, -1],
        ],
        dtype=np.complex128,
    )


def _qutrit_h2() -> np.ndarray:
    w = np.exp(2j * np.pi / 3)
    return np.array(
        [[1, 1, 1], [1, w**2, w], [1, w, w**2]],
        dtype=np.complex128,
    )


def catalog(name: str, params: Optional[float] = None) -> HadamardMatrix:
    """Named matrices from the built-in catalog.

    h_alpha requires the real parameter alpha; the other names take none.
    """
    if name == "h_alpha":
        if params is None:
            raise errors.UnknownName("h_alpha needs its real parameter")
        return validate(_h_alpha(float(params)))
    if name in _TILDE:
        return validate(np.array(_TILDE[name], dtype=np.complex128))
    if name == "h_d6":
        return validate(_h_d6())
    if name == "qutrit_h2":
        return validate(_qutrit_h2())
    raise errors.UnknownName(f"unknown catalog matrix {name!r}")


def dephase(H: HadamardMatrix):
    """Normalize first row and column to 1.

    Returns (D1, D2, Hp) with Hp = D1 H D2, D1[i] = 1/h_i0 applied first, then
    D2[j] = 1/h'_0j. The first row/column of the output are set to exactly 1
    (their mathematically exact values), which makes the operation idempotent
    at the bit level.
    """
    a = H.entries
    d1 = 1.0 / a[:, 0]
    hp = a * d1[:, None]
    d2 = 1.0 / hp[0, :]
    hpp = hp * d2[None, :]
    hpp[:, 0] = 1.0
    hpp[0, :] = 1.0
    return (
        DiagonalUnitary(H.d, d1),
        DiagonalUnitary(H.d, d2),
        validate(hpp),
    )


def tensor_product(H1: HadamardMatrix, H2: HadamardMatrix) -> HadamardMatrix:
    """Kronecker product; index (i1, i2) -> i1*d2 + i2."""
    return validate(np.kron(H1.entries, H2.entries))


def _rank1_unimodular_factors(R: np.ndarray, tol: float):
    """If R_ij = a_i * b_j with unimodular a, b, return (a, b), else None."""
    a = R[:, 0].copy()
    b = R[0, :] / R[0, 0]
    if np.max(np.abs(R - np.outer(a, b))) > tol:
        return None
    return a, b


def _check_witness_general(H1, H2, w) -> float:
    lhs = H1.entries
    rhs = (
        w.d1.matrix()
        @ w.p1.matrix()
        @ H2.entries
        @ w.p2.matrix()
        @ w.d2.matrix()
    )
    return float(np.max(np.abs(lhs - rhs)))


def _check_witness_p_equiv(H1, H2, w) -> float:
    P = w.p1.matrix()
    rhs = P @ w.d1.matrix() @ H2.entries @ w.d2.matrix() @ P.T
    return float(np.max(np.abs(H1.entries - rhs)))


def find_equivalence(
    H1: HadamardMatrix, H2: HadamardMatrix, kind: str = GENERAL
) -> Optional[EquivalenceWitness]:
    """Search for an equivalence witness between H1 and H2.

    General scans all (P1, P2) pairs; for each pair the diagonals are forced,
    so the ratio matrix (P1^T H1 P2^T) / H2 must factor as a_i * b_j. PEquiv
    scans single permutations with the ratio (P^T H1 P) / H2. The first witness
    in lexicographic permutation order is returned, or None.
    """
    if H1.d != H2.d:
        raise errors.DimensionMismatch(f"d mismatch: {H1.d} vs {H2.d}")
    d = H1.d
    if kind == GENERAL:
        if d > 6:
            raise errors.SearchLimitExceeded("General search supports d <= 6")
    elif kind == P_EQUIV:
        if d > 8:
            raise errors.SearchLimitExceeded("PEquiv search supports d <= 8")
    else:
        raise errors.UnknownName(f"unknown equivalence kind {kind!r}")

    A1 = H1.entries
    A2 = H2.entries
    perms = list(itertools.permutations(range(d)))

    if kind == P_EQUIV:
        for p in perms:
            idx = list(p)
            # (P^T H1 P)[i, j] = H1[p(i), p(j)]
            R = A1[np.ix_(idx, idx)] / A2
            fac = _rank1_unimodular_factors(R, TOL_ENTRY)
            if fac is None:
                continue
            a, b = fac
            w = EquivalenceWitness(
                kind=P_EQUIV,
                p1=Permutation(d, tuple(p)),
                d1=DiagonalUnitary(d, a),
                d2=DiagonalUnitary(d, b),
            )
            dev = _check_witness_p_equiv(H1, H2, w)
            if dev > TOL_ENTRY:
                raise errors.InvalidWitness(f"internal: witness deviates by {dev:.3e}")
            return w
        return None

    for p1 in perms:
        rows = list(p1)
        B = A1[rows, :]  # B[i, j] = H1[p1(i), j]
        for p2 in perms:
            cols = list(p2)
            R = B[:, cols] / A2  # R[i, j] = H1[p1(i), p2(j)] / H2[i, j]
            fac = _rank1_unimodular_factors(R, TOL_ENTRY)
            if fac is None:
                continue
            a, b = fac
            # H1[p1(i), p2(j)] = a_i b_j H2[i, j] rearranges to the defining
            # equation H1 = D1 P1 H2 P2 D2 with D1 = diag(a) carried through
            # P1, P2 = the inverse of the scanned column permutation, and
            # D2 = diag(b) carried through it.
            d1 = np.empty(d, dtype=np.complex128)
            d1[rows] = a
            d2 = np.empty(d, dtype=np.complex128)
            d2[cols] = b
            w = EquivalenceWitness(
                kind=GENERAL,
                p1=Permutation(d, tuple(p1)),
                d1=DiagonalUnitary(d, d1),
                p2=Permutation(d, tuple(p2)).inverse(),
                d2=DiagonalUnitary(d, d2),
            )
            dev = _check_witness_general(H1, H2, w)
            if dev > TOL_ENTRY:
                raise errors.InvalidWitness(f"internal: witness deviates by {dev:.3e}")
            return w
    return None


def s_symmetries(H: HadamardMatrix) -> list:
    """All S-symmetries (P, D) of H, sorted by lexicographic permutation order.

    D is forced by P: from P H D = H, D = (1/d) H^dagger P^T H. The pair is
    kept iff that matrix is diagonal with unimodular diagonal. The identity
    pair is always present.
    """
    d = H.d
    if d > 8:
        raise errors.SearchLimitExceeded("S-symmetry search supports d <= 8")
    A = H.entries
    out = []
    for p in itertools.permutations(range(d)):
        # (P^T H)[i, :] = H[p(i), :]
        Dm = (A.conj().T @ A[list(p), :]) / d
        off = Dm - np.diag(np.diag(Dm))
        if np.max(np.abs(off)) > TOL_ENTRY:
            continue
        ph = np.diag(Dm).copy()
        if np.max(np.abs(np.abs(ph) - 1.0)) > TOL_ENTRY:
            continue
        w = EquivalenceWitness(
            kind=S_SYMMETRY,
            p1=Permutation(d, tuple(p)),
            d1=DiagonalUnitary(d, ph),
        )
        dev = np.max(np.abs(w.p1.matrix() @ A @ np.diag(ph) - A))
        if dev > TOL_ENTRY:
            raise errors.InvalidWitness(f"internal: symmetry deviates by {dev:.3e}")
        out.append(w)
    return out


def apply_witness(H: HadamardMatrix, w: EquivalenceWitness) -> HadamardMatrix:
    """Plug H into the right-hand side of the witness's defining equation.

    For a witness found by find_equivalence(H1, H2, kind), apply_witness(H2, w)
    reconstructs H1.
    """
    if w.kind == GENERAL:
        m = w.d1.matrix() @ w.p1.matrix() @ H.entries @ w.p2.matrix() @ w.d2.matrix()
    elif w.kind == P_EQUIV:
        P = w.p1.matrix()
        m = P @ w.d1.matrix() @ H.entries @ w.d2.matrix() @ P.T
    else:
        raise errors.UnknownName(f"apply_witness does not handle kind {w.kind!r}")
    return validate(m)


def check_witness(H1: HadamardMatrix, H2: HadamardMatrix, w: EquivalenceWitness) -> float:
    """Max entrywise deviation of the witness's defining equation."""
    if w.kind == GENERAL:
        return _check_witness_general(H1, H2, w)
    if w.kind == P_EQUIV:
        return _check_witness_p_equiv(H1, H2, w)
    if w.kind == S_SYMMETRY:
        rhs = w.p1.matrix() @ H1.entries @ w.d1.matrix()
        return float(np.max(np.abs(rhs - H1.entries)))
    raise errors.UnknownName(f"unknown witness kind {w.kind!r}")
