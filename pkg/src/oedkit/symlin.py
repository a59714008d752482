"""Dense symmetric linear algebra kernel.

Symmetric matrices are stored in canonical row-major upper-triangular form so
symmetry holds by construction. The eigensolver is a cyclic Jacobi rotation
scheme: deterministic, accurate for the small dense matrices (p <= ~50) this
package works with, and the single numerical path every criterion, gradient,
and Hessian in :mod:`oedkit.criteria` is built on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, NonFinite

# Machine epsilon used for default rank tolerances.
EPS = 2.2e-16

# Jacobi sweep controls: stop once the off-diagonal Frobenius norm falls below
# OFF_TOL * ||M||_F of the input matrix.
_JACOBI_OFF_TOL = 1e-14
_JACOBI_MAX_SWEEPS = 50


def tri_index(i: int, j: int, p: int) -> int:
    """Flat index of entry (i, j), 0 <= i <= j < p, in row-major upper-tri order."""
    if not (0 <= i <= j < p):
        raise IndexOutOfRange(f"need 0 <= i <= j < p, got i={i}, j={j}, p={p}")
    return i * p - (i * (i - 1)) // 2 + (j - i)


def tri_pair(k: int, p: int) -> tuple[int, int]:
    """Inverse of :func:`tri_index`: the (i, j) pair stored at flat index k."""
    if not (0 <= k < p * (p + 1) // 2):
        raise IndexOutOfRange(f"flat index {k} outside [0, {p * (p + 1) // 2})")
    i = 0
    row_len = p
    while k >= row_len:
        k -= row_len
        i += 1
        row_len -= 1
    return i, i + k


def tri_pairs(p: int) -> list[tuple[int, int]]:
    """All (i, j) pairs with i <= j in flat-index order."""
    return [(i, j) for i in range(p) for j in range(i, p)]


class SymMatrix:
    """Dense symmetric p x p matrix with upper-triangular storage.

    Parameters
    ----------
    dim:
        Matrix dimension p (positive).
    entries:
        Length p(p+1)/2 sequence in row-major upper-triangular order,
        entry (i, j) at flat index ``i*p - i(i-1)/2 + (j-i)``.
    """

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries):
        if dim < 1:
            raise IndexOutOfRange(f"dimension must be positive, got {dim}")
        arr = np.asarray(entries, dtype=float)
        want = dim * (dim + 1) // 2
        if arr.shape != (want,):
            raise IndexOutOfRange(
                f"need {want} upper-triangular entries for p={dim}, got shape {arr.shape}"
            )
        self.dim = dim
        self.entries = arr

    @classmethod
    def from_full(cls, a) -> "SymMatrix":
        """Build from a full square array, averaging (a + a.T)/2."""
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise IndexOutOfRange(f"need a square matrix, got shape {a.shape}")
        sym = 0.5 * (a + a.T)
        iu = np.triu_indices(a.shape[0])
        return cls(a.shape[0], sym[iu])

    @classmethod
    def zeros(cls, dim: int) -> "SymMatrix":
        return cls(dim, np.zeros(dim * (dim + 1) // 2))

    @classmethod
    def diagonal(cls, values) -> "SymMatrix":
        return cls.from_full(np.diag(np.asarray(values, dtype=float)))

    @classmethod
    def identity(cls, dim: int) -> "SymMatrix":
        return cls.from_full(np.eye(dim))

    def to_full(self) -> np.ndarray:
        """Expand to a full p x p ndarray (symmetric by construction)."""
        p = self.dim
        full = np.zeros((p, p))
        iu = np.triu_indices(p)
        full[iu] = self.entries
        full.T[iu] = self.entries
        return full

    def entry(self, i: int, j: int) -> float:
        if i > j:
            i, j = j, i
        return float(self.entries[tri_index(i, j, self.dim)])

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.entries)))

    def __eq__(self, other):
        return (
            isinstance(other, SymMatrix)
            and self.dim == other.dim
            and np.array_equal(self.entries, other.entries)
        )

    def __repr__(self):
        return f"SymMatrix(dim={self.dim}, entries={self.entries.tolist()})"


def expand_full(m: SymMatrix) -> np.ndarray:
    """Full p x p ndarray of a triangular-stored symmetric matrix."""
    return m.to_full()


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues ascending, eigenvectors column-orthonormal, column s
    paired with eigenvalue s. Signs fixed so each vector's largest-magnitude
    component is positive (ties broken at the first such index)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _check_finite(m: SymMatrix) -> None:
    if not m.is_finite():
        raise NonFinite("matrix has NaN or infinite entries")


def sym_eigen(m: SymMatrix) -> EigenDecomposition:
    """Eigendecomposition by cyclic Jacobi rotations.

    Sweeps run in a fixed (i, j) order until the off-diagonal Frobenius norm
    drops below 1e-14 * ||M||_F, so identical input yields bitwise-identical
    output.

    Raises
    ------
    NonFinite
        If any entry is NaN or infinite.
    """
    _check_finite(m)
    p = m.dim
    a = m.to_full()
    v = np.eye(p)
    norm_target = _JACOBI_OFF_TOL * math.sqrt(float(np.sum(a * a)))

    for _ in range(_JACOBI_MAX_SWEEPS):
        off = math.sqrt(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)))
        if off <= norm_target:
            break
        for i in range(p - 1):
            for j in range(i + 1, p):
                apq = a[i, j]
                if apq == 0.0:
                    continue
                # classic two-sided Jacobi rotation annihilating a[i, j]
                tau = (a[j, j] - a[i, i]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                row_i = a[i, :].copy()
                row_j = a[j, :].copy()
                a[i, :] = c * row_i - s * row_j
                a[j, :] = s * row_i + c * row_j
                col_i = a[:, i].copy()
                col_j = a[:, j].copy()
                a[:, i] = c * col_i - s * col_j
                a[:, j] = s * col_i + c * col_j
                a[i, j] = 0.0
                a[j, i] = 0.0
                vec_i = v[:, i].copy()
                vec_j = v[:, j].copy()
                v[:, i] = c * vec_i - s * vec_j
                v[:, j] = s * vec_i + c * vec_j

    lam = np.diag(a).copy()
    order = np.argsort(lam, kind="stable")
    lam = lam[order]
    v = v[:, order]
    for s_ in range(p):
        idx = int(np.argmax(np.abs(v[:, s_])))
        if v[idx, s_] < 0.0:
            v[:, s_] = -v[:, s_]
    return EigenDecomposition(eigenvalues=lam, eigenvectors=v)


def reconstruct(decomp: EigenDecomposition) -> SymMatrix:
    """V diag(lambda) V^T as a SymMatrix."""
    v = decomp.eigenvectors
    return SymMatrix.from_full((v * decomp.eigenvalues) @ v.T)


def pseudo_inverse(m: SymMatrix, rtol: float | None = None) -> SymMatrix:
    """Moore-Penrose pseudo-inverse through the eigendecomposition.

    Eigenvalues with ``|lambda| > rtol * max|lambda|`` are inverted, the rest
    are zeroed. The default ``rtol`` is ``p * 2.2e-16`` (standard rank cutoff).
    """
    _check_finite(m)
    if rtol is None:
        rtol = m.dim * EPS
    dec = sym_eigen(m)
    lam = dec.eigenvalues
    cutoff = rtol * float(np.max(np.abs(lam))) if lam.size else 0.0
    inv = np.where(np.abs(lam) > cutoff, 1.0 / np.where(lam == 0.0, 1.0, lam), 0.0)
    v = dec.eigenvectors
    return SymMatrix.from_full((v * inv) @ v.T)


def rank_deficient(m: SymMatrix, rtol: float | None = None) -> bool:
    """True when some eigenvalue would be zeroed by :func:`pseudo_inverse`."""
    if rtol is None:
        rtol = m.dim * EPS
    lam = sym_eigen(m).eigenvalues
    cutoff = rtol * float(np.max(np.abs(lam)))
    return bool(np.any(np.abs(lam) <= cutoff))


def signed_log_det(m: SymMatrix) -> tuple[int, float]:
    """(sign, log|det|) with sign in {-1, 0, +1}; a zero eigenvalue gives
    (0, -inf). ``sign * exp(logabsdet)`` equals the determinant."""
    _check_finite(m)
    lam = sym_eigen(m).eigenvalues
    sign = 1
    logabs = 0.0
    for x in lam:
        if x == 0.0:
            return 0, float("-inf")
        if x < 0.0:
            sign = -sign
        logabs += math.log(abs(x))
    return sign, logabs
