"""Matrix substrate: tagged complex matrices, block partitions, Hermitian eigensolver.

Matrices carry a scalar-field tag because several downstream quantities (the
numerical radius among them) genuinely differ between the real and the complex
field.  A real-tagged matrix must have exactly zero imaginary part; a
complex-tagged matrix may hold any finite complex entries.

The Hermitian eigensolver is a cyclic-by-row complex Jacobi iteration.  Each
rotation factors the 2x2 pivot through a phase that makes it real symmetric,
then applies the classic symmetric Jacobi rotation.  The iteration stops when
the off-diagonal Frobenius mass falls below 1e-13 * ||H||_F and refuses to run
past 64 sweeps.  Dimensions here are small, so unconditional stability and
orthonormal eigenvectors matter more than asymptotic speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    IndexOutOfRange,
    NoConvergence,
    NotHermitian,
    NotSquare,
    PartitionMismatch,
    ValidationError,
)

FIELD_REAL = "real"
FIELD_COMPLEX = "complex"

# Jacobi iteration limits.  64 sweeps is far more than cyclic Jacobi needs for
# the dimensions this package handles; hitting it means the input was bad.
_JACOBI_MAX_SWEEPS = 64
_JACOBI_OFF_FACTOR = 1e-13


@dataclass(frozen=True)
class CMatrix:
    """Immutable complex matrix with a scalar-field tag.

    Attributes
    ----------
    data : np.ndarray
        2-D complex128 array, read-only.
    field : str
        "real" or "complex".  Real-tagged data has exactly zero imaginary part.
    """

    data: np.ndarray
    field: str = FIELD_COMPLEX

    def __post_init__(self) -> None:
        arr = np.array(self.data, dtype=np.complex128, copy=True, order="C")
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValidationError(f"matrix must be 2-D and non-empty, got shape {arr.shape}")
        if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
            raise ValidationError("matrix entries must be finite")
        if self.field not in (FIELD_REAL, FIELD_COMPLEX):
            raise ValidationError(f"unknown field tag {self.field!r}")
        if self.field == FIELD_REAL and np.any(arr.imag != 0.0):
            raise ValidationError("real-tagged matrix has nonzero imaginary part")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def real(cls, entries) -> "CMatrix":
        return cls(np.asarray(entries), FIELD_REAL)

    @classmethod
    def complex(cls, entries) -> "CMatrix":
        return cls(np.asarray(entries), FIELD_COMPLEX)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


def as_cmatrix(M, field: str | None = None) -> CMatrix:
    """Coerce an array-like to CMatrix.

    Plain arrays infer their field tag from the dtype (floating dtypes become
    real-tagged) unless one is forced explicitly.  Existing CMatrix instances
    pass through untouched.
    """
    if isinstance(M, CMatrix):
        return M
    arr = np.asarray(M)
    if field is None:
        field = FIELD_COMPLEX if np.iscomplexobj(arr) else FIELD_REAL
    return CMatrix(arr, field)


def frob(M) -> float:
    """Frobenius norm; accepts CMatrix or array."""
    arr = M.data if isinstance(M, CMatrix) else np.asarray(M)
    return float(np.linalg.norm(arr))


def adjoint(M) -> CMatrix:
    """Conjugate transpose, preserving the field tag."""
    A = as_cmatrix(M)
    return CMatrix(A.data.conj().T, A.field)


@dataclass(frozen=True)
class BlockPartition:
    """Ordered block sizes along one axis of a square matrix."""

    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        sizes = tuple(int(s) for s in self.sizes)
        if len(sizes) == 0 or any(s < 1 for s in sizes):
            raise ValidationError(f"partition sizes must be positive, got {sizes}")
        object.__setattr__(self, "sizes", sizes)

    @classmethod
    def scalar(cls, n: int) -> "BlockPartition":
        """The all-ones partition of an n-dimensional space."""
        return cls(tuple([1] * n))

    @property
    def count(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def check(self, n: int) -> None:
        if self.total != n:
            raise PartitionMismatch(
                f"partition {self.sizes} sums to {self.total}, matrix dimension is {n}"
            )

    def slices(self) -> list[slice]:
        out, start = [], 0
        for s in self.sizes:
            out.append(slice(start, start + s))
            start += s
        return out


@dataclass(frozen=True)
class HermEigDecomp:
    """Eigendecomposition of a Hermitian matrix.

    values are real and ascending; vectors holds the matching orthonormal
    eigenvectors as columns.
    """

    values: np.ndarray
    vectors: np.ndarray


def _require_square(A: CMatrix, op: str) -> None:
    if not A.is_square:
        raise NotSquare(f"{op} requires a square matrix, got {A.rows}x{A.cols}")


def herm_eig(H, eig_tol: float | None = None) -> HermEigDecomp:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Parameters
    ----------
    H : CMatrix or array-like
        Square matrix, Hermitian within eig_tol entrywise.
    eig_tol : float, optional
        Hermiticity gate: max |H_ij - conj(H_ji)| must not exceed it.
        Defaults to 1e-12 * (1 + ||H||_F).

    Returns
    -------
    HermEigDecomp
        Ascending real eigenvalues with orthonormal eigenvector columns.

    Raises
    ------
    NotSquare, NotHermitian, NoConvergence
    """
    A = as_cmatrix(H)
    _require_square(A, "herm_eig")
    scale = 1.0 + frob(A)
    gate = (1e-12 * scale) if eig_tol is None else float(eig_tol)
    dev = float(np.max(np.abs(A.data - A.data.conj().T)))
    if dev > gate:
        raise NotHermitian(f"deviation from Hermitian symmetry {dev:.3e} exceeds {gate:.3e}")

    # Symmetrize before iterating so the rotations see an exactly Hermitian W.
    W = 0.5 * (A.data + A.data.conj().T)
    n = W.shape[0]
    V = np.eye(n, dtype=np.complex128)
    target = _JACOBI_OFF_FACTOR * float(np.linalg.norm(W))

    def off_mass() -> float:
        off = W - np.diag(np.diag(W))
        return float(np.linalg.norm(off))

    converged = off_mass() <= target
    for _ in range(_JACOBI_MAX_SWEEPS):
        if converged:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                b = W[p, q]
                m = abs(b)
                if m == 0.0:
                    continue
                phase = b / m
                app = W[p, p].real
                aqq = W[q, q].real
                tau = (aqq - app) / (2.0 * m)
                t = 1.0 if tau == 0.0 else math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # Unitary on the (p, q) plane: G = [[phase*c, phase*s], [-s, c]].
                gpp, gpq, gqp, gqq = phase * c, phase * s, -s, c
                colp = W[:, p] * gpp + W[:, q] * gqp
                colq = W[:, p] * gpq + W[:, q] * gqq
                W[:, p] = colp
                W[:, q] = colq
                rowp = np.conj(gpp) * W[p, :] + np.conj(gqp) * W[q, :]
                rowq = np.conj(gpq) * W[p, :] + np.conj(gqq) * W[q, :]
                W[p, :] = rowp
                W[q, :] = rowq
                W[p, q] = 0.0
                W[q, p] = 0.0
                W[p, p] = W[p, p].real
                W[q, q] = W[q, q].real
                vp = V[:, p] * gpp + V[:, q] * gqp
                vq = V[:, p] * gpq + V[:, q] * gqq
                V[:, p] = vp
                V[:, q] = vq
        converged = off_mass() <= target
    if not converged:
        raise NoConvergence(
            f"Jacobi iteration left off-diagonal mass {off_mass():.3e} > {target:.3e} "
            f"after {_JACOBI_MAX_SWEEPS} sweeps"
        )

    values = np.diag(W).real.copy()
    order = np.argsort(values, kind="stable")
    return HermEigDecomp(values=values[order], vectors=V[:, order])


def _gram_eigenvalues(A: CMatrix) -> np.ndarray:
    gram = A.data.conj().T @ A.data
    return herm_eig(CMatrix(gram)).values


def op_norm(M) -> float:
    """Operator (spectral) norm, computed as the largest singular value.

    Works for rectangular input; routes through the Hermitian eigensolver on
    the Gram matrix rather than a full SVD.
    """
    A = as_cmatrix(M)
    vals = _gram_eigenvalues(A)
    return math.sqrt(max(float(vals[-1]), 0.0))


def min_modulus(M) -> float:
    """Minimum modulus m(M) = min ||Mx|| over unit x, i.e. the smallest singular value."""
    A = as_cmatrix(M)
    _require_square(A, "min_modulus")
    vals = _gram_eigenvalues(A)
    return math.sqrt(max(float(vals[0]), 0.0))


def sigma_min(M) -> float:
    """Smallest singular value of a possibly rectangular matrix.

    min ||Mx|| over unit x in the domain; structurally zero when cols > rows.
    """
    A = as_cmatrix(M)
    if A.cols > A.rows:
        return 0.0
    vals = _gram_eigenvalues(A)
    return math.sqrt(max(float(vals[0]), 0.0))


def _check_block_index(p: BlockPartition, idx: int, name: str) -> None:
    if not 0 <= idx < p.count:
        raise IndexOutOfRange(f"block index {name}={idx} outside 0..{p.count - 1}")


def block_extract(M, p: BlockPartition, i: int, j: int) -> CMatrix:
    """Block (i, j) of a square matrix under partition p.  Indices are 0-based."""
    A = as_cmatrix(M)
    _require_square(A, "block_extract")
    p.check(A.rows)
    _check_block_index(p, i, "i")
    _check_block_index(p, j, "j")
    sl = p.slices()
    return CMatrix(A.data[sl[i], sl[j]], A.field)


def zero_cross(M, p: BlockPartition, i: int) -> CMatrix:
    """Copy of M with block-row i and block-column i set to zero.

    Everything off the i-th cross is kept.  Idempotent in i.
    """
    A = as_cmatrix(M)
    _require_square(A, "zero_cross")
    p.check(A.rows)
    _check_block_index(p, i, "i")
    sl = p.slices()
    out = A.data.copy()
    out[sl[i], :] = 0.0
    out[:, sl[i]] = 0.0
    return CMatrix(out, A.field)
