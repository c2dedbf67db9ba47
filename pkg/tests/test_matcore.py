import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad.errors import (
    IndexOutOfRange,
    NotHermitian,
    NotSquare,
    PartitionMismatch,
    ValidationError,
)
from numrad.matcore import (
    FIELD_COMPLEX,
    FIELD_REAL,
    BlockPartition,
    CMatrix,
    adjoint,
    as_cmatrix,
    block_extract,
    frob,
    herm_eig,
    min_modulus,
    op_norm,
    sigma_min,
    zero_cross,
)

rng = np.random.default_rng(20240817)


def _rand_complex(n, m=None):
    m = n if m is None else m
    return rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))


def test_cmatrix_validation():
    with pytest.raises(ValidationError):
        CMatrix(np.zeros(3))
    with pytest.raises(ValidationError):
        CMatrix(np.zeros((0, 2)))
    with pytest.raises(ValidationError):
        CMatrix(np.array([[np.inf]]))
    with pytest.raises(ValidationError):
        CMatrix(np.array([[np.nan + 1j]]))
    with pytest.raises(ValidationError):
        CMatrix(np.eye(2), field="rational")
    with pytest.raises(ValidationError):
        CMatrix(np.array([[1j]]), field=FIELD_REAL)


def test_cmatrix_immutable_and_tagged():
    M = CMatrix.complex([[1, 2], [3, 4]])
    assert M.field == FIELD_COMPLEX
    assert M.rows == M.cols == 2 and M.is_square
    with pytest.raises(ValueError):
        M.data[0, 0] = 9.0
    R = CMatrix.real([[1.5]])
    assert R.field == FIELD_REAL and R.data.dtype == np.complex128


def test_as_cmatrix_infers_field_from_dtype():
    assert as_cmatrix(np.eye(2)).field == FIELD_REAL
    assert as_cmatrix(np.eye(2, dtype=complex)).field == FIELD_COMPLEX
    assert as_cmatrix(np.eye(2), field=FIELD_COMPLEX).field == FIELD_COMPLEX
    M = CMatrix.real([[2]])
    assert as_cmatrix(M) is M


def test_adjoint_and_frob():
    A = _rand_complex(4)
    assert np.allclose(adjoint(A).data, A.conj().T)
    assert adjoint(CMatrix.real([[1, 2], [3, 4]])).field == FIELD_REAL
    assert frob(A) == pytest.approx(np.linalg.norm(A))


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
def test_norm_helpers_match_svd(n):
    A = _rand_complex(n)
    s = np.linalg.svd(A, compute_uv=False)
    assert op_norm(A) == pytest.approx(s[0], rel=1e-12)
    assert sigma_min(A) == pytest.approx(s[-1], abs=1e-12)
    assert min_modulus(A) == pytest.approx(s[-1], abs=1e-12)


def test_min_modulus_rectangular():
    A = _rand_complex(4, 2)
    s = np.linalg.svd(A, compute_uv=False)
    assert sigma_min(A) == pytest.approx(s[-1], abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7, 12])
def test_herm_eig_against_numpy(n):
    B = _rand_complex(n)
    H = B + B.conj().T
    dec = herm_eig(H)
    ref = np.linalg.eigvalsh(H)
    scale = 1e-12 * (1.0 + np.linalg.norm(H))
    assert np.all(np.abs(dec.values - ref) <= scale * 10)
    assert np.all(np.diff(dec.values) >= -1e-15)
    V = dec.vectors
    assert np.allclose(V.conj().T @ V, np.eye(n), atol=1e-12)
    assert np.allclose(H @ V, V @ np.diag(dec.values), atol=scale * 100)


def test_herm_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        herm_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(NotSquare):
        herm_eig(np.zeros((2, 3)))


def test_block_partition_basics():
    p = BlockPartition((1, 2))
    assert p.count == 2 and p.total == 3
    assert p.slices() == [slice(0, 1), slice(1, 3)]
    assert BlockPartition.scalar(3).sizes == (1, 1, 1)
    with pytest.raises(ValidationError):
        BlockPartition(())
    with pytest.raises(ValidationError):
        BlockPartition((2, 0))
    with pytest.raises(PartitionMismatch):
        p.check(4)


def test_block_extract_and_zero_cross():
    M = CMatrix.complex(np.arange(16, dtype=float).reshape(4, 4))
    p = BlockPartition((2, 2))
    assert np.array_equal(block_extract(M, p, 0, 1).data, M.data[0:2, 2:4])
    assert block_extract(M, p, 1, 1).field == M.field
    with pytest.raises(IndexOutOfRange):
        block_extract(M, p, 0, 2)

    Z = zero_cross(M, p, 0)
    assert np.all(Z.data[0:2, :] == 0) and np.all(Z.data[:, 0:2] == 0)
    assert np.array_equal(Z.data[2:4, 2:4], M.data[2:4, 2:4])
    with pytest.raises(IndexOutOfRange):
        zero_cross(M, p, -1)


def test_zero_cross_real_tag_preserved():
    M = CMatrix.real(np.eye(3))
    Z = zero_cross(M, BlockPartition((1, 2)), 1)
    assert Z.field == FIELD_REAL


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 6))
def test_op_norm_adjoint_invariant(seed, n):
    g = np.random.default_rng(seed)
    A = g.standard_normal((n, n)) + 1j * g.standard_normal((n, n))
    assert op_norm(adjoint(A)) == pytest.approx(op_norm(A), rel=1e-11, abs=1e-12)
    assert frob(A) ** 2 == pytest.approx(np.sum(np.abs(A) ** 2), rel=1e-12)
