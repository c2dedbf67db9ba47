import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numrad.errors import NoConvergence, NotComplex, NotSquare, ValidationError, ZeroRadius
from numrad.matcore import CMatrix, herm_eig, op_norm
from numrad.range import (
    attaining_set,
    crawford,
    herm_pencil,
    radius,
    range_boundary,
    real_radius,
)

rng = np.random.default_rng(31415)


def _rand_complex(n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def brute_radius(A, starts=30, iters=80):
    """Eigensolver-free lower oracle: shifted power ascent on |<Ax,x>|.

    Every iterate is a unit vector, so the returned value never exceeds w(A).
    """
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    shift = 2.0 * np.linalg.norm(A, 2) + 1.0
    g = np.random.default_rng(987)
    best = 0.0
    for _ in range(starts):
        x = g.standard_normal(n) + 1j * g.standard_normal(n)
        x /= np.linalg.norm(x)
        for _ in range(iters):
            q = np.vdot(x, A @ x)
            phase = q / abs(q) if abs(q) > 0 else 1.0
            y = np.conj(phase) * (A @ x) + phase * (A.conj().T @ x) + shift * x
            nx = np.linalg.norm(y)
            if nx == 0.0:
                break
            x = y / nx
        best = max(best, abs(np.vdot(x, A @ x)))
    return best


def _circ_close(a, b, tol=1e-6):
    d = (a - b) % (2.0 * math.pi)
    return min(d, 2.0 * math.pi - d) <= tol


def test_radius_nilpotent():
    cert = radius(CMatrix.complex([[0, 1], [0, 0]]))
    assert cert.value == pytest.approx(0.5, abs=1e-10)
    assert abs(np.vdot(cert.witness, np.array([[0, 1], [0, 0]]) @ cert.witness)) == pytest.approx(
        0.5, abs=1e-9
    )


def test_radius_normal_equals_spectral_radius():
    for _ in range(10):
        eigs = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        Q, _ = np.linalg.qr(_rand_complex(4))
        T = Q @ np.diag(eigs) @ Q.conj().T
        assert radius(T).value == pytest.approx(np.max(np.abs(eigs)), rel=1e-9)


def test_radius_hermitian_equals_norm():
    B = _rand_complex(5)
    H = B + B.conj().T
    assert radius(H).value == pytest.approx(op_norm(H), rel=1e-10)


def test_radius_rank_one_formula():
    # w(u v*) = (|<u,v>| + ||u|| ||v||) / 2
    for _ in range(10):
        u = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        T = np.outer(u, v.conj())
        want = 0.5 * (abs(np.vdot(v, u)) + np.linalg.norm(u) * np.linalg.norm(v))
        assert radius(T).value == pytest.approx(want, rel=1e-9)


def test_radius_one_by_one():
    cert = radius(CMatrix.complex([[3 - 4j]]))
    assert cert.value == pytest.approx(5.0, abs=1e-12)
    assert _circ_close(cert.theta_star, math.atan2(-4, 3) % (2 * math.pi), tol=1e-6)


def test_radius_witness_contract():
    T = _rand_complex(5)
    cert = radius(T)
    assert np.linalg.norm(cert.witness) == pytest.approx(1.0, abs=1e-12)
    assert cert.residual <= 1e-7 * (1 + cert.value)
    q = np.vdot(cert.witness, T @ cert.witness)
    assert abs(q) == pytest.approx(cert.value, abs=1e-9)
    assert _circ_close(cert.theta_star, np.angle(q) % (2 * math.pi), tol=1e-5)


def test_radius_input_validation():
    with pytest.raises(NotSquare):
        radius(np.ones((2, 3), dtype=complex))
    with pytest.raises(NotComplex):
        radius(CMatrix.real([[1, 0], [0, 1]]))
    with pytest.raises(NoConvergence):
        radius(_rand_complex(3), radius_tol=1e-30)


def test_radius_against_brute_oracle():
    for n in (2, 3, 4):
        for _ in range(6):
            T = _rand_complex(n)
            w = radius(T).value
            lower = brute_radius(T)
            assert w >= lower - 1e-6
            assert w - lower < 1e-3


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), scale=st.floats(0.01, 100.0), phase=st.floats(0.0, 6.28))
def test_radius_absolute_homogeneity(seed, scale, phase):
    g = np.random.default_rng(seed)
    T = g.standard_normal((3, 3)) + 1j * g.standard_normal((3, 3))
    c = scale * np.exp(1j * phase)
    assert radius(c * T).value == pytest.approx(scale * radius(T).value, rel=1e-9, abs=1e-12)


def test_herm_pencil_closed_forms():
    T = _rand_complex(3)
    H0 = herm_pencil(T, 0.0)
    assert np.allclose(H0.data, (T + T.conj().T) / 2)
    Hq = herm_pencil(T, math.pi / 2)
    assert np.allclose(Hq.data, (-1j * T + 1j * T.conj().T) / 2)
    # support identity at one angle: lam_max(H_theta) <= w(T)
    w = radius(T).value
    assert herm_eig(H0).values[-1] <= w + 1e-9


def test_crawford_cases():
    assert crawford(CMatrix.complex(np.eye(2))) == pytest.approx(1.0, abs=1e-10)
    assert crawford(CMatrix.complex([[0, 1], [0, 0]])) == 0.0
    assert crawford(CMatrix.complex([[1, 0], [0, -1]])) == 0.0
    assert crawford(CMatrix.complex([[2, 0], [0, 3]])) == pytest.approx(2.0, abs=1e-9)
    T = _rand_complex(4)
    assert crawford(T) <= radius(T).value + 1e-9


def test_crawford_accepts_real_tag():
    assert crawford(CMatrix.real([[2, 0], [0, 2]])) == pytest.approx(2.0, abs=1e-10)


def test_boundary_nilpotent_circle():
    pts = range_boundary(CMatrix.complex([[0, 1], [0, 0]]), 360)
    assert len(pts) == 360
    assert all(abs(abs(z) - 0.5) <= 1e-8 for _, z in pts)
    ths = [t for t, _ in pts]
    assert ths == sorted(ths)


def test_boundary_normal_triangle_vertices():
    T = CMatrix.complex(np.diag([1.0, 1j, -1.0]))
    pts = [z for _, z in range_boundary(T, 720)]
    for v in (1.0, 1j, -1.0):
        assert min(abs(z - v) for z in pts) <= 1e-8


def test_boundary_stays_inside_range():
    T = _rand_complex(4)
    w = radius(T).value
    pts = range_boundary(T, 128)
    assert max(abs(z) for _, z in pts) <= w + 1e-8


def test_boundary_sample_validation():
    with pytest.raises(ValidationError):
        range_boundary(np.eye(2, dtype=complex), 2)


def test_attaining_set_nilpotent_all_angles():
    aset = attaining_set(CMatrix.complex([[0, 1], [0, 0]]))
    assert aset.all_angles
    assert aset.w == pytest.approx(0.5, abs=1e-9)
    for comp in aset.components[:5]:
        v = np.array([1.0, np.exp(1j * comp.angle)]) / math.sqrt(2)
        proj = comp.basis @ (comp.basis.conj().T @ v)
        assert np.linalg.norm(proj - v) <= 1e-7


def test_attaining_set_two_point_spectrum():
    T = CMatrix.complex(np.diag([2.0, 2.0 * np.exp(1j * math.pi / 3)]))
    aset = attaining_set(T)
    assert not aset.all_angles
    angles = [c.angle for c in aset.components]
    assert len(angles) == 2
    assert any(_circ_close(a, 0.0) for a in angles)
    assert any(_circ_close(a, math.pi / 3) for a in angles)


def test_attaining_set_zero_matrix():
    with pytest.raises(ZeroRadius):
        attaining_set(CMatrix.complex(np.zeros((2, 2))))


def test_real_radius_symmetric_split():
    S = CMatrix.real([[3.0, 0.0], [0.0, -1.0]])
    rr = real_radius(S)
    assert rr.w == pytest.approx(3.0, abs=1e-12)
    assert rr.plus_basis.shape[1] == 1 and rr.minus_basis.shape[1] == 0
    assert abs(rr.plus_basis[0, 0]) == pytest.approx(1.0, abs=1e-12)


def test_real_radius_skew_degenerate():
    rr = real_radius(CMatrix.real([[0, 1], [-1, 0]]))
    assert rr.w == 0.0
    assert rr.plus_basis.shape == (2, 0) and rr.minus_basis.shape == (2, 0)


def test_real_radius_matches_symmetric_part():
    for _ in range(8):
        T = rng.standard_normal((4, 4))
        rr = real_radius(CMatrix.real(T))
        vals = np.linalg.eigvalsh((T + T.T) / 2)
        assert rr.w == pytest.approx(max(vals[-1], -vals[0], 0.0), abs=1e-10)
        assert not np.iscomplexobj(rr.plus_basis)
