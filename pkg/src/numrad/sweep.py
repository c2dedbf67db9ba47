"""Batched angle-sweep machinery shared by the range and orthogonality modules.

Everything here works on raw complex ndarrays for speed; the public modules
wrap the results in their own types.  The central objects are the Hermitian
pencil H_theta = (e^{-i theta} T + e^{i theta} T*) / 2 evaluated on stacks of
angles, and a lockstep golden-section refiner that polishes many brackets with
one batched eigenvalue call per iteration.

theta -> lam_max(H_theta) is the support function of the numerical range in
the direction e^{i theta}; it is Lipschitz in theta with constant ||T||.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = 1.0 - _INVPHI

DEFAULT_GRID = 1024
REFINE_WIDTH = 1e-12
_MAX_PEAKS = 64


def pencil_stack(T: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """Hermitian pencil stack, shape (len(thetas), n, n), symmetrized exactly."""
    X = np.exp(-1j * thetas)[:, None, None] * T[None, :, :]
    return 0.5 * (X + np.conj(np.swapaxes(X, -1, -2)))


def eig_extremes(H: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(lam_min, lam_max) along the last two axes of a Hermitian stack.

    Closed forms for 1x1 and 2x2 blocks; LAPACK otherwise.
    """
    n = H.shape[-1]
    if n == 1:
        d = H[..., 0, 0].real
        return d, d
    if n == 2:
        a = H[..., 0, 0].real
        c = H[..., 1, 1].real
        mid = 0.5 * (a + c)
        rad = np.hypot(0.5 * (a - c), np.abs(H[..., 0, 1]))
        return mid - rad, mid + rad
    vals = np.linalg.eigvalsh(H)
    return vals[..., 0], vals[..., -1]


def lam_max(H: np.ndarray) -> np.ndarray:
    return eig_extremes(H)[1]


def lam_min(H: np.ndarray) -> np.ndarray:
    return eig_extremes(H)[0]


def golden_max(value_fn, a: np.ndarray, b: np.ndarray, width: float):
    """Lockstep golden-section maximization over brackets [a_i, b_i].

    value_fn maps an angle array to a value array; it is called once per
    iteration on the full batch.  Returns (x_best, f_best) per bracket.
    """
    a = np.asarray(a, dtype=float).copy()
    b = np.asarray(b, dtype=float).copy()
    h0 = float(np.max(b - a))
    if h0 <= width:
        f = value_fn(a)
        return a, f
    x1 = a + _INVPHI2 * (b - a)
    x2 = a + _INVPHI * (b - a)
    f1 = value_fn(x1)
    f2 = value_fn(x2)
    iters = int(math.ceil(math.log(h0 / width) / math.log(1.0 / _INVPHI)))
    for _ in range(iters):
        right = f2 > f1
        a = np.where(right, x1, a)
        b = np.where(right, b, x2)
        old_x1, old_f1 = x1, f1
        x1 = np.where(right, x2, a + _INVPHI2 * (b - a))
        x2 = np.where(right, a + _INVPHI * (b - a), old_x1)
        f1 = np.where(right, f2, f1)
        f2 = np.where(right, f2, old_f1)
        fresh = np.where(right, x2, x1)
        ff = value_fn(fresh)
        f1 = np.where(right, f1, ff)
        f2 = np.where(right, ff, f2)
    pick1 = f1 >= f2
    return np.where(pick1, x1, x2), np.where(pick1, f1, f2)


@dataclass(frozen=True)
class AngleScan:
    """Result of a maximize-over-angles pass."""

    theta_star: float
    value: float
    grid_thetas: np.ndarray
    grid_values: np.ndarray
    peaks: tuple[tuple[float, float], ...]  # refined (angle, value), ascending angle


def _local_maxima_mask(vals: np.ndarray) -> np.ndarray:
    return (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))


def angle_maximize(
    value_fn,
    lipschitz: float,
    n_grid: int = DEFAULT_GRID,
    refine_width: float = REFINE_WIDTH,
) -> AngleScan:
    """Maximize a periodic, Lipschitz value function over [0, 2pi).

    Coarse uniform grid, then golden-section refinement of every bracket
    around a grid-local maximum that could still contain the global maximum
    (value within lipschitz * 2 * spacing of the grid best, capped).
    """
    thetas = np.linspace(0.0, 2.0 * math.pi, int(n_grid), endpoint=False)
    vals = value_fn(thetas)
    spacing = 2.0 * math.pi / n_grid
    grid_best = float(np.max(vals))

    mask = _local_maxima_mask(vals)
    margin = abs(lipschitz) * 2.0 * spacing
    mask &= vals >= grid_best - margin
    idx = np.nonzero(mask)[0]
    if idx.size > _MAX_PEAKS:
        keep = np.argsort(vals[idx], kind="stable")[::-1][:_MAX_PEAKS]
        idx = np.sort(idx[keep])

    peaks: list[tuple[float, float]] = []
    if idx.size:
        a = thetas[idx] - spacing
        b = thetas[idx] + spacing
        x, f = golden_max(value_fn, a, b, refine_width)
        x = np.mod(x, 2.0 * math.pi)
        peaks = sorted(zip(x.tolist(), f.tolist()))

    # Global best: refined peaks against the raw grid, smallest angle on ties.
    best_theta = float(thetas[int(np.argmax(vals))])
    best_value = grid_best
    for ang, val in peaks:
        if val > best_value or (val == best_value and ang < best_theta):
            best_theta, best_value = ang, val
    return AngleScan(
        theta_star=best_theta,
        value=best_value,
        grid_thetas=thetas,
        grid_values=vals,
        peaks=tuple(peaks),
    )


def support_scan(T: np.ndarray, n_grid: int = DEFAULT_GRID) -> AngleScan:
    """Scan of theta -> lam_max(H_theta), i.e. the support function of W(T)."""
    lip = float(np.linalg.norm(T))

    def fn(th: np.ndarray) -> np.ndarray:
        return lam_max(pencil_stack(T, th))

    return angle_maximize(fn, lip, n_grid=n_grid)


def min_eig_scan(T: np.ndarray, n_grid: int = DEFAULT_GRID) -> AngleScan:
    """Scan maximizing theta -> lam_min(H_theta); feeds the Crawford number."""
    lip = float(np.linalg.norm(T))

    def fn(th: np.ndarray) -> np.ndarray:
        return lam_min(pencil_stack(T, th))

    return angle_maximize(fn, lip, n_grid=n_grid)


def polygon_upper(grid_values: np.ndarray) -> np.ndarray:
    """Certified upper bound on max |z| over W from uniform-grid support values.

    W lies in the intersection of the half-planes Re(e^{-i theta_k} z) <= h_k;
    the farthest point of that polygon from the origin is one of its vertices.
    Works on a batch: grid_values has shape (..., N) for a uniform angle grid.
    """
    h = np.asarray(grid_values, dtype=float)
    N = h.shape[-1]
    delta = 2.0 * math.pi / N
    hn = np.roll(h, -1, axis=-1)
    y = (hn - h * math.cos(delta)) / math.sin(delta)
    return np.sqrt(np.max(h * h + y * y, axis=-1))


def batched_radius_bounds(
    mats: np.ndarray,
    n_grid: int = 128,
    refine_width: float = 1e-10,
    top_brackets: int = 2,
) -> tuple[np.ndarray, np.ndarray]:
    """Certified (lower, upper) bounds on the numerical radius of a matrix stack.

    Lower bound: best refined support value over the top grid-local maxima of
    each matrix (any single angle gives a valid lower bound).  Upper bound:
    the circumscribed support polygon.  One coarse batched eigenvalue call
    plus one batched call per golden iteration, shared across the whole stack.
    """
    mats = np.asarray(mats, dtype=np.complex128)
    P, n, _ = mats.shape
    thetas = np.linspace(0.0, 2.0 * math.pi, n_grid, endpoint=False)
    spacing = 2.0 * math.pi / n_grid

    ph = np.exp(-1j * thetas)[None, :, None, None]
    X = ph * mats[:, None, :, :]
    H = 0.5 * (X + np.conj(np.swapaxes(X, -1, -2)))
    vals = lam_max(H.reshape(P * n_grid, n, n)).reshape(P, n_grid)

    hi = polygon_upper(vals)
    lo = np.max(vals, axis=-1)

    k = min(top_brackets, n_grid)
    neigh = np.maximum(np.roll(vals, 1, axis=-1), np.roll(vals, -1, axis=-1))
    masked = np.where(vals >= neigh, vals, -np.inf)
    top_idx = np.argsort(masked, axis=-1, kind="stable")[:, ::-1][:, :k]

    centers = thetas[top_idx]  # (P, k)
    a = (centers - spacing).ravel()
    b = (centers + spacing).ravel()
    rows = np.repeat(np.arange(P), k)

    def fn(th: np.ndarray) -> np.ndarray:
        Xs = np.exp(-1j * th)[:, None, None] * mats[rows]
        Hs = 0.5 * (Xs + np.conj(np.swapaxes(Xs, -1, -2)))
        return lam_max(Hs)

    _, f = golden_max(fn, a, b, refine_width)
    lo = np.maximum(lo, np.max(f.reshape(P, k), axis=-1))
    return lo, np.maximum(hi, lo)
