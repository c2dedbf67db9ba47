"""Numerical range quantities: radius, Crawford number, boundary, attaining set.

For a square complex matrix T the numerical range W(T) = { <Tx, x> : ||x|| = 1 }
is convex and compact.  All quantities here reduce to the Hermitian pencil

    H_theta = (e^{-i theta} T + e^{i theta} T*) / 2,

whose extreme eigenvalues are the support function of W(T):
lam_max(H_theta) = max { Re(e^{-i theta} z) : z in W(T) }.  Consequently

    w(T) = max_theta lam_max(H_theta),      (numerical radius)
    c(T) = max(0, max_theta lam_min(H_theta)),  (Crawford number)

the first because |z| = max_theta Re(e^{-i theta} z), the second because the
distance from the origin to a convex set is the best separating margin over
all directions.  Both identities are standard support-function facts; the
radius one is exercised against a brute-force sphere-search oracle in the
test suite rather than taken on faith.

theta -> lam_max(H_theta) is Lipschitz with constant ||T||, which is what
makes the grid-plus-refinement sweep trustworthy.

Real-tagged matrices use real_radius: over the real field w is a maximum of
|<Tx, x>| = |<Sx, x>| for the symmetric part S, hence an extreme eigenvalue
of S, and it degenerates to a pseudo-norm (skew-symmetric T has w = 0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sweep
from .errors import NoConvergence, NotComplex, NotReal, ValidationError, ZeroRadius
from .matcore import FIELD_COMPLEX, FIELD_REAL, CMatrix, as_cmatrix, frob, herm_eig, _require_square

DEFAULT_GRID = sweep.DEFAULT_GRID

# Relative eigenvalue gap below which the top eigenspace of a pencil is
# treated as degenerate and kept whole.
_EIG_CLUSTER = 1e-8
# Fraction of grid angles that must attain the radius before the attaining
# set is treated as the full circle.
_ALL_ANGLES_FRACTION = 0.95
_MERGE_STEPS = 3


def _radius_tol(A: CMatrix, tol: float | None) -> float:
    return (1e-9 * (1.0 + frob(A))) if tol is None else float(tol)


def _require_complex(A: CMatrix, op: str) -> None:
    if A.field != FIELD_COMPLEX:
        raise NotComplex(f"{op} requires a complex-tagged matrix; real matrices use real_radius")


@dataclass(frozen=True)
class RadiusCertificate:
    """Numerical radius together with an attaining witness.

    value       the computed radius w(T)
    theta_star  angle at which the support function attains it
    witness     unit vector with |<T witness, witness>| = value (within residual)
    residual    | |<T witness, witness>| - value |
    """

    value: float
    theta_star: float
    witness: np.ndarray
    residual: float


@dataclass(frozen=True)
class AttainingComponent:
    """One connected piece of the attaining set: angle, support value, basis.

    basis holds an orthonormal basis (columns) of the top eigenspace of
    H_angle; every unit vector in its span attains |<Tx, x>| = w at phase angle.
    """

    angle: float
    value: float
    basis: np.ndarray


@dataclass(frozen=True)
class AttainingSet:
    """Materialized attaining set M_w(T) as a union of eigenspace components."""

    w: float
    components: tuple[AttainingComponent, ...]
    all_angles: bool
    attain_tol: float


@dataclass(frozen=True)
class RealRadius:
    """Real-field radius with the attaining eigenspaces of the symmetric part.

    plus_basis spans the eigenspace of (T + T^t)/2 at +w, minus_basis the one
    at -w; either may be empty (shape (n, 0)).
    """

    w: float
    plus_basis: np.ndarray
    minus_basis: np.ndarray


def herm_pencil(T, theta: float) -> CMatrix:
    """(e^{-i theta} T + e^{i theta} T*) / 2, symmetrized exactly."""
    A = as_cmatrix(T)
    _require_square(A, "herm_pencil")
    X = np.exp(-1j * float(theta)) * A.data
    return CMatrix(0.5 * (X + X.conj().T), FIELD_COMPLEX)


def radius(T, radius_tol: float | None = None, n_grid: int = DEFAULT_GRID) -> RadiusCertificate:
    """Numerical radius of a complex square matrix, with witness.

    Sweeps lam_max(H_theta) on a coarse uniform grid, then refines every
    candidate bracket by golden section.  The witness is the top eigenvector
    of the pencil at the best angle.

    Raises NotSquare / NotComplex on bad input and NoConvergence if the
    witness fails to reproduce the claimed value within radius_tol.
    """
    A = as_cmatrix(T)
    _require_square(A, "radius")
    _require_complex(A, "radius")
    tol = _radius_tol(A, radius_tol)

    scan = sweep.support_scan(A.data, n_grid=n_grid)
    w = float(scan.value)
    H = herm_pencil(A, scan.theta_star)
    vals, vecs = np.linalg.eigh(H.data)
    x = np.ascontiguousarray(vecs[:, -1])
    q = complex(np.vdot(x, A.data @ x))
    residual = abs(abs(q) - w)
    if residual > tol:
        raise NoConvergence(
            f"radius witness residual {residual:.3e} exceeds tolerance {tol:.3e}"
        )
    x.setflags(write=False)
    return RadiusCertificate(value=w, theta_star=float(scan.theta_star), witness=x, residual=residual)


def crawford(T, tol: float = 0.0, n_grid: int = DEFAULT_GRID) -> float:
    """Crawford number c(T) = distance from the origin to W(T).

    Equals max(0, max_theta lam_min(H_theta)); maxima not exceeding tol are
    reported as exactly 0.  Accepts either field tag (the range is taken over
    complex unit vectors regardless).
    """
    A = as_cmatrix(T)
    _require_square(A, "crawford")
    scan = sweep.min_eig_scan(A.data, n_grid=n_grid)
    best = float(scan.value)
    return best if best > tol else 0.0


def range_boundary(T, samples: int) -> list[tuple[float, complex]]:
    """Boundary samples of W(T): (theta, <T x_theta, x_theta>) on a uniform grid.

    x_theta is a top eigenvector of H_theta, so each point is a boundary point
    of W(T) in the support direction e^{i theta}.  Angles ascend; samples >= 3.
    """
    A = as_cmatrix(T)
    _require_square(A, "range_boundary")
    samples = int(samples)
    if samples < 3:
        raise ValidationError(f"range_boundary needs samples >= 3, got {samples}")
    thetas = np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False)
    H = sweep.pencil_stack(A.data, thetas)
    _, vecs = np.linalg.eigh(H)
    X = vecs[:, :, -1]
    pts = np.einsum("ki,ij,kj->k", X.conj(), A.data, X)
    return [(float(t), complex(z)) for t, z in zip(thetas, pts)]


def _top_cluster_bases(A: np.ndarray, angles: np.ndarray, w: float):
    """Top eigenspace basis of H_angle for each angle, clustering near-ties."""
    H = sweep.pencil_stack(A, angles)
    vals, vecs = np.linalg.eigh(H)
    gap = _EIG_CLUSTER * (1.0 + abs(w))
    out = []
    for k in range(len(angles)):
        top = vals[k, -1]
        keep = vals[k] >= top - gap
        out.append((float(top), vecs[k][:, keep]))
    return out


def attaining_set(T, attain_tol: float | None = None, n_grid: int = DEFAULT_GRID) -> AttainingSet:
    """Attaining set of the numerical radius as eigenspace components.

    Angles phi with lam_max(H_phi) within attain_tol of w(T) contribute the
    top eigenspace of H_phi.  Nearby angles (within 3 grid steps) merge into
    one component represented at the best angle.  When at least 95% of the
    grid attains (disc-like ranges) the whole grid is kept. Raises ZeroRadius
    when w(T) <= attain_tol, where phases carry no information.
    """
    A = as_cmatrix(T)
    _require_square(A, "attaining_set")
    _require_complex(A, "attaining_set")

    scan = sweep.support_scan(A.data, n_grid=n_grid)
    w = float(scan.value)
    tol = (1e-7 * (1.0 + w)) if attain_tol is None else float(attain_tol)
    if w <= tol:
        raise ZeroRadius(f"numerical radius {w:.3e} not above attain_tol {tol:.3e}")

    near = scan.grid_values >= w - tol
    all_angles = bool(np.mean(near) >= _ALL_ANGLES_FRACTION)
    if all_angles:
        angles = scan.grid_thetas
        bases = _top_cluster_bases(A.data, angles, w)
        comps = tuple(
            AttainingComponent(angle=float(t), value=v, basis=b)
            for t, (v, b) in zip(angles, bases)
        )
        return AttainingSet(w=w, components=comps, all_angles=True, attain_tol=tol)

    cands = [(ang, val) for ang, val in scan.peaks if val >= w - tol]
    if not cands:
        cands = [(float(scan.theta_star), w)]
    cands.sort()
    # Merge candidates closer than 3 grid steps, circularly; keep the best angle.
    merge_dist = _MERGE_STEPS * (2.0 * math.pi / n_grid)
    clusters: list[list[tuple[float, float]]] = [[cands[0]]]
    for ang, val in cands[1:]:
        if ang - clusters[-1][-1][0] <= merge_dist:
            clusters[-1].append((ang, val))
        else:
            clusters.append([(ang, val)])
    if len(clusters) > 1:
        first, last = clusters[0], clusters[-1]
        if (first[0][0] + 2.0 * math.pi) - last[-1][0] <= merge_dist:
            clusters[0] = last + first
            clusters.pop()
    reps = [max(cl, key=lambda av: (av[1], -av[0])) for cl in clusters]
    reps.sort()
    angles = np.array([a for a, _ in reps])
    bases = _top_cluster_bases(A.data, angles, w)
    comps = tuple(
        AttainingComponent(angle=float(t), value=v, basis=b)
        for t, (v, b) in zip(angles, bases)
    )
    return AttainingSet(w=w, components=comps, all_angles=False, attain_tol=tol)


def real_radius(T) -> RealRadius:
    """Real-field numerical radius with the +w / -w eigenspaces.

    Over the real field <Tx, x> = <Sx, x> for S = (T + T^t)/2, so w is the
    largest eigenvalue magnitude of S and the attaining set is spanned by the
    eigenspaces at +w and -w (whichever exist).
    """
    A = as_cmatrix(T)
    _require_square(A, "real_radius")
    if A.field != FIELD_REAL:
        raise NotReal("real_radius requires a real-tagged matrix")
    S = 0.5 * (A.data.real + A.data.real.T)
    dec = herm_eig(CMatrix(S))
    vals = dec.values
    w = float(max(vals[-1], -vals[0], 0.0))
    n = S.shape[0]
    if w == 0.0:
        empty = np.zeros((n, 0))
        return RealRadius(w=0.0, plus_basis=empty, minus_basis=empty)
    ctol = _EIG_CLUSTER * (1.0 + w)
    vecs = dec.vectors.real
    plus = vecs[:, vals >= w - ctol]
    minus = vecs[:, vals <= -w + ctol]
    return RealRadius(w=w, plus_basis=plus, minus_basis=minus)
