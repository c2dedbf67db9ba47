"""Birkhoff-James orthogonality deciders for the numerical radius and the norm.

T is numerical-radius orthogonal to A (T perp_w A) when w(T + lam A) >= w(T)
for every scalar lam of the ground field.  The deciders come in two
independent flavors:

* ortho_w: characterization through the attaining set.  For complex matrices
  T perp_w A holds iff for every theta in [0, 2pi) some radius-attaining unit
  vector x (so <Tx, x> = w e^{i phi}) satisfies

      Re( e^{-i theta} <Tx, x> conj(<Ax, x>) ) >= 0.

  Writing x = V c over an orthonormal basis V of the attaining eigenspace at
  phi, the best achievable value at theta is

      p(theta) = w * max_phi lam_max( pencil( V* A V, phi - theta ) ),

  so the decision reduces to certifying p >= 0 on the circle.  p is Lipschitz
  in theta with constant w * max_phi ||V* A V||, which turns a finite grid
  check into a proof; undecided intervals are bisected down to a width floor.

* ortho_w_definitional: direct convex minimization of f(lam) = w(T + lam A).
  f is convex (w is a seminorm), so probing a fan of directions with a
  geometric radius ladder and certified radius bounds settles whether any
  probe achieves f(lam) < f(0) - tol.

ortho_w_real implements the real-field characterization: with M_w spanned by
the +w / -w eigenspaces of the symmetric part, T perp_w A iff some attaining x
has <Tx, x><Ax, x> >= 0 AND some attaining y has <Ty, y><Ay, y> <= 0, which
reduces to eigenvalue signs of compressions of (A + A^t)/2.

ortho_b decides ordinary operator-norm orthogonality with the same convex
descent engine applied to f(lam) = ||T + lam A||.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import sweep
from .errors import (
    DimensionMismatch,
    NotComplex,
    NotReal,
    ValidationError,
    ZeroRadius,
)
from .matcore import (
    FIELD_COMPLEX,
    FIELD_REAL,
    CMatrix,
    as_cmatrix,
    frob,
    herm_eig,
    op_norm,
    _require_square,
)
from .range import attaining_set, radius, real_radius

CHARACTERIZATION = "characterization"
DEFINITIONAL = "definitional"

_CERT_GRID = 720
_CERT_FLOOR = 1e-12
_CERT_MAX_EVALS = 2_000_000
_N_DIRECTIONS = 16
_PROBE_FLOOR = 1e-8
_MARGINAL_BAND = 10.0


@dataclass(frozen=True)
class OrthoWitness:
    """Attaining vector certifying the orthogonality condition at one angle."""

    theta: float
    phi: float
    vector: np.ndarray
    t_form: complex  # <T x, x>
    a_form: complex  # <A x, x>


@dataclass(frozen=True)
class Counterexample:
    """Violation record: a failing circle angle or a norm-decreasing scalar."""

    margin: float
    theta: float | None = None
    lam: complex | None = None


@dataclass(frozen=True)
class OrthoVerdict:
    orthogonal: bool
    method: str
    witnesses: tuple[OrthoWitness, ...]
    counterexample: Counterexample | None
    margin: float  # distance of the decision statistic from its threshold
    marginal: bool  # true when the decision sits inside the noise band


def _default_tol(scale: float, tol: float | None) -> float:
    return (1e-7 * (1.0 + scale)) if tol is None else float(tol)


def _check_pair(T, A, field: str | None = None) -> tuple[CMatrix, CMatrix]:
    Tm, Am = as_cmatrix(T), as_cmatrix(A)
    _require_square(Tm, "orthogonality")
    _require_square(Am, "orthogonality")
    if Tm.rows != Am.rows:
        raise DimensionMismatch(f"operands are {Tm.rows}x{Tm.cols} and {Am.rows}x{Am.cols}")
    if Tm.field != Am.field:
        raise ValidationError(f"field tags differ: {Tm.field} vs {Am.field}")
    if field == FIELD_COMPLEX and Tm.field != FIELD_COMPLEX:
        raise NotComplex("complex-field decider; real pairs use ortho_w_real")
    if field == FIELD_REAL and Tm.field != FIELD_REAL:
        raise NotReal("real-field decider; complex pairs use ortho_w")
    return Tm, Am


def _trivial(method: str) -> OrthoVerdict:
    return OrthoVerdict(
        orthogonal=True,
        method=method,
        witnesses=(),
        counterexample=None,
        margin=0.0,
        marginal=False,
    )


# ---------------------------------------------------------------------------
# characterization decider (complex field)


class _Compressions:
    """Per-component compressions V* A V with a batched evaluator for p(theta)."""

    def __init__(self, comps, A: np.ndarray, w: float):
        self.w = w
        self.angles = np.array([c.angle for c in comps])
        self.blocks = [c.basis.conj().T @ A @ c.basis for c in comps]
        self.bases = [c.basis for c in comps]
        self.lipschitz = w * max(
            (float(np.linalg.norm(b, 2)) for b in self.blocks), default=0.0
        )
        # group by block size for batched evaluation
        self._groups: list[tuple[np.ndarray, np.ndarray, np.ndarray]] = []
        by_k: dict[int, list[int]] = {}
        for i, b in enumerate(self.blocks):
            by_k.setdefault(b.shape[0], []).append(i)
        for k, idx in sorted(by_k.items()):
            self._groups.append(
                (
                    np.stack([self.blocks[i] for i in idx]),
                    self.angles[np.array(idx)],
                    np.array(idx),
                )
            )

    def _group_values(self, blocks: np.ndarray, angs: np.ndarray, thetas: np.ndarray) -> np.ndarray:
        k = blocks.shape[-1]
        psi = angs[:, None] - thetas[None, :]  # (m, K)
        if k == 1:
            return (np.exp(-1j * psi) * blocks[:, 0, 0][:, None]).real
        ph = np.exp(-1j * psi)[:, :, None, None]
        H = 0.5 * (
            ph * blocks[:, None, :, :]
            + np.conj(ph) * np.conj(np.swapaxes(blocks, -1, -2))[:, None, :, :]
        )
        m, K = psi.shape
        return sweep.lam_max(H.reshape(m * K, k, k)).reshape(m, K)

    def p_values(self, thetas: np.ndarray) -> np.ndarray:
        """p(theta) = w * max over components of lam_max(pencil(A_i, phi_i - theta))."""
        best = np.full(len(thetas), -np.inf)
        for blocks, angs, _ in self._groups:
            best = np.maximum(best, self._group_values(blocks, angs, thetas).max(axis=0))
        return self.w * best

    def best_witness(self, theta: float):
        """Component index and in-block unit vector achieving p(theta)."""
        th = np.array([theta])
        best_i, best_val = 0, -np.inf
        for blocks, angs, idx in self._groups:
            vals = self._group_values(blocks, angs, th)[:, 0]
            j = int(np.argmax(vals))
            if vals[j] > best_val:
                best_i, best_val = int(idx[j]), float(vals[j])
        H = sweep.pencil_stack(self.blocks[best_i], np.array([self.angles[best_i] - theta]))[0]
        _, vecs = np.linalg.eigh(H)
        return best_i, vecs[:, -1]


def ortho_w(T, A, ortho_tol: float | None = None) -> OrthoVerdict:
    """Decide T perp_w A for complex matrices via the attaining-set condition.

    Certifies p(theta) >= 0 over the whole circle by a Lipschitz grid argument
    (initial grid of 720 centers, bisection of undecided intervals down to a
    1e-12 width floor; survivors make the verdict 'marginal').  A center with
    p <= -ortho_tol is a counterexample angle; e^{i theta} is then a radius-
    decreasing perturbation direction.
    """
    Tm, Am = _check_pair(T, A, FIELD_COMPLEX)
    try:
        att = attaining_set(Tm)
    except ZeroRadius:
        return _trivial(CHARACTERIZATION)
    w = att.w
    tol = _default_tol(w, ortho_tol)
    if w <= tol:
        return _trivial(CHARACTERIZATION)

    comp = _Compressions(att.components, Am.data, w)
    centers = np.linspace(0.0, 2.0 * math.pi, _CERT_GRID, endpoint=False) + math.pi / _CERT_GRID
    half = math.pi / _CERT_GRID
    # multiplicative inflation only: zero compressions (p identically 0) must
    # certify on the first pass, not bisect to the floor
    lip = comp.lipschitz * (1.0 + 1e-9)

    min_seen = np.inf
    marginal = False
    evals = 0
    while centers.size:
        vals = comp.p_values(centers)
        evals += centers.size
        min_seen = min(min_seen, float(vals.min()))
        bad = vals <= -tol
        if np.any(bad):
            k = int(np.argmin(vals))
            margin = float(-vals[k]) - tol
            return OrthoVerdict(
                orthogonal=False,
                method=CHARACTERIZATION,
                witnesses=(),
                counterexample=Counterexample(margin=float(-vals[k]), theta=float(centers[k])),
                margin=margin,
                marginal=margin < _MARGINAL_BAND * tol,
            )
        undecided = vals < lip * half
        if not np.any(undecided):
            break
        if half <= _CERT_FLOOR or evals > _CERT_MAX_EVALS:
            marginal = True
            break
        c = centers[undecided]
        centers = np.concatenate([c - half / 2.0, c + half / 2.0])
        half /= 2.0

    witnesses = []
    for theta in (0.0, math.pi / 2.0, math.pi, 3.0 * math.pi / 2.0):
        i, cvec = comp.best_witness(theta)
        x = comp.bases[i] @ cvec
        x = x / np.linalg.norm(x)
        witnesses.append(
            OrthoWitness(
                theta=theta,
                phi=float(comp.angles[i]),
                vector=x,
                t_form=complex(np.vdot(x, Tm.data @ x)),
                a_form=complex(np.vdot(x, Am.data @ x)),
            )
        )
    stat = 0.0 if not np.isfinite(min_seen) else float(min_seen)
    return OrthoVerdict(
        orthogonal=True,
        method=CHARACTERIZATION,
        witnesses=tuple(witnesses),
        counterexample=None,
        margin=stat,
        marginal=marginal or abs(stat) < _MARGINAL_BAND * tol,
    )


# ---------------------------------------------------------------------------
# real-field characterization


def _compress_sym(basis: np.ndarray, S: np.ndarray):
    if basis.shape[1] == 0:
        return None
    C = basis.T @ S @ basis
    dec = herm_eig(CMatrix(0.5 * (C + C.T)))
    return dec


def ortho_w_real(T, A, ortho_tol: float | None = None) -> OrthoVerdict:
    """Decide T perp_w A over the real field.

    With E+ and E- the eigenspaces of (T + T^t)/2 at +w and -w, the relation
    holds iff both of these sign conditions are met by compressions of
    (A + A^t)/2:

      (some attaining x) <Tx,x><Ax,x> >= 0:  max eig on E+ >= 0  or  min eig on E- <= 0
      (some attaining y) <Ty,y><Ay,y> <= 0:  min eig on E+ <= 0  or  max eig on E- >= 0

    Comparisons run at ortho_tol slack; the margin is reported on the product
    scale w * <Ax, x>.
    """
    Tm, Am = _check_pair(T, A, FIELD_REAL)
    rr = real_radius(Tm)
    w = rr.w
    tol = _default_tol(w, ortho_tol)
    if w <= tol:
        return _trivial(CHARACTERIZATION)

    S_A = 0.5 * (Am.data.real + Am.data.real.T)
    plus = _compress_sym(rr.plus_basis, S_A)
    minus = _compress_sym(rr.minus_basis, S_A)

    # q2 tracks condition (some product >= 0), q3 the mirrored one; each is a
    # max over the branches that exist.
    q2_parts, q3_parts = [], []
    if plus is not None:
        q2_parts.append(float(plus.values[-1]))
        q3_parts.append(float(-plus.values[0]))
    if minus is not None:
        q2_parts.append(float(-minus.values[0]))
        q3_parts.append(float(minus.values[-1]))
    q2, q3 = max(q2_parts), max(q3_parts)
    ok = (q2 >= -tol) and (q3 >= -tol)
    stat = w * min(q2, q3)

    def vec_for(dec, basis, want_max: bool):
        col = -1 if want_max else 0
        v = basis @ dec.vectors[:, col].real
        return v / np.linalg.norm(v)

    witnesses = []
    if ok:
        # witness for each condition, from whichever branch achieved it
        if plus is not None and float(plus.values[-1]) == q2:
            x = vec_for(plus, rr.plus_basis, True)
            phi = 0.0
        else:
            x = vec_for(minus, rr.minus_basis, False)
            phi = math.pi
        witnesses.append(
            OrthoWitness(
                theta=0.0,
                phi=phi,
                vector=x,
                t_form=complex(x @ (Tm.data.real @ x)),
                a_form=complex(x @ (Am.data.real @ x)),
            )
        )
        if plus is not None and float(-plus.values[0]) == q3:
            y = vec_for(plus, rr.plus_basis, False)
            phi = 0.0
        else:
            y = vec_for(minus, rr.minus_basis, True)
            phi = math.pi
        witnesses.append(
            OrthoWitness(
                theta=math.pi,
                phi=phi,
                vector=y,
                t_form=complex(y @ (Tm.data.real @ y)),
                a_form=complex(y @ (Am.data.real @ y)),
            )
        )
        counter = None
    else:
        # the failed side tells which real direction shrinks the radius
        lam_dir = 1.0 if q2 < -tol else -1.0
        counter = Counterexample(margin=w * abs(min(q2, q3)), lam=complex(lam_dir))
    return OrthoVerdict(
        orthogonal=ok,
        method=CHARACTERIZATION,
        witnesses=tuple(witnesses),
        counterexample=counter,
        margin=stat,
        marginal=abs(stat) < _MARGINAL_BAND * tol,
    )


def zero_witness(T, A, tol: float | None = None) -> np.ndarray | None:
    """Unit radius-attaining vector z of real T with <Az, z> = 0, if one exists.

    Searches the +w then the -w eigenspace of the symmetric part of T.  Inside
    a component with compression C of (A + A^t)/2, a witness exists iff
    lam_min(C) <= 0 <= lam_max(C) (the compressed range is an interval); it is
    built by mixing extreme eigenvectors so the form cancels exactly.
    Sufficient for T perp_w A, not necessary.  Returns None when both
    components have strictly one-signed compressions.
    """
    Tm, Am = _check_pair(T, A, FIELD_REAL)
    rr = real_radius(Tm)
    if rr.w <= 0.0:
        raise ZeroRadius("zero_witness needs w(T) > 0")
    gate = (1e-7 * (1.0 + frob(Am))) if tol is None else float(tol)
    S_A = 0.5 * (Am.data.real + Am.data.real.T)
    for basis in (rr.plus_basis, rr.minus_basis):
        dec = _compress_sym(basis, S_A)
        if dec is None:
            continue
        lo, hi = float(dec.values[0]), float(dec.values[-1])
        if lo > gate or hi < -gate:
            continue
        v_hi = dec.vectors[:, -1].real
        v_lo = dec.vectors[:, 0].real
        if abs(lo) + abs(hi) == 0.0:
            c = v_hi
        else:
            c = math.sqrt(abs(lo)) * v_hi + math.sqrt(abs(hi)) * v_lo
            c = c / np.linalg.norm(c)
        z = basis @ c
        return z / np.linalg.norm(z)
    return None


# ---------------------------------------------------------------------------
# definitional convex-descent engine


def _probe_lambdas(field: str, r0: float) -> np.ndarray:
    """Geometric radius ladder along a fan of directions (2 real, 16 complex)."""
    radii = []
    r = r0 * 8.0
    while r >= _PROBE_FLOOR:
        radii.append(r)
        r *= 0.5
    if not radii:  # enormous ||A||; a single shortest probe still applies
        radii.append(r0 * 8.0)
    radii = np.array(radii)
    if field == FIELD_REAL:
        dirs = np.array([1.0, -1.0], dtype=complex)
    else:
        # exact cardinal directions (1j**q) keep counterexample lambdas clean
        steps = np.exp(2j * math.pi * np.arange(_N_DIRECTIONS // 4) / _N_DIRECTIONS)
        steps[0] = 1.0
        dirs = (np.array([1, 1j, -1, -1j])[:, None] * steps[None, :]).ravel()
    return (radii[:, None] * dirs[None, :]).ravel()


def _descent_verdict(
    method: str,
    f0: float,
    tol: float,
    lams: np.ndarray,
    lo: np.ndarray,
    hi: np.ndarray,
    exact_fn,
) -> OrthoVerdict:
    """Classify probes given certified value bounds, resolving ambiguity exactly.

    A probe fires when its value is certified below f0 - tol.  exact_fn(lam)
    must return the exact objective value; it is invoked only for probes whose
    bound interval straddles the threshold, most promising first.
    """
    threshold = f0 - tol
    lo = lo.copy()
    hi = hi.copy()
    fired = None
    if np.any(hi < threshold):
        fired = int(np.argmin(hi))
    else:
        amb = np.nonzero(lo < threshold)[0]
        for k in sorted(amb, key=lambda i: lo[i]):
            f = exact_fn(lams[k])
            lo[k] = hi[k] = f
            if f < threshold:
                fired = int(k)
                break
    if fired is None:
        # firm up the marginal flag: probes whose loose lower bound sits just
        # above the threshold get an exact value (a handful at most)
        band = np.nonzero((lo != hi) & (f0 - lo > 0.1 * tol))[0]
        for k in band[:8]:
            lo[k] = hi[k] = exact_fn(lams[k])
    dec_ub = f0 - lo  # upper bounds on the achieved decrease
    if fired is not None:
        f_exact = exact_fn(lams[fired])
        decrease = f0 - f_exact
        margin = decrease - tol
        return OrthoVerdict(
            orthogonal=False,
            method=method,
            witnesses=(),
            counterexample=Counterexample(margin=decrease, lam=complex(lams[fired])),
            margin=margin,
            marginal=margin < (_MARGINAL_BAND - 1.0) * tol,
        )
    best_ub = float(np.max(dec_ub)) if dec_ub.size else 0.0
    return OrthoVerdict(
        orthogonal=True,
        method=method,
        witnesses=(),
        counterexample=None,
        margin=tol - best_ub,
        marginal=best_ub > 0.1 * tol,
    )


def ortho_w_definitional(T, A, ortho_tol: float | None = None) -> OrthoVerdict:
    """Decide T perp_w A straight from the definition.

    f(lam) = w(T + lam A) is convex with f(0) = w(T); the pair is orthogonal
    iff no probe on a 16-direction fan (2 directions over the real field) with
    radii from 8 r0 down to 1e-8, r0 = (1 + w(T)) / (1 + ||A||), achieves
    f(lam) < f(0) - ortho_tol.  Probe values are bracketed by certified sweep
    bounds shared across the whole batch; only threshold-straddling probes pay
    for an exact radius computation.
    """
    Tm, Am = _check_pair(T, A)
    is_real = Tm.field == FIELD_REAL
    f0 = real_radius(Tm).w if is_real else radius(Tm).value
    tol = _default_tol(f0, ortho_tol)
    if f0 <= tol:
        return _trivial(DEFINITIONAL)
    nA = op_norm(Am)
    if nA == 0.0:
        return _trivial(DEFINITIONAL)
    r0 = (1.0 + f0) / (1.0 + nA)
    lams = _probe_lambdas(Tm.field, r0)

    if is_real:
        S_T = 0.5 * (Tm.data.real + Tm.data.real.T)
        S_A = 0.5 * (Am.data.real + Am.data.real.T)
        stack = S_T[None, :, :] + lams.real[:, None, None] * S_A[None, :, :]
        vals = np.linalg.eigvalsh(stack)
        f = np.maximum(np.abs(vals[:, 0]), np.abs(vals[:, -1]))
        lo = hi = f

        def exact_fn(lam):
            S = S_T + lam.real * S_A
            v = np.linalg.eigvalsh(S)
            return float(max(abs(v[0]), abs(v[-1])))

    else:
        stack = Tm.data[None, :, :] + lams[:, None, None] * Am.data[None, :, :]
        lo, hi = sweep.batched_radius_bounds(stack, n_grid=96, refine_width=1e-10)

        def exact_fn(lam):
            return float(sweep.support_scan(Tm.data + lam * Am.data).value)

    return _descent_verdict(DEFINITIONAL, f0, tol, lams, lo, hi, exact_fn)


def ortho_b(T, A, tol: float | None = None) -> OrthoVerdict:
    """Decide ordinary Birkhoff-James orthogonality ||T + lam A|| >= ||T||.

    Same convex-descent engine as ortho_w_definitional with the operator norm
    as objective; singular values of the probe stack are computed exactly in
    one batched call.
    """
    Tm, Am = _check_pair(T, A)
    f0 = op_norm(Tm)
    gate = _default_tol(f0, tol)
    if f0 <= gate or op_norm(Am) == 0.0:
        return _trivial(DEFINITIONAL)
    r0 = (1.0 + f0) / (1.0 + op_norm(Am))
    lams = _probe_lambdas(Tm.field, r0)
    stack = Tm.data[None, :, :] + lams[:, None, None] * Am.data[None, :, :]
    f = np.linalg.svd(stack, compute_uv=False)[:, 0]

    def exact_fn(lam):
        return float(np.linalg.svd(Tm.data + lam * Am.data, compute_uv=False)[0])

    return _descent_verdict(DEFINITIONAL, f0, gate, lams, f, f, exact_fn)
