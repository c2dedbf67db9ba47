"""Acceptance suite: ten scripted criteria, one printed verdict line each.

Each test prints "[PASS|FAIL] criterion N: ..." before asserting, so a plain
pytest run (with -rA or on failure) shows the per-criterion outcome.  Every
criterion uses fixed seeds and finishes well under a minute.
"""

import math

import numpy as np
import pytest

from numrad import bounds, scenarios
from numrad.matcore import BlockPartition, CMatrix, op_norm
from numrad.ortho import ortho_b, ortho_w, ortho_w_definitional, ortho_w_real
from numrad.range import radius, real_radius

PAIR1_T = CMatrix.complex([[0, 1], [0, 0]])
PAIR1_A = CMatrix.complex([[1, 1], [0, 2]])
PAIR2_T = CMatrix.complex([[1, 0], [1j, 1]])
PAIR2_A = CMatrix.complex([[1j, (math.sqrt(5.0) + 1.0) / 2.0], [0, 0]])


def _line(num, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] criterion {num}: {label}{suffix}")
    return ok


def _rand_complex(g, n, m=None):
    m = n if m is None else m
    return g.standard_normal((n, m)) + 1j * g.standard_normal((n, m))


def brute_radius(A, starts=64, iters=200, seed=0):
    """Random-sphere search oracle: batched shifted power ascent on |<Ax,x>|.

    Iterates stay on the unit sphere, so the result is always a lower bound
    on w(A); with many starts it converges to w for small dimensions.
    """
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    g = np.random.default_rng(seed)
    X = g.standard_normal((starts, n)) + 1j * g.standard_normal((starts, n))
    X /= np.linalg.norm(X, axis=1, keepdims=True)
    shift = 2.0 * np.linalg.norm(A, 2) + 1.0
    Ac = np.conj(A)
    for _ in range(iters):
        AX = X @ A.T
        AhX = X @ Ac
        q = np.einsum("bi,bi->b", X.conj(), AX)
        mod = np.abs(q)
        phase = np.where(mod > 0, q / np.where(mod > 0, mod, 1.0), 1.0)
        Y = np.conj(phase)[:, None] * AX + phase[:, None] * AhX + shift * X
        X = Y / np.linalg.norm(Y, axis=1, keepdims=True)
    q = np.einsum("bi,bi->b", X.conj(), X @ A.T)
    return float(np.max(np.abs(q)))


def test_criterion_01_headline_reproduction():
    result = scenarios.run("example-3-10")
    by_desc = {c.description: c for c in result.checks}

    thm38 = bounds.bound_thm38_scalar(CMatrix.complex([[2.6j, 4j, 0], [0, 2.5j, 0], [0, 0, 1 + 1j]]))
    rep = bounds.report(CMatrix.complex([[2.6j, 4j, 0], [0, 2.5j, 0], [0, 0, 1 + 1j]]))
    w = rep.reference_w
    lowers_ok = all(
        e.value <= w + 1e-6 for e in rep.entries if e.kind == bounds.LOWER
    )
    rows = [c for c in result.checks if c.description.startswith("published table row")]
    rows_reported = len(rows) == 6 and all(
        c.status in (scenarios.PASS, scenarios.DISCREPANCY)
        and c.expected
        and c.computed
        for c in rows
    )
    ok = (
        thm38 >= 4.55
        and 4.5505 <= w <= 4.5507
        and lowers_ok
        and rows_reported
        and not result.failed
    )
    n_disc = sum(c.status == scenarios.DISCREPANCY for c in rows)
    _line(
        1,
        "headline block-matrix scenario reproduces",
        ok,
        f"thm38 = {thm38:.6f}, w = {w:.6f}, table rows side-by-side with "
        f"{n_disc} DISCREPANCY (table agreement is not a target)",
    )
    assert ok


def test_criterion_02_orthogonality_pair_regression():
    c1 = ortho_w(PAIR1_T, PAIR1_A)
    d1 = ortho_w_definitional(PAIR1_T, PAIR1_A)
    b1 = ortho_b(PAIR1_T, PAIR1_A)
    pair1_ok = c1.orthogonal and d1.orthogonal and not b1.orthogonal

    b2 = ortho_b(PAIR2_T, PAIR2_A)
    pair2_b_ok = b2.orthogonal  # published expectation

    c2 = ortho_w(PAIR2_T, PAIR2_A)
    d2 = ortho_w_definitional(PAIR2_T, PAIR2_A)
    ce = d2.counterexample
    pair2_w_ok = (not c2.orthogonal) and (not d2.orthogonal) and ce is not None and ce.margin > 1e-6

    # evidence for the failing sub-claim: the norm provably drops along
    # imaginary lam, while a real-lam grid never drops below ||T||
    n0 = op_norm(PAIR2_T.data)
    bce = b2.counterexample
    real_grid_ok = all(
        op_norm(PAIR2_T.data + lam * PAIR2_A.data) >= n0 - 1e-9
        for lam in np.linspace(-2, 2, 801)
    )
    if bce is None:
        detail = "all sub-claims hold"
    else:
        dropped = op_norm(PAIR2_T.data + bce.lam * PAIR2_A.data)
        detail = (
            "pair 2 operator-norm orthogonality fails over complex scalars: "
            f"||T|| = {n0:.10f} but ||T + ({bce.lam:.6f})A|| = {dropped:.10f}; "
            f"real-lambda grid holds ({real_grid_ok}); see /root/notes/decisions.md"
        )

    ok = pair1_ok and pair2_b_ok and pair2_w_ok
    _line(2, "orthogonality pair regression", ok, detail)
    assert ok, (
        "pair 2 is not operator-norm orthogonal over the complex scalars; "
        f"{detail}; the repro scenario reports this check as DISCREPANCY; "
        "analysis and the minimal correction are in /root/notes/decisions.md"
    )


def test_criterion_03_block_shift_comparators():
    A1 = np.diag([4.0, 1.0]).astype(complex)
    A2 = np.diag([6.0, 2.0]).astype(complex)
    M = np.zeros((6, 6), dtype=complex)
    M[0:2, 2:4] = A1
    M[2:4, 4:6] = A2
    wb, wc = bounds.gau_wu_block_shift(M, BlockPartition((2, 2, 2)))
    upper = bounds.upper_kittaneh(np.array([[0, 1, 0], [0, 0, 2], [0, 0, 0]], dtype=complex))
    root5_half = math.sqrt(5.0) / 2.0
    ok = (
        abs(wb - root5_half) <= 1e-8
        and abs(wc - root5_half) <= 1e-8
        and wb < 3.0
        and abs(upper - math.sqrt(2.5)) <= 1e-8
    )
    _line(3, "minimum-modulus comparator values", ok,
          f"w(B) = w(C) = {wb:.10f} < 3, upper = {upper:.10f}")
    assert ok


def test_criterion_04_norm_axioms():
    g = np.random.default_rng(40004)
    ok = True
    for k in range(200):
        n = 2 + k % 5
        T = _rand_complex(g, n)
        w = radius(T).value
        nT = op_norm(T)
        ok = ok and (0.5 * nT - 1e-7 <= w <= nT + 1e-7)
    for k in range(50):
        n = 2 + k % 5
        B = _rand_complex(g, n)
        H = B + B.conj().T
        ok = ok and abs(radius(H).value - op_norm(H)) <= 1e-7
    for k in range(50):
        n = 2 + k % 5
        x = g.standard_normal(n) + 1j * g.standard_normal(n)
        y = g.standard_normal(n) + 1j * g.standard_normal(n)
        y -= (np.vdot(x, y) / np.vdot(x, x)) * x  # <x, y> = 0
        T = np.outer(x, y.conj())
        ok = ok and abs(radius(T).value - 0.5 * op_norm(T)) <= 1e-7
    _line(4, "norm-axiom suite (200 generic + 50 Hermitian + 50 square-zero)", ok)
    assert ok


def test_criterion_05_block_phase_invariance():
    g = np.random.default_rng(50005)
    worst = 0.0
    for _ in range(100):
        m = int(g.integers(1, 4))
        k = int(g.integers(1, 4))
        M = _rand_complex(g, m + k)
        M2 = M.copy()
        M2[:m, m:] *= 1j
        M2[m:, :m] *= -1j
        worst = max(worst, abs(radius(M).value - radius(M2).value))
    ok = worst <= 1e-7
    _line(5, "off-diagonal phase-twist invariance on 100 block matrices", ok,
          f"max deviation {worst:.3e}")
    assert ok


def test_criterion_06_decider_agreement():
    g = np.random.default_rng(60006)
    marginal = 0
    disagree = []
    total = 200
    for k in range(total):
        n = 2 + k % 4
        T, A = _rand_complex(g, n), _rand_complex(g, n)
        tol = 1e-7 * (1.0 + radius(T).value)
        v1, v2 = ortho_w(T, A), ortho_w_definitional(T, A)
        if v1.marginal or v2.marginal or v1.margin < 10 * tol or v2.margin < 10 * tol:
            marginal += 1
            continue
        if v1.orthogonal != v2.orthogonal:
            disagree.append((k, v1.orthogonal, v2.orthogonal))
    rate = marginal / total
    ok = not disagree and rate < 0.10
    _line(6, "characterization vs definitional agreement on 200 pairs", ok,
          f"marginal excluded {marginal}/{total} = {100 * rate:.1f}%, disagreements {len(disagree)}")
    assert ok, f"disagreements: {disagree}, marginal rate {rate:.2%}"


def test_criterion_07_proposition_suite():
    g = np.random.default_rng(70007)

    sym_checked = sym_skipped = 0
    for k in range(100):
        n = 2 + k % 3
        T, A = _rand_complex(g, n), _rand_complex(g, n)
        alpha = complex(*g.standard_normal(2))
        beta = complex(*g.standard_normal(2))
        base = ortho_w(T, A)
        adj = ortho_w(T.conj().T, A.conj().T)
        scl = ortho_w(alpha * T, beta * A)
        if base.marginal or adj.marginal or scl.marginal:
            sym_skipped += 1
            continue
        assert base.orthogonal == adj.orthogonal == scl.orthogonal
        sym_checked += 1

    herm_premises = 0
    for k in range(100):
        n = 2 + k % 3
        B = _rand_complex(g, n)
        H = B + B.conj().T
        if k % 2 == 0:
            x0 = radius(H).witness
            A0 = _rand_complex(g, n)
            A = A0 - np.vdot(x0, A0 @ x0) * np.outer(x0, x0.conj())
        else:
            A = _rand_complex(g, n)
        vw = ortho_w(H, A)
        # constructed pairs sit exactly on the decision boundary, so a
        # marginal-true verdict is the expected shape of a true premise
        if vw.orthogonal:
            herm_premises += 1
            assert ortho_b(H, A).orthogonal, "Hermitian: perp_w must imply perp_B"

    sq_premises = 0
    for k in range(100):
        n = 2 + k % 3
        x = g.standard_normal(n) + 1j * g.standard_normal(n)
        y = g.standard_normal(n) + 1j * g.standard_normal(n)
        y -= (np.vdot(x, y) / np.vdot(x, x)) * x
        T = np.outer(x, y.conj())  # T^2 = 0
        if k % 2 == 0:
            A0 = _rand_complex(g, n)
            c = np.vdot(x, A0 @ y) / (np.vdot(x, x) * np.vdot(y, y))
            A = A0 - c * np.outer(x, y.conj())
        else:
            A = _rand_complex(g, n)
        vb = ortho_b(T, A)
        if vb.orthogonal:
            sq_premises += 1
            assert ortho_w(T, A).orthogonal, "square-zero: perp_B must imply perp_w"

    ok = sym_checked >= 90 and herm_premises >= 30 and sq_premises >= 30
    _line(7, "scalar/adjoint symmetries and implication propositions", ok,
          f"symmetries {sym_checked}/100, Hermitian premises {herm_premises}, "
          f"square-zero premises {sq_premises}")
    assert ok


def test_criterion_08_real_rank_one_suite():
    g = np.random.default_rng(80008)

    mismatches = 0
    for k in range(100):
        n = 2 + k % 3
        x = g.standard_normal(n)
        x /= np.linalg.norm(x)
        y = g.standard_normal(n)
        if k % 2 == 0:
            y -= (x @ y) * x  # exact orthogonalization
        y /= np.linalg.norm(y)
        verdict = ortho_w_real(CMatrix.real(np.outer(x, x)), CMatrix.real(np.outer(y, y)))
        if verdict.orthogonal != (abs(x @ y) <= 1e-10):
            mismatches += 1

    bad_biconditional = 0
    for k in range(50):
        n = 2 + k % 3
        if k % 10 < 3:
            B = g.standard_normal((n, n))
            T = B - B.T  # skew: w = 0
        else:
            T = g.standard_normal((n, n))
        w0 = real_radius(CMatrix.real(T)).w
        xs = g.standard_normal((5, n))
        xs /= np.linalg.norm(xs, axis=1, keepdims=True)
        verdicts = [
            ortho_w_real(CMatrix.real(np.outer(x, x)), CMatrix.real(T)).orthogonal for x in xs
        ]
        if w0 <= 1e-12:
            if not all(verdicts):
                bad_biconditional += 1
        else:
            if all(verdicts):
                bad_biconditional += 1

    ok = mismatches == 0 and bad_biconditional == 0
    _line(8, "real rank-one criterion and degeneracy biconditional", ok,
          f"rank-one mismatches {mismatches}/100, biconditional failures {bad_biconditional}/50")
    assert ok


def test_criterion_09_brute_force_oracle():
    g = np.random.default_rng(90009)
    worst_low, worst_high = 0.0, 0.0
    for k in range(50):
        n = 2 + k % 3
        T = _rand_complex(g, n)
        w = radius(T).value
        oracle = brute_radius(T, seed=int(g.integers(2**31)))
        worst_low = max(worst_low, oracle - w)
        worst_high = max(worst_high, w - oracle)
    ok = worst_low <= 1e-6 and worst_high < 1e-3
    _line(9, "grid radius vs random-sphere oracle on 50 matrices", ok,
          f"max oracle excess {worst_low:.2e}, max shortfall {worst_high:.2e}")
    assert ok


def test_criterion_10_soundness_sweep():
    g = np.random.default_rng(100010)

    def gen(k):
        n = 2 + k % 4
        kind = k % 8
        if kind == 0:
            return _rand_complex(g, n), None
        if kind == 1:
            B = _rand_complex(g, n)
            return B + B.conj().T, None
        if kind == 2:
            return np.triu(_rand_complex(g, n), 1), None
        if kind == 3:
            eigs = g.standard_normal(n) + 1j * g.standard_normal(n)
            Q, _ = np.linalg.qr(_rand_complex(g, n))
            return Q @ np.diag(eigs) @ Q.conj().T, None
        if kind == 4:
            return g.standard_normal((n, n)).astype(complex), None
        if kind == 5:
            u = g.standard_normal(n) + 1j * g.standard_normal(n)
            v = g.standard_normal(n) + 1j * g.standard_normal(n)
            return np.outer(u, v.conj()), None
        if kind == 6:
            M = _rand_complex(g, 4)
            return M, BlockPartition((2, 2))
        M = 10.0 ** g.integers(-3, 3) * _rand_complex(g, n)
        return M, None

    violations = []
    for k in range(500):
        M, p = gen(k)
        rep = bounds.report(M, p)
        w = rep.reference_w
        for e in rep.entries:
            if e.kind == bounds.LOWER and e.value > w + 1e-7:
                violations.append((k, e.name, e.value, w))
            if e.kind == bounds.UPPER and e.value < w - 1e-7:
                violations.append((k, e.name, e.value, w))
    ok = not violations
    _line(10, "soundness sweep over 500 mixed-ensemble matrices", ok,
          f"violations {len(violations)}")
    assert ok, f"first violations: {violations[:5]}"
