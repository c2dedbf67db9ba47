"""Lower (and one upper) bounds on the numerical radius of block matrices.

The in-house family bounds w of a partitioned matrix by radii of pieces that
are cheaper or structurally simpler than the whole: diagonal blocks,
zero-cross deletions, 2x2 principal block submatrices, symmetrized
off-diagonal pairs, halved off-block norms, and minimum-modulus comparator
matrices for block shifts.  Alongside them the catalog carries six published
lower bounds built from the real/imaginary parts H, K and Crawford numbers,
plus Kittaneh's upper bound sqrt(||TT* + T*T|| / 2).

report() evaluates everything applicable to one matrix, checks each value
against the reference radius, and names the best valid lower bound.  Catalog
identifiers are stable: they are the CSV column names emitted by the CLI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    NotBlockShift,
    NotUpperTriangular,
    UnequalBlocks,
)
from .matcore import (
    BlockPartition,
    CMatrix,
    adjoint,
    as_cmatrix,
    block_extract,
    op_norm,
    sigma_min,
    zero_cross,
    _require_square,
)
from .range import crawford, herm_pencil, radius

_TRIANGULAR_GATE = 1e-12
_SHIFT_GATE = 1e-12

LOWER = "lower"
UPPER = "upper"

# (identifier, kind, source) in report order
CATALOG: tuple[tuple[str, str, str], ...] = (
    ("thm32", LOWER, "2x2 block split: diagonal radii and half-radii of B+C, B-C"),
    ("thm33", LOWER, "diagonal-block radii and zero-cross deletions"),
    ("thm34", LOWER, "diagonal blocks and 2x2 principal block submatrices"),
    ("cor35", LOWER, "equal blocks: half-radii of symmetrized off-diagonal pairs"),
    ("thm36", LOWER, "upper-triangular: diagonal radii and halved off-block norms"),
    ("thm38", LOWER, "entrywise zero-cross deletions with diagonal moduli"),
    ("gw_shift", LOWER, "Gau-Wu minimum-modulus comparator for block shifts"),
    ("gw_cyclic", LOWER, "Gau-Wu cyclic superdiagonal comparator"),
    ("kmy", LOWER, "Kittaneh-Moslehian-Yamazaki sqrt((||H||^2+||K||^2)/2)"),
    ("aok", LOWER, "Abu-Omar-Kittaneh sqrt(|| |T|^2+|T*|^2 || + 2c(T^2))/2"),
    ("bbp1", LOWER, "Bhunia-Bag-Paul sqrt(||H||^2 + c(K)^2)"),
    ("bbp2", LOWER, "Bhunia-Bag-Paul sqrt(||K||^2 + c(H)^2)"),
    ("hks1", LOWER, "Hirzallah-Kittaneh-Shebrawi ||T||/2 + | ||H||-||K|| |/2"),
    ("hks2", LOWER, "Hirzallah-Kittaneh-Shebrawi ||T||/2 + quarter deviations"),
    ("kittaneh_upper", UPPER, "Kittaneh sqrt(||TT*+T*T||/2)"),
)

_CATALOG_ORDER = {name: k for k, (name, _, _) in enumerate(CATALOG)}


@dataclass(frozen=True)
class BoundEntry:
    name: str
    value: float
    kind: str
    valid: bool
    source: str


@dataclass(frozen=True)
class BoundsReport:
    reference_w: float
    entries: tuple[BoundEntry, ...]
    best_lower: str
    partition: BlockPartition | None


def _w(M) -> float:
    """Radius of an arbitrary piece; real-tagged pieces are recoerced."""
    A = as_cmatrix(M)
    return radius(CMatrix(A.data)).value


def bound_thm32(A, B, C, D) -> float:
    """max of w(A), w(D) and, for square off-diagonal blocks, w(B+-C)/2.

    Bounds the radius of [[A, B], [C, D]].  When B and C are not square the
    mixed terms have no meaning on the block space and only the diagonal
    radii contribute.
    """
    Am, Bm, Cm, Dm = (as_cmatrix(X) for X in (A, B, C, D))
    m, k = Am.rows, Dm.rows
    _require_square(Am, "bound_thm32 block A")
    _require_square(Dm, "bound_thm32 block D")
    if Bm.data.shape != (m, k) or Cm.data.shape != (k, m):
        raise DimensionMismatch(
            f"off-diagonal blocks must be {m}x{k} and {k}x{m}, "
            f"got {Bm.rows}x{Bm.cols} and {Cm.rows}x{Cm.cols}"
        )
    terms = [_w(Am), _w(Dm)]
    if m == k:
        terms.append(0.5 * _w(Bm.data + Cm.data))
        terms.append(0.5 * _w(Bm.data - Cm.data))
    return max(terms)


def bound_thm33(M, p: BlockPartition) -> float:
    """max over diagonal-block radii and radii of the zero-cross deletions."""
    A = as_cmatrix(M)
    _require_square(A, "bound_thm33")
    p.check(A.rows)
    terms = [_w(block_extract(A, p, k, k)) for k in range(p.count)]
    terms += [_w(zero_cross(A, p, i)) for i in range(p.count)]
    return max(terms)


def bound_thm34(M, p: BlockPartition) -> float:
    """max over diagonal-block radii and all 2x2 principal block submatrices."""
    A = as_cmatrix(M)
    _require_square(A, "bound_thm34")
    p.check(A.rows)
    terms = [_w(block_extract(A, p, k, k)) for k in range(p.count)]
    for i in range(p.count):
        for j in range(i + 1, p.count):
            sub = np.block(
                [
                    [block_extract(A, p, i, i).data, block_extract(A, p, i, j).data],
                    [block_extract(A, p, j, i).data, block_extract(A, p, j, j).data],
                ]
            )
            terms.append(_w(sub))
    return max(terms)


def bound_cor35(M, p: BlockPartition) -> float:
    """Equal-size blocks: diagonal radii and w(A_ij +- A_ji)/2 over pairs."""
    A = as_cmatrix(M)
    _require_square(A, "bound_cor35")
    p.check(A.rows)
    if len(set(p.sizes)) != 1:
        raise UnequalBlocks(f"block sizes {p.sizes} are not all equal")
    terms = [_w(block_extract(A, p, k, k)) for k in range(p.count)]
    for i in range(p.count):
        for j in range(i + 1, p.count):
            X = block_extract(A, p, i, j).data
            Y = block_extract(A, p, j, i).data
            terms.append(0.5 * _w(X + Y))
            terms.append(0.5 * _w(X - Y))
    return max(terms)


def bound_thm36(M, p: BlockPartition) -> float:
    """Block upper-triangular input: diagonal radii and ||A_ij||/2 above."""
    A = as_cmatrix(M)
    _require_square(A, "bound_thm36")
    p.check(A.rows)
    sl = p.slices()
    for i in range(p.count):
        for j in range(i):
            block = A.data[sl[i], sl[j]]
            if block.size and np.max(np.abs(block)) > _TRIANGULAR_GATE:
                raise NotUpperTriangular(f"block ({i},{j}) has mass {np.max(np.abs(block)):.3e}")
    terms = [_w(block_extract(A, p, k, k)) for k in range(p.count)]
    for i in range(p.count):
        for j in range(i + 1, p.count):
            terms.append(0.5 * op_norm(A.data[sl[i], sl[j]]))
    return max(terms)


def bound_thm38_scalar(M) -> float:
    """Entrywise zero-cross bound: max{|a_kk|, w(T_i)} over the scalar partition."""
    A = as_cmatrix(M)
    _require_square(A, "bound_thm38_scalar")
    p = BlockPartition.scalar(A.rows)
    terms = [float(abs(A.data[k, k])) for k in range(A.rows)]
    terms += [_w(zero_cross(A, p, i)) for i in range(p.count)]
    return max(terms)


def gau_wu_block_shift(M, p: BlockPartition) -> tuple[float, float]:
    """Radii of the minimum-modulus comparators of a block shift.

    For a matrix whose only nonzero blocks are the superdiagonal A_1..A_{k-1},
    returns (w(B), w(C)) where B and C are k x k scalar matrices with
    superdiagonal entries m(A_j) and m(A_j*).  Both radii bound w(M) from
    below.
    """
    A = as_cmatrix(M)
    _require_square(A, "gau_wu_block_shift")
    p.check(A.rows)
    sl = p.slices()
    for i in range(p.count):
        for j in range(p.count):
            if j == i + 1:
                continue
            block = A.data[sl[i], sl[j]]
            if block.size and np.max(np.abs(block)) > _SHIFT_GATE:
                raise NotBlockShift(f"block ({i},{j}) has mass {np.max(np.abs(block)):.3e}")
    k = p.count
    B = np.zeros((k, k), dtype=complex)
    C = np.zeros((k, k), dtype=complex)
    for j in range(k - 1):
        blk = block_extract(A, p, j, j + 1)
        B[j, j + 1] = sigma_min(blk)
        C[j, j + 1] = sigma_min(adjoint(blk))
    return _w(B), _w(C)


def gau_wu_cyclic(M) -> float:
    """Radius of the cyclic superdiagonal comparator (entries (i, i+1) and (n, 1))."""
    A = as_cmatrix(M)
    _require_square(A, "gau_wu_cyclic")
    n = A.rows
    B = np.zeros((n, n), dtype=complex)
    for i in range(n - 1):
        B[i, i + 1] = A.data[i, i + 1]
    B[n - 1, 0] = A.data[n - 1, 0]
    return _w(B)


def lit_bounds(T) -> list[tuple[str, float]]:
    """The six published lower bounds, as (catalog name, value) pairs.

    Built from H and K (the Hermitian and skew parts as 0- and pi/2-pencils),
    Crawford numbers of H, K and T^2, the operator norm, and || |T|^2+|T*|^2 ||.
    """
    A = as_cmatrix(T)
    _require_square(A, "lit_bounds")
    Td = A.data
    H = herm_pencil(Td, 0.0)
    K = herm_pencil(Td, 0.5 * math.pi)
    nH, nK, nT = op_norm(H), op_norm(K), op_norm(Td)
    gram_sum = Td.conj().T @ Td + Td @ Td.conj().T
    c_T2 = crawford(CMatrix(Td @ Td))
    c_H, c_K = crawford(H), crawford(K)
    return [
        ("kmy", math.sqrt(0.5 * (nH * nH + nK * nK))),
        ("aok", 0.5 * math.sqrt(op_norm(gram_sum) + 2.0 * c_T2)),
        ("bbp1", math.sqrt(nH * nH + c_K * c_K)),
        ("bbp2", math.sqrt(nK * nK + c_H * c_H)),
        ("hks1", 0.5 * nT + 0.5 * abs(nH - nK)),
        ("hks2", 0.5 * nT + 0.25 * abs(nH - 0.5 * nT) + 0.25 * abs(nK - 0.5 * nT)),
    ]


def upper_kittaneh(T) -> float:
    """sqrt(||TT* + T*T|| / 2); an upper bound on the radius."""
    A = as_cmatrix(T)
    _require_square(A, "upper_kittaneh")
    Td = A.data
    return math.sqrt(0.5 * op_norm(Td @ Td.conj().T + Td.conj().T @ Td))


def report(T, p: BlockPartition | None = None, report_tol: float | None = None) -> BoundsReport:
    """Evaluate every applicable catalog bound against the reference radius.

    Partitioned bounds use p when given, the scalar partition otherwise;
    thm38 and gw_cyclic always run on scalar entries.  Structure-gated bounds
    (thm36, gw_shift) are silently omitted when the input lacks the structure.
    Validity compares each value to the radius at report_tol slack (default
    1e-6 * (1 + radius)); best_lower names the largest valid lower bound,
    catalog order breaking ties.
    """
    A = as_cmatrix(T)
    _require_square(A, "report")
    Tc = CMatrix(A.data)
    ref = radius(Tc).value
    tol = (1e-6 * (1.0 + ref)) if report_tol is None else float(report_tol)
    p_eff = p if p is not None else BlockPartition.scalar(A.rows)

    values: dict[str, float] = {}
    if p_eff.count == 2:
        values["thm32"] = bound_thm32(
            block_extract(A, p_eff, 0, 0),
            block_extract(A, p_eff, 0, 1),
            block_extract(A, p_eff, 1, 0),
            block_extract(A, p_eff, 1, 1),
        )
    values["thm33"] = bound_thm33(A, p_eff)
    values["thm34"] = bound_thm34(A, p_eff)
    if len(set(p_eff.sizes)) == 1:
        values["cor35"] = bound_cor35(A, p_eff)
    try:
        values["thm36"] = bound_thm36(A, p_eff)
    except NotUpperTriangular:
        pass
    values["thm38"] = bound_thm38_scalar(A)
    try:
        values["gw_shift"] = max(gau_wu_block_shift(A, p_eff))
    except NotBlockShift:
        pass
    values["gw_cyclic"] = gau_wu_cyclic(A)
    values.update(lit_bounds(A))
    values["kittaneh_upper"] = upper_kittaneh(A)

    entries = []
    best_name, best_value = "", -math.inf
    for name, kind, source in CATALOG:
        if name not in values:
            continue
        v = values[name]
        valid = (v <= ref + tol) if kind == LOWER else (v >= ref - tol)
        entries.append(BoundEntry(name=name, value=v, kind=kind, valid=valid, source=source))
        if kind == LOWER and valid and v > best_value:
            best_name, best_value = name, v
    return BoundsReport(
        reference_w=ref,
        entries=tuple(entries),
        best_lower=best_name,
        partition=p_eff,
    )
