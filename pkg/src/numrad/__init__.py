"""Numerical radius toolkit.

Dense-matrix computations around the numerical range: the radius, Crawford
number and minimum modulus, boundary sampling, Birkhoff-James orthogonality
deciders for the radius seminorm and the operator norm, and a catalog of
lower/upper radius bounds for block operator matrices.
"""

from .bounds import (
    CATALOG,
    LOWER,
    UPPER,
    BoundEntry,
    BoundsReport,
    bound_cor35,
    bound_thm32,
    bound_thm33,
    bound_thm34,
    bound_thm36,
    bound_thm38_scalar,
    gau_wu_block_shift,
    gau_wu_cyclic,
    lit_bounds,
    report,
    upper_kittaneh,
)
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NoConvergence,
    NotBlockShift,
    NotComplex,
    NotHermitian,
    NotReal,
    NotSquare,
    NotUpperTriangular,
    NumradError,
    ParseError,
    PartitionMismatch,
    UnequalBlocks,
    ValidationError,
    ZeroRadius,
)
from .matcore import (
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
from .matio import MatrixDoc, document_text, load_document, parse_document
from .ortho import (
    Counterexample,
    OrthoVerdict,
    OrthoWitness,
    ortho_b,
    ortho_w,
    ortho_w_definitional,
    ortho_w_real,
    zero_witness,
)
from .range import (
    DEFAULT_GRID,
    AttainingSet,
    RadiusCertificate,
    RealRadius,
    attaining_set,
    crawford,
    herm_pencil,
    radius,
    range_boundary,
    real_radius,
)
from .scenarios import SCENARIO_IDS, Check, ScenarioResult, run as run_scenario

__version__ = "0.1.0"

__all__ = [
    "AttainingSet",
    "BlockPartition",
    "BoundEntry",
    "BoundsReport",
    "CATALOG",
    "Check",
    "CMatrix",
    "Counterexample",
    "DEFAULT_GRID",
    "DimensionMismatch",
    "FIELD_COMPLEX",
    "FIELD_REAL",
    "IndexOutOfRange",
    "LOWER",
    "MatrixDoc",
    "NoConvergence",
    "NotBlockShift",
    "NotComplex",
    "NotHermitian",
    "NotReal",
    "NotSquare",
    "NotUpperTriangular",
    "NumradError",
    "OrthoVerdict",
    "OrthoWitness",
    "ParseError",
    "PartitionMismatch",
    "RadiusCertificate",
    "RealRadius",
    "SCENARIO_IDS",
    "ScenarioResult",
    "UPPER",
    "UnequalBlocks",
    "ValidationError",
    "ZeroRadius",
    "adjoint",
    "as_cmatrix",
    "attaining_set",
    "block_extract",
    "bound_cor35",
    "bound_thm32",
    "bound_thm33",
    "bound_thm34",
    "bound_thm36",
    "bound_thm38_scalar",
    "crawford",
    "document_text",
    "frob",
    "gau_wu_block_shift",
    "gau_wu_cyclic",
    "herm_eig",
    "herm_pencil",
    "lit_bounds",
    "load_document",
    "min_modulus",
    "op_norm",
    "ortho_b",
    "ortho_w",
    "ortho_w_definitional",
    "ortho_w_real",
    "parse_document",
    "radius",
    "range_boundary",
    "real_radius",
    "report",
    "run_scenario",
    "sigma_min",
    "upper_kittaneh",
    "zero_cross",
    "zero_witness",
]
