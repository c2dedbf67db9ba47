"""Matrix document parsing and serialization.

The one interchange format is a JSON object:

    {
      "rows": 2, "cols": 2,
      "entries": [[[0.0, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]],
      "field": "complex",            // optional, default "complex"
      "partition": [1, 1]            // optional, square matrices only
    }

Every entry is a [re, im] pair of JSON numbers.  Serialization uses Python's
shortest round-trip float repr, so write -> parse reproduces the exact same
doubles bit for bit.  All structural problems raise ParseError with a message
naming the offending field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParseError, ValidationError
from .matcore import FIELD_COMPLEX, FIELD_REAL, BlockPartition, CMatrix


@dataclass(frozen=True)
class MatrixDoc:
    matrix: CMatrix
    partition: BlockPartition | None


def _require_positive_int(obj, name: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int) or obj < 1:
        raise ParseError(f"'{name}' must be a positive integer, got {obj!r}")
    return obj


def _entry_scalar(v, where: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ParseError(f"entry {where} must be a number, got {v!r}")
    f = float(v)
    if not math.isfinite(f):
        raise ParseError(f"entry {where} is not finite")
    return f


def parse_document(text: str) -> MatrixDoc:
    """Parse MatrixDocument JSON into a tagged matrix and optional partition."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("document must be a JSON object")
    unknown = set(obj) - {"rows", "cols", "entries", "field", "partition"}
    if unknown:
        raise ParseError(f"unknown fields: {sorted(unknown)}")
    for key in ("rows", "cols", "entries"):
        if key not in obj:
            raise ParseError(f"missing field '{key}'")
    rows = _require_positive_int(obj["rows"], "rows")
    cols = _require_positive_int(obj["cols"], "cols")

    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"'entries' must be a list of {rows} rows")
    data = np.zeros((rows, cols), dtype=np.complex128)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"row {i} must be a list of {cols} entries")
        for j, pair in enumerate(row):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"entry ({i},{j}) must be a [re, im] pair")
            re = _entry_scalar(pair[0], f"({i},{j}).re")
            im = _entry_scalar(pair[1], f"({i},{j}).im")
            data[i, j] = complex(re, im)

    field = obj.get("field", FIELD_COMPLEX)
    if field not in (FIELD_REAL, FIELD_COMPLEX):
        raise ParseError(f"'field' must be 'real' or 'complex', got {field!r}")
    if field == FIELD_REAL and np.any(data.imag != 0.0):
        raise ParseError("field 'real' requires every imaginary part to be 0")

    partition = None
    if obj.get("partition") is not None:
        sizes = obj["partition"]
        if not isinstance(sizes, list) or not sizes:
            raise ParseError("'partition' must be a non-empty list of positive integers")
        sizes = tuple(_require_positive_int(s, "partition entry") for s in sizes)
        if rows != cols:
            raise ParseError("'partition' requires a square matrix")
        if sum(sizes) != rows:
            raise ParseError(f"partition {list(sizes)} sums to {sum(sizes)}, expected {rows}")
        partition = BlockPartition(sizes)

    try:
        matrix = CMatrix(data, field)
    except ValidationError as exc:
        raise ParseError(str(exc)) from exc
    return MatrixDoc(matrix=matrix, partition=partition)


def load_document(path: str) -> MatrixDoc:
    """Read and parse a MatrixDocument file (UTF-8)."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_document(text)


def document_text(M: CMatrix, partition: BlockPartition | None = None) -> str:
    """Serialize to MatrixDocument JSON; parse_document inverts it exactly."""
    obj: dict = {
        "rows": M.rows,
        "cols": M.cols,
        "entries": [
            [[float(z.real), float(z.imag)] for z in row] for row in M.data
        ],
        "field": M.field,
    }
    if partition is not None:
        obj["partition"] = list(partition.sizes)
    return json.dumps(obj, indent=2) + "\n"
