"""Command-line front end.

Subcommands wrap the library one computation per invocation: radius,
crawford, minmod, boundary, ortho, bounds, repro.  Matrices come from JSON
documents (see matio); results go to stdout as fixed-format text, JSON, or
CSV.  Exit codes: 0 success, 1 usage or validation, 2 parse or unwritable
output, 3 numerical failure.  Output is deterministic: 12 significant digits
on the console, 15 in CSV, no timestamps.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import bounds as bounds_mod
from . import matio, scenarios
from .errors import NoConvergence, ParseError, ValidationError
from .matcore import FIELD_REAL, BlockPartition, min_modulus
from .ortho import (
    CHARACTERIZATION,
    DEFINITIONAL,
    OrthoVerdict,
    ortho_b,
    ortho_w,
    ortho_w_definitional,
    ortho_w_real,
)
from .range import DEFAULT_GRID, crawford, radius, range_boundary, real_radius


def _g(x: float) -> str:
    return f"{float(x):.12g}"


def _gc(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _csv(x: float) -> str:
    return f"{float(x):.15g}"


def _vec_text(v) -> str:
    return "[" + ", ".join(_gc(z) for z in np.asarray(v).ravel()) + "]"


def _vec_json(v) -> list:
    return [[float(z.real), float(z.imag)] for z in np.asarray(v, dtype=complex).ravel()]


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit 2; the contract reserves 2 for parse errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _check_thread_env() -> None:
    raw = os.environ.get("NUMRAD_THREADS")
    if raw is None:
        return
    try:
        if int(raw) < 0:
            raise ValueError
    except ValueError:
        print(
            f"warning: ignoring NUMRAD_THREADS={raw!r} (not a nonnegative integer)",
            file=sys.stderr,
        )


def _open_out(path: str):
    try:
        return open(path, "w", newline="")
    except OSError as e:
        raise _Unwritable(f"cannot write {path}: {e}") from e


class _Unwritable(Exception):
    pass


# ---------------------------------------------------------------- handlers


def _cmd_radius(args) -> int:
    doc = matio.load_document(args.file)
    if doc.matrix.field == FIELD_REAL:
        rr = real_radius(doc.matrix)
        theta, x = None, None
        if rr.plus_basis.shape[1]:
            theta, x = 0.0, rr.plus_basis[:, 0]
        elif rr.minus_basis.shape[1]:
            theta, x = math.pi, rr.minus_basis[:, 0]
        if args.json:
            _emit_json(
                {
                    "value": rr.w,
                    "theta_star": theta,
                    "witness": None if x is None else _vec_json(x),
                    "residual": 0.0,
                }
            )
        else:
            print(f"w = {_g(rr.w)}")
            print(f"theta_star = {'none' if theta is None else _g(theta)}")
            print(f"witness = {'none' if x is None else _vec_text(x)}")
        return 0

    cert = radius(doc.matrix, radius_tol=args.tol, n_grid=args.grid)
    if args.json:
        _emit_json(
            {
                "value": cert.value,
                "theta_star": cert.theta_star,
                "witness": _vec_json(cert.witness),
                "residual": cert.residual,
            }
        )
    else:
        print(f"w = {_g(cert.value)}")
        print(f"theta_star = {_g(cert.theta_star)}")
        print(f"witness = {_vec_text(cert.witness)}")
        print(f"residual = {_g(cert.residual)}")
    return 0


def _cmd_crawford(args) -> int:
    doc = matio.load_document(args.file)
    c = crawford(doc.matrix, n_grid=args.grid)
    if args.json:
        _emit_json({"value": c})
    else:
        print(f"c = {_g(c)}")
    return 0


def _cmd_minmod(args) -> int:
    doc = matio.load_document(args.file)
    m = min_modulus(doc.matrix)
    if args.json:
        _emit_json({"value": m})
    else:
        print(f"m = {_g(m)}")
    return 0


def _cmd_boundary(args) -> int:
    doc = matio.load_document(args.file)
    pts = range_boundary(doc.matrix, args.samples)
    lines = ["theta,re,im"]
    lines += [f"{_csv(t)},{_csv(z.real)},{_csv(z.imag)}" for t, z in pts]
    body = "\n".join(lines) + "\n"
    if args.csv is not None:
        with _open_out(args.csv) as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    if args.fig is not None:
        from . import figures

        try:
            figures.boundary_figure(pts, args.fig)
        except OSError as e:
            raise _Unwritable(f"cannot write {args.fig}: {e}") from e
    return 0


def _verdict_lines(v: OrthoVerdict) -> list[str]:
    out = [
        f"verdict: {'orthogonal' if v.orthogonal else 'not orthogonal'}",
        f"margin = {_g(v.margin)}",
        f"marginal = {'yes' if v.marginal else 'no'}",
    ]
    for wit in v.witnesses:
        out.append(
            f"witness: theta = {_g(wit.theta)}, phi = {_g(wit.phi)}, "
            f"<Tx,x> = {_gc(wit.t_form)}, <Ax,x> = {_gc(wit.a_form)}, "
            f"x = {_vec_text(wit.vector)}"
        )
    ce = v.counterexample
    if ce is not None:
        if ce.lam is not None:
            out.append(f"counterexample: lam = {_gc(ce.lam)}, decrease = {_g(ce.margin)}")
        else:
            out.append(f"counterexample: theta = {_g(ce.theta)}, decrease = {_g(ce.margin)}")
    return out


def _verdict_json(v: OrthoVerdict) -> dict:
    ce = v.counterexample
    return {
        "orthogonal": v.orthogonal,
        "method": v.method,
        "margin": v.margin,
        "marginal": v.marginal,
        "witnesses": [
            {
                "theta": w.theta,
                "phi": w.phi,
                "t_form": [w.t_form.real, w.t_form.imag],
                "a_form": [w.a_form.real, w.a_form.imag],
                "vector": _vec_json(w.vector),
            }
            for w in v.witnesses
        ],
        "counterexample": None
        if ce is None
        else {
            "margin": ce.margin,
            "theta": ce.theta,
            "lam": None if ce.lam is None else [ce.lam.real, ce.lam.imag],
        },
    }


def _cmd_ortho(args) -> int:
    docT = matio.load_document(args.fileT)
    docA = matio.load_document(args.fileA)
    T, A = docT.matrix, docA.matrix
    is_real = T.field == FIELD_REAL and A.field == FIELD_REAL

    method = args.method
    if args.relation == "b":
        if method in (CHARACTERIZATION, "both"):
            raise ValidationError("relation b is decided definitionally only")
        method = DEFINITIONAL
    elif method is None:
        method = CHARACTERIZATION

    def _characterization() -> OrthoVerdict:
        return (ortho_w_real if is_real else ortho_w)(T, A, ortho_tol=args.tol)

    def _definitional() -> OrthoVerdict:
        if args.relation == "b":
            return ortho_b(T, A, tol=args.tol)
        return ortho_w_definitional(T, A, ortho_tol=args.tol)

    if method == "both":
        v1, v2 = _characterization(), _definitional()
        if args.json:
            _emit_json(
                {
                    "relation": args.relation,
                    "characterization": _verdict_json(v1),
                    "definitional": _verdict_json(v2),
                    "agree": v1.orthogonal == v2.orthogonal,
                }
            )
        else:
            print(f"relation: {args.relation}")
            print("-- characterization --")
            print("\n".join(_verdict_lines(v1)))
            print("-- definitional --")
            print("\n".join(_verdict_lines(v2)))
            print(f"agree: {'yes' if v1.orthogonal == v2.orthogonal else 'no'}")
        return 0

    v = _characterization() if method == CHARACTERIZATION else _definitional()
    if args.json:
        _emit_json({"relation": args.relation, **_verdict_json(v)})
    else:
        print(f"relation: {args.relation}")
        print(f"method: {v.method}")
        print("\n".join(_verdict_lines(v)))
    return 0


def _parse_partition(raw: str) -> BlockPartition:
    try:
        sizes = tuple(int(tok) for tok in raw.split(","))
    except ValueError:
        raise ValidationError(f"partition must be comma-separated integers, got {raw!r}")
    if not sizes or any(s < 1 for s in sizes):
        raise ValidationError(f"partition sizes must be positive, got {raw!r}")
    return BlockPartition(sizes)


def _cmd_bounds(args) -> int:
    doc = matio.load_document(args.file)
    p = _parse_partition(args.partition) if args.partition else doc.partition
    rep = bounds_mod.report(doc.matrix, p)
    by_name = {e.name: e for e in rep.entries}

    if args.json:
        _emit_json(
            {
                "reference_w": rep.reference_w,
                "partition": list(rep.partition.sizes),
                "best_lower": rep.best_lower,
                "entries": [
                    {
                        "name": e.name,
                        "value": e.value,
                        "kind": e.kind,
                        "valid": e.valid,
                        "source": e.source,
                    }
                    for e in rep.entries
                ],
            }
        )
    elif args.csv is not None:
        names = [name for name, _, _ in bounds_mod.CATALOG]
        row = [
            _csv(by_name[name].value) if name in by_name else "" for name in names
        ]
        with _open_out(args.csv) as fh:
            fh.write("reference_w," + ",".join(names) + "\n")
            fh.write(_csv(rep.reference_w) + "," + ",".join(row) + "\n")
    else:
        print(f"reference_w = {_g(rep.reference_w)}")
        print(f"partition = {','.join(str(s) for s in rep.partition.sizes)}")
        print(f"best_lower = {rep.best_lower}")
        print(f"{'':2}{'name':<16}{'kind':<7}{'valid':<7}value")
        for e in rep.entries:
            mark = "* " if e.name == rep.best_lower else "  "
            print(f"{mark}{e.name:<16}{e.kind:<7}{'yes' if e.valid else 'NO':<7}{_g(e.value)}")

    if args.fig is not None:
        from . import figures

        try:
            figures.bounds_figure(rep, args.fig)
        except OSError as e:
            raise _Unwritable(f"cannot write {args.fig}: {e}") from e
    return 0


def _cmd_repro(args) -> int:
    result = scenarios.run(args.scenario)
    if args.json:
        _emit_json(
            {
                "scenario_id": result.scenario_id,
                "failed": result.failed,
                "checks": [
                    {
                        "description": c.description,
                        "expected": c.expected,
                        "computed": c.computed,
                        "status": c.status,
                    }
                    for c in result.checks
                ],
            }
        )
    else:
        print(f"scenario: {result.scenario_id}")
        for c in result.checks:
            print(f"[{c.status}] {c.description}")
            print(f"    expected: {c.expected}")
            print(f"    computed: {c.computed}")
        counts = {s: 0 for s in (scenarios.PASS, scenarios.FAIL, scenarios.DISCREPANCY)}
        for c in result.checks:
            counts[c.status] += 1
        print(
            f"summary: {counts[scenarios.PASS]} PASS, {counts[scenarios.FAIL]} FAIL, "
            f"{counts[scenarios.DISCREPANCY]} DISCREPANCY"
        )
    return 1 if result.failed else 0


# ---------------------------------------------------------------- wiring


def _build_parser() -> _Parser:
    parser = _Parser(prog="numrad", description="numerical radius toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, handler, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(handler=handler)
        return sp

    sp = cmd("radius", _cmd_radius, "numerical radius with witness")
    sp.add_argument("file")
    sp.add_argument("--tol", type=float, default=None)
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
    sp.add_argument("--json", action="store_true")

    sp = cmd("crawford", _cmd_crawford, "Crawford number")
    sp.add_argument("file")
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
    sp.add_argument("--json", action="store_true")

    sp = cmd("minmod", _cmd_minmod, "minimum modulus")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")

    sp = cmd("boundary", _cmd_boundary, "numerical range boundary samples")
    sp.add_argument("file")
    sp.add_argument("--samples", type=int, default=360)
    sp.add_argument("--csv", default=None, metavar="OUT")
    sp.add_argument("--fig", default=None, metavar="OUT")

    sp = cmd("ortho", _cmd_ortho, "Birkhoff-James orthogonality deciders")
    sp.add_argument("fileT")
    sp.add_argument("fileA")
    sp.add_argument("--relation", choices=("w", "b"), default="w")
    sp.add_argument(
        "--method",
        choices=(CHARACTERIZATION, DEFINITIONAL, "both"),
        default=None,
    )
    sp.add_argument("--tol", type=float, default=None)
    sp.add_argument("--json", action="store_true")

    sp = cmd("bounds", _cmd_bounds, "lower/upper bound catalog report")
    sp.add_argument("file")
    sp.add_argument("--partition", default=None, metavar="a,b,c")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--csv", default=None, metavar="OUT")
    sp.add_argument("--fig", default=None, metavar="OUT")

    sp = cmd("repro", _cmd_repro, "scripted regression scenarios")
    sp.add_argument("scenario", choices=scenarios.SCENARIO_IDS)
    sp.add_argument("--json", action="store_true")

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0
    _check_thread_env()
    try:
        return args.handler(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except _Unwritable as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (NoConvergence, np.linalg.LinAlgError) as e:
        print(f"error: numerical failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
