"""Command-line wrapper around the checkers, constructions and solvers.

Exit codes: 0 when every requested check passes, 1 when a check fails,
2 on usage or input errors (parse failures, missing names, violated
preconditions).  JSON output is key-sorted and byte-deterministic; the
``A3KIT_THREADS`` environment variable caps the solver worker count.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction
from typing import Any, Optional

from .algebra import Algebra, CheckReport, LawKind, check_law
from .bialgebra import (
    Comultiplication,
    check_admissible_coalgebra,
    check_bialgebra,
    check_coalgebra,
    dual_algebra,
)
from .core import Matrix, Tensor2, Tensor3, Vector
from .double import check_manin_triple, standard_double
from .errors import A3KitError, FileFormatError
from .fileformat import (
    Document,
    load_document,
    rational_str,
    render_algebra,
    render_delta,
    render_form,
    render_matrix,
    render_tensor,
    render_vector,
    to_json,
)
from .representation import adjoint_representation
from .search import GridSpec, solve_aybe_skew, solve_relative_rb
from .yangbaxter import RelativeRBData, aybe_residual, check_relative_rb, delta_from_r, rb_to_ybe

_LAW_BY_NAME = {law.value: law for law in LawKind}


def _worker_count() -> int:
    raw = os.environ.get("A3KIT_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise FileFormatError(f"A3KIT_THREADS: expected an integer, got {raw!r}") from None
    if value < 1:
        raise FileFormatError("A3KIT_THREADS must be at least 1")
    return value


def _render_residual(residual: Any, labels: tuple[str, ...]) -> Any:
    if isinstance(residual, Fraction):
        return rational_str(residual)
    if isinstance(residual, Vector):
        return render_vector(residual, labels)
    if isinstance(residual, Matrix):
        return render_matrix(residual, labels)
    if isinstance(residual, Tensor2):
        return render_tensor(residual, labels)
    if isinstance(residual, Tensor3):
        cells = {}
        n = residual.dim
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    v = residual.coeff[a][b][c]
                    if v != 0:
                        cells[f"{labels[a]},{labels[b]},{labels[c]}"] = rational_str(v)
        return cells
    return repr(residual)


def _witness_location(indices: tuple, labels: tuple[str, ...]) -> str:
    parts = []
    for idx in indices:
        parts.append(labels[idx] if isinstance(idx, int) and 0 <= idx < len(labels) else str(idx))
    return "(" + ",".join(parts) + ")"


def _report_payload(report: CheckReport, labels: tuple[str, ...]) -> dict[str, Any]:
    failing = sum(
        1
        for value in report.residuals.values()
        if not (value == 0 if isinstance(value, Fraction) else value.is_zero())
    )
    payload: dict[str, Any] = {"passed": report.passed, "failing_residuals": failing}
    if report.witness is not None:
        payload["witness"] = {
            "at": _witness_location(report.witness.indices, labels),
            "residual": _render_residual(report.witness.residual, labels),
        }
    return payload


def _emit(payload: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(to_json(payload))
        return
    _emit_table(payload, prefix="")


def _emit_table(value: Any, prefix: str) -> None:
    if isinstance(value, dict):
        for key in sorted(value):
            inner = value[key]
            if isinstance(inner, (dict, list)):
                print(f"{prefix}{key}:")
                _emit_table(inner, prefix + "  ")
            else:
                print(f"{prefix}{key}: {inner}")
    elif isinstance(value, list):
        for idx, inner in enumerate(value):
            if isinstance(inner, (dict, list)):
                print(f"{prefix}[{idx}]:")
                _emit_table(inner, prefix + "  ")
            else:
                print(f"{prefix}[{idx}]: {inner}")
    else:
        print(f"{prefix}{value}")


def _cmd_check(args) -> int:
    doc = load_document(args.file)
    if args.laws:
        names = [part.strip() for part in args.laws.split(",") if part.strip()]
    else:
        names = [law.value for law in LawKind]
    laws = []
    for name in names:
        if name not in _LAW_BY_NAME:
            raise FileFormatError(f"unknown law {name!r}; choose from {sorted(_LAW_BY_NAME)}")
        laws.append(_LAW_BY_NAME[name])
    labels = doc.algebra.basis_labels
    results = {}
    all_passed = True
    for law in laws:
        report = check_law(doc.algebra, law)
        results[law.value] = _report_payload(report, labels)
        all_passed &= report.passed
    _emit({"command": "check", "file": args.file, "laws": results, "all_passed": all_passed}, args.format)
    return 0 if all_passed else 1


def _cmd_classify(args) -> int:
    doc = load_document(args.file)
    labels = doc.algebra.basis_labels
    results = {}
    all_passed = True
    for law in LawKind:
        report = check_law(doc.algebra, law)
        results[law.value] = report.passed
        all_passed &= report.passed
    _emit({"command": "classify", "file": args.file, "laws": results, "all_passed": all_passed}, args.format)
    return 0 if all_passed else 1


def _cmd_double(args) -> int:
    doc = load_document(args.file)
    algebra = doc.algebra
    delta = doc.delta if doc.delta is not None else Comultiplication.zero(algebra.dim)
    astar = dual_algebra(delta, labels=tuple(f"{x}*" for x in algebra.basis_labels))
    double_algebra, form = standard_double(algebra, astar)
    n = algebra.dim
    span_a = [Vector.basis(2 * n, i) for i in range(n)]
    span_b = [Vector.basis(2 * n, n + i) for i in range(n)]
    report = check_manin_triple(double_algebra, form, span_a, span_b)
    document = render_algebra(double_algebra)
    document["forms"] = {"pairing": render_form(form, double_algebra.basis_labels)}
    payload = {
        "command": "double",
        "file": args.file,
        "document": document,
        "report": {"manin_triple": _report_payload(report, double_algebra.basis_labels)},
    }
    _emit(payload, args.format)
    return 0 if report.passed else 1


def _require_named(table: dict, name: Optional[str], what: str):
    if not name:
        raise FileFormatError(f"--{what} is required")
    if name not in table:
        raise FileFormatError(f"{what} {name!r} not found in the document")
    return table[name]


def _cmd_delta(args) -> int:
    doc = load_document(args.file)
    r = _require_named(doc.tensors, args.r, "r")
    delta = delta_from_r(doc.algebra, r)
    labels = doc.algebra.basis_labels
    document = render_algebra(doc.algebra)
    document["delta"] = render_delta(delta, labels)
    reports = {
        "coalgebra": _report_payload(check_coalgebra(delta), labels),
        "admissible_coalgebra": _report_payload(check_admissible_coalgebra(delta), labels),
        "bialgebra": _report_payload(check_bialgebra(doc.algebra, delta), labels),
    }
    payload = {"command": "delta", "file": args.file, "r": args.r, "document": document, "report": reports}
    _emit(payload, args.format)
    return 0 if all(rep["passed"] for rep in reports.values()) else 1


def _cmd_aybe(args) -> int:
    doc = load_document(args.file)
    r = _require_named(doc.tensors, args.r, "r")
    residual = aybe_residual(doc.algebra, r)
    labels = doc.algebra.basis_labels
    payload = {
        "command": "aybe",
        "file": args.file,
        "r": args.r,
        "aybe_zero": residual.is_zero(),
        "residual": _render_residual(residual, labels),
    }
    _emit(payload, args.format)
    return 0 if residual.is_zero() else 1


def _cmd_rb2ybe(args) -> int:
    doc = load_document(args.file)
    T = _require_named(doc.maps, args.map, "map")
    algebra = doc.algebra
    double_algebra, r = rb_to_ybe(algebra, T)
    residual = aybe_residual(double_algebra, r)
    rb_report = check_relative_rb(RelativeRBData(algebra, adjoint_representation(algebra), T))
    document = render_algebra(double_algebra)
    document["tensors"] = {"r": render_tensor(r, double_algebra.basis_labels)}
    payload = {
        "command": "rb2ybe",
        "file": args.file,
        "map": args.map,
        "document": document,
        "report": {
            "relative_rb": _report_payload(rb_report, algebra.basis_labels),
            "aybe_zero": residual.is_zero(),
        },
    }
    _emit(payload, args.format)
    return 0 if residual.is_zero() else 1


def _parse_grid(args) -> GridSpec:
    if args.grid:
        try:
            values = [Fraction(part.strip()) for part in args.grid.split(",") if part.strip()]
        except (ValueError, ZeroDivisionError):
            raise FileFormatError(f"--grid: cannot parse {args.grid!r}") from None
        return GridSpec.of(values, max_solutions=args.max_solutions)
    return GridSpec.of([-2, -1, 0, 1, 2], max_solutions=args.max_solutions)


def _cmd_search(args) -> int:
    doc = load_document(args.file)
    grid = _parse_grid(args)
    workers = _worker_count()
    labels = doc.algebra.basis_labels
    if args.kind == "rb":
        rho = adjoint_representation(doc.algebra)
        solutions = solve_relative_rb(doc.algebra, rho, grid, workers=workers)
        rendered = [render_matrix(T, labels) for T in solutions]
    else:
        solutions = solve_aybe_skew(doc.algebra, grid, workers=workers)
        rendered = [render_tensor(r, labels) for r in solutions]
    payload = {
        "command": "search",
        "file": args.file,
        "kind": args.kind,
        "grid": [rational_str(v) for v in grid.sorted_values()],
        "max_solutions": grid.max_solutions,
        "count": len(rendered),
        "solutions": rendered,
    }
    _emit(payload, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="a3kit",
        description="Exact checks and constructions for cyclic-associative algebra structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("file", help="input document (JSON)")
        p.add_argument("--format", choices=("json", "table"), default="table")

    p_check = sub.add_parser("check", help="check the algebra against selected laws")
    add_common(p_check)
    p_check.add_argument("--laws", help="comma-separated law names (default: all)")
    p_check.set_defaults(handler=_cmd_check)

    p_classify = sub.add_parser("classify", help="run every law and print the verdict table")
    add_common(p_classify)
    p_classify.set_defaults(handler=_cmd_classify)

    p_double = sub.add_parser("double", help="build the standard double and verify the Manin triple")
    add_common(p_double)
    p_double.set_defaults(handler=_cmd_double)

    p_delta = sub.add_parser("delta", help="build the comultiplication induced by a named tensor")
    add_common(p_delta)
    p_delta.add_argument("--r", help="name of the tensor in the document")
    p_delta.set_defaults(handler=_cmd_delta)

    p_aybe = sub.add_parser("aybe", help="evaluate the Yang-Baxter residual of a named tensor")
    add_common(p_aybe)
    p_aybe.add_argument("--r", help="name of the tensor in the document")
    p_aybe.set_defaults(handler=_cmd_aybe)

    p_rb = sub.add_parser("rb2ybe", help="lift a named operator to a skew tensor on the double")
    add_common(p_rb)
    p_rb.add_argument("--map", help="name of the operator in the document")
    p_rb.set_defaults(handler=_cmd_rb2ybe)

    p_search = sub.add_parser("search", help="enumerate grid solutions")
    add_common(p_search)
    p_search.add_argument("kind", choices=("rb", "aybe"))
    p_search.add_argument("--grid", help="comma-separated candidate values (default -2,-1,0,1,2)")
    p_search.add_argument("--max-solutions", type=int, default=256)
    p_search.set_defaults(handler=_cmd_search)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.handler(args)
    except A3KitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())
