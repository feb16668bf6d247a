"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from . import catalog
from .algebra import LeibnizAlgebra
from .derivations import analyze, der_bracket, derivation_algebra
from .errors import IdentityViolation, LeibnizError, ParseError, SearchSpaceTooLarge
from .fields import field_from_label
from .linalg import Matrix, Subspace, format_matrix, solve, span
from .oracle import DEFAULT_LIMIT, compare
from .textformat import parse_algebra, serialize_algebra

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


@dataclass
class Report:
    command: str
    input: str
    field: str
    dim: int
    results: Dict[str, Any]

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls(**json.loads(text))


class UsageError(LeibnizError):
    pass


def _vec(v) -> List[str]:
    return [str(x) for x in v]


def _space(S: Subspace) -> List[List[str]]:
    return [_vec(v) for v in S.basis]


def _matrix(M: Matrix) -> List[List[str]]:
    return [_vec(r) for r in M.entries]


def _load(path: str) -> LeibnizAlgebra:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_algebra(text)


def _combination(names: Sequence[str], coords) -> str:
    parts = []
    for name, x in zip(names, coords):
        if not x:
            continue
        if x == 1:
            parts.append(name)
        elif x == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{x}*{name}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _named_section(L: LeibnizAlgebra, DA) -> Optional[Dict[str, Any]]:
    entry = catalog.recognize(L)
    if entry is None:
        return None
    named = catalog.named_derivations(entry.kind, L.field)
    # Keep only the named maps that really are derivations here.
    present = {}
    for k, M in named.items():
        try:
            DA.coords(M)
            present[k] = M
        except LeibnizError:
            pass
    keys = [k for k in ("u", "v", "z", "w") if k in present]
    flat = Matrix.from_columns(L.field, [present[k].flatten() for k in keys], L.dim * L.dim)
    relations = []
    for a in range(len(keys)):
        for b in range(a + 1, len(keys)):
            C = der_bracket(present[keys[a]], present[keys[b]])
            coords = solve(flat, C.flatten()) if keys else None
            rhs = _combination(keys, coords) if coords is not None else "outside span of named maps"
            relations.append(f"[{keys[a]}, {keys[b]}] = {rhs}")
    subspaces: Dict[str, Subspace] = {}
    if "z" in present and "w" in present:
        subspaces["W+Z"] = DA.subspace([present["z"], present["w"]])
    rest = [k for k in keys if k not in ("z", "w")]
    if rest:
        subspaces["+".join(k.upper() for k in rest)] = DA.subspace([present[k] for k in rest])
    rep = analyze(DA, subspaces)
    return {
        "kind": entry.kind,
        "lambda": str(entry.lam),
        "maps": {k: _matrix(M) for k, M in named.items()},
        "are_derivations": {k: k in present for k in named},
        "relations": relations,
        "subspaces": {k: asdict(v) for k, v in rep.subspaces.items()},
        "direct_sum": rep.direct_sum,
        "named_span_equals_der": span(
            L.field, L.dim * L.dim, [M.flatten() for M in present.values()]
        ) == DA.as_matrix_subspace(),
    }


def cmd_validate(L_text: str):
    try:
        L = parse_algebra(L_text)
    except IdentityViolation as exc:
        L = parse_algebra(L_text, check=False)
        results = {"valid": False, "counterexample": [L.names[t] for t in exc.triple]}
        return L, results, EXIT_INVALID
    return L, {"valid": True, "is_lie": L.is_lie()}, EXIT_OK


def cmd_analyze(L: LeibnizAlgebra) -> Dict[str, Any]:
    full = L.full_space()
    return {
        "is_lie": L.is_lie(),
        "leibniz_kernel": _space(L.leibniz_kernel()),
        "derived": _space(L.product(full, full)),
        "center_left": _space(L.center("left")),
        "center_right": _space(L.center("right")),
        "center": _space(L.center("two_sided")),
        "lower_central_series": [_space(S) for S in L.lower_central_series()],
        "upper_central_series": [_space(S) for S in L.upper_central_series()],
        "nilpotency_class": L.nilpotency_class(),
        "is_extraspecial": L.is_extraspecial(),
    }


def cmd_der(L: LeibnizAlgebra) -> Dict[str, Any]:
    DA = derivation_algebra(L)
    rep = DA.report
    dnames = DA.lie_algebra.names
    relations = []
    for a in range(DA.dim):
        for b in range(a + 1, DA.dim):
            coords = DA.lie_sc[a][b]
            if any(coords):
                relations.append(f"[{dnames[a]}, {dnames[b]}] = {_combination(dnames, coords)}")
    results = {
        "dim_der": DA.dim,
        "basis": [_matrix(d) for d in DA.basis],
        "lie_sc": [[_vec(v) for v in row] for row in DA.lie_sc],
        "relations": relations,
        "is_abelian": rep.is_abelian,
        "center": _space(rep.center),
        "derived": _space(rep.derived),
    }
    named = _named_section(L, DA)
    if named is not None:
        results["named"] = named
    return results


def cmd_oracle(L: LeibnizAlgebra, limit: int):
    if not L.field.is_finite:
        raise UsageError("oracle requires a finite field (GF p)")
    rep = compare(L, limit)
    return rep.to_dict(), (EXIT_OK if rep.all_match else EXIT_INVALID)


def _human(report: Report) -> str:
    lines = [f"{report.command}: {report.input}  field={report.field}  dim={report.dim}"]

    def emit(key, value, indent="  "):
        if key in ("basis", "maps") and isinstance(value, (list, dict)):
            lines.append(f"{indent}{key}:")
            items = value.items() if isinstance(value, dict) else ((f"d{i + 1}", m) for i, m in enumerate(value))
            for name, m in items:
                lines.append(f"{indent}  {name} =")
                lines.append(format_matrix(m, indent + "    "))
        elif isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            for k, v in value.items():
                emit(k, v, indent + "  ")
        elif isinstance(value, list) and value and all(isinstance(x, str) for x in value) and key == "relations":
            lines.append(f"{indent}{key}:")
            lines.extend(f"{indent}  {x}" for x in value)
        else:
            lines.append(f"{indent}{key}: {json.dumps(value)}")

    for k, v in report.results.items():
        if k == "lie_sc":
            continue
        emit(k, v)
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="leibniz", description="Leibniz algebras and their derivations.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("validate", "check the left Leibniz identity"),
        ("analyze", "kernel, centers, central series, class, extraspecial test"),
        ("der", "derivation algebra and its structure"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("file")
    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-check over GF(p)")
    p.add_argument("file")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p = sub.add_parser("catalog", parents=[common], help="write a named algebra to a file")
    p.add_argument("name", choices=catalog.KINDS)
    p.add_argument("--field", default="Q", help="Q or GF:p")
    p.add_argument("--lambda", dest="lam", default=None, help="nonzero scalar for lei4/lei5")
    p.add_argument("--dim", type=int, default=3, help="dimension for abelian")
    p.add_argument("-o", "--output", help="destination file (stdout if omitted)")
    return parser


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    code = EXIT_OK
    try:
        if args.command == "catalog":
            F = field_from_label(args.field)
            entry = catalog.build(args.name, F, args.lam, args.dim)
            text = serialize_algebra(entry.algebra)
            L = entry.algebra
            source = args.name
            results = {
                "kind": entry.kind,
                "lambda": None if entry.lam is None else str(entry.lam),
                "parameter_admissible": entry.parameter_admissible,
                "output": args.output,
            }
            if args.output:
                Path(args.output).write_text(text)
            elif not args.json:
                out.write(text)
                return EXIT_OK
            else:
                results["text"] = text
        else:
            source = args.file
            if args.command == "validate":
                try:
                    text = Path(args.file).read_text()
                except OSError as exc:
                    raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
                L, results, code = cmd_validate(text)
            else:
                L = _load(args.file)
                if args.command == "analyze":
                    results = cmd_analyze(L)
                elif args.command == "der":
                    results = cmd_der(L)
                else:
                    results, code = cmd_oracle(L, args.limit)
    except IdentityViolation as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (ParseError, UsageError, SearchSpaceTooLarge, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    report = Report(args.command, source, L.field.label, L.dim, results)
    out.write((report.to_json() if args.json else _human(report)) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
