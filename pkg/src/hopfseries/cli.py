"""Command-line front end.

Every subcommand is a pure function of its arguments: identical invocations
produce byte-identical output.  ``--format {text,json}`` selects the
encoding (default text, overridable through HOPFSERIES_FORMAT); malformed
input exits with status 2 and a diagnostic naming the offending field, a
failed verification suite exits with status 1 and prints the first
counterexample of every failing check.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import diffeo, doubletensor as dtensor, formats, invertible, mtuples, suites, trees
from . import series as series_mod
from .freealg import NCPoly


class CLIError(Exception):
    """Malformed input; maps to exit status 2."""


def _format_choice(args) -> str:
    fmt = args.format or os.environ.get("HOPFSERIES_FORMAT", "text")
    if fmt not in ("text", "json"):
        raise CLIError(f"format must be 'text' or 'json', got {fmt!r}")
    return fmt


def _parse_int_tuple(text: str, field: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError as exc:
        raise CLIError(f"{field}: expected comma-separated integers, got {text!r}") from exc
    if not parts:
        raise CLIError(f"{field}: expected at least one integer")
    return parts


def _cmd_coproduct(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    n = args.gen
    kind = args.algebra
    if kind in ("dif", "inv", "bdif") and n < (0 if kind == "bdif" else 1):
        raise CLIError(f"--gen: index must be >= {0 if kind == 'bdif' else 1} for {kind}")
    if kind in ("alpha", "e", "gamma", "ttb") and n < (1 if kind == "ttb" else 0):
        raise CLIError(f"--gen: index out of range for {kind}")
    if kind == "dif":
        t = diffeo.coproduct_generator(n)
        return 0, formats.tensor_text(t) if fmt == "text" else formats.dumps(formats.tensor_json(t))
    if kind == "inv":
        t = invertible.coproduct_generator(n)
        labels = ("b", "b")
        return 0, (formats.tensor_text(t, labels) if fmt == "text"
                   else formats.dumps(formats.tensor_json(t, labels)))
    if kind == "bdif":
        t = dtensor.coproduct_bdif_generator(n)
        return 0, formats.tensor_text(t) if fmt == "text" else formats.dumps(formats.tensor_json(t))
    if kind == "ttb":
        t = dtensor.coproduct_block(n)
        return 0, (formats.block_tensor_text(t) if fmt == "text"
                   else formats.dumps(formats.block_tensor_json(t)))
    if kind == "alpha":
        t = trees.coproduct_alpha(trees.t_sum(n))
        return 0, (formats.tree_tensor_text(t) if fmt == "text"
                   else formats.dumps(formats.tree_tensor_json(t)))
    cop = trees.coproduct_e if kind == "e" else trees.coproduct_gamma
    t = cop(trees.t_sum_forest(n))
    return 0, (formats.forest_tensor_text(t) if fmt == "text"
               else formats.dumps(formats.forest_tensor_json(t)))


def _cmd_antipode(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    if args.gen < 1:
        raise CLIError("--gen: index must be >= 1")
    if args.algebra == "dif":
        p = (diffeo.antipode_closed(args.gen) if args.method == "closed"
             else diffeo.antipode_recursive(args.gen))
        symbol = "a"
    else:
        if args.method == "closed":
            raise CLIError("--method: no closed form exists for the invertible antipode")
        p = invertible.antipode_generator(args.gen)
        symbol = "b"
    return 0, formats.ncpoly_text(p, symbol) if fmt == "text" else formats.dumps(formats.ncpoly_json(p))


def _cmd_lambda(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    entries = _parse_int_tuple(args.tuple, "--tuple")
    if any(v < 1 for v in entries):
        raise CLIError(f"--tuple: entries must be positive, got {entries}")
    value = diffeo.lambda_coefficient(entries)
    return 0, str(value) if fmt == "text" else formats.dumps({"tuple": list(entries), "lambda": value})


_QREF = re.compile(r"^Q\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]$")


def _cmd_qpoly(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    m, n = args.m, args.n
    if args.ref is not None:
        match = _QREF.match(args.ref)
        if not match:
            raise CLIError(f"query: expected Q[m,n], got {args.ref!r}")
        m, n = int(match.group(1)), int(match.group(2))
    if m is None or n is None:
        raise CLIError("--m/--n: both indices are required (or use the Q[m,n] form)")
    if m < 0:
        raise CLIError(f"--m: degree must be >= 0, got {m}")
    if n < -1:
        raise CLIError(f"--n: power index must be >= -1, got {n}")
    p = diffeo.q_polynomial(m, n)
    return 0, formats.ncpoly_text(p) if fmt == "text" else formats.dumps(formats.ncpoly_json(p))


def _cmd_bijection(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    if args.direction == "to-tree":
        m = _parse_int_tuple(args.value, "argument")
        try:
            t = mtuples.to_tree(m)
        except ValueError as exc:
            raise CLIError(f"argument: {exc}") from exc
        text = trees.tree_to_string(t)
        return 0, text if fmt == "text" else formats.dumps({"tuple": list(m), "tree": text})
    try:
        t = trees.parse_tree(args.value)
        m = mtuples.to_tuple(t)
    except ValueError as exc:
        raise CLIError(f"argument: {exc}") from exc
    text = ",".join(str(v) for v in m)
    return 0, text if fmt == "text" else formats.dumps(
        {"tree": trees.tree_to_string(t), "tuple": list(m)}
    )


def _load_series_payload(path: str, want: int) -> list:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    except FileNotFoundError as exc:
        raise CLIError(f"--input: no such file {path!r}") from exc
    except json.JSONDecodeError as exc:
        raise CLIError(f"--input: invalid JSON in {path!r}: {exc}") from exc
    if isinstance(payload, dict):
        payload = [payload]
    if not isinstance(payload, list):
        raise CLIError("--input: expected a series object or a list of them")
    if len(payload) != want:
        raise CLIError(f"--input: expected {want} series, got {len(payload)}")
    try:
        return [formats.parse_series(obj) for obj in payload]
    except (KeyError, ValueError, TypeError) as exc:
        raise CLIError(f"--input: {exc}") from exc


def _series_doc(f: series_mod.TruncatedSeries, fmt: str) -> str:
    if fmt == "json":
        return formats.dumps(formats.series_json(f))
    return _series_text(f)


def _coeff_text(algebra, value) -> str:
    if isinstance(algebra, series_mod.Rationals):
        return str(value)
    return "[" + ", ".join("[" + ", ".join(str(v) for v in row) + "]" for row in value.rows) + "]"


def _series_text(f: series_mod.TruncatedSeries) -> str:
    head = "1" if f.kind == "invertible" else "x"
    shift = 0 if f.kind == "invertible" else 1
    parts = [head]
    for i, c in enumerate(f.coeffs, start=1):
        if c == f.algebra.zero:
            continue
        parts.append(f"({_coeff_text(f.algebra, c)}) x^{i + shift}")
    return " + ".join(parts)


def _cmd_series(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    op = args.op
    order = args.order
    try:
        if op == "mul":
            f, g = _load_series_payload(args.input, 2)
            result = series_mod.series_mul(f, g, order)
        elif op == "inv":
            (f,) = _load_series_payload(args.input, 1)
            result = series_mod.series_inv(f, order)
        elif op == "compose":
            f, g = _load_series_payload(args.input, 2)
            result = series_mod.series_compose(f, g, order)
        elif op == "inverse-diffeo":
            (f,) = _load_series_payload(args.input, 1)
            result = series_mod.compositional_inverse_via_antipode(f, order)
        else:
            f, g, h = _load_series_payload(args.input, 3)
            diff = series_mod.associator(f, g, h, order)
            if fmt == "json":
                return 0, formats.dumps({
                    "kind": "associator",
                    "order": len(diff),
                    "algebra": formats.series_json(f)["algebra"],
                    "coeffs": [formats._coeff_json(f.algebra, c) for c in diff],
                })
            pieces = [f"({_coeff_text(f.algebra, c)}) x^{i + 2}"
                      for i, c in enumerate(diff, start=0) if c != f.algebra.zero]
            return 0, " + ".join(pieces) if pieces else "0"
    except (ValueError, ArithmeticError) as exc:
        raise CLIError(str(exc)) from exc
    return 0, _series_doc(result, fmt)


def _cmd_trees(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    n = args.enumerate
    if n < 0:
        raise CLIError("--enumerate: size must be >= 0")
    names = [trees.tree_to_string(t) for t in trees.trees_of_size(n)]
    names.sort()
    if fmt == "json":
        return 0, formats.dumps({"size": n, "count": len(names), "trees": names})
    return 0, "\n".join(names)


def _cmd_verify(args) -> tuple[int, str]:
    fmt = _format_choice(args)
    try:
        checks = suites.run_suite(args.suite, args.max_degree, args.seed)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    failures = [c for c in checks if not c.ok]
    if fmt == "json":
        doc = formats.dumps({
            "suite": args.suite,
            "max_degree": args.max_degree,
            "seed": args.seed,
            "checks": len(checks),
            "failures": len(failures),
            "failed": [{"id": c.check_id, "detail": c.detail} for c in failures],
        })
        return (1 if failures else 0), doc
    lines = []
    for c in checks:
        if c.ok:
            lines.append(f"ok {c.check_id}")
        else:
            lines.append(f"FAIL {c.check_id}" + (f": {c.detail}" if c.detail else ""))
    lines.append(
        f"suite {args.suite}: {len(checks)} checks, {len(failures)} failed"
    )
    return (1 if failures else 0), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfseries",
        description="Exact computations in the Hopf algebras of formal power series.",
    )
    parser.add_argument("--format", choices=("text", "json"), default=None,
                        help="output encoding (default: $HOPFSERIES_FORMAT or text)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coproduct", help="coproduct of a generator")
    p.add_argument("algebra", choices=("dif", "inv", "alpha", "e", "gamma", "ttb", "bdif"))
    p.add_argument("--gen", type=int, required=True, help="generator index")
    p.set_defaults(handler=_cmd_coproduct)

    p = sub.add_parser("antipode", help="antipode of a generator")
    p.add_argument("algebra", choices=("dif", "inv"))
    p.add_argument("--method", choices=("recursive", "closed"), default="recursive")
    p.add_argument("--gen", type=int, required=True)
    p.set_defaults(handler=_cmd_antipode)

    p = sub.add_parser("lambda", help="closed-form antipode weight of a tuple")
    p.add_argument("--tuple", required=True, help="comma-separated positive integers")
    p.set_defaults(handler=_cmd_lambda)

    p = sub.add_parser("qpoly", help="composition polynomial Q[m,n]")
    p.add_argument("ref", nargs="?", default=None, help="query of the form Q[m,n]")
    p.add_argument("--m", type=int, default=None, help="degree")
    p.add_argument("--n", type=int, default=None, help="power index (>= -1)")
    p.set_defaults(handler=_cmd_qpoly)

    p = sub.add_parser("bijection", help="Catalan tuple <-> planar binary tree")
    p.add_argument("direction", choices=("to-tree", "to-tuple"))
    p.add_argument("value", help="a tuple like 2,1,0 or a tree like '((L L) L)'")
    p.set_defaults(handler=_cmd_bijection)

    p = sub.add_parser("series", help="truncated series operations")
    p.add_argument("op", choices=("mul", "inv", "compose", "inverse-diffeo", "associator"))
    p.add_argument("--input", required=True, help="JSON file with the operand series")
    p.add_argument("--order", type=int, default=None)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("trees", help="enumerate planar binary trees")
    p.add_argument("--enumerate", type=int, required=True, metavar="N")
    p.set_defaults(handler=_cmd_trees)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--seed", type=int, default=suites.DEFAULT_SEED)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str]) -> tuple[int, str]:
    """Parse and execute; returns (exit status, emitted document)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""
    try:
        return args.handler(args)
    except CLIError as exc:
        return 2, f"error: {exc}"


def main(argv: list[str] | None = None) -> int:
    code, doc = run(sys.argv[1:] if argv is None else argv)
    if doc:
        print(doc, file=sys.stderr if code == 2 else sys.stdout)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
