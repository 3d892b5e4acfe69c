"""Command-line surface.

Subcommands read JSON from a file argument or standard input and write to
standard output; diagnostics go to standard error.  Exit codes: 0 success,
1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import serialize
from .characters import oracle_multiplicity
from .filtration import associated_graded
from .gl2 import H_STYLE_LIE_PLUS_ELEMENTS, H_STYLES, rep_from_label
from .homspaces import grid_labels, hom_dim, multiplicity, multiplicity_table
from .rees import derees, rees_construct
from .varieties import (
    BINARY_QUADRATIC_FORMS,
    TWO_BY_TWO_MATRICES,
    builtin_variety,
    cocharacter_filtration,
)
from .verify import render_report, run_all

CONVENTION = "sym-dual"

CONVENTIONS_TEXT = """\
convention: sym-dual
  exact arithmetic: all values are rationals, serialized as "p/q" or "p"
  filtration sign: F(i) = span of the weight spaces with -<mu, weight> >= i
  coordinate ring: degree d of k[U] is the d-th symmetric power of the dual
    module of U (all weights negated)
  binary quadratic forms: ambient module weights (-2,0), (-1,-1), (0,-2)
    (dual module is the (2,0) irreducible); boundary cocharacter (1,0);
    stabilizer of the base form is its full orthogonal stabilizer: the torus
    t -> [[t, 1/t - t], [0, 1/t]] together with the determinant -1
    reflection [[1,0],[1,-1]]; the populated side of the table is m >= 0
  2x2 matrices: contragradient model with ambient module weights
    (-1,0,-1,0), (-1,0,0,-1), (0,-1,-1,0), (0,-1,0,-1) (dual module is the
    product of the two standard representations); boundary cocharacter
    (1,1,0,-1); stabilizer of the identity is the twisted diagonal
    {(g, transpose-inverse of g)}, a connected copy of GL2
  h-style lie_only: connected stabilizer torus generator only
  h-style lie_plus_elements (default): torus generator plus the finite
    reflection generating the stabilizer's component group\
"""

VARIETY_NAMES = (BINARY_QUADRATIC_FORMS, TWO_BY_TWO_MATRICES)


class CliError(Exception):
    """Input-level failure, reported on stderr with exit code 2."""


def _read_json(path: str) -> object:
    if path == "-":
        text = sys.stdin.read()
        origin = "<stdin>"
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from None
        origin = path
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{origin}: JSON parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _parse_label(text: str) -> object:
    try:
        parts = text.split(";")
        pairs = []
        for part in parts:
            n, m = part.split(",")
            pairs.append((int(n), int(m)))
        if len(pairs) == 1:
            return pairs[0]
        if len(pairs) == 2:
            return (pairs[0], pairs[1])
    except ValueError:
        pass
    raise CliError(f"bad label {text!r}: expected 'n,m' or 'n,m;n2,m2'")


def _parse_grid(text: str) -> dict[str, range]:
    out = {}
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            key, span = piece.split("=")
            lo, hi = span.split("..")
            out[key.strip()] = range(int(lo), int(hi) + 1)
        except ValueError:
            raise CliError(f"bad grid component {piece!r}: expected 'name=lo..hi'") from None
    for key in out:
        if key not in ("n", "m", "n2", "m2"):
            raise CliError(f"unknown grid variable {key!r}")
    if "n" not in out or "m" not in out:
        raise CliError("grid needs at least n=lo..hi and m=lo..hi")
    return out


def _load_variety(args: argparse.Namespace):
    if getattr(args, "variety_file", None):
        return serialize.custom_variety_from_json(_read_json(args.variety_file))
    name = getattr(args, "variety", None)
    if name is None:
        raise CliError("pick a variety with --variety or --variety-file")
    if name not in VARIETY_NAMES:
        raise CliError(f"unknown variety {name!r}; built-ins: {', '.join(VARIETY_NAMES)}")
    return builtin_variety(name)


def _grid_from_args(spec_group: str, args: argparse.Namespace) -> list[object]:
    ranges = _parse_grid(args.grid)
    return grid_labels(spec_group, ranges["n"], ranges["m"], ranges.get("n2"), ranges.get("m2"))


def _print_table(rows: list[tuple[object, int]], fmt: str) -> None:
    if fmt == "json":
        payload = [{"label": _label_json(label), "multiplicity": mult} for label, mult in rows]
        print(serialize.dumps(payload))
        return
    if rows and isinstance(rows[0][0], tuple) and isinstance(rows[0][0][0], tuple):
        print("n\tm\tn2\tm2\tmultiplicity")
        for (a, b), mult in rows:  # type: ignore[misc]
            print(f"{a[0]}\t{a[1]}\t{b[0]}\t{b[1]}\t{mult}")
    else:
        print("n\tm\tmultiplicity")
        for (n, m), mult in rows:  # type: ignore[misc]
            print(f"{n}\t{m}\t{mult}")


def _label_json(label: object) -> list:
    if isinstance(label, tuple) and isinstance(label[0], tuple):
        return [list(label[0]), list(label[1])]
    return list(label)  # type: ignore[arg-type]


def _cmd_rees(args: argparse.Namespace) -> int:
    fs = serialize.filtered_space_from_json(_read_json(args.input))
    print(serialize.dumps(serialize.graded_module_to_json(rees_construct(fs))))
    return 0


def _cmd_derees(args: argparse.Namespace) -> int:
    module = serialize.graded_module_from_json(_read_json(args.input))
    print(serialize.dumps(serialize.filtered_space_to_json(derees(module))))
    return 0


def _cmd_gr(args: argparse.Namespace) -> int:
    fs = serialize.filtered_space_from_json(_read_json(args.input))
    print(serialize.dumps(serialize.graded_space_to_json(associated_graded(fs))))
    return 0


def _cmd_filtration(args: argparse.Namespace) -> int:
    label = _parse_label(args.label)
    if args.mu is not None:
        try:
            mu = tuple(int(c) for c in args.mu.split(","))
        except ValueError:
            raise CliError(f"bad cocharacter {args.mu!r}: expected comma-separated integers") from None
        group = "GL2xGL2" if isinstance(label[0], tuple) else "GL2"
        filts = [cocharacter_filtration(rep_from_label(group, label), mu)]
    else:
        spec = _load_variety(args)
        rep = rep_from_label(spec.group, label)
        filts = [cocharacter_filtration(rep, mu) for mu in spec.boundary_cocharacters]
    payloads = [serialize.filtered_space_to_json(f) for f in filts]
    print(serialize.dumps(payloads[0] if len(payloads) == 1 else payloads))
    return 0


def _cmd_hom_dim(args: argparse.Namespace) -> int:
    payload = _read_json(args.input)
    if not isinstance(payload, dict) or "a" not in payload or "b" not in payload:
        raise CliError("hom-dim expects a JSON object with fields 'a' and 'b'")
    a = serialize.filt_object_from_json(payload["a"], "$.a")
    b = serialize.filt_object_from_json(payload["b"], "$.b")
    try:
        print(hom_dim(a, b))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    return 0


def _cmd_multiplicity(args: argparse.Namespace) -> int:
    spec = _load_variety(args)
    if args.label is not None:
        label = _parse_label(args.label)
        print(multiplicity(rep_from_label(spec.group, label), spec, args.h_style))
        return 0
    if args.grid is None:
        raise CliError("multiplicity needs --label or --grid")
    rows = multiplicity_table(spec, _grid_from_args(spec.group, args), args.h_style)
    _print_table(rows, args.format)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    spec = _load_variety(args)
    if args.label is not None:
        print(oracle_multiplicity(spec, _parse_label(args.label), args.max_degree))
        return 0
    if args.grid is None:
        raise CliError("oracle needs --label or --grid")
    labels = sorted(_grid_from_args(spec.group, args))
    rows = [(label, oracle_multiplicity(spec, label, args.max_degree)) for label in labels]
    _print_table(rows, args.format)
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    results = run_all(args.h_style)
    print(render_report(results))
    return 0 if all(r.passed for r in results) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multifilt",
        description="Exact computations with multi-filtered representations.",
    )
    parser.add_argument("--print-conventions", action="store_true", help="print the fixed conventions and exit")
    parser.add_argument("--convention", default=CONVENTION, help="convention name (only %(default)s is implemented)")
    parser.add_argument("--format", choices=("json", "tsv"), default="json", help="table output format")
    parser.add_argument("--h-style", choices=H_STYLES, default=H_STYLE_LIE_PLUS_ELEMENTS, help="stabilizer constraint style")
    sub = parser.add_subparsers(dest="command")

    for name, fn, needs_input in (
        ("rees", _cmd_rees, True),
        ("derees", _cmd_derees, True),
        ("gr", _cmd_gr, True),
        ("hom-dim", _cmd_hom_dim, True),
    ):
        p = sub.add_parser(name)
        if needs_input:
            p.add_argument("input", nargs="?", default="-", help="JSON file or - for stdin")
        p.set_defaults(fn=fn)

    p = sub.add_parser("filtration")
    p.add_argument("--label", required=True, help="representation label 'n,m' or 'n,m;n2,m2'")
    p.add_argument("--variety", help="built-in variety name")
    p.add_argument("--variety-file", help="custom variety JSON file")
    p.add_argument("--mu", help="explicit cocharacter, comma-separated integers")
    p.set_defaults(fn=_cmd_filtration)

    for name, fn in (("multiplicity", _cmd_multiplicity), ("oracle", _cmd_oracle)):
        p = sub.add_parser(name)
        p.add_argument("--variety", help="built-in variety name")
        p.add_argument("--variety-file", help="custom variety JSON file")
        p.add_argument("--label", help="single representation label")
        p.add_argument("--grid", help="label ranges, e.g. 'n=0..8,m=-6..6'")
        if name == "oracle":
            p.add_argument(
                "--max-degree",
                type=int,
                default=None,
                help="coordinate-ring degree bound; derived from the label's weight sums when omitted",
            )
        p.set_defaults(fn=fn)

    p = sub.add_parser("verify-paper")
    p.set_defaults(fn=_cmd_verify_paper)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.convention != CONVENTION:
        print(f"input error: unknown convention {args.convention!r}; only {CONVENTION!r} is implemented", file=sys.stderr)
        return 2
    if args.print_conventions:
        print(CONVENTIONS_TEXT)
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except serialize.InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
