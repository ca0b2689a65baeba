"""Command-line front end.

Subcommands
-----------
enum-comps      enumerate colored compositions of n with r colors
descent-class   list a colored descent class (or its conjugate-inverse class)
ribbon          expand a colored ribbon element in the schur / h / f basis
rsk             apply the insertion correspondence to a colored permutation
tableau-of      map a colored permutation to its r-partite standard filling
verify          run one (or all) of the exhaustive identity suites

Output is JSON by default (byte-deterministic), ``--format table`` renders a
human-readable view.  Exit codes: 0 success, 1 verification failure, 2 bad
arguments or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bijections import colored_class_to_tableau, colored_rsk
from .compositions import enumerate_colored_compositions, parse_colored_composition
from .errors import ParseError, ResourceLimitError
from .identities import IDENTITY_REGISTRY, run_identity
from .permutations import (
    colored_descent_composition,
    conj_inverse_descent_class,
    descent_class,
    parse_colored_permutation,
)
from .shapes import rpartite_descent_set
from .symfun import (
    colored_ribbon,
    expand_in_colored_schur,
    ribbon_f_expansion,
    ribbon_h_expansion,
    ribbon_schur_by_counting,
)


def _emit(obj, fmt: str, table_renderer=None) -> None:
    if fmt == "json" or table_renderer is None:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(table_renderer(obj))


def _default_jobs() -> int:
    return int(os.environ.get("COLOREDSYM_JOBS", "1"))


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format", choices=("json", "table"), default="json", help="output format"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coloredsym",
        description="colored descent combinatorics and exact symmetric-function identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum-comps", help="enumerate colored compositions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_format(p)

    p = sub.add_parser("descent-class", help="list a colored descent class")
    p.add_argument("--comp", required=True, help='caret form, e.g. "2^0,2^1,1^1"')
    p.add_argument("--r", type=int, default=None)
    p.add_argument(
        "--conj-inverse",
        action="store_true",
        help="list the conjugate-inverse descent class instead",
    )
    _add_format(p)

    p = sub.add_parser("ribbon", help="expand a colored ribbon element")
    p.add_argument("--comp", required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--basis", choices=("schur", "h", "f"), default="schur")
    p.add_argument(
        "--via-poly",
        action="store_true",
        help="force the polynomial peeling path for the schur basis",
    )
    p.add_argument(
        "--dump-poly",
        action="store_true",
        help="also emit the full ribbon polynomial",
    )
    p.add_argument(
        "--widths",
        default=None,
        help="comma-separated per-alphabet widths (default: n per alphabet)",
    )
    _add_format(p)

    p = sub.add_parser("rsk", help="insertion correspondence")
    p.add_argument("--perm", required=True, help='window form, e.g. "2^0,3^0,1^1"')
    p.add_argument("--r", type=int, default=None)
    _add_format(p)

    p = sub.add_parser("tableau-of", help="descent class to r-partite filling")
    p.add_argument("--perm", required=True)
    p.add_argument("--r", type=int, default=None)
    _add_format(p)

    p = sub.add_parser("verify", help="run exhaustive identity suites")
    p.add_argument(
        "--identity",
        default="all",
        choices=sorted(IDENTITY_REGISTRY) + ["all"],
    )
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker count")
    _add_format(p)

    return parser


def _cmd_enum_comps(args) -> int:
    items = enumerate_colored_compositions(args.n, args.r)
    obj = {
        "n": args.n,
        "r": args.r,
        "count": len(items),
        "items": [ce.to_json() for ce in items],
    }
    _emit(obj, args.format, lambda o: "\n".join(ce.text() for ce in items))
    return 0


def _cmd_descent_class(args) -> int:
    ce = parse_colored_composition(args.comp, args.r)
    members = (
        conj_inverse_descent_class(ce) if args.conj_inverse else descent_class(ce)
    )
    obj = {
        "n": ce.n,
        "r": ce.r,
        "composition": ce.text(),
        "conj_inverse": bool(args.conj_inverse),
        "count": len(members),
        "members": [a.text() for a in members],
    }
    _emit(obj, args.format, lambda o: "\n".join(o["members"]))
    return 0


def _cmd_ribbon(args) -> int:
    ce = parse_colored_composition(args.comp, args.r)
    widths = (
        tuple(int(w) for w in args.widths.split(","))
        if args.widths
        else (ce.n,) * ce.r
    )
    if args.basis == "schur":
        if args.via_poly:
            expansion = expand_in_colored_schur(colored_ribbon(ce, widths))
        else:
            expansion = ribbon_schur_by_counting(ce)
        obj = expansion.to_json()
    elif args.basis == "h":
        obj = ribbon_h_expansion(ce).to_json()
    else:
        counts = ribbon_f_expansion(ce)
        obj = {
            "n": ce.n,
            "r": ce.r,
            "basis": "f",
            "terms": [
                {"parts": list(c.parts), "colors": list(c.colors), "coeff": mult}
                for c, mult in sorted(
                    counts.items(), key=lambda kv: (kv[0].parts, kv[0].colors)
                )
            ],
        }
    if args.dump_poly:
        poly = colored_ribbon(ce, widths)
        obj = {
            "expansion": obj,
            "polynomial": [
                {"exponents": [list(row) for row in mat], "coeff": c}
                for mat, c in poly.term_items()
            ],
            "widths": list(widths),
        }
    _emit(obj, args.format, _ribbon_table)
    return 0


def _ribbon_table(obj) -> str:
    terms = obj.get("expansion", obj).get("terms", [])
    lines = []
    for t in terms:
        if "index" in t:
            label = " | ".join(
                ",".join(map(str, part)) if part else "-" for part in t["index"]
            )
        else:
            label = ",".join(
                f"{p}^{c}" for p, c in zip(t["parts"], t["colors"])
            )
        lines.append(f"{t['coeff']:+d}  {label}")
    return "\n".join(lines)


def _cmd_rsk(args) -> int:
    w = parse_colored_permutation(args.perm, args.r)
    p, q = colored_rsk(w)
    obj = {
        "n": w.n,
        "r": w.r,
        "word": w.text(),
        "P": p.to_json(),
        "Q": q.to_json(),
        "shape": [shape.to_json() for shape in p.shape()],
    }
    _emit(obj, args.format, lambda o: f"P = {o['P']}\nQ = {o['Q']}")
    return 0


def _cmd_tableau_of(args) -> int:
    w = parse_colored_permutation(args.perm, args.r)
    bq = colored_class_to_tableau(w)
    sdes = rpartite_descent_set(bq)
    obj = {
        "n": w.n,
        "r": w.r,
        "word": w.text(),
        "descent_composition": colored_descent_composition(w).text(),
        "components": bq.to_json(),
        "shapes": [shape.to_json() for shape in bq.shape()],
        "sdes": [list(pair) for pair in sdes.pairs],
    }
    _emit(obj, args.format, lambda o: f"components = {o['components']}")
    return 0


def _cmd_verify(args) -> int:
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    names = sorted(IDENTITY_REGISTRY) if args.identity == "all" else [args.identity]
    reports = [run_identity(name, args.max_n, args.max_r, jobs) for name in names]
    if args.format == "table":
        print("\n\n".join(report.table() for report in reports))
    else:
        payload = [report.to_json() for report in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload,
                         indent=2, sort_keys=True))
    return 0 if all(report.passed for report in reports) else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    handlers = {
        "enum-comps": _cmd_enum_comps,
        "descent-class": _cmd_descent_class,
        "ribbon": _cmd_ribbon,
        "rsk": _cmd_rsk,
        "tableau-of": _cmd_tableau_of,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
