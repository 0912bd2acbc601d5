"""Command-line front end.

Matrix documents look like ``{"n": 2, "rows": [["1/2", "1/2"], ["1/2", "1/2"]]}``;
decomposition documents like ``{"n": 2, "terms": [{"weight": "1", "perm": [1, 2]}]}``
with 1-based permutation images.  Results go to stdout, diagnostics to stderr.

Exit codes: 0 success, 1 domain violation or failed verdict, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .birkhoff import (
    BirkhoffDecomposition,
    DecompositionError,
    NotBistochasticError,
    Permutation,
    check_bistochastic,
    decompose_with_steps,
    reconstruct,
)
from .exact_arith import QQ, format_rational, parse_rational
from .matrix_alg import (
    DimensionError,
    SquareMatrix,
    adjugate_identity_residual,
    cayley_hamilton_residual,
    char_poly,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_MALFORMED = 2


class DocumentError(ValueError):
    """Malformed input document; carries a human-readable location."""


def dump_document(doc: dict) -> str:
    """Canonical serialization used for every document this tool writes."""
    return json.dumps(doc) + "\n"


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON: {exc}") from exc


def _require_order(doc) -> int:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    n = doc.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError(f"field 'n' must be a positive integer, got {n!r}")
    return n


def parse_matrix_document(doc) -> list[list[Fraction]]:
    n = _require_order(doc)
    rows = doc.get("rows")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise DocumentError("field 'rows' must be an array of arrays")
    shape = f"{len(rows)}x" + ("/".join(str(len(r)) for r in rows) if rows else "0")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionError(f"expected a {n}x{n} matrix, got shape {shape}")
    out = []
    for i, r in enumerate(rows):
        row = []
        for j, s in enumerate(r):
            try:
                row.append(parse_rational(s))
            except ValueError as exc:
                raise DocumentError(f"entry ({i + 1},{j + 1}): {exc}") from exc
        out.append(row)
    return out


def matrix_document(rows) -> dict:
    rows = [list(r) for r in (rows.rows if hasattr(rows, "rows") else rows)]
    return {"n": len(rows), "rows": [[format_rational(a) for a in r] for r in rows]}


def parse_decomposition_document(doc) -> BirkhoffDecomposition:
    """Parse terms; invariant violations (weights, duplicates) raise DecompositionError."""
    n = _require_order(doc)
    terms = doc.get("terms")
    if not isinstance(terms, list) or not terms:
        raise DocumentError("field 'terms' must be a non-empty array")
    parsed = []
    for k, t in enumerate(terms):
        if not isinstance(t, dict) or "weight" not in t or "perm" not in t:
            raise DocumentError(f"term {k + 1} needs 'weight' and 'perm'")
        try:
            w = parse_rational(t["weight"])
        except ValueError as exc:
            raise DocumentError(f"term {k + 1} weight: {exc}") from exc
        perm = t["perm"]
        if (not isinstance(perm, list) or len(perm) != n
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in perm)):
            raise DocumentError(f"term {k + 1}: 'perm' must be {n} integers")
        try:
            p = Permutation.from_one_based(perm)
        except ValueError as exc:
            raise DocumentError(f"term {k + 1}: {exc}") from exc
        parsed.append((w, p))
    return BirkhoffDecomposition(tuple(parsed))


def decomposition_document(d: BirkhoffDecomposition) -> dict:
    return {
        "n": d.order,
        "terms": [{"weight": format_rational(w), "perm": p.one_based()} for w, p in d.terms],
    }


def _read_matrix(path: str) -> list[list[Fraction]]:
    return parse_matrix_document(_load_json(path))


def cmd_charpoly(args) -> int:
    A = SquareMatrix(_read_matrix(args.file), QQ)
    cp = char_poly(A)
    print(str(cp))
    print(json.dumps({"n": A.order, "coefficients": [format_rational(c) for c in cp.coefficients]}))
    return EXIT_OK


def cmd_verify_ch(args) -> int:
    A = SquareMatrix(_read_matrix(args.file), QQ)
    ch = cayley_hamilton_residual(A)
    adj = adjugate_identity_residual(A)
    if ch.is_zero() and adj.is_zero():
        print("OK")
        return EXIT_OK
    print("FAILED")
    print(json.dumps({
        "cayley_hamilton_residual": matrix_document(ch)["rows"],
        "adjugate_identity_residual": [[str(e) for e in r] for r in adj.rows],
    }))
    return EXIT_VIOLATION


def cmd_check(args) -> int:
    check_bistochastic(_read_matrix(args.file))
    print("bistochastic")
    return EXIT_OK


def cmd_decompose(args) -> int:
    A = check_bistochastic(_read_matrix(args.file))
    d, steps = decompose_with_steps(A)
    doc = decomposition_document(d)
    if args.emit_steps:
        doc["steps"] = [
            {
                "theta": format_rational(s.weight),
                "perm": s.perm.one_based(),
                "cycles": [
                    {"rows": [i + 1 for i in c.rows], "cols": [j + 1 for j in c.cols]}
                    for c in s.cycles
                ],
                "residual": None if s.residual is None else matrix_document(s.residual)["rows"],
            }
            for s in steps
        ]
    sys.stdout.write(dump_document(doc))
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    d = parse_decomposition_document(_load_json(args.file))
    sys.stdout.write(dump_document(matrix_document(reconstruct(d))))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cayley-birkhoff",
        description="Exact characteristic polynomials, Cayley-Hamilton checks "
                    "and Birkhoff decompositions of rational matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", help="print det(xE - A)")
    p.add_argument("file", help="matrix document ('-' for stdin)")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify-ch", help="check f(A) = 0 and adj(xE-A)(xE-A) = f(x)E")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify_ch)

    p = sub.add_parser("decompose", help="write A as a convex combination of permutations")
    p.add_argument("file")
    p.add_argument("--emit-steps", action="store_true",
                   help="include every residual and alternating cycle")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check", help="test bistochasticity")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reconstruct", help="sum a decomposition document back into a matrix")
    p.add_argument("file")
    p.set_defaults(func=cmd_reconstruct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (DocumentError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (NotBistochasticError, DecompositionError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
