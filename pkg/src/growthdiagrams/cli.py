"""Command-line front end.

Exit codes: 0 on success, 1 on domain/format errors, 2 when a verification
reports a mismatch.  All structured input is JSON, from a file or '-' (stdin);
all output is deterministic (sorted keys, stable orders).
"""

from __future__ import annotations

import argparse
import random
import sys

from .growth import build_growth, enumerate_growths, insert, rsk, rsk_inverse
from .interlacing import DomainError
from .jsonio import (
    FormatError,
    dumps,
    grid_to_json,
    loads,
    matrix_from_json,
    partition_from_json,
    tableau_from_json,
    tableau_to_json,
    triarray_from_json,
    triarray_to_json,
    trigrid_to_json,
)
from .partitions import EMPTY, Family, enumerate_partitions
from .rules import Rule
from .series import verify_identity
from .tableaux import TableauChain
from .triangular import (
    build_triangular,
    extract_P,
    littlewood_inverse,
    littlewood_variant,
)

VERIFY_IDENTITIES = (
    "cauchy",
    "dual-cauchy",
    "skew-cauchy",
    "skew-dual-cauchy",
    "littlewood",
    "skew-littlewood",
    "pieri",
    "dual-pieri",
    "squarefree",
    "insertion-agreement",
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _parse_partition_arg(text: str, field: str):
    return partition_from_json(loads(text, field), field)


def _rule(name: str) -> Rule:
    try:
        return Rule(name)
    except ValueError:
        raise FormatError(f"rule: unknown rule {name!r}") from None


def _variant(name: str, rule_name: str | None):
    try:
        family = Family(name)
    except ValueError:
        raise FormatError(f"variant: unknown variant {name!r}") from None
    base = _rule(rule_name) if rule_name else None
    return littlewood_variant(family, base)


def cmd_rsk(args: argparse.Namespace) -> int:
    rule = _rule(args.rule)
    matrix = matrix_from_json(loads(_read(args.matrix), "matrix"))
    S = tableau_from_json(loads(_read(args.border_s), "border-s"), "border-s") if args.border_s else None
    T = tableau_from_json(loads(_read(args.border_t), "border-t"), "border-t") if args.border_t else None
    p, q = rsk(rule, matrix, S, T)
    sys.stdout.write(dumps({"P": tableau_to_json(p), "Q": tableau_to_json(q)}))
    return 0


def cmd_unrsk(args: argparse.Namespace) -> int:
    rule = _rule(args.rule)
    p = tableau_from_json(loads(_read(args.p), "P"), "P")
    q = tableau_from_json(loads(_read(args.q), "Q"), "Q")
    matrix, s, t = rsk_inverse(rule, p, q)
    sys.stdout.write(
        dumps(
            {
                "matrix": [list(r) for r in matrix],
                "S": tableau_to_json(s),
                "T": tableau_to_json(t),
            }
        )
    )
    return 0


def cmd_littlewood_encode(args: argparse.Namespace) -> int:
    variant = _variant(args.variant, args.rule)
    arr = triarray_from_json(loads(_read(args.array), "array"))
    border = (
        tableau_from_json(loads(_read(args.border), "border"), "border")
        if args.border
        else None
    )
    grid = build_triangular(variant, arr, border)
    out = {"P": tableau_to_json(extract_P(grid))}
    if args.grid:
        out["grid"] = trigrid_to_json(grid)
    sys.stdout.write(dumps(out))
    return 0


def cmd_littlewood_decode(args: argparse.Namespace) -> int:
    variant = _variant(args.variant, args.rule)
    p = tableau_from_json(loads(_read(args.tableau), "tableau"), "tableau")
    arr, border = littlewood_inverse(variant, p)
    sys.stdout.write(
        dumps(
            {
                "array": triarray_to_json(arr, variant.family.value),
                "border": tableau_to_json(border),
            }
        )
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.identity == "insertion-agreement":
        report = _insertion_agreement(args.n, args.m or args.n, args.seed)
    else:
        name = args.identity
        if name in ("littlewood", "skew-littlewood"):
            if not args.variant:
                raise FormatError("identity: --variant is required for littlewood checks")
            name = f"{name}-{Family(args.variant).value}"
        lam = _parse_partition_arg(args.shape, "shape") if args.shape else EMPTY
        rho = _parse_partition_arg(args.rho, "rho") if args.rho else EMPTY
        report = verify_identity(
            name, n=args.n, cap=args.degree, m=args.m, lam=lam, rho=rho, k=args.k
        ).to_dict()
    sys.stdout.write(dumps(report))
    return 0 if report["equal"] else 2


def _insertion_agreement(n: int, m: int, seed: int) -> dict:
    """Seed-fixed random check that column insertion equals the grid construction."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(20):
        for rule in Rule:
            hi = 1 if rule.dual else 2
            matrix = [[rng.randint(0, hi) for _ in range(m)] for _ in range(n)]
            grid = build_growth(rule, matrix)
            tab = TableauChain.trivial(EMPTY, n)
            for j in range(m):
                tab = insert(rule, tab, {i + 1: matrix[i][j] for i in range(n)})
                column = tuple(grid.vertices[i][j + 1] for i in range(n + 1))
                if tab.chain != column:
                    return {
                        "identity": "insertion-agreement",
                        "equal": False,
                        "checked_terms": checked,
                        "params": {"n": n, "m": m, "seed": seed},
                        "matrix": matrix,
                    }
                checked += 1
    return {
        "identity": "insertion-agreement",
        "equal": True,
        "checked_terms": checked,
        "params": {"n": n, "m": m, "seed": seed},
    }


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.growths:
        matrix = matrix_from_json(loads(_read(args.growths), "matrix"))
        grids = enumerate_growths(matrix, dual=args.dual)
        sys.stdout.write(
            dumps({"count": len(grids), "growths": [grid_to_json(g) for g in grids]})
        )
        return 0
    if args.partitions is not None:
        box = None
        if args.rows is not None or args.cols is not None:
            box = (args.rows if args.rows is not None else args.partitions,
                   args.cols if args.cols is not None else args.partitions)
        out = enumerate_partitions(args.partitions, box)
        sys.stdout.write(dumps({"partitions": [list(p) for p in out]}))
        return 0
    raise FormatError("enumerate: pass --growths FILE or --partitions N")


def _part_str(p) -> str:
    if p is None:
        return ""
    return "∅" if not p else ",".join(str(v) for v in p)


def render_grid_ascii(vertices, matrix) -> str:
    """Vertices interleaved with matrix entries; partitions are part lists
    (bottom row first), empty rendered as the empty-set sign, None as blank."""
    labels = [[_part_str(p) for p in row] for row in vertices]
    widths = [
        max(len(labels[i][j]) for i in range(len(labels)))
        for j in range(len(labels[0]))
    ]
    lines = []
    for i, row in enumerate(labels):
        lines.append("   ".join(lab.ljust(widths[j]) for j, lab in enumerate(row)).rstrip())
        if i < len(labels) - 1 and matrix is not None:
            cells = []
            for j in range(len(row) - 1):
                gap = widths[j] + 3
                cells.append(" " * (gap - 1) + str(matrix[i][j]))
            lines.append("".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def cmd_render(args: argparse.Namespace) -> int:
    if args.matrix:
        rule = _rule(args.rule)
        matrix = matrix_from_json(loads(_read(args.matrix), "matrix"))
        grid = build_growth(rule, matrix)
        sys.stdout.write(render_grid_ascii(grid.vertices, grid.matrix))
        return 0
    if args.array:
        variant = _variant(args.variant, args.rule if args.rule != "row" else None)
        arr = triarray_from_json(loads(_read(args.array), "array"))
        grid = build_triangular(variant, arr)
        rows = [list(r) for r in grid.rows]
        padded = [[None] * i + rows[i] for i in range(len(rows))]
        tri_matrix = [
            [arr.entry(i, j) if i <= j else " " for j in range(1, arr.n + 1)]
            for i in range(1, arr.n + 1)
        ]
        sys.stdout.write(render_grid_ascii(padded, tri_matrix))
        return 0
    raise FormatError("render: pass --matrix FILE or --array FILE")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="growthdiagrams")
    sub = parser.add_subparsers(dest="command", required=True)

    p_rsk = sub.add_parser("rsk", help="matrix -> (P, Q) via a growth diagram")
    p_rsk.add_argument("--rule", default="row")
    p_rsk.add_argument("--matrix", required=True)
    p_rsk.add_argument("--border-s", dest="border_s")
    p_rsk.add_argument("--border-t", dest="border_t")
    p_rsk.set_defaults(fn=cmd_rsk)

    p_un = sub.add_parser("unrsk", help="(P, Q) -> matrix and borders")
    p_un.add_argument("--rule", default="row")
    p_un.add_argument("--p", required=True)
    p_un.add_argument("--q", required=True)
    p_un.set_defaults(fn=cmd_unrsk)

    p_enc = sub.add_parser("littlewood-encode", help="triangular array -> tableau")
    p_enc.add_argument("--variant", required=True)
    p_enc.add_argument("--rule")
    p_enc.add_argument("--array", required=True)
    p_enc.add_argument("--border")
    p_enc.add_argument("--grid", action="store_true", help="include the full diagram")
    p_enc.set_defaults(fn=cmd_littlewood_encode)

    p_dec = sub.add_parser("littlewood-decode", help="tableau -> triangular array")
    p_dec.add_argument("--variant", required=True)
    p_dec.add_argument("--rule")
    p_dec.add_argument("--tableau", required=True)
    p_dec.set_defaults(fn=cmd_littlewood_decode)

    p_ver = sub.add_parser("verify", help="check an identity by truncated expansion")
    p_ver.add_argument("--identity", required=True, choices=VERIFY_IDENTITIES)
    p_ver.add_argument("--n", type=int, required=True)
    p_ver.add_argument("--m", type=int)
    p_ver.add_argument("--degree", type=int, default=6)
    p_ver.add_argument("--variant")
    p_ver.add_argument("--shape", help="partition as JSON, e.g. [2,1]")
    p_ver.add_argument("--rho", help="partition as JSON")
    p_ver.add_argument("--k", type=int)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.set_defaults(fn=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="growths of a matrix, or partitions")
    p_enum.add_argument("--growths", help="matrix file")
    p_enum.add_argument("--dual", action="store_true")
    p_enum.add_argument("--partitions", type=int, help="max size")
    p_enum.add_argument("--rows", type=int)
    p_enum.add_argument("--cols", type=int)
    p_enum.set_defaults(fn=cmd_enumerate)

    p_ren = sub.add_parser("render", help="ASCII growth diagram")
    p_ren.add_argument("--rule", default="row")
    p_ren.add_argument("--variant", default="all")
    p_ren.add_argument("--matrix")
    p_ren.add_argument("--array")
    p_ren.set_defaults(fn=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FormatError, DomainError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
