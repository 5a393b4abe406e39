"""Command-line front end: ``spinmult mult|table|enumerate|tableaux|verify``."""
from __future__ import annotations

import argparse
import json
import sys

from . import cartan, levi, oracle, twoblock, verify
from .errors import ValidationError
from .rootsys import (
    Weight,
    build_context,
    canonical_blocks,
    format_partition,
    format_weight,
    normalize_weight,
    parse_partition,
    parse_weight,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags already; keep that but route through our handler
    def error(self, message):
        raise ValidationError(message)


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _weight_strs(doubled) -> list[str]:
    return format_weight(doubled).split(",")


# -- mult ----------------------------------------------------------------------

def _mult_levi(args) -> int:
    parts = _ints(args.composition)
    doubled = parse_weight(args.weight)
    c, w = canonical_blocks(parts, doubled)
    result = levi.mult_levi(c, w)
    if args.json:
        _emit({"composition": parts, "weight": _weight_strs(doubled), "multiplicity": result})
    else:
        print(result)
    return 0


def _mult_cartan(args) -> int:
    lp = cartan.SpinPartition(parse_partition(args.partition), args.n)
    if args.method == "inductive":
        result = cartan.n_lambda_inductive(lp)
    elif args.method == "tableaux":
        result = cartan.n_lambda_tableaux(lp)
    else:
        ctx = build_context((1,) * lp.n)
        result = oracle.brute_multiplicity(ctx, cartan.mu_of_partition(lp), workers=args.workers)
    if args.json:
        _emit({"n": lp.n, "partition": list(lp.stripped), "method": args.method, "multiplicity": result})
    else:
        print(result)
    return 0


def _mult_maxparab(args) -> int:
    mp = twoblock.MarginPair(args.p, args.q, parse_partition(args.alpha), parse_partition(args.beta))
    result = twoblock.count_margin_matrices(mp)
    tableaux = twoblock.row_tableaux(mp) if (args.list_tableaux or args.list_matrices) else []
    if args.json:
        out = {"p": mp.p, "q": mp.q, "alpha": list(mp.alpha), "beta": list(mp.beta), "multiplicity": result}
        if args.list_tableaux:
            out["tableaux"] = [[list(r) for r in t.rows] for t in tableaux]
        if args.list_matrices:
            out["matrices"] = [twoblock.format_matrix(twoblock.tableau_to_matrix(t, mp.p, mp.q)).splitlines() for t in tableaux]
        _emit(out)
        return 0
    print(result)
    for t in tableaux:
        print()
        if args.list_tableaux:
            print(str(t) or "(empty)")
        else:
            print(twoblock.format_matrix(twoblock.tableau_to_matrix(t, mp.p, mp.q)))
    return 0


# -- table / enumerate / tableaux ----------------------------------------------

def _table_cartan(args) -> int:
    n = args.n
    if n < 1:
        raise ValidationError(f"n must be positive, got {n}")
    ctx = build_context((1,) * n)
    counts = None
    if ctx.num_roots <= oracle.oracle_max():
        counts = oracle.enumerate_weight_counts(ctx, workers=args.workers)
    rows = []
    for lp in cartan.p_partitions(n):
        row = {
            "partition": format_partition(lp.stripped),
            "inductive": cartan.n_lambda_inductive(lp),
            "tableaux": cartan.n_lambda_tableaux(lp),
        }
        if counts is not None:
            row["oracle"] = counts.get(cartan.mu_of_partition(lp), 0)
        rows.append(row)
    if args.json:
        _emit({"n": n, "rows": rows})
        return 0
    header = ["partition", "inductive", "tableaux"] + (["oracle"] if counts is not None else [])
    print("\t".join(header))
    for row in rows:
        print("\t".join(str(row[h]) for h in header))
    return 0


def _enumerate(args) -> int:
    ctx = build_context(_ints(args.composition))
    counts = oracle.enumerate_weight_counts(ctx, workers=args.workers)
    if not args.all:
        # one representative per orbit of block permutations
        reps: dict[Weight, int] = {}
        for w, count in counts.items():
            reps.setdefault(normalize_weight(ctx, w), count)
        counts = {w: reps[w] for w in sorted(reps, key=lambda w: w.doubled, reverse=True)}
    if args.json:
        _emit([{"weight": _weight_strs(w.doubled), "count": count} for w, count in counts.items()])
        return 0
    for w, count in counts.items():
        print(f"{format_weight(w.doubled)}\t{count}")
    return 0


def _tableaux(args) -> int:
    lp = cartan.SpinPartition(parse_partition(args.partition), args.n)
    items = [(t, cartan.n_tau(t)) for t in cartan.spin_tableaux(lp)]
    total = sum(k for _, k in items)
    if args.json:
        _emit({
            "n": lp.n,
            "partition": list(lp.stripped),
            "tableaux": [{"rows": [list(r) for r in t.rows], "n_tau": k} for t, k in items],
            "total": total,
        })
        return 0
    for idx, (t, k) in enumerate(items, 1):
        print(f"# tableau {idx}: N_tau = {k}")
        print(str(t) or "(empty)")
        print()
    print(f"total\t{total}")
    return 0


def _verify(args) -> int:
    if not (args.cartan or args.levi or args.maxparab):
        raise ValidationError("verify needs at least one of --cartan, --levi, --maxparab")
    results = verify.run(args.cartan, args.levi, args.maxparab)
    failed = None
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}\t{r.name}\tpassed={r.passed}\tfailed={r.failed}")
        if not r.ok and failed is None:
            failed = r
    if failed is not None:
        print(f"first counterexample ({failed.name}): {failed.counterexample}")
        return 1
    return 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spinmult", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON document")
    common.add_argument("--workers", type=int, default=1, help="processes for oracle enumeration")

    mult = sub.add_parser("mult", help="multiplicity of a single weight")
    msub = mult.add_subparsers(dest="variant", required=True, parser_class=_Parser)

    p = msub.add_parser("levi", parents=[common])
    p.add_argument("--composition", required=True, help="block sizes, e.g. 1,1,2")
    p.add_argument("--weight", required=True, help="coordinates, e.g. 3/2,1/2,-1,-1")
    p.set_defaults(func=_mult_levi)

    p = msub.add_parser("cartan", parents=[common])
    p.add_argument("--n", type=int)
    p.add_argument("--partition", required=True, help="e.g. 3,2,2,2,1 or 2^5")
    p.add_argument("--method", choices=["inductive", "tableaux", "oracle"], default="inductive")
    p.set_defaults(func=_mult_cartan)

    p = msub.add_parser("maxparab", parents=[common])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    listing = p.add_mutually_exclusive_group()
    listing.add_argument("--list-tableaux", action="store_true")
    listing.add_argument("--list-matrices", action="store_true")
    p.set_defaults(func=_mult_maxparab)

    table = sub.add_parser("table", help="full multiplicity tables")
    tsub = table.add_subparsers(dest="variant", required=True, parser_class=_Parser)
    p = tsub.add_parser("cartan", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_table_cartan)

    p = sub.add_parser("enumerate", parents=[common], help="all weights of a Levi context via the oracle")
    p.add_argument("--composition", required=True)
    p.add_argument("--all", action="store_true", help="list every weight, not one per block-permutation orbit")
    p.set_defaults(func=_enumerate)

    p = sub.add_parser("tableaux", parents=[common], help="spin tableaux of a shape with their N_tau")
    p.add_argument("--n", type=int)
    p.add_argument("--partition", required=True)
    p.set_defaults(func=_tableaux)

    p = sub.add_parser("verify", help="cross-check every formula against the oracle")
    p.add_argument("--cartan", type=int, metavar="N")
    p.add_argument("--levi", type=int, metavar="N")
    p.add_argument("--maxparab", type=int, metavar="S", help="all p + q <= S")
    p.set_defaults(func=_verify)
    return parser


def _attach_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "--weight -1,1" as two flags; glue the value on
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok == "--weight" and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    argv = _attach_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ValidationError as exc:
        print(f"spinmult: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
