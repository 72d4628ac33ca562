"""Command line: enumerate peg sets, reproduce the sorting-operation tables, verify them.

    polyperm enumerate -i pegs.txt --n-max 10
    polyperm op --op reversal -k 2 --n-max 10 --format json
    polyperm verify --op block-transposition -k 1 --n-max 7

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import oracle
from .enumeration import Enumeration, enumerate_pegset
from .peg import PegParseError, read_pegset
from .rearrange import OperationKind, peg_set_for

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3

# annotations only; never used for computation
OEIS = {
    ("block-transposition", 1): "A000292",
    ("block-transposition", 2): "A228392",
    ("block-transposition", 3): "A228393",
    ("prefix-block-transposition", 1): "A000124",
    ("prefix-block-transposition", 2): "A228394",
    ("prefix-block-transposition", 3): "A228395",
    ("reversal", 1): "A000124",
    ("reversal", 2): "A228396",
    ("reversal", 3): "A228397",
    ("prefix-reversal", 1): "A000027",
    ("prefix-reversal", 2): "A002522",
    ("prefix-reversal", 3): "A228398",
    ("cut-and-paste", 1): "A060354",
    ("cut-and-paste", 2): "A228399",
    ("cut-and-paste", 3): "A228400",
    ("block-interchange", 1): "A145126",
    ("block-interchange", 2): "A228401",
}

OP_NAMES = [op.value for op in OperationKind]


def _payload(source: dict, result: Enumeration) -> dict:
    return {
        "source": source,
        "counts": [str(c) for c in result.counts],
        "binomial_coeffs": [str(c) for c in result.poly.coeffs],
        "valid_from": result.poly.valid_from,
        "cross_sections": len(result.cross_sections),
    }


def _render(payload: dict, result: Enumeration, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    src = payload["source"]
    if "op" in src:
        head = f"operation {src['op']}, k = {src['k']}"
        oeis = OEIS.get((src["op"], src["k"]))
        if oeis:
            head += f"  [OEIS {oeis}]"
    else:
        head = f"peg set {src['pegset']}"
    width = max(len(str(len(result.counts))), 1)
    lines = [head, f"{'n':>{width}}  count"]
    lines += [f"{n:>{width}}  {c}" for n, c in enumerate(result.counts, 1)]
    lines.append(f"polynomial: {result.poly}  (n >= {result.poly.valid_from})")
    lines.append("binomial coefficients: " + " ".join(payload["binomial_coeffs"]))
    lines.append(f"cross-sections: {payload['cross_sections']}")
    return "\n".join(lines)


def cmd_enumerate(args) -> int:
    try:
        pegs = read_pegset(args.input)
    except PegParseError as exc:
        print(f"{args.input}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    result = enumerate_pegset(pegs, args.n_max)
    print(_render(_payload({"pegset": args.input}, result), result, args.format))
    return EXIT_OK


def _run_op(op: str, k: int, n_max: int) -> Enumeration:
    return enumerate_pegset(peg_set_for(OperationKind(op), k), n_max)


def cmd_op(args) -> int:
    result = _run_op(args.op, args.k, args.n_max)
    print(_render(_payload({"op": args.op, "k": args.k}, result), result, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        if args.limit > oracle.HARD_LIMIT or args.n_max > args.limit:
            oracle.check_limit(args.n_max, args.limit)
    except oracle.ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    counts = _run_op(args.op, args.k, args.n_max).counts
    rows = []
    first_bad = None
    for n, mine in enumerate(counts, 1):
        truth = oracle.bfs_counts(OperationKind(args.op), args.k, n, args.limit)
        rows.append((n, mine, truth))
        if mine != truth and first_bad is None:
            first_bad = (n, mine, truth)
    if args.format == "json":
        print(json.dumps({
            "source": {"op": args.op, "k": args.k},
            "rows": [{"n": n, "pipeline": str(a), "oracle": str(b)} for n, a, b in rows],
            "verified": first_bad is None,
        }, indent=2))
    else:
        print(f"verify {args.op}, k = {args.k}, n = 1..{args.n_max}")
        for n, a, b in rows:
            print(f"{n:>2}  pipeline {a:>8}  oracle {b:>8}  {'ok' if a == b else 'MISMATCH'}")
        if first_bad is None:
            print("PASS")
        else:
            n, a, b = first_bad
            print(f"FAIL: first difference at n = {n}: pipeline {a}, oracle {b}")
    return EXIT_OK if first_bad is None else EXIT_MISMATCH


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="polyperm", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log pipeline sizes")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n-max", type=_positive, default=10)
        p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("enumerate", help="count Grid(G) for a peg set file")
    p.add_argument("-i", "--input", required=True, help="peg set file, one peg per line")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (
        ("op", cmd_op, "count permutations within k moves of the identity"),
        ("verify", cmd_verify, "compare the op counts against breadth-first search"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--op", required=True, choices=OP_NAMES)
        p.add_argument("-k", type=_nonnegative, required=True)
        common(p)
        if name == "verify":
            p.add_argument("--limit", type=_positive, default=oracle.BFS_LIMIT,
                           help=f"largest n the oracle may scan (hard cap {oracle.HARD_LIMIT})")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
