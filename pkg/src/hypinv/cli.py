"""Command-line front end.

Exit codes are a stable contract: 0 pass, 1 verification failure,
2 parameter error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance
from .campaign import TAGS, run_campaign
from .errors import DenominatorPole, InvalidParameter
from .seqtransform import TransformSpec, apply, as_sequence, kernel_for

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PARAM = 2
EXIT_INPUT = 3


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def cmd_transform(args) -> int:
    try:
        raw_seq = _load_json(args.input)
        raw_spec = _load_json(args.spec)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        spec = TransformSpec.from_json(raw_spec)
    except InvalidParameter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        print(f"error: malformed transform spec: {exc!r}", file=sys.stderr)
        return EXIT_INPUT
    try:
        seq = as_sequence(raw_seq["seq"])
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        print(f"error: malformed sequence: {exc!r}", file=sys.stderr)
        return EXIT_INPUT
    try:
        out = apply(kernel_for(spec), seq)
    except (InvalidParameter, DenominatorPole) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAM
    print(json.dumps({"seq": [v.to_json() for v in out]}))
    return EXIT_PASS


def cmd_verify(args) -> int:
    if args.id not in TAGS:
        print(f"error: unknown identity tag {args.id!r}", file=sys.stderr)
        return EXIT_PARAM
    if args.trials < 0 or args.nmax < 0:
        print("error: --trials and --nmax must be nonnegative", file=sys.stderr)
        return EXIT_PARAM
    report = run_campaign(args.id, args.trials, args.nmax, args.seed)
    text = report.dumps()
    print(text)
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / f"{report.identity}-{args.seed}.json").write_text(text + "\n", encoding="utf-8")
    if report.status == "invalid-parameter":
        return EXIT_PARAM
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_selftest(args) -> int:
    results = acceptance.run_acceptance(mutate=args.mutate)
    for result in results:
        if not result.passed:
            print(f"selftest FAILED at criterion {result.number} ({result.name}): {result.detail}")
            return EXIT_FAIL
    print("selftest passed")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypinv",
        description="Exact verification of inverse hypergeometric sequence transforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="apply a transform to a sequence prefix")
    p.add_argument("--in", dest="input", required=True, help="sequence JSON file")
    p.add_argument("--spec", required=True, help="transform JSON file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="run a seeded identity campaign")
    p.add_argument("--id", required=True, help="identity tag")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", help="directory for the report file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    # Test hook: flips one kernel family's (2, 1) coefficient sign.
    p.add_argument("--mutate", choices=acceptance.KERNEL_FAMILIES, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors; that matches the parameter-error code
        return int(exc.code or 0)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
