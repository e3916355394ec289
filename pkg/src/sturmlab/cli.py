"""Command-line front end.

Exit codes: 0 on success or a verified claim, 1 when a claim does not hold,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import gaps, verify
from .balanced import balanced_count, enumerate_balanced
from .pell import from_pell, sturmian_from_pell, to_pell
from .quadratic import QuadraticIrrational
from .sturmian import ZERO, fibonacci_word, mechanical_word, parse_slope
from .words import check_binary, e_power_endings, parse_rational

FORMATS = ("plain", "csv", "json")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value}")
    return value


def _natural(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _exponent(text: str):
    try:
        e = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if e < 1:
        raise argparse.ArgumentTypeError(f"exponent must be at least 1: {text}")
    return e


def _slope(text: str) -> QuadraticIrrational:
    try:
        return parse_slope(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text: str) -> str:
    """A literal 0/1 string, or a path to a file holding one."""
    if text and not text.strip("01"):
        return text
    path = Path(text)
    if not path.is_file():
        raise argparse.ArgumentTypeError(f"not a binary word or readable file: {text!r}")
    word = "".join(path.read_text().split())
    try:
        return check_binary(word)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text} does not hold a binary word") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=_positive, default=argparse.SUPPRESS,
                        help="worker processes for censuses")

    parser = _Parser(prog="sturmlab", description=__doc__, parents=[common])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="group", required=True)

    def command(group, name, **kw):
        return group.add_parser(name, parents=[common], **kw)

    bal = sub.add_parser("balanced", parents=[common]).add_subparsers(dest="cmd", required=True)
    for name in ("count", "list"):
        command(bal, name).add_argument("n", type=_natural)

    powers = sub.add_parser("powers", parents=[common]).add_subparsers(dest="cmd", required=True)
    p = command(powers, "endings")
    p.add_argument("--word", type=_word, required=True)
    p.add_argument("--exp", type=_exponent, required=True)
    p.add_argument("--max-period", type=_positive)

    gp = sub.add_parser("gaps", parents=[common]).add_subparsers(dest="cmd", required=True)
    p = command(gp, "word")
    p.add_argument("--word", type=_word, required=True)
    p.add_argument("--exp", type=_exponent, required=True)
    p.add_argument("--max-period", type=_positive)
    p = command(gp, "census")
    p.add_argument("--length", type=_positive, required=True)
    p.add_argument("--exp", type=_exponent, required=True)
    p.add_argument("--max-period", type=_positive, required=True)
    p = command(gp, "prefix")
    p.add_argument("--slope", type=_slope, required=True)
    p.add_argument("--intercept", type=_slope, default=ZERO)
    p.add_argument("--exp", type=_exponent, required=True)
    p.add_argument("--max-period", type=_positive)
    p.add_argument("--len", type=_positive, required=True)

    gen = sub.add_parser("generate", parents=[common]).add_subparsers(dest="cmd", required=True)
    p = command(gen, "mechanical")
    p.add_argument("--slope", type=_slope, required=True)
    p.add_argument("--intercept", type=_slope, default=ZERO)
    for p in (p, command(gen, "fibonacci"), command(gen, "pell-word")):
        p.add_argument("--len", type=_natural, required=True)
        p.add_argument("--out", type=Path, help="write the word to a file instead of stdout")

    num = sub.add_parser("numeration", parents=[common]).add_subparsers(dest="cmd", required=True)
    command(num, "to-pell").add_argument("m", type=_natural)
    command(num, "from-pell").add_argument("digits")

    ver = sub.add_parser("verify", parents=[common]).add_subparsers(dest="cmd", required=True)
    for name in ("lemma1", "theorem1", "rampersad", "all"):
        command(ver, name)
    command(ver, "table1").add_argument("--prefix-len", type=_positive, default=10**5)
    return parser


def _render(records: list[dict], fmt: str, plain: Optional[str] = None) -> str:
    if fmt == "json":
        return json.dumps(records if len(records) != 1 else records[0], sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(records[0]) if records else [], lineterminator="\n")
        writer.writeheader()
        writer.writerows(records)
        return buf.getvalue().rstrip("\n")
    if plain is not None:
        return plain
    return "\n".join(" ".join(f"{k}={v}" for k, v in r.items()) for r in records)


def _ints(values) -> str:
    return " ".join(map(str, values))


def _run(args) -> tuple[int, str]:
    fmt, jobs = args.format, args.jobs
    group, cmd = args.group, args.cmd

    if group == "balanced":
        if cmd == "count":
            count = balanced_count(args.n)
            return 0, _render([{"n": args.n, "count": count}], fmt, str(count))
        words = list(enumerate_balanced(args.n))
        return 0, _render([{"word": w} for w in words], fmt, "\n".join(words))

    if group == "powers":
        ends = e_power_endings(args.word, args.exp, args.max_period)
        return 0, _render([{"endings": _ints(ends)}], fmt, _ints(ends))

    if group == "gaps":
        if cmd == "word":
            rep = gaps.gap_report(args.word, args.exp, args.max_period)
            rec = {"endings": _ints(rep.endings), "gaps": _ints(rep.gaps),
                   "max_gap": "" if rep.max_gap is None else rep.max_gap}
            return 0, _render([rec], fmt)
        if cmd == "census":
            c = gaps.census(args.length, args.exp, args.max_period, jobs)
            rec = {"length": c.length, "e": str(c.e), "max_period": c.max_period, "words": c.words,
                   "max_gap": "" if c.max_gap is None else c.max_gap, "witness": c.witness or "",
                   "min_endings": c.min_endings, "gap_values": _ints(sorted(c.gap_values))}
            return 0, _render([rec], fmt)
        values = sorted(gaps.prefix_gap_census(args.slope, args.intercept, args.exp,
                                               args.max_period, args.len))
        return 0, _render([{"gaps": _ints(values)}], fmt, _ints(values))

    if group == "generate":
        if cmd == "mechanical":
            word = mechanical_word(args.slope, args.intercept, args.len)
        elif cmd == "fibonacci":
            word = fibonacci_word(args.len)
        else:
            word = sturmian_from_pell(args.len)
        if args.out is not None:
            args.out.write_text(word + "\n")
            return 0, _render([{"length": len(word), "path": str(args.out)}], fmt)
        return 0, _render([{"word": word}], fmt, word)

    if group == "numeration":
        if cmd == "to-pell":
            digits = to_pell(args.m)
            return 0, _render([{"m": args.m, "pell": digits}], fmt, digits)
        return 0, _render([{"pell": args.digits, "m": from_pell(args.digits)}], fmt,
                          str(from_pell(args.digits)))

    if cmd == "table1":
        rows = gaps.table1_verify(args.prefix_len, jobs)
        records = [{
            "e": str(rc.row.e), "n": rc.n, "p": rc.p, "g": rc.g, "gamma": str(rc.row.gamma),
            "status": "ok" if rc.ok else "mismatch:" + "+".join(k for k, v in rc.status.items() if not v),
        } for rc in rows]
        return (0 if all(rc.ok for rc in rows) else 1), _render(records, fmt)
    checks = {
        "lemma1": verify.check_lemma1,
        "theorem1": lambda: verify.check_theorem1(jobs),
        "rampersad": verify.check_rampersad,
        "all": lambda: verify.check_all(jobs),
    }[cmd]()
    records = [{"check": c.name, "status": "pass" if c.ok else "FAIL", "detail": c.detail} for c in checks]
    plain = "\n".join(f"{r['status']:4}  {r['check']}: {r['detail']}" for r in records)
    return (0 if all(c.ok for c in checks) else 1), _render(records, fmt, plain)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"sturmlab: error: {exc}", file=sys.stderr)
        return 2
    args.format = getattr(args, "format", "plain")
    args.jobs = getattr(args, "jobs", 1)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        code, text = _run(args)
    except ValueError as exc:
        print(f"sturmlab: error: {exc}", file=sys.stderr)
        return 2
    if text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
