"""Command line front end.

Exit status: 0 on success, 1 on a computation error or any FAIL line,
2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence, TextIO

from .diagram import Diagram, close_braid, component_letter, flatten, parse_braid, parse_gauss
from .errors import ComputationError, InputError, MoveError
from .milnor import DELTA_MODES, MuTable, mu_from_longitudes, mu_table, parse_longitudes
from .moves import CLASSES, fuzz, parse_log, replay, serialize_log
from .skein import MarkedBraid, check_skein, self_crossing_parity
from .wirtinger import presentation

SUBCOMMANDS = ("mu", "mubar", "linking", "present", "skein-check", "fuzz", "replay", "flatten")


def _read_input(args: argparse.Namespace) -> str:
    if args.file:
        return Path(args.file).read_text()
    if args.input is None or args.input == "-":
        return sys.stdin.read()
    return args.input


def _diagram(args: argparse.Namespace, text: str) -> Diagram:
    if args.mode == "braid":
        if args.strands is None:
            raise InputError("--strands is required with --mode braid")
        return close_braid(parse_braid(text, args.strands))
    if args.mode == "gauss":
        return parse_gauss(text.strip())
    raise InputError(f"{args.cmd} needs a diagram; use --mode braid or --mode gauss")


def _table(args: argparse.Namespace, text: str) -> MuTable:
    if args.cap is not None and args.cap < 2:
        raise InputError("--cap must be at least 2")
    if args.mode == "longitudes":
        return mu_from_longitudes(parse_longitudes(text), args.cap, args.delta_mode)
    return mu_table(_diagram(args, text), args.cap, args.delta_mode)


def _emit_table(t: MuTable, args: argparse.Namespace, out: TextIO, mubar_only: bool) -> None:
    if args.format == "records":
        rows = t.distinct_rows() if mubar_only else t.rows()
        keep = {(e.target, e.sequence) for e in rows}
        for rec, e in zip(t.to_records(), t.rows()):
            if (e.target, e.sequence) in keep:
                out.write(json.dumps(rec, sort_keys=True) + "\n")
    else:
        out.write(t.render(mubar_only=mubar_only) + "\n")


def _run(args: argparse.Namespace, out: TextIO) -> int:
    text = _read_input(args)
    cmd = args.cmd
    if cmd in ("mu", "mubar"):
        _emit_table(_table(args, text), args, out, mubar_only=cmd == "mubar")
        return 0
    if cmd == "linking":
        from .diagram import linking_number

        d = _diagram(args, text)
        parts = [
            f"link({component_letter(b)},{component_letter(a)})={linking_number(d, b, a)}"
            for a in range(d.n_components)
            for b in range(d.n_components)
            if a != b
        ]
        out.write(" ".join(parts) + "\n")
        return 0
    if cmd == "present":
        p = presentation(_diagram(args, text))
        if args.format == "records":
            out.write(json.dumps(p.to_records(), sort_keys=True) + "\n")
        else:
            out.write(p.render() + "\n")
        return 0
    if cmd == "flatten":
        out.write(str(flatten(_diagram(args, text))) + "\n")
        return 0
    if cmd == "skein-check":
        if args.mode != "braid":
            raise InputError("skein-check needs --mode braid")
        b = parse_braid(text, args.strands if args.strands is not None else 0)
        marks = [args.mark] if args.mark is not None else [
            i for i, x in enumerate(b.letters) if x.classical]
        cap = args.cap if args.cap is not None else 2
        if cap < 2:
            raise InputError("--cap must be at least 2")
        ok = True
        for m in marks:
            mb = MarkedBraid(b, m)
            report = check_skein(mb, cap)
            out.write(report.render() + "\n")
            ok &= report.passed
            parity = self_crossing_parity(mb)
            if parity is not None:
                out.write(str(parity) + "\n")
                ok &= parity.passed
        return 0 if ok else 1
    if cmd == "fuzz":
        d, log = fuzz(_diagram(args, text), args.cls, args.steps, args.seed)
        out.write(str(d) + "\n")
        if args.log:
            Path(args.log).write_text(serialize_log(log))
        else:
            out.write(serialize_log(log))
        return 0
    if cmd == "replay":
        if not args.log:
            raise InputError("replay needs --log")
        d = replay(_diagram(args, text), parse_log(Path(args.log).read_text()))
        out.write(str(d) + "\n")
        return 0
    raise InputError(f"unknown subcommand {cmd!r}")  # pragma: no cover


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mubar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="cmd", required=True, metavar="COMMAND")
    helps = {
        "mu": "full mu / Delta / mu-bar table",
        "mubar": "mu-bar for sequences of distinct indices avoiding the target",
        "linking": "ordered linking numbers",
        "present": "Wirtinger presentation and longitudes",
        "skein-check": "check the skein relations at marked crossings of a braid",
        "fuzz": "apply random moves; prints the new Gauss code and the move log",
        "replay": "apply a move log",
        "flatten": "forget crossing information",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("input", nargs="?", help="input text, or '-' for stdin (default)")
        p.add_argument("-f", "--file", help="read input from a file")
        p.add_argument("--mode", choices=("braid", "gauss", "longitudes"), default="gauss")
        p.add_argument("--strands", type=int)
        p.add_argument("--cap", type=int, help="truncation degree n (default: components + 1)")
        p.add_argument("--format", choices=("text", "records"), default="text")
        p.add_argument("--delta-mode", choices=DELTA_MODES, default="subsequence")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--steps", type=int, default=10)
        p.add_argument("--class", dest="cls", choices=sorted(CLASSES), default="isotopy")
        p.add_argument("--mark", type=int, help="letter index of the marked crossing")
        p.add_argument("--log", help="move log file (written by fuzz, read by replay)")
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None,
         err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (InputError, MoveError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except ComputationError as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
