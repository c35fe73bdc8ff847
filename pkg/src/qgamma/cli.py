"""Command line front end.

    qgamma expand "q[3] o q[2]"
    qgamma plethysm "Q[2,1]" "Q[p,2]" --p 2..5
    qgamma vertex "Q[3,1]" --p -4..6
    qgamma stability outer --lambda 1 --mu 3 --nu 2,1 --p 1..7
    qgamma recurrence bk 3 2 1

Exit status: 0 success, 1 usage error, 2 a verification reported equal=false.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from dataclasses import dataclass
from typing import Sequence

from . import __version__
from .cache import cache_load, cache_store, default_path
from .expr import ExpressionError, parse
from .partitions import parse_partition
from .plethysm import pleth
from .recurrence import verify_bk, verify_master, verify_max_first_part, verify_murnaghan
from .schur_q import to_q_basis
from .serialize import dumps, expansion_to_json, gamma_to_json
from .stability import sequence_inner, sequence_outer
from .vertex import vertex_apply

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a range like 2..9, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _partition_arg(text: str) -> tuple[int, ...]:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


@dataclass
class JobConfig:
    verb: str
    args: argparse.Namespace
    output: str = "json"
    cache_path: str | None = None
    jobs: int = 1


def _global_options(parser: argparse.ArgumentParser, suppress: bool) -> None:
    # accepted before or after the verb; SUPPRESS keeps subparsers from clobbering
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("json", "tsv"), default=d("json"))
    parser.add_argument("--cache", default=d(None), help="q_n cache file (default: $QGAMMA_CACHE)")
    parser.add_argument("--jobs", type=int, default=d(1), help="worker processes for sequence sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qgamma", description="Exact computations with Schur Q-functions.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(group, name: str, **kw) -> argparse.ArgumentParser:
        return group.add_parser(name, parents=[common], **kw)

    p = verb(sub, "expand", help="expand an expression in the Q basis")
    p.add_argument("expr")
    p.add_argument("--p", type=parse_range, help="sweep the variable p over a..b")
    p.add_argument("--basis", choices=("q", "p"), default="q", help="Q basis or power sums")

    p = verb(sub, "plethysm", help="F o G in the Q basis")
    p.add_argument("F")
    p.add_argument("G")
    p.add_argument("--p", type=parse_range)
    p.add_argument("--basis", choices=("q", "p"), default="q")

    p = verb(sub, "vertex", help="z^p coefficients of the vertex operator")
    p.add_argument("expr")
    p.add_argument("--p", type=parse_range, required=True)

    p = verb(sub, "stability", help="plethysm coefficient sequences")
    p.add_argument("kind", choices=("inner", "outer"))
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--nu", type=_partition_arg, required=True)
    p.add_argument("--p", type=parse_range, required=True)
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--json", action="store_true", help="same as --format json")

    p = verb(sub, "recurrence", help="verify recurrence identities")
    rsub = p.add_subparsers(dest="which", required=True, parser_class=_Parser)
    for name in ("bk", "murnaghan"):
        r = verb(rsub, name)
        r.add_argument("n", type=int)
        r.add_argument("m", type=int)
        r.add_argument("k", type=int)
        if name == "murnaghan":
            r.add_argument("--literal-bound", action="store_true", help="stop the p-sum at n-k")
    r = verb(rsub, "master")
    r.add_argument("m", type=int)
    r.add_argument("k", type=int)
    r.add_argument("W", type=int)
    r = verb(rsub, "maxpart")
    r.add_argument("n", type=int)
    r.add_argument("lam", type=_partition_arg)
    return parser


def _fix_negative_ranges(argv: Sequence[str]) -> list[str]:
    # "--p -4..6" would otherwise be read as an option
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a == "--p":
            nxt = next(it, None)
            if nxt is not None and _RANGE.match(nxt):
                out.append(f"--p={nxt}")
                continue
            out.append(a)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(a)
    return out


def _element_payload(F, basis: str):
    return gamma_to_json(F) if basis == "p" else expansion_to_json(to_q_basis(F))


def _tsv_expansion(payload) -> str:
    lines = []
    for row in payload:
        coeff = row["coeff"]
        lines.append(f"{row['partition']}\t{coeff if not isinstance(coeff, list) else dumps(coeff).replace(chr(10), '')}")
    return "\n".join(lines)


def _sweep(fn, rng):
    if rng is None:
        return fn({})
    return {str(p): fn({"p": p}) for p in range(rng[0], rng[1] + 1)}


def run(config: JobConfig) -> tuple[int, str]:
    a = config.args
    status = EXIT_OK
    if config.verb == "expand":
        payload = _sweep(lambda v: _element_payload(parse(a.expr, v), a.basis), a.p)
    elif config.verb == "plethysm":

        def one(v):
            F, G = parse(a.F, v), parse(a.G, v)
            if not F.is_z_free():
                raise UsageError("F must not contain z")
            return _element_payload(pleth(F, G), a.basis)

        payload = _sweep(one, a.p)
    elif config.verb == "vertex":
        F = parse(a.expr)
        if not F.is_z_free():
            raise UsageError("vertex needs a z-free element")
        coeffs = vertex_apply(F, *a.p)
        payload = {str(p): expansion_to_json(to_q_basis(G)) for p, G in coeffs.items()}
    elif config.verb == "stability":
        fn = sequence_inner if a.kind == "inner" else sequence_outer
        if a.window < 2:
            raise UsageError("--window must be at least 2")
        try:
            report = fn(a.lam, a.mu, a.nu, a.p[0], a.p[1], window=a.window, jobs=config.jobs)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if config.output == "tsv":
            rows = ["p\ts\tvalue"] + [f"{e['p']}\t{e['s']}\t{e['value']}" for e in report.as_dict()["entries"]]
            return status, "\n".join(rows) + "\n"
        payload = report.as_dict()
    elif config.verb == "recurrence":
        try:
            if a.which == "bk":
                rep = verify_bk(a.n, a.m, a.k)
            elif a.which == "murnaghan":
                rep = verify_murnaghan(a.n, a.m, a.k, literal_bound=a.literal_bound)
            elif a.which == "master":
                rep = verify_master(a.m, a.k, a.W)
            else:
                rep = verify_max_first_part(a.n, a.lam)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        payload = rep.as_dict()
        if not rep.equal:
            status = EXIT_FAILED
        if config.output == "tsv":
            return status, f"equal\tterm_count\n{str(rep.equal).lower()}\t{rep.term_count}\n"
    else:  # pragma: no cover - argparse rejects unknown verbs
        raise UsageError(f"unknown verb {config.verb!r}")

    if config.output == "tsv" and isinstance(payload, list):
        return status, _tsv_expansion(payload) + "\n"
    return status, dumps(payload) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="qgamma: %(levelname)s: %(message)s")
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_fix_negative_ranges(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    output = "json" if getattr(args, "json", False) else args.format
    config = JobConfig(args.verb, args, output, args.cache or default_path(), max(1, args.jobs))
    cache_load(config.cache_path)
    try:
        status, text = run(config)
    except (UsageError, ExpressionError) as exc:
        print(f"qgamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    cache_store(config.cache_path)
    return status
