"""Command-line front end: ``quarticrank {rank,enumerate,classify,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from math import gcd

from . import arith
from .basefield import BaseField, make_basefield
from .classify import classify_shapes
from .corpus import verify_corpus
from .errors import InputError, InvariantViolation
from .quarticfield import make_quarticfield
from .rank import rank_closed_form, rank_generic

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
COLUMNS = ("n", "n_factors", "l", "mu", "r_star", "rank", "case_id", "conductor")
SWEEP_LS = (17, 41, 73, 89, 97, 113, 137, 2)


@dataclass(frozen=True)
class OutputRow:
    n: int
    n_factors: str
    l: int
    mu: int
    r_star: int
    rank: int
    case_id: str
    conductor: int

    @classmethod
    def from_csv(cls, record: dict[str, str]) -> "OutputRow":
        ints = {"n", "l", "mu", "r_star", "rank", "conductor"}
        return cls(**{k: int(v) if k in ints else v for k, v in record.items()})


def compute_row(n: int, k: BaseField, path: str = "both") -> OutputRow:
    K = make_quarticfield(n, k)
    if path == "generic":
        res = rank_generic(K)
    elif path == "closed":
        res = rank_closed_form(K)
    else:
        res, other = rank_generic(K), rank_closed_form(K)
        if (res.rank, res.mu, res.r_star) != (other.rank, other.mu, other.r_star):
            raise InvariantViolation(
                f"engines disagree for n={n}, l={k.l}: {res} vs {other}")
    return OutputRow(n=n, n_factors="*".join(map(str, K.factors)) or "1", l=k.l,
                     mu=res.mu, r_star=res.r_star, rank=res.rank,
                     case_id=res.case_id, conductor=K.conductor)


def admissible_n(n_max: int, l: int) -> list[int]:
    return [n for n in range(1, n_max + 1)
            if gcd(n, l) == 1 and arith.is_squarefree(n)]


def _row_worker(args: tuple[int, int, str]) -> OutputRow:
    n, l, path = args
    return compute_row(n, make_basefield(l), path)


class _Writer:
    """Single writer for rows, CSV with header or JSON lines."""

    def __init__(self, fmt: str, out):
        self.fmt, self.out = fmt, out
        if fmt == "csv":
            self._csv = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
            self._csv.writeheader()

    def write(self, row: OutputRow) -> None:
        if self.fmt == "csv":
            self._csv.writerow(asdict(row))
        else:
            self.out.write(json.dumps(asdict(row)) + "\n")


def cmd_rank(args) -> int:
    row = compute_row(args.n, make_basefield(args.l), args.path)
    _Writer(args.format, sys.stdout).write(row)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n_max < 1:
        raise InputError(f"--n-max must be >= 1, got {args.n_max}")
    make_basefield(args.l)  # validate before spawning workers
    ns = admissible_n(args.n_max, args.l)
    writer = _Writer(args.format, sys.stdout)
    jobs = [(n, args.l, args.path) for n in ns]
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            # map yields in submission order, so output stays ascending in n
            rows = pool.map(_row_worker, jobs, chunksize=64)
            for row in rows:
                if args.rank is None or row.rank == args.rank:
                    writer.write(row)
    else:
        for job in jobs:
            row = _row_worker(job)
            if args.rank is None or row.rank == args.rank:
                writer.write(row)
    return EXIT_OK


def cmd_classify(args) -> int:
    if args.rank not in (0, 1, 2, 3):
        raise InputError(f"--rank must be in 0..3, got {args.rank}")
    k = make_basefield(args.l)
    descriptors = classify_shapes(k, args.rank)
    family = "L2" if k.is_two else "L1mod8"
    if args.format == "json":
        for d in descriptors:
            print(json.dumps({"tag": f"{family}/r{args.rank}/c{d.clause}", **d.to_dict()}))
    else:
        for d in descriptors:
            print(f"{family}/r{args.rank}/c{d.clause}: {d.text}")
    return EXIT_OK


def sweep(l: int, n_max: int) -> list[str]:
    """Dual-path disagreements for every admissible n <= n_max (empty if none)."""
    k = make_basefield(l)
    problems = []
    for n in admissible_n(n_max, l):
        try:
            K = make_quarticfield(n, k)
            g, c = rank_generic(K), rank_closed_form(K)
        except (InputError, InvariantViolation) as exc:
            problems.append(f"l={l} n={n}: {exc}")
            continue
        if g.rank != c.rank:
            problems.append(f"l={l} n={n}: generic {g.rank} != closed {c.rank} "
                            f"[{c.case_id}]")
    return problems


def cmd_verify(args) -> int:
    if args.l is not None:
        make_basefield(args.l)
    failed = False
    report = verify_corpus(args.l)
    for f in report.failures:
        print(f"FAIL corpus line {f.entry.line} n={f.entry.n} l={f.entry.l} "
              f"[{f.case_id}]: {f.message}")
    failed |= not report.ok
    print(f"corpus: {len(report) - len(report.failures)}/{len(report)} entries pass")
    if args.only != "corpus" and args.sweep_max > 0:
        ls = SWEEP_LS if args.l is None else (args.l,)
        for l in ls:
            problems = sweep(l, args.sweep_max)
            for p in problems:
                print(f"FAIL sweep {p}")
            failed |= bool(problems)
            if not args.quiet:
                print(f"sweep l={l} n<={args.sweep_max}: "
                      f"{'ok' if not problems else f'{len(problems)} failures'}")
    print("verify: " + ("FAILED" if failed else "ok"))
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quarticrank",
        description="2-rank of the class group of Q(sqrt(n*eps0*sqrt l)), "
                    "l = 2 or a prime = 1 mod 8.")
    parser.add_argument("--quiet", action="store_true", help="less chatter")
    # --quiet is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, default="csv", choices=("csv", "json")):
        p.add_argument("--format", choices=choices, default=default)

    p = sub.add_parser("rank", parents=[common], help="rank of a single field")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--path", choices=("generic", "closed", "both"), default="both")
    fmt(p)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("enumerate", parents=[common], help="rows for all squarefree n <= N coprime to l")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--path", choices=("generic", "closed", "both"), default="both")
    p.add_argument("--workers", type=int, default=1)
    fmt(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", parents=[common], help="shape descriptors for a given rank")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--rank", type=int, required=True)
    fmt(p, default="text", choices=("text", "json"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", parents=[common], help="corpus check plus dual-path sweep")
    p.add_argument("--sweep-max", type=int, default=2000)
    p.add_argument("--only", choices=("corpus",), default=None)
    p.add_argument("--l", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
