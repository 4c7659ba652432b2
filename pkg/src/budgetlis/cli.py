"""Command line front end.

Exit codes: 0 ok, 1 parse or I/O error, 2 usage, 3 internal invariant.
"""

from __future__ import annotations

import argparse
import csv
import json
import struct
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from .adjustable import IntegrityError, InvariantViolation, adjustable_run
from .budget import Budget, BudgetMeter
from .generators import KINDS, generate
from .patience import ps_piles
from .permutation import NotAPermutation, perm_lis_length
from .reconstruct import ReconstructionStats, find_lis
from .sequence_access import ParseError, SequenceSource, open_array, open_file

EXIT_OK, EXIT_PARSE, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3

CSV_HEADER = ["n", "s", "lis", "time_ms", "peak_words", "forward_passes", "backward_passes", "reads"]


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    lis: int
    s: Optional[int]
    peak_words: int
    reads: int
    forward_passes: int
    backward_passes: int
    reversals: int
    seek_cost: int
    time_ms: float
    algorithm: str = "adjustable"
    n: int = 0
    peak_bits: int = 0
    iterations: Optional[int] = None
    max_depth: Optional[int] = None
    subsequence: Optional[list[tuple[int, int]]] = field(default=None, repr=False)

    def lines(self) -> list[str]:
        out = []
        for k, v in asdict(self).items():
            if k == "subsequence" or v is None:
                continue
            out.append(f"{k}={round(v, 3) if isinstance(v, float) else v}")
        return out

    def to_json(self) -> str:
        d = {k: v for k, v in asdict(self).items() if v is not None and k != "subsequence"}
        return json.dumps(d, separators=(",", ":"))


def _resolve_budget(requested: Optional[int], n: int) -> Budget:
    if requested is None:
        return Budget.default_for(n)
    if requested < 2:
        raise UsageError(f"--budget must be at least 2, got {requested}")
    budget = Budget(requested)
    if n and requested > n:
        _warn(f"budget {requested} exceeds n={n}; clamped to {max(2, n)}")
    elif not budget.in_regime(n):
        _warn(f"budget {requested} is below sqrt(n) for n={n}; "
              "the pass bound no longer applies")
    return budget


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def run_length(source: SequenceSource, algorithm: str, budget: Budget) -> RunReport:
    meter = BudgetMeter()
    iterations = None
    s: Optional[int] = None
    t0 = time.perf_counter()
    if algorithm == "classic":
        lis = len(ps_piles(source, meter=meter))
    elif algorithm == "permutation":
        lis = perm_lis_length(source, meter)
    elif algorithm == "adjustable":
        run = adjustable_run(source, budget=budget, meter=meter)
        lis, iterations, s = run.lis, run.iterations, run.s
    else:
        raise UsageError(f"unknown algorithm {algorithm!r}")
    elapsed = (time.perf_counter() - t0) * 1000
    st = source.stats
    return RunReport(lis, s, meter.peak_words, st.reads, st.forward_passes, st.backward_passes,
                     st.reversals, st.seek_cost, elapsed, algorithm, source.length,
                     meter.peak_bits, iterations)


def run_extract(source: SequenceSource, budget: Budget) -> RunReport:
    meter = BudgetMeter()
    rstats = ReconstructionStats()
    t0 = time.perf_counter()
    result = find_lis(source, budget, meter, rstats)
    elapsed = (time.perf_counter() - t0) * 1000
    st = source.stats
    return RunReport(result.length, budget.clamp(source.length), meter.peak_words, st.reads,
                     st.forward_passes, st.backward_passes, st.reversals, st.seek_cost,
                     elapsed, "recursive", source.length, meter.peak_bits,
                     max_depth=rstats.max_depth,
                     subsequence=[(e.position, e.value) for e in result.subsequence])


def _emit_report(report: RunReport, machine: bool, stream) -> None:
    if machine:
        print(report.to_json(), file=stream)
    else:
        for line in report.lines():
            print(line, file=stream)


def cmd_length(args: argparse.Namespace) -> int:
    with open_file(args.input, args.format) as source:
        budget = _resolve_budget(args.budget, source.length)
        try:
            report = run_length(source, args.algorithm, budget)
        except NotAPermutation as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    _emit_report(report, args.machine_readable, sys.stdout)
    return EXIT_OK


def cmd_extract(args: argparse.Namespace) -> int:
    with open_file(args.input, args.format) as source:
        budget = _resolve_budget(args.budget, source.length)
        report = run_extract(source, budget)
    for pos, val in report.subsequence:
        print(f"{pos} {val}")
    _emit_report(report, args.machine_readable, sys.stderr)
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        values = generate(args.kind, args.n, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "binary":
        sys.stdout.buffer.write(struct.pack(f"<{len(values)}q", *values))
        sys.stdout.flush()
    else:
        sys.stdout.write("".join(f"{v}\n" for v in values))
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    if args.input:
        with open_file(args.input, args.format) as f:
            values = [v for v, _ in f.iter_view()]
    elif args.kind and args.n:
        try:
            values = generate(args.kind, args.n, args.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError("bench needs --input or --kind with --n")
    n = len(values)
    budgets = args.budget or [Budget.default_for(n).s]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for s in budgets:
        budget = _resolve_budget(s, n)
        for _ in range(args.repetitions):
            source = open_array(values)
            if args.extract:
                r = run_extract(source, budget)
            else:
                r = run_length(source, "adjustable", budget)
            writer.writerow([n, budget.clamp(n), r.lis, f"{r.time_ms:.3f}", r.peak_words,
                             r.forward_passes, r.backward_passes, r.reads])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="budgetlis",
                                     description="Longest increasing subsequence under a word budget.")
    sub = parser.add_subparsers(dest="command", required=True)

    def input_args(p: argparse.ArgumentParser, required: bool = True) -> None:
        p.add_argument("--input", required=required, help="input file")
        p.add_argument("--format", choices=("text", "binary"), default="text")

    p = sub.add_parser("length", help="compute lis")
    input_args(p)
    p.add_argument("--budget", type=int, help="word budget s (default ceil(sqrt(n)))")
    p.add_argument("--algorithm", choices=("classic", "adjustable", "permutation"),
                   default="adjustable")
    p.add_argument("--machine-readable", action="store_true")
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("extract", help="print one longest increasing subsequence")
    input_args(p)
    p.add_argument("--budget", type=int)
    p.add_argument("--machine-readable", action="store_true")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("generate", help="write a generated sequence to stdout")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "binary"), default="text")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bench", help="CSV of instrumentation per budget")
    input_args(p, required=False)
    p.add_argument("--kind", choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, nargs="+")
    p.add_argument("--repetitions", type=int, default=1)
    p.add_argument("--extract", action="store_true", help="benchmark extraction instead of length")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvariantViolation, IntegrityError) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
