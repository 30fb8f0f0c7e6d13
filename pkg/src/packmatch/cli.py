"""Command-line front end.

Exit codes: 0 solution found, 1 REJECT, 2 usage or format error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .dm3 import MAX_P, solve_dm3
from .instances import (
    WDM,
    WSP,
    Instance,
    InstanceError,
    Solution,
    check_solution,
    format_solution,
    gen_planted,
    gen_random,
    parse_instance,
    serialize_instance,
    to_wsp,
)
from .kernel import format_kernel, kernelize
from .oracle import BudgetExceeded, brute_force_solve
from .repset import RepEngine
from .selftest import run_selftest
from .wdm import solve_wdm
from .wsp import solve_wsp

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3
ALGORITHMS = ("wdm", "wsp", "dm3", "brute")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    name: str
    alg: str
    q: int
    p: int
    m: int
    universe: int
    millis: float
    peak_cell: int
    result: Optional[int]

    def row(self, timing: bool = True) -> str:
        millis = f"{self.millis:.1f}" if timing else "-"
        result = "REJECT" if self.result is None else str(self.result)
        return "\t".join([self.name, self.alg, str(self.q), str(self.p), str(self.m), millis, result])


def _pick_alg(inst: Instance, alg: str) -> str:
    if alg == "auto":
        return "wdm" if inst.kind == WDM else "wsp"
    if alg in ("wdm", "dm3") and inst.kind != WDM:
        raise UsageError(f"--alg {alg} needs a WDM instance, got {inst.kind}")
    if alg == "dm3":
        if inst.q != 3:
            raise UsageError("--alg dm3 needs q = 3")
        if len({m.weight for m in inst.members}) > 1:
            raise UsageError("--alg dm3 only handles unweighted instances (all weights equal)")
        if inst.p > MAX_P:
            raise UsageError(f"--alg dm3 refuses p > {MAX_P}: it enumerates 4^(p-1) subsets")
    return alg


def run_solver(inst: Instance, alg: str, threads: int = 1, engine: Optional[RepEngine] = None):
    engine = engine or RepEngine(inst.universe_size)
    if alg == "brute":
        return brute_force_solve(inst)
    if alg == "wdm":
        return solve_wdm(inst, engine, threads)
    if alg == "wsp":
        return solve_wsp(inst if inst.kind == WSP else to_wsp(inst), engine, threads)
    if alg == "dm3":
        return solve_dm3(inst, engine, threads)
    raise UsageError(f"unknown algorithm {alg!r}")


def solve(inst: Instance, alg: str, use_kernel: bool, threads: int = 1,
          engine: Optional[RepEngine] = None) -> Optional[Solution]:
    alg = _pick_alg(inst, alg)
    if not use_kernel:
        return run_solver(inst, alg, threads, engine)
    res = kernelize(inst)
    sol = run_solver(res.kernel, alg, threads, engine)
    if sol is None:
        return None
    return Solution(res.lift(sol.picked), sol.total_weight)


def _read(path: str) -> Instance:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(str(exc)) from None
    return parse_instance(text)


def cmd_solve(args, out) -> int:
    inst = _read(args.file)
    sol = solve(inst, args.alg, args.kernel, args.threads)
    if sol is not None and check_solution(inst, sol):
        raise AssertionError("; ".join(check_solution(inst, sol)))
    out.write(format_solution(sol))
    return EXIT_OK if sol is not None else EXIT_REJECT


def cmd_kernelize(args, out) -> int:
    out.write(format_kernel(kernelize(_read(args.file))))
    return EXIT_OK


def cmd_gen(args, out) -> int:
    sizes = [int(x) for x in args.sizes.split(",")]
    if len(sizes) == 1 and args.kind == WDM:
        sizes = sizes * args.q
    try:
        if args.planted:
            inst, planted = gen_planted(args.seed, args.kind, args.q, args.p, sizes,
                                        args.m_extra, args.wlo, args.whi)
            out.write(f"# planted weight {planted}\n")
        else:
            inst = gen_random(args.seed, args.kind, args.q, args.p, sizes,
                              args.m, args.wlo, args.whi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(serialize_instance(inst))
    return EXIT_OK


def cmd_bench(args, out) -> int:
    root = Path(args.dir)
    if not root.is_dir():
        raise UsageError(f"{root} is not a directory")
    out.write("name\talg\tq\tp\tm\tmillis\tresult\n")
    status = EXIT_OK
    for path in sorted(p for p in root.iterdir() if p.is_file()):
        try:
            inst = parse_instance(path.read_text(encoding="utf-8"))
        except (InstanceError, UnicodeDecodeError):
            continue
        alg = _pick_alg(inst, args.alg)
        engine = RepEngine(inst.universe_size)
        start = time.perf_counter()
        sol = solve(inst, alg, args.kernel, args.threads, engine)
        millis = (time.perf_counter() - start) * 1000
        if sol is not None and check_solution(inst, sol):
            status = EXIT_INVARIANT
        report = RunReport(path.name, alg, inst.q, inst.p, inst.m, inst.universe_size,
                           millis, engine.peak, None if sol is None else sol.total_weight)
        out.write(report.row(timing=not args.no_timing) + "\n")
    return status


def cmd_selftest(args, out) -> int:
    return EXIT_OK if run_selftest(out, quick=args.quick, seed=args.seed) else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads for independent inner loops (output is identical)")

    parser = argparse.ArgumentParser(prog="packmatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="solve one instance file")
    p.add_argument("--alg", choices=("auto",) + ALGORITHMS, default="auto")
    p.add_argument("--kernel", action="store_true", help="kernelize first, lift indices back")
    p.add_argument("file")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernelize", parents=[common], help="print a kernel with index maps")
    p.add_argument("file")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("gen", parents=[common], help="generate a random instance")
    p.add_argument("--kind", choices=(WDM, WSP), default=WDM)
    p.add_argument("--q", type=int, default=3)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--sizes", default="5", help="comma-separated universe size(s)")
    p.add_argument("--m", type=int, default=20, help="number of members (random mode)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wlo", type=int, default=-20)
    p.add_argument("--whi", type=int, default=20)
    p.add_argument("--planted", action="store_true", help="plant p disjoint members first")
    p.add_argument("--m-extra", type=int, default=10, help="extra members (planted mode)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", parents=[common], help="solve every instance in a directory")
    p.add_argument("--alg", choices=("auto",) + ALGORITHMS, default="auto")
    p.add_argument("--kernel", action="store_true")
    p.add_argument("--no-timing", action="store_true", help="print '-' instead of millis")
    p.add_argument("dir")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", parents=[common], help="run the randomised invariant suites")
    p.add_argument("--quick", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, InstanceError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
