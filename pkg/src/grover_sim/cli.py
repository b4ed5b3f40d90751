"""Command-line front end: ``grover-sim {run,sweep,circuit4,baseline,oracle-check,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Sequence, TextIO

from . import analytic, baseline, engine, verify
from .errors import GroverError
from .four_item import OracleStyle, build_circuit, oracle_equivalence_check, parse_marked, run_circuit
from .oracle import MarkedSet, kickback_equivalence_check

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

CSV_HEADER = ["iteration", "success_probability", "marked_amplitude", "unmarked_amplitude", "analytic_probability"]
SWEEP_ATOL = 1e-10


class UsageError(GroverError):
    pass


def parse_marked_indices(text: str, n: int) -> MarkedSet:
    """``"5"``, ``"2,5"`` or ``"b101"`` (MSB-first binary, exactly n bits)."""
    indices = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if token.startswith("b"):
            bits = token[1:]
            if len(bits) != n or set(bits) - {"0", "1"}:
                raise UsageError(f"binary index {token!r} must have exactly {n} bits")
            indices.append(int(bits, 2))
        else:
            try:
                indices.append(int(token, 10))
            except ValueError:
                raise UsageError(f"cannot parse marked index {token!r}") from None
    return MarkedSet(n, indices)


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi)
    except ValueError:
        raise UsageError(f"sweep range must look like A..B, got {text!r}") from None
    if not sep or a < 0 or b < a:
        raise UsageError(f"sweep range {text!r} is empty or negative")
    return a, b


def _fmt(x: float) -> str:
    # 12 significant digits; adding 0.0 turns -0.0 into 0.0
    return format(float(x) + 0.0, ".12g")


def write_trajectory_csv(traj: engine.Trajectory, out: TextIO, k_range: tuple[int, int] | None = None) -> None:
    theta = analytic.theta_of(traj.N, traj.M)
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    lo, hi = k_range if k_range else (0, len(traj) - 1)
    for rec in traj.records[lo : hi + 1]:
        writer.writerow(
            [
                rec.k,
                _fmt(rec.success_probability),
                _fmt(rec.marked_amplitude),
                _fmt(rec.unmarked_amplitude),
                _fmt(analytic.RotationState(theta, rec.k).success_probability),
            ]
        )


def _write_out(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _csv_text(traj: engine.Trajectory, k_range: tuple[int, int] | None = None) -> str:
    buf = io.StringIO()
    write_trajectory_csv(traj, buf, k_range)
    return buf.getvalue()


def _plan_lines(n: int, marked: MarkedSet, p: engine.GroverPlan) -> list[str]:
    return [
        f"search space     N = {p.N} (n = {n}), M = {p.M}, marked = {marked.label()}",
        f"theta            = {p.theta:.12f} rad ({p.theta_degrees:.2f} deg)",
        f"rotation/iter    = {p.rotation_degrees:.2f} deg",
        f"k_opt            = {p.k_opt}  (pi/4*sqrt(N/M) = {p.approx_iterations:.4f})",
        f"predicted        = {p.predicted_success:.12f}",
    ]


def cmd_run(args: argparse.Namespace, out: TextIO) -> int:
    marked = parse_marked_indices(args.marked, args.n)
    res = engine.run(args.n, marked, args.iterations)
    csv_text = _csv_text(res.trajectory)
    if args.out:
        _write_out(args.out, csv_text)
    if args.format == "csv" and not args.out:
        out.write(csv_text)
        return EXIT_OK
    lines = _plan_lines(args.n, marked, res.plan)
    lines += [
        f"k                = {len(res.trajectory) - 1}",
        f"success          = {res.success_probability:.12f}",
        f"oracle queries   = {res.queries}",
    ]
    if args.out:
        lines.append(f"trajectory CSV   -> {args.out}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace, out: TextIO) -> int:
    marked = parse_marked_indices(args.marked, args.n)
    p = engine.plan(2**args.n, marked.M)
    lo, hi = parse_range(args.sweep) if args.sweep else (0, max(2 * p.k_opt, 1))
    res = engine.run(args.n, marked, hi)
    theta = p.theta
    worst = max(
        abs(rec.success_probability - analytic.RotationState(theta, rec.k).success_probability)
        for rec in res.trajectory.records[lo : hi + 1]
    )
    csv_text = _csv_text(res.trajectory, (lo, hi))
    if args.out:
        _write_out(args.out, csv_text)
    status = EXIT_OK if worst < SWEEP_ATOL else EXIT_FAIL
    if args.format == "csv" and not args.out:
        out.write(csv_text)
        return status
    probs = res.trajectory.probabilities()
    peak = next((k for k in range(len(probs) - 1) if probs[k + 1] < probs[k]), len(probs) - 1)
    lines = _plan_lines(args.n, marked, p)
    lines.append(f"{'k':>4} {'simulated':>16} {'analytic':>16}")
    for rec in res.trajectory.records[lo : hi + 1]:
        analytic_p = analytic.RotationState(theta, rec.k).success_probability
        lines.append(f"{rec.k:>4} {rec.success_probability:>16.12f} {analytic_p:>16.12f}")
    lines.append(f"first peak at k = {peak} (k_opt = {p.k_opt})")
    lines.append(f"max |simulated - analytic| = {worst:.2e}  {'PASS' if status == EXIT_OK else 'FAIL'}")
    out.write("\n".join(lines) + "\n")
    return status


def cmd_circuit4(args: argparse.Namespace, out: TextIO) -> int:
    bits = parse_marked(args.marked)
    spec = build_circuit(bits, OracleStyle(args.oracle))
    outcome = run_circuit(spec)
    lines = [f"four-item circuit, marked = {bits}, oracle = {args.oracle}", "", spec.to_text(), "", "stages:"]
    for label, state in outcome.stages:
        lines.append(f"  {label:<26} {state.ket_string()}")
    ok = outcome.output_string == bits and abs(outcome.probability - 1.0) < 1e-12
    lines += [
        "",
        f"oracle bit       = {outcome.oracle_bit}",
        f"output ab        = {outcome.output_string} (probability {outcome.probability:.12f})",
        f"oracle calls     = {spec.oracle_calls()}",
        f"ab == marked     : {'PASS' if ok else 'FAIL'}",
    ]
    text = "\n".join(lines) + "\n"
    if args.out:
        _write_out(args.out, text)
    out.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_baseline(args: argparse.Namespace, out: TextIO) -> int:
    N = 2**args.n
    cmp = analytic.classical_comparison(N)
    mc = baseline.monte_carlo_queries(N, args.trials, args.seed)
    tol = baseline.monte_carlo_tolerance(N, args.trials)
    ok = abs(mc - cmp.classical_expected) < tol
    lines = [
        f"N                          = {N}",
        f"classical sequential (exp) = {cmp.classical_expected:.6f}",
        f"classical random (exp)     = {baseline.expected_queries_random_distinct(N):.6f}",
        f"classical for p = 1/2      = {cmp.classical_for_half}",
        f"quantum queries (k_opt)    = {cmp.quantum_queries}",
        f"Monte Carlo ({args.trials} trials, seed {args.seed}) = {mc:.6f} (4 sigma = {tol:.6f}) {'PASS' if ok else 'FAIL'}",
    ]
    text = "\n".join(lines) + "\n"
    if args.out:
        _write_out(args.out, text)
    out.write(text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle_check(args: argparse.Namespace, out: TextIO) -> int:
    marked = parse_marked_indices(args.marked, args.n)
    ok, dev = kickback_equivalence_check(args.n, marked, trials=args.trials, seed=args.seed)
    lines = [f"phase kickback, n = {args.n}, marked = {marked.label()}: max deviation {dev:.2e} {'PASS' if ok else 'FAIL'}"]
    if args.n == 2 and marked.M == 1:
        (w,) = marked.indices
        bits = format(w, "02b")
        eq, eq_dev = oracle_equivalence_check(bits, seed=args.seed)
        ok &= eq
        lines.append(f"Toffoli vs C-Z oracle, marked = {bits}: max deviation {eq_dev:.2e} {'PASS' if eq else 'FAIL'}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    rows = verify.run_checks()
    text = verify.format_table(rows) + "\n"
    if args.out:
        _write_out(args.out, text)
    out.write(text)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grover-sim", description="Grover search simulator and verification harness")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, marked: bool = True) -> None:
        p.add_argument("--n", type=int, required=True, help="number of data qubits")
        if marked:
            p.add_argument("--marked", required=True, help="comma-separated indices, decimal or b-prefixed binary")
        p.add_argument("--out", help="output path")

    p = sub.add_parser("run", help="simulate one search")
    common(p)
    p.add_argument("--iterations", type=int, help="override the optimal iteration count")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("sweep", help="simulated vs analytic success probability over k")
    common(p)
    p.add_argument("--sweep", help="iteration range A..B (default 0..2*k_opt)")
    p.add_argument("--format", choices=["text", "csv"], default="csv")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("circuit4", help="gate-level four-item circuit")
    p.add_argument("--marked", required=True, help="two-bit marked string, e.g. 11")
    p.add_argument("--oracle", choices=[s.value for s in OracleStyle], default=OracleStyle.SIMPLIFIED_CZ.value)
    p.add_argument("--out", help="output path")
    p.set_defaults(func=cmd_circuit4)

    p = sub.add_parser("baseline", help="classical query baselines")
    common(p, marked=False)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("oracle-check", help="bit-flip vs phase oracle equivalence")
    common(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_oracle_check)

    p = sub.add_parser("verify", help="reproduce every reference number")
    p.add_argument("--out", help="output path")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except GroverError as exc:
        print(f"grover-sim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"grover-sim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
