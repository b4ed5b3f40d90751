"""One-shot reproduction of the reference numbers and acceptance checks.

Each check returns one or more :class:`Row` entries comparing a reference
value with the computed one; ``run_checks`` collects them all.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import analytic, baseline, engine
from .four_item import OracleStyle, build_circuit, run_circuit
from .oracle import MarkedSet, kickback_equivalence_check
from .statevector import random_state, uniform_state

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Row:
    criterion: int
    label: str
    reference: str
    computed: str
    delta: float
    tol: float
    passed: bool


def _row(criterion: int, label: str, reference, computed, delta: float, tol: float, strict: bool = True) -> Row:
    ok = bool(delta < tol) if strict else bool(delta <= tol)
    return Row(criterion, label, str(reference), str(computed), float(delta), float(tol), ok)


def _num(x: float) -> str:
    return f"{x:.12g}"


def check_n4_walkthrough() -> list[Row]:
    res = engine.run(2, MarkedSet(2, [3]))
    dev = float(np.max(np.abs(res.state.amplitudes - np.array([0, 0, 0, 1]))))
    p = res.success_probability
    return [
        _row(1, "N=4 k_opt", 1, res.plan.k_opt, abs(res.plan.k_opt - 1), 0.5),
        _row(1, "N=4 final amplitudes = (0,0,0,1)", "(0,0,0,1)", f"max dev {dev:.2e}", dev, 1e-12),
        _row(1, "N=4 success probability", "1.0", _num(p), abs(p - 1.0), 1e-12),
    ]


def check_n8_walkthrough() -> list[Row]:
    marked = MarkedSet(3, [5])
    res = engine.run(3, marked)
    amps = res.state.amplitudes
    rest = np.delete(amps, 5)
    one = engine.grover_iterate(uniform_state(3), marked).amplitudes
    one_rest = np.delete(one, 5)
    p = res.success_probability
    return [
        _row(2, "N=8 k_opt", 2, res.plan.k_opt, abs(res.plan.k_opt - 2), 0.5),
        _row(2, "N=8 amplitude |101> after k=2", "11/(8*sqrt2)", _num(amps[5].real), abs(amps[5] - 11 / (8 * SQRT2)), 1e-12),
        _row(2, "N=8 other amplitudes after k=2", "-1/(8*sqrt2)", _num(rest[0].real), float(np.max(np.abs(rest + 1 / (8 * SQRT2)))), 1e-12),
        _row(2, "N=8 success after k=2", "121/128", _num(p), abs(p - 121 / 128), 1e-12),
        _row(2, "N=8 amplitude |101> after k=1", "5/(4*sqrt2)", _num(one[5].real), abs(one[5] - 5 / (4 * SQRT2)), 1e-12),
        _row(2, "N=8 other amplitudes after k=1", "1/(4*sqrt2)", _num(one_rest[0].real), float(np.max(np.abs(one_rest - 1 / (4 * SQRT2)))), 1e-12),
    ]


def check_over_rotation() -> list[Row]:
    res = engine.run(3, MarkedSet(3, [5]), iterations=6)
    probs = res.trajectory.probabilities()
    k_opt = res.plan.k_opt
    rising = all(probs[k] < probs[k + 1] for k in range(k_opt))
    falls = probs[k_opt + 1] < probs[k_opt]
    return [
        _row(3, "N=8 success after k=3", "169/512", _num(probs[3]), abs(probs[3] - 169 / 512), 1e-12),
        _row(3, "N=8 complement after k=3", "343/512", _num(1 - probs[3]), abs((1 - probs[3]) - 343 / 512), 1e-12),
        _row(3, "N=8 sweep rises to k_opt then declines", "True", str(rising and falls), 0.0 if rising and falls else 1.0, 0.5),
    ]


def check_angles() -> list[Row]:
    theta4 = math.degrees(analytic.theta_of(4, 1))
    p8 = engine.plan(8, 1)
    cos2 = math.cos(2 * p8.theta)
    return [
        _row(4, "theta(4,1) in degrees", "30", _num(theta4), abs(theta4 - 30.0), 1e-12, strict=False),
        _row(4, "N=8 rotation per iteration (deg)", "41.41", f"{p8.rotation_degrees:.4f}", abs(p8.rotation_degrees - 41.41), 0.01, strict=False),
        _row(4, "N=8 cos(2 theta)", "3/4", _num(cos2), abs(cos2 - 0.75), 1e-12, strict=False),
    ]


def check_iteration_counts() -> list[Row]:
    worst = max(abs(engine.plan(2**n, 1).k_opt - math.pi / 4 * math.sqrt(2**n)) for n in range(2, 17))
    return [
        _row(5, "plan(4,1).k_opt", 1, engine.plan(4, 1).k_opt, abs(engine.plan(4, 1).k_opt - 1), 0.5),
        _row(5, "plan(8,1).k_opt = round(2.2214)", 2, engine.plan(8, 1).k_opt, abs(engine.plan(8, 1).k_opt - 2), 0.5),
        _row(5, "max |k_opt - (pi/4)sqrt(N)|, n=2..16", "<= 1", _num(worst), worst, 1.0, strict=False),
    ]


def check_diffusion_decomposition() -> list[Row]:
    decomp = unit = 0.0
    for n in range(1, 7):
        d = engine.diffusion_matrix(n)
        decomp = max(decomp, float(np.max(np.abs(d - engine.diffusion_decomposition(n)))))
        unit = max(unit, float(np.max(np.abs(d @ d.conj().T - np.eye(2**n)))))
    return [
        _row(6, "D = H diag(1,-1..-1) H, n=1..6", "0", f"{decomp:.2e}", decomp, 1e-12),
        _row(6, "D D^dagger = I, n=1..6", "0", f"{unit:.2e}", unit, 1e-12),
    ]


def check_inversion_about_average(trials: int = 1000, seed: int = 7) -> list[Row]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        state = random_state(int(rng.integers(1, 11)), rng)
        a = state.amplitudes
        after = engine.diffusion_apply(state).amplitudes
        worst = max(worst, float(np.max(np.abs(after + a - 2 * a.mean()))))
    return [_row(7, f"a' + a = 2A over {trials} random states", "0", f"{worst:.2e}", worst, 1e-12)]


def check_closed_form_grid(seed: int = 11) -> list[Row]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for n in range(2, 13):
        N = 2**n
        for M in range(1, min(32, N) + 1):
            marked = MarkedSet(n, rng.choice(N, size=M, replace=False))
            k_opt = engine.plan(N, M).k_opt
            traj = engine.run(n, marked, iterations=2 * k_opt).trajectory
            theta = analytic.theta_of(N, M)
            for rec in traj:
                worst = max(worst, abs(rec.success_probability - math.sin((2 * rec.k + 1) * theta) ** 2))
    return [_row(8, "simulated vs sin^2((2k+1)theta) grid", "0", f"{worst:.2e}", worst, 1e-10)]


def check_kickback() -> list[Row]:
    worst = 0.0
    ok = True
    for n, idx in ((2, [3]), (3, [5]), (4, [0, 9, 15])):
        good, dev = kickback_equivalence_check(n, MarkedSet(n, idx), trials=100, seed=n)
        ok &= good
        worst = max(worst, dev)
    return [_row(9, "bit oracle with |-> ancilla = phase oracle", "0", f"{worst:.2e}", worst if ok else max(worst, 1.0), 1e-12)]


def check_four_item_circuit() -> list[Row]:
    worst = 0.0
    wrong = 0
    calls = set()
    for bits in ("00", "01", "10", "11"):
        for style in OracleStyle:
            spec = build_circuit(bits, style)
            out = run_circuit(spec)
            worst = max(worst, abs(1.0 - out.probability))
            wrong += out.output_string != bits or out.oracle_bit != 1
            calls.add(spec.oracle_calls())
    return [
        _row(10, "circuit output ab = marked, 4 items x 2 oracles", "8/8", f"{8 - wrong}/8", float(wrong), 0.5),
        _row(10, "circuit outcome probability", "1", _num(1 - worst), worst, 1e-12, strict=False),
        _row(10, "oracle calls per circuit", "1", ",".join(map(str, sorted(calls))), 0.0 if calls == {1} else 1.0, 0.5),
    ]


def check_classical_baseline(trials: int = 100_000, seed: int = 2024) -> list[Row]:
    exact = baseline.expected_queries_sequential(4)
    mc = baseline.monte_carlo_queries(4, trials, seed)
    return [
        _row(11, "classical expected oracle calls, N=4", "2.25", _num(exact), abs(exact - 2.25), 0.0, strict=False),
        _row(11, f"Monte Carlo mean, N=4, {trials} trials", "2.25", f"{mc:.5f}", abs(mc - 2.25), 0.02, strict=False),
    ]


def check_large_n(n: int = 16) -> list[Row]:
    start = time.perf_counter()
    N = 2**n
    res = engine.run(n, MarkedSet(n, [N // 3]))
    elapsed = time.perf_counter() - start
    p = res.success_probability
    closed = analytic.success_probability(N, 1, res.plan.k_opt)
    return [
        _row(12, f"n={n} success at k_opt >= 1 - 2/N", f">= {_num(1 - 2 / N)}", _num(p), max(0.0, (1 - 2 / N) - p), 0.0, strict=False),
        _row(12, f"n={n} simulated vs closed form", "0", f"{abs(p - closed):.2e}", abs(p - closed), 1e-9),
        _row(12, f"n={n} runtime (s)", "< 10", f"{elapsed:.3f}", elapsed, 10.0),
    ]


CHECKS: list[Callable[[], list[Row]]] = [
    check_n4_walkthrough,
    check_n8_walkthrough,
    check_over_rotation,
    check_angles,
    check_iteration_counts,
    check_diffusion_decomposition,
    check_inversion_about_average,
    check_closed_form_grid,
    check_kickback,
    check_four_item_circuit,
    check_classical_baseline,
    check_large_n,
]


def run_checks(checks: list[Callable[[], list[Row]]] | None = None) -> list[Row]:
    rows: list[Row] = []
    for check in CHECKS if checks is None else checks:
        rows.extend(check())
    return rows


def format_table(rows: list[Row]) -> str:
    header = f"{'#':>2}  {'check':<46} {'reference':>14} {'computed':>18} {'|delta|':>10} {'tol':>8}  result"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(
            f"{r.criterion:>2}  {r.label:<46} {r.reference:>14} {r.computed:>18} "
            f"{r.delta:>10.2e} {r.tol:>8.0e}  {'PASS' if r.passed else 'FAIL'}"
        )
    failed = sum(not r.passed for r in rows)
    lines.append(f"{len(rows) - failed}/{len(rows)} checks passed")
    return "\n".join(lines)
