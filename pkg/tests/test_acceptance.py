"""Acceptance checks, one test per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see one PASS/FAIL line
per criterion.
"""

import math
import time

import numpy as np

from grover_sim import analytic, baseline, engine
from grover_sim.four_item import OracleStyle, build_circuit, run_circuit
from grover_sim.oracle import MarkedSet, bit_oracle_apply, phase_oracle_apply
from grover_sim.statevector import StateVector, random_state, uniform_state

SQRT2 = math.sqrt(2.0)


def report(number, description, ok, detail=""):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {description}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} failed: {description} {detail}"


def test_criterion_01_four_item_walkthrough():
    res = engine.run(2, MarkedSet(2, [3]))
    dev = np.max(np.abs(res.state.amplitudes - np.array([0, 0, 0, 1])))
    p = res.success_probability
    ok = res.plan.k_opt == 1 and dev < 1e-12 and abs(p - 1.0) < 1e-12
    report(1, "N=4 search ends in (0,0,0,1) with probability 1", ok, f"k_opt={res.plan.k_opt}, dev={dev:.1e}, p={p!r}")


def test_criterion_02_eight_item_walkthrough():
    marked = MarkedSet(3, [5])
    res = engine.run(3, marked)
    amps = res.state.amplitudes
    others = np.delete(amps, 5)
    one = engine.grover_iterate(uniform_state(3), marked).amplitudes
    devs = [
        abs(amps[5] - 11 / (8 * SQRT2)),
        np.max(np.abs(others + 1 / (8 * SQRT2))),
        abs(res.success_probability - 121 / 128),
        abs(one[5] - 5 / (4 * SQRT2)),
        np.max(np.abs(np.delete(one, 5) - 1 / (4 * SQRT2))),
    ]
    ok = res.plan.k_opt == 2 and max(devs) < 1e-12
    report(2, "N=8 amplitudes 11/(8 sqrt2), -1/(8 sqrt2); success 121/128", ok, f"max dev={max(devs):.1e}")


def test_criterion_03_over_rotation():
    res = engine.run(3, MarkedSet(3, [5]), iterations=6)
    probs = res.trajectory.probabilities()
    k_opt = res.plan.k_opt
    exact = abs(probs[3] - 169 / 512) < 1e-12 and abs((1 - probs[3]) - 343 / 512) < 1e-12
    rises = all(probs[k] < probs[k + 1] for k in range(k_opt))
    declines = probs[k_opt + 1] < probs[k_opt]
    report(
        3,
        "k=3 success 169/512, complement 343/512; rises to k_opt then declines",
        exact and rises and declines,
        f"p3={probs[3]:.12f}",
    )


def test_criterion_04_angles():
    theta4 = math.degrees(math.asin(math.sqrt(1 / 4)))
    lib4 = math.degrees(analytic.theta_of(4, 1))
    p8 = engine.plan(8, 1)
    rotation = math.degrees(2 * p8.theta)
    cos2 = math.cos(2 * p8.theta)
    # 30 degrees is not exactly representable through asin; 1e-12 deg is the float floor
    ok = abs(lib4 - 30.0) <= 1e-12 and lib4 == theta4 and abs(rotation - 41.41) <= 0.01 and abs(cos2 - 0.75) < 1e-12
    report(4, "theta(4,1)=30 deg, N=8 rotation 41.41 deg, cos(2 theta)=3/4", ok, f"theta={lib4!r}, rot={rotation:.4f}")


def test_criterion_05_iteration_counts():
    worst = max(abs(engine.plan(2**n, 1).k_opt - math.pi / 4 * math.sqrt(2**n)) for n in range(2, 17))
    ok = engine.plan(4, 1).k_opt == 1 and engine.plan(8, 1).k_opt == 2 and worst <= 1
    report(5, "k_opt(4)=1, k_opt(8)=2, |k_opt - (pi/4)sqrt(N)| <= 1 for n=2..16", ok, f"worst={worst:.4f}")


def test_criterion_06_diffusion_decomposition():
    worst_decomp = worst_unitary = 0.0
    for n in range(1, 7):
        N = 2**n
        h1 = np.array([[1, 1], [1, -1]]) / SQRT2
        h = np.array([[1.0]])
        for _ in range(n):
            h = np.kron(h, h1)
        phase = np.diag([1.0] + [-1.0] * (N - 1))
        d = engine.diffusion_matrix(n)
        worst_decomp = max(worst_decomp, np.max(np.abs(d - h @ phase @ h)))
        worst_unitary = max(worst_unitary, np.max(np.abs(d @ d.conj().T - np.eye(N))))
    ok = worst_decomp < 1e-12 and worst_unitary < 1e-12
    report(6, "D = H diag(1,-1,...) H and D D^dagger = I for n=1..6", ok, f"{worst_decomp:.1e}, {worst_unitary:.1e}")


def test_criterion_07_inversion_about_average():
    rng = np.random.default_rng(77)
    worst = 0.0
    for _ in range(1000):
        state = random_state(int(rng.integers(1, 11)), rng)
        a = state.amplitudes
        after = engine.diffusion_apply(state).amplitudes
        worst = max(worst, np.max(np.abs(after + a - 2 * a.mean())))
    report(7, "a' + a = 2A for 1000 random states, n <= 10", worst < 1e-12, f"worst={worst:.1e}")


def test_criterion_08_analytic_matches_simulation():
    rng = np.random.default_rng(88)
    worst = 0.0
    for n in range(2, 13):
        N = 2**n
        for M in range(1, min(32, N) + 1):
            marked = MarkedSet(n, rng.choice(N, size=M, replace=False))
            theta = math.asin(math.sqrt(M / N))
            k_opt = engine.plan(N, M).k_opt
            for rec in engine.run(n, marked, iterations=2 * k_opt).trajectory:
                worst = max(worst, abs(rec.success_probability - math.sin((2 * rec.k + 1) * theta) ** 2))
    report(8, "simulated = sin^2((2k+1)theta) on n=2..12, M=1..32, k=0..2k_opt", worst < 1e-10, f"worst={worst:.1e}")


def test_criterion_09_phase_kickback():
    rng = np.random.default_rng(99)
    minus = StateVector(np.array([1, -1]) / SQRT2)
    worst = 0.0
    for n in (2, 3, 4):
        N = 2**n
        for _ in range(100):
            marked = MarkedSet(n, rng.choice(N, size=int(rng.integers(1, N + 1)), replace=False))
            data = random_state(n, rng)
            lhs = bit_oracle_apply(data.tensor(minus), marked)
            rhs = phase_oracle_apply(data, marked).tensor(minus)
            worst = max(worst, np.max(np.abs(lhs.amplitudes - rhs.amplitudes)))
    report(9, "bit oracle on data x |-> equals phase oracle x |->, n=2,3,4", worst < 1e-12, f"worst={worst:.1e}")


def test_criterion_10_four_item_circuit():
    failures = []
    for bits in ("00", "01", "10", "11"):
        for style in OracleStyle:
            spec = build_circuit(bits, style)
            out = run_circuit(spec)
            if out.output_string != bits or abs(out.probability - 1.0) >= 1e-12 or spec.oracle_calls() != 1:
                failures.append((bits, style.value, out.output_string, out.probability))
    report(10, "circuit returns the marked ab with probability 1 and one oracle call", not failures, str(failures or "8/8"))


def test_criterion_11_classical_baseline():
    exact = baseline.expected_queries_sequential(4)
    mc = baseline.monte_carlo_queries(4, 100_000, seed=2024)
    ok = exact == 2.25 and abs(mc - 2.25) <= 0.02
    report(11, "classical expected queries at N=4 is 2.25; Monte Carlo within 0.02", ok, f"exact={exact}, mc={mc:.4f}")


def test_criterion_12_large_n():
    n = 16
    N = 2**n
    start = time.perf_counter()
    res = engine.run(n, MarkedSet(n, [12345]))
    elapsed = time.perf_counter() - start
    p = res.success_probability
    closed = math.sin((2 * res.plan.k_opt + 1) * math.asin(math.sqrt(1 / N))) ** 2
    ok = p >= 1 - 2 / N and abs(p - closed) < 1e-9 and elapsed < 10
    report(12, "n=16 success >= 1 - 2/N, matches closed form, under 10 s", ok, f"p={p:.12f}, t={elapsed:.2f}s")
