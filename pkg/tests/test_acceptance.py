"""Exit criteria of the build, one test per criterion, tolerances fixed here."""

import hashlib
import math
import subprocess
import sys
import time

import numpy as np
import pytest

import oracle
from dressedpdc import (
    CoupledSystem,
    FrequencyPair,
    MatrixElementModel,
    PumpConfig,
    SidebandComponent,
    StepControl,
    TransitionSpec,
    asymptotic_growth_rate,
    central_pair,
    coupled_system,
    dressed_pair,
    gain,
    propagate_coupled,
    superposition,
    superposition_from_angles,
)
from dressedpdc.sweeps import paper_check

ORD, BLUE, RED = SidebandComponent.ORDINARY, SidebandComponent.BLUE, SidebandComponent.RED


def _coefficient(comp, scenario, rabi, state):
    pump = PumpConfig.from_rabi(scenario.transition, scenario.lab.detuning, rabi)
    pair = central_pair(comp, pump.omega_p, rabi)
    return gain(comp, scenario.transition, pump, state, pair, scenario.matrix_model)


def test_c1_dressed_state_algebra(criterion):
    start = time.perf_counter()
    ratios = np.geomspace(1e-6, 1e6, 500)
    worst = 0.0
    for sign in (1.0, -1.0):
        for n, ratio in enumerate(ratios):
            delta = sign * 2 * math.pi * 10.0 ** (6 + 6 * (n % 7) / 6)  # |D| from 1e6 to 1e12 rad/s
            rabi = ratio * abs(delta)
            p = dressed_pair(delta, rabi)
            errs = [
                abs(p.n_plus**2 * (1 + 4 * p.lambda_plus**2 / rabi**2) - 1),
                abs(p.n_minus**2 * (1 + 4 * p.lambda_minus**2 / rabi**2) - 1),
                abs(p.n_plus * p.n_minus * (1 + 4 * p.lambda_plus * p.lambda_minus / rabi**2)),
                abs(p.lambda_plus * p.lambda_minus / (-(rabi**2) / 4) - 1),
            ]
            worst = max(worst, *errs)
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and elapsed < 0.5
    criterion("C1 dressed-state algebra", ok, f"1000 pairs, worst residual {worst:.2e} (<= 1e-12), {elapsed:.3f} s")
    assert ok


def test_c2_oracle_equivalence(criterion):
    rng = np.random.default_rng(20240601)
    worst = 0.0
    for _ in range(100):
        lam = rng.uniform(0.3e-4, 2e-4)
        d12 = 10 ** rng.uniform(-18.5, -16.5)
        rho = rng.uniform(0.5e-8, 5e-8)
        density = 10 ** rng.uniform(15, 20)
        delta = rng.choice([-1, 1]) * 2 * math.pi * 10 ** rng.uniform(8, 11)
        intensity = 10 ** rng.uniform(-2, 6)
        state = superposition_from_angles(rng.uniform(0, math.pi / 2), rng.uniform(0, 2 * math.pi))
        comp = SidebandComponent(rng.choice(["ordinary", "blue", "red"]))
        frac = rng.uniform(0.2, 0.8)

        transition = TransitionSpec.from_wavelength(lam, d12, rho, density)
        pump = PumpConfig.from_intensity(transition, delta, intensity)
        w0 = oracle.omega_from_wavelength(lam)
        wp = w0 + delta
        rabi = oracle.rabi(d12, oracle.field_from_intensity(intensity))
        target = wp + comp.shift_sign * rabi
        ws = frac * target
        wi = target - ws
        m_el = oracle.small_argument_matrix_element(ws, wi, rho)
        args = (density, state.alpha, state.beta, delta, rabi, wp, ws, wi, m_el)
        expected = {"ordinary": oracle.alpha_ordinary, "blue": oracle.alpha_blue, "red": oracle.alpha_red}[comp.value](*args)
        got = gain(comp, transition, pump, state, FrequencyPair(ws, wi), MatrixElementModel.small_argument(rho)).coefficient
        rel = abs(got - expected) / abs(expected) if expected else abs(got)
        worst = max(worst, rel)
    ok = worst <= 1e-10
    criterion("C2 oracle equivalence", ok, f"100 random inputs, worst relative deviation {worst:.2e} (<= 1e-10)")
    assert ok


def test_c3_ordinary_saturates(paper, criterion):
    d = abs(paper.lab.detuning)
    ground = superposition(1, 0)
    ratio = _coefficient(ORD, paper, 100 * d, ground).coefficient / _coefficient(ORD, paper, 10 * d, ground).coefficient
    ok = 1.0 <= ratio <= 1.01
    criterion("C3 ordinary saturation", ok, f"a0(100|D|)/a0(10|D|) = {ratio:.6f} (in [1.0, 1.01])")
    assert ok


def test_c4_sidebands_do_not_saturate(paper, criterion):
    d = abs(paper.lab.detuning)
    balanced = superposition(1, 1)
    ratios = {}
    for comp in (BLUE, RED):
        hi = _coefficient(comp, paper, 2000 * d, balanced)
        lo = _coefficient(comp, paper, 1000 * d, balanced)
        assert "negative-radicand" not in hi.flags + lo.flags
        ratios[comp.value] = hi.coefficient / lo.coefficient
    ok = all(1.9 <= r <= 2.1 for r in ratios.values())
    criterion(
        "C4 sideband nonsaturation",
        ok,
        f"blue {ratios['blue']:.4f}, red {ratios['red']:.4f} at R0 = 1e3|D| (in [1.9, 2.1])",
    )
    assert ok


def test_c5_coherence_optimum(paper, criterion):
    thetas = np.linspace(0, math.pi / 2, 181)
    pump = paper.pump()
    values = {c: [] for c in SidebandComponent}
    for theta in thetas:
        state = superposition_from_angles(theta)
        for c in SidebandComponent:
            pair = central_pair(c, pump.omega_p, pump.rabi)
            values[c].append(gain(c, paper.transition, pump, state, pair, paper.matrix_model).coefficient)
    step = thetas[1] - thetas[0]
    dist = {c: abs(thetas[int(np.argmax(values[c]))] - math.pi / 4) for c in (BLUE, RED)}
    ordinary_at_quarter = values[ORD][90] / max(values[ORD])
    ok = all(v <= step * (1 + 1e-9) for v in dist.values()) and ordinary_at_quarter <= 1e-12
    criterion(
        "C5 coherence optimum",
        ok,
        f"argmax offsets blue {dist[BLUE]:.2e}, red {dist[RED]:.2e} rad (<= {step:.4f}); "
        f"a0(pi/4)/max a0 = {ordinary_at_quarter:.1e}",
    )
    assert ok


def test_c6a_sidebands_agree(criterion):
    report = paper_check()
    d = report["default"]
    ok = d["sideband_agreement"] <= 10
    criterion(
        "C6a reference scenario, sideband agreement",
        ok,
        f"blue {d['blue_cm-1']:.3e}, red {d['red_cm-1']:.3e} cm^-1, spread x{d['sideband_agreement']:.2f} (<= 10)",
    )
    assert ok


def test_c6b_reference_magnitude(criterion):
    report = paper_check()
    rows = report["interpretations"]
    both = [r for r in rows if r["both_in_band"]]
    best_blue = max(r["blue_ratio_to_target"] for r in rows)
    best_red = max(r["red_ratio_to_target"] for r in rows)
    ok = bool(both)
    criterion(
        "C6b reference scenario, within x100 of 1e-3 cm^-1",
        ok,
        f"{len(both)}/{len(rows)} interpretations put both sidebands in band; "
        f"best blue/target {best_blue:.3g}, best red/target {best_red:.3g} (band [0.01, 100])",
    )
    assert ok


def test_c7_propagation(paper, criterion):
    start = time.perf_counter()
    # (i) cosh closed form at |kappa| h = 1e-2
    kappa = 1.0
    tr = propagate_coupled(CoupledSystem.symmetric(kappa), 1, 0, 6 / kappa, StepControl(1e-2 / kappa))
    ref_s, ref_i = np.cosh(kappa * tr.z), np.sinh(kappa * tr.z)
    err = max((np.abs(tr.a_s - ref_s) / ref_s).max(), (np.abs(tr.a_i.conjugate() - ref_i) / ref_s).max())

    # (ii) empirical order by three-level step halving
    errs = []
    for kh in (0.08, 0.04, 0.02):
        t = propagate_coupled(CoupledSystem.symmetric(kappa), 1, 0, 6 / kappa, StepControl(kh / kappa))
        errs.append((np.abs(t.a_s - np.cosh(kappa * t.z)) / np.cosh(kappa * t.z)).max())
    orders = [math.log2(errs[0] / errs[1]), math.log2(errs[1] / errs[2])]

    # (iii) coupled growth rate vs gain-engine coefficient
    state = superposition_from_angles(math.pi / 8)
    pump = paper.pump()
    point = gain(ORD, paper.transition, pump, state, central_pair(ORD, pump.omega_p, pump.rabi), paper.matrix_model)
    system = coupled_system(point, pump, state)
    control = StepControl(1e-2 / system.kappa, tolerance=1e-8)
    trace = propagate_coupled(system, 1, 0, 6 / system.kappa, control)
    rate_err = abs(asymptotic_growth_rate(trace) - point.coefficient) / point.coefficient

    # (iv) Manley-Rowe analog
    drift = trace.metadata["invariant_drift"]
    elapsed = time.perf_counter() - start
    ok = err <= 1e-6 and all(3.8 <= p <= 4.2 for p in orders) and rate_err <= 1e-2 and drift <= 10 * control.tolerance and elapsed < 5
    criterion(
        "C7 propagation",
        ok,
        f"cosh error {err:.1e} (<= 1e-6), orders {orders[0]:.3f}/{orders[1]:.3f} (in [3.8, 4.2]), "
        f"rate error {rate_err:.1e} (<= 1e-2), invariant drift {drift:.1e} (<= {10 * control.tolerance:.0e}), {elapsed:.2f} s",
    )
    assert ok


def test_c8_determinism(tmp_path, criterion):
    digests = []
    for n in range(2):
        out = tmp_path / f"run{n}.json"
        subprocess.run(
            [sys.executable, "-m", "dressedpdc", "spectrum", "--scenario", "paper_s3", "--out", str(out)], check=True
        )
        digests.append(hashlib.sha256(out.read_bytes()).hexdigest())
    ok = digests[0] == digests[1]
    criterion("C8 determinism", ok, f"sha256 {digests[0][:16]} vs {digests[1][:16]}")
    assert ok
