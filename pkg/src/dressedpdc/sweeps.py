"""Parameter sweeps over a scenario and the reference-scenario report."""

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .dressed import PumpConfig, superposition
from .errors import DomainError, InsufficientGrowthError
from .gain import FrequencyPair, GainOptions, SidebandComponent, central_pair, gain, idler_for_signal
from .propagation import (
    StepControl,
    asymptotic_growth_rate,
    coupled_system,
    default_step,
    propagate_analytic,
    propagate_coupled,
)
from .units import DetuningUnit, IntensityConvention, field_amplitude_to_intensity

__all__ = [
    "SweepResult",
    "run_spectrum",
    "run_intensity_sweep",
    "run_propagation",
    "saturation_diagnostics",
    "propagation_result",
    "paper_check",
    "format_report",
    "PAPER_TARGET",
]

COEFF_UNIT = "cm^-1"
PAPER_TARGET = 1e-3  # cm^-1, quoted sideband coefficient at 1 kW/cm^2
PAPER_BAND = 100.0  # accepted factor around the quoted value


@dataclass
class SweepResult:
    """Columns sampled along one axis, with per-point flag tokens."""

    axis: str
    axis_unit: str
    axis_values: np.ndarray
    columns: dict  # name -> np.ndarray
    units: dict  # name -> unit string
    flags: list  # per-point tuple of tokens
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        self.axis_values = np.asarray(self.axis_values, dtype=float)
        self.columns = {k: np.asarray(v, dtype=float) for k, v in self.columns.items()}
        self.flags = [tuple(f) for f in self.flags]
        n = self.axis_values.size
        if n == 0:
            raise DomainError("a sweep needs at least one point")
        if any(v.shape != (n,) for v in self.columns.values()) or len(self.flags) != n:
            raise DomainError("column and flag lengths must match the axis")
        if set(self.units) != set(self.columns):
            raise DomainError("every column needs a unit")

    def __len__(self):
        return self.axis_values.size

    def __eq__(self, other):
        if not isinstance(other, SweepResult):
            return NotImplemented
        return (
            self.axis == other.axis
            and self.axis_unit == other.axis_unit
            and np.array_equal(self.axis_values, other.axis_values)
            and list(self.columns) == list(other.columns)
            and all(np.array_equal(self.columns[k], other.columns[k], equal_nan=True) for k in self.columns)
            and self.units == other.units
            and self.flags == other.flags
            and self.meta == other.meta
        )


def _components(scenario, components):
    if components is None:
        return scenario.components
    return tuple(SidebandComponent(c) for c in components)


def _evaluate(component, scenario, pump, state, omega_s, options):
    """Coefficient and flag tokens for one grid point; domain errors become flags."""
    try:
        omega_i = idler_for_signal(component, pump.omega_p, pump.rabi, omega_s)
        point = gain(component, scenario.transition, pump, state, FrequencyPair(omega_s, omega_i), scenario.matrix_model, options)
    except DomainError:
        return math.nan, (f"{component.value}:domain-error",)
    return point.coefficient, tuple(f"{component.value}:{f}" for f in point.flags)


def run_spectrum(scenario, components=None, allow_degenerate=False, options=GainOptions()):
    comps = _components(scenario, components)
    pump = scenario.pump()
    state = scenario.state
    axis = scenario.grid.values(pump.omega_p, allow_degenerate)
    columns = {c.value: np.empty(axis.size) for c in comps}
    flags = []
    for n, ws in enumerate(axis):
        tokens = []
        for c in comps:
            columns[c.value][n], f = _evaluate(c, scenario, pump, state, ws, options)
            tokens.extend(f)
        flags.append(tuple(tokens))
    meta = _meta(scenario, pump, options)
    return SweepResult("omega_s", "rad/s", axis, columns, {c.value: COEFF_UNIT for c in comps}, flags, meta)


def _meta(scenario, pump, options):
    return {
        "scenario": scenario.name,
        "omega_p_rad_s": pump.omega_p,
        "detuning_rad_s": pump.detuning,
        "detuning_unit_in": scenario.lab.detuning_unit.value,
        "rabi_rad_s": pump.rabi,
        "intensity_W_cm2": scenario.lab.intensity,
        "intensity_convention": scenario.lab.intensity_convention.value,
        "matrix_element_mode": scenario.matrix_mode,
        "theta_rad": scenario.theta,
        "phi_rad": scenario.phi,
        "red_alt_form": options.red_alt_form,
    }


def _coefficient_at_rabi(component, scenario, rabi, state, omega_s=None, options=GainOptions()):
    pump = PumpConfig.from_rabi(scenario.transition, scenario.lab.detuning, rabi)
    if omega_s is None:
        pair = central_pair(component, pump.omega_p, rabi)
    else:
        pair = FrequencyPair(omega_s, idler_for_signal(component, pump.omega_p, rabi, omega_s))
    return gain(component, scenario.transition, pump, state, pair, scenario.matrix_model, options)


def saturation_diagnostics(scenario, omega_s=None, options=GainOptions()):
    """Pump-scaling ratios that separate saturating from nonsaturating channels.

    * ``ordinary_saturation``: ordinary(R = 100|D|) / ordinary(R = 10|D|), state (1, 0);
    * ``blue_doubling``, ``red_doubling``: sideband(2 R0) / sideband(R0) at
      R0 = 1000|D|, balanced state.

    The pair is re-matched to each channel's sum rule at every Rabi
    frequency: either around a fixed signal ``omega_s`` or, when it is
    ``None``, at the channel's central pair.
    """
    d = abs(scenario.lab.detuning)
    ground = superposition(1, 0)
    balanced = superposition(1, 1)
    ordinary = SidebandComponent.ORDINARY
    out = {
        "ordinary_saturation": _coefficient_at_rabi(ordinary, scenario, 100 * d, ground, omega_s, options).coefficient
        / _coefficient_at_rabi(ordinary, scenario, 10 * d, ground, omega_s, options).coefficient
    }
    for comp in (SidebandComponent.BLUE, SidebandComponent.RED):
        hi = _coefficient_at_rabi(comp, scenario, 2000 * d, balanced, omega_s, options)
        lo = _coefficient_at_rabi(comp, scenario, 1000 * d, balanced, omega_s, options)
        out[f"{comp.value}_doubling"] = hi.coefficient / lo.coefficient
        out[f"{comp.value}_doubling_flags"] = sorted(set(hi.flags) | set(lo.flags))
    return out


def run_intensity_sweep(scenario, intensities, omega_s=None, components=None, options=GainOptions()):
    """Coefficients against pump strength at a fixed signal frequency.

    The idler is re-matched per component at every intensity.  The axis is
    the Rabi frequency; the intensity is carried as its own column.
    """
    intensities = np.asarray(intensities, dtype=float)
    if intensities.size == 0 or np.any(intensities < 0):
        raise DomainError("intensities must be a non-empty array of non-negative values")
    comps = _components(scenario, components)
    state = scenario.state
    base = scenario.pump()
    if omega_s is None:
        omega_s = scenario.probe_signal(base.omega_p)
    rabi = np.empty(intensities.size)
    columns = {"intensity": intensities.copy()}
    columns.update({c.value: np.empty(intensities.size) for c in comps})
    flags = []
    for n, intensity in enumerate(intensities):
        pump = scenario.pump(intensity)
        rabi[n] = pump.rabi
        tokens = []
        for c in comps:
            columns[c.value][n], f = _evaluate(c, scenario, pump, state, omega_s, options)
            tokens.extend(f)
        flags.append(tuple(tokens))
    units = {"intensity": "W/cm^2", **{c.value: COEFF_UNIT for c in comps}}
    meta = _meta(scenario, base, options)
    meta["omega_s_rad_s"] = float(omega_s)
    diag = saturation_diagnostics(scenario, omega_s, options)
    meta["diagnostics"] = diag
    return SweepResult("rabi", "rad/s", rabi, columns, units, flags, meta)


def run_propagation(scenario, component, seeds=(1.0, 0.0), step=None, options=GainOptions()):
    """Analytic and coupled propagation through the scenario's cell.

    Returns ``(analytic_trace, coupled_trace, summary)``.  The coupled trace
    uses the phase mismatch of the component; the summary reports both
    log-slope growth rates, their relative discrepancy and total gains in dB.
    """
    component = SidebandComponent(component)
    pump = scenario.pump()
    state = scenario.state
    omega_s = scenario.probe_signal(pump.omega_p)
    pair = FrequencyPair(omega_s, idler_for_signal(component, pump.omega_p, pump.rabi, omega_s))
    point = gain(component, scenario.transition, pump, state, pair, scenario.matrix_model, options)
    system = coupled_system(point, pump, state)
    length = scenario.cell_length
    control = StepControl(step if step is not None else default_step(system, length))
    coupled = propagate_coupled(system, seeds[0], seeds[1], length, control)
    analytic = propagate_analytic(point.coefficient, seeds[0], seeds[1], coupled.z)

    analytic_rate = asymptotic_growth_rate(analytic, require_growth=False)
    coupled_rate = asymptotic_growth_rate(coupled, require_growth=False)
    try:
        asymptotic_growth_rate(coupled)
        coupled_asymptotic = True
    except InsufficientGrowthError:
        coupled_asymptotic = False
    discrepancy = abs(coupled_rate - analytic_rate) / analytic_rate if analytic_rate > 0 else (0.0 if coupled_rate == 0 else math.inf)
    summary = {
        "component": component.value,
        "omega_s_rad_s": pair.omega_s,
        "omega_i_rad_s": pair.omega_i,
        "coefficient_cm-1": point.coefficient,
        "kappa_cm-1": system.kappa,
        "delta_cm-1": system.delta,
        "cell_length_cm": length,
        "step_cm": control.step,
        "analytic_rate_cm-1": analytic_rate,
        "coupled_rate_cm-1": coupled_rate,
        "coupled_reached_asymptotic_growth": coupled_asymptotic,
        "rate_discrepancy_relative": discrepancy,
        "analytic_gain_dB": analytic.gain_db(),
        "coupled_gain_dB": coupled.gain_db(),
        "invariant_drift": coupled.metadata["invariant_drift"],
        "flags": list(point.flags),
    }
    return analytic, coupled, summary


def propagation_result(analytic, coupled, summary):
    """Pack a pair of traces into a :class:`SweepResult` along z."""
    columns = {}
    for label, trace in (("analytic", analytic), ("coupled", coupled)):
        for field_name, data in (("A_s", trace.a_s), ("A_i", trace.a_i)):
            columns[f"{label}_{field_name}_re"] = data.real
            columns[f"{label}_{field_name}_im"] = data.imag
    units = {k: "arb" for k in columns}
    flags = [()] * len(coupled)
    return SweepResult("z", "cm", coupled.z, columns, units, flags, {"summary": summary})


def _paper_row(scenario, options):
    pump = scenario.pump()
    state = scenario.state
    row = {
        "detuning_unit": scenario.lab.detuning_unit.value,
        "intensity_convention": scenario.lab.intensity_convention.value,
        "matrix_element_mode": scenario.matrix_mode,
        "density_cm-3": scenario.transition.density,
        "field_statV_cm": pump.field,
        "rabi_rad_s": pump.rabi,
        "detuning_rad_s": pump.detuning,
        "generalized_rabi_rad_s": pump.generalized_rabi,
    }
    for comp in SidebandComponent:
        pair = central_pair(comp, pump.omega_p, pump.rabi)
        point = gain(comp, scenario.transition, pump, state, pair, scenario.matrix_model, options)
        row[f"{comp.value}_cm-1"] = point.coefficient
        row[f"{comp.value}_flags"] = list(point.flags)
        if comp is SidebandComponent.BLUE:
            row["matrix_element"] = point.breakdown["matrix_element"] ** 2
    for comp in ("blue", "red"):
        row[f"{comp}_ratio_to_target"] = row[f"{comp}_cm-1"] / PAPER_TARGET
    lo, hi = sorted((row["blue_cm-1"], row["red_cm-1"]))
    row["sideband_agreement"] = hi / lo if lo > 0 else (1.0 if hi == 0 else math.inf)
    row["blue_in_band"] = 1 / PAPER_BAND <= row["blue_ratio_to_target"] <= PAPER_BAND
    row["red_in_band"] = 1 / PAPER_BAND <= row["red_ratio_to_target"] <= PAPER_BAND
    row["both_in_band"] = row["blue_in_band"] and row["red_in_band"]
    return row


LOSCHMIDT = 2.6867811e19  # cm^-3, ideal gas at 273.15 K and 1 atm


def paper_check(scenario=None, theta=None, options=GainOptions()):
    """Evaluate the reference scenario under every documented reading of its inputs.

    The default row uses the preset as shipped.  The interpretation grid
    varies the detuning unit (Hz or rad/s), intensity convention,
    matrix-element wavenumber (transition or actual signal/idler) and density
    (preset or Loschmidt), each evaluated at the central pair of every
    component.
    """
    from .scenario import load_scenario

    if scenario is None:
        scenario = load_scenario("paper_s3")
    if theta is not None:
        scenario = scenario.with_angles(theta)
    default = _paper_row(scenario, options)
    grid = []
    for unit, conv, mode, density in itertools.product(
        (DetuningUnit.HZ, DetuningUnit.RAD_PER_S),
        tuple(IntensityConvention),
        ("transition", "small_argument"),
        (scenario.transition.density, LOSCHMIDT),
    ):
        variant = (
            scenario.with_detuning_unit(unit)
            .with_intensity_convention(conv)
            .with_matrix_mode(mode)
            .with_density(density)
        )
        grid.append(_paper_row(variant, options))
    in_band = [r for r in grid if r["both_in_band"]]
    blue_in_band = [r for r in grid if r["blue_in_band"]]
    return {
        "scenario": scenario.name,
        "theta_rad": scenario.theta,
        "target_cm-1": PAPER_TARGET,
        "band_factor": PAPER_BAND,
        "red_alt_form": options.red_alt_form,
        "default": default,
        "interpretations": grid,
        "sidebands_agree_within_10": default["sideband_agreement"] <= 10.0,
        "any_interpretation_both_in_band": bool(in_band),
        "any_interpretation_blue_in_band": bool(blue_in_band),
        "intensity_for_rabi_equal_detuning_W_cm2": field_amplitude_to_intensity(
            PumpConfig.from_rabi(scenario.transition, scenario.lab.detuning, abs(scenario.lab.detuning)).field,
            scenario.lab.intensity_convention,
        ),
    }


def _label(row):
    return (
        f"{row['detuning_unit']:>5} | {row['intensity_convention']:>17} | "
        f"{row['matrix_element_mode']:>14} | {row['density_cm-3']:<10.4g}"
    )


def format_report(report):
    d = report["default"]
    lines = [
        f"scenario: {report['scenario']}   theta = {report['theta_rad']:.6g} rad   red alt form: {report['red_alt_form']}",
        "choices in force: detuning unit = {detuning_unit}, intensity convention = {intensity_convention}, "
        "matrix element = {matrix_element_mode}, density = {density:.4g} cm^-3".format(density=d["density_cm-3"], **d),
        f"  E_p               = {d['field_statV_cm']:.6g} statV/cm",
        f"  rabi              = {d['rabi_rad_s']:.6g} rad/s",
        f"  detuning          = {d['detuning_rad_s']:.6g} rad/s",
        f"  generalized rabi  = {d['generalized_rabi_rad_s']:.6g} rad/s",
        f"  matrix element    = {d['matrix_element']:.6g}",
        f"  ordinary          = {d['ordinary_cm-1']:.6g} cm^-1",
        f"  blue sideband     = {d['blue_cm-1']:.6g} cm^-1   ratio to {report['target_cm-1']:g}: {d['blue_ratio_to_target']:.4g}",
        f"  red sideband      = {d['red_cm-1']:.6g} cm^-1   ratio to {report['target_cm-1']:g}: {d['red_ratio_to_target']:.4g}",
        f"  blue/red spread   = {d['sideband_agreement']:.4g}   (within 10: {report['sidebands_agree_within_10']})",
        "",
        f"interpretations (target {report['target_cm-1']:g} cm^-1, band x{report['band_factor']:g}):",
        "  detun |        intensity |  matrix elem.  | density    ||   ordinary      blue       red   | in band",
    ]
    for r in report["interpretations"]:
        band = "both" if r["both_in_band"] else ("blue" if r["blue_in_band"] else ("red" if r["red_in_band"] else "-"))
        lines.append(
            f"  {_label(r)} || {r['ordinary_cm-1']:9.3e} {r['blue_cm-1']:9.3e} {r['red_cm-1']:9.3e} | {band}"
        )
    hits = [r for r in report["interpretations"] if r["both_in_band"]]
    blue_hits = [r for r in report["interpretations"] if r["blue_in_band"]]
    lines.append("")
    if hits:
        lines.append("both sidebands within band for: " + "; ".join(_label(r) for r in hits))
    else:
        lines.append("no interpretation puts both sidebands within the band")
    if blue_hits:
        lines.append("blue sideband within band for: " + "; ".join(_label(r) for r in blue_hits))
    return "\n".join(lines)
