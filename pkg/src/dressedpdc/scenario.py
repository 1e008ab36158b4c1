"""Scenario documents: strict INI-style files with explicit unit tags.

Every quantity is written as ``<number> <unit>``; a bare number is rejected.
Schema (section.key, accepted units)::

    [transition]
    wavelength  = <x> cm | mm | um | nm | angstrom
    dipole      = <x> statC*cm | debye
    rho_bar     = <x> cm | um | nm | angstrom
    density     = <x> cm^-3 | m^-3

    [pump]
    intensity   = <x> W/cm^2 | W/m^2
    detuning    = <x> Hz | rad/s
    intensity_convention = time-averaged | complex-amplitude     (optional)

    [state]
    theta       = <x> rad | deg
    phi         = <x> rad | deg                                  (optional, 0)

    [matrix_element]
    mode        = small_argument | transition | user_supplied
    value       = <x> 1                       (user_supplied only)

    [grid]
    start       = <x> omega_p | rad/s
    stop        = <x> omega_p | rad/s
    count       = <int>
    probe       = <x> omega_p | rad/s                            (optional)

    [run]
    components  = ordinary, blue, red   (any non-empty subset)
    cell_length = <x> cm | m | mm

``matrix_element.mode = transition`` freezes the small-argument value at the
transition wavenumber, ``(2 pi rho_bar / wavelength)^2``, for both fields.
"""

import configparser
import math
import re
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

import numpy as np

from .dressed import PumpConfig, TransitionSpec, superposition_from_angles
from .errors import DomainError, ScenarioError
from .gain import MatrixElementModel, SidebandComponent
from .units import DetuningUnit, IntensityConvention, LabInputs, wavelength_to_angular_frequency

__all__ = ["Scenario", "SignalGrid", "parse_scenario", "load_scenario", "preset_names", "REQUIRED_KEYS"]

LENGTH = {"cm": 1.0, "m": 1e2, "mm": 1e-1, "um": 1e-4, "nm": 1e-7, "angstrom": 1e-8}
UNITS = {
    "transition.wavelength": LENGTH,
    "transition.dipole": {"statc*cm": 1.0, "debye": 1e-18},
    "transition.rho_bar": LENGTH,
    "transition.density": {"cm^-3": 1.0, "m^-3": 1e-6},
    "pump.intensity": {"w/cm^2": 1.0, "w/m^2": 1e-4},
    "pump.detuning": {"hz": None, "rad/s": None},
    "state.theta": {"rad": 1.0, "deg": math.pi / 180},
    "state.phi": {"rad": 1.0, "deg": math.pi / 180},
    "matrix_element.value": {"1": 1.0},
    "grid.start": {"omega_p": None, "rad/s": None},
    "grid.stop": {"omega_p": None, "rad/s": None},
    "grid.probe": {"omega_p": None, "rad/s": None},
    "run.cell_length": {"cm": 1.0, "m": 1e2, "mm": 1e-1},
}
REQUIRED_KEYS = (
    "transition.wavelength",
    "transition.dipole",
    "transition.rho_bar",
    "transition.density",
    "pump.intensity",
    "pump.detuning",
    "state.theta",
    "matrix_element.mode",
    "grid.start",
    "grid.stop",
    "grid.count",
    "run.components",
    "run.cell_length",
)
OPTIONAL_KEYS = ("pump.intensity_convention", "state.phi", "matrix_element.value", "grid.probe")
MATRIX_MODES = ("small_argument", "transition", "user_supplied")
DEFAULT_PROBE_SPLIT = 1e-3


@dataclass(frozen=True)
class SignalGrid:
    start: float
    stop: float
    count: int
    unit: str  # "omega_p" (fraction of the pump frequency) or "rad/s"

    def __post_init__(self):
        if self.count < 2:
            raise DomainError("grid count must be at least 2")
        if not self.start < self.stop:
            raise DomainError("grid start must be below grid stop")

    def to_angular(self, value, omega_p):
        return value * omega_p if self.unit == "omega_p" else value

    def values(self, omega_p, allow_degenerate=False):
        """Signal frequencies (rad/s).

        A grid that hits ``w_p / 2`` exactly is shifted by half a step unless
        ``allow_degenerate`` is set.
        """
        lo, hi = self.to_angular(self.start, omega_p), self.to_angular(self.stop, omega_p)
        grid = np.linspace(lo, hi, self.count)
        if not allow_degenerate:
            half = 0.5 * omega_p
            if np.any(np.abs(grid - half) <= 1e-12 * omega_p):
                grid = grid + 0.5 * (hi - lo) / (self.count - 1)
        return grid


@dataclass(frozen=True)
class Scenario:
    name: str
    transition: TransitionSpec
    lab: LabInputs
    theta: float
    phi: float
    matrix_mode: str
    matrix_value: float | None
    grid: SignalGrid
    components: tuple
    cell_length: float
    probe: float | None = None
    probe_unit: str = "omega_p"

    @property
    def state(self):
        return superposition_from_angles(self.theta, self.phi)

    @property
    def matrix_model(self):
        if self.matrix_mode == "small_argument":
            return MatrixElementModel.small_argument(self.transition.rho_bar)
        if self.matrix_mode == "transition":
            return MatrixElementModel.at_wavenumber(self.transition.k0, self.transition.rho_bar)
        return MatrixElementModel.user_supplied(self.matrix_value)

    def pump(self, intensity=None):
        lab = self.lab
        intensity = lab.intensity if intensity is None else intensity
        return PumpConfig.from_intensity(self.transition, lab.detuning, intensity, lab.intensity_convention)

    def probe_signal(self, omega_p):
        """Fixed signal frequency for intensity sweeps and propagation runs."""
        if self.probe is None:
            return 0.5 * omega_p * (1 + DEFAULT_PROBE_SPLIT)
        return self.probe * omega_p if self.probe_unit == "omega_p" else self.probe

    def with_detuning_unit(self, unit):
        return replace(self, lab=replace(self.lab, detuning_unit=DetuningUnit.parse(unit)))

    def with_intensity_convention(self, convention):
        return replace(self, lab=replace(self.lab, intensity_convention=IntensityConvention(convention)))

    def with_matrix_mode(self, mode):
        return replace(self, matrix_mode=mode)

    def with_angles(self, theta, phi=None):
        return replace(self, theta=theta, phi=self.phi if phi is None else phi)

    def with_density(self, density):
        return replace(self, transition=replace(self.transition, density=density))


_NUMBER_UNIT = re.compile(r"^\s*([-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(.*?)\s*$")


class _Document:
    """Parsed INI text plus key -> line lookup for error messages."""

    def __init__(self, text, source):
        self.source = source
        self.parser = configparser.ConfigParser(
            inline_comment_prefixes=("#", ";"), interpolation=None, default_section="__none__"
        )
        try:
            self.parser.read_string(text, source=source)
        except configparser.Error as exc:
            line = getattr(exc, "lineno", None)
            raise ScenarioError(f"{source}: malformed document: {exc.message}", line=line) from None
        self.lines = {}
        section = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if stripped.startswith("[") and "]" in stripped:
                section = stripped[1 : stripped.index("]")].strip().lower()
                self.lines.setdefault(section, lineno)
            elif section and re.match(r"^[A-Za-z_][\w]*\s*[=:]", stripped):
                key = re.split(r"\s*[=:]", stripped, maxsplit=1)[0].lower()
                self.lines.setdefault(f"{section}.{key}", lineno)

    def keys(self):
        for section in self.parser.sections():
            for key in self.parser[section]:
                yield f"{section.lower()}.{key}"

    def has(self, path):
        section, key = path.split(".")
        return self.parser.has_option(section, key)

    def raw(self, path):
        section, key = path.split(".")
        return self.parser.get(section, key).strip()

    def error(self, message, path):
        return ScenarioError(f"{self.source}: {message}", key=path, line=self.lines.get(path))

    def quantity(self, path):
        """``(value, unit)`` with the unit validated against the schema."""
        text = self.raw(path)
        match = _NUMBER_UNIT.match(text)
        if not match:
            raise self.error(f"expected '<number> <unit>', got {text!r}", path)
        value, unit = float(match.group(1)), match.group(2)
        if not unit:
            allowed = ", ".join(UNITS[path])
            raise self.error(f"missing unit tag (one of: {allowed})", path)
        key = unit.lower().replace(" ", "")
        if key not in UNITS[path]:
            raise self.error(f"unit {unit!r} not accepted (one of: {', '.join(UNITS[path])})", path)
        return value, key

    def scaled(self, path):
        value, unit = self.quantity(path)
        return value * UNITS[path][unit]


def parse_scenario(text, name="<string>"):
    doc = _Document(text, name)
    known = set(REQUIRED_KEYS) | set(OPTIONAL_KEYS)
    for path in doc.keys():
        if path not in known:
            raise doc.error("unknown key", path)
    missing = [k for k in REQUIRED_KEYS if not doc.has(k)]
    if missing:
        raise ScenarioError(f"{name}: missing required keys: {', '.join(missing)}", key=missing[0])

    try:
        wavelength = doc.scaled("transition.wavelength")
        omega0 = wavelength_to_angular_frequency(wavelength)
        transition = TransitionSpec(
            omega0, doc.scaled("transition.dipole"), doc.scaled("transition.rho_bar"), doc.scaled("transition.density")
        )
    except DomainError as exc:
        raise doc.error(str(exc), "transition") from None

    intensity = doc.scaled("pump.intensity")
    if intensity < 0:
        raise doc.error("intensity must be non-negative", "pump.intensity")
    det_value, det_unit = doc.quantity("pump.detuning")
    if det_value == 0:
        raise doc.error("detuning must be nonzero", "pump.detuning")
    convention = IntensityConvention.TIME_AVERAGED
    if doc.has("pump.intensity_convention"):
        try:
            convention = IntensityConvention(doc.raw("pump.intensity_convention"))
        except ValueError:
            raise doc.error("expected 'time-averaged' or 'complex-amplitude'", "pump.intensity_convention") from None
    lab = LabInputs(intensity, det_value, DetuningUnit.parse(det_unit), wavelength, convention)

    theta = doc.scaled("state.theta")
    phi = doc.scaled("state.phi") if doc.has("state.phi") else 0.0

    mode = doc.raw("matrix_element.mode").lower()
    if mode not in MATRIX_MODES:
        raise doc.error(f"mode must be one of {', '.join(MATRIX_MODES)}", "matrix_element.mode")
    value = None
    if mode == "user_supplied":
        if not doc.has("matrix_element.value"):
            raise doc.error("user_supplied mode needs a value", "matrix_element.value")
        value = doc.scaled("matrix_element.value")
        if not 0 < value <= 1:
            raise doc.error("value must lie in (0, 1]", "matrix_element.value")
    elif doc.has("matrix_element.value"):
        raise doc.error(f"value is only accepted with mode user_supplied (mode is {mode})", "matrix_element.value")

    start, start_unit = doc.quantity("grid.start")
    stop, stop_unit = doc.quantity("grid.stop")
    if start_unit != stop_unit:
        raise doc.error("start and stop must use the same unit", "grid.stop")
    try:
        count = int(doc.raw("grid.count"))
    except ValueError:
        raise doc.error("count must be an integer", "grid.count") from None
    try:
        grid = SignalGrid(start, stop, count, start_unit)
    except DomainError as exc:
        raise doc.error(str(exc), "grid") from None
    probe, probe_unit = (None, "omega_p")
    if doc.has("grid.probe"):
        probe, probe_unit = doc.quantity("grid.probe")

    names = [c.strip().lower() for c in doc.raw("run.components").split(",") if c.strip()]
    try:
        components = tuple(SidebandComponent(c) for c in names)
    except ValueError:
        raise doc.error(f"components must be drawn from ordinary, blue, red; got {names}", "run.components") from None
    if not components or len(set(components)) != len(components):
        raise doc.error("components must be a non-empty list without repeats", "run.components")
    cell_length = doc.scaled("run.cell_length")
    if not cell_length > 0:
        raise doc.error("cell length must be positive", "run.cell_length")

    return Scenario(
        name=name,
        transition=transition,
        lab=lab,
        theta=theta,
        phi=phi,
        matrix_mode=mode,
        matrix_value=value,
        grid=grid,
        components=components,
        cell_length=cell_length,
        probe=probe,
        probe_unit=probe_unit,
    )


def preset_names():
    return sorted(p.name[:-4] for p in resources.files("dressedpdc.presets").iterdir() if p.name.endswith(".ini"))


def load_scenario(path_or_preset):
    """Load a scenario file, or a shipped preset by name (e.g. ``paper_s3``)."""
    path = Path(path_or_preset)
    if path.is_file():
        return parse_scenario(path.read_text(), name=path.stem)
    if str(path_or_preset) in preset_names():
        text = resources.files("dressedpdc.presets").joinpath(f"{path_or_preset}.ini").read_text()
        return parse_scenario(text, name=str(path_or_preset))
    if path.suffix or len(path.parts) > 1:
        raise FileNotFoundError(2, "scenario file not found", str(path))
    raise ScenarioError(f"no scenario file or preset named {str(path_or_preset)!r} (presets: {', '.join(preset_names())})")
