"""Amplification coefficients of the three down-conversion channels.

A pump-dressed two-level atom prepared in ``alpha|psi_+> + beta|psi_->``
amplifies a signal/idler pair through three independent channels:

* ordinary: ``w_s + w_i = w_p``, weighted by the population difference;
* blue sideband: ``w_s + w_i = w_p + rabi``, weighted by ``|alpha* beta|``;
* red sideband: ``w_s + w_i = w_p - rabi``, weighted by ``|alpha* beta|``.

The ordinary coefficient saturates with pump strength, the two sideband
coefficients grow without bound (asymptotically linear in the Rabi
frequency).  Every coefficient is returned as a :class:`GainPoint` whose
breakdown factors multiply to the coefficient, so a value can be audited
term by term.
"""

import enum
import math
import warnings
from dataclasses import dataclass, field

from .dressed import DIPOLE_REGIME_LIMIT, DipoleRegimeWarning
from .errors import DomainError, PhaseMatchingError
from .units import CGS

__all__ = [
    "SidebandComponent",
    "FrequencyPair",
    "MatrixElementModel",
    "GainPoint",
    "GainOptions",
    "idler_for_signal",
    "central_pair",
    "matrix_element",
    "gain_ordinary",
    "gain_blue",
    "gain_red",
    "gain",
]

# Flag tokens attached to GainPoint.flags
DEGENERATE = "degenerate"
NEGATIVE_RADICAND = "negative-radicand"
TWO_LEVEL_GUARD = "two-level-guard"
PUMP_RATIO = "pump-ratio"
DIPOLE_REGIME = "dipole-regime"
BARE_LIMIT = "bare-limit"


class SidebandComponent(str, enum.Enum):
    ORDINARY = "ordinary"
    BLUE = "blue"
    RED = "red"

    @property
    def shift_sign(self):
        return {"ordinary": 0, "blue": 1, "red": -1}[self.value]

    def sum_target(self, omega_p, rabi):
        """Required ``w_s + w_i`` for this component."""
        return omega_p + self.shift_sign * rabi

    def mismatch(self, rabi):
        """Phase-mismatch wavenumber (cm^-1) of the reduced wave equation."""
        return self.shift_sign * rabi / CGS.c


@dataclass(frozen=True)
class FrequencyPair:
    omega_s: float
    omega_i: float

    def __post_init__(self):
        if not (self.omega_s > 0 and self.omega_i > 0):
            raise DomainError(f"signal and idler frequencies must be positive, got {self}")

    def swapped(self):
        return FrequencyPair(self.omega_i, self.omega_s)

    @property
    def k_s(self):
        return self.omega_s / CGS.c

    @property
    def k_i(self):
        return self.omega_i / CGS.c


class MatrixElementMode(str, enum.Enum):
    SMALL_ARGUMENT = "small_argument"
    USER_SUPPLIED = "user_supplied"


@dataclass(frozen=True)
class MatrixElementModel:
    """Model for ``<1| sin(k_s rho_z) sin(k_i rho_z) |1>``.

    ``small_argument`` expands both sines, giving ``k_s k_i rho_bar^2``;
    ``user_supplied`` returns a fixed value in (0, 1].
    """

    mode: MatrixElementMode
    rho_bar: float | None = None
    supplied_value: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "mode", MatrixElementMode(self.mode))
        if self.mode is MatrixElementMode.SMALL_ARGUMENT:
            if self.rho_bar is None or not self.rho_bar > 0:
                raise DomainError("small-argument matrix element needs rho_bar > 0")
        elif self.supplied_value is None or not 0 < self.supplied_value <= 1:
            raise DomainError("user-supplied matrix element must lie in (0, 1]")

    @classmethod
    def small_argument(cls, rho_bar):
        return cls(MatrixElementMode.SMALL_ARGUMENT, rho_bar=rho_bar)

    @classmethod
    def user_supplied(cls, value):
        return cls(MatrixElementMode.USER_SUPPLIED, supplied_value=value)

    @classmethod
    def at_wavenumber(cls, k, rho_bar):
        """Small-argument value frozen at a single wavenumber for both fields."""
        return cls.user_supplied((k * rho_bar) ** 2)


def _matrix_element(model, k_s, k_i):
    if not (k_s > 0 and k_i > 0):
        raise DomainError("wavenumbers must be positive")
    if model.mode is MatrixElementMode.USER_SUPPLIED:
        return model.supplied_value, False
    strained = max(k_s, k_i) * model.rho_bar > DIPOLE_REGIME_LIMIT
    return (k_s * model.rho_bar) * (k_i * model.rho_bar), strained


def matrix_element(model, k_s, k_i):
    value, strained = _matrix_element(model, k_s, k_i)
    if strained:
        warnings.warn(
            f"max(k)*rho_bar = {max(k_s, k_i) * model.rho_bar:.3g} exceeds {DIPOLE_REGIME_LIMIT}",
            DipoleRegimeWarning,
            stacklevel=2,
        )
    return value


@dataclass(frozen=True)
class GainOptions:
    """Tolerances and switches shared by the gain functions."""

    sum_rule_tolerance: float = 1e-9  # relative to w_p
    guard_fraction: float = 1e-2  # warn when generalized Rabi > fraction * w0
    pump_ratio: float = 10.0  # warn when min(w_s, w_i) < pump_ratio * rabi
    degeneracy_tolerance: float = 1e-12  # relative to w_p
    red_alt_form: bool = False  # |detuning + generalized_rabi/2| in the red coefficient


DEFAULT_OPTIONS = GainOptions()


@dataclass(frozen=True)
class GainPoint:
    component: SidebandComponent
    pair: FrequencyPair
    coefficient: float  # cm^-1
    breakdown: dict = field(default_factory=dict)
    flags: tuple = ()

    def breakdown_product(self):
        return math.prod(self.breakdown.values())


def idler_for_signal(component, omega_p, rabi, omega_s):
    component = SidebandComponent(component)
    omega_i = component.sum_target(omega_p, rabi) - omega_s
    if not omega_i > 0:
        raise DomainError(
            f"{component.value}: sum rule w_s + w_i = {component.sum_target(omega_p, rabi):.6g} "
            f"leaves idler {omega_i:.6g} <= 0 for w_s = {omega_s:.6g}"
        )
    return omega_i


def central_pair(component, omega_p, rabi, split=1e-3):
    """Pair straddling the centre of the component's band, offset to stay nondegenerate."""
    target = SidebandComponent(component).sum_target(omega_p, rabi)
    omega_s = 0.5 * target * (1.0 + split)
    return FrequencyPair(omega_s, target - omega_s)


def _check_inputs(component, transition, pump, pair, options):
    if pump.detuning == 0:
        raise DomainError("gain evaluation requires a nonzero detuning")
    target = component.sum_target(pump.omega_p, pump.rabi)
    residual = abs(pair.omega_s + pair.omega_i - target) / pump.omega_p
    if residual > options.sum_rule_tolerance:
        raise PhaseMatchingError(
            f"{component.value}: w_s + w_i deviates from {target:.9g} by {residual:.3g} (relative to w_p)"
        )
    if not (2 * pump.omega_p - pair.omega_s > 0 and 2 * pump.omega_p - pair.omega_i > 0):
        raise DomainError("2 w_p - w_s and 2 w_p - w_i must both be positive")

    flags = []
    if abs(pair.omega_s - pair.omega_i) <= options.degeneracy_tolerance * pump.omega_p:
        flags.append(DEGENERATE)
    if pump.generalized_rabi > options.guard_fraction * transition.omega0:
        flags.append(TWO_LEVEL_GUARD)
    if min(pair.omega_s, pair.omega_i) < options.pump_ratio * pump.rabi:
        flags.append(PUMP_RATIO)
    if pump.rabi == 0:
        flags.append(BARE_LIMIT)
    return flags


def _finish(component, pair, breakdown, flags, model):
    m_value, strained = _matrix_element(model, pair.k_s, pair.k_i)
    breakdown["matrix_element"] = math.sqrt(m_value)
    if strained:
        flags.append(DIPOLE_REGIME)
    return GainPoint(component, pair, math.prod(breakdown.values()), breakdown, tuple(flags))


def gain_ordinary(transition, pump, state, pair, model, options=DEFAULT_OPTIONS):
    """Ordinary channel (``w_s + w_i = w_p``), saturating in pump strength.

    ``4 pi n e^2/(m c) * ||a|^2-|b|^2| * |D| R / sqrt(D^2+R^2)
    * sqrt(M / prod_mu (2 w_p - w_mu) w_mu)``
    """
    comp = SidebandComponent.ORDINARY
    flags = _check_inputs(comp, transition, pump, pair, options)
    wp, ws, wi = pump.omega_p, pair.omega_s, pair.omega_i
    breakdown = {
        "prefactor": 4 * math.pi * transition.density * CGS.e**2 / (CGS.m * CGS.c),
        "population": state.population_difference,
        "saturation": abs(pump.detuning) * pump.rabi / pump.generalized_rabi,
        "frequency": 1.0 / math.sqrt((2 * wp - ws) * ws * (2 * wp - wi) * wi),
    }
    return _finish(comp, pair, breakdown, flags, model)


def gain_blue(transition, pump, state, pair, model, options=DEFAULT_OPTIONS):
    """Blue sideband (``w_s + w_i = w_p + rabi``), nonsaturating.

    A negative product under the square root (possible for negative
    detuning) is replaced by its magnitude and flagged.
    """
    comp = SidebandComponent.BLUE
    flags = _check_inputs(comp, transition, pump, pair, options)
    wp, ws, wi = pump.omega_p, pair.omega_s, pair.omega_i
    gen, delta = pump.generalized_rabi, pump.detuning
    radicand = (gen / (2 * wp - ws) + delta / ws) * (gen / (2 * wp - wi) + delta / wi)
    if radicand < 0:
        flags.append(NEGATIVE_RADICAND)
    breakdown = {
        "prefactor": math.pi * transition.density * CGS.e**2 / (CGS.m * CGS.c * wp),
        "coherence": state.coherence,
        "saturation": (pump.rabi / gen) ** 2,
        "frequency": math.sqrt(abs(radicand)),
    }
    return _finish(comp, pair, breakdown, flags, model)


def gain_red(transition, pump, state, pair, model, options=DEFAULT_OPTIONS):
    """Red sideband (``w_s + w_i = w_p - rabi``), nonsaturating.

    ``options.red_alt_form`` swaps ``|D + R/2|`` for ``|D + R'/2|``.
    """
    comp = SidebandComponent.RED
    flags = _check_inputs(comp, transition, pump, pair, options)
    wp, ws, wi = pump.omega_p, pair.omega_s, pair.omega_i
    shift = pump.generalized_rabi if options.red_alt_form else pump.rabi
    breakdown = {
        "prefactor": math.pi * transition.density * CGS.e**2 / (CGS.m * CGS.c * wp),
        "coherence": state.coherence,
        "saturation": (pump.rabi / pump.generalized_rabi) ** 2,
        "frequency": abs(pump.detuning + 0.5 * shift) / math.sqrt((2 * wp - ws) * (2 * wp - wi)),
    }
    return _finish(comp, pair, breakdown, flags, model)


_DISPATCH = {
    SidebandComponent.ORDINARY: gain_ordinary,
    SidebandComponent.BLUE: gain_blue,
    SidebandComponent.RED: gain_red,
}


def gain(component, transition, pump, state, pair, model, options=DEFAULT_OPTIONS):
    return _DISPATCH[SidebandComponent(component)](transition, pump, state, pair, model, options)
