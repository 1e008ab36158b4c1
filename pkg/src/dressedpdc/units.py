"""
CGS-Gaussian constants and laboratory-unit conversions.

Everything inside the package is computed in CGS-Gaussian units: lengths in
cm, angular frequencies in rad/s, fields in statvolt/cm, charges in
statcoulomb, dipole moments in statcoulomb*cm.  Laboratory inputs (W/cm^2,
Hz, micrometres) are converted here and nowhere else.

Intensity convention
--------------------
Unless stated otherwise a pump of intensity ``I`` is a real field
``E(t) = E_p cos(w t)`` whose time-averaged Poynting flux is
``c E_p^2 / (8 pi)``.  The alternative ``complex-amplitude`` convention
treats ``E_p`` as the coefficient of ``exp(-i w t)`` in
``E(t) = E_p exp(-i w t) + c.c.``, i.e. a real amplitude of ``2 E_p`` and a
flux of ``c E_p^2 / (2 pi)``.  The choice scales the Rabi frequency, so it
is always carried explicitly.
"""

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "PhysicalConstants",
    "CGS",
    "IntensityConvention",
    "DetuningUnit",
    "LabInputs",
    "W_PER_CM2_TO_CGS",
    "intensity_to_field_amplitude",
    "field_amplitude_to_intensity",
    "wavelength_to_angular_frequency",
    "angular_frequency_to_wavelength",
    "detuning_to_angular",
    "angular_to_detuning",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants in CGS-Gaussian units (CODATA 2018)."""

    electron_charge: float  # statC
    electron_mass: float  # g
    speed_of_light: float  # cm/s
    hbar: float  # erg s

    def __post_init__(self):
        for name in ("electron_charge", "electron_mass", "speed_of_light", "hbar"):
            if not getattr(self, name) > 0:
                raise DomainError(f"{name} must be strictly positive")

    @property
    def e(self):
        return self.electron_charge

    @property
    def m(self):
        return self.electron_mass

    @property
    def c(self):
        return self.speed_of_light


CGS = PhysicalConstants(
    electron_charge=4.803204712570263e-10,
    electron_mass=9.1093837015e-28,
    speed_of_light=2.99792458e10,
    hbar=1.054571817e-27,
)

# 1 W = 1e7 erg/s
W_PER_CM2_TO_CGS = 1.0e7


class IntensityConvention(str, enum.Enum):
    TIME_AVERAGED = "time-averaged"
    COMPLEX_AMPLITUDE = "complex-amplitude"

    @property
    def flux_denominator(self):
        """``I = c E_p^2 / denominator`` for this convention."""
        return 8.0 * math.pi if self is IntensityConvention.TIME_AVERAGED else 2.0 * math.pi


class DetuningUnit(str, enum.Enum):
    HZ = "Hz"
    RAD_PER_S = "rad/s"

    @classmethod
    def parse(cls, tag):
        if isinstance(tag, cls):
            return tag
        key = str(tag).strip().lower().replace(" ", "")
        aliases = {"hz": cls.HZ, "rad/s": cls.RAD_PER_S, "rads": cls.RAD_PER_S, "rad/sec": cls.RAD_PER_S}
        if key not in aliases:
            raise DomainError(f"unknown detuning unit {tag!r}; expected 'Hz' or 'rad/s'")
        return aliases[key]


@dataclass(frozen=True)
class LabInputs:
    """Pump inputs as quoted in a laboratory: wavelength, intensity, detuning.

    ``detuning_unit`` is mandatory; a bare number is never interpreted by
    guessing from its magnitude.
    """

    intensity: float  # W/cm^2
    detuning_value: float
    detuning_unit: DetuningUnit
    vacuum_wavelength: float | None = None  # cm
    intensity_convention: IntensityConvention = IntensityConvention.TIME_AVERAGED

    def __post_init__(self):
        if self.vacuum_wavelength is not None and not self.vacuum_wavelength > 0:
            raise DomainError("wavelength must be positive")
        if not self.intensity >= 0:
            raise DomainError("intensity must be non-negative")
        object.__setattr__(self, "detuning_unit", DetuningUnit.parse(self.detuning_unit))
        object.__setattr__(self, "intensity_convention", IntensityConvention(self.intensity_convention))

    @property
    def detuning(self):
        """Detuning in rad/s."""
        return detuning_to_angular(self.detuning_value, self.detuning_unit)

    @property
    def field_amplitude(self):
        return intensity_to_field_amplitude(self.intensity, self.intensity_convention)


def intensity_to_field_amplitude(intensity, convention=IntensityConvention.TIME_AVERAGED, constants=CGS):
    """Field amplitude in statvolt/cm for an intensity in W/cm^2."""
    if intensity < 0:
        raise DomainError(f"intensity must be non-negative, got {intensity!r}")
    convention = IntensityConvention(convention)
    i_cgs = intensity * W_PER_CM2_TO_CGS
    return math.sqrt(convention.flux_denominator * i_cgs / constants.c)


def field_amplitude_to_intensity(field, convention=IntensityConvention.TIME_AVERAGED, constants=CGS):
    """Inverse of :func:`intensity_to_field_amplitude`, result in W/cm^2."""
    if field < 0:
        raise DomainError(f"field amplitude must be non-negative, got {field!r}")
    convention = IntensityConvention(convention)
    return constants.c * field * field / convention.flux_denominator / W_PER_CM2_TO_CGS


def wavelength_to_angular_frequency(wavelength, constants=CGS):
    if not wavelength > 0:
        raise DomainError(f"wavelength must be positive, got {wavelength!r}")
    return 2.0 * math.pi * constants.c / wavelength


def angular_frequency_to_wavelength(omega, constants=CGS):
    if not omega > 0:
        raise DomainError(f"angular frequency must be positive, got {omega!r}")
    return 2.0 * math.pi * constants.c / omega


def detuning_to_angular(value, unit):
    """Detuning in rad/s. Hz values are multiplied by 2 pi; sign is kept."""
    unit = DetuningUnit.parse(unit)
    return 2.0 * math.pi * value if unit is DetuningUnit.HZ else float(value)


def angular_to_detuning(delta, unit):
    unit = DetuningUnit.parse(unit)
    return delta / (2.0 * math.pi) if unit is DetuningUnit.HZ else float(delta)
