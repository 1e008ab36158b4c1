"""Two-level atom dressed by a classical monochromatic pump.

Conventions: the detuning is ``pump - transition`` (rad/s), the Rabi
frequency is ``2 d12 E_p / hbar`` and the dressed states are

    |psi_pm> = N_pm (|1> - (2 lambda_pm / rabi) |2> e^{-i w_p t + i k_p z}) e^{...}

with quasi-energy shifts ``lambda_pm = -detuning/2 +- generalized_rabi/2``.
"""

import cmath
import math
import warnings
from dataclasses import dataclass

from .errors import DomainError
from .units import CGS, intensity_to_field_amplitude, wavelength_to_angular_frequency

__all__ = [
    "DipoleRegimeWarning",
    "TransitionSpec",
    "PumpConfig",
    "DressedPair",
    "SuperpositionState",
    "rabi_frequency",
    "generalized_rabi",
    "dressed_pair",
    "superposition",
    "superposition_from_angles",
]

DIPOLE_REGIME_LIMIT = 0.3


class DipoleRegimeWarning(UserWarning):
    """``k * rho_bar`` is no longer small; the small-argument sine model is strained."""


@dataclass(frozen=True)
class TransitionSpec:
    """Bare two-level transition and the gas that carries it (CGS units)."""

    omega0: float  # rad/s
    d12: float  # statC cm
    rho_bar: float  # cm
    density: float  # cm^-3

    def __post_init__(self):
        for name in ("omega0", "d12", "rho_bar", "density"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise DomainError(f"TransitionSpec.{name} must be positive and finite, got {value!r}")
        if self.k0 * self.rho_bar > DIPOLE_REGIME_LIMIT:
            warnings.warn(
                f"k0*rho_bar = {self.k0 * self.rho_bar:.3g} is not small",
                DipoleRegimeWarning,
                stacklevel=3,
            )

    @classmethod
    def from_wavelength(cls, wavelength, d12, rho_bar, density):
        return cls(wavelength_to_angular_frequency(wavelength), d12, rho_bar, density)

    @property
    def k0(self):
        return self.omega0 / CGS.c

    @property
    def wavelength(self):
        return 2.0 * math.pi * CGS.c / self.omega0


def rabi_frequency(d12, field):
    """Rabi frequency ``2 d12 E_p / hbar`` in rad/s."""
    if d12 < 0 or field < 0:
        raise DomainError("dipole moment and field amplitude must be non-negative")
    return 2.0 * d12 * field / CGS.hbar


def generalized_rabi(detuning, rabi):
    return math.hypot(detuning, rabi)


@dataclass(frozen=True)
class PumpConfig:
    """Pump frequency and field plus the quantities derived against a transition."""

    omega_p: float  # rad/s
    field: float  # statvolt/cm
    detuning: float  # rad/s
    rabi: float  # rad/s
    generalized_rabi: float  # rad/s

    def __post_init__(self):
        if not self.omega_p > 0:
            raise DomainError(f"pump frequency must be positive, got {self.omega_p!r}")
        if self.field < 0 or self.rabi < 0:
            raise DomainError("pump field and Rabi frequency must be non-negative")

    @classmethod
    def create(cls, transition, omega_p, field):
        detuning = omega_p - transition.omega0
        rabi = rabi_frequency(transition.d12, field)
        return cls(omega_p, field, detuning, rabi, generalized_rabi(detuning, rabi))

    @classmethod
    def from_detuning(cls, transition, detuning, field):
        """Pump at ``omega0 + detuning``; the detuning is kept exactly as given."""
        rabi = rabi_frequency(transition.d12, field)
        return cls(transition.omega0 + detuning, field, detuning, rabi, generalized_rabi(detuning, rabi))

    @classmethod
    def from_intensity(cls, transition, detuning, intensity, convention="time-averaged"):
        return cls.from_detuning(transition, detuning, intensity_to_field_amplitude(intensity, convention))

    @classmethod
    def from_rabi(cls, transition, detuning, rabi):
        """Pump whose field is chosen so that the Rabi frequency equals ``rabi``."""
        if rabi < 0:
            raise DomainError("Rabi frequency must be non-negative")
        field = rabi * CGS.hbar / (2.0 * transition.d12)
        return cls(transition.omega0 + detuning, field, detuning, rabi, generalized_rabi(detuning, rabi))

    @property
    def k_p(self):
        return self.omega_p / CGS.c

    def dressed(self):
        return dressed_pair(self.detuning, self.rabi)


@dataclass(frozen=True)
class DressedPair:
    lambda_plus: float
    lambda_minus: float
    n_plus: float
    n_minus: float
    bare_limit: bool = False


def dressed_pair(detuning, rabi):
    """Stark shifts and normalisation factors of the two dressed states.

    At ``rabi == 0`` the normalisation is 0/0; the analytic bare-atom limit
    is returned with ``bare_limit=True``.  One dressed state then coincides
    with bare level |1> (N = 1) and the other carries vanishing weight on
    |1> (N = 0).  On exact resonance the symmetric limit N = 1/sqrt(2) is used.
    """
    if rabi < 0:
        raise DomainError("Rabi frequency must be non-negative")
    gen = generalized_rabi(detuning, rabi)
    # Cancellation-free forms of gen - |detuning| and the shift that uses it.
    small = rabi * rabi / (gen + abs(detuning)) if gen > 0 else 0.0
    if detuning >= 0:
        lam_p, lam_m = 0.5 * small, -0.5 * (gen + detuning)
        gap_p, gap_m = small, gen + detuning  # gen - detuning, gen + detuning
    else:
        lam_p, lam_m = 0.5 * (gen - detuning), -0.5 * small
        gap_p, gap_m = gen - detuning, small

    if rabi == 0:
        if detuning > 0:
            n_p, n_m = 1.0, 0.0
        elif detuning < 0:
            n_p, n_m = 0.0, 1.0
        else:
            n_p = n_m = math.sqrt(0.5)
        return DressedPair(lam_p, lam_m, n_p, n_m, bare_limit=True)

    n_p = rabi / math.sqrt(2.0 * gen * gap_p)
    n_m = rabi / math.sqrt(2.0 * gen * gap_m)
    return DressedPair(lam_p, lam_m, n_p, n_m)


@dataclass(frozen=True)
class SuperpositionState:
    """Unit-norm amplitudes on the dressed states |psi_+> and |psi_->."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"superposition must be normalised, |a|^2+|b|^2 = {norm!r}")

    @property
    def population_difference(self):
        """``| |alpha|^2 - |beta|^2 |``."""
        return abs(abs(self.alpha) ** 2 - abs(self.beta) ** 2)

    @property
    def signed_population_difference(self):
        return abs(self.alpha) ** 2 - abs(self.beta) ** 2

    @property
    def coherence_amplitude(self):
        """``conj(alpha) * beta``; its modulus is the coherence."""
        return self.alpha.conjugate() * self.beta

    @property
    def coherence(self):
        return abs(self.alpha) * abs(self.beta)


def superposition(alpha_raw, beta_raw):
    alpha_raw, beta_raw = complex(alpha_raw), complex(beta_raw)
    norm = math.hypot(abs(alpha_raw), abs(beta_raw))
    if norm == 0:
        raise DomainError("superposition amplitudes cannot both be zero")
    return SuperpositionState(alpha_raw / norm, beta_raw / norm)


def superposition_from_angles(theta, phi=0.0):
    """``alpha = cos(theta)``, ``beta = exp(i phi) sin(theta)``."""
    return superposition(complex(math.cos(theta)), cmath.exp(1j * phi) * math.sin(theta))
