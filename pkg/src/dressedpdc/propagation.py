"""Propagation of slowly varying signal/idler envelopes along z.

The reduced wave equations of every channel share the form

    dA_s/dz = kappa_s * conj(A_i) * exp(i delta z)
    dA_i/dz = kappa_i * conj(A_s) * exp(i delta z)

with ``delta = 0`` for the ordinary channel and ``+-rabi/c`` for the
sidebands.  :func:`propagate_analytic` is the single-exponential solution
``A(z) = A(0) exp(g z)``; :func:`propagate_coupled` integrates the pair with
fixed-step classical RK4.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, InsufficientGrowthError, IntegrationError
from .gain import SidebandComponent

__all__ = [
    "CoupledSystem",
    "StepControl",
    "PropagationTrace",
    "coupled_system",
    "propagate_analytic",
    "propagate_coupled",
    "asymptotic_growth_rate",
    "default_step",
]

MAX_KAPPA_STEP = 0.1


@dataclass(frozen=True)
class CoupledSystem:
    kappa_s: complex  # cm^-1
    kappa_i: complex  # cm^-1
    delta: float = 0.0  # cm^-1
    component: SidebandComponent | None = None

    def __post_init__(self):
        if not math.isfinite(self.delta):
            raise DomainError("mismatch must be finite")
        if self.component is SidebandComponent.ORDINARY and self.delta != 0:
            raise DomainError("the ordinary channel is phase matched (delta = 0)")

    @classmethod
    def symmetric(cls, kappa, delta=0.0):
        return cls(complex(kappa), complex(kappa), delta)

    @property
    def kappa(self):
        """Geometric-mean coupling ``sqrt(|kappa_s kappa_i|)``."""
        return math.sqrt(abs(self.kappa_s * self.kappa_i))

    @property
    def max_kappa(self):
        return max(abs(self.kappa_s), abs(self.kappa_i))


def _equation_weights(point, pump):
    """Frequency factor of the s- and i-equation for one channel."""
    wp, ws, wi = pump.omega_p, point.pair.omega_s, point.pair.omega_i
    comp = point.component
    if comp is SidebandComponent.ORDINARY:
        return 1 / (2 * wp - wi) + 1 / wi, 1 / (2 * wp - ws) + 1 / ws
    if comp is SidebandComponent.BLUE:
        gen, delta = pump.generalized_rabi, pump.detuning
        return gen / (2 * wp - wi) + delta / wi, gen / (2 * wp - ws) + delta / ws
    return 1 / (2 * wp - wi), 1 / (2 * wp - ws)


def coupled_system(point, pump, state):
    """Coupled pair whose geometric-mean coupling equals ``point.coefficient``.

    The two equations keep their own frequency factors; the overall phase is
    ``sign(population difference * detuning)`` for the ordinary channel and
    ``arg(conj(alpha) beta)`` for the sidebands.
    """
    g = point.coefficient
    comp = point.component
    delta = comp.mismatch(pump.rabi)
    w_s, w_i = _equation_weights(point, pump)
    scale = math.sqrt(abs(w_s * w_i))
    if g == 0 or scale == 0:
        return CoupledSystem(0j, 0j, delta, comp)
    if comp is SidebandComponent.ORDINARY:
        phase = complex(math.copysign(1.0, state.signed_population_difference * pump.detuning))
    else:
        amp = state.coherence_amplitude
        phase = amp / abs(amp) if amp != 0 else 1 + 0j
    return CoupledSystem(g * phase * w_s / scale, g * phase * w_i / scale, delta, comp)


@dataclass(frozen=True)
class StepControl:
    """Fixed RK4 step (cm) and the relative tolerance for the conserved quantity."""

    step: float
    tolerance: float = 1e-8

    def __post_init__(self):
        if not (self.step > 0 and self.tolerance > 0):
            raise DomainError("step and tolerance must be positive")


def default_step(system, span, kappa_step=1e-2, phase_step=0.05, min_steps=200):
    """Step resolving both the gain length and the mismatch phase."""
    candidates = [span / min_steps]
    if system.max_kappa > 0:
        candidates.append(kappa_step / system.max_kappa)
    if system.delta != 0:
        candidates.append(phase_step / abs(system.delta))
    return min(candidates)


@dataclass
class PropagationTrace:
    z: np.ndarray
    a_s: np.ndarray
    a_i: np.ndarray
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.z = np.asarray(self.z, dtype=float)
        self.a_s = np.asarray(self.a_s, dtype=complex)
        self.a_i = np.asarray(self.a_i, dtype=complex)
        if not (self.z.shape == self.a_s.shape == self.a_i.shape) or self.z.ndim != 1:
            raise DomainError("trace arrays must be one-dimensional and of equal length")
        if self.z.size > 1 and np.any(np.diff(self.z) <= 0):
            raise DomainError("z samples must be strictly increasing")

    def __len__(self):
        return self.z.size

    def gain_db(self):
        """Total signal gain, 20 log10 of the amplitude ratio."""
        return 20.0 * math.log10(abs(self.a_s[-1]) / abs(self.a_s[0]))


def _z_grid(z_grid):
    z = np.asarray(z_grid, dtype=float)
    if z.ndim != 1 or z.size < 2 or np.any(np.diff(z) <= 0) or not np.all(np.isfinite(z)):
        raise DomainError("z grid must be a finite, strictly increasing 1-d array with >= 2 samples")
    return z


def propagate_analytic(coefficient, a0_s, a0_i, z_grid):
    if not coefficient >= 0:
        raise DomainError("amplification coefficient must be non-negative")
    z = _z_grid(z_grid)
    growth = np.exp(coefficient * (z - z[0]))
    return PropagationTrace(
        z, complex(a0_s) * growth, complex(a0_i) * growth, {"kind": "analytic", "coefficient": coefficient}
    )


def _invariant(system, a_s, a_i):
    """Manley-Rowe analog and the scale it is compared against."""
    ws = 1.0 / abs(system.kappa_s) if system.kappa_s != 0 else 1.0
    wi = 1.0 / abs(system.kappa_i) if system.kappa_i != 0 else 1.0
    # Opposite-sign couplings conserve the sum instead of the difference.
    sign = -1.0 if (system.kappa_i * system.kappa_s.conjugate()).real < 0 else 1.0
    ps, pi_ = ws * np.abs(a_s) ** 2, wi * np.abs(a_i) ** 2
    return ps - sign * pi_, ps + pi_


def propagate_coupled(system, a0_s, a0_i, z_span, step_control=None):
    """Integrate the coupled pair over ``z_span`` (a length or a ``(z0, z1)`` pair).

    Every RK4 step is sampled; the last step is shortened to land on the end
    of the span.  Steps with ``max|kappa| * h > 0.1`` are rejected.
    """
    z0, z1 = (0.0, float(z_span)) if np.isscalar(z_span) else map(float, z_span)
    if not z1 > z0:
        raise DomainError("propagation span must have positive length")
    if step_control is None:
        step_control = StepControl(default_step(system, z1 - z0))
    h = step_control.step
    if system.max_kappa * h > MAX_KAPPA_STEP:
        raise DomainError(
            f"step {h:.3g} cm too large: |kappa|*h = {system.max_kappa * h:.3g} > {MAX_KAPPA_STEP}; "
            f"use h <= {MAX_KAPPA_STEP / system.max_kappa:.3g} cm"
        )

    ks, ki, delta = complex(system.kappa_s), complex(system.kappa_i), system.delta

    def rhs(z, s, i):
        ph = cmath.exp(1j * delta * z)
        return ks * i.conjugate() * ph, ki * s.conjugate() * ph

    n_steps = math.ceil((z1 - z0) / h * (1 - 1e-12))
    zs = np.empty(n_steps + 1)
    ss = np.empty(n_steps + 1, dtype=complex)
    ii = np.empty(n_steps + 1, dtype=complex)
    z, s, i = z0, complex(a0_s), complex(a0_i)
    zs[0], ss[0], ii[0] = z, s, i
    for n in range(1, n_steps + 1):
        z_next = z0 + n * h if n < n_steps else z1
        dz = z_next - z
        k1s, k1i = rhs(z, s, i)
        k2s, k2i = rhs(z + 0.5 * dz, s + 0.5 * dz * k1s, i + 0.5 * dz * k1i)
        k3s, k3i = rhs(z + 0.5 * dz, s + 0.5 * dz * k2s, i + 0.5 * dz * k2i)
        k4s, k4i = rhs(z + dz, s + dz * k3s, i + dz * k3i)
        s = s + dz / 6.0 * (k1s + 2 * k2s + 2 * k3s + k4s)
        i = i + dz / 6.0 * (k1i + 2 * k2i + 2 * k3i + k4i)
        if not (cmath.isfinite(s) and cmath.isfinite(i)):
            raise IntegrationError(f"non-finite amplitude after z = {z:.6g} cm", last_z=z)
        z = z_next
        zs[n], ss[n], ii[n] = z, s, i

    inv0, _ = _invariant(system, ss[0], ii[0])
    inv, scale = _invariant(system, ss, ii)
    drift = float(np.max(np.abs(inv - inv0) / np.maximum(scale, np.finfo(float).tiny)))
    meta = {
        "kind": "coupled",
        "component": system.component.value if system.component else None,
        "kappa": system.kappa,
        "delta": delta,
        "step": h,
        "tolerance": step_control.tolerance,
        "invariant_drift": drift,
    }
    return PropagationTrace(zs, ss, ii, meta)


def asymptotic_growth_rate(trace, require_growth=True, fraction=1 / 3):
    """Least-squares slope of ``ln|A_s|`` over the final part of the trace (cm^-1).

    With ``require_growth`` the trace must grow by at least e^2 from its
    minimum; otherwise the slope is returned whatever it is.
    """
    mag = np.abs(trace.a_s)
    if np.any(mag == 0):
        raise InsufficientGrowthError("signal amplitude vanishes on the trace")
    log_mag = np.log(mag)
    if require_growth and log_mag[-1] - log_mag.min() < 2.0:
        raise InsufficientGrowthError(
            f"signal grows by only exp({log_mag[-1] - log_mag.min():.3g}); need exp(2) for an asymptotic rate"
        )
    start = int(math.floor(len(trace) * (1 - fraction)))
    z, y = trace.z[start:], log_mag[start:]
    if z.size < 2:
        raise InsufficientGrowthError("trace too short")
    return float(np.polyfit(z - z[0], y, 1)[0])
