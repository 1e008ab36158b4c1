"""Parametric down-conversion gain in a gas of pump-dressed two-level atoms."""

from .dressed import (
    DressedPair,
    PumpConfig,
    SuperpositionState,
    TransitionSpec,
    dressed_pair,
    generalized_rabi,
    rabi_frequency,
    superposition,
    superposition_from_angles,
)
from .errors import (
    DomainError,
    InsufficientGrowthError,
    IntegrationError,
    PDCError,
    PhaseMatchingError,
    ScenarioError,
)
from .gain import (
    FrequencyPair,
    GainOptions,
    GainPoint,
    MatrixElementModel,
    SidebandComponent,
    central_pair,
    gain,
    gain_blue,
    gain_ordinary,
    gain_red,
    idler_for_signal,
    matrix_element,
)
from .propagation import (
    CoupledSystem,
    PropagationTrace,
    StepControl,
    asymptotic_growth_rate,
    coupled_system,
    propagate_analytic,
    propagate_coupled,
)
from .scenario import Scenario, load_scenario, parse_scenario, preset_names
from .sweeps import SweepResult, paper_check, run_intensity_sweep, run_propagation, run_spectrum
from .units import CGS

__version__ = "0.1.0"
