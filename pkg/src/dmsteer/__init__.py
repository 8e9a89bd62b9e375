"""Exact simulation of EPR steering and negativity in a four-node DM-coupled network."""

from .errors import (
    BadSubset,
    ConfigError,
    InvalidState,
    NonHermitian,
    NotPositive,
    UnknownPreset,
    UnsupportedPair,
    WrongDimension,
)
from .netstate import (
    BellKind,
    DmVector,
    NodePair,
    bell_state,
    channel_state,
    dm_hamiltonian,
    evolve_network,
    initial_network,
)
from .qla import DensityOperator, EigenSystem
from .sweep import SweepConfig, SweepRecord, figure_preset, run_sweep
from .witness import (
    PauliAxis,
    SteeringBreakdown,
    conditional_entropy,
    negativity,
    post_measurement_state,
    steering_parameter,
)

__version__ = "0.1.0"
