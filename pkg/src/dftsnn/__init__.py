"""Spiking neurons built from DFT coefficients.

Each coefficient C_k = A * exp(i*phi) defines a neuron that oscillates at
k * 2*pi/N; summing the neurons (with the inverse-DFT 1/N factor) rebuilds the
signal, and the phase step between adjacent coefficients encodes impulse
delays.
"""

from .codec import ImpulsePattern, PhaseIncrement, decode_delay, encode_delay, impulse_signal, phase_increment
from .dft import (
    Signal,
    Spectrum,
    dft,
    fractional_dft,
    reconstruct,
    spectrum_derivative,
    superpose,
    time_shift_spectrum,
)
from .errors import (
    CodecError,
    ConstantSpectrum,
    DftSnnError,
    EmptyData,
    ImaginaryResidual,
    InvalidDelay,
    InvalidPhase,
    LengthMismatch,
    NoDelayInformation,
    NonIntegerDelay,
    NonLinearPhase,
    NonUniformMagnitude,
    SingularOrigin,
    UnwritablePath,
    ValidationError,
    ZeroSpectrum,
)
from .phasor import PhaseConvention, Phasor, PolarGradient, phasor_sum, polar_gradient, wrap_phase
from .snn import (
    NeuronTrace,
    SpikingNetwork,
    SpikingNeuron,
    network_from_spectrum,
    network_sum_trace,
    neuron_trace,
)
from .tables import Family, TableRow, build_table

__version__ = "0.1.0"
