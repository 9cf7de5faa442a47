"""Spiking neurons as complex exponentials and reconstruction by summing them.

Neuron k of an N-neuron network fires ``A * exp(i*(k*omega0*t + phi))`` with
``omega0 = 2*pi/N`` and (A, phi) taken from DFT coefficient C_k. Traces are
evaluated on a grid refined by an interpolation factor F so that plots show
the continuous oscillation between the integer sample times.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dft import Spectrum
from .errors import ValidationError
from .phasor import TWO_PI, PhaseConvention, wrap_phase

DEFAULT_INTERPOLATION = 10


@dataclass(frozen=True)
class SpikingNeuron:
    index: int
    amplitude: float
    initial_phase: float
    omega0: float

    def __post_init__(self):
        if not math.isfinite(self.omega0) or self.omega0 <= 0.0:
            raise ValidationError(f"fundamental frequency must be positive, got {self.omega0!r}")
        if not 0 <= self.index < self.n:
            raise ValidationError(f"neuron index {self.index} outside [0, {self.n})")
        if not math.isfinite(self.amplitude) or self.amplitude < 0.0:
            raise ValidationError(f"amplitude must be finite and >= 0, got {self.amplitude!r}")
        if not math.isfinite(self.initial_phase):
            raise ValidationError("initial phase must be finite")

    @property
    def n(self) -> int:
        return round(TWO_PI / self.omega0)

    @property
    def angular_frequency(self) -> float:
        return self.index * self.omega0

    @property
    def frequency(self) -> float:
        """Oscillation frequency in cycles per sample (``k * f0``)."""
        return self.angular_frequency / TWO_PI

    @property
    def coefficient(self) -> complex:
        return self.amplitude * complex(math.cos(self.initial_phase), math.sin(self.initial_phase))

    def __call__(self, t):
        """Evaluate at scalar or array time ``t``."""
        return self.amplitude * np.exp(1j * (self.angular_frequency * np.asarray(t, dtype=float) + self.initial_phase))


@dataclass(frozen=True)
class SpikingNetwork:
    neurons: tuple[SpikingNeuron, ...]

    def __post_init__(self):
        neurons = tuple(self.neurons)
        if not neurons:
            raise ValidationError("a network needs at least one neuron")
        n = len(neurons)
        for k, s in enumerate(neurons):
            if s.index != k:
                raise ValidationError(f"neuron at position {k} has index {s.index}")
            if s.omega0 != TWO_PI / n:
                raise ValidationError("all neurons must share omega0 = 2*pi/N")
        object.__setattr__(self, "neurons", neurons)

    @property
    def n(self) -> int:
        return len(self.neurons)

    @property
    def omega0(self) -> float:
        return TWO_PI / self.n

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.neurons)


@dataclass(frozen=True, eq=False)
class NeuronTrace:
    """Complex samples at ``t_j = j / F`` for ``j = 0 .. N*F - 1``.

    Every ``marker_stride``-th sample falls on an integer time, i.e. on one of
    the original N samples.
    """

    times: np.ndarray
    values: np.ndarray
    marker_stride: int

    @property
    def real(self) -> np.ndarray:
        return self.values.real

    def phase(self, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> np.ndarray:
        """Wrapped phase per sample; zero-magnitude samples report 0."""
        out = np.empty(len(self.values))
        for j, z in enumerate(self.values):
            out[j] = 0.0 if abs(z) < 1e-12 else wrap_phase(math.atan2(z.imag, z.real), convention)
        return out

    @property
    def marker_times(self) -> np.ndarray:
        return self.times[:: self.marker_stride]

    @property
    def marker_values(self) -> np.ndarray:
        return self.values[:: self.marker_stride]

    def __len__(self) -> int:
        return len(self.values)


def network_from_spectrum(Y: Spectrum) -> SpikingNetwork:
    """One neuron per coefficient with ``A = |C_k|`` and ``phi = angle(C_k)``."""
    omega0 = Y.omega0
    neurons = []
    for k, c in enumerate(Y.coefficients):
        if c.magnitude == 0.0:
            neurons.append(SpikingNeuron(k, 0.0, 0.0, omega0))
        else:
            neurons.append(SpikingNeuron(k, c.magnitude, wrap_phase(c.phase), omega0))
    return SpikingNetwork(tuple(neurons))


def _time_grid(n: int, interpolation: int) -> np.ndarray:
    if int(interpolation) != interpolation or interpolation < 1:
        raise ValidationError(f"interpolation factor must be an integer >= 1, got {interpolation!r}")
    interpolation = int(interpolation)
    return np.arange(n * interpolation) / interpolation


def neuron_trace(s: SpikingNeuron, n: int, interpolation: int = DEFAULT_INTERPOLATION) -> NeuronTrace:
    times = _time_grid(n, interpolation)
    return NeuronTrace(times, s(times), int(interpolation))


def network_sum_trace(net: SpikingNetwork, interpolation: int = DEFAULT_INTERPOLATION) -> NeuronTrace:
    """Sum of all neuron traces scaled by 1/N.

    The real part at the marker positions is the reconstructed signal.
    """
    times = _time_grid(net.n, interpolation)
    total = np.zeros(len(times), dtype=complex)
    for s in net.neurons:
        total += s(times)
    return NeuronTrace(times, total / net.n, int(interpolation))
