"""Phase encoding of impulse delays.

A unit impulse delayed by n0 samples has coefficients ``exp(-2j*pi*k*n0/N)``:
unit magnitude and a phase that advances by the same step between adjacent
bins. Decoding reads that step back and scales it to a delay.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable

from .dft import Signal, Spectrum
from .errors import (
    ConstantSpectrum,
    InvalidDelay,
    NonIntegerDelay,
    NonLinearPhase,
    NonUniformMagnitude,
    ZeroSpectrum,
)
from .phasor import CHAINED_TOL, TWO_PI, ZERO_MAGNITUDE, Phasor, angular_distance, wrap_phase

DELAY_RESIDUAL_LIMIT = 1e-6


@dataclass(frozen=True)
class ImpulsePattern:
    """Positions of unit impulses in a length-N window."""

    n: int
    delays: frozenset[int] = frozenset()

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise InvalidDelay(f"pattern length must be a positive integer, got {self.n!r}")
        delays = list(self.delays)
        if len(set(delays)) != len(delays):
            raise InvalidDelay("duplicate impulse delays")
        for d in delays:
            if int(d) != d or not 0 <= d < self.n:
                raise InvalidDelay(f"delay {d!r} outside [0, {self.n})")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "delays", frozenset(int(d) for d in delays))

    @classmethod
    def of(cls, n: int, delays: Iterable[int] = ()) -> ImpulsePattern:
        delays = list(delays)
        if len(set(delays)) != len(delays):
            raise InvalidDelay("duplicate impulse delays")
        return cls(n, frozenset(delays))

    @classmethod
    def from_bits(cls, bits: str) -> ImpulsePattern:
        return cls.from_signal(Signal.from_bits(bits))

    @classmethod
    def from_signal(cls, x: Signal) -> ImpulsePattern:
        if not x.is_binary():
            raise InvalidDelay(f"signal {x.samples!r} is not an impulse pattern")
        return cls(x.n, frozenset(i for i, v in enumerate(x.samples) if v == 1.0))

    @property
    def bits(self) -> str:
        return "".join("1" if i in self.delays else "0" for i in range(self.n))

    def __str__(self) -> str:
        return self.bits


@dataclass(frozen=True)
class PhaseIncrement:
    """Common phase step between adjacent coefficients, wrapped to (-pi, pi]."""

    delta_phi: float

    def __post_init__(self):
        if not math.isfinite(self.delta_phi):
            raise ValueError("phase increment must be finite")
        object.__setattr__(self, "delta_phi", wrap_phase(self.delta_phi))

    def __float__(self) -> float:
        return self.delta_phi


def impulse_signal(p: ImpulsePattern) -> Signal:
    return Signal(tuple(1.0 if i in p.delays else 0.0 for i in range(p.n)))


def encode_delay(n: int, n0: int) -> Spectrum:
    """Coefficients ``1∠(-2*pi*k*n0/N)`` of a unit impulse delayed by ``n0``."""
    if int(n) != n or n < 1:
        raise InvalidDelay(f"N must be a positive integer, got {n!r}")
    if int(n0) != n0 or not 0 <= n0 < n:
        raise InvalidDelay(f"delay {n0!r} outside [0, {n})")
    n, n0 = int(n), int(n0)
    return Spectrum(tuple(Phasor(1.0, wrap_phase(-TWO_PI * ((k * n0) % n) / n)) for k in range(n)))


def phase_increment(Y: Spectrum) -> PhaseIncrement:
    """Phase step shared by all adjacent coefficient pairs.

    Each step is ``Im(log(C[k+1] / C[k]))``. The returned value is the angle of
    the mean unit ratio, and every individual step must lie within 1e-9 of it.
    """
    mags = [c.magnitude for c in Y.coefficients]
    if max(mags) < ZERO_MAGNITUDE:
        raise ZeroSpectrum("every coefficient is zero (all-zero pattern)")
    if Y.n > 1 and mags[0] >= ZERO_MAGNITUDE and max(mags[1:]) < ZERO_MAGNITUDE:
        raise ConstantSpectrum("only the DC coefficient is nonzero (constant pattern)")
    ref = mags[0]
    if any(abs(m - ref) > CHAINED_TOL for m in mags):
        raise NonUniformMagnitude(
            "coefficient magnitudes differ: " + ", ".join(f"{m:.6g}" for m in mags)
        )
    if Y.n == 1:
        return PhaseIncrement(0.0)
    z = Y.to_complex()
    steps = [cmath.log(z[k + 1] / z[k]).imag for k in range(Y.n - 1)]
    mean = sum(cmath.exp(1j * s) for s in steps)
    delta = math.atan2(mean.imag, mean.real)
    worst = max(angular_distance(s, delta) for s in steps)
    if worst > CHAINED_TOL:
        raise NonLinearPhase(f"adjacent phase steps disagree by up to {worst:.3g} rad")
    return PhaseIncrement(delta)


def decode_delay(Y: Spectrum) -> int:
    """Recover n0 in [0, N) from a delayed-impulse spectrum."""
    delta = phase_increment(Y).delta_phi
    n = Y.n
    raw = -delta * n / TWO_PI
    nearest = round(raw)
    if abs(raw - nearest) > DELAY_RESIDUAL_LIMIT:
        raise NonIntegerDelay(f"phase step {delta:.6g} gives non-integer delay {raw:.6g}")
    return nearest % n
