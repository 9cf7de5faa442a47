"""Direct O(N^2) discrete Fourier transform and related spectral operations.

Sizes here are tiny (N <= 64 in practice), so every transform is the plain
double sum. Twiddle factors are looked up by ``(k * n) mod N`` and are exact at
multiples of pi/2, which keeps the N=2 and N=4 tables free of rounding noise.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ImaginaryResidual, InvalidSignal, InvalidSpectrum, LengthMismatch
from .phasor import TWO_PI, Phasor, phasor_sum

IMAGINARY_RESIDUAL_LIMIT = 1e-6

_QUARTER_TURNS = (1.0 + 0.0j, 0.0 + 1.0j, -1.0 + 0.0j, 0.0 - 1.0j)


def unit_root(m: int, n: int, sign: int = -1) -> complex:
    """``exp(sign * 2j*pi * m / n)`` with ``m`` reduced mod ``n``."""
    m %= n
    if (4 * m) % n == 0:
        q = (4 * m) // n
        return _QUARTER_TURNS[q if sign > 0 else (-q) % 4]
    angle = sign * TWO_PI * m / n
    return complex(math.cos(angle), math.sin(angle))


@dataclass(frozen=True)
class Signal:
    """Real samples x[0..N-1]."""

    samples: tuple[float, ...]

    def __post_init__(self):
        samples = tuple(float(v) for v in self.samples)
        if not samples:
            raise InvalidSignal("a signal needs at least one sample")
        if not all(math.isfinite(v) for v in samples):
            raise InvalidSignal("signal samples must be finite")
        object.__setattr__(self, "samples", samples)

    @classmethod
    def from_bits(cls, bits: str) -> Signal:
        """Parse an impulse pattern such as ``"0110"``."""
        bits = bits.strip()
        if not bits or set(bits) - {"0", "1"}:
            raise InvalidSignal(f"not a bit pattern: {bits!r}")
        return cls(tuple(float(b) for b in bits))

    @property
    def n(self) -> int:
        return len(self.samples)

    def is_binary(self) -> bool:
        return all(v in (0.0, 1.0) for v in self.samples)

    def to_bits(self) -> str:
        if not self.is_binary():
            raise InvalidSignal("signal is not a 0/1 pattern")
        return "".join("1" if v else "0" for v in self.samples)

    def shift(self, n0: int) -> Signal:
        """Circular delay: the result at n is x[(n - n0) mod N]."""
        n = self.n
        return Signal(tuple(self.samples[(i - n0) % n] for i in range(n)))

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.samples)


@dataclass(frozen=True)
class Spectrum:
    """DFT coefficients C_0..C_{N-1}; neuron k oscillates at k * omega0."""

    coefficients: tuple[Phasor, ...]

    def __post_init__(self):
        coefficients = tuple(self.coefficients)
        if not coefficients:
            raise InvalidSpectrum("a spectrum needs at least one coefficient")
        if not all(isinstance(c, Phasor) for c in coefficients):
            raise InvalidSpectrum("spectrum coefficients must be Phasor instances")
        object.__setattr__(self, "coefficients", coefficients)

    @classmethod
    def from_complex(cls, values: Iterable[complex]) -> Spectrum:
        return cls(tuple(Phasor.from_complex(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.coefficients)

    @property
    def omega0(self) -> float:
        return TWO_PI / self.n

    def to_complex(self) -> list[complex]:
        return [c.to_complex() for c in self.coefficients]

    def is_conjugate_symmetric(self, tol: float = 1e-10) -> bool:
        z = self.to_complex()
        n = self.n
        return all(abs(z[n - k] - z[k].conjugate()) <= tol for k in range(1, n))

    def isclose(self, other: Spectrum, tol: float = 1e-12) -> bool:
        if self.n != other.n:
            return False
        return all(a.isclose(b, tol) for a, b in zip(self.coefficients, other.coefficients))

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, k: int) -> Phasor:
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)


def _as_signal(x: Signal | Sequence[float] | str) -> Signal:
    if isinstance(x, Signal):
        return x
    if isinstance(x, str):
        return Signal.from_bits(x)
    return Signal(tuple(x))


def dft(x: Signal | Sequence[float] | str) -> Spectrum:
    """Forward transform ``Y[k] = sum_n x[n] exp(-2j*pi*k*n/N)``."""
    x = _as_signal(x)
    n = x.n
    coeffs = []
    for k in range(n):
        acc = 0j
        for i, v in enumerate(x.samples):
            if v:
                acc += v * unit_root(k * i, n)
        coeffs.append(Phasor.from_complex(acc))
    return Spectrum(tuple(coeffs))


def synthesize(Y: Spectrum) -> list[complex]:
    """Normalized inverse sum ``(1/N) sum_k C_k exp(2j*pi*k*n/N)`` as complex values."""
    n = Y.n
    z = Y.to_complex()
    out = []
    for i in range(n):
        acc = 0j
        for k, c in enumerate(z):
            if c:
                acc += c * unit_root(k * i, n, sign=+1)
        out.append(acc / n)
    return out


def reconstruct(Y: Spectrum) -> Signal:
    """Invert :func:`dft`; the 1/N factor restores unit-height impulses.

    Raises :class:`ImaginaryResidual` when the spectrum is not that of a real
    signal.
    """
    values = synthesize(Y)
    worst = max(abs(v.imag) for v in values)
    if worst > IMAGINARY_RESIDUAL_LIMIT:
        raise ImaginaryResidual(
            f"reconstruction has imaginary part {worst:.3g}; spectrum is not conjugate-symmetric"
        )
    return Signal(tuple(v.real + 0.0 for v in values))


def fractional_dft(x: Signal | Sequence[float] | str, k: float) -> Phasor:
    """Evaluate the DFT sum at a real-valued frequency index ``k``."""
    x = _as_signal(x)
    k = float(k)
    if not math.isfinite(k):
        raise ValueError("frequency index must be finite")
    n = x.n
    acc = 0j
    for i, v in enumerate(x.samples):
        acc += v * cmath.exp(-1j * TWO_PI * k * i / n)
    return Phasor.from_complex(acc)


def spectrum_derivative(x: Signal | Sequence[float] | str, k: float) -> Phasor:
    """Analytic d/dk of :func:`fractional_dft`.

    Each term picks up the factor ``-2j*pi*n/N``, the per-bin phase slope of
    sample ``n``.
    """
    x = _as_signal(x)
    k = float(k)
    if not math.isfinite(k):
        raise ValueError("frequency index must be finite")
    n = x.n
    acc = 0j
    for i, v in enumerate(x.samples):
        acc += v * (-1j * TWO_PI * i / n) * cmath.exp(-1j * TWO_PI * k * i / n)
    return Phasor.from_complex(acc)


def time_shift_spectrum(Y: Spectrum, n0: int) -> Spectrum:
    """Spectrum of the signal circularly delayed by ``n0`` samples."""
    n = Y.n
    n0 = int(n0)
    out = []
    for k, c in enumerate(Y.coefficients):
        out.append(Phasor.from_complex(c.to_complex() * unit_root(k * n0, n)))
    return Spectrum(tuple(out))


def superpose(spectra: Sequence[Spectrum]) -> Spectrum:
    """Coefficient-wise phasor sum of spectra that share one length."""
    spectra = list(spectra)
    if not spectra:
        raise InvalidSpectrum("nothing to superpose")
    n = spectra[0].n
    for s in spectra[1:]:
        if s.n != n:
            raise LengthMismatch(f"cannot superpose spectra of lengths {n} and {s.n}")
    coeffs = list(spectra[0].coefficients)
    for s in spectra[1:]:
        coeffs = [phasor_sum(a, b) for a, b in zip(coeffs, s.coefficients)]
    return Spectrum(tuple(coeffs))
