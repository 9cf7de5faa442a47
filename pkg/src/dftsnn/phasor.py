"""Polar-form complex numbers, phase wrapping and the polar gradient helper."""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

from .errors import InvalidPhase, SingularOrigin

TWO_PI = 2.0 * math.pi

# absolute tolerances: single arithmetic step vs. chained computations
EXACT_TOL = 1e-12
CHAINED_TOL = 1e-9
ZERO_MAGNITUDE = 1e-12


class PhaseConvention(str, enum.Enum):
    """Canonical 2*pi window a phase is reduced into."""

    HALF_OPEN_PI = "pi"  # (-pi, pi]
    HALF_OPEN_2PI = "2pi"  # [0, 2*pi)

    @classmethod
    def parse(cls, value: PhaseConvention | str) -> PhaseConvention:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise InvalidPhase(f"unknown phase convention {value!r}; use 'pi' or '2pi'") from None


def wrap_phase(theta: float, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> float:
    """Reduce ``theta`` modulo 2*pi into the window selected by ``convention``.

    Values already inside the window are returned unchanged, so wrapping is
    exactly idempotent.

    >>> wrap_phase(-math.pi)
    3.141592653589793
    >>> wrap_phase(-math.pi, "2pi")
    3.141592653589793
    """
    theta = float(theta)
    if not math.isfinite(theta):
        raise InvalidPhase(f"phase must be finite, got {theta!r}")
    convention = PhaseConvention.parse(convention)
    if convention is PhaseConvention.HALF_OPEN_PI:
        if -math.pi < theta <= math.pi:
            return theta + 0.0  # -0.0 -> 0.0
        r = math.remainder(theta, TWO_PI)
        if r <= -math.pi:
            r += TWO_PI
        return r + 0.0
    if 0.0 <= theta < TWO_PI:
        return theta + 0.0
    r = math.fmod(theta, TWO_PI)
    if r < 0.0:
        r += TWO_PI
    if r >= TWO_PI:
        r = 0.0
    return r


def angular_distance(a: float, b: float) -> float:
    """Shortest distance between two angles on the circle, in [0, pi]."""
    return abs(math.remainder(a - b, TWO_PI))


@dataclass(frozen=True)
class Phasor:
    """A complex value ``magnitude * exp(i * phase)``."""

    magnitude: float
    phase: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.magnitude) or self.magnitude < 0.0:
            raise ValueError(f"phasor magnitude must be finite and >= 0, got {self.magnitude!r}")
        if not math.isfinite(self.phase):
            raise InvalidPhase(f"phasor phase must be finite, got {self.phase!r}")

    @classmethod
    def from_complex(cls, z: complex) -> Phasor:
        """Polar form of ``z`` with the phase in (-pi, pi].

        Magnitudes below ``ZERO_MAGNITUDE`` collapse to the canonical ``0∠0``.
        """
        z = complex(z)
        r = abs(z)
        if r < ZERO_MAGNITUDE:
            return cls(0.0, 0.0)
        return cls(r, wrap_phase(math.atan2(z.imag, z.real)))

    @property
    def real(self) -> float:
        return self.magnitude * math.cos(self.phase)

    @property
    def imag(self) -> float:
        return self.magnitude * math.sin(self.phase)

    def to_complex(self) -> complex:
        return cmath.rect(self.magnitude, self.phase)

    def __complex__(self) -> complex:
        return self.to_complex()

    def wrapped(self, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> Phasor:
        if self.magnitude == 0.0:
            return Phasor(0.0, 0.0)
        return Phasor(self.magnitude, wrap_phase(self.phase, convention))

    def conjugate(self) -> Phasor:
        return Phasor(self.magnitude, wrap_phase(-self.phase)) if self.magnitude else Phasor(0.0)

    def rotate(self, angle: float) -> Phasor:
        """Multiply by ``exp(i * angle)``."""
        if self.magnitude == 0.0:
            return Phasor(0.0, 0.0)
        return Phasor(self.magnitude, wrap_phase(self.phase + angle))

    def scale(self, factor: float) -> Phasor:
        """Multiply by a real factor; negative factors rotate by pi."""
        return Phasor.from_complex(self.to_complex() * factor)

    def isclose(self, other: Phasor | complex, tol: float = EXACT_TOL) -> bool:
        """Compare as complex numbers, so phases equal modulo 2*pi match."""
        return abs(self.to_complex() - complex(other)) <= tol

    def __add__(self, other: Phasor) -> Phasor:
        if not isinstance(other, Phasor):
            return NotImplemented
        return phasor_sum(self, other)

    def __str__(self) -> str:
        return f"{self.magnitude:.6g}∠{self.phase:.6g}"


def phasor_sum(a: Phasor, b: Phasor) -> Phasor:
    """Add two phasors and return the result in polar form.

    The resultant angle uses ``atan2`` on the summed rectangular parts so the
    quadrant is always right. The magnitude is ``hypot`` of the same parts,
    which equals ``sqrt(r1**2 + r2**2 + 2*r1*r2*cos(t1 - t2))`` but does not
    lose precision when the two vectors nearly cancel.
    """
    x = a.magnitude * math.cos(a.phase) + b.magnitude * math.cos(b.phase)
    y = a.magnitude * math.sin(a.phase) + b.magnitude * math.sin(b.phase)
    r = math.hypot(x, y)
    if r < ZERO_MAGNITUDE:
        return Phasor(0.0, 0.0)
    return Phasor(r, wrap_phase(math.atan2(y, x)))


def law_of_cosines_magnitude(a: Phasor, b: Phasor) -> float:
    """Resultant magnitude written out in closed polar form."""
    r1, r2 = a.magnitude, b.magnitude
    return math.sqrt(max(0.0, r1 * r1 + r2 * r2 + 2.0 * r1 * r2 * math.cos(a.phase - b.phase)))


@dataclass(frozen=True)
class PolarGradient:
    """Gradient components along the unit vectors u_r and u_theta."""

    radial_component: float
    angular_component: float

    def __post_init__(self):
        if not (math.isfinite(self.radial_component) and math.isfinite(self.angular_component)):
            raise ValueError("gradient components must be finite")


def polar_gradient(dY_dr: float, dY_dtheta: float, r: float) -> PolarGradient:
    """Gradient of a field given its partial derivatives in polar coordinates.

    The angular component is divided by ``r`` because an angular step
    ``dtheta`` covers arc length ``r * dtheta``.
    """
    if not math.isfinite(r) or r <= 0.0:
        raise SingularOrigin(f"polar gradient is undefined at r={r!r}")
    return PolarGradient(float(dY_dr), dY_dtheta / r)
