"""Encoding tables: per-pattern coefficients and phase increments.

Rows are grouped by impulse count, then by rotation class. Within a class the
first row is the rotation with its ones leading (``"1100"``) and ``n0`` counts
the circular delay from it, so the single-impulse family lists ``1000, 0100,
0010, 0001`` with ``n0 = 0..3`` and the two-impulse family starts
``1100, 0110, 0011, 1001``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Optional

from .codec import ImpulsePattern, encode_delay, impulse_signal, phase_increment
from .dft import Spectrum, dft
from .errors import CodecError, ValidationError
from .phasor import Phasor

MAX_TABLE_N = 64
MAX_ENUMERATED_N = 16


class Family(str, enum.Enum):
    SINGLE = "single"
    DOUBLE = "double"
    TRIPLE = "triple"
    ALL = "all"

    @property
    def weight(self) -> Optional[int]:
        return {"single": 1, "double": 2, "triple": 3}.get(self.value)


@dataclass(frozen=True)
class TableRow:
    pattern: str
    n0: Optional[int]
    coefficients: tuple[Phasor, ...]
    delta_phi: Optional[float]

    def __post_init__(self):
        if len(self.coefficients) != len(self.pattern):
            raise ValidationError("coefficient count must equal pattern length")

    @property
    def spectrum(self) -> Spectrum:
        return Spectrum(self.coefficients)


def _rotate(bits: str, shift: int) -> str:
    """Circular delay by ``shift`` samples."""
    shift %= len(bits)
    return bits[-shift:] + bits[:-shift] if shift else bits


def rotation_base(bits: str) -> tuple[str, int]:
    """Leading-ones rotation of ``bits`` and the smallest delay that reaches ``bits`` from it."""
    base = max(_rotate(bits, s) for s in range(len(bits)))
    for shift in range(len(bits)):
        if _rotate(base, shift) == bits:
            return base, shift
    raise AssertionError("unreachable")


def patterns(n: int, weight: int) -> list[str]:
    """All length-n patterns with ``weight`` ones, in table order."""
    seen = set()
    bases = []
    for delays in itertools.combinations(range(n), weight):
        bits = ImpulsePattern.of(n, delays).bits
        base, _ = rotation_base(bits)
        if base not in seen:
            seen.add(base)
            bases.append(base)
    bases.sort(reverse=True)
    out: list[str] = []
    listed = set()
    for base in bases:
        for shift in range(n):
            bits = _rotate(base, shift)
            if bits in listed:
                break
            listed.add(bits)
            out.append(bits)
    return out


def table_row(bits: str) -> TableRow:
    p = ImpulsePattern.from_bits(bits)
    _, n0 = rotation_base(p.bits)
    if len(p.delays) == 1:
        (delay,) = p.delays
        spectrum = encode_delay(p.n, delay)
    else:
        spectrum = dft(impulse_signal(p))
    try:
        delta = phase_increment(spectrum).delta_phi
    except CodecError:
        delta = None
    return TableRow(p.bits, n0, spectrum.coefficients, delta)


def build_table(n: int, family: Family | str = Family.ALL) -> list[TableRow]:
    family = Family(family)
    if int(n) != n or not 1 <= n <= MAX_TABLE_N:
        raise ValidationError(f"table size must be in [1, {MAX_TABLE_N}], got {n!r}")
    n = int(n)
    if family is Family.ALL:
        if n > MAX_ENUMERATED_N:
            raise ValidationError(f"family 'all' enumerates 2**N patterns; N must be <= {MAX_ENUMERATED_N}")
        weights = range(n + 1)
    else:
        if family.weight > n:
            return []
        weights = [family.weight]
    return [table_row(bits) for w in weights for bits in patterns(n, w)]
