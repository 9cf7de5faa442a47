import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from dftsnn.dft import (
    Signal,
    Spectrum,
    dft,
    fractional_dft,
    reconstruct,
    spectrum_derivative,
    superpose,
    time_shift_spectrum,
    unit_root,
)
from dftsnn.errors import ImaginaryResidual, InvalidSignal, LengthMismatch
from dftsnn.phasor import Phasor

from oracles import all_patterns, bits, central_difference, naive_dft

PI = math.pi


def as_array(Y: Spectrum) -> np.ndarray:
    return np.array(Y.to_complex())


def test_signal_validation():
    with pytest.raises(InvalidSignal):
        Signal(())
    with pytest.raises(InvalidSignal):
        Signal((1.0, math.inf))
    with pytest.raises(InvalidSignal):
        Signal.from_bits("0120")
    assert Signal.from_bits("0110").samples == (0.0, 1.0, 1.0, 0.0)
    assert Signal.from_bits("0110").to_bits() == "0110"


def test_spectrum_fundamental():
    Y = dft("0100")
    assert Y.n == 4
    assert Y.omega0 == 2 * PI / 4


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 8, 12])
def test_unit_root_matches_exp(n):
    for m in range(-2 * n, 2 * n):
        for sign in (-1, 1):
            expected = complex(math.cos(sign * 2 * PI * m / n), math.sin(sign * 2 * PI * m / n))
            assert abs(unit_root(m, n, sign) - expected) < 1e-14


def test_dft_unit_impulse_at_origin():
    Y = dft("1000")
    for c in Y:
        assert c == Phasor(1.0, 0.0)


def test_dft_delayed_impulse():
    Y = dft("0100")
    expected = [Phasor(1, 0), Phasor(1, -PI / 2), Phasor(1, -PI), Phasor(1, -3 * PI / 2)]
    for got, want in zip(Y, expected):
        assert got.isclose(want, 1e-12)
    assert [c.phase for c in Y] == pytest.approx([0.0, -PI / 2, PI, PI / 2], abs=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 7])
def test_dft_zero_signal(n):
    assert all(c == Phasor(0.0, 0.0) for c in dft([0.0] * n))


def test_dft_matches_naive_oracle():
    rng = np.random.default_rng(7)
    for _ in range(50):
        x = rng.normal(size=8)
        assert np.max(np.abs(as_array(dft(x)) - naive_dft(x))) < 1e-10


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 16, 64])
def test_dft_matches_numpy_fft(n):
    x = np.random.default_rng(n).normal(size=n)
    assert np.allclose(as_array(dft(x)), np.fft.fft(x), atol=1e-10)


def test_all_ones_spectrum():
    Y = dft("1111")
    assert Y[0] == Phasor(4.0, 0.0)
    assert all(c == Phasor(0.0, 0.0) for c in Y.coefficients[1:])


@pytest.mark.parametrize("n", [2, 3, 4, 8, 16, 64])
def test_conjugate_symmetry(n):
    rng = np.random.default_rng(100 + n)
    for _ in range(20):
        assert dft(rng.normal(size=n)).is_conjugate_symmetric(1e-10)


def test_reconstruct_examples():
    x = reconstruct(dft("0100"))
    assert np.max(np.abs(np.array(x.samples) - bits("0100"))) < 1e-9
    ones = Spectrum(tuple(Phasor(1.0, 0.0) for _ in range(4)))
    assert reconstruct(ones).samples == pytest.approx(bits("1000"), abs=1e-12)
    assert reconstruct(Spectrum.from_complex([0j] * 5)).samples == (0.0,) * 5


def test_reconstruct_rejects_non_hermitian():
    Y = Spectrum((Phasor(1, 0), Phasor(1, 0.3), Phasor(1, 0), Phasor(1, 0)))
    with pytest.raises(ImaginaryResidual):
        reconstruct(Y)


@pytest.mark.parametrize("n", [2, 4])
def test_roundtrip_binary_patterns(n):
    for p in all_patterns(n):
        x = reconstruct(dft(p))
        assert np.max(np.abs(np.array(x.samples) - bits(p))) < 1e-9


@pytest.mark.parametrize("n", [2, 3, 4, 8, 16, 64])
def test_roundtrip_random(n):
    rng = np.random.default_rng(n)
    for _ in range(200):
        x = rng.normal(size=n)
        assert np.max(np.abs(np.array(reconstruct(dft(x)).samples) - x)) < 1e-9


def test_fractional_dft_integer_consistency():
    assert fractional_dft("0100", 1.0).isclose(Phasor(1, -PI / 2), 1e-12)
    rng = np.random.default_rng(3)
    x = rng.normal(size=8)
    Y = dft(x)
    for k in range(8):
        assert fractional_dft(x, k).isclose(Y[k], 1e-12)


def test_fractional_dft_zero_and_half_bin():
    assert fractional_dft([0.0] * 4, 0.37) == Phasor(0.0, 0.0)
    got = fractional_dft("0010", 0.5)
    assert abs(got.to_complex() - naive_dft(bits("0010"), 0.5)) < 1e-12


@pytest.mark.parametrize("n0", range(6))
def test_derivative_of_delayed_impulse(n0):
    n = 6
    x = [1.0 if i == n0 else 0.0 for i in range(n)]
    for k in np.linspace(-2.0, 7.0, 19):
        ratio = spectrum_derivative(x, k).to_complex() / fractional_dft(x, k).to_complex()
        assert abs(ratio - (-2j * PI * n0 / n)) < 1e-12


def test_derivative_vanishes_for_impulse_at_origin():
    for k in (0.0, 0.5, 1.0, 2.75):
        assert spectrum_derivative("1000", k) == Phasor(0.0, 0.0)


def test_derivative_matches_finite_difference():
    rng = np.random.default_rng(11)
    for _ in range(20):
        x = rng.normal(size=8)
        k = float(rng.uniform(0, 8))
        fd = central_difference(lambda kk: naive_dft(x, kk), k)
        assert abs(spectrum_derivative(x, k).to_complex() - fd) < 1e-6
    x = rng.normal(size=8)
    fd = central_difference(lambda kk: fractional_dft(x, kk).to_complex(), 2.0)
    assert abs(spectrum_derivative(x, 2.0).to_complex() - fd) < 1e-6


def test_time_shift_examples():
    assert time_shift_spectrum(dft("1000"), 1).isclose(dft("0100"), 1e-12)
    rng = np.random.default_rng(5)
    Y = dft(rng.normal(size=7))
    assert time_shift_spectrum(Y, 0).isclose(Y, 1e-12)
    assert time_shift_spectrum(Y, 7).isclose(Y, 1e-12)
    assert time_shift_spectrum(Y, -3).isclose(time_shift_spectrum(Y, 4), 1e-12)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 16])
def test_shift_theorem(n):
    x = Signal(tuple(np.random.default_rng(n).normal(size=n)))
    Y = dft(x)
    for n0 in range(n):
        assert time_shift_spectrum(Y, n0).isclose(dft(x.shift(n0)), 1e-10)


@settings(max_examples=50)
@given(
    n=st.integers(1, 16),
    a=st.floats(-10, 10),
    b=st.floats(-10, 10),
    seed=st.integers(0, 2**32 - 1),
)
def test_linearity(n, a, b, seed):
    rng = np.random.default_rng(seed)
    x, y = rng.normal(size=n), rng.normal(size=n)
    lhs = as_array(dft(a * x + b * y))
    rhs = a * as_array(dft(x)) + b * as_array(dft(y))
    assert np.max(np.abs(lhs - rhs)) < 1e-10 * max(1.0, abs(a), abs(b))


def test_superpose_examples():
    assert superpose([dft("1000"), dft("0100")]).isclose(dft("1100"), 1e-12)
    Y = dft([0.3, -1.2, 2.0])
    assert superpose([Y, Spectrum.from_complex([0j] * 3)]).isclose(Y, 1e-12)
    total = superpose([dft(p) for p in ("1000", "0100", "0010", "0001")])
    assert total.coefficients == (Phasor(4.0, 0.0),) + (Phasor(0.0, 0.0),) * 3
    assert total.isclose(dft("1111"), 1e-12)


def test_superpose_length_mismatch():
    with pytest.raises(LengthMismatch):
        superpose([dft("10"), dft("100")])
