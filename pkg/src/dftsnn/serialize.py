"""JSON and CSV interchange for signals, spectra, traces and tables.

Floats are rounded to 12 significant digits and negative zero is written as
``0.0`` so repeated runs produce byte-identical text.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Optional

from .dft import Signal, Spectrum
from .errors import EmptyData, InvalidSignal, InvalidSpectrum
from .phasor import PhaseConvention, Phasor, wrap_phase
from .snn import SpikingNetwork, network_sum_trace, neuron_trace
from .tables import TableRow

SIGNIFICANT_DIGITS = 12


def num(x: float) -> float:
    """Round to 12 significant digits for output."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return float(f"{x:.{SIGNIFICANT_DIGITS}g}") + 0.0


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _rect_part(v: float, r: float) -> float:
    # cos/sin of quarter turns leave ~1e-16 * r residue
    return 0.0 if abs(v) <= 1e-15 * r else num(v)


def coefficient_record(k: int, c: Phasor, convention: PhaseConvention | str) -> dict:
    theta = 0.0 if c.magnitude == 0.0 else wrap_phase(c.phase, convention)
    return {
        "k": k,
        "r": num(c.magnitude),
        "theta": num(theta),
        "re": _rect_part(c.real, c.magnitude),
        "im": _rect_part(c.imag, c.magnitude),
    }


def signal_to_dict(x: Signal) -> dict:
    out: dict = {"n": x.n}
    if x.is_binary():
        out["pattern"] = x.to_bits()
    out["samples"] = [num(v) for v in x.samples]
    return out


def signal_from_dict(data: dict) -> Signal:
    if "samples" in data:
        samples = data["samples"]
    elif "pattern" in data:
        return Signal.from_bits(str(data["pattern"]))
    else:
        raise InvalidSignal("signal JSON needs 'samples' or 'pattern'")
    if not samples:
        raise EmptyData("signal has no samples")
    return Signal(tuple(float(v) for v in samples))


def spectrum_to_dict(Y: Spectrum, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> dict:
    return {
        "n": Y.n,
        "omega0": num(Y.omega0),
        "coefficients": [coefficient_record(k, c, convention) for k, c in enumerate(Y.coefficients)],
    }


def spectrum_from_dict(data: dict) -> Spectrum:
    """Parse the spectrum schema; rectangular parts are authoritative."""
    try:
        records = data["coefficients"]
    except (KeyError, TypeError):
        raise InvalidSpectrum("spectrum JSON needs a 'coefficients' list") from None
    if not records:
        raise EmptyData("spectrum has no coefficients")
    records = sorted(records, key=lambda rec: int(rec["k"]))
    if [int(rec["k"]) for rec in records] != list(range(len(records))):
        raise InvalidSpectrum("coefficient indices must be 0..N-1")
    if "n" in data and int(data["n"]) != len(records):
        raise InvalidSpectrum(f"n={data['n']} but {len(records)} coefficients given")
    values = []
    for rec in records:
        if "re" in rec and "im" in rec:
            values.append(complex(float(rec["re"]), float(rec["im"])))
        else:
            values.append(Phasor(float(rec["r"]), float(rec["theta"])).to_complex())
    return Spectrum.from_complex(values)


def spectrum_to_csv(Y: Spectrum, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> str:
    rows = [coefficient_record(k, c, convention) for k, c in enumerate(Y.coefficients)]
    return _csv(["k", "r", "theta", "re", "im"], ([r[c] for c in ("k", "r", "theta", "re", "im")] for r in rows))


def signal_to_csv(x: Signal) -> str:
    return _csv(["n", "x"], ([i, num(v)] for i, v in enumerate(x.samples)))


def _csv(header: list[str], rows: Iterable[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _optional(x: Optional[float]) -> Optional[float]:
    return None if x is None else num(x)


def table_to_dict(
    rows: list[TableRow], n: int, family: str, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI
) -> dict:
    return {
        "n": n,
        "omega0": num(2 * math.pi / n),
        "family": family,
        "rows": [
            {
                "pattern": row.pattern,
                "n0": row.n0,
                "coefficients": [coefficient_record(k, c, convention) for k, c in enumerate(row.coefficients)],
                "delta_phi": _optional(row.delta_phi),
            }
            for row in rows
        ],
    }


def table_to_csv(rows: list[TableRow], convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> str:
    header = ["pattern", "n0", "k", "r", "theta", "re", "im", "delta_phi"]
    out = []
    for row in rows:
        for k, c in enumerate(row.coefficients):
            rec = coefficient_record(k, c, convention)
            out.append([
                row.pattern,
                "" if row.n0 is None else row.n0,
                k, rec["r"], rec["theta"], rec["re"], rec["im"],
                "" if row.delta_phi is None else num(row.delta_phi),
            ])
    return _csv(header, out)


def traces_to_dict(
    net: SpikingNetwork, interpolation: int, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI
) -> dict:
    """Per-neuron real part and phase plus the normalized sum."""
    total = network_sum_trace(net, interpolation)
    neurons = []
    for s in net.neurons:
        tr = neuron_trace(s, net.n, interpolation)
        neurons.append({
            "k": s.index,
            "amplitude": num(s.amplitude),
            "initial_phase": num(wrap_phase(s.initial_phase, convention)) if s.amplitude else 0.0,
            "real": [num(v) for v in tr.real],
            "phase": [num(v) for v in tr.phase(convention)],
        })
    return {
        "n": net.n,
        "interp": int(interpolation),
        "times": [num(t) for t in total.times],
        "neurons": neurons,
        "sum": {
            "real": [num(v) for v in total.real],
            "imag": [num(v) for v in total.values.imag],
        },
        "signal": [num(v) for v in total.marker_values.real],
    }


def traces_to_csv(net: SpikingNetwork, interpolation: int, convention: PhaseConvention | str = PhaseConvention.HALF_OPEN_PI) -> str:
    data = traces_to_dict(net, interpolation, convention)
    header = ["t"]
    for nd in data["neurons"]:
        header += [f"s{nd['k']}_re", f"s{nd['k']}_phase"]
    header.append("sum_re")
    rows = []
    for j, t in enumerate(data["times"]):
        row = [t]
        for nd in data["neurons"]:
            row += [nd["real"][j], nd["phase"][j]]
        row.append(data["sum"]["real"][j])
        rows.append(row)
    return _csv(header, rows)
