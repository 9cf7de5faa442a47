"""Command-line interface.

Examples::

    dftsnn pattern --n 4 --delays 1
    dftsnn spectrum 0100 --phase-range pi
    dftsnn table --n 4 --family single --format csv
    dftsnn reconstruct 1101 --interp 10
    dftsnn decode --n 64 --delays 17
    dftsnn plot 0100 --style polar --out polar.svg

Exit status is 0 on success, 2 for invalid input and 3 when a spectrum cannot
be decoded into a delay.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import serialize
from .codec import ImpulsePattern, decode_delay, impulse_signal, phase_increment
from .dft import Signal, Spectrum, dft, reconstruct
from .errors import CodecError, InvalidSignal, UnwritablePath, ValidationError
from .phasor import PhaseConvention
from .plot import PlotSpec, PlotStyle, render, write_svg
from .snn import DEFAULT_INTERPOLATION, network_from_spectrum
from .tables import Family, build_table

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_CODEC = 3


def _delays(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"delays must be comma-separated integers, got {text!r}") from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("signal", nargs="?", help="bit pattern such as 0100, or comma-separated real samples")
    p.add_argument("--n", type=_positive_int, help="signal length N")
    p.add_argument("--delays", type=_delays, default=None, help="impulse positions, e.g. 0,3")
    p.add_argument("--input", metavar="PATH", help="signal or spectrum JSON file ('-' for stdin)")
    p.add_argument("--phase-range", choices=["pi", "2pi"], default=None,
                   help="phase window: pi = (-pi, pi], 2pi = [0, 2pi)")
    p.add_argument("--interp", type=_positive_int, default=DEFAULT_INTERPOLATION, help="trace interpolation factor")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dftsnn", description="DFT spiking-neuron phase encoding, reconstruction and plots."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    sub.add_parser("pattern", parents=[common], help="materialize an impulse pattern")
    sub.add_parser("spectrum", parents=[common], help="DFT coefficients of a signal")
    sub.add_parser("reconstruct", parents=[common], help="neuron traces and their sum")
    sub.add_parser("decode", parents=[common], help="recover an impulse delay from its phase increment")
    table = sub.add_parser("table", parents=[common], help="encoding table for all patterns of a family")
    table.add_argument("--family", choices=[f.value for f in Family], default=Family.ALL.value)
    plot = sub.add_parser("plot", parents=[common], help="SVG stem, polar or trace-grid plot")
    plot.add_argument("--style", choices=[s.value for s in PlotStyle], required=True)
    plot.add_argument("--limit", type=float, default=None,
                      help="y-limit for stem plots or radial limit for polar plots")
    return parser


def _parse_signal_text(text: str) -> Signal:
    text = text.strip()
    if text and set(text) <= {"0", "1"}:
        return Signal.from_bits(text)
    try:
        return Signal(tuple(float(v) for v in text.split(",")))
    except ValueError:
        raise InvalidSignal(f"cannot parse signal {text!r}") from None


def _read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc


def load_source(args) -> tuple[Optional[Signal], Spectrum]:
    """Resolve the command's data from --input, a positional signal, or --n/--delays."""
    if args.input:
        data = _read_json(args.input)
        if not isinstance(data, dict):
            raise ValidationError("input JSON must be an object")
        if "coefficients" in data:
            return None, serialize.spectrum_from_dict(data)
        x = serialize.signal_from_dict(data)
        return x, dft(x)
    if args.signal:
        x = _parse_signal_text(args.signal)
        return x, dft(x)
    if args.n is not None:
        x = impulse_signal(ImpulsePattern.of(args.n, args.delays or []))
        return x, dft(x)
    raise ValidationError("no input: give a signal, --n/--delays, or --input")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UnwritablePath(f"cannot write {out}: {exc.strerror or exc}") from exc


def _convention(args, default: PhaseConvention = PhaseConvention.HALF_OPEN_PI) -> PhaseConvention:
    return PhaseConvention.parse(args.phase_range) if args.phase_range else default


def cmd_pattern(args) -> str:
    if args.n is None:
        raise ValidationError("pattern needs --n")
    x = impulse_signal(ImpulsePattern.of(args.n, args.delays or []))
    if args.format == "csv":
        return serialize.signal_to_csv(x)
    return serialize.dumps(serialize.signal_to_dict(x))


def cmd_spectrum(args) -> str:
    _, Y = load_source(args)
    conv = _convention(args)
    if args.format == "csv":
        return serialize.spectrum_to_csv(Y, conv)
    return serialize.dumps(serialize.spectrum_to_dict(Y, conv))


def cmd_reconstruct(args) -> str:
    _, Y = load_source(args)
    reconstruct(Y)  # rejects spectra that do not come from a real signal
    net = network_from_spectrum(Y)
    conv = _convention(args)
    if args.format == "csv":
        return serialize.traces_to_csv(net, args.interp, conv)
    return serialize.dumps(serialize.traces_to_dict(net, args.interp, conv))


def cmd_table(args) -> str:
    n = args.n if args.n is not None else 4
    rows = build_table(n, args.family)
    conv = _convention(args)
    if args.format == "csv":
        return serialize.table_to_csv(rows, conv)
    return serialize.dumps(serialize.table_to_dict(rows, n, args.family, conv))


def cmd_decode(args) -> str:
    _, Y = load_source(args)
    delta = phase_increment(Y).delta_phi
    n0 = decode_delay(Y)
    if args.format == "csv":
        return f"n,n0,delta_phi\n{Y.n},{n0},{serialize.num(delta)}\n"
    return serialize.dumps({"n": Y.n, "n0": n0, "delta_phi": serialize.num(delta)})


def cmd_plot(args) -> None:
    x, Y = load_source(args)
    spec = PlotSpec(
        style=PlotStyle(args.style),
        phase_convention=PhaseConvention.parse(args.phase_range) if args.phase_range else None,
        interpolation=args.interp,
        output_path=args.out,
        limit=args.limit,
    )
    svg = render(spec, Y, x)
    if args.out:
        write_svg(args.out, svg)
    else:
        sys.stdout.write(svg)


COMMANDS = {
    "pattern": cmd_pattern,
    "spectrum": cmd_spectrum,
    "reconstruct": cmd_reconstruct,
    "table": cmd_table,
    "decode": cmd_decode,
}


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "plot":
            cmd_plot(args)
        else:
            _emit(COMMANDS[args.command](args), args.out)
    except CodecError as exc:
        print(f"dftsnn {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CODEC
    except ValidationError as exc:
        print(f"dftsnn {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ValueError, KeyError, TypeError) as exc:
        # malformed input documents
        print(f"dftsnn {args.command}: invalid input: {exc!r}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
