"""Command-line front end.

Every run is reproducible from its flags alone: no config files, exact
rational inputs, deterministic output bytes. Exit codes: 0 success, 1 domain
error (parallel slopes, pixel-center hits, ...), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .digitize import AngleSpec, Slopes, digitize_angle_path
from .errors import DomainError, UnsupportedFormat
from .exact import format_rational, gcd, parse_rational
from .partition import partition_unit_square
from .render import RenderOptions, render_partition, render_pixelset
from .shapes import class_index, enumerate_shapes, region_params, shape_of_spec
from .verify import sample_class_frequencies, theorem_sweep

_VALUE_FLAGS = ("--slope1", "--slope2", "--corner")


def parse_slope_pair(text: str) -> tuple[int, int]:
    """Parse "p/q" (signs of p and q both kept) or an exact decimal/integer.

    The written orientation matters: (3, -1) and (-3, 1) select opposite
    half-planes, so reduction divides by the positive gcd only.
    """
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        p, q = int(num), int(den)
    else:
        f = parse_rational(text)
        p, q = f.numerator, f.denominator
    if p == 0 and q == 0:
        raise ValueError("slope 0/0 is not a direction")
    g = gcd(p, q)
    return p // g, q // g


def parse_corner(text: str) -> tuple[Fraction, Fraction]:
    try:
        x, y = text.split(",", 1)
    except ValueError:
        raise ValueError(f"corner must be 'x,y', got {text!r}") from None
    return parse_rational(x), parse_rational(y)


def _spec(args) -> AngleSpec:
    (a, b), (c, d) = args.slope1, args.slope2
    x, y = args.corner
    return AngleSpec(a, b, c, d, (x, y))


def _slopes(args) -> Slopes:
    (a, b), (c, d) = args.slope1, args.slope2
    return Slopes(a, b, c, d)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pixelwedge",
        description="digitize rational-slope angles and study their shape classes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_, *, corner=False, window=False, seeded=False, formats=("ascii", "json"), default_format="ascii"):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--slope1", type=parse_slope_pair, required=True, metavar="a/b")
        p.add_argument("--slope2", type=parse_slope_pair, required=True, metavar="c/d")
        if corner:
            p.add_argument("--corner", type=parse_corner, required=True, metavar="x,y")
        if window:
            p.add_argument("--window", type=int, default=None, metavar="W")
        if seeded:
            p.add_argument("--samples", type=int, default=100000, metavar="N")
            p.add_argument("--seed", type=int, default=0, metavar="S")
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", default=None, metavar="PATH")
        return p

    add("digitize", "digitize the angular path at the corner", corner=True,
        window=True, formats=("json",), default_format="json")
    add("classify", "shape class of the digitized angle at the corner", corner=True)
    add("enumerate", "all shape classes of a slope pair", window=True)
    add("partition", "unit-square partition of corner positions by class",
        formats=("svg", "json"), default_format="svg")
    add("verify", "Monte Carlo uniformity check of class frequencies", seeded=True)
    add("render", "render the digitized angle at one corner", corner=True,
        window=True, formats=("ascii", "pbm", "svg", "json"))

    sweep = sub.add_parser("sweep", help="exhaustive small-slope shape-count check")
    sweep.add_argument("max_shapes", type=int, nargs="?", default=8)
    sweep.add_argument("--format", choices=("ascii", "json"), default="ascii")
    sweep.add_argument("--out", default=None, metavar="PATH")
    return parser


def _merge_flag_values(argv: list[str]) -> list[str]:
    """Join value flags with their argument so argparse never mistakes a
    leading-minus value like -3/1 for an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def _run(args) -> bytes:
    if args.command == "digitize":
        spec = _spec(args)
        extent = args.window if args.window else 8
        path = digitize_angle_path(spec, extent)
        return (json.dumps([list(v) for v in path]) + "\n").encode()

    if args.command == "classify":
        spec = _spec(args)
        j = class_index(spec)
        d = spec.count
        if args.format == "json":
            p = region_params(spec)
            payload = {
                "slopes": [spec.a, spec.b, spec.c, spec.d],
                "corner": [format_rational(spec.corner[0]), format_rational(spec.corner[1])],
                "alpha": format_rational(p.alpha),
                "beta": format_rational(p.beta),
                "alpha_ceil": p.alpha_ceil,
                "beta_ceil": p.beta_ceil,
                "index": j,
                "classes": d,
            }
            return (json.dumps(payload, sort_keys=True) + "\n").encode()
        return f"class {j} of {d}\n".encode()

    if args.command == "enumerate":
        shapes = enumerate_shapes(_slopes(args), args.window)
        if args.format == "json":
            return (
                json.dumps([s.to_json_dict() for s in shapes], sort_keys=True) + "\n"
            ).encode()
        blocks = []
        for s in shapes:
            art = render_pixelset(s.bitmap, RenderOptions(format="ascii")).decode()
            blocks.append(f"class {s.index} of {len(shapes)}:\n{art}")
        return "\n".join(blocks).encode()

    if args.command == "partition":
        cells = partition_unit_square(_slopes(args))
        return render_partition(cells, RenderOptions(format=args.format, scale=512))

    if args.command == "verify":
        hist = sample_class_frequencies(_slopes(args), args.samples, args.seed)
        if args.format == "json":
            return (json.dumps(hist.to_json_dict(), sort_keys=True) + "\n").encode()
        return (hist.table() + "\n").encode()

    if args.command == "sweep":
        report = theorem_sweep(args.max_shapes)
        if args.format == "json":
            return (json.dumps(report.to_json_dict(), sort_keys=True) + "\n").encode()
        return (report.table() + "\n").encode()

    if args.command == "render":
        shape = shape_of_spec(_spec(args), args.window)
        return render_pixelset(shape.bitmap, RenderOptions(format=args.format))

    raise AssertionError(args.command)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_merge_flag_values(argv))
    except SystemExit as exc:  # argparse reports usage errors itself
        return int(exc.code or 0)
    try:
        data = _run(args)
    except UnsupportedFormat as exc:
        print(f"pixelwedge: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ValueError) as exc:
        print(f"pixelwedge: {exc}", file=sys.stderr)
        return 1
    if args.out:
        # PIXELWEDGE_OUT_DIR supplies the default directory for relative paths
        base = os.environ.get("PIXELWEDGE_OUT_DIR", "")
        path = args.out if os.path.isabs(args.out) or not base else os.path.join(base, args.out)
        with open(path, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
