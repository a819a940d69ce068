"""Command-line interface: ``qsmatch <subcommand> ...``.

Exit status is 0 on success, 2 for argument or domain errors, 3 for
numerically degenerate configurations and 1 for I/O failures.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .basin import RasterConfig, rasterize, region_path, write_csv, write_image
from .documents import (
    decomposed_document,
    format_number,
    gate_document,
    load_gate,
    matcher_document,
    trajectory_table,
    write_json,
)
from .dynamics import fixed_points
from .errors import DegenerateError, DomainError
from .extcomplex import INF, as_ext
from .gates import contraction_gate, induced_map, synthesize_unitary
from .matcher import (
    DEFAULT_MAX_ITER,
    DEFAULT_TARGET_SQ,
    MatcherSpec,
    Outcome,
    build_matcher,
    match_state,
)
from .protocol import expected_resources, run_protocol

EXIT_DOMAIN = 2
EXIT_DEGENERATE = 3


def parse_point(text: str):
    """``RE,IM`` or ``inf``."""
    if text.strip().lower() in ("inf", "infinity"):
        return INF
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected RE,IM or inf, got {text!r}")
    try:
        return as_ext(complex(float(parts[0]), float(parts[1])))
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(f"bad complex number {text!r}: {exc}")


def parse_window(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected CRE,CIM,HW, got {text!r}")
    try:
        cre, cim, hw = map(float, parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad window {text!r}: {exc}")
    return complex(cre, cim), hw


class _Out:
    def __init__(self, precision):
        self.precision = precision

    def num(self, x) -> str:
        return format_number(x, self.precision)

    def point(self, z) -> str:
        z = as_ext(z)
        if z is INF:
            return "inf"
        return f"{self.num(z.real)},{self.num(z.imag)}"


def _matcher(args):
    return build_matcher(MatcherSpec.from_overlap_sq(args.z1, args.overlap2))


def _reference_for(source):
    if source.reference is not None:
        return source.reference
    if source.gate is not None:
        return fixed_points(induced_map(source.gate)).points[0]
    return None


def cmd_construct(args, out):
    m = _matcher(args)
    print(f"z1 = {out.point(m.z1)}")
    print(f"partner = {out.point(m.partner)}")
    print(f"s_eps = {out.num(m.spec.s_eps)}")
    print(f"epsilon = {out.num(m.epsilon)}")
    for name, c in zip(("a0", "a1", "a2", "b0", "b1", "b2"), m.f.coefficients):
        print(f"{name} = {out.point(c)}")
    if m.julia.is_line:
        print(f"julia = line B={out.point(m.julia.B)} C={out.num(m.julia.C)}")
    else:
        print(f"julia_center = {out.point(m.julia.center)}")
        print(f"julia_radius = {out.num(m.julia.radius)}")
    if args.json:
        write_json(matcher_document(m), args.json)


def cmd_synth(args, out):
    m = _matcher(args)
    if args.decomposed:
        if m.epsilon >= 1:
            raise DomainError(
                f"the contraction gate needs epsilon < 1 (overlap2 > 0.5), got epsilon = {m.epsilon}"
            )
        doc = decomposed_document(m, contraction_gate(m.epsilon))
    else:
        doc = gate_document(synthesize_unitary(m.f), reference=m.z1)
    write_json(doc, args.out)
    print(f"wrote {args.out}")


def cmd_simulate(args, out):
    source = load_gate(args.gate)
    rng = np.random.default_rng(args.seed) if args.sample else None
    traj = run_protocol(source.step, args.z0, args.steps, rng)
    sys.stdout.write(
        trajectory_table(traj.zs, traj.probs, _reference_for(source), out.precision)
    )
    if traj.aborted_at is not None:
        print(f"# aborted: discard branch at step {traj.aborted_at}")


def cmd_match(args, out):
    m = _matcher(args)
    target2 = args.target2
    if not 0 < target2 < 1:
        raise DomainError(f"--target2 must lie in (0, 1), got {target2}")
    verdict = match_state(m, args.z0, math.sqrt(target2), args.max_iter)
    if verdict.outcome is Outcome.REFERENCE:
        print(f"MATCH k={verdict.iterations}")
    elif verdict.outcome is Outcome.PARTNER:
        print(f"NOMATCH k={verdict.iterations}")
    else:
        print("UNDECIDED")


def cmd_raster(args, out):
    m = _matcher(args)
    nx, ny = args.res
    kw = dict(nx=nx, ny=ny, threshold_sq=args.target2, max_iter=args.max_iter)
    if args.window is None:
        cfg = RasterConfig.default_for(m, **kw)
    else:
        center, hw = args.window
        cfg = RasterConfig(center, hw, **kw)
    grid = rasterize(m, cfg)
    write_image(grid, args.out)
    if args.csv:
        write_csv(grid, args.csv)
    total = grid.region.size
    counts = {o: int(np.sum(grid.region == o)) for o in Outcome}
    print(f"window = {out.point(cfg.center)} half_width={out.num(cfg.half_width)}")
    print(
        f"reference={counts[Outcome.REFERENCE]} partner={counts[Outcome.PARTNER]} "
        f"undecided={counts[Outcome.UNDECIDED]} total={total}"
    )
    print(f"wrote {args.out} and {region_path(args.out)}")


def cmd_resources(args, out):
    source = load_gate(args.gate)
    traj = run_protocol(source.step, args.z0, args.steps)
    print(out.num(expected_resources(traj.probs, args.steps)))


def _positive_int(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision", type=_positive_int, default=17, metavar="D",
        help="significant digits for numeric output (default 17)",
    )
    parser = argparse.ArgumentParser(
        prog="qsmatch",
        description="Quantum state matching with orthogonalizing superattractive maps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def matcher_args(p):
        p.add_argument("--z1", type=parse_point, required=True, metavar="RE,IM")
        p.add_argument("--overlap2", type=float, required=True, metavar="S2",
                       help="minimum accepted squared overlap |s_eps|^2")

    p = sub.add_parser("construct", parents=[common], help="build the matcher map")
    matcher_args(p)
    p.add_argument("--json", metavar="PATH", help="write the matcher document")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("synth", parents=[common], help="synthesize the two-qubit gate")
    matcher_args(p)
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--decomposed", action="store_true",
                   help="write contraction gate plus single-qubit gate instead")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("simulate", parents=[common], help="simulate the protocol")
    p.add_argument("--gate", required=True, metavar="PATH")
    p.add_argument("--z0", type=parse_point, required=True, metavar="RE,IM")
    p.add_argument("--steps", type=_positive_int, required=True, metavar="N")
    p.add_argument("--sample", action="store_true", help="coin-flip post-selection")
    p.add_argument("--seed", type=int, default=None, metavar="K")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("match", parents=[common], help="decide one initial state")
    matcher_args(p)
    p.add_argument("--z0", type=parse_point, required=True, metavar="RE,IM")
    p.add_argument("--target2", type=float, default=DEFAULT_TARGET_SQ, metavar="T")
    p.add_argument("--max-iter", type=_positive_int, default=DEFAULT_MAX_ITER, metavar="N")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("raster", parents=[common], help="render the basins as PGM")
    matcher_args(p)
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--res", type=_positive_int, nargs=2, default=(256, 256), metavar=("NX", "NY"))
    p.add_argument("--window", type=parse_window, default=None, metavar="CRE,CIM,HW")
    p.add_argument("--target2", type=float, default=DEFAULT_TARGET_SQ, metavar="T")
    p.add_argument("--max-iter", type=_positive_int, default=DEFAULT_MAX_ITER, metavar="N")
    p.add_argument("--csv", metavar="PATH")
    p.set_defaults(func=cmd_raster)

    p = sub.add_parser("resources", parents=[common], help="expected input-qubit count")
    p.add_argument("--gate", required=True, metavar="PATH")
    p.add_argument("--z0", type=parse_point, required=True, metavar="RE,IM")
    p.add_argument("--steps", type=_positive_int, required=True, metavar="N")
    p.set_defaults(func=cmd_resources)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args, _Out(args.precision))
    except DomainError as exc:
        print(f"qsmatch: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DegenerateError as exc:
        print(f"qsmatch: numerical degeneracy: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except KeyError as exc:
        print(f"qsmatch: error: malformed document, missing {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"qsmatch: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
