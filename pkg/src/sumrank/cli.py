"""Command-line front end: tables, bound curves, verification, encoding.

Exit codes: 0 success, 1 usage error, 2 infeasible (enumeration cap), 3
verification failure.

Code descriptors (tokens separated by ':'; fields in tower notation p^s...):

    rs:<field>:<n>:<k>          Reed-Solomon evaluation code
    gab:<field>:<n>:<deg>       Gabidulin code of n x n matrices
    sumzero:<field>:<m>:<t>     blocks summing to zero
    concat:<outer>:<inner>      concatenation (outer then inner, inline)
    explicit:<q>:<n>:<m>:<d>:<d1>   RS outer over Gabidulin inner
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bnd
from .codes import (
    HammingLinearCode,
    SumRankLinearCode,
    concatenate,
    explicit_family,
    gabidulin,
    reed_solomon,
    sum_zero_code,
)
from .errors import SumrankError, TooLarge
from .fields import elem_from_str, parse_field
from .metrics import DEFAULT_CAP_BITS, min_distance_exhaustive
from .tables import build_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_VERIFY_FAIL = 3

_DEFAULT_GRID = "0.005:0.6:0.005"

# Figure presets: one entry per figure, each a list of (label, bound_id,
# params).  Concat lines are given by preset kind plus (p, m, t); the derived
# r values are shown by --explain.
FIGURE_PRESETS: dict[int, list[tuple[str, str, dict]]] = {
    1: [
        ("gv_like_q2_m2", "gv_asymptotic", dict(q=2, m=2)),
        ("concat_d2_p2_r4", "concat_line", dict(kind="d2", p=2, m=2, t=3)),
    ],
    2: [
        ("tvz_like_p9_m2", "tvz_like_sr", dict(p=9, m=2)),
        ("concat_d2_p9_r6", "concat_line", dict(kind="d2", p=9, m=2, t=4)),
    ],
    3: [
        ("gv_like_q3_m2", "gv_asymptotic", dict(q=3, m=2)),
        ("concat_lrs_half_p3_t1", "concat_line", dict(kind="lrs_half", p=3, m=2, t=1)),
        ("concat_lrs_half_p3_t2", "concat_line", dict(kind="lrs_half", p=3, m=2, t=2)),
    ],
    4: [
        ("concat_d2_p4_r4", "concat_line", dict(kind="d2", p=4, m=2, t=3)),
    ],
    5: [
        ("tvz_like_p16_m4", "tvz_like_sr", dict(p=16, m=4)),
        ("concat_lrs_half_p16_t8", "concat_line", dict(kind="lrs_half", p=16, m=4, t=8)),
    ],
    6: [
        ("gv_like_q49_m2", "gv_asymptotic", dict(q=49, m=2)),
        ("tvz_like_p49_m2", "tvz_like_sr", dict(p=49, m=2)),
        ("concat_lrs_max_p49_t1", "concat_line", dict(kind="lrs_max", p=49, m=2, t=1)),
        ("concat_lrs_max_p49_t2", "concat_line", dict(kind="lrs_max", p=49, m=2, t=2)),
    ],
    7: [
        ("gv_like_q7_m2", "gv_asymptotic", dict(q=7, m=2)),
        ("concat_lrs_max_p7_t2", "concat_line", dict(kind="lrs_max", p=7, m=2, t=2)),
    ],
    8: [
        ("tvz_like_p25_m2", "tvz_like_sr", dict(p=25, m=2)),
        ("concat_lrs_max_p25_t4", "concat_line", dict(kind="lrs_max", p=25, m=2, t=4)),
    ],
}


# -- descriptor parsing -----------------------------------------------------


def parse_code_descriptor(descriptor: str):
    """Build a code object from a descriptor string."""
    tokens = descriptor.split(":")
    code = _parse_tokens(tokens)
    if tokens:
        raise ValueError(f"trailing tokens in descriptor: {':'.join(tokens)}")
    return code


def _parse_tokens(tokens: list[str]):
    if not tokens:
        raise ValueError("empty code descriptor")
    head = tokens.pop(0)
    if head == "rs":
        ctx, n, k = parse_field(tokens.pop(0)), int(tokens.pop(0)), int(tokens.pop(0))
        return reed_solomon(ctx, n, k)
    if head == "gab":
        ctx, n, deg = parse_field(tokens.pop(0)), int(tokens.pop(0)), int(tokens.pop(0))
        return gabidulin(ctx, n, deg)
    if head == "sumzero":
        ctx, m, t = parse_field(tokens.pop(0)), int(tokens.pop(0)), int(tokens.pop(0))
        return sum_zero_code(ctx, m, t)
    if head == "concat":
        outer = _parse_tokens(tokens)
        inner = _parse_tokens(tokens)
        return concatenate(outer, inner)
    if head == "explicit":
        q, n, m, d, d1 = (int(tokens.pop(0)) for _ in range(5))
        return explicit_family(q, n, m, d, d1)
    raise ValueError(f"unknown code kind {head!r}")


def _parse_grid(spec: str) -> list[float]:
    try:
        start, stop, step = (float(x) for x in spec.split(":"))
    except ValueError:
        raise ValueError(f"bad grid spec {spec!r}, expected start:stop:step") from None
    out = []
    i = 0
    while True:
        v = start + i * step
        if v > stop + 1e-12:
            break
        out.append(round(v, 12))
        i += 1
    return out


# -- subcommands ------------------------------------------------------------


def cmd_table(args) -> int:
    rows = build_table(args.which)
    if args.format == "csv":
        print("d_sr,dimension,comparison_published,singleton")
        for r in rows:
            comp = "" if r.comparison_dim is None else r.comparison_dim
            print(f"{r.d_sr},{r.our_dim},{comp},{r.singleton_dim}")
    else:
        print(f"Sum-rank codes, table {args.which} "
              f"(2x2 blocks; comparison column is a published value)")
        print(f"{'d_sr':>4}  {'dimension':>9}  {'published':>9}  {'singleton':>9}")
        for r in rows:
            comp = "none" if r.comparison_dim is None else str(r.comparison_dim)
            mark = "*" if r.comparison_dim is not None and r.our_dim > r.comparison_dim else ""
            print(f"{r.d_sr:>4}  {r.our_dim:>9}  {comp:>9}  {r.singleton_dim:>9} {mark}")
    return EXIT_OK


def _curves_for_args(args) -> list[tuple[str, bnd.BoundCurve]]:
    grid = _parse_grid(args.grid)
    if args.figure is not None:
        if args.figure not in FIGURE_PRESETS:
            raise ValueError(f"no preset for figure {args.figure}")
        specs = FIGURE_PRESETS[args.figure]
    else:
        if args.bound is None:
            raise ValueError("need --figure N or --bound ID")
        params = {}
        for kv in args.param:
            key, _, val = kv.partition("=")
            params[key] = val if key == "kind" else int(val)
        specs = [(args.bound, args.bound, params)]
    return [(label, bnd.sample_curve(bid, params, grid)) for label, bid, params in specs]


def _explain_figure(n: int):
    print(f"figure {n} presets:")
    for label, bid, params in FIGURE_PRESETS[n]:
        extra = ""
        if bid == "concat_line" and "kind" in params:
            a, b, c = bnd.concat_presets(params["kind"], params["p"], params["m"], params["t"])
            extra = f"  line: ({a})*R + ({b})*delta >= {c}"
        print(f"  {label}: {bid} {params}{extra}")


def cmd_bounds(args) -> int:
    if args.explain:
        if args.figure is None:
            raise ValueError("--explain requires --figure N")
        _explain_figure(args.figure)
        return EXIT_OK
    curves = _curves_for_args(args)
    lines = ["delta,rate,bound_id"]
    for label, curve in curves:
        for delta, rate in curve.clamped().samples:
            lines.append(f"{delta:.12g},{rate:.12g},{label}")
    csv_text = "\n".join(lines) + "\n"
    if args.output_dir:
        from .plotting import render_curves

        outdir = Path(args.output_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        stem = f"figure{args.figure}" if args.figure is not None else args.bound
        (outdir / f"{stem}.csv").write_text(csv_text)
        render_curves(curves, outdir / f"{stem}.png", title=stem)
        print(f"wrote {outdir / (stem + '.csv')} and {outdir / (stem + '.png')}")
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def cmd_verify(args) -> int:
    code = parse_code_descriptor(args.descriptor)
    designed = code.d_design
    try:
        exact = min_distance_exhaustive(code, cap_bits=args.cap_bits, threads=args.threads)
    except TooLarge as exc:
        print(f"INFEASIBLE: {exc}")
        return EXIT_INFEASIBLE
    ok = designed is None or exact >= designed
    print(f"descriptor: {args.descriptor}")
    print(f"dimension:  {code.k}")
    print(f"designed:   {designed if designed is not None else 'n/a'}")
    print(f"exact:      {exact}")
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_encode(args) -> int:
    code = parse_code_descriptor(args.descriptor)
    ctx = code.base if isinstance(code, SumRankLinearCode) else code.ctx
    message = [
        elem_from_str(ctx, tok.strip().replace(":", ","))
        for tok in args.message.split(",")
    ]
    cw = code.encode(message)
    if isinstance(code, HammingLinearCode):
        from .matspace import Mat

        print(Mat.from_elems(ctx, [cw]).to_text())
    else:
        print("|".join(b.to_text() for b in cw.blocks))
    return EXIT_OK


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sumrank", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    pt = sub.add_parser("table", help="reproduce a parameter table")
    pt.add_argument("which", type=int, choices=(1, 2))
    pt.add_argument("--format", choices=("text", "csv"), default="text")
    pt.set_defaults(func=cmd_table)

    pb = sub.add_parser("bounds", help="sample bound curves as CSV")
    pb.add_argument("--figure", type=int, default=None,
                    help="preset parameter set for a figure")
    pb.add_argument("--explain", action="store_true",
                    help="describe the chosen figure preset and exit")
    pb.add_argument("--bound", default=None,
                    help="bound id: " + ", ".join(bnd.BOUND_IDS))
    pb.add_argument("--param", action="append", default=[],
                    help="bound parameter, e.g. --param q=2 (repeatable)")
    pb.add_argument("--grid", default=_DEFAULT_GRID, help="delta grid start:stop:step")
    pb.add_argument("--output-dir", default=None,
                    help="write CSV plus a rendered PNG here instead of stdout")
    pb.set_defaults(func=cmd_bounds)

    pv = sub.add_parser("verify", help="exhaustively verify a code's distance")
    pv.add_argument("descriptor")
    pv.add_argument("--cap-bits", type=int, default=DEFAULT_CAP_BITS)
    pv.add_argument("--threads", type=int, default=1)
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("encode", help="encode a message with a code")
    pe.add_argument("descriptor")
    pe.add_argument("message", help="comma-separated field elements "
                                    "(extension coefficients joined by ':')")
    pe.set_defaults(func=cmd_encode)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (SumrankError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
