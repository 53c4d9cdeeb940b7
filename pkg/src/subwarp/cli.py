"""Command-line interface: ``subwarp compare`` and ``subwarp verify``.

Exit codes: 0 on success, 1 when an internal invariant or a verification
suite fails, 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from contextlib import contextmanager
from typing import List, Optional, Sequence

from . import __version__, segmenter, svg, verify
from .fixtures import FIXTURES
from .io import FORMATS, ingest
from .metrics import SHIFT_DEFINITIONS, report
from .segmenter import MERGE_CRITERIA, ToleranceSpec, simplify
from .series import CostFunction, InputError, Series

EXIT_OK, EXIT_INVARIANT, EXIT_INPUT = 0, 1, 2
INVARIANT_TOL = 1e-9


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="subwarp", description="DTW alignment simplified into a few straight segments.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    cmp_ = sub.add_parser("compare", help="align two series and print a JSON report")
    src = cmp_.add_argument_group("input")
    src.add_argument("files", nargs="*", metavar="FILE",
                     help="one file holding both series, or one file per series ('-' reads stdin)")
    src.add_argument("--format", choices=FORMATS, default="csv")
    src.add_argument("--s1", type=int, default=1, metavar="K",
                     help="1-based index of the first series within its file (default 1)")
    src.add_argument("--s2", type=int, default=None, metavar="K",
                     help="1-based index of the second series (default 2 for one file, 1 for two)")
    src.add_argument("--fixture", choices=sorted(FIXTURES), help="use a built-in synthetic pair instead of files")
    src.add_argument("--seed", type=int, default=None, help="seed for --fixture (default: the fixture's own)")
    opts = cmp_.add_argument_group("alignment")
    opts.add_argument("--cost-lambda", type=float, default=2.0, help="exponent applied to the norm (default 2)")
    opts.add_argument("--cost-p", type=float, default=2.0, help="order of the norm; 'inf' allowed (default 2)")
    opts.add_argument("--gamma-abs", type=float, default=0.0, help="absolute distance tolerance")
    opts.add_argument("--gamma-rel", type=float, default=0.0, help="relative distance tolerance (0.05 = 5%%)")
    opts.add_argument("--merge-criterion", choices=MERGE_CRITERIA, default="local")
    opts.add_argument("--shift-def", choices=SHIFT_DEFINITIONS, default="closest")
    out = cmp_.add_argument_group("output")
    out.add_argument("--render", metavar="DIR", help="write segmented.svg, matches.svg and matrix.svg here")
    out.add_argument("--stride", type=int, default=1, help="draw every n-th match in matches.svg")
    out.add_argument("--output", "-o", metavar="FILE", help="write the JSON here instead of stdout")
    cmp_.set_defaults(handler=cmd_compare)

    ver = sub.add_parser("verify", help="run the oracle and bound self-checks")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--dtw-pairs", type=int, default=500)
    ver.add_argument("--bound-pairs", type=int, default=1000)
    ver.add_argument("--raster-limit", type=int, default=25)
    # test hook: inverts the tolerance criterion so the bound suite must fail
    ver.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    ver.set_defaults(handler=cmd_verify)
    return parser


def _select(args) -> List[Series]:
    if args.fixture:
        if args.files:
            raise InputError("give either FILE arguments or --fixture, not both")
        make = FIXTURES[args.fixture]
        return list(make() if args.seed is None else make(seed=args.seed))
    if not args.files:
        raise InputError("no input: pass one or two files, or --fixture")
    if len(args.files) > 2:
        raise InputError(f"expected at most two files, got {len(args.files)}")

    def load(name):
        if name == "-":
            return ingest(sys.stdin, args.format)
        return ingest(name, args.format)

    def pick(series, k, origin):
        if not 1 <= k <= len(series):
            raise InputError(f"series {k} requested but {origin} holds {len(series)}")
        return series[k - 1]

    first = load(args.files[0])
    if len(args.files) == 1:
        k2 = 2 if args.s2 is None else args.s2
        return [pick(first, args.s1, args.files[0]), pick(first, k2, args.files[0])]
    second = load(args.files[1])
    k2 = 1 if args.s2 is None else args.s2
    return [pick(first, args.s1, args.files[0]), pick(second, k2, args.files[1])]


def comparison_document(s1: Series, s2: Series, f: CostFunction, spec: ToleranceSpec,
                        merge_criterion: str = "local", shift_definition: str = "closest"):
    """Run DTW plus simplification and bundle everything into a JSON-ready dict.

    Returns ``(document, result, reports, band)``.
    """
    result = simplify(s1, s2, f, spec, merge_criterion)
    reports, band = report(result.simplified, s1, s2, shift_definition)
    d_opt = result.dtw.distance
    doc = {
        "inputs": {
            "s1": {"name": s1.name, "length": len(s1)},
            "s2": {"name": s2.name, "length": len(s2)},
            "cost_function": {"lambda": f.lambda_exponent, "p": f.p_norm},
        },
        "tolerances": {
            "gamma_abs": spec.gamma_abs,
            "gamma_rel": spec.gamma_rel,
            "delta_abs": result.params.delta_abs,
            "delta_rel": result.params.delta_rel,
            "merge_criterion": merge_criterion,
        },
        "dtw": {
            "distance": d_opt,
            "cost": result.dtw.cost,
            "path_length": result.dtw.path_length,
            "corner_points": result.dtw.path.corner_count(),
        },
        "dsw": {
            "distance": result.distance,
            "cost": result.cost,
            "bound": result.bound,
            "phase1_segments": len(result.phase1),
            "key_points": [list(q) for q in result.simplified.key_points],
            "shift_definition": shift_definition,
            "segments": [r.to_dict() for r in reports],
        },
        "band": None if band is None else {
            "max_alpha": float(band.alpha.max()),
            "max_beta": float(band.beta.max()),
        },
        "invariants": {
            "not_below_dtw": result.distance >= d_opt - INVARIANT_TOL,
            "within_bound": result.distance <= result.bound + INVARIANT_TOL,
        },
    }
    return doc, result, reports, band


def _scalar(v) -> str:
    # json uses repr for floats: the shortest string that round-trips
    return json.dumps(v, allow_nan=False)


def _pretty(obj, depth: int = 0) -> str:
    pad = "  " * (depth + 1)
    if isinstance(obj, dict) and obj:
        items = [f"{pad}{_scalar(str(k))}: {_pretty(v, depth + 1)}" for k, v in obj.items()]
    elif isinstance(obj, (list, tuple)) and any(isinstance(v, (dict, list, tuple)) for v in obj):
        items = [pad + _pretty(v, depth + 1) for v in obj]
    elif isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_scalar(v) for v in obj) + "]"
    else:
        return _scalar(obj)
    close = "}" if isinstance(obj, dict) else "]"
    return ("{" if close == "}" else "[") + "\n" + ",\n".join(items) + "\n" + "  " * depth + close


def dumps(doc) -> str:
    """Indented JSON with arrays of plain values kept on one line."""
    return _pretty(doc) + "\n"


def cmd_compare(args) -> int:
    if args.stride < 1:
        raise InputError(f"--stride must be >= 1, got {args.stride}")
    s1, s2 = _select(args)
    f = CostFunction(args.cost_lambda, args.cost_p)
    spec = ToleranceSpec(args.gamma_abs, args.gamma_rel)
    doc, result, reports, band = comparison_document(s1, s2, f, spec, args.merge_criterion, args.shift_def)
    text = dumps(doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.render:
        render_all(args.render, s1, s2, result, reports, band, svg.RenderSpec(stride=args.stride))
    broken = [k for k, ok in doc["invariants"].items() if not ok]
    if broken:
        print(f"subwarp: invariant violated: {', '.join(broken)}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


def render_all(directory, s1, s2, result, reports, band, spec: svg.RenderSpec) -> List[str]:
    """Write the three views of one comparison; returns the file paths."""
    try:
        os.makedirs(directory, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create {directory}: {exc}") from exc
    views = {
        "segmented.svg": svg.render_segmented(s1, s2, result.simplified, reports, band, spec),
        "matches.svg": svg.render_point_to_point(s1, s2, result.dtw.path, spec),
        "matrix.svg": svg.render_matrix_paths(
            result.dtw.cost_matrix, [(result.dtw.path, "optimal"), (result.simplified, "simplified")], spec),
    }
    written = []
    for name, doc in views.items():
        target = os.path.join(directory, name)
        svg.write_svg(doc, target)
        written.append(target)
    return written


@contextmanager
def _inverted_criterion():
    original = segmenter.tolerance_check
    segmenter.tolerance_check = lambda *a, **kw: not original(*a, **kw)
    try:
        yield
    finally:
        segmenter.tolerance_check = original


def cmd_verify(args) -> int:
    for name in ("dtw_pairs", "bound_pairs", "raster_limit"):
        if getattr(args, name) < 1:
            raise InputError(f"--{name.replace('_', '-')} must be >= 1")

    def show(r):
        print(r.summary(), flush=True)
        for ex in r.examples:
            print(f"  e.g. {ex}")

    if args.inject_fault:
        print("fault injection: tolerance criterion inverted")
        with _inverted_criterion():
            results = verify.run_all(args.seed, args.dtw_pairs, args.bound_pairs, args.raster_limit, show)
    else:
        results = verify.run_all(args.seed, args.dtw_pairs, args.bound_pairs, args.raster_limit, show)
    failed = [r.name for r in results if not r.passed]
    print("all suites passed" if not failed else f"failed: {', '.join(failed)}")
    return EXIT_INVARIANT if failed else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.handler(args)
    except InputError as exc:
        print(f"subwarp: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
