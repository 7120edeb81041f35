import sys
import argparse
from pathlib import Path

from convseg import (
    messages as msgs,
    pipeline,
    classify,
    version,
    printer_text,
    printer_json,
    printer_svg,
)
from convseg.errors import ConvsegError
from convseg.approx import ApproxConfig
from convseg.similarity import similarity

# Exit codes: 0 ok, 2 I/O or usage, 3 pipeline (ConvsegError.exit_code), 4 dataset
EXIT_IO = 2


# -- Argparse-based entry point --

def main(given_argv=sys.argv[1:]):
    parser = get_parser()
    try:
        args = parser.parse_args(given_argv)
        postparse(parser, args)
    except SystemExit as exc:
        return exc.code or 0
    except OSError as exc:
        msgs.error_message(f"{type(exc).__name__}: {exc}", cls="usage")
        return EXIT_IO
    msgs.set_verbosity(args.debug_level, args.quiet)
    try:
        args.func(args)
    except OSError as exc:
        msgs.error_message(f"{type(exc).__name__}: {exc}", cls="other")
        return EXIT_IO
    except ConvsegError as exc:
        msgs.error_message(f"{type(exc).__name__}: {exc}", cls="other")
        return exc.exit_code
    return 0


def postparse(parser, args):
    try:
        args.cfg = ApproxConfig(
            lambda_=args.lambda_,
            kappa=args.kappa,
            max_passes=args.max_passes,
            min_landmarks=args.min_landmarks,
            keep_violating_pass=args.keep_violating_pass,
        )
        if args.command == "classify" or args.workers is not None:
            args.workers = classify.worker_count(args.workers)
    except ValueError as exc:
        parser.error(str(exc))
    if args.command == "sim" and len(args.inputs) < 2:
        parser.error("sim needs at least two inputs")


# -- Subcommands --

def cmd_trace(args):
    boundary = pipeline.load_boundary(args.input, args.invert)
    msgs.status_message(f"Traced {boundary.n} boundary points from {args.input.name}.")
    printer_text.write_text(printer_text.format_points(boundary.points), args.out)


def cmd_segment(args):
    boundary = pipeline.load_boundary(args.input, args.invert)
    analysis = pipeline.analyze_boundary(boundary, args.cfg, shape_id=args.input.stem)
    msgs.status_message(f"{len(analysis.landmarks)} landmarks, tolerance {analysis.landmarks.tolerance!r}.")
    printer_text.write_text(printer_text.format_landmarks(analysis.normalized, analysis.landmarks), args.out)
    if args.svg:
        printer_svg.SvgPrinter(args.svg, analysis, stage="landmarks")


def cmd_features(args):
    analysis = pipeline.analyze(args.input, args.cfg, args.invert)
    msgs.status_message(f"{len(analysis.profile)} approximately convex segments.")
    printer_text.write_text(printer_text.format_features(analysis.profile), args.out)
    if args.svg:
        printer_svg.SvgPrinter(args.svg, analysis, stage="convex")


def cmd_render(args):
    analysis = pipeline.analyze(args.input, args.cfg, args.invert)
    msgs.status_message(f"Rendering {args.stage} of {args.input.name} to {args.out}.")
    printer_svg.SvgPrinter(args.out, analysis, stage=args.stage)
    if args.stage == "convex":
        printer_text.write_text(printer_text.format_decomposition(analysis.normalized, analysis.decomposition))


def cmd_sim(args):
    names = [p.stem for p in args.inputs]
    if len(set(names)) < len(names):
        names = [p.name for p in args.inputs]
    profiles = [pipeline.analyze(p, args.cfg, args.invert).profile for p in args.inputs]
    shapes = [classify.LabeledShape(sid, sid, prof, p) for sid, prof, p in zip(names, profiles, args.inputs)]
    matrix = classify.similarity_matrix(shapes, args.weights, workers=1)
    if len(shapes) == 2:
        msgs.status_message(f"S({names[0]}, {names[1]}) = {similarity(profiles[0], profiles[1], args.weights).value!r}")
    printer_text.write_text(printer_text.format_matrix(names, matrix), args.out)


def cmd_classify(args):
    failures = []
    dataset = classify.load_dataset(args.dataset, args.cfg, args.invert, args.workers, failures)
    if failures:
        msgs.warning_message(f"{len(failures)} file(s) failed the pipeline and were skipped.", cls="dataset")
    matrix = None
    if args.matrix:
        matrix = classify.similarity_matrix(dataset, args.weights, args.workers)
        printer_text.write_text(printer_text.format_matrix([s.shape_id for s in dataset], matrix), args.matrix)
    report = classify.loocv(dataset, args.weights, args.workers, matrix=matrix)
    if args.out:
        msgs.status_message(f"Printing to {args.out}.")
        printer_json.ReportPrinter(args.out, report)
    else:
        printer_text.write_text(printer_json.format_report(report))
    for line in printer_text.format_summary(report).splitlines():
        msgs.status_message(line)


# -- Argument Parser ---

def generic_path_t(p):
    return Path(p).expanduser().resolve()

def checked_path_t(p, check, exc):
    p = generic_path_t(p)
    if not check(p): raise exc(f"{p}")
    return p

def input_file_t(p):
    return checked_path_t(p, check=Path.is_file, exc=FileNotFoundError)

def input_dir_t(p):
    return checked_path_t(p, check=Path.is_dir, exc=FileNotFoundError)

def weights_t(s):
    parts = s.split(",")
    if len(parts) != 5:
        raise argparse.ArgumentTypeError(f"expected 5 comma-separated weights n,x,a,b,h, got {s!r}")
    weights = tuple(float(w) for w in parts)
    if not all(w >= 0 for w in weights):
        raise argparse.ArgumentTypeError(f"weights must be >= 0, got {s!r}")
    return weights


def _add_common(parser):
    parser.add_argument(
        "--lambda",
        dest="lambda_",
        type=int,
        default=5,
        help="Relaxation of the phase 2 merge bound, in multiples of the object scale (default: 5)",
    )
    parser.add_argument(
        "--kappa",
        type=float,
        default=-0.9,
        help="Phase 3 removes landmark vertices whose cosine is at most KAPPA (default: -0.9)",
    )
    parser.add_argument(
        "--max-passes",
        type=int,
        default=1000,
        help="Upper bound on sequential scan passes (default: 1000)",
    )
    parser.add_argument(
        "--min-landmarks",
        type=int,
        default=3,
        help="No stage reduces a shape below this many landmarks (default: 3)",
    )
    parser.add_argument(
        "--keep-violating-pass",
        action="store_true",
        help="Keep the landmarks of the scan pass that broke the error bound, rather than the last pass that kept it.",
    )
    parser.add_argument(
        "--invert",
        action="store_true",
        help="Treat dark raster pixels as foreground (bilevel files: clear bits)",
    )
    parser.add_argument(
        "--weights",
        type=weights_t,
        default=None,
        metavar="n,x,a,b,h",
        help="Non-negative weights of the five features in the similarity score (default: all 1)",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help=f"Number of worker processes. Defaults to ${classify.THREADS_ENV}, else the CPU count.",
    )
    parser.add_argument(
        "--debug-level",
        default=0,
        type=int,
        help="Log debug messages if > 0",
    )
    parser.add_argument(
        "-q", "--quiet",
        action="store_true",
        help="Only log warnings and errors",
    )


def get_parser():

    parser = argparse.ArgumentParser(
        prog="convseg",
        description="Approximately convex segmentation of shape silhouettes, and nearest-neighbor shape classification.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=version.VERSION_NUMBER,
    )
    common = argparse.ArgumentParser(add_help=False)
    _add_common(common)
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    trace = subparsers.add_parser("trace", parents=[common], help="Write the traced boundary as a point list")
    trace.add_argument("input", type=input_file_t, help="Raster or point-list file")
    trace.add_argument("-o", "--out", type=generic_path_t, metavar="FILE", help="Output file (default: standard output)")
    trace.set_defaults(func=cmd_trace)

    segment = subparsers.add_parser("segment", parents=[common], help="Write the landmarks of the polygonal approximation")
    segment.add_argument("input", type=input_file_t, help="Raster or point-list file")
    segment.add_argument("-o", "--out", type=generic_path_t, metavar="FILE", help="Output file (default: standard output)")
    segment.add_argument("--svg", type=generic_path_t, metavar="FILE", help="Also render the landmark polygon to FILE")
    segment.set_defaults(func=cmd_segment)

    features = subparsers.add_parser("features", parents=[common], help="Write the feature profile as CSV")
    features.add_argument("input", type=input_file_t, help="Raster or point-list file")
    features.add_argument("-o", "--out", type=generic_path_t, metavar="FILE", help="Output file (default: standard output)")
    features.add_argument("--svg", type=generic_path_t, metavar="FILE", help="Also render the convex decomposition to FILE")
    features.set_defaults(func=cmd_features)

    sim = subparsers.add_parser("sim", parents=[common], help="Write the pairwise similarity matrix of two or more shapes")
    sim.add_argument("inputs", nargs="+", type=input_file_t, help="Raster or point-list files")
    sim.add_argument("-o", "--out", type=generic_path_t, metavar="FILE", help="Output file (default: standard output)")
    sim.set_defaults(func=cmd_sim)

    classify_ = subparsers.add_parser("classify", parents=[common], help="Leave-one-out evaluation of a dataset directory")
    classify_.add_argument("dataset", type=input_dir_t, help="Directory of '<class>-<k>' shape files")
    classify_.add_argument("-o", "--out", type=generic_path_t, metavar="FILE", help="Write the JSON report to FILE (default: standard output)")
    classify_.add_argument("--matrix", type=generic_path_t, metavar="FILE", help="Also write the pairwise similarity matrix as CSV")
    classify_.set_defaults(func=cmd_classify)

    render = subparsers.add_parser("render", parents=[common], help="Render the landmarks or the convex decomposition as SVG")
    render.add_argument("input", type=input_file_t, help="Raster or point-list file")
    render.add_argument("-o", "--out", type=generic_path_t, required=True, metavar="FILE", help="SVG output file")
    render.add_argument("--stage", choices=printer_svg.STAGES, default="convex", help="What to draw (default: convex)")
    render.set_defaults(func=cmd_render)

    return parser


# -- Run main() if this script is invoked --

if __name__ == "__main__":
    sys.exit(main())
