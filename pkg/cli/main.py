"""
Command-line front end.

    tightverify generate --family M --d 3 --part boundary -o m3.txt
    tightverify verify m3.txt --all --n-cyclic 29
    tightverify table --json
    tightverify replay --stop-after 1

Certificates go to stdout (or --json PATH) and logs to stderr. Exit codes:
0 all PASS, 1 any FAIL, 2 INCONCLUSIVE without FAIL, 64 usage error,
65 malformed input, 66 missing input file, 74 I/O error, 70 internal error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.generators.families import family
from src.generators.handles import parse_permutation, sphere_bundle
from src.generators.replay import replay_from_filling, replay_m329
from src.generators.standard import cross_polytope, path_ball, simplex_ball, simplex_sphere
from src.ingestion.facet_io import file_digest, format_facets, read_facets, write_facets
from src.models.certificate import Certificate
from src.models.complex import Complex
from src.models.errors import (
    DimOutOfRangeError,
    EmptyComplexError,
    FacetParseError,
    InadmissibleGluingError,
    ToolkitError,
)
from src.reporting.pipeline import CHECKS, DEFAULT_CHECKS, PipelineContext, default_checks, expected_row0, run_pipeline
from src.reporting.table import render_table, summary_table
from src.utils.config import get_config, load_config

logger = logging.getLogger("cli")

EXIT_USAGE = 64
EXIT_DATAERR = 65
EXIT_NOINPUT = 66
EXIT_SOFTWARE = 70
EXIT_IOERR = 74

FAMILIES = ("M", "N", "bundle", "pathball", "simplex", "cross")


class UsageError(Exception):
    """Arguments parsed but describe no valid request."""


class ToolParser(argparse.ArgumentParser):
    """ArgumentParser that exits with the usage-error code."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> tuple:
    return tuple(int(tok) for tok in text.replace(",", " ").split())


def build_parser() -> ToolParser:
    parser = ToolParser(prog="tightverify", description="Tight triangulation toolkit")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="Warnings and errors only")
    parser.add_argument("--config", help="Path to a settings YAML file")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("generate", help="Write a construction as a facet list")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    gen.add_argument("--d", type=int, required=True, help="Dimension")
    gen.add_argument("--m", type=int, help="Vertex count (bundle) or number of facets (pathball)")
    gen.add_argument("--sigma", default="id", help="Gluing permutation of 1..d+1 (bundle)")
    gen.add_argument("--part", choices=("filling", "boundary"), default="boundary",
                     help="For M/N/simplex: the ball or its boundary")
    gen.add_argument("-o", "--output", help="Output file (default stdout)")

    ver = commands.add_parser("verify", help="Run checks on a facet-list file")
    ver.add_argument("input", help="Facet-list file")
    ver.add_argument("--all", action="store_true", help=f"Run {', '.join(DEFAULT_CHECKS)} (tight-neighborly only for d >= 3)")
    ver.add_argument("--check", action="append", default=[], choices=sorted(CHECKS), help="Check to run (repeatable)")
    ver.add_argument("--n-cyclic", type=int, help="n for the cyclic action i -> i+1 mod n")
    ver.add_argument("--vertex", type=int, default=0, help="Vertex for link-order")
    ver.add_argument("--expect-cycle", type=_int_list, help="Expected link cycle for link-order")
    ver.add_argument("--expect-row0", choices=("R", "M", "N"), help="Compare link-order with a stored row-0 list")
    ver.add_argument("--expect-betti", type=_int_list, help="Expected Betti vector, e.g. 1,30,30,1")
    ver.add_argument("--expect-orientable", choices=("yes", "no"))
    ver.add_argument("--expect-aut-order", type=int)
    ver.add_argument("--samples", type=int, help="Spot-check samples")
    ver.add_argument("--seed", type=int, help="Spot-check seed")
    ver.add_argument("--max-group-order", type=int)
    ver.add_argument("--jobs", type=int, help="Run checks in parallel threads")
    ver.add_argument("--json", dest="json_path", help="Write the certificate here instead of stdout")
    ver.add_argument("--progress", action="store_true")

    tab = commands.add_parser("table", help="Rebuild the summary table of known cases")
    tab.add_argument("--dims", type=int, nargs="+", default=[3, 4])
    tab.add_argument("--json", action="store_true", help="JSON records instead of text")
    tab.add_argument("--progress", action="store_true")

    rep = commands.add_parser("replay", help="Rebuild a family boundary by handle additions")
    rep.add_argument("--family", choices=("M", "N"), default="M")
    rep.add_argument("--stop-after", type=int, help="Stop after this many handle additions")
    rep.add_argument("--json", dest="json_path", help="Write the certificate here instead of stdout")
    rep.add_argument("--progress", action="store_true")
    return parser


def setup_logging(args: argparse.Namespace) -> None:
    level = get_config().get("logging.level", "INFO")
    if args.verbose:
        level = "DEBUG"
    elif args.quiet:
        level = "WARNING"
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        stream=sys.stderr,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )


def _progress(args: argparse.Namespace) -> bool:
    return bool(args.progress) and bool(get_config().get_cli_config().get("progress", True))


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_certificate(certificate: Certificate, path: Optional[str]) -> int:
    indent = int(get_config().get_reporting_config().get("indent", 2))
    _emit(certificate.stamp().canonical_json(indent=indent), path)
    return certificate.exit_code()


# ----------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------

def build_construction(args: argparse.Namespace) -> Complex:
    d = args.d
    if args.family in ("M", "N"):
        fam = family(args.family, d)
        return fam.filling if args.part == "filling" else fam.manifold
    if args.family == "bundle":
        if args.m is None:
            raise UsageError("--family bundle needs --m")
        return sphere_bundle(d, args.m, parse_permutation(args.sigma, d + 1))
    if args.family == "pathball":
        if args.m is None:
            raise UsageError("--family pathball needs --m")
        return path_ball(d, args.m)
    if args.family == "simplex":
        return simplex_ball(d) if args.part == "filling" else simplex_sphere(d)
    return cross_polytope(d)


def cmd_generate(args: argparse.Namespace) -> int:
    X = build_construction(args)
    header = [f"family={args.family} d={args.d} part={args.part}"]
    if args.m is not None:
        header.append(f"m={args.m} sigma={args.sigma}")
    summary = f"{X.n_vertices} vertices, f = {X.f_vector().counts}"
    if args.output:
        write_facets(X, args.output, header=header)
        print(summary)
    else:
        sys.stdout.write(format_facets(X, header=header))
        print(summary, file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    expect_cycle = args.expect_cycle
    if args.expect_row0:
        expect_cycle = expected_row0(args.expect_row0)
    if not (args.all or args.check or expect_cycle is not None):
        raise UsageError("nothing to verify: give --all or --check")

    X = read_facets(args.input)
    checks: List[str] = list(default_checks(X.dimension)) if args.all else []
    checks.extend(c for c in args.check if c not in checks)
    if (expect_cycle is not None) and "link-order" not in checks:
        checks.append("link-order")
    config = get_config()
    ctx = PipelineContext(
        complex=X,
        n_cyclic=args.n_cyclic,
        samples=args.samples,
        seed=args.seed,
        vertex=args.vertex,
        expect_cycle=expect_cycle,
        expect_betti=args.expect_betti,
        expect_orientable=None if args.expect_orientable is None else args.expect_orientable == "yes",
        expect_aut_order=args.expect_aut_order,
        max_group_order=args.max_group_order,
        progress=_progress(args),
    )
    jobs = args.jobs if args.jobs is not None else int(config.get_cli_config().get("jobs", 1))
    parameters = {"input": Path(args.input).name}
    if args.n_cyclic is not None:
        parameters["n_cyclic"] = args.n_cyclic
    certificate = run_pipeline(ctx, checks, subject=file_digest(args.input), parameters=parameters, jobs=jobs)
    return _emit_certificate(certificate, args.json_path)


def cmd_table(args: argparse.Namespace) -> int:
    rows = summary_table(dims=args.dims, progress=_progress(args))
    _emit(render_table(rows, as_json=args.json), None)
    return 0 if all(row.status != "MISMATCH" for row in rows) else 1


def cmd_replay(args: argparse.Namespace) -> int:
    if args.family == "M":
        certificate = replay_m329(stop_after=args.stop_after, progress=_progress(args))
    else:
        certificate = replay_from_filling(family("N", 3), stop_after=args.stop_after, progress=_progress(args))
    return _emit_certificate(certificate, args.json_path)


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "table": cmd_table,
    "replay": cmd_replay,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.config:
            load_config(args.config)
    except FileNotFoundError as exc:
        print(f"tightverify: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    setup_logging(args)
    for key, value in (("homology.spotcheck_samples", getattr(args, "samples", None)),
                       ("homology.spotcheck_seed", getattr(args, "seed", None))):
        if value is not None:
            get_config().set(key, value)

    try:
        return COMMANDS[args.command](args)
    except (UsageError, DimOutOfRangeError, InadmissibleGluingError) as exc:
        print(f"tightverify: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        if isinstance(exc, (FacetParseError, EmptyComplexError)):
            print(f"tightverify: {exc}", file=sys.stderr)
            return EXIT_DATAERR
        if not isinstance(exc, ToolkitError):
            print(f"tightverify: usage error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        logger.error(f"{type(exc).__name__}: {exc}")
        return EXIT_DATAERR
    except FileNotFoundError as exc:
        print(f"tightverify: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except OSError as exc:
        print(f"tightverify: {exc}", file=sys.stderr)
        return EXIT_IOERR
    except Exception:
        logger.exception("Internal error")
        return EXIT_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
