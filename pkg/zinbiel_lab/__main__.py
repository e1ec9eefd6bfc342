"""
Main entry point for zinbiel-lab.

Run with: python -m zinbiel_lab
Or: zinbiel-lab (if installed)

Every algebra-consuming command reads canonical JSON from a file argument
or stdin and writes JSON to stdout, so commands compose through pipes:

    zinbiel-lab catalog build z34 | zinbiel-lab check

Exit codes: 0 the property holds, 1 it fails (a witness is printed),
2 malformed input.
"""

import argparse
import sys
from typing import Optional

from . import __version__
from .codec import algebra_from_dict, algebra_to_dict, dumps, loads, map_from_dict
from .config import Config
from .core import AlgebraLab, LabResult
from .errors import InputError, ZinbielLabError


def read_json(source: str):
    """Parse JSON from a path, or from stdin when source is "-"."""
    if source == "-":
        return loads(sys.stdin.read())
    try:
        with open(source, "r", encoding="utf-8") as f:
            return loads(f.read())
    except OSError as e:
        raise InputError(f"Cannot read {source}: {e}") from e


def read_algebra(source: str):
    return algebra_from_dict(read_json(source))


def parse_pattern(text: str) -> tuple:
    try:
        n0, n1 = (int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"--pattern expects n0,n1, got {text!r}") from None
    if n0 < 1 or n1 < 0:
        raise InputError(f"--pattern needs n0 >= 1 and n1 >= 0, got {text!r}")
    return n0, n1


def emit(data, config: Config) -> None:
    print(dumps(data, config.json_indent), flush=True)


def emit_error(error: Exception, config: Config) -> None:
    emit({"error": type(error).__name__, "message": str(error)}, config)


def apply_overrides(config: Config, args: argparse.Namespace) -> None:
    """CLI flags win over the loaded config for this run only."""
    if getattr(args, "seed", None) is not None:
        config.seed = args.seed
    if getattr(args, "verbose", False):
        config.verbose = True


def run_command(args: argparse.Namespace, config: Config) -> int:
    """Dispatch one subcommand; returns the exit code."""
    from .cli import make_logger

    lab = AlgebraLab(config, log_callback=make_logger(config.verbose))
    samples = getattr(args, "samples", None)
    result: Optional[LabResult] = None

    if args.command == "check":
        result = lab.check(read_algebra(args.input))

    elif args.command == "series":
        result = lab.series(read_algebra(args.input))

    elif args.command == "charseq":
        if samples is not None:
            config.candidate_samples = samples
        result = lab.charseq(read_algebra(args.input), element=args.element)

    elif args.command == "gr":
        result = lab.gr(read_algebra(args.input))

    elif args.command == "structure":
        result = lab.structure(read_algebra(args.input))

    elif args.command == "report":
        result = lab.report(read_algebra(args.input))
        if args.pretty:
            from .cli import show_report

            show_report(result.payload)
            return 0 if result.success else 1

    elif args.command == "catalog":
        if args.catalog_command == "build":
            algebra = lab.catalog_build(
                args.family, n=args.n, m=args.m, dim=args.dim, alpha=args.alpha, beta=args.beta
            )
            emit(algebra_to_dict(algebra), config)
            return 0
        result = lab.catalog_list()
        if args.pretty:
            from .cli import show_catalog

            show_catalog(result.payload)
            return 0

    elif args.command == "iso-verify":
        graded_map = map_from_dict(read_json(args.map)) if args.map else None
        result = lab.iso_verify(read_algebra(args.first), read_algebra(args.second), graded_map)

    elif args.command == "transport-check":
        result = lab.transport_check(read_algebra(args.input), samples)

    elif args.command == "classify-system":
        result = lab.classify_system(parse_pattern(args.pattern), sign=args.sign, compare=args.compare)

    elif args.command == "classify-verify":
        result = lab.classify_verify(args.family, samples)

    elif args.command == "reductions":
        result = lab.reductions(samples)

    emit(result.payload, config)
    return 0 if result.success else 1


def set_config(args: argparse.Namespace) -> int:
    """Set configuration values."""
    config = Config.load()

    if args.seed is not None:
        config.seed = args.seed
        print(f"Set seed: {config.seed}")

    if args.candidate_samples is not None:
        config.candidate_samples = args.candidate_samples
        print(f"Set candidate_samples: {config.candidate_samples}")

    if args.steps:
        config.candidate_steps = [s.strip() for s in args.steps.split(",") if s.strip()]
        print(f"Set candidate_steps: {config.candidate_steps}")

    if args.family_samples is not None:
        config.family_samples = args.family_samples
        print(f"Set family_samples: {config.family_samples}")

    if args.crossval_samples is not None:
        config.crossval_samples = args.crossval_samples
        print(f"Set crossval_samples: {config.crossval_samples}")

    if args.transport_samples is not None:
        config.transport_samples = args.transport_samples
        print(f"Set transport_samples: {config.transport_samples}")

    if args.indent is not None:
        config.json_indent = args.indent if args.indent > 0 else None
        print(f"Set json_indent: {config.json_indent}")

    if args.verbose_default is not None:
        config.verbose = args.verbose_default
        print(f"Set verbose: {config.verbose}")

    config.save()
    print("\nConfiguration saved.")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zinbiel-lab",
        description="Exact arithmetic for Zinbiel superalgebras",
    )
    parser.add_argument("-v", "--version", action="version", version=f"%(prog)s {__version__}")

    # Shared flags
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-V", "--verbose", action="store_true", help="Log progress to stderr")
    common.add_argument("--seed", type=int, help="Seed for every randomized strategy")

    algebra_input = argparse.ArgumentParser(add_help=False, parents=[common])
    algebra_input.add_argument("input", nargs="?", default="-", help="Algebra JSON file (default: stdin)")

    subparsers = parser.add_subparsers(dest="command", help="Commands")

    subparsers.add_parser("check", parents=[algebra_input], help="Check the Zinbiel superidentity")
    subparsers.add_parser("series", parents=[algebra_input], help="Power sequence dims and nilpotency index")

    cs_parser = subparsers.add_parser("charseq", parents=[algebra_input], help="Characteristic sequence")
    cs_parser.add_argument("--element", help='Even element such as "e1+1/2e3"; default scans candidates')
    cs_parser.add_argument("--samples", type=int, help="Random candidates to scan")

    subparsers.add_parser("gr", parents=[algebra_input], help="Associated graded algebra and natural grading")
    subparsers.add_parser("structure", parents=[algebra_input], help="Annihilators and a minimal graded ideal")

    report_parser = subparsers.add_parser("report", parents=[algebra_input], help="Full invariant report")
    report_parser.add_argument("--pretty", action="store_true", help="Render with rich instead of JSON")

    # Catalog
    cat_parser = subparsers.add_parser("catalog", help="Classified families")
    cat_sub = cat_parser.add_subparsers(dest="catalog_command", required=True)
    build_parser_ = cat_sub.add_parser("build", parents=[common], help="Emit the table of a family member")
    build_parser_.add_argument("family", help="Family id (see `catalog list`)")
    build_parser_.add_argument("--n", type=int, help="Even dimension")
    build_parser_.add_argument("--m", type=int, help="Odd dimension")
    build_parser_.add_argument("--dim", type=int, help="Total dimension")
    build_parser_.add_argument("--alpha", metavar="p/q", help="Family parameter alpha")
    build_parser_.add_argument("--beta", metavar="p/q", help="Family parameter beta")
    list_parser = cat_sub.add_parser("list", parents=[common], help="List families with citations")
    list_parser.add_argument("--pretty", action="store_true", help="Render with rich instead of JSON")

    # Maps
    iso_parser = subparsers.add_parser("iso-verify", parents=[common], help="Check a graded isomorphism")
    iso_parser.add_argument("first", help="Source algebra JSON")
    iso_parser.add_argument("second", help="Target algebra JSON")
    iso_parser.add_argument("map", nargs="?", help="Map JSON; omitted = compare invariants")

    tr_parser = subparsers.add_parser(
        "transport-check", parents=[algebra_input], help="Invariants under random graded changes of basis"
    )
    tr_parser.add_argument("--samples", type=int, help="Number of random maps")

    red_parser = subparsers.add_parser("reductions", parents=[common], help="Verify the reduction maps")
    red_parser.add_argument("--samples", type=int, help="Parameter samples per map")

    # Polynomial systems
    sys_parser = subparsers.add_parser("classify-system", parents=[common], help="Generic superidentity system")
    sys_parser.add_argument("--pattern", default="1,2", metavar="n0,n1", help="Graded dims (default: 1,2)")
    sys_parser.add_argument("--sign", default="standard", choices=["standard", "printed"], help="Residual sign")
    sys_parser.add_argument("--compare", action="store_true", help="Match against the transcribed (1,2) list")

    ver_parser = subparsers.add_parser("classify-verify", parents=[common], help="Verify the (1,2) solution families")
    ver_parser.add_argument("--family", help="Family letter a-h (default: all, plus cross-validation)")
    ver_parser.add_argument("--samples", type=int, help="Parameter samples per family")

    # Config command
    cfg_parser = subparsers.add_parser("config", help="Show or set configuration")
    cfg_parser.add_argument("--show", action="store_true", help="Show current configuration")
    cfg_parser.add_argument("--seed", type=int, help="Set default seed")
    cfg_parser.add_argument("--candidate-samples", type=int, help="Set candidate scan size")
    cfg_parser.add_argument("--steps", help="Set candidate steps (comma-separated rationals)")
    cfg_parser.add_argument("--family-samples", type=int, help="Set samples per family/reduction")
    cfg_parser.add_argument("--crossval-samples", type=int, help="Set cross-validation assignments")
    cfg_parser.add_argument("--transport-samples", type=int, help="Set random maps per transport check")
    cfg_parser.add_argument("--indent", type=int, help="Set JSON indent (0 = compact)")
    cfg_parser.add_argument("--verbose-default", type=lambda x: x.lower() == "true", metavar="true|false",
                            help="Enable/disable progress logging by default")
    return parser


def main(argv: Optional[list] = None) -> int:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 0

    if args.command == "config":
        if any(
            value is not None
            for value in (
                args.seed,
                args.candidate_samples,
                args.steps,
                args.family_samples,
                args.crossval_samples,
                args.transport_samples,
                args.indent,
                args.verbose_default,
            )
        ):
            return set_config(args)
        from .cli import show_config

        show_config(Config.load())
        return 0

    config = Config.load()
    apply_overrides(config, args)
    try:
        return run_command(args, config)
    except InputError as e:
        emit_error(e, config)
        return 2
    except ZinbielLabError as e:
        emit_error(e, config)
        return 1


if __name__ == "__main__":
    sys.exit(main())
