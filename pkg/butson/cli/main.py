"""
butson - Butson-Hadamard verification, spectra, conjecture tests and circulant search
"""

import argparse
import logging
import sys
from typing import List, Optional, Tuple

from pydantic import ValidationError

from butson import __version__
from butson.cli.commands import (
    CommandResult, cmd_conjecture, cmd_format, cmd_search, cmd_spectrum, cmd_verify, resolve_input
)
from butson.cli.rendering import render_report
from butson.config import configure_logging, get_settings
from butson.search.models import SearchConfig
from butson.shared.exceptions import ButsonError, ConfigurationError, InvalidArgumentError
from butson.shared.responses import error_response, error_response_from
from butson.shared.validation import parse_range

logger = logging.getLogger(__name__)

MATRIX_COMMANDS = {
    "verify": cmd_verify,
    "spectrum": cmd_spectrum,
    "conjecture": cmd_conjecture,
}


def _rank_range(text: str) -> Tuple[int, int]:
    try:
        return parse_range(text)
    except InvalidArgumentError as e:
        raise argparse.ArgumentTypeError(e.message)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--json", action="store_true", help="Print the run report as JSON")
    output.add_argument("--no-timing", action="store_true", help="Report elapsed_ms as null")

    matrix_input = argparse.ArgumentParser(add_help=False)
    matrix_input.add_argument("path", nargs="?", help="Matrix file in the bh/circ text format")
    matrix_input.add_argument("--builtin", choices=["ex1", "ex2", "ex3"], help="Use a built-in matrix")

    parser = argparse.ArgumentParser(prog="butson", description=__doc__.strip())
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=settings.log_level, help="Logging level (default: LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("verify", parents=[matrix_input, output], help="Exact BH membership check")
    commands.add_parser("spectrum", parents=[matrix_input, output], help="Eigenvalue orders of M / sqrt(m)")
    commands.add_parser("conjecture", parents=[matrix_input, output], help="Classify entries of scaled powers")

    fmt = commands.add_parser("format", parents=[matrix_input], help="Print a matrix in the text format")
    fmt.add_argument("--circulant", action="store_true", help="Use the circ shorthand when possible")

    search = commands.add_parser("search", parents=[output], help="Exhaustive circulant BH(m,l) scan")
    search.add_argument("m", type=int, help="Dimension")
    search.add_argument("l", type=int, help="Root order")
    search.add_argument("--dedup", action="store_true", help="Scan one row per rotation/shift orbit")
    search.add_argument("--range", dest="rank_range", type=_rank_range, help="Rank range lo..hi (half-open)")
    search.add_argument("--checkpoint", help="Checkpoint file to write and resume from")
    search.add_argument("--workers", type=int, default=settings.workers, help="Worker processes")
    search.add_argument(
        "--checkpoint-every", type=int, default=settings.checkpoint_every,
        help="Rows per shard between checkpoints"
    )
    return parser


def _dispatch(args: argparse.Namespace, command_line: str) -> CommandResult:
    timing = not args.no_timing
    if args.command == "search":
        try:
            config = SearchConfig(
                m=args.m,
                l=args.l,
                dedup=args.dedup,
                range=args.rank_range,
                checkpoint_every=args.checkpoint_every,
            )
        except ValidationError as e:
            raise ConfigurationError(f"Invalid search configuration: {e.errors()[0]['msg']}")
        return cmd_search(config, workers=args.workers, checkpoint=args.checkpoint, command=command_line, timing=timing)

    M, fingerprint = resolve_input(args.path, args.builtin)
    return MATRIX_COMMANDS[args.command](M, fingerprint, command=command_line, timing=timing)


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser()
    except ButsonError as e:
        print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    as_json = getattr(args, "json", False)

    try:
        if args.command == "format":
            M, _ = resolve_input(args.path, args.builtin)
            sys.stdout.write(cmd_format(M, circulant_shorthand=args.circulant))
            return 0

        code, report = _dispatch(args, " ".join(argv))
    except ButsonError as e:
        logger.error(f"{e.code}: {e.message}")
        if as_json:
            print(error_response_from(e).model_dump_json())
        else:
            print(f"error: {e.message}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected failure: {e}")
        if as_json:
            print(error_response(str(e), "INTERNAL_ERROR").model_dump_json())
        else:
            print(f"error: {e}", file=sys.stderr)
        return 1

    print(report.model_dump_json() if as_json else render_report(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
