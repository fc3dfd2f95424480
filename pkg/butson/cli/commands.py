"""
CLI commands - each returns an exit code and a RunReport
"""

import hashlib
import logging
import time
from pathlib import Path
from typing import Callable, Optional, Tuple, Union

from butson.cli.models import InputFingerprint, ResultPayload, RunReport
from butson.conjecture.examples import builtin_examples
from butson.conjecture.service import conjecture_test
from butson.matrices.models import RootMatrix
from butson.matrices.service import structure_flags, verify_bh
from butson.matrices.text_format import format_matrix_text, load_matrix_file
from butson.search.models import SearchConfig
from butson.search.service import run_search
from butson.shared.exceptions import InvalidArgumentError
from butson.spectra.service import spectrum_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_BH = 1
EXIT_COUNTEREXAMPLE = 3
EXIT_NO_COMMON_K = 4

CommandResult = Tuple[int, RunReport]


def resolve_input(
    path: Optional[Union[str, Path]] = None,
    builtin: Optional[str] = None
) -> Tuple[RootMatrix, InputFingerprint]:
    """Load a matrix from a file or the builtin table and fingerprint it"""
    if (path is None) == (builtin is None):
        raise InvalidArgumentError("Give exactly one of a matrix file or --builtin")

    if builtin is not None:
        examples = builtin_examples()
        if builtin not in examples:
            raise InvalidArgumentError(
                f"Unknown builtin '{builtin}'. Choose from: {', '.join(sorted(examples))}",
                details={"builtin": builtin}
            )
        M, source = examples[builtin], f"builtin:{builtin}"
    else:
        M, source = load_matrix_file(path), str(path)

    logger.debug(f"Loaded {source}: {M.m}x{M.m} over mu_{M.l}")
    digest = hashlib.sha256(format_matrix_text(M).encode()).hexdigest()
    return M, InputFingerprint(kind="matrix", source=source, m=M.m, l=M.l, sha256=digest)


def _timed(
    command: str,
    fingerprint: InputFingerprint,
    timing: bool,
    body: Callable[[], Tuple[int, ResultPayload]]
) -> CommandResult:
    start = time.perf_counter()
    code, result = body()
    elapsed = (time.perf_counter() - start) * 1000.0 if timing else None
    return code, RunReport(command=command, input=fingerprint, result=result, elapsed_ms=elapsed)


def cmd_verify(M: RootMatrix, fingerprint: InputFingerprint, command: str = "verify", timing: bool = True) -> CommandResult:
    def body() -> Tuple[int, ResultPayload]:
        report = verify_bh(M).model_copy(update={"structure": structure_flags(M)})
        return (EXIT_OK if report.is_bh else EXIT_NOT_BH), report

    return _timed(command, fingerprint, timing, body)


def cmd_spectrum(M: RootMatrix, fingerprint: InputFingerprint, command: str = "spectrum", timing: bool = True) -> CommandResult:
    def body() -> Tuple[int, ResultPayload]:
        report = spectrum_report(M)
        return (EXIT_OK if report.common_k is not None else EXIT_NO_COMMON_K), report

    return _timed(command, fingerprint, timing, body)


def cmd_conjecture(M: RootMatrix, fingerprint: InputFingerprint, command: str = "conjecture", timing: bool = True) -> CommandResult:
    """Non-BH input raises PreconditionError (exit 1); no common k raises it with exit 4"""
    def body() -> Tuple[int, ResultPayload]:
        verdict = conjecture_test(M)
        return (EXIT_OK if verdict.holds else EXIT_COUNTEREXAMPLE), verdict

    return _timed(command, fingerprint, timing, body)


def cmd_search(
    config: SearchConfig,
    workers: int = 1,
    checkpoint: Optional[Union[str, Path]] = None,
    command: str = "search",
    timing: bool = True
) -> CommandResult:
    lo, hi = config.bounds()
    fingerprint = InputFingerprint(
        kind="search",
        source=f"m={config.m} l={config.l} range={lo}..{hi} dedup={config.dedup}",
        m=config.m,
        l=config.l,
        sha256=config.config_hash(),
    )

    def body() -> Tuple[int, ResultPayload]:
        return EXIT_OK, run_search(config, workers=workers, checkpoint_path=checkpoint)

    return _timed(command, fingerprint, timing, body)


def cmd_format(M: RootMatrix, circulant_shorthand: bool = False) -> str:
    return format_matrix_text(M, circulant_shorthand=circulant_shorthand)
