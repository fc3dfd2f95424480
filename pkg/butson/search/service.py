"""
Search service layer - exhaustive scan of circulant first rows
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from butson.config import get_settings
from butson.conjecture.service import conjecture_test
from butson.cyclotomic import is_zero_coeffs
from butson.matrices.service import circulant
from butson.search.checkpoint import read_checkpoint, write_checkpoint
from butson.search.models import Counterexample, SearchConfig, SearchReport, Shard
from butson.shared.exceptions import ConfigurationError
from butson.shared.validation import validate_exponent_row, validate_workers
from butson.spectra.service import spectrum_report

logger = logging.getLogger(__name__)


def autocorrelation_is_bh(l: int, row: Sequence[int]) -> bool:
    """
    circulant(l, row) is BH iff every periodic autocorrelation at a nonzero
    shift vanishes: sum_j zeta_l^(a_j - a_(j+s)) == 0 for s = 1..m-1.
    """
    m = len(row)
    for s in range(1, m):
        acc = [0] * l
        for j in range(m):
            acc[(row[j] - row[(j + s) % m]) % l] += 1
        if not is_zero_coeffs(l, acc):
            return False
    return True


def rank_of_row(l: int, row: Sequence[int]) -> int:
    """Lexicographic rank, first exponent most significant"""
    rank = 0
    for a in row:
        rank = rank * l + a
    return rank


def row_from_rank(l: int, m: int, rank: int) -> Tuple[int, ...]:
    digits = [0] * m
    for index in range(m - 1, -1, -1):
        rank, digits[index] = divmod(rank, l)
    return tuple(digits)


def _rotations(row: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    for r in range(len(row)):
        yield tuple(row[r:]) + tuple(row[:r])


def canonical_rank(l: int, row: Sequence[int]) -> int:
    """
    Rank of the least row in the orbit under rotations and global shifts
    a_j -> a_j + c mod l. For a fixed rotation the least shift is the one that
    zeroes the leading exponent.
    """
    row = validate_exponent_row(row, l)
    return min(
        rank_of_row(l, [(a - rotation[0]) % l for a in rotation])
        for rotation in _rotations(row)
    )


def _test_hit(l: int, row: Tuple[int, ...], report: SearchReport) -> None:
    M = circulant(l, row)
    spectrum = spectrum_report(M)
    report.tested += 1
    if spectrum.common_k is None:
        report.no_common_k_count += 1
        return

    verdict = conjecture_test(M, spectrum)
    if verdict.holds:
        report.holds_count += 1
    else:
        report.counterexample_count += 1
        report.counterexamples.append(Counterexample(
            first_row=list(row),
            k=verdict.k,
            counterexample_i=verdict.counterexample_i,
        ))
        logger.info(f"Counterexample first row {row} (k={verdict.k}, i={verdict.counterexample_i})")


def scan_range(config: SearchConfig, lo: int, hi: int) -> SearchReport:
    """Scan ranks [lo, hi); module-level so worker processes can pickle it"""
    m, l = config.m, config.l
    report = SearchReport()
    for rank in range(lo, hi):
        row = row_from_rank(l, m, rank)
        if config.dedup and canonical_rank(l, row) != rank:
            report.skipped += 1
            continue
        report.scanned += 1
        if not autocorrelation_is_bh(l, row):
            continue
        report.bh_count += 1
        _test_hit(l, row, report)
    return report


def plan_shards(lo: int, hi: int, count: int) -> List[Shard]:
    """Split [lo, hi) into at most count contiguous shards in rank order"""
    total = hi - lo
    count = max(1, min(count, total))
    step, extra = divmod(total, count)
    shards = []
    start = lo
    for index in range(count):
        end = start + step + (1 if index < extra else 0)
        shards.append(Shard(lo=start, hi=end, next=start))
        start = end
    return shards


def check_scan_size(config: SearchConfig) -> None:
    limit = get_settings().max_scan_rows
    if config.range is None and config.total_rows > limit:
        raise ConfigurationError(
            f"l^m = {config.l}^{config.m} rows exceeds the scan limit {limit}; pass an explicit range",
            details={"m": config.m, "l": config.l, "max_scan_rows": limit},
        )


def _chunk(shard: Shard, every: int) -> Tuple[int, int]:
    return shard.next, min(shard.next + every, shard.hi)


class SearchRunner:
    """
    Drives scan_range over shards in rounds of one chunk per shard, writing a
    checkpoint after every round. The merged report depends only on the config.
    """

    def __init__(
        self,
        config: SearchConfig,
        workers: int = 1,
        checkpoint_path: Optional[Union[str, Path]] = None
    ):
        check_scan_size(config)
        self.config = config
        self.workers = validate_workers(workers)
        self.checkpoint_path = Path(checkpoint_path) if checkpoint_path else None

    def _initial_shards(self) -> List[Shard]:
        if self.checkpoint_path is not None and self.checkpoint_path.exists():
            return read_checkpoint(self.checkpoint_path, self.config)
        lo, hi = self.config.bounds()
        return plan_shards(lo, hi, self.workers)

    def _run_round(self, pending: List[Shard], executor: Optional[ProcessPoolExecutor]) -> List[SearchReport]:
        chunks = [_chunk(shard, self.config.checkpoint_every) for shard in pending]
        if executor is None:
            return [scan_range(self.config, lo, hi) for lo, hi in chunks]
        futures = [executor.submit(scan_range, self.config, lo, hi) for lo, hi in chunks]
        return [future.result() for future in futures]

    def run(self) -> SearchReport:
        shards = self._initial_shards()
        lo, hi = self.config.bounds()
        logger.info(
            f"Search BH({self.config.m},{self.config.l}) ranks [{lo}, {hi}) "
            f"dedup={self.config.dedup} shards={len(shards)} workers={self.workers}"
        )

        executor = ProcessPoolExecutor(max_workers=self.workers) if self.workers > 1 else None
        try:
            while True:
                pending = [shard for shard in shards if not shard.done]
                if not pending:
                    break
                for shard, chunk_report in zip(pending, self._run_round(pending, executor)):
                    _, end = _chunk(shard, self.config.checkpoint_every)
                    shard.partial = shard.partial.merged(chunk_report)
                    shard.next = end
                if self.checkpoint_path is not None:
                    write_checkpoint(self.checkpoint_path, self.config, shards)
        finally:
            if executor is not None:
                executor.shutdown()

        report = SearchReport()
        for shard in shards:
            report = report.merged(shard.partial)
        logger.info(
            f"Search done: scanned={report.scanned} bh={report.bh_count} "
            f"counterexamples={report.counterexample_count}"
        )
        return report


def run_search(
    config: SearchConfig,
    workers: int = 1,
    checkpoint_path: Optional[Union[str, Path]] = None
) -> SearchReport:
    return SearchRunner(config, workers=workers, checkpoint_path=checkpoint_path).run()
