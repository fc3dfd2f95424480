"""
Search checkpoints.

The checkpoint file is text:

    butson-search-v1 <cfg-hash>
    shard <lo> <hi> <next>
    ...

Counters for the rows already scanned live in a sidecar '<path>.partial.json'
so a resumed scan reproduces the report of an uninterrupted one.
"""

import logging
import os
from pathlib import Path
from typing import List, Union

from pydantic import BaseModel, ValidationError

from butson.search.models import SearchConfig, Shard
from butson.shared.exceptions import CheckpointError

logger = logging.getLogger(__name__)

MAGIC = "butson-search-v1"


class PartialState(BaseModel):
    """Sidecar content"""
    config_hash: str
    shards: List[Shard]


def partial_path(path: Path) -> Path:
    return path.with_name(path.name + ".partial.json")


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    try:
        with open(tmp, "w") as f:
            f.write(text)
            f.flush()
            os.fsync(f.fileno())
        os.replace(tmp, path)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def format_checkpoint(config_hash: str, shards: List[Shard]) -> str:
    lines = [f"{MAGIC} {config_hash}"]
    lines.extend(f"shard {s.lo} {s.hi} {s.next}" for s in shards)
    return "\n".join(lines) + "\n"


def write_checkpoint(path: Union[str, Path], config: SearchConfig, shards: List[Shard]) -> None:
    """Write sidecar then checkpoint, each atomically; a failed write leaves the previous pair intact"""
    path = Path(path)
    config_hash = config.config_hash()
    try:
        state = PartialState(config_hash=config_hash, shards=shards)
        _atomic_write(partial_path(path), state.model_dump_json())
        _atomic_write(path, format_checkpoint(config_hash, shards))
    except OSError as e:
        logger.error(f"Failed to write checkpoint {path}: {e}")
        raise CheckpointError(f"Failed to write checkpoint: {e.strerror or e}", path=str(path))

    done = sum(s.next - s.lo for s in shards)
    logger.info(f"Checkpoint {path}: {done} rows done across {len(shards)} shard(s)")


def _parse_shard_line(line: str, line_no: int, path: Path) -> Shard:
    parts = line.split()
    if len(parts) != 4 or parts[0] != "shard":
        raise CheckpointError(f"Malformed shard line {line_no}: '{line}'", path=str(path))
    try:
        lo, hi, next_rank = (int(p) for p in parts[1:])
    except ValueError:
        raise CheckpointError(f"Malformed shard line {line_no}: '{line}'", path=str(path))
    if not lo <= next_rank <= hi:
        raise CheckpointError(f"Shard line {line_no} has next outside [lo, hi]", path=str(path))
    return Shard(lo=lo, hi=hi, next=next_rank)


def read_checkpoint(path: Union[str, Path], config: SearchConfig) -> List[Shard]:
    """Load shards for a resumed scan, refusing a checkpoint written for another config"""
    path = Path(path)
    try:
        lines = [line for line in path.read_text().splitlines() if line.strip()]
    except OSError as e:
        raise CheckpointError(f"Cannot read checkpoint: {e.strerror or e}", path=str(path))

    if not lines:
        raise CheckpointError("Empty checkpoint file", path=str(path))
    header = lines[0].split()
    if len(header) != 2 or header[0] != MAGIC:
        raise CheckpointError(f"Not a {MAGIC} checkpoint", path=str(path))
    if header[1] != config.config_hash():
        raise CheckpointError(
            "Checkpoint was written for a different search configuration", path=str(path)
        )

    shards = [_parse_shard_line(line, number, path) for number, line in enumerate(lines[1:], start=2)]
    lo, hi = config.bounds()
    if not shards or shards[0].lo != lo or shards[-1].hi != hi or any(
        a.hi != b.lo for a, b in zip(shards, shards[1:])
    ):
        raise CheckpointError("Checkpoint shards do not tile the configured range", path=str(path))

    if all(s.next == s.lo for s in shards):
        return shards

    sidecar = partial_path(path)
    try:
        state = PartialState.model_validate_json(sidecar.read_text())
    except (OSError, ValidationError) as e:
        raise CheckpointError(f"Partial report {sidecar} is missing or unreadable: {e}", path=str(path))

    if state.config_hash != header[1] or [(s.lo, s.hi, s.next) for s in state.shards] != [
        (s.lo, s.hi, s.next) for s in shards
    ]:
        raise CheckpointError("Partial report does not match the checkpoint", path=str(path))

    logger.info(f"Resuming from checkpoint {path}")
    return state.shards
