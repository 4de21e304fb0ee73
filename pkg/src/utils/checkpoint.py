"""
Census checkpoint files.

One JSON file per edge count, census-n{n}.json, replaced atomically on every
write. A file that cannot be read back is reported and ignored.
"""

import os
from pathlib import Path
from typing import List, Optional, Union

from loguru import logger
from pydantic import ValidationError

from twuality.base import TwualityError
from twuality.records import CandidateRecord, CensusCheckpoint
from twuality.search.census import Candidate

from src.utils.retry import checkpoint_retry


class CheckpointStore:
    def __init__(
        self,
        directory: Union[str, Path],
        n: int,
        attempts: Optional[int] = None,
        max_wait: float = 10.0,
    ):
        self.n = n
        self.path = Path(directory) / f"census-n{n}.json"
        self._write = checkpoint_retry(attempts, max_wait)(self._write_once)

    def _write_once(self, text: str) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        temporary = self.path.with_name(self.path.name + ".tmp")
        temporary.write_text(text, encoding="utf-8")
        os.replace(temporary, self.path)

    def save(self, checkpoint: CensusCheckpoint) -> None:
        self._write(checkpoint.model_dump_json(indent=2))
        logger.info(
            f"Checkpoint {self.path}: {checkpoint.next_index}/{checkpoint.total} OEBs, "
            f"{len(checkpoint.candidates)} classes"
        )

    def record(self, next_index: int, total: int, candidates: List[Candidate]) -> None:
        """Census progress hook."""
        self.save(
            CensusCheckpoint(
                n=self.n,
                next_index=next_index,
                total=total,
                candidates=[CandidateRecord.from_candidate(c) for c in candidates],
            )
        )

    def load(self) -> Optional[CensusCheckpoint]:
        if not self.path.exists():
            return None
        try:
            checkpoint = CensusCheckpoint.model_validate_json(
                self.path.read_text(encoding="utf-8")
            )
            checkpoint.restore()
        except (OSError, ValidationError, TwualityError) as e:
            logger.warning(f"Discarding unreadable checkpoint {self.path}: {e}")
            return None
        if checkpoint.n != self.n or checkpoint.next_index > checkpoint.total:
            logger.warning(
                f"Discarding checkpoint {self.path}: n={checkpoint.n}, "
                f"next_index={checkpoint.next_index}, total={checkpoint.total}"
            )
            return None
        return checkpoint

    def clear(self) -> None:
        self.path.unlink(missing_ok=True)
