"""
Unit tests for census checkpoint files and write retries.
"""

import tempfile
import shutil
from pathlib import Path
import pytest
from unittest.mock import patch

import sys

project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from twuality.graph import parse_graph
from twuality.group import RibbonElement
from twuality.records import CandidateRecord, CensusCheckpoint
from twuality.search.census import Candidate

from src.utils.checkpoint import CheckpointStore
from src.utils.retry import checkpoint_retry

CANDIDATE = Candidate(4, parse_graph("[1, -3, 2, 1, 2, -3]"), RibbonElement.parse("(tdt,td,d)"))


class TestCheckpointStore:
    """Save, reload and discard census progress."""

    def setup_method(self):
        self.temp_dir = tempfile.mkdtemp()
        self.store = CheckpointStore(self.temp_dir, 3, attempts=2, max_wait=0.01)

    def teardown_method(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_path(self):
        assert self.store.path == Path(self.temp_dir) / "census-n3.json"

    def test_missing_file(self):
        assert self.store.load() is None

    def test_record_round_trip(self):
        self.store.record(2, 5, [CANDIDATE])
        checkpoint = self.store.load()
        assert checkpoint.n == 3
        assert (checkpoint.next_index, checkpoint.total) == (2, 5)
        assert checkpoint.restore() == [CANDIDATE]
        assert not list(Path(self.temp_dir).glob("*.tmp"))

    def test_save_overwrites(self):
        self.store.save(CensusCheckpoint(n=3, next_index=1, total=5))
        self.store.save(CensusCheckpoint(n=3, next_index=4, total=5))
        assert self.store.load().next_index == 4

    def test_corrupt_file(self):
        self.store.path.write_text("{not json")
        assert self.store.load() is None

    def test_unparseable_graph(self):
        bad = CensusCheckpoint(
            n=3,
            next_index=1,
            total=5,
            candidates=[CandidateRecord(oeb_index=0, graph="[1, 2", alpha=["1"])],
        )
        self.store.path.write_text(bad.model_dump_json())
        assert self.store.load() is None

    def test_other_edge_count(self):
        self.store.path.write_text(CensusCheckpoint(n=4, next_index=0, total=17).model_dump_json())
        assert self.store.load() is None

    def test_index_beyond_total(self):
        self.store.path.write_text(CensusCheckpoint(n=3, next_index=6, total=5).model_dump_json())
        assert self.store.load() is None

    def test_clear(self):
        self.store.record(5, 5, [])
        self.store.clear()
        assert not self.store.path.exists()
        self.store.clear()

    def test_write_retried_on_oserror(self):
        calls = []
        original = Path.write_text

        def flaky(path, *args, **kwargs):
            calls.append(path)
            if len(calls) == 1:
                raise OSError("disk busy")
            return original(path, *args, **kwargs)

        with patch.object(Path, "write_text", flaky):
            self.store.record(1, 5, [])
        assert len(calls) == 2
        assert self.store.load().next_index == 1

    def test_write_gives_up(self):
        with patch.object(Path, "write_text", side_effect=OSError("read-only")):
            with pytest.raises(OSError, match="read-only"):
                self.store.record(1, 5, [])


class TestRetryPolicy:
    """Only OSError is retried."""

    def test_other_errors_not_retried(self):
        calls = []

        @checkpoint_retry(attempts=3, max_wait=0.01)
        def fail():
            calls.append(1)
            raise ValueError("bad record")

        with pytest.raises(ValueError):
            fail()
        assert len(calls) == 1

    def test_attempt_limit(self):
        calls = []

        @checkpoint_retry(attempts=3, max_wait=0.01)
        def fail():
            calls.append(1)
            raise OSError("busy")

        with pytest.raises(OSError):
            fail()
        assert len(calls) == 3


if __name__ == "__main__":
    pytest.main([__file__])
