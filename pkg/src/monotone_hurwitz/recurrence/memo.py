"""
Memo table for recurrence values with JSON-lines persistence.

File layout: a header line {"format":"monotone-memo","version":1} followed by
one {"alpha":[...],"r":N,"M":"<decimal>"} record per line, sorted by weight,
then reverse-lexicographic partition, then r.
"""

import logging
import threading
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from pydantic import ValidationError

from ..core.exceptions import CacheError, CacheFormatError
from ..core.models import MemoHeader, MemoRecord
from ..exact.partitions import Partition

logger = logging.getLogger(__name__)

MemoKey = Tuple[Partition, int]


def _order(key: MemoKey) -> Tuple:
    alpha, r = key
    return (alpha.weight, tuple(-part for part in alpha), r)


class MemoTable:
    """
    Keyed store (partition, r) -> exact integer.

    Reads are lock-free; inserts take a lock. Re-inserting an equal value is a
    no-op, so duplicate concurrent computation of one key is harmless.
    """

    def __init__(self, path: Optional[Path] = None):
        """
        Initialize memo table.

        Args:
            path: Persistence file (default: none, in-memory only)
        """
        self.path = path
        self.hits = 0
        self.misses = 0
        self.loaded = 0
        self._values: Dict[MemoKey, int] = {}
        self._lock = threading.Lock()
        self._dirty = False

    def get(self, alpha: Partition, r: int) -> Optional[int]:
        """Look up a value, counting a hit or a miss."""
        value = self._values.get((alpha, r))
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, alpha: Partition, r: int, value: int) -> None:
        """
        Raises:
            CacheError: If a different value is already stored for the key
        """
        key = (alpha, r)
        with self._lock:
            existing = self._values.get(key)
            if existing is not None:
                if existing != value:
                    raise CacheError(
                        f"conflicting memo values for ({alpha.text()}, {r}): {existing} vs {value}"
                    )
                return
            self._values[key] = value
            self._dirty = True

    def __contains__(self, key: MemoKey) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)

    def items(self) -> Iterator[Tuple[MemoKey, int]]:
        """Entries in file order."""
        for key in sorted(self._values, key=_order):
            yield key, self._values[key]

    def stats(self) -> Dict[str, int]:
        return {
            "entries": len(self._values),
            "loaded": self.loaded,
            "hits": self.hits,
            "misses": self.misses,
        }

    def save(self, path: Optional[Path] = None) -> Path:
        """
        Write the table to disk.

        Args:
            path: Target file (default: the table's own path)

        Returns:
            The path written

        Raises:
            CacheError: If no path is known
            OSError: If the file cannot be written
        """
        path = path or self.path
        if path is None:
            raise CacheError("memo table has no cache path")
        path.parent.mkdir(parents=True, exist_ok=True)

        lines = [MemoHeader().model_dump_json()]
        for (alpha, r), value in self.items():
            record = MemoRecord(alpha=list(alpha), r=r, M=str(value))
            lines.append(record.model_dump_json())

        tmp_path = path.with_suffix(path.suffix + ".tmp")
        tmp_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        tmp_path.replace(path)
        self._dirty = False
        logger.info("Saved %d memo entries to %s", len(self._values), path)
        return path

    def save_if_dirty(self) -> None:
        if self._dirty and self.path is not None:
            self.save()

    @classmethod
    def load(cls, path: Path) -> "MemoTable":
        """
        Load a table; a missing file yields an empty table bound to path.

        Raises:
            CacheFormatError: If the header or a record is malformed
        """
        table = cls(path)
        if not path.exists():
            logger.info("No memo cache at %s, starting empty", path)
            return table

        with open(path, "r", encoding="utf-8") as f:
            lines = [line for line in f.read().splitlines() if line.strip()]

        if not lines:
            raise CacheFormatError(f"{path}: empty cache file has no header")
        try:
            MemoHeader.model_validate_json(lines[0])
        except ValidationError as e:
            raise CacheFormatError(f"{path}: unrecognised header: {e}")

        for number, line in enumerate(lines[1:], start=2):
            try:
                record = MemoRecord.model_validate_json(line)
            except ValidationError as e:
                raise CacheFormatError(f"{path}:{number}: invalid record: {e}")
            table._values[(Partition(record.alpha), record.r)] = int(record.M)

        table.loaded = len(table._values)
        logger.info("Loaded %d memo entries from %s", table.loaded, path)
        return table

    def clear(self) -> None:
        """Drop all entries and delete the backing file."""
        with self._lock:
            self._values.clear()
            self._dirty = False
        if self.path is not None and self.path.exists():
            self.path.unlink()
            logger.info("Removed memo cache %s", self.path)

    def verify_against(self, recompute: Callable[[Partition, int], int]) -> List[MemoKey]:
        """Keys whose stored value differs from a fresh recomputation."""
        return [key for key, value in self.items() if recompute(*key) != value]

    def __repr__(self) -> str:
        return f"MemoTable(entries={len(self._values)}, path={self.path})"
