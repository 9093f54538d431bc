from __future__ import annotations

from datetime import datetime, timezone

UTC = timezone.utc
from pathlib import Path

from src.models.violation_record import ViolationRecord

"""Violation log buffering.

- JSON Lines 固定スキーマ (追加キー禁止)
- 起動ごとに `logs/violations-YYYYMMDD-HHMMSS.log` (UTC) を生成 (必要時のみ)
- レコードはメモリに溜め、flush でまとめて追記
"""

__all__ = [
    "ViolationRecord",
    "ViolationLogBuffer",
]

LOGS_DIR = Path("./logs")
TIMESTAMP_FMT = "%Y%m%d-%H%M%S"


class ViolationLogBuffer:
    """In-memory buffer of violation records. Flush appends JSON Lines."""

    def __init__(self, logs_dir: Path | None = None) -> None:
        self._records: list[ViolationRecord] = []
        self._file_path: Path | None = None
        self._logs_dir = logs_dir or LOGS_DIR

    @property
    def file_path(self) -> Path:
        if self._file_path is None:
            self._logs_dir.mkdir(parents=True, exist_ok=True)
            stamp = datetime.now(UTC).strftime(TIMESTAMP_FMT)
            self._file_path = self._logs_dir / f"violations-{stamp}.log"
        return self._file_path

    def append(self, record: ViolationRecord) -> None:
        self._records.append(record)

    def extend(self, records: list[ViolationRecord] | tuple[ViolationRecord, ...]) -> None:
        self._records.extend(records)

    def __len__(self) -> int:  # pragma: no cover (trivial)
        return len(self._records)

    def flush(self) -> Path | None:
        """Write buffered records; returns the file, or None when nothing was buffered."""
        if not self._records:
            return None
        fp = self.file_path
        with fp.open("a", encoding="utf-8") as f:
            for r in self._records:
                f.write(r.to_json_line() + "\n")
        self._records.clear()
        return fp
