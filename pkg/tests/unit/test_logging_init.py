from __future__ import annotations

import json
import logging
from io import StringIO
from pathlib import Path

from src.logging.init import (
    APP_LOGGER,
    SUMMARY_LEVEL,
    LabeledFormatter,
    get_logger,
    log_summary,
    setup_logging,
)
from src.logging.violation_log import ViolationLogBuffer
from src.models.violation_record import ViolationRecord


def test_setup_logging_creates_logger_with_labeled_formatter():
    logger = setup_logging()

    assert logger.name == APP_LOGGER
    assert logger.level == logging.INFO
    assert len(logger.handlers) == 1
    assert isinstance(logger.handlers[0].formatter, LabeledFormatter)
    assert logger.propagate is False


def test_setup_logging_is_idempotent():
    first = setup_logging()
    assert setup_logging(logging.DEBUG) is first
    assert len(first.handlers) == 1


def test_labeled_prefixes():
    """Output lines carry INFO|WARN|ERROR|SUMMARY prefixes."""
    captured = StringIO()
    logger = logging.getLogger("test_knot_width")
    logger.setLevel(logging.INFO)
    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
    handler = logging.StreamHandler(captured)
    handler.setFormatter(LabeledFormatter())
    logger.addHandler(handler)
    logger.propagate = False

    logger.info("Test info message")
    logger.warning("Test warning message")
    logger.error("Test error message")
    logger.log(SUMMARY_LEVEL, "instances=1/1")

    assert captured.getvalue().splitlines() == [
        "INFO Test info message",
        "WARN Test warning message",
        "ERROR Test error message",
        "SUMMARY instances=1/1",
    ]


def test_child_loggers_share_app_handler(capsys):
    setup_logging()
    get_logger("src.carving.exact").warning("fallback")
    log_summary("instances=0/0")

    out = capsys.readouterr().out.splitlines()
    assert "WARN fallback" in out
    assert "SUMMARY instances=0/0" in out


def test_child_logger_name_drops_package_prefix():
    assert get_logger("src.services.grid").name == f"{APP_LOGGER}.services.grid"


def test_violation_buffer_flushes_json_lines(tmp_path: Path):
    buffer = ViolationLogBuffer(tmp_path / "logs")
    assert buffer.flush() is None

    buffer.append(ViolationRecord.create("trefoil", "report", "sphere cost <= 4k+4", "cw=4 k=0"))
    buffer.extend([ViolationRecord.create("sum:2", "tube", "tubing")])
    path = buffer.flush()

    assert path is not None and path.name.startswith("violations-")
    lines = [json.loads(x) for x in path.read_text(encoding="utf-8").splitlines()]
    assert [x["instance"] for x in lines] == ["trefoil", "sum:2"]
    assert set(lines[0]) == {"timestamp", "instance", "stage", "check", "detail"}
    assert lines[0]["timestamp"].endswith("Z")
    assert len(buffer) == 0
