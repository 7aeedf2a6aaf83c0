"""Shared fixtures for the simulator CLI tests."""

import io
import logging

import pytest
import structlog

from app.core.config import get_settings
from app.main import run_cli


@pytest.fixture(autouse=True)
def test_settings(monkeypatch):
    monkeypatch.setenv("EDGESCHED_THREADS", "1")
    monkeypatch.setenv("EDGESCHED_LOG_LEVEL", "WARNING")
    get_settings.cache_clear()
    structlog.configure(wrapper_class=structlog.make_filtering_bound_logger(logging.WARNING))
    yield
    get_settings.cache_clear()


class CliResult:
    def __init__(self, code: int, stdout: str, stderr: str) -> None:
        self.code = code
        self.stdout = stdout
        self.stderr = stderr


@pytest.fixture
def cli():
    """Run the CLI in-process and capture its streams."""

    def invoke(*argv: str) -> CliResult:
        out, err = io.StringIO(), io.StringIO()
        code = run_cli(list(argv), stdout=out, stderr=err)
        return CliResult(code, out.getvalue(), err.getvalue())

    return invoke
