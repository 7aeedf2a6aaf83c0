"""Tests for settings, logging setup and the CLI error handler."""

import io
import logging

import pytest
import structlog

from edge_sched.exceptions import InvalidConfigError

from app.cli.error_handler import run_guarded
from app.core.config import get_settings
from app.core.exceptions import UsageError
from app.core.logging import bind_context, clear_context, setup_logging


class TestSettings:
    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("EDGESCHED_QUEUE_CAP", "7")
        monkeypatch.setenv("EDGESCHED_EXACT_NODE_LIMIT", "1000")
        get_settings.cache_clear()

        settings = get_settings()

        assert settings.framed_defaults.queue_cap == 7
        assert settings.solver_limits.node_limit == 1000
        assert settings.THREADS == 1

    def test_framed_defaults(self):
        framed = get_settings().framed_defaults

        assert (framed.frames, framed.frame_len_ms, framed.queue_cap) == (600, 3000.0, 4)
        assert framed.retry_rejected is True


class TestErrorHandler:
    def test_success_passes_code_through(self):
        assert run_guarded(lambda: 0, io.StringIO()) == 0

    def test_library_error_uses_its_exit_code(self):
        stderr = io.StringIO()

        def fail() -> int:
            raise InvalidConfigError("bad config", errors=[{"loc": ["n_requests"], "msg": "too small"}])

        assert run_guarded(fail, stderr) == 2
        assert stderr.getvalue() == "error: bad config\n  n_requests: too small\n"

    def test_usage_error(self):
        stderr = io.StringIO()

        def fail() -> int:
            raise UsageError("--runs must be positive", argument="--runs")

        assert run_guarded(fail, stderr) == 2
        assert stderr.getvalue() == "error: --runs must be positive\n"

    def test_unexpected_error_exits_1(self):
        stderr = io.StringIO()

        def fail() -> int:
            raise RuntimeError("boom")

        assert run_guarded(fail, stderr) == 1
        assert "unexpected RuntimeError: boom" in stderr.getvalue()


class TestLogging:
    def test_logs_go_to_stderr(self, capsys):
        setup_logging("INFO")
        bind_context(command="simulate", seed=3)
        try:
            structlog.get_logger("test").info("Batch done", runs=2)
        finally:
            clear_context()

        captured = capsys.readouterr()
        assert captured.out == ""
        assert "Batch done" in captured.err
        assert "command" in captured.err

    def test_level_filters(self, capsys):
        setup_logging("ERROR")

        structlog.get_logger("test").warning("Hidden")

        assert "Hidden" not in capsys.readouterr().err
        assert logging.getLogger().level == logging.ERROR
