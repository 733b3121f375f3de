"""Structured JSON logging.

Uses python-json-logger for JSON formatting on top of stdlib logging. Logs go
to stderr so report output on stdout stays machine-readable.
"""

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from pythonjsonlogger.json import JsonFormatter

SERVICE_NAME = "restricted-lie"

_LEVELS = {
    "DEBUG": logging.DEBUG,
    "INFO": logging.INFO,
    "WARNING": logging.WARNING,
    "WARN": logging.WARNING,
    "ERROR": logging.ERROR,
}


class StructuredLogger:
    """Structured JSON logger with a fixed field schema.

    Every entry carries ``timestamp``, ``level``, ``service`` and ``message``;
    an optional ``runId`` correlates the entries of one CLI invocation and any
    extra keyword arguments land under ``context``.
    """

    def __init__(
        self,
        service: str = SERVICE_NAME,
        level: str | int | None = "WARNING",
        install_handler: bool = True,
    ) -> None:
        """Initialize logger.

        Args:
            service: Logger name, also emitted as the ``service`` field
            level: Level name or stdlib level number; None inherits the parent's
            install_handler: Attach the JSON stream handler
        """
        self.service = service
        self._logger = logging.getLogger(service)
        if level is not None:
            self.set_level(level)

        # component loggers reuse the service handler
        if install_handler and not self._logger.handlers:
            handler = logging.StreamHandler(sys.stderr)
            formatter = JsonFormatter(
                "%(timestamp)s %(levelname)s %(service)s %(message)s",
                rename_fields={"levelname": "level"},
                timestamp=True,
            )
            handler.setFormatter(formatter)
            self._logger.addHandler(handler)
            self._logger.propagate = False

    def set_level(self, level: str | int) -> None:
        """Change the threshold; unknown names fall back to WARNING."""
        if isinstance(level, str):
            level = _LEVELS.get(level.upper(), logging.WARNING)
        self._logger.setLevel(level)

    def is_enabled_for(self, level: int) -> bool:
        return self._logger.isEnabledFor(level)

    def _log(
        self,
        level: int,
        message: str,
        run_id: str | None = None,
        **context: Any,
    ) -> None:
        if not self._logger.isEnabledFor(level):
            return

        extra: dict[str, Any] = {"service": self.service}

        if run_id:
            extra["runId"] = run_id

        if context:
            extra["context"] = context

        self._logger.log(level, message, extra=extra)

    def debug(self, message: str, run_id: str | None = None, **context: Any) -> None:
        self._log(logging.DEBUG, message, run_id, **context)

    def info(self, message: str, run_id: str | None = None, **context: Any) -> None:
        self._log(logging.INFO, message, run_id, **context)

    def warn(self, message: str, run_id: str | None = None, **context: Any) -> None:
        self._log(logging.WARNING, message, run_id, **context)

    def error(self, message: str, run_id: str | None = None, **context: Any) -> None:
        self._log(logging.ERROR, message, run_id, **context)


_loggers: dict[str, StructuredLogger] = {}


def get_logger(component: str) -> StructuredLogger:
    """Return the shared logger for a library component.

    Component loggers are children of the service logger, so the level set on
    the service logger applies to all of them.
    """
    name = f"{SERVICE_NAME}.{component.rsplit('.', 1)[-1]}"
    if name not in _loggers:
        _loggers[name] = StructuredLogger(name, level=None, install_handler=False)
    return _loggers[name]


def configure(level: str | int) -> StructuredLogger:
    """Install the JSON handler on the service logger and set its level."""
    return StructuredLogger(SERVICE_NAME, level)


@contextmanager
def log_timing(
    logger: StructuredLogger,
    operation: str,
    run_id: str | None = None,
    **context: Any,
) -> Iterator[dict[str, Any]]:
    """Log an operation starting, then completing or failing, with its duration.

    The yielded dict collects result fields that are added to the completion
    entry. ``context`` goes on the start entry only.
    """
    started = time.perf_counter()
    outcome: dict[str, Any] = {}

    logger.info(f"{operation} started", run_id=run_id, **context)

    try:
        yield outcome
    except Exception as exc:
        logger.error(
            f"{operation} failed",
            run_id=run_id,
            duration=_elapsed_ms(started),
            error=str(exc),
            error_type=type(exc).__name__,
        )
        raise

    logger.info(
        f"{operation} completed",
        run_id=run_id,
        duration=_elapsed_ms(started),
        **outcome,
    )


def _elapsed_ms(started: float) -> int:
    return int((time.perf_counter() - started) * 1000)
