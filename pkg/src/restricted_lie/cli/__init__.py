"""Command-line surface: subcommands, reports and exit codes."""

from .app import CliApp, Command, Context
from .commands import app
from .main import main
from .report import Report, error_payload, inputs_digest

__all__ = [
    "CliApp",
    "Command",
    "Context",
    "Report",
    "app",
    "error_payload",
    "inputs_digest",
    "main",
]
