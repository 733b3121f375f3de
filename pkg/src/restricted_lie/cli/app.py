"""Subcommand registry, shared flags and the error-to-exit-code boundary."""

from __future__ import annotations

import argparse
import json
import sys
import time
import uuid
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass
from typing import TextIO

from ..config import LOG_LEVELS, Settings, load_settings, parse_ladder
from ..errors import EXIT_CHECK_FAILED, RestrictedLieError
from ..iso_search.search import SearchBudget
from ..logging import configure, get_logger, log_timing
from .report import Report, error_payload

logger = get_logger(__name__)


@dataclass(frozen=True)
class Context:
    """What a handler needs besides its own arguments."""

    settings: Settings
    run_id: str
    as_json: bool

    @property
    def budget(self) -> SearchBudget:
        return self.settings.search_budget()


Handler = Callable[[argparse.Namespace, Context], Report]
Configure = Callable[[argparse.ArgumentParser], None]


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    handler: Handler
    configure: Configure | None = None


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", dest="p", type=int, help="characteristic")
    common.add_argument("-k", dest="k", type=int, help="extension degree of the field")
    common.add_argument("--json", dest="as_json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=int, help="seed for sampling (default 0)")
    common.add_argument(
        "--threads",
        type=int,
        help="accepted and validated (1..256); the library runs single-threaded",
    )
    common.add_argument("--ladder", help="extension degrees to try, e.g. 1,2,4")
    common.add_argument("--budget", type=int, help="maximum candidates per search")
    common.add_argument(
        "--time-limit", dest="time_limit", type=float, help="seconds per search"
    )
    common.add_argument(
        "--allow-broken",
        dest="allow_broken",
        action="store_true",
        help="build presentations that fail the Jacobi identity at p",
    )
    common.add_argument(
        "--log-level",
        dest="log_level",
        type=str.upper,
        choices=LOG_LEVELS,
        help="log threshold",
    )
    return common


class CliApp:
    """Registry of subcommands.

    Handlers return a ``Report``; library errors are turned into exit codes
    here and nowhere else.
    """

    def __init__(self, prog: str, description: str) -> None:
        self.prog = prog
        self.description = description
        self._commands: dict[str, Command] = {}

    def command(
        self, name: str, help: str, configure: Configure | None = None
    ) -> Callable[[Handler], Handler]:
        """Decorator to register a subcommand.

        Example:
            @app.command("orbits", "S3-orbits on pairs of units")
            def orbits(args: argparse.Namespace, ctx: Context) -> Report:
                ...
        """

        def decorator(handler: Handler) -> Handler:
            if name in self._commands:
                raise ValueError(f"Command already registered: {name}")
            self._commands[name] = Command(name, help, handler, configure)
            return handler

        return decorator

    @property
    def commands(self) -> tuple[str, ...]:
        return tuple(self._commands.keys())

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=self.prog, description=self.description)
        subparsers = parser.add_subparsers(
            dest="command", required=True, metavar="COMMAND"
        )
        common = _common_flags()
        for command in self._commands.values():
            sub = subparsers.add_parser(
                command.name, help=command.help, parents=[common]
            )
            if command.configure is not None:
                command.configure(sub)
        return parser

    def run(
        self,
        argv: Sequence[str] | None = None,
        environ: Mapping[str, str] | None = None,
        stdout: TextIO | None = None,
        stderr: TextIO | None = None,
    ) -> int:
        """Parse arguments, run one command and return its exit code."""
        out = stdout if stdout is not None else sys.stdout
        err = stderr if stderr is not None else sys.stderr
        try:
            args = self.build_parser().parse_args(argv)
        except SystemExit as e:
            return int(e.code or 0)

        command = self._commands[args.command]
        as_json = bool(args.as_json)
        try:
            settings = load_settings(environ).with_overrides(
                log_level=args.log_level,
                max_candidates=args.budget,
                time_limit=args.time_limit,
                ladder=parse_ladder(args.ladder) if args.ladder else None,
                threads=args.threads,
                seed=args.seed,
            )
        except RestrictedLieError as e:
            return self._fail(command.name, e, as_json, out, err)

        configure(settings.log_level)
        context = Context(settings, uuid.uuid4().hex[:12], as_json)
        start = time.perf_counter()
        try:
            with log_timing(logger, command.name, context.run_id, p=args.p) as outcome:
                report = command.handler(args, context)
                outcome["passed"] = report.passed
            report.duration_ms = int((time.perf_counter() - start) * 1000)
        except RestrictedLieError as e:
            return self._fail(command.name, e, as_json, out, err)
        except Exception as e:
            logger.error(
                "unexpected error",
                context.run_id,
                error=str(e),
                error_type=type(e).__name__,
            )
            print(f"{command.name}: internal error: {e}", file=err)
            return EXIT_CHECK_FAILED

        print(report.to_json() if as_json else report.format_text(), file=out)
        return report.exit_code

    @staticmethod
    def _fail(
        command: str, error: RestrictedLieError, as_json: bool, out: TextIO, err: TextIO
    ) -> int:
        if as_json:
            payload = error_payload(command, error)
            print(json.dumps(payload, indent=2, sort_keys=True), file=out)
        else:
            print(f"{command}: error: {error.message}", file=err)
            for finding in getattr(error, "findings", []):
                print(f"  {finding}", file=err)
        return error.exit_code
