"""Shared fixtures: small fields, catalog algebras and a CLI runner."""

import io
import json
from dataclasses import dataclass

import pytest

from restricted_lie.catalog.families import lie_representative
from restricted_lie.cli.commands import app
from restricted_lie.substrate.fields import field_make


@dataclass
class CliResult:
    """Exit code and captured streams of one CLI invocation."""

    exit_code: int
    stdout: str
    stderr: str

    def json(self):
        return json.loads(self.stdout)


@pytest.fixture
def f2():
    return field_make(2)


@pytest.fixture
def f3():
    return field_make(3)


@pytest.fixture
def f4():
    return field_make(2, 2)


@pytest.fixture
def f5():
    return field_make(5)


@pytest.fixture
def f7():
    return field_make(7)


@pytest.fixture
def f9():
    return field_make(3, 2)


@pytest.fixture
def l2_f2(f2):
    """L2 ([w,x] = y) over F_2."""
    return lie_representative("L2", None, f2)


@pytest.fixture
def l2_f3(f3):
    return lie_representative("L2", None, f3)


@pytest.fixture
def gl2_f3(f3):
    return lie_representative("gl2", None, f3)


@pytest.fixture
def gl2_f5(f5):
    return lie_representative("gl2", None, f5)


@pytest.fixture
def run_cli():
    """Run the CLI in-process with an empty environment."""

    def run(*argv, environ=None):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = app.run(
            list(argv), environ=environ or {}, stdout=stdout, stderr=stderr
        )
        return CliResult(code, stdout.getvalue(), stderr.getvalue())

    return run


@pytest.fixture
def algebra_file(tmp_path):
    """Write algebra-file text to a temporary path."""

    def write(text, name="algebra.lie"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return write
