"""Console entry point for ``restricted-lie``."""

from __future__ import annotations

from collections.abc import Sequence

from .commands import app


def main(argv: Sequence[str] | None = None) -> int:
    return app.run(argv)


if __name__ == "__main__":
    raise SystemExit(main())
