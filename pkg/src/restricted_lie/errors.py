"""Exception hierarchy and process exit codes."""

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class RestrictedLieError(Exception):
    """Base exception carrying the exit code the CLI should use."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_CHECK_FAILED,
        error_code: str | None = None,
    ) -> None:
        """Initialize error.

        Args:
            message: Error message
            exit_code: Process exit code for the CLI
            error_code: Optional short machine-readable code
        """
        super().__init__(message)
        self.message = message
        self.exit_code = exit_code
        self.error_code = error_code


class UsageError(RestrictedLieError):
    """Bad input from the caller (exit 2)."""

    def __init__(
        self, message: str = "Usage error", error_code: str | None = None
    ) -> None:
        super().__init__(message, exit_code=EXIT_USAGE, error_code=error_code)


class ValidationError(UsageError):
    """A value violates a declared rule."""

    def __init__(
        self, message: str = "Validation failed", error_code: str | None = None
    ) -> None:
        super().__init__(message, error_code=error_code or "validation")


class CharacteristicError(ValidationError):
    """A family or catalog row is not valid in the requested characteristic."""

    def __init__(self, message: str, error_code: str | None = None) -> None:
        super().__init__(message, error_code=error_code or "characteristic")


class NotAnAutomorphismError(ValidationError):
    """A matrix that was required to be an automorphism is not one."""

    def __init__(self, message: str = "Matrix is not an automorphism") -> None:
        super().__init__(message, error_code="not-automorphism")


class ParseError(UsageError):
    """Syntax error in an algebra file, with its location."""

    def __init__(self, message: str, line: int, column: int = 1) -> None:
        """Initialize parse error.

        Args:
            message: What went wrong
            line: 1-based line number
            column: 1-based column number
        """
        super().__init__(f"{line}:{column}: {message}", error_code="parse")
        self.line = line
        self.column = column
        self.reason = message


class GuardrailError(RestrictedLieError):
    """An enumeration bound would be exceeded."""

    def __init__(self, message: str) -> None:
        super().__init__(message, exit_code=EXIT_CHECK_FAILED, error_code="guardrail")


class BudgetExhaustedError(RestrictedLieError):
    """A search ran out of budget before it could conclude."""

    def __init__(
        self, message: str = "Search budget exhausted", explored: int = 0
    ) -> None:
        super().__init__(message, exit_code=EXIT_CHECK_FAILED, error_code="budget")
        self.explored = explored


class CheckFailure(RestrictedLieError):
    """A mathematical check failed."""

    def __init__(self, message: str, findings: list[str] | None = None) -> None:
        super().__init__(message, exit_code=EXIT_CHECK_FAILED, error_code="check")
        self.findings = findings or []
