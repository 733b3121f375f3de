"""Rule-based checks for algebra-file headers, settings and catalog imports."""

import re
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from .errors import ValidationError


@dataclass(frozen=True)
class Field:
    """Declared constraints on one named value.

    ``type`` may be a tuple of accepted types. ``bool`` is rejected wherever
    it is not named explicitly, so ``True`` never passes as a dimension.
    Length bounds count items; value bounds are inclusive; ``pattern`` must
    match the whole string.
    """

    type: type | tuple[type, ...]
    required: bool = True
    min_length: int | None = None
    max_length: int | None = None
    min_value: int | float | None = None
    max_value: int | float | None = None
    enum: tuple[Any, ...] | None = None
    pattern: str | None = None

    def validate(self, field_name: str, value: Any) -> None:
        """Raise ``ValidationError`` naming ``field_name`` on the first broken rule."""

        def reject(requirement: str) -> None:
            raise ValidationError(f"Field '{field_name}' {requirement}")

        actual = type(value).__name__
        is_bool = isinstance(value, bool) and bool not in self._types
        if not isinstance(value, self.type) or is_bool:
            reject(f"must be {self._type_name()}, got {actual}")

        if self.min_length is not None or self.max_length is not None:
            size = len(value)
            if self.min_length is not None and size < self.min_length:
                reject(f"must have at least {self.min_length} items")
            if self.max_length is not None and size > self.max_length:
                reject(f"must have at most {self.max_length} items")

        if self.min_value is not None and value < self.min_value:
            reject(f"must be at least {self.min_value}")
        if self.max_value is not None and value > self.max_value:
            reject(f"must be at most {self.max_value}")

        if self.enum is not None and value not in self.enum:
            reject("must be one of: " + ", ".join(str(option) for option in self.enum))

        if (
            isinstance(value, str)
            and self.pattern
            and not re.fullmatch(self.pattern, value)
        ):
            reject("does not match required pattern")

    @property
    def _types(self) -> tuple[type, ...]:
        return self.type if isinstance(self.type, tuple) else (self.type,)

    def _type_name(self) -> str:
        return " or ".join(t.__name__ for t in self._types)


def validate_mapping(schema: Mapping[str, Field], data: Mapping[str, Any]) -> None:
    """Check ``data`` against ``schema``; keys outside the schema are ignored."""
    for name, rule in schema.items():
        if name in data:
            rule.validate(name, data[name])
        elif rule.required:
            raise ValidationError(f"Missing required field: {name}")
