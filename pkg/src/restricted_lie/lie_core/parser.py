"""Reader and writer for the line-oriented algebra file format.

Example::

    # L2 over F_2
    p = 2
    dim = 4
    basis = x y z w
    [w,x] = y
    pmap w = y

A linear combination is a sum of ``<coeff>*<name>`` terms; the coefficient
may be omitted (1), written as an integer (reduced mod p), as ``g^e`` for the
canonical generator of F_{p^k}, or as a product of these. Catalog image
strings may also mention parameters such as ``xi`` or ``lam``.
"""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field

from ..errors import ParseError, RestrictedLieError
from ..substrate.fields import FiniteField, Vector, field_make
from ..validation import Field, validate_mapping
from .algebra import NAME_PATTERN, LieAlgebra, format_combination

_TOKEN = re.compile(
    rf"\s*(?:(?P<int>\d+)|(?P<name>{NAME_PATTERN})|(?P<sym>[\[\],=+\-*^]))"
)

HEADER_SCHEMA = {
    "p": Field(type=int, min_value=2),
    "k": Field(type=int, required=False, min_value=1, max_value=20),
    "dim": Field(type=int, min_value=1, max_value=8),
    "basis": Field(type=tuple, min_length=1, max_length=8),
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


@dataclass(frozen=True)
class AlgebraDocument:
    """A parsed algebra file: the algebra plus any declared p-map images."""

    algebra: LieAlgebra
    pmap_images: dict[int, Vector] | None = None
    header: dict[str, object] = field(default_factory=dict)

    @property
    def has_pmap(self) -> bool:
        return self.pmap_images is not None


def tokenize(text: str, line: int) -> list[Token]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if match is None or match.end() == position:
            offset = len(stripped) - len(stripped[position:].lstrip())
            character = stripped[offset]
            raise ParseError(f"Unexpected character '{character}'", line, offset + 1)
        kind = match.lastgroup or "sym"
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), start + 1))
        position = match.end()
    return tokens


class _Cursor:
    def __init__(self, tokens: list[Token], line: int, width: int) -> None:
        self.tokens = tokens
        self.line = line
        self.position = 0
        self.width = width

    def peek(self) -> Token | None:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def next(self, expected: str | None = None) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError(
                f"Unexpected end of line, expected {expected or 'more input'}",
                self.line,
                self.width + 1,
            )
        if expected is not None and token.text != expected and token.kind != expected:
            raise ParseError(
                f"Expected '{expected}', got '{token.text}'", self.line, token.column
            )
        self.position += 1
        return token

    def at_end(self) -> bool:
        return self.position >= len(self.tokens)


def _parse_exponent(cursor: _Cursor) -> int:
    token = cursor.peek()
    if token is None or token.text != "^":
        return 1
    cursor.next("^")
    sign = 1
    token = cursor.peek()
    if token is not None and token.text == "-":
        cursor.next("-")
        sign = -1
    return sign * int(cursor.next("int").text)


def _parse_combination(
    cursor: _Cursor,
    lie_field: FiniteField,
    names: Sequence[str],
    params: Mapping[str, int],
) -> Vector:
    coordinates = [0] * len(names)
    first = True
    token = cursor.peek()
    if token is None:
        raise ParseError("Empty linear combination", cursor.line, cursor.width + 1)
    if token.text == "0" and len(cursor.tokens) == cursor.position + 1:
        cursor.next()
        return tuple(coordinates)

    while not cursor.at_end():
        sign = 1
        token = cursor.peek()
        assert token is not None
        if token.text in "+-" and token.kind == "sym":
            cursor.next()
            sign = -1 if token.text == "-" else 1
        elif not first:
            raise ParseError(
                f"Expected '+' or '-', got '{token.text}'", cursor.line, token.column
            )
        first = False

        coefficient = 1
        while True:
            token = cursor.next()
            if token.kind == "int":
                factor = lie_field.from_int(int(token.text))
                coefficient = lie_field.mul(coefficient, factor)
            elif token.kind == "name" and token.text == "g":
                power = lie_field.pow(lie_field.generator, _parse_exponent(cursor))
                coefficient = lie_field.mul(coefficient, power)
            elif token.kind == "name" and token.text in params:
                power = lie_field.pow(params[token.text], _parse_exponent(cursor))
                coefficient = lie_field.mul(coefficient, power)
            elif token.kind == "name" and token.text in names:
                index = names.index(token.text)
                value = coefficient if sign == 1 else lie_field.neg(coefficient)
                coordinates[index] = lie_field.add(coordinates[index], value)
                break
            elif token.kind == "name":
                raise ParseError(
                    f"Unknown basis name '{token.text}'", cursor.line, token.column
                )
            else:
                raise ParseError(
                    f"Unexpected '{token.text}'", cursor.line, token.column
                )
            following = cursor.peek()
            if following is not None and following.text == "*":
                cursor.next("*")
    return tuple(coordinates)


def parse_combination(
    text: str,
    lie_field: FiniteField,
    names: Sequence[str],
    params: Mapping[str, int] | None = None,
    line: int = 1,
) -> Vector:
    """Coordinates of a linear combination such as ``"y + lam*z"``."""
    params = dict(params or {})
    clash = set(params) & set(names)
    if clash:
        raise ParseError(
            f"Parameter names clash with basis names: {sorted(clash)}", line
        )
    tokens = tokenize(text, line)
    if not tokens:
        raise ParseError("Empty linear combination", line)
    cursor = _Cursor(tokens, line, len(text))
    return _parse_combination(cursor, lie_field, tuple(names), params)


def _header_value(key: str, cursor: _Cursor) -> object:
    if key == "basis":
        names = []
        while not cursor.at_end():
            names.append(cursor.next("name").text)
        return tuple(names)
    token = cursor.next("int")
    if not cursor.at_end():
        extra = cursor.peek()
        assert extra is not None
        raise ParseError(
            f"Unexpected '{extra.text}' after value", cursor.line, extra.column
        )
    return int(token.text)


def parse_document(text: str) -> AlgebraDocument:
    """Parse an algebra file, including any ``pmap`` lines.

    Raises:
        ParseError: On syntax errors, unknown or duplicate declarations and
            invalid header values; the error carries the line and column
    """
    header: dict[str, object] = {}
    header_lines: dict[str, int] = {}
    brackets: dict[tuple[int, int], Vector] = {}
    pmap: dict[int, Vector] | None = None
    lie_field: FiniteField | None = None
    names: tuple[str, ...] = ()

    def require_header(line: int) -> tuple[FiniteField, tuple[str, ...]]:
        nonlocal lie_field, names
        if lie_field is not None:
            return lie_field, names
        for key in ("p", "dim", "basis"):
            if key not in header:
                raise ParseError(f"Missing header '{key}' before declarations", line)
        try:
            validate_mapping(HEADER_SCHEMA, header)
        except RestrictedLieError as e:
            raise ParseError(e.message, line) from e
        basis = header["basis"]
        assert isinstance(basis, tuple)
        if len(basis) != header["dim"]:
            raise ParseError(
                f"basis lists {len(basis)} names but dim = {header['dim']}",
                header_lines["basis"],
            )
        try:
            p, k = header["p"], header.get("k", 1)
            lie_field = field_make(int(p), int(k))  # type: ignore[call-overload]
        except RestrictedLieError as e:
            raise ParseError(e.message, header_lines["p"]) from e
        names = basis
        return lie_field, names

    for line_number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = tokenize(content, line_number)
        if not tokens:
            continue
        cursor = _Cursor(tokens, line_number, len(content.rstrip()))
        first = tokens[0]

        if first.kind == "name" and first.text in HEADER_SCHEMA and (
            len(tokens) > 1 and tokens[1].text == "="
        ):
            if lie_field is not None:
                raise ParseError(
                    f"Header '{first.text}' after declarations",
                    line_number,
                    first.column,
                )
            if first.text in header:
                raise ParseError(
                    f"Duplicate header '{first.text}'", line_number, first.column
                )
            cursor.next()
            cursor.next("=")
            header[first.text] = _header_value(first.text, cursor)
            header_lines[first.text] = line_number
            continue

        if first.text == "[":
            current_field, current_names = require_header(line_number)
            cursor.next("[")
            left = cursor.next("name")
            cursor.next(",")
            right = cursor.next("name")
            cursor.next("]")
            cursor.next("=")
            for token in (left, right):
                if token.text not in current_names:
                    raise ParseError(
                        f"Unknown basis name '{token.text}'", line_number, token.column
                    )
            i, j = current_names.index(left.text), current_names.index(right.text)
            if i == j:
                raise ParseError(
                    f"Bracket [{left.text},{right.text}] of a basis vector with itself",
                    line_number,
                    left.column,
                )
            if (i, j) in brackets or (j, i) in brackets:
                raise ParseError(
                    f"Duplicate bracket declaration [{left.text},{right.text}]",
                    line_number,
                    first.column,
                )
            brackets[(i, j)] = _parse_combination(
                cursor, current_field, current_names, {}
            )
            continue

        if first.kind == "name" and first.text == "pmap":
            current_field, current_names = require_header(line_number)
            cursor.next()
            target = cursor.next("name")
            if target.text not in current_names:
                raise ParseError(
                    f"Unknown basis name '{target.text}'", line_number, target.column
                )
            cursor.next("=")
            pmap = pmap if pmap is not None else {}
            index = current_names.index(target.text)
            if index in pmap:
                raise ParseError(
                    f"Duplicate pmap declaration for '{target.text}'",
                    line_number,
                    target.column,
                )
            pmap[index] = _parse_combination(cursor, current_field, current_names, {})
            continue

        raise ParseError(
            f"Unrecognized line starting with '{first.text}'", line_number, first.column
        )

    final_field, final_names = require_header(len(text.splitlines()) or 1)
    structure = LieAlgebra.from_brackets(
        final_field,
        final_names,
        {(final_names[i], final_names[j]): v for (i, j), v in brackets.items()},
    )
    return AlgebraDocument(structure, pmap, header)


def parse_algebra(text: str) -> LieAlgebra:
    """Parse an algebra file into a LieAlgebra (p-map lines are ignored)."""
    return parse_document(text).algebra


def format_algebra(
    algebra: LieAlgebra, pmap_images: Sequence[Vector] | None = None
) -> str:
    """Write an algebra (and optionally p-map images) in the file format."""
    lie_field = algebra.field
    lines = []
    if algebra.name:
        lines.append(f"# {algebra.name}")
    lines.append(f"p = {lie_field.p}")
    if lie_field.k > 1:
        lines.append(f"k = {lie_field.k}")
    lines.append(f"dim = {algebra.dim}")
    lines.append(f"basis = {' '.join(algebra.basis_names)}")
    names = algebra.basis_names
    for i, j, vector in algebra.relations():
        combination = format_combination(lie_field, names, vector)
        lines.append(f"[{names[i]},{names[j]}] = {combination}")
    if pmap_images is not None:
        for index, image in enumerate(pmap_images):
            if any(image):
                combination = format_combination(lie_field, names, image)
                lines.append(f"pmap {names[index]} = {combination}")
    return "\n".join(lines) + "\n"
