"""When two parameter values of the same row give isomorphic structures.

Only the rows with a continuous parameter need a predicate: L2.15 and L4.11
(lam ranges over the field) and L6.1 (the pair (xi, eta) up to the action of
the symmetric group on the three weights of w).
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Mapping

from ..errors import GuardrailError, UsageError, ValidationError
from ..substrate.fields import MAX_FIELD_ORDER, FiniteField, field_make
from .families import ParamValue, bind_params
from .rows import get_row

Pair = tuple[int, int]


def swap_first(lie_field: FiniteField, pair: Pair) -> Pair:
    """Exchange the weights of x and y, then rescale w."""
    xi, eta = pair
    inverse = lie_field.inv(xi)
    return inverse, lie_field.mul(inverse, eta)


def swap_last(_: FiniteField, pair: Pair) -> Pair:
    """Exchange the weights of y and z."""
    return pair[1], pair[0]


# Words in the two transpositions, one per element of S3
S3_WORDS: tuple[tuple[str, ...], ...] = (
    (),
    ("a",),
    ("b",),
    ("a", "b"),
    ("b", "a"),
    ("a", "b", "a"),
)
_GENERATORS: dict[str, Callable[[FiniteField, Pair], Pair]] = {
    "a": swap_first,
    "b": swap_last,
}


def act(lie_field: FiniteField, word: tuple[str, ...], pair: Pair) -> Pair:
    """Apply a word in the generators, rightmost letter first."""
    result = pair
    for letter in reversed(word):
        result = _GENERATORS[letter](lie_field, result)
    return result


def s3_orbit(lie_field: FiniteField, pair: Pair) -> frozenset[Pair]:
    return frozenset(act(lie_field, word, pair) for word in S3_WORDS)


def _lambda_relation(lie_field: FiniteField, first: int, second: int) -> bool:
    p = lie_field.p

    def side(a: int, b: int) -> int:
        twisted = lie_field.add(lie_field.pow(b, p - 1), 1)
        return lie_field.mul(
            lie_field.pow(a, p * (p - 1)), lie_field.pow(twisted, p + 1)
        )

    return side(first, second) == side(second, first)


def _projective_relation(lie_field: FiniteField, first: int, second: int) -> bool:
    """Is (1, first) a multiple of A (1, second) for some A in GL2(F_p)?"""
    p = lie_field.p
    prime = range(p)
    in_prime_first = first < p
    in_prime_second = second < p
    # GL2(F_p) acts transitively on the F_p-rational points and preserves them
    if in_prime_first and in_prime_second:
        return True
    if in_prime_first != in_prime_second:
        return False
    if p**4 > MAX_FIELD_ORDER:
        raise GuardrailError(f"Enumerating GL2(F_{p}) exceeds the bound 2^20")
    for a, b, c, d in itertools.product(prime, repeat=4):
        if (a * d - b * c) % p == 0:
            continue
        head = lie_field.add(a, lie_field.mul(b, second))
        if head == 0:
            continue
        tail = lie_field.add(c, lie_field.mul(d, second))
        if lie_field.div(tail, head) == first:
            return True
    return False


def equivalence(
    row_id: str,
    first: Mapping[str, ParamValue],
    second: Mapping[str, ParamValue],
    p: int,
    lie_field: FiniteField | None = None,
) -> bool:
    """True iff the two parameter values give isomorphic restricted algebras
    over the algebraic closure.

    Args:
        row_id: One of ``L2.15``, ``L4.11``, ``L6.1``
        first: Parameters of the first instance
        second: Parameters of the second instance
        p: Characteristic
        lie_field: Field the parameters live in (default F_p)

    Raises:
        UsageError: If the row has no equivalence predicate
        ValidationError: If the field does not have characteristic p
    """
    row = get_row(row_id)
    if not row.has_equivalence:
        raise UsageError(
            f"Row {row_id} has no equivalence predicate. Supported: L2.15, L4.11, L6.1"
        )
    target = lie_field if lie_field is not None else field_make(p)
    if target.p != p:
        raise ValidationError(f"Field {target} does not have characteristic {p}")
    one = bind_params(row.param_names, first, target, row_id)
    two = bind_params(row.param_names, second, target, row_id)

    if row_id == "L2.15":
        return _lambda_relation(target, one["lam"], two["lam"])
    if row_id == "L4.11":
        return _projective_relation(target, one["lam"], two["lam"])
    if 0 in (one["xi"], one["eta"], two["xi"], two["eta"]):
        raise ValidationError("L6.1 parameters must be nonzero")
    return (two["xi"], two["eta"]) in s3_orbit(target, (one["xi"], one["eta"]))
