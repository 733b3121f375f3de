"""Conjugacy invariants of p-maps: dimensions of iterated image spans.

For a subspace V and r >= 1, V^{[p]^r} is the span of {v^{[p]^r} : v in V}.
The map is not additive, so every element of V is pushed through it, not
just a basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import GuardrailError, ValidationError
from ..lie_core.structure import center, derived
from ..substrate.fields import MAX_SCAN_ORDER, Vector
from ..substrate.linalg import Subspace
from .pmap import PSemilinearMap, RestrictedLieAlgebra

SPACES = ("L", "Z", "LL")
DEFAULT_DEPTH = 3


@dataclass(frozen=True)
class InvariantProfile:
    """``dims[r-1]`` is (dim L^{[p]^r}, dim Z(L)^{[p]^r}, dim [L,L]^{[p]^r})."""

    r_max: int
    dims: tuple[tuple[int, int, int], ...]

    def dim(self, space: str, r: int = 1) -> int:
        if space not in SPACES:
            supported = ", ".join(SPACES)
            raise ValidationError(f"Unknown space '{space}'. Supported: {supported}")
        if not 1 <= r <= self.r_max:
            raise ValidationError(f"Depth {r} outside 1..{self.r_max}")
        return self.dims[r - 1][SPACES.index(space)]

    def triple(self) -> tuple[int, int, int]:
        """(dim L^[p], dim Z^[p], dim [L,L]^[p])."""
        return self.dims[0]

    def column(self, space: str) -> tuple[int, ...]:
        return tuple(self.dim(space, r) for r in range(1, self.r_max + 1))


class _Iterator:
    """Memoized p-th powers of a map."""

    def __init__(self, pmap: PSemilinearMap) -> None:
        self.pmap = pmap
        self.memo: dict[Vector, Vector] = {}

    def __call__(self, v: Vector) -> Vector:
        image = self.memo.get(v)
        if image is None:
            image = self.pmap.evaluate_vector(v)
            self.memo[v] = image
        return image


def _image_dims(step: _Iterator, space: Subspace, r_max: int) -> list[int]:
    if space.field.q**space.dim > MAX_SCAN_ORDER:
        raise GuardrailError(
            f"Image spans need {space.field.q}^{space.dim} evaluations, "
            "over the bound 2^16"
        )
    current = set(space.elements())
    dims = []
    for _ in range(r_max):
        current = {step(v) for v in current}
        dims.append(Subspace.span(space.field, space.n, current).dim)
    return dims


def _as_pmap(target: RestrictedLieAlgebra | PSemilinearMap) -> PSemilinearMap:
    return target.pmap if isinstance(target, RestrictedLieAlgebra) else target


def invariant_profile(
    target: RestrictedLieAlgebra | PSemilinearMap, r_max: int = DEFAULT_DEPTH
) -> InvariantProfile:
    """Iterated image-span dimensions of L, Z(L) and [L,L].

    Raises:
        GuardrailError: If q^dim L exceeds 2^16
    """
    if r_max < 1:
        raise ValidationError(f"Profile depth must be positive, got {r_max}")
    pmap = _as_pmap(target)
    algebra = pmap.algebra
    step = _Iterator(pmap)
    spaces = (
        Subspace.full(algebra.field, algebra.dim),
        center(algebra),
        derived(algebra),
    )
    columns = [_image_dims(step, space, r_max) for space in spaces]
    dims = tuple(
        (columns[0][r], columns[1][r], columns[2][r]) for r in range(r_max)
    )
    return InvariantProfile(r_max, dims)


def is_nilpotent_map(target: RestrictedLieAlgebra | PSemilinearMap) -> bool:
    """True iff every element of L over the field of definition is sent to 0
    by some iterate of the map.

    Raises:
        GuardrailError: If q^dim L exceeds 2^16
    """
    pmap = _as_pmap(target)
    algebra = pmap.algebra
    full = Subspace.full(algebra.field, algebra.dim)
    if algebra.field.q**algebra.dim > MAX_SCAN_ORDER:
        raise GuardrailError(
            f"Nilpotence test needs {algebra.field.q}^{algebra.dim} evaluations, "
            "over the bound 2^16"
        )
    step = _Iterator(pmap)
    zero = (0,) * algebra.dim
    # f(L) contains f(f(L)), so the image sets shrink until they stabilize
    current = {step(v) for v in full.elements()}
    while True:
        following = {step(v) for v in current}
        if following == current:
            return current == {zero}
        current = following
