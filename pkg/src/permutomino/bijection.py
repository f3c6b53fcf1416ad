"""Decomposable square permutations vs sequences of permutominoes.

A square permutation splitting into k >= 2 indecomposable components
corresponds to exactly one sequence (P_1, ..., P_k) where P_1 and P_k are
directed convex permutominoes, the middle parts are parallelogram ones, any
part may be the empty size-1 permutomino, and the sizes add up to n.

Forward, each part contributes one component: the empty part gives (1), a
non-final part gives the reversal of its even-vertex permutation (the
odd-vertex permutation of its mirror image across the vertical axis), and the
final part gives the complement (mirror across the horizontal axis).  The
components are then stacked with the direct difference.  Backward, each
component's fiber is reflected and the unique part of the right class picked
out.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from . import perms
from .boundary import EMPTY, Permutomino, reflect_x, reflect_y
from .errors import Indecomposable, InvalidSequence, NotSquare
from .membership import fiber


@dataclass(frozen=True)
class PermutominoSequence:
    """An ordered tuple of k >= 2 parts with the end/middle class constraints."""

    parts: tuple[Permutomino, ...]

    def __post_init__(self):
        validate_sequence(self.parts)

    @property
    def total_size(self) -> int:
        return sum(p.size for p in self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def validate_sequence(parts: Sequence[Permutomino]) -> None:
    if len(parts) < 2:
        raise InvalidSequence("need at least two parts")
    for i, part in enumerate(parts):
        if part.size == 1:
            continue  # empty parts are allowed anywhere
        if i in (0, len(parts) - 1):
            if not part.flags["directed"]:
                raise InvalidSequence(f"part {i + 1} must be directed convex (or empty)")
        elif not part.flags["parallelogram"]:
            raise InvalidSequence(f"part {i + 1} must be parallelogram (or empty)")


def component_of(part: Permutomino, last: bool) -> tuple[int, ...]:
    """The permutation a single part contributes."""
    if part.size == 1:
        return (1,)
    return perms.complement(part.pi2) if last else perms.reversal(part.pi2)


def sequence_to_permutation(seq: PermutominoSequence | Sequence[Permutomino]) -> tuple[int, ...]:
    """Stack the parts' components: a square permutation with exactly k components."""
    parts = tuple(seq.parts if isinstance(seq, PermutominoSequence) else seq)
    validate_sequence(parts)
    k = len(parts)
    components = [component_of(p, last=(i == k - 1)) for i, p in enumerate(parts)]
    result = reduce(perms.direct_difference, components)
    assert perms.is_square(result) and len(perms.decompose(result)) == k
    return result


def _unique_part(component: tuple[int, ...], last: bool, middle: bool) -> Permutomino:
    if component == (1,):
        return EMPTY
    reflect = reflect_x if last else reflect_y
    wanted = "parallelogram" if middle else "directed"
    candidates = [q for q in (reflect(p) for p in fiber(component)) if q.flags[wanted]]
    if len(candidates) != 1:
        raise AssertionError(
            f"expected exactly one {wanted} permutomino for component {component}, "
            f"got {len(candidates)}"
        )
    return candidates[0]


def permutation_to_sequence(p: Sequence[int]) -> PermutominoSequence:
    """Inverse map: split p into indecomposables and realize each as a part.

    Raises NotSquare / Indecomposable when p is outside the bijection's domain.
    """
    p = perms.as_perm(p)
    if not perms.is_square(p):
        raise NotSquare(f"{p} is not square")
    components = perms.decompose(p)
    k = len(components)
    if k < 2:
        raise Indecomposable(f"{p} does not split")
    parts = tuple(
        _unique_part(comp, last=(i == k - 1), middle=(0 < i < k - 1))
        for i, comp in enumerate(components)
    )
    return PermutominoSequence(parts)
