"""Deciding which permutations come from convex permutominoes, and their fibers.

A permutation p is the odd-vertex permutation (pi1) of some convex permutomino
iff its lower envelope is lower unimodal and p is indecomposable.  When it is,
the whole fiber of permutominoes over p has size 2^|F(p)| where F(p) is the set
of free fixed points: fixed points on the strictly increasing part of the upper
envelope, other than 1 and n.  Each choice of alpha/gamma typing for the free
fixed points gives one permutomino of the fiber.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from . import perms
from .boundary import (
    EMPTY,
    GAMMA,
    Permutomino,
    from_boundary_word,
    permutomino_from_matrix,
    reentrant_matrix,
)
from .errors import NotAssociated

OK = "ok"
NOT_UNIMODAL = "lower-envelope-not-unimodal"
DECOMPOSABLE = "decomposable"


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of the membership test, with a witness on failure.

    reason is 'ok', 'lower-envelope-not-unimodal' (witness: three (position,
    value) pairs of the lower envelope forming an ascent before a descent), or
    'decomposable' (witness: the leftmost split position).
    """

    member: bool
    reason: str
    witness: tuple | int | None = None


def _unimodality_witness(entries: Sequence[tuple[int, int]]):
    """Three entries v_a < v_b > v_c at increasing indices, or None if unimodal."""
    values = [v for _, v in entries]
    ascent = None
    for i in range(len(values) - 1):
        if ascent is None:
            if values[i] < values[i + 1]:
                ascent = i
        elif values[i] > values[i + 1]:
            return (entries[ascent], entries[i], entries[i + 1])
    return None


def membership_verdict(p: Sequence[int]) -> MembershipVerdict:
    """Full membership test for 'p is pi1 of some convex permutomino'.

    For n = 1 the answer is yes (the empty permutomino).
    """
    p = perms.as_perm(p)
    witness = _unimodality_witness(envelope_lower_entries(p))
    if witness is not None:
        return MembershipVerdict(False, NOT_UNIMODAL, witness)
    splits = perms.split_points(p)
    if splits:
        return MembershipVerdict(False, DECOMPOSABLE, min(splits))
    return MembershipVerdict(True, OK)


def envelope_lower_entries(p: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return perms.envelopes(p).lower.entries


def is_associated(p: Sequence[int]) -> bool:
    """True iff p is the odd-vertex permutation of some convex permutomino."""
    return membership_verdict(p).member


def is_associated_pi2(p: Sequence[int]) -> bool:
    """True iff p is the even-vertex permutation of some convex permutomino.

    Equivalent to the reversal of p being odd-vertex realizable.
    """
    return is_associated(perms.reversal(p))


@dataclass(frozen=True)
class FreeFixedPoints:
    """Values f with p(f) = f on the increasing part of the upper envelope, f not in {1, n}."""

    points: frozenset[int]

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(sorted(self.points))


def free_fixed_points(p: Sequence[int]) -> FreeFixedPoints:
    p = perms.as_perm(p)
    verdict = membership_verdict(p)
    if not verdict.member:
        raise NotAssociated(f"{p} is not realizable ({verdict.reason})")
    return FreeFixedPoints(frozenset(_free_fixed_values(p)))


def _free_fixed_values(p: Sequence[int]) -> list[int]:
    # f is free iff p(f) = f, 1 < f < n, and f is a left-right maximum
    n = len(p)
    out = []
    running_max = 0
    for i in range(n):
        v = p[i]
        if v == i + 1 and 1 < v < n and running_max < v:
            out.append(v)
        running_max = max(running_max, v)
    return out


def canonical_permutomino(p: Sequence[int]) -> Permutomino:
    """The fiber representative with every free fixed point typed alpha.

    Built as four boundary chains: the north-then-east climb through the
    increasing upper envelope (A to B), south-then-east through its decreasing
    part (B to C), and the mirrored walks through the lower envelope (C to D
    to A).  Raises NotAssociated when p fails the membership test; p = (1)
    gives the empty permutomino.
    """
    p = perms.as_perm(p)
    verdict = membership_verdict(p)
    if not verdict.member:
        raise NotAssociated(f"{p} is not realizable ({verdict.reason})")
    n = len(p)
    if n == 1:
        return EMPTY

    env = perms.envelopes(p)
    rising = perms.extrema(p, "lr-max").entries  # A .. B along the upper envelope
    falling = perms.extrema(p, "rl-max").entries  # B .. C
    low = env.lower.entries
    pivot = next(i for i, (_, v) in enumerate(low) if v == 1)
    sinking = low[: pivot + 1]  # A .. D along the lower envelope
    climbing = low[pivot:]  # D .. C

    parts: list[str] = []
    # D up to A through the decreasing lower entries, right to left
    for (lpos, lval), (rpos, rval) in zip(reversed(sinking[:-1]), reversed(sinking[1:])):
        parts.append("N" * (lval - rval) + "W" * (rpos - lpos))
    # A up to B through the increasing upper entries
    for (lpos, lval), (rpos, rval) in zip(rising, rising[1:]):
        parts.append("N" * (rval - lval) + "E" * (rpos - lpos))
    # B down to C through the decreasing upper entries
    for (lpos, lval), (rpos, rval) in zip(falling, falling[1:]):
        parts.append("S" * (lval - rval) + "E" * (rpos - lpos))
    # C down to D through the increasing lower entries, right to left
    for (lpos, lval), (rpos, rval) in zip(reversed(climbing[:-1]), reversed(climbing[1:])):
        parts.append("S" * (rval - lval) + "W" * (rpos - lpos))

    result = from_boundary_word("".join(parts))
    assert result.pi1 == p and result.is_convex
    return result


def fiber(p: Sequence[int]) -> set[Permutomino]:
    """All convex permutominoes whose odd-vertex permutation is p.

    Exactly 2^|F(p)| of them: the canonical matrix with each subset of the free
    fixed points retyped from alpha to gamma, rebuilt from the matrix.
    """
    p = perms.as_perm(p)
    if len(p) == 1:
        return {EMPTY}
    canonical = canonical_permutomino(p)
    free = _free_fixed_values(p)
    if not free:
        return {canonical}
    base = reentrant_matrix(canonical)
    size = len(p)
    out = set()
    for k in range(len(free) + 1):
        for chosen in combinations(free, k):
            retyped = base.retyped({(f, f): GAMMA for f in chosen})
            out.add(permutomino_from_matrix(retyped, size))
    assert len(out) == 2 ** len(free)
    return out
