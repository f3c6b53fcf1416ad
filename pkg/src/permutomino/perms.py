"""Order-theoretic machinery for 1-indexed permutations.

A permutation of size n is a plain tuple whose entries are exactly 1..n;
``p[i-1]`` is the value at position i.  Everything here is pure and works on
immutable values, so results can be shared freely between workers.

The central object is the envelope decomposition: the *upper envelope* of p is
its maximal upper-unimodal sublist (the left-right maxima followed by the
right-left maxima, the value n counted once), and the *lower envelope* is the
complementary sublist together with both endpoints.  Both sublists retain the
positions they came from.  A permutation is *square* when its lower envelope
is lower unimodal; equivalently, when it avoids sixteen forbidden patterns of
length five.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence


def as_perm(values: Iterable[int]) -> tuple[int, ...]:
    """Validate an iterable as a permutation of 1..n and return it as a tuple."""
    p = tuple(int(v) for v in values)
    n = len(p)
    if n < 1:
        raise ValueError("a permutation has size at least 1")
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p!r}")
    return p


def identity(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def reversal(p: Sequence[int]) -> tuple[int, ...]:
    """The reversal: value at position i becomes the value at position n+1-i."""
    return tuple(reversed(p))


def complement(p: Sequence[int]) -> tuple[int, ...]:
    """The complement: every value v is replaced by n+1-v."""
    n = len(p)
    return tuple(n + 1 - v for v in p)


def direct_difference(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Stack a above-left of b: (a1+m', ..., am+m', b1, ..., bm')."""
    shift = len(b)
    return tuple(v + shift for v in a) + tuple(b)


def split_points(p: Sequence[int]) -> set[int]:
    """All r in 1..n-1 such that the length-r prefix holds the top r values.

    Equivalently { r : min(p[0..r-1]) == n-r+1 }; empty iff p is indecomposable
    (not a direct difference of two permutations).
    """
    n = len(p)
    splits = set()
    running_min = n + 1
    for r in range(1, n):
        running_min = min(running_min, p[r - 1])
        if running_min == n - r + 1:
            splits.add(r)
    return splits


def is_indecomposable(p: Sequence[int]) -> bool:
    n = len(p)
    running_min = n + 1
    for r in range(1, n):
        running_min = min(running_min, p[r - 1])
        if running_min == n - r + 1:
            return False
    return True


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    """Relabel distinct values to 1..k preserving order (the pattern of the list)."""
    ranked = sorted(values)
    rank = {v: i + 1 for i, v in enumerate(ranked)}
    return tuple(rank[v] for v in values)


def decompose(p: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """The unique maximal factorization of p as a direct difference of indecomposables.

    Folding the result with direct_difference reproduces p; the result has one
    component iff p is indecomposable.
    """
    n = len(p)
    cuts = sorted(split_points(p)) + [n]
    parts = []
    start = 0
    for cut in cuts:
        parts.append(_standardize(p[start:cut]))
        start = cut
    return tuple(parts)


@dataclass(frozen=True)
class Subsequence:
    """An index-retaining sublist: ordered (position, value) pairs."""

    entries: tuple[tuple[int, int], ...]

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(pos for pos, _ in self.entries)

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(val for _, val in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


_EXTREMA_KINDS = ("lr-max", "rl-max", "lr-min", "rl-min")


def extrema(p: Sequence[int], kind: str) -> Subsequence:
    """Left-right / right-left maxima or minima of p, as an index-retaining sublist.

    kind is one of 'lr-max', 'rl-max', 'lr-min', 'rl-min'.  Right-left scans are
    reported left to right.  The value n is always an lr-max and an rl-max, the
    value 1 always an lr-min and an rl-min.
    """
    if kind not in _EXTREMA_KINDS:
        raise ValueError(f"kind must be one of {_EXTREMA_KINDS}, got {kind!r}")
    n = len(p)
    left_to_right = kind.startswith("lr")
    want_max = kind.endswith("max")
    indices = range(n) if left_to_right else range(n - 1, -1, -1)
    best = None
    out = []
    for i in indices:
        v = p[i]
        if best is None or (v > best if want_max else v < best):
            best = v
            out.append((i + 1, v))
    if not left_to_right:
        out.reverse()
    return Subsequence(tuple(out))


@dataclass(frozen=True)
class Envelopes:
    """The upper/lower envelope decomposition of a permutation.

    upper: the maximal upper-unimodal sublist (lr-maxima then rl-maxima, the
    value n counted once).  lower: positions 1 and n plus every position whose
    value is absent from the upper envelope.  Every position appears in one of
    the two; positions 1 and n appear in both.
    """

    upper: Subsequence
    lower: Subsequence


def envelopes(p: Sequence[int]) -> Envelopes:
    n = len(p)
    lr = extrema(p, "lr-max").entries
    rl = extrema(p, "rl-max").entries
    # lr ends with the entry holding value n, rl starts with it; count it once.
    upper = lr + rl[1:]
    in_upper = {pos for pos, _ in upper}
    lower = [(1, p[0])]
    lower += [(i + 1, p[i]) for i in range(1, n - 1) if (i + 1) not in in_upper]
    if n > 1:
        lower.append((n, p[n - 1]))
    return Envelopes(Subsequence(tuple(upper)), Subsequence(tuple(lower)))


def is_lower_unimodal(values: Sequence[int]) -> bool:
    """True iff the (distinct) values strictly decrease then strictly increase."""
    i = 0
    while i + 1 < len(values) and values[i] > values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] < values[i + 1]:
        i += 1
    return i + 1 >= len(values)


def is_upper_unimodal(values: Sequence[int]) -> bool:
    """True iff the (distinct) values strictly increase then strictly decrease."""
    i = 0
    while i + 1 < len(values) and values[i] < values[i + 1]:
        i += 1
    while i + 1 < len(values) and values[i] > values[i + 1]:
        i += 1
    return i + 1 >= len(values)


def contains_pattern(p: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of p is order-isomorphic to pattern.

    Plain backtracking over positions with length pruning; fine at desk scale.
    """
    k = len(pattern)
    n = len(p)
    if k > n:
        raise ValueError("pattern longer than the permutation")
    pat = _standardize(pattern)

    def extend(start: int, chosen: list[int]) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        for i in range(start, n - (k - depth) + 1):
            v = p[i]
            ok = True
            for j, c in enumerate(chosen):
                # relative order of the new value against every chosen one must
                # match the pattern's order at the same slots
                if (v > c) != (pat[depth] > pat[j]):
                    ok = False
                    break
            if ok:
                chosen.append(v)
                if extend(i + 1, chosen):
                    return True
                chosen.pop()
        return False

    return extend(0, [])


# The sixteen forbidden length-5 patterns whose joint avoidance characterizes
# square permutations.
FORBIDDEN_PATTERNS: frozenset[tuple[int, ...]] = frozenset(
    {
        (5, 2, 3, 4, 1), (5, 2, 3, 1, 4), (5, 1, 3, 4, 2), (5, 1, 3, 2, 4),
        (4, 2, 3, 5, 1), (4, 2, 3, 1, 5), (4, 1, 3, 5, 2), (4, 1, 3, 2, 5),
        (2, 5, 3, 4, 1), (2, 5, 3, 1, 4), (1, 5, 3, 4, 2), (1, 5, 3, 2, 4),
        (2, 4, 3, 5, 1), (2, 4, 3, 1, 5), (1, 4, 3, 5, 2), (1, 4, 3, 2, 5),
    }
)


def is_square(p: Sequence[int]) -> bool:
    """True iff the lower envelope of p is lower unimodal."""
    return is_lower_unimodal(envelopes(p).lower.values)


def is_square_by_patterns(p: Sequence[int]) -> bool:
    """Independent route: true iff p avoids all sixteen forbidden patterns.

    Checks the standardization of every 5-element subsequence against the
    forbidden set, which is the cheapest exhaustive form for fixed length 5.
    """
    if len(p) < 5:
        return True
    for sub in combinations(p, 5):
        if _standardize(sub) in FORBIDDEN_PATTERNS:
            return False
    return True
