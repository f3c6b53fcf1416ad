"""Geometric side: boundary words, permutomino validation, corner matrices.

A permutomino of size n is a polyomino without holes, bounding box [1,n]x[1,n],
whose boundary has exactly one maximal vertical side per abscissa 1..n and one
maximal horizontal side per ordinate 1..n.  Its 2n corners, read clockwise from
the lowest leftmost one, alternate between two permutations pi1 (odd corners)
and pi2 (even corners) of size n.

Boundary words are strings over N/E/S/W, starting at the leftmost point of
minimal ordinate and proceeding clockwise, so the first letter is always N and
the interior stays on the right of the walk.  Reentrant (concave) corners are
typed by their two-letter factor: EN -> alpha, SE -> beta, WS -> gamma,
NW -> delta; the reentrant corners of a convex permutomino of size n form a
permutation matrix on {2..n-1} in these four symbols.

The size-1 permutomino is the empty one: no boundary, pi1 = pi2 = (1) by
convention.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InvalidMatrix, NotClosed, NotConvex, NotPermutomino, SelfIntersecting

ALPHA, BETA, GAMMA, DELTA = "alpha", "beta", "gamma", "delta"
LABELS = (ALPHA, BETA, GAMMA, DELTA)

_STEP = {"N": (0, 1), "E": (1, 0), "S": (0, -1), "W": (-1, 0)}
# two-letter boundary factors (arrive, depart) at a corner
_SALIENT_FACTORS = {("N", "E"), ("E", "S"), ("S", "W"), ("W", "N")}
_REENTRANT_LABEL = {("E", "N"): ALPHA, ("S", "E"): BETA, ("W", "S"): GAMMA, ("N", "W"): DELTA}


def _trace(word: str) -> list[tuple[int, int]]:
    """Lattice points visited by the word, starting from (0, 0); length len(word)+1."""
    x = y = 0
    points = [(0, 0)]
    for i, letter in enumerate(word):
        if letter not in _STEP:
            raise ValueError(f"boundary letter {letter!r} at index {i} (want N/E/S/W)")
        dx, dy = _STEP[letter]
        x, y = x + dx, y + dy
        points.append((x, y))
    return points


def _corners(points: list[tuple[int, int]], word: str):
    """Corners of a closed path as (point, arrive, depart), in path order."""
    out = []
    for i in range(len(word)):
        arrive = word[i - 1]
        depart = word[i]
        if arrive != depart:
            out.append((points[i], arrive, depart))
    return out


def _runs(values: Iterable[int]) -> int:
    """Number of maximal runs of consecutive integers."""
    ordered = sorted(values)
    if not ordered:
        return 0
    return 1 + sum(1 for a, b in zip(ordered, ordered[1:]) if b != a + 1)


def word_from_cells(cells: frozenset[tuple[int, int]]) -> str:
    """Serialize a hole-free cell set to its clockwise boundary word.

    The walk keeps the interior on its right and starts at the lowest leftmost
    boundary point, so the first letter is N.  Raises ValueError if the cells do
    not bound a single simple curve (disconnected set or interior hole).
    """
    if not cells:
        raise ValueError("empty cell set has no boundary")
    outgoing: dict[tuple[int, int], dict[str, tuple[int, int]]] = defaultdict(dict)
    for (x, y) in cells:
        if (x - 1, y) not in cells:
            outgoing[(x, y)]["N"] = (x, y + 1)
        if (x, y + 1) not in cells:
            outgoing[(x, y + 1)]["E"] = (x + 1, y + 1)
        if (x + 1, y) not in cells:
            outgoing[(x + 1, y + 1)]["S"] = (x + 1, y)
        if (x, y - 1) not in cells:
            outgoing[(x + 1, y)]["W"] = (x, y)
    total_edges = sum(len(d) for d in outgoing.values())
    start = min(outgoing, key=lambda pt: (pt[1], pt[0]))
    # right-turn preference keeps the walk on the outer boundary at pinch points
    prefer = {
        "N": "ENW", "E": "SEN", "S": "WSE", "W": "NWS",
    }
    letters = []
    point = start
    heading = "N"
    while True:
        choices = outgoing[point]
        for letter in prefer[heading]:
            if letter in choices:
                break
        else:
            raise ValueError("boundary walk stuck; cells do not bound a simple curve")
        point = choices.pop(letter)
        letters.append(letter)
        heading = letter
        if point == start:
            break
    if len(letters) != total_edges:
        raise ValueError("cells are disconnected or enclose a hole")
    return "".join(letters)


def _cells_from_path(points: list[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    """Cells enclosed by a simple closed rectilinear path (parity fill by row)."""
    vertical = defaultdict(set)  # abscissa -> cell rows covered by a vertical edge
    for (x1, y1), (x2, y2) in zip(points, points[1:]):
        if x1 == x2:
            vertical[x1].add(min(y1, y2))
    xs = range(min(vertical), max(vertical))  # cell abscissas
    rows = {y for ys in vertical.values() for y in ys}
    cells = set()
    for y in rows:
        inside = False
        for x in xs:
            if y in vertical[x]:
                inside = not inside
            if inside:
                cells.add((x, y))
    return frozenset(cells)


@dataclass(frozen=True)
class Permutomino:
    """A validated permutomino, identified by its size and boundary word.

    ``word`` is None only for the size-1 empty permutomino.  Build instances
    through :func:`from_boundary_word`, :meth:`from_cells` or :meth:`empty`;
    derived data (cells, corners, pi1/pi2, class flags) is computed lazily.
    """

    size: int
    word: str | None

    @staticmethod
    def empty() -> "Permutomino":
        return Permutomino(1, None)

    @staticmethod
    def from_cells(cells: Iterable[tuple[int, int]]) -> "Permutomino":
        frozen = frozenset(cells)
        if not frozen:
            return Permutomino.empty()
        min_x = min(x for x, _ in frozen)
        min_y = min(y for _, y in frozen)
        frozen = frozenset((x - min_x + 1, y - min_y + 1) for x, y in frozen)
        return from_boundary_word(word_from_cells(frozen))

    @cached_property
    def path(self) -> tuple[tuple[int, int], ...]:
        """Lattice points of the boundary walk, in the (1,1)-anchored frame."""
        if self.word is None:
            return ()
        raw = _trace(self.word)
        min_x = min(x for x, _ in raw)
        min_y = min(y for _, y in raw)
        return tuple((x - min_x + 1, y - min_y + 1) for x, y in raw)

    @cached_property
    def cells(self) -> frozenset[tuple[int, int]]:
        if self.word is None:
            return frozenset()
        return _cells_from_path(list(self.path))

    @cached_property
    def corners(self) -> tuple[tuple[tuple[int, int], str, str], ...]:
        """(point, arrive-letter, depart-letter) clockwise from the lowest leftmost."""
        if self.word is None:
            return ()
        return tuple(_corners(list(self.path), self.word))

    @cached_property
    def vertices(self) -> tuple[tuple[int, int], ...]:
        return tuple(point for point, _, _ in self.corners)

    @cached_property
    def salient(self) -> tuple[tuple[int, int], ...]:
        return tuple(pt for pt, a, d in self.corners if (a, d) in _SALIENT_FACTORS)

    @cached_property
    def reentrant(self) -> tuple[tuple[tuple[int, int], str], ...]:
        return tuple(
            (pt, _REENTRANT_LABEL[(a, d)])
            for pt, a, d in self.corners
            if (a, d) in _REENTRANT_LABEL
        )

    @cached_property
    def pi1(self) -> tuple[int, ...]:
        if self.word is None:
            return (1,)
        odd = sorted(self.vertices[0::2])
        return tuple(y for _, y in odd)

    @cached_property
    def pi2(self) -> tuple[int, ...]:
        if self.word is None:
            return (1,)
        even = sorted(self.vertices[1::2])
        return tuple(y for _, y in even)

    @cached_property
    def column_intervals(self) -> tuple[tuple[int, int], ...] | None:
        """Per-column (bottom, top) cell rows, or None when not column convex."""
        columns: dict[int, list[int]] = defaultdict(list)
        for x, y in self.cells:
            columns[x].append(y)
        out = []
        for x in sorted(columns):
            ys = sorted(columns[x])
            if ys[-1] - ys[0] + 1 != len(ys):
                return None
            out.append((ys[0], ys[-1]))
        return tuple(out)

    @cached_property
    def flags(self) -> dict[str, bool]:
        return classify(self)

    @property
    def is_convex(self) -> bool:
        return self.flags["convex"]

    def sort_key(self):
        return (self.pi1, self.word or "")

    def __repr__(self) -> str:
        return f"Permutomino(size={self.size}, word={self.word!r})"


EMPTY = Permutomino.empty()


def from_boundary_word(word: str) -> Permutomino:
    """Validate a boundary word and build the permutomino it encodes.

    Raises NotClosed / SelfIntersecting / NotPermutomino for the three failure
    modes, and ValueError when the word breaks the encoding convention itself
    (bad alphabet, wrong starting point, counterclockwise orientation).
    """
    if not word:
        raise ValueError("empty boundary word (the size-1 permutomino has none)")
    points = _trace(word)
    if points[-1] != points[0]:
        raise NotClosed(f"path ends at {points[-1]}, not back at the start")
    interior_points = points[:-1]
    if len(set(interior_points)) != len(interior_points):
        seen = set()
        for pt in interior_points:
            if pt in seen:
                raise SelfIntersecting(f"boundary revisits {pt}")
            seen.add(pt)
    if word[0] != "N" or min(interior_points, key=lambda p: (p[1], p[0])) != points[0]:
        raise ValueError("word must start at the lowest leftmost point and head N (clockwise)")

    min_x = min(x for x, _ in points)
    min_y = min(y for _, y in points)
    points = [(x - min_x + 1, y - min_y + 1) for x, y in points]

    cells = _cells_from_path(points)
    if not cells:
        raise NotClosed("degenerate path encloses no cells")
    if word_from_cells(cells) != word:
        raise ValueError("word is not the clockwise boundary of its own interior")

    vertical = defaultdict(set)
    horizontal = defaultdict(set)
    for (x1, y1), (x2, y2) in zip(points, points[1:]):
        if x1 == x2:
            vertical[x1].add(min(y1, y2))
        else:
            horizontal[y1].add(min(x1, x2))
    n = max(vertical)
    for x in range(1, n + 1):
        count = _runs(vertical.get(x, ()))
        if count != 1:
            raise NotPermutomino("x", x, count)
    m = max(horizontal)
    for y in range(1, m + 1):
        count = _runs(horizontal.get(y, ()))
        if count != 1:
            raise NotPermutomino("y", y, count)
    # sides alternate around the loop, so n == m once both axes pass
    return Permutomino(n, word)


def vertex_permutations(p: Permutomino) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two permutations read off the odd/even corners, by abscissa."""
    return p.pi1, p.pi2


def boundary_points(p: Permutomino):
    """(salient points, labeled reentrant points) in clockwise boundary order."""
    return list(p.salient), list(p.reentrant)


def classify(p: Permutomino) -> dict[str, bool]:
    """Class flags from the cell set.

    directed requires convexity on top of N/E reachability from the south-west
    root cell, and parallelogram requires directed, so the flags always satisfy
    parallelogram => directed => convex.  The empty permutomino gets every flag.
    """
    if p.word is None:
        return {
            "column_convex": True, "row_convex": True, "convex": True,
            "directed": True, "parallelogram": True, "symmetric_xy": True,
        }
    cells = p.cells
    columns: dict[int, list[int]] = defaultdict(list)
    rows: dict[int, list[int]] = defaultdict(list)
    for x, y in cells:
        columns[x].append(y)
        rows[y].append(x)
    column_convex = all(max(v) - min(v) + 1 == len(v) for v in columns.values())
    row_convex = all(max(v) - min(v) + 1 == len(v) for v in rows.values())
    convex = column_convex and row_convex

    root = min(cells, key=lambda c: (c[1], c[0]))
    seen = {root}
    frontier = [root]
    while frontier:
        x, y = frontier.pop()
        for nxt in ((x + 1, y), (x, y + 1)):
            if nxt in cells and nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    directed = convex and len(seen) == len(cells)

    parallelogram = False
    if directed:
        intervals = p.column_intervals
        bottoms = [a for a, _ in intervals]
        tops = [b for _, b in intervals]
        parallelogram = (
            all(a <= b for a, b in zip(bottoms, bottoms[1:]))
            and all(a <= b for a, b in zip(tops, tops[1:]))
        )

    symmetric_xy = cells == {(y, x) for x, y in cells}
    return {
        "column_convex": column_convex,
        "row_convex": row_convex,
        "convex": convex,
        "directed": directed,
        "parallelogram": parallelogram,
        "symmetric_xy": symmetric_xy,
    }


@dataclass(frozen=True)
class LabeledMatrix:
    """Reentrant points of a convex permutomino as a labeled permutation matrix.

    ``points`` is a frozenset of (x, y, label) with label in alpha/beta/gamma/
    delta; a matrix for size n lives on {2..n-1} x {2..n-1} and has dim = n-2.
    """

    dim: int
    points: frozenset[tuple[int, int, str]]

    def by_label(self, label: str) -> list[tuple[int, int]]:
        return sorted((x, y) for x, y, lab in self.points if lab == label)

    def label_at(self, x: int, y: int) -> str | None:
        for px, py, lab in self.points:
            if (px, py) == (x, y):
                return lab
        return None

    def retyped(self, changes: Mapping[tuple[int, int], str]) -> "LabeledMatrix":
        """A copy with the labels at the given (x, y) points replaced."""
        new_points = set()
        for x, y, lab in self.points:
            new_points.add((x, y, changes.get((x, y), lab)))
        return LabeledMatrix(self.dim, frozenset(new_points))


def reentrant_matrix(p: Permutomino) -> LabeledMatrix:
    """Labeled reentrant-point matrix of a convex permutomino (dim = size - 2)."""
    if p.word is None:
        raise ValueError("the empty permutomino has no corner matrix")
    if not p.is_convex:
        raise NotConvex(f"permutomino with boundary {p.word!r} is not convex")
    points = frozenset((x, y, label) for (x, y), label in p.reentrant)
    return LabeledMatrix(p.size - 2, points)


def validate_matrix(matrix: LabeledMatrix, size: int) -> None:
    """Check every validity condition, raising InvalidMatrix naming the first violated.

    Conditions: permutation matrix on {2..size-1}; corner-order inequalities
    between the four label classes; no alpha/gamma or beta/delta path crossing;
    strictly monotone ordinates within each label class; and the diagonal
    bounds (alpha on or above y=x, gamma on or below, beta on or above
    x+y=size+1, delta on or below).
    """
    if size < 2:
        raise InvalidMatrix("size", f"size {size} < 2")
    if matrix.dim != size - 2 or len(matrix.points) != size - 2:
        raise InvalidMatrix("dimension", f"want {size - 2} points, got {len(matrix.points)}")
    coords = range(2, size)
    for x, y, lab in matrix.points:
        if lab not in LABELS:
            raise InvalidMatrix("label", f"unknown label {lab!r}")
        if x not in coords or y not in coords:
            raise InvalidMatrix("range", f"point ({x},{y}) outside {{2..{size - 1}}}")
    if len({x for x, _, _ in matrix.points}) != len(matrix.points) or len(
        {y for _, y, _ in matrix.points}
    ) != len(matrix.points):
        raise InvalidMatrix("permutation-matrix", "repeated abscissa or ordinate")

    alphas = matrix.by_label(ALPHA)
    betas = matrix.by_label(BETA)
    gammas = matrix.by_label(GAMMA)
    deltas = matrix.by_label(DELTA)

    for xa, ya in alphas:
        for xb, yb in betas:
            if not xa < xb:
                raise InvalidMatrix("corner-order", f"alpha ({xa},{ya}) not left of beta ({xb},{yb})")
        for xd, yd in deltas:
            if not ya > yd:
                raise InvalidMatrix("corner-order", f"alpha ({xa},{ya}) not above delta ({xd},{yd})")
        for xc, yc in gammas:
            if xa > xc and ya < yc:
                raise InvalidMatrix("path-crossing", f"alpha ({xa},{ya}) below-right of gamma ({xc},{yc})")
    for xd, yd in deltas:
        for xc, yc in gammas:
            if not xd < xc:
                raise InvalidMatrix("corner-order", f"delta ({xd},{yd}) not left of gamma ({xc},{yc})")
        for xb, yb in betas:
            if xb < xd and yb < yd:
                raise InvalidMatrix("path-crossing", f"beta ({xb},{yb}) below-left of delta ({xd},{yd})")
    for xb, yb in betas:
        for xc, yc in gammas:
            if not yb > yc:
                raise InvalidMatrix("corner-order", f"beta ({xb},{yb}) not above gamma ({xc},{yc})")

    for pts, increasing, lab in (
        (alphas, True, ALPHA), (gammas, True, GAMMA), (betas, False, BETA), (deltas, False, DELTA),
    ):
        ys = [y for _, y in pts]
        ordered = all(a < b for a, b in zip(ys, ys[1:])) if increasing else all(
            a > b for a, b in zip(ys, ys[1:])
        )
        if not ordered:
            raise InvalidMatrix("monotone-ordinates", f"{lab} ordinates not strictly "
                                f"{'increasing' if increasing else 'decreasing'}")

    for x, y in alphas:
        if y < x:
            raise InvalidMatrix("diagonal", f"alpha ({x},{y}) below y=x")
    for x, y in gammas:
        if y > x:
            raise InvalidMatrix("diagonal", f"gamma ({x},{y}) above y=x")
    for x, y in betas:
        if x + y < size + 1:
            raise InvalidMatrix("diagonal", f"beta ({x},{y}) below x+y={size + 1}")
    for x, y in deltas:
        if x + y > size + 1:
            raise InvalidMatrix("diagonal", f"delta ({x},{y}) above x+y={size + 1}")


def permutomino_from_matrix(matrix: LabeledMatrix, size: int) -> Permutomino:
    """The unique convex permutomino whose labeled reentrant points equal the matrix.

    Inverse of :func:`reentrant_matrix`.  The boundary is rebuilt as four
    corner-to-corner chains threaded through the labeled points; the special
    corners are pinned by the matrix (B sits on top of the leftmost beta
    column, A at the height of the leftmost delta, and so on, degenerating to
    (1,1) / (n,n) when a chain is empty).
    """
    validate_matrix(matrix, size)
    n = size
    alphas = matrix.by_label(ALPHA)
    betas = matrix.by_label(BETA)
    gammas = matrix.by_label(GAMMA)
    deltas = matrix.by_label(DELTA)

    corner_a = (1, deltas[0][1]) if deltas else (1, 1)
    corner_d = (deltas[-1][0], 1) if deltas else (1, 1)
    corner_b = (betas[0][0], n) if betas else (n, n)
    corner_c = (n, betas[-1][1]) if betas else (n, n)

    parts: list[str] = []
    # delta path, D up-left to A: NW reentrants visited right to left
    if deltas:
        parts.append("N" * (deltas[-1][1] - 1))
        rev = list(reversed(deltas))
        for right, left in zip(rev, rev[1:]):
            parts.append("W" * (right[0] - left[0]) + "N" * (left[1] - right[1]))
        parts.append("W" * (deltas[0][0] - 1))
    # alpha path, A up-right to B: EN reentrants left to right
    prev = corner_a
    for x, y in alphas:
        parts.append("N" * (y - prev[1]) + "E" * (x - prev[0]))
        prev = (x, y)
    parts.append("N" * (n - prev[1]) + "E" * (corner_b[0] - prev[0]))
    # beta path, B down-right to C: SE reentrants left to right
    prev = corner_b
    for x, y in betas:
        parts.append("E" * (x - prev[0]) + "S" * (prev[1] - y))
        prev = (x, y)
    if betas:
        parts.append("E" * (n - prev[0]))
    # gamma path, C down-left to D: WS reentrants right to left
    prev = corner_c
    for x, y in reversed(gammas):
        parts.append("S" * (prev[1] - y) + "W" * (prev[0] - x))
        prev = (x, y)
    parts.append("S" * (prev[1] - 1) + "W" * (prev[0] - corner_d[0]))

    word = "".join(parts)
    try:
        result = from_boundary_word(word)
    except Exception as exc:  # conditions above should make this unreachable
        raise InvalidMatrix("reconstruction", str(exc)) from exc
    if result.size != size or reentrant_matrix(result) != matrix:
        raise InvalidMatrix("reconstruction", "rebuilt boundary does not reproduce the matrix")
    return result


def reflect_y(p: Permutomino) -> Permutomino:
    """Mirror image across the vertical axis of the bounding box."""
    if p.word is None:
        return p
    width = p.size - 1
    return Permutomino.from_cells((width + 1 - x, y) for x, y in p.cells)


def reflect_x(p: Permutomino) -> Permutomino:
    """Mirror image across the horizontal axis of the bounding box."""
    if p.word is None:
        return p
    height = p.size - 1
    return Permutomino.from_cells((x, height + 1 - y) for x, y in p.cells)


def transpose(p: Permutomino) -> Permutomino:
    """Reflection across the diagonal x=y."""
    if p.word is None:
        return p
    return Permutomino.from_cells((y, x) for x, y in p.cells)
