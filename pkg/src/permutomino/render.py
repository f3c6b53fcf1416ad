"""ASCII, SVG and JSON renderings of permutominoes (and parsers for tests).

JSON schema (version field "v" = 1):

    {"v": 1, "size": n, "boundary": "NEN...W" | null,
     "vertices": [[x, y], ...],          # clockwise from the lowest leftmost
     "pi1": [...], "pi2": [...],
     "salient": [[x, y], ...],
     "reentrant": [{"x": x, "y": y, "label": "alpha|beta|gamma|delta"}],
     "classes": {"column_convex": b, "row_convex": b, "convex": b,
                 "directed": b, "parallelogram": b, "symmetric_xy": b}}

The boundary string is authoritative; every other field is derived and checked
on the way back in.  ASCII grids use '#' for a cell and '.' for empty, rows
printed top to bottom; SVG uses the mathematical orientation (y axis upward),
cells as rects, salient corners as hollow squares and reentrant corners as
labeled dots.
"""
from __future__ import annotations

import json
import re
from xml.sax.saxutils import escape

from .boundary import EMPTY, Permutomino, from_boundary_word

_GLYPH = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ"}


def to_jsonable(p: Permutomino) -> dict:
    return {
        "v": 1,
        "size": p.size,
        "boundary": p.word,
        "vertices": [list(v) for v in p.vertices],
        "pi1": list(p.pi1),
        "pi2": list(p.pi2),
        "salient": [list(v) for v in p.salient],
        "reentrant": [{"x": x, "y": y, "label": lab} for (x, y), lab in p.reentrant],
        "classes": dict(p.flags),
    }


def to_json(p: Permutomino, indent: int | None = None) -> str:
    return json.dumps(to_jsonable(p), indent=indent)


def from_jsonable(data: dict) -> Permutomino:
    """Rebuild from the boundary field and verify the derived fields agree."""
    if data.get("v") != 1:
        raise ValueError(f"unsupported schema version {data.get('v')!r}")
    word = data["boundary"]
    p = EMPTY if word is None else from_boundary_word(word)
    checks = to_jsonable(p)
    for key in ("size", "pi1", "pi2", "vertices", "salient", "reentrant", "classes"):
        if key in data and data[key] != checks[key]:
            raise ValueError(f"inconsistent JSON field {key!r}")
    return p


def from_json(text: str) -> Permutomino:
    return from_jsonable(json.loads(text))


def ascii_art(p: Permutomino) -> str:
    if p.word is None:
        return "(empty)"
    width = height = p.size - 1
    rows = []
    for y in range(height, 0, -1):
        rows.append("".join("#" if (x, y) in p.cells else "." for x in range(1, width + 1)))
    return "\n".join(rows)


def cells_from_ascii(text: str) -> frozenset[tuple[int, int]]:
    text = text.strip("\n")
    if text.strip() == "(empty)":
        return frozenset()
    lines = text.splitlines()
    height = len(lines)
    cells = set()
    for row, line in enumerate(lines):
        for col, ch in enumerate(line):
            if ch == "#":
                cells.add((col + 1, height - row))
            elif ch != ".":
                raise ValueError(f"unexpected character {ch!r} in ASCII grid")
    return frozenset(cells)


def svg_document(p: Permutomino, cell_px: int = 24) -> str:
    """Standalone SVG with the y axis pointing up (lattice point (1,1) at bottom left)."""
    n = p.size
    pad = cell_px
    side = (n - 1) * cell_px + 2 * pad if p.word else 2 * pad

    def sx(x: float) -> float:
        return pad + (x - 1) * cell_px

    def sy(y: float) -> float:
        return side - pad - (y - 1) * cell_px

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {side} {side}" data-size="{n}" data-cell-px="{cell_px}">'
    ]
    for (x, y) in sorted(p.cells):
        parts.append(
            f'<rect class="cell" data-x="{x}" data-y="{y}" x="{sx(x)}" y="{sy(y + 1)}" '
            f'width="{cell_px}" height="{cell_px}" fill="#cfd8e3" stroke="#8899aa"/>'
        )
    if p.word is not None:
        outline = " ".join(f"{sx(x)},{sy(y)}" for x, y in p.path[:-1])
        parts.append(f'<polygon points="{outline}" fill="none" stroke="#222" stroke-width="2"/>')
        r = max(cell_px // 6, 3)
        for (x, y) in p.salient:
            parts.append(
                f'<rect class="salient" x="{sx(x) - r}" y="{sy(y) - r}" width="{2 * r}" '
                f'height="{2 * r}" fill="white" stroke="#222"/>'
            )
        for (x, y), label in p.reentrant:
            parts.append(
                f'<circle class="reentrant" data-label="{label}" cx="{sx(x)}" cy="{sy(y)}" '
                f'r="{r}" fill="#222"/>'
            )
            parts.append(
                f'<text x="{sx(x) + r + 2}" y="{sy(y) - r}" font-size="{cell_px // 2}">'
                f"{escape(_GLYPH[label])}</text>"
            )
    parts.append("</svg>")
    return "\n".join(parts)


def cells_from_svg(text: str) -> frozenset[tuple[int, int]]:
    cells = set()
    for match in re.finditer(r'<rect class="cell" data-x="(\d+)" data-y="(\d+)"', text):
        cells.add((int(match.group(1)), int(match.group(2))))
    return frozenset(cells)
