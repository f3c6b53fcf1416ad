"""Command line surface.

Subcommands: classify, build, enumerate, verify, decompose.  Permutations are
given as one argument of whitespace- or comma-separated 1-based integers (no
brackets).  Exit codes: 0 ok, 2 parse error, 3 not realizable, 4 size too
large, 5 outside the bijection's domain; identity failures in `verify` also
exit 1.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import counting, verify
from .bijection import permutation_to_sequence, sequence_to_permutation
from .boundary import Permutomino
from .errors import (
    Indecomposable,
    InvalidSequence,
    NotAssociated,
    NotSquare,
    ParseError,
    SizeTooLarge,
)
from .membership import (
    canonical_permutomino,
    fiber,
    free_fixed_points,
    is_associated_pi2,
    membership_verdict,
)
from .perms import envelopes, is_square
from .render import ascii_art, svg_document, to_jsonable

PERM_CLASSES = ("ctilde", "square", "decomposable")
GEO_CLASSES = ("convex", "directed", "parallelogram", "symmetric", "column-convex")


@dataclass
class RenderSpec:
    format: str = "ascii"  # ascii | svg | json
    cell_px: int = 24
    out: str | None = None  # path; None means standard output


def parse_permutation(text: str) -> tuple[int, ...]:
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty permutation")
    values = []
    for i, tok in enumerate(tokens, start=1):
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"not an integer: {tok!r}", position=i) from None
    n = len(values)
    seen = set()
    for i, v in enumerate(values, start=1):
        if not 1 <= v <= n:
            raise ParseError(f"value {v} outside 1..{n}", position=i)
        if v in seen:
            raise ParseError(f"value {v} repeated", position=i)
        seen.add(v)
    return tuple(values)


def _emit(texts: list[str], spec: RenderSpec, joiner: str = "\n\n") -> None:
    if spec.out is None:
        print(joiner.join(texts))
        return
    if len(texts) == 1:
        with open(spec.out, "w", encoding="utf-8") as fh:
            fh.write(texts[0])
        return
    stem, dot, ext = spec.out.rpartition(".")
    if not dot:
        stem, ext = spec.out, "out"
    for i, text in enumerate(texts, start=1):
        with open(f"{stem}-{i}.{ext}", "w", encoding="utf-8") as fh:
            fh.write(text)


def _render(shapes: list[Permutomino], spec: RenderSpec) -> None:
    if spec.format == "json":
        payload = [to_jsonable(p) for p in shapes]
        text = json.dumps(payload[0] if len(payload) == 1 else payload, indent=2)
        _emit([text], spec)
    elif spec.format == "svg":
        _emit([svg_document(p, spec.cell_px) for p in shapes], spec)
    else:
        _emit([ascii_art(p) for p in shapes], spec)


def cmd_classify(args) -> int:
    p = parse_permutation(args.perm)
    env = envelopes(p)
    verdict = membership_verdict(p)
    print(f"permutation: {' '.join(map(str, p))}  (n={len(p)})")
    print(f"upper envelope: {' '.join(map(str, env.upper.values))}"
          f"  at positions {' '.join(map(str, env.upper.positions))}")
    print(f"lower envelope: {' '.join(map(str, env.lower.values))}"
          f"  at positions {' '.join(map(str, env.lower.positions))}")
    print(f"square: {'yes' if is_square(p) else 'no'}")
    if verdict.member:
        print("odd-vertex realizable: yes")
    elif verdict.reason == "decomposable":
        print(f"odd-vertex realizable: no (decomposable at split {verdict.witness})")
    else:
        a, b, c = verdict.witness
        print(f"odd-vertex realizable: no (lower envelope rises at {a} then falls: {b} > {c})")
    print(f"even-vertex realizable: {'yes' if is_associated_pi2(p) else 'no'}")
    if verdict.member:
        free = sorted(free_fixed_points(p))
        print(f"free fixed points: {' '.join(map(str, free)) if free else '(none)'}")
        print(f"fiber size: {2 ** len(free)}")
    else:
        print("free fixed points: (not realizable)")
        print("fiber size: 0")
    return 0


def cmd_build(args) -> int:
    p = parse_permutation(args.perm)
    spec = RenderSpec(format=args.format, cell_px=args.cell_px, out=args.out)
    if args.all:
        shapes = sorted(fiber(p), key=Permutomino.sort_key)
    else:
        shapes = [canonical_permutomino(p)]
    _render(shapes, spec)
    return 0


def cmd_enumerate(args) -> int:
    n = args.size
    workers = args.workers if args.workers is not None else counting.env_workers()
    name = args.klass
    if name in GEO_CLASSES and name != "convex":
        shapes = counting.listing(name, n)
        print(len(shapes))
        if args.list:
            for p in shapes:
                print(f"{p.word or '(empty)'}  pi1={' '.join(map(str, p.pi1))}")
        return 0
    if name == "convex":
        if args.method == "intervals":
            count = counting.count_convex(n, method="intervals")
        else:
            count = counting.count_convex(n, workers=workers)
        print(count)
        if args.by == "fixed-points":
            for k, v in sorted(counting.count_ctilde(n, workers)["by_free_fixed_points"].items()):
                print(f"free-fixed-points {k}: {v} permutations, {v * 2**k} permutominoes")
        if args.list:
            for p in counting.convex_via_fibers(n):
                print(f"{p.word or '(empty)'}  pi1={' '.join(map(str, p.pi1))}")
        return 0
    if name == "ctilde":
        info = counting.count_ctilde(n, workers)
        print(info["total"])
        if args.by == "fixed-points":
            for k, v in sorted(info["by_free_fixed_points"].items()):
                print(f"free-fixed-points {k}: {v}")
    elif name == "square":
        info = counting.count_square(n, workers)
        print(info["square"])
        if args.by == "components":
            print("components 1:", info["square"] - info["decomposable"])
            for k, v in sorted(info["by_components"].items()):
                print(f"components {k}: {v}")
    else:  # decomposable
        info = counting.count_square(n, workers)
        print(info["decomposable"])
        if args.by == "components":
            for k, v in sorted(info["by_components"].items()):
                print(f"components {k}: {v}")
    if args.list:
        for p in counting.perm_listing(name, n):
            print(" ".join(map(str, p)))
    return 0


def cmd_verify(args) -> int:
    workers = args.workers if args.workers is not None else counting.env_workers()
    report = verify.verify_identities(args.max_size, strict_paper=args.strict_paper,
                                      workers=workers)
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
    else:
        for e in report.entries:
            print(f"{e.status:10s} {e.name} [{e.sizes}]"
                  + (f"  {e.detail}" if e.detail else ""))
        print(f"{'all identities pass' if report.ok else 'FAILURES present'} "
              f"(max size {report.max_size})")
    return 0 if report.ok else 1


def cmd_decompose(args) -> int:
    p = parse_permutation(args.perm)
    seq = permutation_to_sequence(p)
    assert sequence_to_permutation(seq) == p
    print(f"components: {len(seq)}")
    for i, part in enumerate(seq, start=1):
        kind = "directed convex" if i in (1, len(seq)) else "parallelogram"
        if part.size == 1:
            print(f"part {i}: (empty)  size 1")
        else:
            print(f"part {i}: size {part.size}  {kind}  boundary {part.word}  "
                  f"pi2={' '.join(map(str, part.pi2))}")
    if args.render:
        spec = RenderSpec(format=args.format, cell_px=args.cell_px, out=args.out)
        _render([part for part in seq if part.size > 1], spec)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permutomino",
        description="Convex permutominoes: classify permutations, build fibers, "
        "enumerate classes and verify counting identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="envelopes, square test, realizability, fiber size")
    c.add_argument("perm", help="permutation, e.g. '2 1 3 4 7 6 5'")
    c.set_defaults(fn=cmd_classify)

    b = sub.add_parser("build", help="build the canonical permutomino (or the whole fiber)")
    b.add_argument("perm")
    b.add_argument("--all", action="store_true", help="emit every fiber element")
    b.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    b.add_argument("--cell-px", type=int, default=24, help="SVG cell size in pixels")
    b.add_argument("--out", help="output path (default: standard output)")
    b.set_defaults(fn=cmd_build)

    e = sub.add_parser("enumerate", help="count (and optionally list) a class at a size")
    e.add_argument("klass", metavar="class", choices=PERM_CLASSES + GEO_CLASSES)
    e.add_argument("size", type=int)
    e.add_argument("--list", action="store_true", help="list members in stable order")
    e.add_argument("--by", choices=("fixed-points", "components"),
                   help="stratify the count")
    e.add_argument("--method", choices=("fibers", "intervals"), default="fibers",
                   help="convex class only: counting method")
    e.add_argument("--workers", type=int, default=None,
                   help="scan workers (default: PERMUTOMINO_WORKERS or cpu count)")
    e.set_defaults(fn=cmd_enumerate)

    v = sub.add_parser("verify", help="check every counting identity up to a size")
    v.add_argument("--max-size", type=int, default=6)
    v.add_argument("--strict-paper", action="store_true",
                   help="also evaluate the closed forms exactly as printed in the "
                        "source material and report known discrepancies")
    v.add_argument("--json", action="store_true")
    v.add_argument("--workers", type=int, default=None)
    v.set_defaults(fn=cmd_verify)

    d = sub.add_parser("decompose", help="split a square permutation into its "
                                         "permutomino sequence")
    d.add_argument("perm")
    d.add_argument("--render", action="store_true", help="render the non-empty parts")
    d.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    d.add_argument("--cell-px", type=int, default=24)
    d.add_argument("--out", help="output path (default: standard output)")
    d.set_defaults(fn=cmd_decompose)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except NotAssociated as exc:
        print(f"not realizable: {exc}", file=sys.stderr)
        return 3
    except SizeTooLarge as exc:
        print(f"size too large: {exc}", file=sys.stderr)
        return 4
    except (NotSquare, Indecomposable, InvalidSequence) as exc:
        print(f"outside the bijection domain: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
