"""Counts over S_n and permutomino listings, built on the scan kernels.

The scans partition S_n into blocks by first value; with workers > 1 the
blocks go through a process pool and the per-block tallies are summed, so the
result is bit-identical for any worker count.  Worker count comes from the
PERMUTOMINO_WORKERS environment variable when not passed explicitly (the CLI
default), falling back to the available parallelism.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from . import _kernels, oracles
from .boundary import Permutomino
from .errors import SizeTooLarge
from .membership import fiber, is_associated, is_associated_pi2
from .perms import as_perm, is_indecomposable, is_square

SCAN_BOUND = 10  # S_10 is ~3.6M permutations, the reasonable desk-scale limit


def env_workers() -> int:
    raw = os.environ.get("PERMUTOMINO_WORKERS", "").strip()
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


def _merge_stats(blocks: list[dict]) -> dict:
    total = {
        "square": 0,
        "components": {},
        "ctilde_by_fixed": None,
        "both_ways": 0,
        "assoc_first_lt_last": 0,
    }
    for block in blocks:
        total["square"] += block["square"]
        total["both_ways"] += block["both_ways"]
        total["assoc_first_lt_last"] += block["assoc_first_lt_last"]
        for k, v in block["components"].items():
            total["components"][k] = total["components"].get(k, 0) + v
        if total["ctilde_by_fixed"] is None:
            total["ctilde_by_fixed"] = list(block["ctilde_by_fixed"])
        else:
            for i, v in enumerate(block["ctilde_by_fixed"]):
                total["ctilde_by_fixed"][i] += v
    return total


def _scan_block(args):
    n, first = args
    return _kernels.scan_stats(n, first)


def _agreement_block(args):
    n, first = args
    return _kernels.square_agreement(n, first)


def _run_blocks(fn, n: int, workers: int) -> list[dict]:
    firsts = list(range(1, n + 1))
    if workers <= 1 or n <= 2:
        return [fn((n, first)) for first in firsts]
    with ProcessPoolExecutor(max_workers=min(workers, n)) as pool:
        return list(pool.map(fn, [(n, first) for first in firsts]))


def scan_stats(n: int, workers: int = 1) -> dict:
    """Merged per-permutation statistics over all of S_n (see kernel docs)."""
    if n > SCAN_BOUND:
        raise SizeTooLarge(f"scans are bounded at size {SCAN_BOUND}, got {n}")
    if n < 1:
        raise ValueError("size must be at least 1")
    return _merge_stats(_run_blocks(_scan_block, n, workers))


def square_agreement(n: int, workers: int = 1) -> dict:
    """Envelope route vs pattern route over all of S_n."""
    if n > SCAN_BOUND:
        raise SizeTooLarge(f"scans are bounded at size {SCAN_BOUND}, got {n}")
    blocks = _run_blocks(_agreement_block, n, workers)
    return {
        "by_envelope": sum(b["by_envelope"] for b in blocks),
        "by_patterns": sum(b["by_patterns"] for b in blocks),
        "disagreements": sum(b["disagreements"] for b in blocks),
    }


@dataclass
class CountTable:
    """Arbitrary-precision counts keyed by (class name, size)."""

    counts: dict[tuple[str, int], int] = field(default_factory=dict)

    def set(self, name: str, n: int, value: int) -> None:
        self.counts[(name, n)] = value

    def get(self, name: str, n: int) -> int:
        return self.counts[(name, n)]

    def __contains__(self, key) -> bool:
        return key in self.counts


def count_ctilde(n: int, workers: int = 1) -> dict:
    """{'total': |realizable pi1 set|, 'by_free_fixed_points': {k: count}}."""
    stats = scan_stats(n, workers)
    by_k = {k: v for k, v in enumerate(stats["ctilde_by_fixed"]) if v}
    if n == 1:
        by_k = {0: 1}
    return {"total": sum(by_k.values()), "by_free_fixed_points": by_k}


def count_square(n: int, workers: int = 1) -> dict:
    """{'square': Q, 'decomposable': B, 'by_components': {k>=2: count}}."""
    stats = scan_stats(n, workers)
    by_k = {k: v for k, v in sorted(stats["components"].items()) if k >= 2}
    return {
        "square": stats["square"],
        "decomposable": sum(by_k.values()),
        "by_components": by_k,
    }


def count_convex(n: int, method: str = "fibers", workers: int = 1) -> int:
    """Number of convex permutominoes of size n.

    method 'fibers' sums 2^k over the realizable permutations with k free
    fixed points; method 'intervals' runs the independent geometric oracle
    (bounded at size 6).
    """
    if method == "fibers":
        if n == 1:
            return 1
        stats = scan_stats(n, workers)
        return sum(v << k for k, v in enumerate(stats["ctilde_by_fixed"]))
    if method == "intervals":
        return len(oracles.enumerate_convex(n))
    raise ValueError(f"unknown method {method!r}")


def count_symmetric(n: int, bound: int = oracles.DEFAULT_BOUND) -> int:
    """Convex permutominoes of size n whose cell set is transpose-invariant."""
    return len(oracles.enumerate_class(n, "symmetric_xy", bound))


def convex_via_fibers(n: int, fiber_bound: int = 7) -> list[Permutomino]:
    """Materialize every convex permutomino of size n through the fibers.

    Walks S_n, keeps the realizable permutations and expands each fiber; the
    result is sorted by (pi1, boundary word) like the oracle listings.
    """
    if n > fiber_bound:
        raise SizeTooLarge(f"fiber listing is bounded at size {fiber_bound}, got {n}")
    out: list[Permutomino] = []
    for p in permutations(range(1, n + 1)):
        if is_associated(p):
            out.extend(fiber(p))
    out.sort(key=Permutomino.sort_key)
    return out


def listing(class_name: str, n: int, bound: int = oracles.DEFAULT_BOUND) -> list[Permutomino]:
    """Stable listing of a permutomino class (geometry-backed classes only)."""
    if class_name == "convex":
        return oracles.enumerate_convex(n, bound)
    if class_name == "column-convex":
        return oracles.enumerate_column_convex(n, bound)
    if class_name in ("directed", "parallelogram"):
        flag = "directed" if class_name == "directed" else "parallelogram"
        return oracles.enumerate_class(n, flag, bound)
    if class_name == "symmetric":
        return oracles.enumerate_class(n, "symmetric_xy", bound)
    raise ValueError(f"no geometric listing for class {class_name!r}")


def perm_listing(class_name: str, n: int) -> list[tuple[int, ...]]:
    """Stable listing of a permutation class (lexicographic)."""
    preds = {
        "ctilde": is_associated,
        "ctilde-prime": is_associated_pi2,
        "square": is_square,
        "decomposable": lambda p: is_square(p) and not is_indecomposable(p),
    }
    if class_name not in preds:
        raise ValueError(f"no permutation listing for class {class_name!r}")
    pred = preds[class_name]
    return [as_perm(p) for p in permutations(range(1, n + 1)) if pred(p)]
