"""Partitions, shifted diagrams, cells, diagonals and hooks.

Coordinates are ``(row, col)``, both 1-based, with row 1 the longest row.
"Above" always means a larger row index, so a shifted diagram drawn with its
long row at the bottom reads naturally in these coordinates.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator

Cell = tuple[int, int]


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalise an ordinary partition (trailing zeros dropped)."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"partition must be weakly decreasing: {p}")
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    return p


def as_strict(parts: Iterable[int]) -> tuple[int, ...]:
    """Validate a strict partition; parts are returned as a tuple."""
    p = as_partition(parts)
    for a, b in zip(p, p[1:]):
        if a == b:
            raise ValueError(f"strict partition must have distinct parts: {p}")
    return p


def is_strict(parts: tuple[int, ...]) -> bool:
    return all(a > b for a, b in zip(parts, parts[1:])) and all(x > 0 for x in parts)


def diag(cell: Cell) -> int:
    return cell[1] - cell[0] + 1


def cells(lam: tuple[int, ...]) -> frozenset[Cell]:
    """Cells of the shifted diagram: (i, j) with i <= j <= lam_i + i - 1."""
    return frozenset((i, j) for i, part in enumerate(lam, 1) for j in range(i, part + i))


def unshifted_cells(mu: tuple[int, ...]) -> frozenset[Cell]:
    return frozenset((i, j) for i, part in enumerate(mu, 1) for j in range(1, part + 1))


def shifted_region(lam: tuple[int, ...]) -> frozenset[Cell]:
    """Cells strictly left of the column where the last row starts."""
    if not lam:
        return frozenset()
    last_start = len(lam)
    return frozenset(c for c in cells(lam) if c[1] < last_start)


def hook(lam: tuple[int, ...], c: Cell) -> frozenset[Cell]:
    """Hook of a cell, with the extra row for cells of the shifted region."""
    box = cells(lam)
    if c not in box:
        raise ValueError(f"cell {c} is not in the shifted diagram of {lam}")
    r, col = c
    h = {x for x in box if x[0] == r and x[1] >= col}
    h |= {x for x in box if x[1] == col and x[0] >= r}
    if col < len(lam):
        top = max(x[0] for x in box if x[1] == col)
        h |= {x for x in box if x[0] == top + 1}
    return frozenset(h)


def hook_lengths(lam: tuple[int, ...]) -> dict[Cell, int]:
    return {c: len(hook(lam, c)) for c in cells(lam)}


def contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    if len(inner) > len(outer):
        return False
    return all(a >= b for a, b in zip(outer, inner))


def skew_cells(outer: tuple[int, ...], inner: tuple[int, ...]) -> frozenset[Cell]:
    """Cells of the skew-shifted diagram outer \\ inner."""
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    return cells(outer) - cells(inner)


def shape_from_cells(box: Iterable[Cell]) -> tuple[int, ...] | None:
    """Strict partition whose shifted diagram is exactly ``box``, or None."""
    box = frozenset(box)
    rows: dict[int, list[int]] = {}
    for r, c in box:
        rows.setdefault(r, []).append(c)
    lam = []
    for r in range(1, len(rows) + 1):
        if r not in rows:
            return None
        lam.append(len(rows[r]))
    lam = tuple(lam)
    if not is_strict(lam) or cells(lam) != box:
        return None
    return lam


def conjugate(mu: tuple[int, ...]) -> tuple[int, ...]:
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def strict_partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All strict partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - first, first - 1):
            out.append((first,) + rest)
    return tuple(out)


def strict_partitions_upto(n: int) -> Iterator[tuple[int, ...]]:
    for m in range(n + 1):
        yield from strict_partitions(m)


def ascii_diagram(box: Iterable[Cell], fill: dict[Cell, str] | None = None) -> str:
    """Debug rendering with the longest row at the bottom."""
    box = set(box)
    if not box:
        return "(empty)"
    fill = fill or {}
    width = max(len(v) for v in fill.values()) if fill else 1
    top = max(r for r, _ in box)
    right = max(c for _, c in box)
    lines = []
    for r in range(top, 0, -1):
        row = []
        for c in range(1, right + 1):
            if (r, c) in box:
                row.append(fill.get((r, c), "#").rjust(width))
            else:
                row.append(" " * width)
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines)
