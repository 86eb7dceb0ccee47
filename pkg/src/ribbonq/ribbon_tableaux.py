"""Shifted k-ribbons, strips, ribbon tableaux, standardization and the map to quotients.

A tableau stores its ribbons in standardization order: increasing label with
1' < 1 < 2' < 2 < ..., equal unmarked labels by increasing head diagonal and
equal marked labels by decreasing head diagonal.  That order is always a valid
order of adding the ribbons, so the prefixes form the chain of shapes.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .abacus_quotient import (
    SHIFTED,
    Quotient,
    abacus,
    k_core,
    k_quotient,
)
from .shapes import Cell, as_strict, cells, contains, diag, unshifted_cells
from .words_stats import Label, Word, as_label, format_word, reading_word


@dataclass(frozen=True)
class Ribbon:
    """A removable ribbon ``outer \\ inner``; ``parts`` are the removed parts."""

    cells: frozenset[Cell]
    kind: str  # "single" or "double"
    outer: tuple[int, ...]
    inner: tuple[int, ...]
    parts: tuple[int, ...]

    @property
    def head(self) -> Cell:
        return max(self.cells, key=diag)

    @property
    def tail(self) -> Cell:
        return min(self.cells, key=diag)

    @property
    def head_diag(self) -> int:
        return diag(self.head)

    def touches_diagonal(self) -> bool:
        return any(r == c for r, c in self.cells)

    def to_json(self) -> dict:
        return {"cells": [list(c) for c in sorted(self.cells)], "kind": self.kind}


def _replace(lam: tuple[int, ...], remove: Iterable[int], add: Iterable[int] = ()) -> tuple[int, ...]:
    parts = [p for p in lam if p not in set(remove)]
    parts.extend(x for x in add if x > 0)
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def _removable(lam: tuple[int, ...], k: int) -> tuple[Ribbon, ...]:
    present = set(lam)
    box = cells(lam)
    out = []
    for p in lam:
        m = p - k
        if m >= 0 and m not in present:
            inner = _replace(lam, [p], [m])
            out.append(Ribbon(box - cells(inner), "single", lam, inner, (p,)))
    for a in lam:
        b = k - a
        if 0 < b < a and b in present:
            inner = _replace(lam, [a, b])
            out.append(Ribbon(box - cells(inner), "double", lam, inner, (a, b)))
    out.sort(key=lambda r: -r.head_diag)
    return tuple(out)


def removable_ribbons(lam: Iterable[int], k: int) -> list[Ribbon]:
    """Removable k-ribbons, by descending head diagonal."""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    return list(_removable(as_strict(lam), k))


def ribbon_from_move(lam: tuple[int, ...], k: int, parts: tuple[int, ...]) -> Ribbon:
    for r in _removable(lam, k):
        if r.parts == parts:
            return r
    raise ValueError(f"no removable {k}-ribbon of {lam} removes parts {parts}")


# ---------------------------------------------------------------- strips


@lru_cache(maxsize=None)
def _strips(outer: tuple[int, ...], k: int, vertical: bool, bound: int) -> tuple:
    """All (inner, tiling) with outer/inner a strip whose heads lie below ``bound``.

    Heads of a horizontal strip have strictly increasing columns in adding
    order (strictly increasing rows for a vertical strip); we peel ribbons
    off the end, so each removed head must be strictly left of (below) the
    previous one.  Tilings are tuples of ribbons in adding order.
    """
    out = [(outer, ())]
    for r in _removable(outer, k):
        key = r.head[0] if vertical else r.head[1]
        if key < bound:
            for inner, tiling in _strips(r.inner, k, vertical, key):
                out.append((inner, tiling + (r,)))
    return tuple(out)


def strips_below(outer: Iterable[int], k: int, vertical: bool) -> dict[tuple[int, ...], list[tuple[Ribbon, ...]]]:
    """Map inner shape -> tilings of outer/inner as a horizontal/vertical k-strip."""
    outer = as_strict(outer)
    res: dict[tuple[int, ...], list[tuple[Ribbon, ...]]] = {}
    for inner, tiling in _strips(outer, k, vertical, 10**9):
        res.setdefault(inner, []).append(tiling)
    return res


def _strip_check(inner, outer, k, vertical) -> bool:
    inner, outer = as_strict(inner), as_strict(outer)
    if not contains(outer, inner):
        raise ValueError(f"shapes are not nested: {inner} is not inside {outer}")
    return inner in strips_below(outer, k, vertical)


def is_horizontal_strip(inner: Iterable[int], outer: Iterable[int], k: int) -> bool:
    return _strip_check(inner, outer, k, False)


def is_vertical_strip(inner: Iterable[int], outer: Iterable[int], k: int) -> bool:
    return _strip_check(inner, outer, k, True)


# ---------------------------------------------------------------- tableaux


def _label_key(label: Label) -> tuple[int, int]:
    return (label[0], 0 if label[1] else 1)


def _std_key(label: Label, head_diag: int) -> tuple[int, int, int]:
    v, marked = label
    return (v, 0 if marked else 1, -head_diag if marked else head_diag)


@dataclass(frozen=True)
class ShiftedRibbonTableau:
    shape: tuple[int, ...]
    k: int
    core: tuple[int, ...]
    ribbons: tuple[Ribbon, ...]
    labels: tuple[Label, ...]

    def __len__(self) -> int:
        return len(self.ribbons)

    def is_standard(self) -> bool:
        return [v for v, _ in self.labels] == list(range(1, len(self.labels) + 1))

    def is_unmarked(self) -> bool:
        return not any(m for _, m in self.labels)

    def heads(self) -> dict[Cell, Label]:
        return {r.head: lab for r, lab in zip(self.ribbons, self.labels)}

    def reading_word(self) -> Word:
        return reading_word(self.heads())

    def max_entry(self) -> int:
        return max((v for v, _ in self.labels), default=0)

    def weight(self, max_entry: int | None = None) -> tuple[int, ...]:
        n = self.max_entry() if max_entry is None else max_entry
        w = [0] * n
        for v, _ in self.labels:
            w[v - 1] += 1
        return tuple(w)

    def diagonal_ribbon_count(self) -> int:
        return sum(1 for r in self.ribbons if r.touches_diagonal())

    def chain(self) -> list[tuple[int, ...]]:
        """Shapes after each ribbon (standard) in adding order, from the core."""
        return [self.core] + [r.outer for r in self.ribbons]

    def level_chain(self, max_entry: int | None = None) -> list[tuple[int, ...]]:
        """Semi-standard chain core, lam(1'), lam(1), lam(2'), ..., lam(m)."""
        n = self.max_entry() if max_entry is None else max_entry
        out = [self.core]
        idx = 0
        for v in range(1, n + 1):
            for marked in (True, False):
                while idx < len(self.labels) and self.labels[idx] == (v, marked):
                    idx += 1
                out.append(self.ribbons[idx - 1].outer if idx else self.core)
        return out

    def validate(self) -> None:
        """Raise ValueError naming the first violated tableau rule."""
        shape = self.core
        for r, lab in zip(self.ribbons, self.labels):
            if r.inner != shape:
                raise ValueError("ribbons are not successively addable from the core")
            if r not in _removable(r.outer, self.k):
                raise ValueError(f"{r.cells} is not a {self.k}-ribbon")
            shape = r.outer
        if shape != self.shape:
            raise ValueError("ribbons do not cover the shape")
        if list(self.labels) != sorted(self.labels, key=_label_key):
            raise ValueError("labels do not weakly increase along the chain")
        chain = self.level_chain()
        for j in range(1, len(chain)):
            vertical = j % 2 == 1
            if chain[j - 1] not in strips_below(chain[j], self.k, vertical):
                kind = "vertical" if vertical else "horizontal"
                raise ValueError(f"entries {j // 2 + j % 2}{chr(39) if vertical else ''} do not form a {kind} strip")

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "k": self.k,
            "ribbons": [
                {"cells": [list(c) for c in sorted(r.cells)], "label": v, "marked": m}
                for r, (v, m) in zip(self.ribbons, self.labels)
            ],
        }

    def pretty(self) -> str:
        from .shapes import ascii_diagram

        fill = {}
        for r, (v, m) in zip(self.ribbons, self.labels):
            for c in r.cells:
                fill[c] = "."
            fill[r.head] = f"{v}'" if m else str(v)
        return ascii_diagram(cells(self.shape) - cells(self.core), fill)


def make_tableau(shape, k: int, pairs: Iterable[tuple[Ribbon, Label]]) -> ShiftedRibbonTableau:
    """Build a tableau from ribbons and labels in any order, then validate it."""
    shape = as_strict(shape)
    pairs = sorted(((r, as_label(l)) for r, l in pairs), key=lambda p: _std_key(p[1], p[0].head_diag))
    t = ShiftedRibbonTableau(
        shape, k, k_core(shape, k), tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)
    )
    t.validate()
    return t


@lru_cache(maxsize=None)
def _standard_chains(lam: tuple[int, ...], k: int) -> tuple[tuple[Ribbon, ...], ...]:
    rs = _removable(lam, k)
    if not rs:
        return ((),)
    out = []
    for r in rs:
        for chain in _standard_chains(r.inner, k):
            out.append(chain + (r,))
    return tuple(out)


@lru_cache(maxsize=None)
def count_standard(lam: tuple[int, ...], k: int) -> int:
    rs = _removable(as_strict(lam), k)
    if not rs:
        return 1
    return sum(count_standard(r.inner, k) for r in rs)


def enumerate_standard(lam: Iterable[int], k: int) -> list[ShiftedRibbonTableau]:
    """All standard k-ribbon tableaux; chains are built by removing ribbons in
    descending head-diagonal order, starting from the largest label."""
    lam = as_strict(lam)
    core = k_core(lam, k)
    out = []
    for chain in _standard_chains(lam, k):
        labels = tuple((i, False) for i in range(1, len(chain) + 1))
        out.append(ShiftedRibbonTableau(lam, k, core, chain, labels))
    return out


def enumerate_semistandard(lam: Iterable[int], k: int, max_entry: int) -> list[ShiftedRibbonTableau]:
    """All semi-standard k-ribbon tableaux with entries at most ``max_entry``."""
    lam = as_strict(lam)
    core = k_core(lam, k)
    results: list[ShiftedRibbonTableau] = []

    def go(shape, v, acc):
        if v == 0:
            if shape == core:
                pairs = sorted(acc, key=lambda p: _std_key(p[1], p[0].head_diag))
                results.append(ShiftedRibbonTableau(
                    lam, k, core, tuple(p[0] for p in pairs), tuple(p[1] for p in pairs)))
            return
        for mid, tilings in strips_below(shape, k, False).items():
            for tiling in tilings:
                plain = [(r, (v, False)) for r in tiling]
                for inner, vt in strips_below(mid, k, True).items():
                    for vtiling in vt:
                        marked = [(r, (v, True)) for r in vtiling]
                        go(inner, v - 1, acc + plain + marked)

    go(lam, max_entry, [])
    results.sort(key=lambda t: [_label_key(l) for l in t.labels] + [len(t.labels)])
    return results


# ---------------------------------------------------------------- standardization


def _standard_order(t: ShiftedRibbonTableau) -> list[int]:
    return sorted(range(len(t.ribbons)), key=lambda i: _std_key(t.labels[i], t.ribbons[i].head_diag))


def standardize(t: ShiftedRibbonTableau) -> ShiftedRibbonTableau:
    order = _standard_order(t)
    ribbons = tuple(t.ribbons[i] for i in order)
    labels = tuple((j, False) for j in range(1, len(order) + 1))
    return ShiftedRibbonTableau(t.shape, t.k, t.core, ribbons, labels)


def marked_standardize(t: ShiftedRibbonTableau) -> ShiftedRibbonTableau:
    order = _standard_order(t)
    ribbons = tuple(t.ribbons[i] for i in order)
    labels = tuple((j, t.labels[i][1]) for j, i in enumerate(order, 1))
    return ShiftedRibbonTableau(t.shape, t.k, t.core, ribbons, labels)


def mark_variants(t: ShiftedRibbonTableau) -> list[ShiftedRibbonTableau]:
    """All 2^n marked versions of a standard tableau."""
    if not t.is_standard():
        raise ValueError("mark_variants expects a standard tableau")
    out = []
    n = len(t.labels)
    for marks in itertools.product((False, True), repeat=n):
        labels = tuple((v, m) for (v, _), m in zip(t.labels, marks))
        out.append(ShiftedRibbonTableau(t.shape, t.k, t.core, t.ribbons, labels))
    return out


# ---------------------------------------------------------------- quotient fillings


@dataclass(frozen=True)
class QuotientFilling:
    """Labels on the cells of every quotient component.

    ``entries`` is a sorted tuple of ``((component, cell), label)``.
    """

    quotient: Quotient
    entries: tuple[tuple[tuple[int, Cell], Label], ...]

    def as_dict(self) -> dict[tuple[int, Cell], Label]:
        return dict(self.entries)

    def component(self, comp: int) -> dict[Cell, Label]:
        return {cell: lab for (c, cell), lab in self.entries if c == comp}

    def weight(self, max_entry: int | None = None) -> tuple[int, ...]:
        vals = [v for _, (v, _) in self.entries]
        n = max(vals, default=0) if max_entry is None else max_entry
        w = [0] * n
        for v in vals:
            w[v - 1] += 1
        return tuple(w)

    def to_json(self) -> dict:
        data = self.quotient.to_json()
        data["fillings"] = {
            str(comp): [
                {"cell": list(cell), "label": v, "marked": m}
                for cell, (v, m) in sorted(self.component(comp).items())
            ]
            for comp in self.quotient.components()
        }
        return data


def make_filling(q: Quotient, entries: Mapping[tuple[int, Cell], Label]) -> QuotientFilling:
    return QuotientFilling(q, tuple(sorted((key, as_label(v)) for key, v in entries.items())))


def check_filling(f: QuotientFilling) -> None:
    """Raise ValueError naming the first violated rule of a quotient filling."""
    q = f.quotient
    full = f.as_dict()
    for comp in q.components():
        want = q.component_cells(comp)
        have = {cell for (c, cell) in full if c == comp}
        if have != want:
            raise ValueError(f"component {comp} filling does not cover its shape")
    for (comp, cell), lab in full.items():
        key = _label_key(lab)
        r, c = cell
        for nb, horizontal in (((r, c + 1), True), ((r + 1, c), False)):
            other = full.get((comp, nb))
            if other is None:
                continue
            okey = _label_key(other)
            if okey < key:
                raise ValueError(f"entries decrease from {cell} to {nb} in component {comp}")
            if other != lab:
                continue
            marked = lab[1]
            if comp == SHIFTED:
                alpha_side = False
            else:
                off = q.folded[comp - 1].diag_offset
                alpha_side = (nb[1] - nb[0] <= off) and (c - r <= off)
            bad_marked = horizontal != alpha_side
            if marked == bad_marked:
                what = "marked" if marked else "unmarked"
                where = "row" if horizontal else "column"
                raise ValueError(f"repeated {what} entry in a {where} at {cell}, component {comp}")


def _quotient_std_order(f: QuotientFilling) -> list[tuple[int, Cell]]:
    q = f.quotient
    return sorted(
        (key for key, _ in f.entries),
        key=lambda key: _std_key(f.as_dict()[key], q.label(*key)),
    )


def phi_quotient(t: ShiftedRibbonTableau) -> QuotientFilling:
    """Send each ribbon to the quotient cell vacated by its abacus move."""
    q = k_quotient(t.shape, t.k)
    k = t.k
    order = _standard_order(t)
    a = abacus(t.shape, k)
    # bead positions: runner -> {row: rank}
    ranks = {i: {row: j for j, row in enumerate(a.runner_shape(i), 1)} for i in range(1, k + 1)}
    entries: dict[tuple[int, Cell], Label] = {}
    for idx in reversed(order):
        r = t.ribbons[idx]
        if r.kind == "single":
            p = r.parts[0]
            runner, row = (p - 1) % k + 1, (p + k - 1) // k
            rank = ranks[runner].pop(row)
            if row > 1:
                ranks[runner][row - 1] = rank
            key = q.cell_for_runner(runner, rank, row)
        else:
            big, small = r.parts
            k1 = q.cell_for_runner(big, ranks[big].pop(1), 1)
            k2 = q.cell_for_runner(small, ranks[small].pop(1), 1)
            if k1 != k2:
                raise AssertionError(f"pair removal maps to two cells {k1}, {k2}")
            key = k1
        entries[key] = t.labels[idx]
    return make_filling(q, entries)


def phi_inverse(f: QuotientFilling) -> ShiftedRibbonTableau:
    check_filling(f)
    q = f.quotient
    k = q.k
    lam = tuple(sorted(
        (k * (row - 1) + i for i in range(1, k + 1) for row in q.runner_shapes[i - 1]), reverse=True))
    a = abacus(lam, k)
    positions = {i: {j: row for j, row in enumerate(a.runner_shape(i), 1)} for i in range(1, k + 1)}
    full = f.as_dict()
    pairs = []
    shape = lam
    for key in reversed(_quotient_std_order(f)):
        moves = q.runner_for_cell(*key)
        removed = []
        for runner, rank, row in moves:
            if positions[runner].get(rank) != row:
                raise ValueError(f"cell {key[1]} of component {key[0]} is not removable when reached")
            removed.append(k * (row - 1) + runner)
        if len(moves) == 2:
            removed.sort(reverse=True)
            for runner, rank, _ in moves:
                del positions[runner][rank]
        else:
            runner, rank, row = moves[0]
            if row == 1:
                del positions[runner][rank]
            else:
                if row - 1 in positions[runner].values():
                    raise ValueError(f"cell {key[1]} of component {key[0]} is blocked")
                positions[runner][rank] = row - 1
        ribbon = ribbon_from_move(shape, k, tuple(removed))
        pairs.append((ribbon, full[key]))
        shape = ribbon.inner
    return make_tableau(lam, k, pairs)


def shifted_standard_count(lam: tuple[int, ...]) -> int:
    return count_standard(as_strict(lam), 1)


@lru_cache(maxsize=None)
def syt_count(mu: tuple[int, ...]) -> int:
    if sum(mu) == 0:
        return 1
    total = 0
    for i in range(len(mu)):
        if mu[i] > (mu[i + 1] if i + 1 < len(mu) else 0):
            nu = list(mu)
            nu[i] -= 1
            total += syt_count(tuple(x for x in nu if x))
    return total


def quotient_standard_count(lam: Iterable[int], k: int) -> int:
    """Multinomial times the standard counts of each quotient component."""
    from math import factorial

    q = k_quotient(lam, k)
    sizes = [sum(q.shifted)] + [f.size() for f in q.folded]
    total = factorial(sum(sizes))
    for s in sizes:
        total //= factorial(s)
    total *= shifted_standard_count(q.shifted)
    for f in q.folded:
        total *= syt_count(f.shape)
    return total


def describe(t: ShiftedRibbonTableau) -> str:
    return f"{t.shape} k={t.k} word={format_word(t.reading_word())}"
