"""The k-abacus, its moves, k-cores, folded diagrams and the shifted k-quotient.

Part ``p`` sits on runner ``((p - 1) mod k) + 1`` at row ``ceil(p / k)``.  The
runner shape ``alpha^(i)`` is the list of occupied rows on runner ``i`` in
decreasing order, which is always a strict partition.

Quotient components are indexed by integers: ``0`` is the shifted component
``alpha^(k)`` and ``i`` (``1 <= i <= k // 2``) is the folded diagram built
from runners ``i`` and ``k - i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .shapes import Cell, as_partition, as_strict, cells, conjugate, unshifted_cells

SHIFTED = 0


@dataclass(frozen=True)
class Abacus:
    k: int
    runners: tuple[tuple[int, ...], ...]

    def runner_shape(self, i: int) -> tuple[int, ...]:
        return self.runners[i - 1]

    def bead_count(self, i: int) -> int:
        return len(self.runners[i - 1])

    def has_bead(self, i: int, row: int) -> bool:
        return row in self.runners[i - 1]

    def partition(self) -> tuple[int, ...]:
        parts = [self.k * (r - 1) + i for i, rows in enumerate(self.runners, 1) for r in rows]
        return tuple(sorted(parts, reverse=True))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.runners]


def abacus(lam: Iterable[int], k: int) -> Abacus:
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    lam = as_strict(lam)
    runners: list[list[int]] = [[] for _ in range(k)]
    for p in lam:
        runners[(p - 1) % k].append((p + k - 1) // k)
    return Abacus(k, tuple(tuple(sorted(r, reverse=True)) for r in runners))


@dataclass(frozen=True, order=True)
class Move:
    """One abacus move.

    ``kind`` is ``"slide"`` (bead on ``runners[0]`` moves from ``row`` to
    ``row - 1``), ``"remove"`` (row-1 bead on runner k is removed) or
    ``"pair"`` (row-1 beads on ``runners[0] < runners[1]`` are removed).
    """

    type_: int
    runners: tuple[int, ...]
    row: int
    kind: str

    def parts_removed(self, k: int) -> tuple[int, ...]:
        if self.kind == "pair":
            return tuple(sorted(self.runners, reverse=True))
        return (k * (self.row - 1) + self.runners[0],)

    def parts_added(self, k: int) -> tuple[int, ...]:
        if self.kind == "slide":
            return (k * (self.row - 2) + self.runners[0],)
        return ()


def legal_moves(a: Abacus) -> list[Move]:
    """Type I moves, then Type II, each ordered by runner then row."""
    k = a.k
    out = []
    for i in range(1, k + 1):
        occupied = set(a.runner_shape(i))
        for r in sorted(occupied):
            if r >= 2 and r - 1 not in occupied:
                out.append(Move(1, (i,), r, "slide"))
            elif r == 1 and i == k:
                out.append(Move(1, (i,), r, "remove"))
    for i in range(1, k):
        j = k - i
        if i < j and a.has_bead(i, 1) and a.has_bead(j, 1):
            out.append(Move(2, (i, j), 1, "pair"))
    return out


def apply_move(a: Abacus, m: Move) -> Abacus:
    runners = [set(r) for r in a.runners]
    if m.kind == "slide":
        i = m.runners[0]
        if m.row not in runners[i - 1] or m.row - 1 in runners[i - 1] or m.row < 2:
            raise ValueError(f"illegal slide {m}")
        runners[i - 1].remove(m.row)
        runners[i - 1].add(m.row - 1)
    else:
        for i in m.runners:
            if 1 not in runners[i - 1]:
                raise ValueError(f"illegal removal {m}")
            runners[i - 1].remove(1)
    return Abacus(a.k, tuple(tuple(sorted(r, reverse=True)) for r in runners))


def partition_after(lam: tuple[int, ...], k: int, m: Move) -> tuple[int, ...]:
    parts = list(lam)
    for p in m.parts_removed(k):
        parts.remove(p)
    parts.extend(m.parts_added(k))
    return tuple(sorted(parts, reverse=True))


@lru_cache(maxsize=None)
def _core(lam: tuple[int, ...], k: int) -> tuple[int, ...]:
    a = abacus(lam, k)
    while True:
        moves = legal_moves(a)
        if not moves:
            return a.partition()
        a = apply_move(a, moves[0])


def k_core(lam: Iterable[int], k: int) -> tuple[int, ...]:
    return _core(as_strict(lam), k)


def reachable_cores(lam: Iterable[int], k: int) -> set[tuple[int, ...]]:
    """Cores reached by every maximal move sequence (exhaustive search)."""
    seen: dict[tuple[int, ...], frozenset] = {}

    def go(mu: tuple[int, ...]) -> frozenset:
        if mu in seen:
            return seen[mu]
        moves = legal_moves(abacus(mu, k))
        if not moves:
            res = frozenset([mu])
        else:
            res = frozenset().union(*(go(partition_after(mu, k, m)) for m in moves))
        seen[mu] = res
        return res

    return set(go(as_strict(lam)))


def k_length(lam: Iterable[int], k: int) -> int:
    """Number of ribbons touching the main diagonal in any k-ribbon tableau.

    Counts beads removed from runner k plus, for each conjugate pair of
    runners, the number of Type II removals, which is the smaller bead count.
    """
    a = abacus(lam, k)
    total = a.bead_count(k)
    for i in range(1, k):
        if i < k - i:
            total += min(a.bead_count(i), a.bead_count(k - i))
    return total


# ---------------------------------------------------------------- folded diagrams


@dataclass(frozen=True)
class FoldedDiagram:
    """Unshifted shape with the specialized diagonal ``col - row = diag_offset``."""

    shape: tuple[int, ...]
    diag_offset: int

    def cells(self) -> frozenset[Cell]:
        return unshifted_cells(self.shape)

    def diagonal_cells(self) -> frozenset[Cell]:
        return frozenset(c for c in self.cells() if c[1] - c[0] == self.diag_offset)

    def side(self, c: Cell) -> int:
        """-1 for the alpha side, 0 on the specialized diagonal, +1 for beta."""
        e = c[1] - c[0] - self.diag_offset
        return (e > 0) - (e < 0)

    def size(self) -> int:
        return sum(self.shape)

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "diag_offset": self.diag_offset}


def combine(alpha: Iterable[int], beta: Iterable[int]) -> FoldedDiagram:
    """The folded diagram alpha <> beta.

    The transpose of alpha is glued below/left of the specialized diagonal and
    beta to its right; after trimming the taller staircase the diagonal runs
    along ``col - row = ht(alpha) - ht(beta)``.
    """
    alpha, beta = as_strict(alpha), as_strict(beta)
    c = len(alpha) - len(beta)
    box = set()
    for i, b in enumerate(beta, 1):
        box.update((i, col) for col in range(1, b + c + i))
    for j, a in enumerate(alpha, 1):
        box.update((r, j) for r in range(1, a - c + j))
    rows: dict[int, int] = {}
    for r, col in box:
        rows[r] = max(rows.get(r, 0), col)
    shape = tuple(rows[r] for r in range(1, len(rows) + 1))
    return FoldedDiagram(as_partition(shape), c)


def decompose(f: FoldedDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Recover (alpha, beta) with combine(alpha, beta) == f."""
    gamma, c = f.shape, f.diag_offset
    gt = conjugate(gamma)
    span = len(gamma) + len(gt) + abs(c) + 2

    def at(seq, i):
        return seq[i - 1] if i <= len(seq) else 0

    alpha = tuple(x for x in (at(gt, i) + c - i + 1 for i in range(1, span)) if x > 0)
    beta = tuple(x for x in (at(gamma, i) - c - i + 1 for i in range(1, span)) if x > 0)
    return alpha, beta


def is_folded_diagram(f: FoldedDiagram) -> bool:
    try:
        a, b = decompose(f)
        return combine(a, b) == f
    except ValueError:
        return False


def _alpha_to_gamma(c: int, p: int, q: int) -> Cell:
    return (q - max(c, 0) + max(-c, 0), p)


def _beta_to_gamma(c: int, p: int, q: int) -> Cell:
    return (p, q - max(-c, 0) + max(c, 0))


def alpha_cell_in_gamma(f: FoldedDiagram, cell: Cell) -> Cell:
    """Image of a shifted alpha cell (p, q) inside the folded diagram."""
    return _alpha_to_gamma(f.diag_offset, *cell)


def beta_cell_in_gamma(f: FoldedDiagram, cell: Cell) -> Cell:
    return _beta_to_gamma(f.diag_offset, *cell)


def gamma_cell_origin(f: FoldedDiagram, cell: Cell) -> list[tuple[str, Cell]]:
    """Shifted cells of alpha and/or beta landing on ``cell``."""
    c = f.diag_offset
    r, col = cell
    e = col - r - c
    out = []
    if e <= 0:
        out.append(("alpha", (col, r + max(c, 0) - max(-c, 0))))
    if e >= 0:
        out.append(("beta", (r, col + max(-c, 0) - max(c, 0))))
    return out


# ---------------------------------------------------------------- quotient


def folded_label(k: int, i: int, f: FoldedDiagram, cell: Cell) -> int:
    """Inherited diagonal value of a cell of folded component i."""
    e = cell[1] - cell[0] - f.diag_offset
    if e == 0:
        return k - i
    if e > 0:
        return k * (e + 1) - i
    return k * (-e) + i


def shifted_label(k: int, cell: Cell) -> int:
    return k * (cell[1] - cell[0] + 1)


@dataclass(frozen=True)
class Quotient:
    k: int
    core: tuple[int, ...]
    runner_shapes: tuple[tuple[int, ...], ...]
    folded: tuple[FoldedDiagram, ...]
    shifted: tuple[int, ...]

    def components(self) -> list[int]:
        return [SHIFTED] + list(range(1, len(self.folded) + 1))

    def component_cells(self, comp: int) -> frozenset[Cell]:
        if comp == SHIFTED:
            return cells(self.shifted)
        return self.folded[comp - 1].cells()

    def label(self, comp: int, cell: Cell) -> int:
        if comp == SHIFTED:
            return shifted_label(self.k, cell)
        return folded_label(self.k, comp, self.folded[comp - 1], cell)

    def diagonal_labels(self) -> dict[int, dict[int, int]]:
        """Per component, a map from the cell's ``col - row`` to its label."""
        out: dict[int, dict[int, int]] = {}
        for comp in self.components():
            out[comp] = {c[1] - c[0]: self.label(comp, c) for c in self.component_cells(comp)}
        return out

    def size(self) -> int:
        return sum(len(self.component_cells(c)) for c in self.components())

    def underlying_shapes(self) -> tuple[tuple[int, ...], ...]:
        return tuple(f.shape for f in self.folded)

    def to_json(self) -> dict:
        labels = {
            str(comp): {str(d): v for d, v in sorted(m.items())}
            for comp, m in self.diagonal_labels().items()
        }
        return {
            "k": self.k,
            "core": list(self.core),
            "runner_shapes": [list(r) for r in self.runner_shapes],
            "folded": [f.to_json() for f in self.folded],
            "shifted": list(self.shifted),
            "labels": labels,
        }

    # A bead of rank j (j-th highest bead on its runner) leaving ``row``
    # removes the cell (j, j + row - 1) of its runner's own shifted shape.

    def cell_for_runner(self, runner: int, rank: int, row: int) -> tuple[int, Cell]:
        """Quotient cell vacated when bead ``rank`` of ``runner`` leaves ``row``."""
        k = self.k
        own = (rank, rank + row - 1)
        if runner == k:
            return SHIFTED, own
        i = min(runner, k - runner)
        f = self.folded[i - 1]
        if runner <= k - runner:
            return i, alpha_cell_in_gamma(f, own)
        return i, beta_cell_in_gamma(f, own)

    def runner_for_cell(self, comp: int, cell: Cell) -> list[tuple[int, int, int]]:
        """Inverse of cell_for_runner: list of (runner, rank, row) triples.

        Two triples are returned for a cell on a specialized diagonal, which
        corresponds to a Type II pair removal.
        """
        k = self.k
        if comp == SHIFTED:
            p, q = cell
            return [(k, p, q - p + 1)]
        f = self.folded[comp - 1]
        out = []
        for side, (p, q) in gamma_cell_origin(f, cell):
            runner = comp if side == "alpha" else k - comp
            out.append((runner, p, q - p + 1))
        return out


def k_quotient(lam: Iterable[int], k: int) -> Quotient:
    lam = as_strict(lam)
    a = abacus(lam, k)
    folded = []
    for i in range(1, k // 2 + 1):
        j = k - i
        beta = a.runner_shape(j) if i < j else ()
        folded.append(combine(a.runner_shape(i), beta))
    return Quotient(k, k_core(lam, k), a.runners, tuple(folded), a.runner_shape(k))


# ---------------------------------------------------------------- unshifted abacus


def _beta_set(mu: tuple[int, ...], n: int) -> list[int]:
    padded = list(mu) + [0] * (n - len(mu))
    return [padded[i] + n - 1 - i for i in range(n)]


def _from_beta(beta: Iterable[int]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    n = len(b)
    return as_partition(b[i] - (n - 1 - i) for i in range(n))


def unshifted_core_quotient(mu: Iterable[int], k: int):
    """James-Kerber core and quotient via beta numbers.

    Uses ``N`` beads with ``N`` a multiple of k, and orders the quotient by
    residue 0, 1, ..., k-1 of the bead positions.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    mu = as_partition(mu)
    n = k * (-(-len(mu) // k))
    beta = _beta_set(mu, n)
    parts = []
    core_beta = []
    for r in range(k):
        rows = sorted((b // k for b in beta if b % k == r), reverse=True)
        m = len(rows)
        parts.append(as_partition(rows[j] - (m - 1 - j) for j in range(m)))
        core_beta.extend(k * t + r for t in range(m))
    return _from_beta(core_beta), tuple(parts)


def unshifted_from_quotient(parts: Iterable[Iterable[int]], core: Iterable[int], k: int) -> tuple[int, ...]:
    parts = [as_partition(p) for p in parts]
    if len(parts) != k:
        raise ValueError(f"expected {k} quotient components, got {len(parts)}")
    core = as_partition(core)
    n0 = k * (-(-len(core) // k))
    base = _beta_set(core, n0)
    counts = [sum(1 for b in base if b % k == r) for r in range(k)]
    if any(sorted(b // k for b in base if b % k == r) != list(range(counts[r])) for r in range(k)):
        raise ValueError(f"{core} is not a {k}-core")
    t = max([0] + [len(parts[r]) - counts[r] for r in range(k)])
    beta = []
    for r in range(k):
        m = counts[r] + t
        nu = list(parts[r]) + [0] * (m - len(parts[r]))
        beta.extend(k * (nu[j] + m - 1 - j) + r for j in range(m))
    return _from_beta(beta)
