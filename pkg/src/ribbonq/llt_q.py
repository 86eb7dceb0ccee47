"""Unshifted ribbon tableaux, spin, LLT polynomials and the shifted q-analogue QR.

The spin of an unshifted ribbon is ``(ht - 1) / 2`` with ``ht`` the number of
rows it occupies; spins are stored doubled so everything stays integral.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .abacus_quotient import k_quotient, unshifted_core_quotient, unshifted_from_quotient
from .ribbon_tableaux import enumerate_standard
from .shapes import Cell, as_partition, unshifted_cells
from .symfunc import Q, QPolynomial, QSym, SymPoly, _F, _G, expand_in_Q, schur
from .words_stats import Word, descent_set, format_word, peak_set, reading_word

SPIN_CONVENTIONS = ("rows", "cells")


@dataclass(frozen=True)
class UnshiftedRibbon:
    cells: frozenset[Cell]
    outer: tuple[int, ...]
    inner: tuple[int, ...]

    @property
    def head(self) -> Cell:
        """Cell of largest content."""
        return max(self.cells, key=lambda c: (c[1] - c[0], c[1]))

    @property
    def height(self) -> int:
        return len({r for r, _ in self.cells})

    def spin2(self, convention: str = "rows") -> int:
        if convention == "rows":
            return self.height - 1
        if convention == "cells":
            return len(self.cells) - self.height
        raise ValueError(f"unknown spin convention {convention!r}")


def _beta(mu: tuple[int, ...]) -> list[int]:
    n = len(mu)
    return [mu[i] + n - 1 - i for i in range(n)]


def _from_beta(beta) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    n = len(b)
    return as_partition(b[i] - (n - 1 - i) for i in range(n))


@lru_cache(maxsize=None)
def unshifted_removable(mu: tuple[int, ...], k: int) -> tuple[UnshiftedRibbon, ...]:
    beta = _beta(mu)
    occupied = set(beta)
    box = unshifted_cells(mu)
    out = []
    for b in beta:
        if b - k >= 0 and b - k not in occupied:
            inner = _from_beta([x if x != b else b - k for x in beta])
            out.append(UnshiftedRibbon(box - unshifted_cells(inner), mu, inner))
    out.sort(key=lambda r: -(r.head[1] - r.head[0]))
    return tuple(out)


@dataclass(frozen=True)
class UnshiftedRibbonTableau:
    shape: tuple[int, ...]
    k: int
    ribbons: tuple[UnshiftedRibbon, ...]  # ribbon i carries label i + 1

    def heads(self) -> dict[Cell, int]:
        return {r.head: i for i, r in enumerate(self.ribbons, 1)}

    def reading_word(self) -> Word:
        return reading_word(self.heads())

    def descent_set(self) -> frozenset[int]:
        return descent_set(self.reading_word())

    def spin2(self, convention: str = "rows") -> int:
        return sum(r.spin2(convention) for r in self.ribbons)

    def vertical_domino_count(self) -> int:
        return sum(1 for r in self.ribbons if r.height > 1)

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "k": self.k,
            "ribbons": [
                {"cells": [list(c) for c in sorted(r.cells)], "label": i, "marked": False}
                for i, r in enumerate(self.ribbons, 1)
            ],
        }


@lru_cache(maxsize=None)
def _chains(mu: tuple[int, ...], k: int) -> tuple[tuple[UnshiftedRibbon, ...], ...]:
    rs = unshifted_removable(mu, k)
    if not rs:
        return ((),)
    return tuple(chain + (r,) for r in rs for chain in _chains(r.inner, k))


def enumerate_unshifted_srt(mu: Iterable[int], k: int) -> list[UnshiftedRibbonTableau]:
    mu = as_partition(mu)
    return [UnshiftedRibbonTableau(mu, k, c) for c in _chains(mu, k)]


@lru_cache(maxsize=None)
def max_spin2(mu: tuple[int, ...], k: int, convention: str = "rows") -> int:
    return max(t.spin2(convention) for t in enumerate_unshifted_srt(mu, k))


def cospin(t: UnshiftedRibbonTableau, convention: str = "rows") -> int:
    d = max_spin2(t.shape, t.k, convention) - t.spin2(convention)
    if d % 2:
        raise ArithmeticError(f"cospin of {t.shape} is not integral under convention {convention!r}")
    return d // 2


def _llt_qsym(mu: tuple[int, ...], k: int, convention: str) -> QSym:
    out = QSym()
    for t in enumerate_unshifted_srt(mu, k):
        n = len(t.ribbons)
        term = QSym.one() if n == 0 else _F(t.descent_set(), n)
        out = out + term.scale(QPolynomial.q(cospin(t, convention)))
    return out


def LLT(mu: Iterable[int], k: int, convention: str = "rows") -> QSym:
    return _llt_qsym(as_partition(mu), k, convention)


def llt_poly(mu: Iterable[int], k: int, num_vars: int, convention: str = "rows") -> SymPoly:
    return LLT(mu, k, convention).to_sympoly(num_vars)


def quotient_schur_product(mu: Iterable[int], k: int) -> QSym:
    """Product of Schur functions of the unshifted k-quotient of mu."""
    _, parts = unshifted_core_quotient(mu, k)
    out = QSym.one()
    for p in parts:
        out = out * schur(p)
    return out


def qr_shape(lam: Iterable[int], k: int) -> tuple[int, ...]:
    """The unshifted shape built from the folded components' underlying shapes."""
    q = k_quotient(lam, k)
    j = k // 2
    if j == 0:
        return ()
    return unshifted_from_quotient(q.underlying_shapes(), (), j)


def QR(lam: Iterable[int], k: int, convention: str = "rows") -> QSym:
    q = k_quotient(lam, k)
    mu = qr_shape(lam, k)
    j = k // 2
    inner = QSym.one()
    if j > 0:
        inner = QSym()
        for t in enumerate_unshifted_srt(mu, j):
            n = len(t.ribbons)
            if n == 0:
                term = QSym.one()
            else:
                pk = peak_set(t.descent_set())
                term = _G(pk, n).scale(2 ** (len(pk) + 1))
            inner = inner + term.scale(QPolynomial.q(cospin(t, convention)))
    return Q(q.shifted) * inner


def qr_poly(lam: Iterable[int], k: int, num_vars: int, convention: str = "rows") -> SymPoly:
    return QR(lam, k, convention).to_sympoly(num_vars)


def qr_expansion(lam: Iterable[int], k: int, convention: str = "rows"):
    return expand_in_Q(QR(lam, k, convention))


def counterexample_report(lam: Iterable[int], k: int) -> list[dict]:
    """Reading word, peak set and 2^(|Peak|+1) for every standard tableau."""
    rows = []
    for t in enumerate_standard(lam, k):
        if len(t) == 0:
            continue
        w = t.reading_word()
        pk = peak_set(descent_set(w))
        rows.append({
            "word": format_word(w),
            "descents": sorted(descent_set(w)),
            "peak": sorted(pk),
            "coefficient": 2 ** (len(pk) + 1),
        })
    return rows
