"""Exact symmetric and quasisymmetric functions with coefficients in Z[q].

Internally everything is a ``QSym``: a finite sum of monomial quasisymmetric
functions ``M_alpha`` with integer or ``QPolynomial`` coefficients.  Tableau
generating functions are computed as weighted chains of shapes with nonempty
steps, which yields M-coefficients directly.  ``SymPoly`` is the explicit
polynomial in finitely many variables; the public ``*_Q``/``schur_*``
functions return it, while the capitalised helpers (``F``, ``G``, ``Q`` ...)
return ``QSym`` for cheap exact identities.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Union

from .abacus_quotient import FoldedDiagram, k_length, k_quotient
from .shapes import as_partition, as_strict, cells, partitions, strict_partitions
from .words_stats import (
    adjust_marked,
    composition_of,
    descent_set,
    peak_set,
    spike_set,
    subsets,
)

# ---------------------------------------------------------------- coefficients


class QPolynomial:
    """Polynomial in q with integer coefficients, stored low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def coerce(cls, x: "Coeff") -> "QPolynomial":
        return x if isinstance(x, QPolynomial) else cls([x])

    @classmethod
    def q(cls, power: int = 1) -> "QPolynomial":
        return cls([0] * power + [1])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPolynomial([other])
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Coeff") -> "QPolynomial":
        o = QPolynomial.coerce(other).coeffs
        n = max(len(self.coeffs), len(o))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o + (0,) * (n - len(o))
        return QPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "Coeff") -> "QPolynomial":
        return self + (-QPolynomial.coerce(other))

    def __rsub__(self, other: "Coeff") -> "QPolynomial":
        return QPolynomial.coerce(other) - self

    def __mul__(self, other: "Coeff") -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial(x * other for x in self.coeffs)
        o = other.coeffs
        out = [0] * max(0, len(self.coeffs) + len(o) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(o):
                out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def exact_div(self, d: int) -> "QPolynomial":
        if any(x % d for x in self.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {d}")
        return QPolynomial(x // d for x in self.coeffs)

    def at(self, q: int) -> int:
        return sum(c * q**i for i, c in enumerate(self.coeffs))

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}")
        return "+".join(terms).replace("+-", "-")


Coeff = Union[int, QPolynomial]


def _is_zero(c: Coeff) -> bool:
    return not c


def _to_q(c: Coeff) -> QPolynomial:
    return QPolynomial.coerce(c)


# ---------------------------------------------------------------- explicit polynomials


class SymPoly:
    """Polynomial in ``num_vars`` variables with Z[q] coefficients."""

    __slots__ = ("num_vars", "terms")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], Coeff] | None = None):
        self.num_vars = num_vars
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != num_vars:
                raise ValueError(f"exponent {e} does not have {num_vars} entries")
            c = _to_q(c)
            if c:
                clean[tuple(e)] = c
        self.terms: dict[tuple[int, ...], QPolynomial] = clean

    def _check(self, other: "SymPoly") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(f"mismatched num_vars: {self.num_vars} vs {other.num_vars}")

    def __add__(self, other: "SymPoly") -> "SymPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, QPolynomial()) + c
        return SymPoly(self.num_vars, out)

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.num_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SymPoly") -> "SymPoly":
        return self + (-other)

    def scale(self, c: Coeff) -> "SymPoly":
        return SymPoly(self.num_vars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other: Union["SymPoly", Coeff]) -> "SymPoly":
        if not isinstance(other, SymPoly):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[int, ...], QPolynomial] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, QPolynomial()) + c1 * c2
        return SymPoly(self.num_vars, out)

    def __rmul__(self, other: Coeff) -> "SymPoly":
        return self.scale(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, SymPoly) and self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exps: Iterable[int]) -> QPolynomial:
        return self.terms.get(tuple(exps), QPolynomial())

    def at_q(self, q: int) -> "SymPoly":
        return SymPoly(self.num_vars, {e: c.at(q) for e, c in self.terms.items()})

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for i in range(self.num_vars - 1):
                f = list(e)
                f[i], f[i + 1] = f[i + 1], f[i]
                if self.terms.get(tuple(f)) != c:
                    return False
        return True

    def monomial_coefficients(self) -> dict[tuple[int, ...], QPolynomial]:
        """Coefficients of m_lambda, read off the sorted exponent vectors."""
        out = {}
        for e, c in self.terms.items():
            if list(e) == sorted(e, reverse=True):
                out[as_partition(e)] = c
        return out

    def to_json(self) -> dict:
        return {
            "num_vars": self.num_vars,
            "terms": [
                {"exponents": list(e), "q_coeffs": list(c.coeffs)}
                for e, c in sorted(self.terms.items(), reverse=True)
            ],
        }

    def __repr__(self) -> str:
        return f"SymPoly({self.num_vars}, {self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                (f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}") for i, a in enumerate(e) if a
            )
            cs = str(c)
            if len(c.coeffs) > 1 and any(c.coeffs[:-1]):
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


# ---------------------------------------------------------------- quasisymmetric functions


@lru_cache(maxsize=None)
def _stuffle(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """M_a * M_b as overlapping shuffles."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict[tuple[int, ...], int] = {}
    for head, rest_a, rest_b in (
        (a[0], a[1:], b),
        (b[0], a, b[1:]),
        (a[0] + b[0], a[1:], b[1:]),
    ):
        for comp, m in _stuffle(rest_a, rest_b):
            key = (head,) + comp
            out[key] = out.get(key, 0) + m
    return tuple(out.items())


@lru_cache(maxsize=None)
def _compositions_into(alpha: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of length n whose nonzero entries read alpha."""
    out = []
    for pos in itertools.combinations(range(n), len(alpha)):
        e = [0] * n
        for p, a in zip(pos, alpha):
            e[p] = a
        out.append(tuple(e))
    return tuple(out)


class QSym:
    """Sum of monomial quasisymmetric functions ``M_alpha``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], Coeff] | None = None):
        self.terms: dict[tuple[int, ...], Coeff] = {
            tuple(a): c for a, c in (terms or {}).items() if not _is_zero(c)
        }

    @classmethod
    def one(cls) -> "QSym":
        return cls({(): 1})

    @classmethod
    def M(cls, alpha: Iterable[int]) -> "QSym":
        return cls({tuple(alpha): 1})

    def __add__(self, other: "QSym") -> "QSym":
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out[a] + c if a in out else c
        return QSym(out)

    def __neg__(self) -> "QSym":
        return QSym({a: -c for a, c in self.terms.items()})

    def __sub__(self, other: "QSym") -> "QSym":
        return self + (-other)

    def scale(self, c: Coeff) -> "QSym":
        return QSym({a: v * c for a, v in self.terms.items()})

    def __mul__(self, other: Union["QSym", Coeff]) -> "QSym":
        if not isinstance(other, QSym):
            return self.scale(other)
        out: dict[tuple[int, ...], Coeff] = {}
        for a, c1 in self.terms.items():
            for b, c2 in other.terms.items():
                c = c1 * c2
                for comp, m in _stuffle(a, b):
                    v = c * m
                    out[comp] = out[comp] + v if comp in out else v
        return QSym(out)

    def __rmul__(self, other: Coeff) -> "QSym":
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSym):
            return NotImplemented
        return (self - other).terms == {}

    def __hash__(self):
        return hash(frozenset((a, _to_q(c)) for a, c in self.terms.items()))

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*M{list(a)}" for a, c in sorted(self.terms.items()))
        return f"QSym({inner or 0})"

    def degree(self) -> int:
        return max((sum(a) for a in self.terms), default=0)

    def is_symmetric(self) -> bool:
        """True iff M-coefficients depend only on the sorted composition."""
        by_part: dict[tuple[int, ...], QPolynomial] = {}
        for a, c in self.terms.items():
            key = tuple(sorted(a, reverse=True))
            c = _to_q(c)
            if by_part.setdefault(key, c) != c:
                return False
        for key, c in by_part.items():
            for perm in set(itertools.permutations(key)):
                if _to_q(self.terms.get(perm, 0)) != c:
                    return False
        return True

    def monomial_coefficients(self) -> dict[tuple[int, ...], QPolynomial]:
        if not self.is_symmetric():
            raise ValueError("function is not symmetric")
        return {a: _to_q(c) for a, c in self.terms.items() if list(a) == sorted(a, reverse=True)}

    def at_q(self, q: int) -> "QSym":
        return QSym({a: (c.at(q) if isinstance(c, QPolynomial) else c) for a, c in self.terms.items()})

    def to_sympoly(self, num_vars: int) -> SymPoly:
        out: dict[tuple[int, ...], QPolynomial] = {}
        for a, c in self.terms.items():
            for e in _compositions_into(a, num_vars):
                out[e] = out.get(e, QPolynomial()) + c
        return SymPoly(num_vars, out)


# ---------------------------------------------------------------- fundamental and peak bases


@lru_cache(maxsize=None)
def _F(D: frozenset[int], n: int) -> QSym:
    rest = [i for i in range(1, n) if i not in D]
    out = {}
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            out[composition_of(D | set(extra), n)] = 1
    return QSym(out)


def F(D: Iterable[int], n: int) -> QSym:
    """Fundamental quasisymmetric function F_D of degree n."""
    D = frozenset(D)
    if any(not 1 <= d < n for d in D):
        raise ValueError(f"descent set {sorted(D)} is not inside [1, {n - 1}]")
    return _F(D, n)


@lru_cache(maxsize=None)
def _G(P: frozenset[int], n: int) -> QSym:
    out = QSym()
    for D in subsets(max(n - 1, 0)):
        if P <= spike_set(D, n):
            out = out + _F(D, n)
    return out


def G(P: Iterable[int], n: int) -> QSym:
    """Peak function: sum of F_D over D with Spike(D) containing P."""
    P = frozenset(P)
    if any(not 2 <= p <= n - 1 for p in P) or any(p + 1 in P for p in P):
        raise ValueError(f"{sorted(P)} is not a peak set for n={n}")
    return _G(P, n)


def fundamental_F(D: Iterable[int], n_total: int, num_vars: int) -> SymPoly:
    return F(D, n_total).to_sympoly(num_vars)


def peak_G(P: Iterable[int], n_total: int, num_vars: int) -> SymPoly:
    return G(P, n_total).to_sympoly(num_vars)


def monomial_m(lam: Iterable[int], num_vars: int) -> SymPoly:
    lam = as_partition(lam)
    return SymPoly(num_vars, {e: 1 for p in set(itertools.permutations(lam)) for e in _compositions_into(p, num_vars)})


# ---------------------------------------------------------------- chain generating functions


def chain_qsym(start, end, steps: Callable) -> QSym:
    """Sum over chains start = s0 < s1 < ... < sm = end of prod(mult) M_(sizes).

    ``steps(shape)`` yields ``(smaller_shape, size, multiplicity)`` for every
    nonempty step ending at ``shape``.
    """
    memo: dict = {}

    def go(shape) -> dict[tuple[int, ...], int]:
        if shape in memo:
            return memo[shape]
        out: dict[tuple[int, ...], int] = {(): 1} if shape == start else {}
        for smaller, size, mult in steps(shape):
            for comp, c in go(smaller).items():
                key = comp + (size,)
                out[key] = out.get(key, 0) + c * mult
        memo[shape] = out
        return out

    return QSym(go(end))


def _shifted_steps(k: int, inner, p_version: bool):
    """Steps mu -> nu made of a vertical strip (marked) then a horizontal strip."""
    from .ribbon_tableaux import strips_below

    cache: dict = {}

    def steps(nu):
        if nu in cache:
            return cache[nu]
        counts: dict[tuple, list[int]] = {}
        for mid, htilings in strips_below(nu, k, False).items():
            h = len(htilings[0])
            for mu, vtilings in strips_below(mid, k, True).items():
                if inner is not None and not _contains(mu, inner):
                    continue
                v = len(vtilings[0])
                if p_version and any(r.touches_diagonal() for r in vtilings[0]):
                    continue
                if h + v == 0:
                    continue
                counts.setdefault(mu, [h + v, 0])[1] += 1
        cache[nu] = [(mu, s, m) for mu, (s, m) in counts.items()]
        return cache[nu]

    return steps


def _contains(outer, inner) -> bool:
    return len(inner) <= len(outer) and all(a >= b for a, b in zip(outer, inner))


def _unshifted_steps_schur(nu):
    """Horizontal strips ending at nu."""
    nu = tuple(nu)
    ranges = []
    for i, part in enumerate(nu):
        low = nu[i + 1] if i + 1 < len(nu) else 0
        ranges.append(range(low, part + 1))
    out = []
    for mu in itertools.product(*ranges):
        size = sum(nu) - sum(mu)
        if size:
            out.append((tuple(x for x in mu if x), size, 1))
    return out


@lru_cache(maxsize=None)
def schur(mu: tuple[int, ...]) -> QSym:
    mu = as_partition(mu)
    return chain_qsym((), mu, _unshifted_steps_schur)


@lru_cache(maxsize=None)
def skewQ(outer: tuple[int, ...], inner: tuple[int, ...] = ()) -> QSym:
    outer, inner = as_strict(outer), as_strict(inner)
    if not _contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    return chain_qsym(inner, outer, _shifted_steps(1, inner, False))


def Q(lam: Iterable[int]) -> QSym:
    return skewQ(as_strict(lam), ())


@lru_cache(maxsize=None)
def P(lam: tuple[int, ...]) -> QSym:
    lam = as_strict(lam)
    return chain_qsym((), lam, _shifted_steps(1, (), True))


def schur_s(mu: Iterable[int], num_vars: int) -> SymPoly:
    return schur(as_partition(mu)).to_sympoly(num_vars)


def schurQ(lam: Iterable[int], num_vars: int) -> SymPoly:
    return Q(lam).to_sympoly(num_vars)


def schurP(lam: Iterable[int], num_vars: int) -> SymPoly:
    return P(as_strict(lam)).to_sympoly(num_vars)


def skew_schurQ(outer: Iterable[int], inner: Iterable[int], num_vars: int) -> SymPoly:
    return skewQ(as_strict(outer), as_strict(inner)).to_sympoly(num_vars)


# ---------------------------------------------------------------- folded diagrams


def _folded_steps(offset: int):
    """Steps of a semi-standard folded tableau: one letter i', i at a time."""

    def ok(box: frozenset, marked: bool) -> bool:
        for r, c in box:
            if (r, c + 1) in box:
                alpha = c + 1 - r <= offset
                if marked != alpha:
                    return False
            if (r + 1, c) in box:
                alpha = c - r <= offset
                if marked == alpha:
                    return False
        return True

    def sub_shapes(nu):
        ranges = [range(0, part + 1) for part in nu]
        for mu in itertools.product(*ranges):
            if all(a >= b for a, b in zip(mu, mu[1:])):
                yield tuple(x for x in mu if x)

    def box_of(nu, mu):
        return frozenset(
            (i, c) for i, part in enumerate(nu, 1) for c in range((mu[i - 1] if i <= len(mu) else 0) + 1, part + 1)
        )

    cache: dict = {}

    def steps(nu):
        if nu in cache:
            return cache[nu]
        counts: dict = {}
        for mid in sub_shapes(nu):
            if not _contains(nu, mid) or not ok(box_of(nu, mid), False):
                continue
            for mu in sub_shapes(mid):
                if not ok(box_of(mid, mu), True):
                    continue
                size = sum(nu) - sum(mu)
                if size:
                    counts[mu] = counts.get(mu, 0) + 1
        cache[nu] = [(mu, sum(nu) - sum(mu), m) for mu, m in counts.items()]
        return cache[nu]

    return steps


@lru_cache(maxsize=None)
def foldedQ(f: FoldedDiagram) -> QSym:
    return chain_qsym((), f.shape, _folded_steps(f.diag_offset))


def foldedP(f: FoldedDiagram) -> QSym:
    d = len(f.diagonal_cells())
    return QSym({a: _exact_div(c, 2**d) for a, c in foldedQ(f).terms.items()})


def folded_Q(f: FoldedDiagram, num_vars: int) -> SymPoly:
    return foldedQ(f).to_sympoly(num_vars)


def folded_P(f: FoldedDiagram, num_vars: int) -> SymPoly:
    return foldedP(f).to_sympoly(num_vars)


def staircase_view(f: FoldedDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(outer, inner) with gamma = outer / delta_l shifted, inner the staircase."""
    gamma = f.shape
    ell = len(gamma)
    outer = tuple(g + ell - i + 1 for i, g in enumerate(gamma, 1))
    inner = tuple(range(ell, 0, -1))
    return outer, inner


def _exact_div(c: Coeff, d: int) -> Coeff:
    if isinstance(c, QPolynomial):
        return c.exact_div(d)
    if c % d:
        raise ArithmeticError(f"{c} is not divisible by {d}")
    return c // d


# ---------------------------------------------------------------- ribbon Q-functions

ROUTES = ("semistandard", "marked", "peak")


@lru_cache(maxsize=None)
def _rq_semistandard(lam: tuple[int, ...], k: int, p_version: bool) -> QSym:
    from .abacus_quotient import k_core

    core = k_core(lam, k)
    return chain_qsym(core, lam, _shifted_steps(k, None, p_version))


@lru_cache(maxsize=None)
def _rq_marked(lam: tuple[int, ...], k: int) -> QSym:
    from .ribbon_tableaux import enumerate_standard, mark_variants

    out = QSym()
    for t in enumerate_standard(lam, k):
        n = len(t)
        if n == 0:
            out = out + QSym.one()
            continue
        for v in mark_variants(t):
            out = out + _F(descent_set(adjust_marked(v.reading_word())), n)
    return out


@lru_cache(maxsize=None)
def _rq_peak(lam: tuple[int, ...], k: int) -> QSym:
    from .ribbon_tableaux import enumerate_standard

    out = QSym()
    for t in enumerate_standard(lam, k):
        n = len(t)
        if n == 0:
            out = out + QSym.one()
            continue
        pk = peak_set(descent_set(t.reading_word()))
        out = out + _G(pk, n).scale(2 ** (len(pk) + 1))
    return out


def RQ(lam: Iterable[int], k: int, route: str = "semistandard") -> QSym:
    lam = as_strict(lam)
    if route == "semistandard":
        return _rq_semistandard(lam, k, False)
    if route == "marked":
        return _rq_marked(lam, k)
    if route == "peak":
        return _rq_peak(lam, k)
    raise ValueError(f"unknown route {route!r}; expected one of {ROUTES}")


def RP(lam: Iterable[int], k: int) -> QSym:
    """Semi-standard tableaux with no marks on ribbons touching the main diagonal."""
    return _rq_semistandard(as_strict(lam), k, True)


def ribbon_Q(lam: Iterable[int], k: int, num_vars: int, route: str = "semistandard") -> SymPoly:
    return RQ(lam, k, route).to_sympoly(num_vars)


def ribbon_P(lam: Iterable[int], k: int, num_vars: int) -> SymPoly:
    return RP(lam, k).to_sympoly(num_vars)


def quotient_product(lam: Iterable[int], k: int) -> QSym:
    """Q of the shifted component times folded Q of every folded component."""
    q = k_quotient(lam, k)
    out = Q(q.shifted)
    for f in q.folded:
        out = out * foldedQ(f)
    return out


# ---------------------------------------------------------------- basis expansions


@dataclass
class Expansion:
    basis: str
    coefficients: dict[tuple[int, ...], QPolynomial]
    remainder: dict[tuple[int, ...], QPolynomial]

    @property
    def ok(self) -> bool:
        return not self.remainder

    def is_nonnegative(self) -> bool:
        return all(c.is_nonnegative() for c in self.coefficients.values())

    def at_q(self, q: int) -> dict[tuple[int, ...], int]:
        return {p: c.at(q) for p, c in self.coefficients.items() if c.at(q)}

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coefficients": {",".join(map(str, p)): list(c.coeffs) for p, c in sorted(self.coefficients.items(), reverse=True)},
            "remainder": {",".join(map(str, p)): list(c.coeffs) for p, c in sorted(self.remainder.items(), reverse=True)},
        }

    def __str__(self) -> str:
        sym = "Q" if self.basis == "Q" else "s"
        if not self.coefficients:
            return "0"
        parts = []
        for p, c in sorted(self.coefficients.items(), reverse=True):
            cs = str(c)
            if len(c.coeffs) > 1 and sum(1 for x in c.coeffs if x) > 1:
                cs = f"({cs})"
            name = f"{sym}{''.join(map(str, p))}" if max(p, default=0) < 10 else f"{sym}{list(p)}"
            parts.append(name if cs == "1" else f"{cs}*{name}")
        text = " + ".join(parts)
        if self.remainder:
            text += f"  [nonzero remainder: {self.remainder}]"
        return text


def _as_qsym(f: Union[QSym, SymPoly]) -> tuple[dict[tuple[int, ...], QPolynomial], int | None]:
    if isinstance(f, QSym):
        return f.monomial_coefficients(), None
    if not f.is_symmetric():
        raise ValueError("function is not symmetric")
    return f.monomial_coefficients(), f.num_vars


def _expand(f, basis: str) -> Expansion:
    m, num_vars = _as_qsym(f)
    degrees = {sum(p) for p in m}
    if len(degrees) > 1:
        raise ValueError("expansion needs a homogeneous function")
    n = degrees.pop() if degrees else 0
    if num_vars is not None and num_vars < n:
        raise ValueError(f"need at least {n} variables to expand a degree-{n} function, got {num_vars}")
    m = dict(m)
    coeffs: dict[tuple[int, ...], QPolynomial] = {}
    candidates = strict_partitions(n) if basis == "Q" else partitions(n)
    for lam in candidates:
        c = m.get(lam)
        if not c:
            continue
        if basis == "Q":
            lead = 2 ** len(lam)
            try:
                c = c.exact_div(lead)
            except ArithmeticError:
                break
            g = Q(lam)
        else:
            g = schur(lam)
        coeffs[lam] = c
        for p, v in g.monomial_coefficients().items():
            m[p] = m.get(p, QPolynomial()) - c * v
    remainder = {p: c for p, c in m.items() if c}
    return Expansion(basis, coeffs, remainder)


def expand_in_Q(f: Union[QSym, SymPoly]) -> Expansion:
    """Greedy expansion in Schur Q-functions, largest partition first."""
    return _expand(f, "Q")


def expand_in_schur(f: Union[QSym, SymPoly]) -> Expansion:
    return _expand(f, "s")


def is_symmetric(f: Union[QSym, SymPoly]) -> bool:
    return f.is_symmetric()


def expand_in_F(f: QSym) -> dict[tuple[int, ...], Coeff]:
    """Fundamental expansion, keyed by composition, via Moebius inversion on M."""
    out = {}
    remaining = dict(f.terms)
    # the M-to-F change of basis is unitriangular for refinement order, so
    # peel off coarsest compositions first
    while remaining:
        alpha = min(remaining, key=len)
        c = remaining.pop(alpha)
        if _is_zero(c):
            continue
        out[alpha] = c
        n = sum(alpha)
        D = frozenset(itertools.accumulate(alpha[:-1]))
        for comp, v in _F(D, n).terms.items():
            if comp != alpha:
                remaining[comp] = remaining.get(comp, 0) - c * v
        remaining = {a: v for a, v in remaining.items() if not _is_zero(v)}
    return out


def peak_sets(n: int) -> list[frozenset[int]]:
    """Subsets of {2, ..., n-1} without consecutive elements."""
    return [P for P in subsets(max(n - 1, 0)) if 1 not in P and not any(p + 1 in P for p in P)]


def expand_in_G(f: QSym) -> dict[frozenset[int], Coeff]:
    """Peak-function expansion of a homogeneous function.

    F_P occurs in G_P' only when P' lies inside P and its right shift, so
    peeling peak sets by increasing size and decreasing sum is triangular.
    Raises ValueError when ``f`` is not a combination of peak functions.
    """
    n = f.degree()
    if n == 0:
        return {frozenset(): f.terms[()]} if f.terms else {}
    out: dict[frozenset[int], Coeff] = {}
    rest = f
    for P in sorted(peak_sets(n), key=lambda P: (len(P), -sum(P), sorted(P))):
        c = expand_in_F(rest).get(composition_of(P, n), 0)
        if _is_zero(c):
            continue
        out[P] = c
        rest = rest - _G(P, n).scale(c)
    if rest.terms:
        raise ValueError("not in the span of peak functions")
    return out
