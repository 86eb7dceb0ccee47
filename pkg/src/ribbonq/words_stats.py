"""Reading words, marked-word adjustment, and descent/peak/spike/run sets.

A word is a tuple of labels ``(value, marked)``.  Plain integers are accepted
wherever a word is expected and read as unmarked.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Union

Label = tuple[int, bool]
Word = tuple[Label, ...]


def as_label(x: Union[int, Label]) -> Label:
    if isinstance(x, tuple):
        return (int(x[0]), bool(x[1]))
    return (int(x), False)


def as_word(entries: Iterable[Union[int, Label]]) -> Word:
    return tuple(as_label(x) for x in entries)


def format_word(w: Iterable[Union[int, Label]]) -> str:
    return ",".join(f"{v}'" if m else str(v) for v, m in as_word(w))


def parse_word(text: str) -> Word:
    """Parse ``"7,4',6',8"`` into a word."""
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        marked = tok.endswith("'")
        out.append((int(tok.rstrip("'")), marked))
    return tuple(out)


def reading_word(labels: Mapping[tuple[int, int], Union[int, Label]]) -> Word:
    """Read labels row by row from the top row down, left to right.

    ``labels`` maps cells (or ribbon heads) to labels; the top row is the one
    with the largest row index.
    """
    order = sorted(labels, key=lambda c: (-c[0], c[1]))
    return tuple(as_label(labels[c]) for c in order)


def adjust_marked(w: Iterable[Union[int, Label]]) -> Word:
    """Move marked entries to the front in reversed order, then drop marks."""
    w = as_word(w)
    marked = [v for v, m in w if m]
    plain = [v for v, m in w if not m]
    return tuple((v, False) for v in marked[::-1] + plain)


def descent_set(w: Iterable[Union[int, Label]]) -> frozenset[int]:
    """{i : i+1 appears before i} for a permutation word of 1..n."""
    w = as_word(w)
    if any(m for _, m in w):
        raise ValueError("descent_set expects an unmarked word; apply adjust_marked first")
    pos = {v: idx for idx, (v, _) in enumerate(w)}
    n = len(w)
    if sorted(pos) != list(range(1, n + 1)):
        raise ValueError(f"word is not a permutation of 1..{n}: {format_word(w)}")
    return frozenset(i for i in range(1, n) if pos[i + 1] < pos[i])


def marked_descent_set(w: Iterable[Union[int, Label]]) -> frozenset[int]:
    return descent_set(adjust_marked(w))


def peak_set(D: Iterable[int]) -> frozenset[int]:
    D = frozenset(D)
    return frozenset(i for i in D if i >= 2 and i - 1 not in D)


def spike_set(D: Iterable[int], n: int | None = None) -> frozenset[int]:
    """Spikes of D; with ``n`` given they are restricted to {2, ..., n-1}."""
    D = frozenset(D)
    top = (max(D) + 1) if D else 1
    if n is not None:
        top = n - 1
    return frozenset(i for i in range(2, top + 1) if (i in D) != (i - 1 in D))


def runs(D: Iterable[int]) -> list[frozenset[int]]:
    """Maximal blocks of consecutive integers, in increasing order."""
    out: list[list[int]] = []
    for i in sorted(set(D)):
        if out and out[-1][-1] == i - 1:
            out[-1].append(i)
        else:
            out.append([i])
    return [frozenset(r) for r in out]


def subsets(n_minus_1: int) -> list[frozenset[int]]:
    """All subsets of {1, ..., n_minus_1}."""
    out = []
    for mask in range(1 << n_minus_1):
        out.append(frozenset(i + 1 for i in range(n_minus_1) if mask >> i & 1))
    return out


def composition_of(D: Iterable[int], n: int) -> tuple[int, ...]:
    """Composition of n whose partial sums are the elements of D."""
    if n == 0:
        return ()
    cuts = [0] + sorted(D) + [n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def descent_of_composition(alpha: Iterable[int]) -> frozenset[int]:
    out, s = [], 0
    alpha = list(alpha)
    for a in alpha[:-1]:
        s += a
        out.append(s)
    return frozenset(out)
