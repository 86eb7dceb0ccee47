import itertools

import pytest

from ribbonq.words_stats import (
    adjust_marked,
    composition_of,
    descent_of_composition,
    descent_set,
    format_word,
    parse_word,
    peak_set,
    runs,
    spike_set,
    subsets,
)
from oracles import descents_brute


def test_reading_word_descents():
    w = [7, 4, 8, 2, 6, 1, 3, 5, 9]
    D = descent_set(w)
    assert D == {1, 3, 5, 6}
    assert peak_set(D) == {3, 5}
    assert spike_set(D) == {2, 3, 4, 5, 7}


def test_adjust_marked_example():
    w = parse_word("7,4',6',8,1,2,3',5")
    assert adjust_marked(w) == tuple((v, False) for v in (3, 6, 4, 7, 8, 1, 2, 5))
    assert descent_set(adjust_marked(w)) == {2, 5}


def test_adjust_marked_trivial_cases():
    assert adjust_marked([1, 2, 3]) == ((1, False), (2, False), (3, False))
    assert adjust_marked([(1, True), (3, True), (2, True)]) == ((2, False), (3, False), (1, False))


def test_descent_set_rejects_marks_and_non_permutations():
    with pytest.raises(ValueError):
        descent_set([(1, True)])
    with pytest.raises(ValueError):
        descent_set([1, 1])
    assert descent_set([1, 2, 3, 4]) == frozenset()


def test_runs_example():
    assert runs({2, 3, 5, 8, 9, 10}) == [{2, 3}, {5}, {8, 9, 10}]
    assert runs(set()) == []
    assert peak_set(set()) == frozenset() and spike_set(set()) == frozenset()


def test_peak_count_versus_runs_exhaustive():
    for D in subsets(9):
        extra = 1 if 1 in D else 0
        assert len(peak_set(D)) == len(runs(D)) - extra


def test_descents_match_brute_force():
    for n in range(1, 7):
        for perm in itertools.permutations(range(1, n + 1)):
            assert descent_set(perm) == descents_brute(list(perm))


def test_word_formatting_roundtrip():
    w = parse_word("2',4,1,3'")
    assert format_word(w) == "2',4,1,3'"


def test_compositions():
    assert composition_of({2, 4}, 5) == (2, 2, 1)
    assert composition_of(set(), 0) == ()
    assert descent_of_composition((2, 2, 1)) == {2, 4}
