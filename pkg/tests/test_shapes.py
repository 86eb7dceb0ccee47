import pytest

from ribbonq.shapes import (
    as_strict,
    cells,
    conjugate,
    diag,
    hook,
    hook_lengths,
    shape_from_cells,
    shifted_region,
    skew_cells,
    strict_partitions,
    strict_partitions_upto,
)
from oracles import hook_len, shifted_box


def test_cells_of_small_shape():
    assert cells((3, 1)) == {(1, 1), (1, 2), (1, 3), (2, 2)}
    assert cells(()) == frozenset()


def test_diagonal_is_one_exactly_on_main_diagonal():
    for lam in strict_partitions_upto(10):
        for c in cells(lam):
            assert diag(c) >= 1
            assert (diag(c) == 1) == (c[0] == c[1])


def test_shifted_region_examples():
    region = shifted_region((8, 6, 4, 3, 1))
    assert len(region) == 10
    assert (1, 1) in region and (1, 5) not in region
    assert shifted_region((2, 1)) == {(1, 1)}
    assert shifted_region((1,)) == frozenset()
    assert shifted_region(()) == frozenset()


def test_hook_examples():
    assert hook((2, 1), (1, 1)) == {(1, 1), (1, 2), (2, 2)}
    assert hook((2, 1), (1, 2)) == {(1, 2), (2, 2)}
    with pytest.raises(ValueError):
        hook((2, 1), (2, 1))


def test_hook_lengths_against_direct_count():
    for lam in strict_partitions_upto(12):
        hl = hook_lengths(lam)
        assert hl == {c: hook_len(lam, c) for c in shifted_box(lam)}


def test_skew_cells():
    assert len(skew_cells((4, 3, 1), (3, 1))) == 4
    assert skew_cells((4, 3, 1), (4, 3, 1)) == frozenset()
    assert skew_cells((4, 3, 1), ()) == cells((4, 3, 1))
    with pytest.raises(ValueError):
        skew_cells((3, 1), (4,))


def test_strict_validation():
    with pytest.raises(ValueError):
        as_strict((2, 2))
    with pytest.raises(ValueError):
        as_strict((1, 2))
    assert as_strict((3, 1, 0)) == (3, 1)


def test_shape_from_cells_roundtrip():
    for lam in strict_partitions_upto(9):
        assert shape_from_cells(cells(lam)) == lam
    assert shape_from_cells({(1, 2)}) is None


def test_partition_counts():
    assert [len(strict_partitions(n)) for n in range(10)] == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8]
    assert conjugate((3, 1)) == (2, 1, 1)
