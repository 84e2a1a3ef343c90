from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from tractlab.matroids import (Matroid, MatroidError, contract, delete, dual,
                               matroid_from_circuits, uniform)


def fs(*sets):
    return {frozenset(s) for s in sets}


def test_uniform_circuits():
    assert uniform(2, 3).circuits == fs({1, 2, 3})
    assert uniform(1, 2).circuits == fs({1, 2})
    assert uniform(2, 2).circuits == set()
    with pytest.raises(MatroidError):
        uniform(3, 2)


def test_small_examples():
    assert dual(uniform(1, 2)) == uniform(1, 2)
    assert contract(uniform(2, 3), 3).circuits == fs({1, 2})
    assert delete(uniform(2, 3), 3).circuits == set()
    assert uniform(2, 4).rank() == 2
    assert len(uniform(2, 4).bases()) == 6


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n))))
def test_dual_of_uniform(rn):
    r, n = rn
    M = uniform(r, n)
    assert dual(M) == uniform(n - r, n)
    assert dual(dual(M)) == M


def test_validation():
    with pytest.raises(MatroidError):
        matroid_from_circuits([1, 2, 3], [{1, 2}, {2, 3}])  # elimination fails
    with pytest.raises(MatroidError):
        matroid_from_circuits([1, 2], [{1}, {1, 2}])
    with pytest.raises(MatroidError):
        matroid_from_circuits([1, 2], [{3}])
    with pytest.raises(MatroidError):
        Matroid([1, 1], [])
    assert matroid_from_circuits([1, 2, 3], [{1, 2}, {2, 3}, {1, 3}]).rank() == 1


def test_loops_and_coloops():
    assert uniform(0, 2).loops() == [1, 2]
    assert uniform(2, 2).coloops() == [1, 2]
    assert uniform(1, 2).loops() == [] and uniform(1, 2).coloops() == []


@pytest.mark.parametrize("r,n", [(1, 2), (2, 3), (1, 3), (2, 4), (0, 2), (2, 2)])
def test_minor_duality(r, n):
    M = uniform(r, n)
    for e in M.ground:
        assert dual(M.delete(e)) == dual(M).contract(e)
        assert dual(M.contract(e)) == dual(M).delete(e)


@pytest.mark.parametrize("r,n", [(1, 2), (2, 3), (2, 4), (1, 1), (0, 1)])
def test_extensions_undo(r, n):
    M = uniform(r, n)
    for e in M.ground:
        P = M.parallel_extend(e, "x", "y")
        S = M.series_extend(e, "x", "y")
        assert P.ground[-2:] == ("x", "y")
        assert P.delete("y").relabel({"x": e}) == M
        assert S.contract("y").relabel({"x": e}) == M
        assert (frozenset("xy") in P.circuits) == (e not in M.loops())
        assert (frozenset("xy") in dual(S).circuits) == (e not in M.coloops())


def test_series_deletion_does_not_undo():
    # deleting one element of a series pair frees the other
    S = uniform(1, 2).series_extend(1, "x", "y")
    assert S.delete("y").relabel({"x": 1}) != uniform(1, 2)


def test_extension_label_collision():
    with pytest.raises(MatroidError):
        uniform(1, 2).parallel_extend(1, 2, "y")
    with pytest.raises(MatroidError):
        uniform(1, 2).delete(7)


def test_mixed_labels_sort():
    M = uniform(1, 2).parallel_extend(1, "1a", "1b")
    assert M.ground == (2, "1a", "1b")
    assert "Matroid(ground=[2, '1a', '1b']" in repr(M)
    assert sorted(M.circuits, key=M.positions)[0] == frozenset({2, "1a"})
    assert all(len(c) == 2 for c in M.circuits) and len(M.circuits) == 3
    assert all(frozenset(p) in M.circuits for p in combinations(M.ground, 2))
