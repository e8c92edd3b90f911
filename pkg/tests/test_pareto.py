"""Nondominance filtering, inner fronts, and ideal points."""

import pytest
from hypothesis import given

from maro import (
    InstanceError,
    Orientation,
    Tolerance,
    fixture,
    ideal,
    inner_efficient,
    nondominated,
)
from maro.relations import dot

from conftest import point_sets, weights
from oracles import brute_max_front, brute_min_front


def pts(front):
    return set(front.points)


def test_min_filter_example():
    assert pts(nondominated({(3, 7), (5, 5), (4, 4)})) == {(3, 7), (4, 4)}


def test_max_filter_example():
    assert pts(nondominated({(2, 2), (4, 4)}, Orientation.MAX)) == {(4, 4)}


def test_singleton():
    assert pts(nondominated({(1, 9)})) == {(1, 9)}


def test_empty_rejected():
    with pytest.raises(ValueError, match="non-empty"):
        nondominated([])
    with pytest.raises(ValueError, match="non-empty"):
        ideal([])


def test_duplicates_collapse_to_one_representative():
    front = nondominated([(1.0, 2.0), (1.0, 2.0), (0.5, 3.0)])
    assert front.points == ((0.5, 3.0), (1.0, 2.0))


def test_inner_efficient_examples():
    fig4 = fixture("FIG4")
    assert pts(inner_efficient(fig4, "x1", "u1")) == {(1, 9), (2, 8), (3, 7), (4, 6)}
    assert pts(inner_efficient(fixture("FIG2L"), "x1", "u2")) == {(5, 5)}
    assert pts(inner_efficient(fixture("FIG5"), "x3", "u1")) == {(7, 2), (8, 1)}
    with pytest.raises(InstanceError, match="unknown"):
        inner_efficient(fig4, "x9", "u1")


def test_ideal_examples():
    fig4 = fixture("FIG4")
    union_x1 = [p for u in fig4.scenarios for p in fig4.points("x1", u)]
    union_x2 = [p for u in fig4.scenarios for p in fig4.points("x2", u)]
    assert ideal(union_x1, Orientation.MIN) == (1, 6)
    assert ideal(union_x2, Orientation.MAX) == (8, 4)
    assert ideal([(5, 4)]) == (5, 4)


@given(S=point_sets())
def test_idempotence(S):
    once = nondominated(S)
    twice = nondominated(once.points)
    assert once.points == twice.points


@given(S=point_sets(), lam=weights())
def test_weighted_minimum_is_preserved_by_filtering(S, lam):
    front = nondominated(S)
    assert min(dot(lam, p) for p in S) == min(dot(lam, p) for p in front.points)


@given(S=point_sets())
def test_ideal_sandwich(S):
    lo = ideal(S, Orientation.MIN)
    hi = ideal(S, Orientation.MAX)
    for p in S:
        assert all(lo[i] <= p[i] <= hi[i] for i in range(len(p)))


@given(S=point_sets())
def test_matches_bruteforce(S):
    tol0 = Tolerance(0.0)
    assert list(nondominated(S, Orientation.MIN, tol0).points) == brute_min_front(S)
    assert list(nondominated(S, Orientation.MAX, tol0).points) == brute_max_front(S)
