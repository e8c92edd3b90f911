"""Vector and set order relations, weights, and the relation parser."""

import pytest
from hypothesis import given
import hypothesis.strategies as st

from maro import (
    SetRelFamily,
    SetRelSpec,
    Tolerance,
    VecRel,
    Weight,
    parse_relation,
    set_cmp,
    vec_cmp,
)

from conftest import int_vecs, point_sets, weights
from oracles import brute_set_leq

U = SetRelSpec(SetRelFamily.UPPER)
US = SetRelSpec(SetRelFamily.UPPER, strict=True)
L = SetRelSpec(SetRelFamily.LOWER)
LS = SetRelSpec(SetRelFamily.LOWER, strict=True)


def lmin(lam, strict=False):
    return SetRelSpec(SetRelFamily.LAMBDA_MIN, strict=strict, lam=lam)


def test_vec_cmp_reflexivity_and_irreflexivity():
    assert vec_cmp((3, 7), (3, 7), VecRel.LEQQ)
    assert not vec_cmp((3, 7), (3, 7), VecRel.LEQ)
    assert not vec_cmp((3, 7), (3, 7), VecRel.LT)


def test_vec_cmp_examples():
    assert vec_cmp((2, 2), (3, 7), VecRel.LT)
    assert not vec_cmp((3, 7), (5, 5), VecRel.LEQQ)
    assert vec_cmp((3, 7), (3, 8), VecRel.LEQ)


def test_vec_cmp_length_mismatch():
    with pytest.raises(ValueError, match="length mismatch"):
        vec_cmp((1, 2), (1, 2, 3), VecRel.LEQQ)


def test_set_cmp_lower_example():
    assert set_cmp({(2, 2), (4, 4)}, {(3, 7), (5, 5)}, L)


def test_set_cmp_singleton_equality():
    assert set_cmp({(1, 1)}, {(1, 1)}, U)
    assert not set_cmp({(1, 1)}, {(1, 1)}, US)


def test_set_cmp_lambda_min_example():
    assert set_cmp({(2, 6), (7, 3)}, {(3, 7), (5, 5)}, lmin((0.5, 0.5)))
    assert not set_cmp({(3, 7), (5, 5)}, {(2, 6), (7, 3)}, lmin((0.5, 0.5)))


def test_set_cmp_errors():
    with pytest.raises(ValueError, match="non-empty"):
        set_cmp(set(), {(1, 1)}, U)
    with pytest.raises(ValueError, match="dimension mismatch"):
        set_cmp({(1, 1)}, {(1, 1, 1)}, U)
    with pytest.raises(ValueError, match="requires a weight"):
        SetRelSpec(SetRelFamily.LAMBDA_MIN)
    with pytest.raises(ValueError, match="non-negative"):
        SetRelSpec(SetRelFamily.LAMBDA_MIN, lam=(-0.5, 1.5))
    with pytest.raises(ValueError, match="zero vector"):
        SetRelSpec(SetRelFamily.LAMBDA_MIN, lam=(0.0, 0.0))
    with pytest.raises(ValueError, match="weight vector has length"):
        set_cmp({(1, 1)}, {(2, 2)}, lmin((1.0,)))
    with pytest.raises(ValueError, match="lambda-min"):
        SetRelSpec(SetRelFamily.UPPER, lam=(1.0, 0.0))


def test_weight_validation():
    Weight((0.5, 0.5))
    Weight((1.0, 0.0))
    with pytest.raises(ValueError, match="sum to 1"):
        Weight((0.5, 0.2))
    with pytest.raises(ValueError, match="non-negative"):
        Weight((1.5, -0.5))


@pytest.mark.parametrize("spec", [U, L, lmin((0.3, 0.7))])
@given(A=point_sets(), B=point_sets(), C=point_sets())
def test_nonstrict_set_relations_are_preorders(spec, A, B, C):
    assert set_cmp(A, A, spec)
    if set_cmp(A, B, spec) and set_cmp(B, C, spec):
        assert set_cmp(A, C, spec)


@pytest.mark.parametrize("nonstrict,strict", [(U, US), (L, LS),
                                              (lmin((0.4, 0.6)), lmin((0.4, 0.6), True))])
@given(A=point_sets(), B=point_sets())
def test_strict_implies_nonstrict(nonstrict, strict, A, B):
    if set_cmp(A, B, strict):
        assert set_cmp(A, B, nonstrict)


@given(a=int_vecs(), b=int_vecs())
def test_singleton_coherence_upper_lower(a, b):
    for spec, rel in ((U, VecRel.LEQQ), (US, VecRel.LT), (L, VecRel.LEQQ), (LS, VecRel.LT)):
        assert set_cmp({a}, {b}, spec) == vec_cmp(a, b, rel)


@given(a=int_vecs(), b=int_vecs(), lam=weights())
def test_singleton_vector_relation_implies_lambda_min(a, b, lam):
    # one-way implication: the weighted-minimum relation is coarser
    if vec_cmp(a, b, VecRel.LEQQ):
        assert set_cmp({a}, {b}, lmin(lam))
    if vec_cmp(a, b, VecRel.LT):
        assert set_cmp({a}, {b}, lmin(lam, True))


@pytest.mark.parametrize("family,strict", [("u", False), ("u", True),
                                           ("l", False), ("l", True),
                                           ("lmin", False), ("lmin", True)])
@given(A=point_sets(), B=point_sets())
def test_set_cmp_matches_bruteforce_at_zero_tolerance(family, strict, A, B):
    lam = (0.25, 0.75)
    if family == "lmin":
        spec = lmin(lam, strict)
    else:
        spec = SetRelSpec(SetRelFamily(family), strict=strict)
    got = set_cmp(A, B, spec, Tolerance(0.0))
    assert got == brute_set_leq(A, B, family, strict, lam)


def test_parse_relation():
    assert parse_relation("leqq") is VecRel.LEQQ
    assert parse_relation("lt") is VecRel.LT
    assert parse_relation("u") == U
    assert parse_relation("l-strict") == LS
    spec = parse_relation("lmin:0.5,0.5")
    assert spec.family is SetRelFamily.LAMBDA_MIN and spec.lam == (0.5, 0.5)
    assert parse_relation("lmin-strict:1,0").strict
    with pytest.raises(ValueError, match="unknown relation"):
        parse_relation("banana")
    with pytest.raises(ValueError, match="bad weight list"):
        parse_relation("lmin:a,b")
