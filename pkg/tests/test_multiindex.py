"""Multi-index arithmetic: exact degrees, comparison, the capped slice,
and the text form."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from postliemi.errors import ParseError
from postliemi.multiindex import (
    Config,
    HomDegree,
    MultiIndex,
    compare_hom,
    enumerate_below,
    enumerate_below_value,
    hom_value,
    homogeneity,
    parse_multiindex,
    print_multiindex,
)

from oracles import brute_slice

CFG = Config(2, Fraction(1, 2))
CFG34 = Config(2, Fraction(3, 4))

keys = st.one_of(
    st.integers(min_value=0, max_value=3),
    st.sampled_from([(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)]),
)
multiindices = st.dictionaries(keys, st.integers(min_value=1, max_value=3), max_size=4).map(
    MultiIndex.from_dict
)


def e(key, mult=1):
    return MultiIndex.single(key, mult)


# -- additive structure ------------------------------------------------------


@given(multiindices, multiindices, multiindices)
def test_add_is_associative_and_commutative(g1, g2, g3):
    assert (g1 + g2) + g3 == g1 + (g2 + g3)
    assert g1 + g2 == g2 + g1


@given(multiindices)
def test_zero_is_the_identity(g):
    assert g + MultiIndex.zero() == g


@given(multiindices, multiindices)
def test_homogeneity_is_additive(g1, g2):
    assert homogeneity(g1 + g2) == homogeneity(g1) + homogeneity(g2)


@given(multiindices, multiindices)
def test_sub_inverts_add(g1, g2):
    assert (g1 + g2).sub(g2) == g1
    assert (g1 + g2).try_sub(g1) == g2


def test_homogeneity_counts_both_families():
    g = e(0, 2) + e(5) + e((2, 1))
    assert homogeneity(g) == HomDegree(3, 3)
    assert hom_value(g, CFG) == Fraction(3, 2) + 3


# -- comparison --------------------------------------------------------------


def test_compare_examples():
    assert compare_hom(HomDegree(1, 0), HomDegree(0, 1), CFG) == -1
    assert compare_hom(HomDegree(2, 0), HomDegree(0, 1), CFG) == 0
    assert compare_hom(HomDegree(1, 0), HomDegree(0, 0), CFG34) == 1


@given(
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.integers(-5, 5),
    st.sampled_from([Fraction(1, 2), Fraction(1, 3), Fraction(3, 4), Fraction(2, 5)]),
)
def test_compare_agrees_with_exact_values(a1, b1, a2, b2, alpha):
    cfg = Config(2, alpha)
    h1, h2 = HomDegree(a1, b1), HomDegree(a2, b2)
    v1, v2 = h1.value(cfg), h2.value(cfg)
    expected = -1 if v1 < v2 else (1 if v1 > v2 else 0)
    assert compare_hom(h1, h2, cfg) == expected


# -- the capped degree slice -------------------------------------------------


def test_slice_at_zero_is_the_origin():
    assert enumerate_below_value(Fraction(0), CFG) == (MultiIndex.zero(),)


def test_slice_at_alpha():
    # both z_0 and z_1 weigh alpha; the index cap floor(val/alpha) admits k <= 1
    got = enumerate_below_value(Fraction(1, 2), CFG)
    assert set(got) == {MultiIndex.zero(), e(0), e(1)}


def test_slice_at_one():
    got = enumerate_below_value(Fraction(1), CFG)
    for g in (MultiIndex.zero(), e(0), e(0, 2), e((1, 0)), e((0, 1))):
        assert g in got
    assert set(got) == brute_slice(Fraction(1), CFG)
    assert len(got) == 12


@pytest.mark.parametrize(
    "cfg,val",
    [
        (CFG, Fraction(1, 2)),
        (CFG, Fraction(3, 2)),
        (CFG34, Fraction(3, 2)),
        (CFG34, Fraction(2)),
        (Config(3, Fraction(1, 3)), Fraction(1)),
    ],
)
def test_slice_matches_brute_force(cfg, val):
    got = enumerate_below_value(val, cfg)
    assert len(set(got)) == len(got)
    assert set(got) == brute_slice(val, cfg)
    values = [hom_value(g, cfg) for g in got]
    assert values == sorted(values)


def test_slice_accepts_a_degree_bound():
    assert enumerate_below(HomDegree(0, 1), CFG) == enumerate_below_value(Fraction(1), CFG)


# -- text form ---------------------------------------------------------------


@settings(max_examples=60)
@given(multiindices)
def test_print_parse_round_trip(g):
    assert parse_multiindex(print_multiindex(g)) == g


def test_grammar_examples():
    assert parse_multiindex("{}") == MultiIndex.zero()
    assert parse_multiindex("{k0:1, (1,0):2}") == e(0) + e((1, 0), 2)


@pytest.mark.parametrize("text", ["{k0:0}", "{(0,0):1}", "{k-1:1}", "{"])
def test_grammar_rejections(text):
    with pytest.raises((ParseError, ValueError)):
        parse_multiindex(text)
