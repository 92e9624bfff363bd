"""Words over the basis: coproducts, star products, normal forms, the
pairing, and the dual coproduct."""

from fractions import Fraction

import pytest

from postliemi.errors import TruncationRefused
from postliemi.multiindex import Config, MultiIndex
from postliemi.postlie import Shift, Tilt, bracket, btr, triangleright, zero_op
from postliemi.enveloping import (
    STRUCT_BTR,
    STRUCT_JZ,
    SymElement,
    TensorElement,
    TruncationParams,
    coshuffle,
    counit,
    dual_coproduct,
    ext_action_word,
    pairing,
    parse_word,
    pbw_normal_form,
    phi,
    poly_star,
    print_word,
    sigma,
    star,
    star_word,
    sym_word,
    tensor_poly_star,
    tmap,
)

from oracles import brute_dual_coproduct, brute_letters

CFG = Config(2, Fraction(1, 2))
CFG34 = Config(2, Fraction(3, 4))

P1 = Shift(1)
P2 = Shift(2)
Z0D0 = Tilt(MultiIndex.single(0), (0, 0))
Z0D10 = Tilt(MultiIndex.single(0), (1, 0))
ZN = Tilt(MultiIndex.single((1, 0)), (0, 0))


def w(*letters):
    return sym_word(letters)


def elem(*letters):
    return SymElement.single(sym_word(letters))


# -- coshuffle ---------------------------------------------------------------


def test_letters_are_primitive():
    x = w(P1)
    empty = w()
    assert coshuffle(elem(P1)) == TensorElement.from_terms(
        [((x, empty), 1), ((empty, x), 1)]
    )


def test_square_splits_with_binomial_weight():
    xx, x, empty = w(P1, P1), w(P1), w()
    assert coshuffle(elem(P1, P1)) == TensorElement.from_terms(
        [((xx, empty), 1), ((x, x), 2), ((empty, xx), 1)]
    )


def test_mixed_word_splits_without_weights():
    got = coshuffle(elem(P1, Z0D0))
    assert got.coeff(w(P1), w(Z0D0)) == 1
    assert got.coeff(w(Z0D0), w(P1)) == 1
    assert got.coeff(w(P1, Z0D0), w()) == 1
    assert len(got.terms) == 4


def test_counit_reads_the_empty_coefficient():
    assert counit(elem() + elem(P1).scale(5)) == 1


# -- extended action and star ------------------------------------------------


def test_empty_word_acts_as_identity():
    v = w(Z0D0, ZN)
    assert ext_action_word(STRUCT_BTR, w(), v, CFG) == SymElement.single(v)


def test_action_on_empty_word_is_the_counit():
    assert ext_action_word(STRUCT_BTR, w(P1), w(), CFG).is_zero


def test_letter_acts_by_leibniz():
    x, y, z = Z0D0, ZN, Z0D10
    acted = ext_action_word(STRUCT_BTR, w(x), w(y, z), CFG)
    by_parts = poly_star(
        SymElement.from_terms([(ww, c) for ww, c in _letter_graft(x, y).terms]),
        SymElement.single(w(z)),
    ) + poly_star(
        SymElement.single(w(y)),
        SymElement.from_terms([(ww, c) for ww, c in _letter_graft(x, z).terms]),
    )
    assert acted == by_parts


def _letter_graft(x, y):
    out = SymElement.zero()
    for key, c in btr(
        _single_l(x), _single_l(y), CFG
    ).terms:
        out = out + SymElement.single((key,), c)
    return out


def _single_l(key):
    from postliemi.postlie import LElement

    return LElement.single(key)


def test_btr_action_preserves_word_length():
    for u, v in [((P1,), (Z0D0, Z0D10)), ((P1, P2), (Z0D0,)), ((Z0D0,), (ZN, ZN))]:
        acted = ext_action_word(STRUCT_BTR, w(*u), w(*v), CFG)
        assert all(len(word) == len(v) for word, _ in acted.terms)


def test_star_of_letters_is_word_plus_product():
    got = star_word(STRUCT_BTR, w(P1), w(Z0D10), CFG)
    assert got == SymElement.single(w(P1, Z0D10)) + _letter_graft(P1, Z0D10)


def test_unit_star():
    u = elem(Z0D0, P1)
    assert star(STRUCT_BTR, SymElement.unit(), u, CFG) == u
    assert star(STRUCT_JZ, u, SymElement.unit(), CFG) == u


def test_worked_star_value():
    got = star_word(STRUCT_BTR, w(P1), w(Z0D10), CFG)
    expect = (
        SymElement.single(w(P1, Z0D10))
        + SymElement.single(w(Tilt(MultiIndex.from_dict({1: 1, (1, 0): 1}), (1, 0))))
        - SymElement.single(w(Tilt(MultiIndex.single(0), (0, 0))))
    )
    assert got == expect


@pytest.mark.parametrize("struct", [STRUCT_JZ, STRUCT_BTR])
def test_star_associativity_spot(struct):
    a, b, c = elem(P1), elem(Z0D0), elem(Z0D10, P2)
    lhs = star(struct, star(struct, a, b, CFG), c, CFG)
    rhs = star(struct, a, star(struct, b, c, CFG), CFG)
    assert lhs == rhs


# -- normal form -------------------------------------------------------------


def test_sorted_word_is_already_normal():
    seq = (P1, P2, Z0D0)
    assert pbw_normal_form(seq, bracket, CFG) == SymElement.single(sym_word(seq))


def test_single_swap_produces_the_bracket_tail():
    got = pbw_normal_form((Z0D10, P1), bracket, CFG)
    assert got == SymElement.single(w(P1, Z0D10)) + SymElement.single(w(Z0D0))


def test_zero_bracket_just_sorts():
    seq = (Z0D10, ZN, P2, P1)
    assert pbw_normal_form(seq, zero_op, CFG) == SymElement.single(sym_word(seq))


def test_rewrite_strategies_agree():
    for seq in [
        (Z0D10, P1, Z0D0, P2),
        (Z0D0, Z0D10, P1),
        (ZN, Z0D10, P2, P1),
    ]:
        left = pbw_normal_form(seq, bracket, CFG, strategy="leftmost")
        right = pbw_normal_form(seq, bracket, CFG, strategy="rightmost")
        assert left == right


# -- phi ---------------------------------------------------------------------


def test_phi_on_letters_and_pairs():
    assert phi(STRUCT_BTR, (P1,), CFG) == elem(P1)
    assert phi(STRUCT_JZ, (P1, Z0D0), CFG) == star(
        STRUCT_JZ, elem(P1), elem(Z0D0), CFG
    )
    triple = phi(STRUCT_BTR, (P1, Z0D0, Z0D10), CFG)
    nested = star(
        STRUCT_BTR, elem(P1), star(STRUCT_BTR, elem(Z0D0), elem(Z0D10), CFG), CFG
    )
    assert triple == nested


# -- polynomial product and pairing ------------------------------------------


def test_poly_star_merges_multisets():
    assert poly_star(elem(P1, P1), elem(P1)) == elem(P1, P1, P1)
    assert poly_star(SymElement.unit(), elem(Z0D0)) == elem(Z0D0)
    assert poly_star(elem(P1), elem(Z0D0)) == elem(P1, Z0D0)


def test_tmap_scales_by_symmetry():
    half_square = SymElement.single(w(P1, P1), Fraction(1, 2))
    assert tmap(half_square) == elem(P1, P1)


def test_pairing_is_diagonal_with_factorials():
    assert pairing(elem(P1), elem(Z0D0)) == 0
    assert pairing(SymElement.unit(), SymElement.unit()) == 1
    assert pairing(elem(P1, P1, Z0D0), elem(P1, P1, Z0D0)) == 2
    assert sigma(w(P1, P1, Z0D0)) == 2


# -- dual coproduct ----------------------------------------------------------


def test_dual_coproduct_of_the_unit():
    assert dual_coproduct(w(), CFG) == TensorElement.single(w(), w())


def test_dual_coproduct_of_a_graded_letter():
    target = w(Z0D0)
    got = dual_coproduct(target, CFG)
    empty = w()
    assert got == TensorElement.from_terms(
        [((target, empty), 1), ((empty, target), 1)]
    )


def test_dual_coproduct_rejects_letters_outside_the_subalgebra():
    with pytest.raises(ValueError):
        dual_coproduct(w(Tilt(MultiIndex.single((1, 0)), (1, 0))), CFG)


def test_dual_coproduct_is_multiplicative():
    w1, w2 = w(Z0D0), w(P1)
    merged = dual_coproduct(sym_word(w1 + w2), CFG)
    split = tensor_poly_star(dual_coproduct(w1, CFG), dual_coproduct(w2, CFG))
    assert merged == split


def test_truncation_refusal_and_acceptance():
    target = w(Tilt(MultiIndex.single(0, 2), (1, 0)), Z0D0)
    with pytest.raises(TruncationRefused):
        dual_coproduct(target, CFG34, TruncationParams(max_word_len=1))
    wide = TruncationParams(max_word_len=9, max_letter_degree=Fraction(9))
    assert dual_coproduct(target, CFG34, wide) == dual_coproduct(target, CFG34)


def test_dual_coproduct_matches_the_pair_scan():
    letters = brute_letters(Fraction(3, 2), CFG34)
    for target in [
        w(Tilt(MultiIndex.single(0, 2), (1, 0))),
        w(Z0D0, P1),
        w(Tilt(MultiIndex.single(0, 2), (0, 1)), Z0D0),
    ]:
        expect = brute_dual_coproduct(target, letters, CFG34)
        got = {pair: c for pair, c in dual_coproduct(target, CFG34).terms}
        assert got == expect


# -- text form ---------------------------------------------------------------


def test_word_round_trip():
    word = w(P1, Z0D10, Z0D10)
    assert parse_word(print_word(word), d=2) == word
    assert print_word(w()) == "1"
