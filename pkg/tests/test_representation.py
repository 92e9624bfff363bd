"""Action of words on polynomials: the basic representation, its deformed
extension, the recursion behind it, and the coaction enumeration."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from postliemi.multiindex import Config, MultiIndex, homogeneity
from postliemi.polyalg import Polynomial, grade_components
from postliemi.derivations import DOp, Partial, apply_word, derivation_degree
from postliemi.postlie import LElement, Shift, Tilt, grand_bracket
from postliemi.enveloping import STRUCT_BTR, STRUCT_JZ, star_word, sym_word
from postliemi.representation import (
    Contribution,
    coaction_contributions,
    psi_apply,
    rho,
    rho_bar,
    rho_bar_word,
    rho_hat,
)

from oracles import brute_coaction, brute_slice

CFG = Config(2, Fraction(1, 2))
CFG34 = Config(2, Fraction(3, 4))


def mono(key, mult=1):
    return Polynomial.monomial(MultiIndex.single(key, mult))


def lelem(key, c=1):
    return LElement.single(key, c)


Z0D0 = Tilt(MultiIndex.single(0), (0, 0))
P1 = Shift(1)

l_keys = st.sampled_from(
    [
        Shift(1),
        Shift(2),
        Z0D0,
        Tilt(MultiIndex.single(0), (1, 0)),
        Tilt(MultiIndex.single(0, 2), (0, 1)),
        Tilt(MultiIndex.single((1, 0)), (0, 0)),
    ]
)
polys = st.lists(
    st.tuples(
        st.dictionaries(
            st.one_of(st.integers(0, 2), st.sampled_from([(1, 0), (0, 1)])),
            st.integers(1, 2),
            max_size=2,
        ).map(MultiIndex.from_dict),
        st.fractions(min_value=-3, max_value=3, max_denominator=3),
    ),
    max_size=3,
).map(Polynomial.from_terms)


# -- the basic representation ------------------------------------------------


def test_rho_multiplies_after_acting():
    assert rho(lelem(Z0D0), mono(0), CFG) == mono(0) * mono(1)


@given(polys)
def test_rho_of_a_shift_is_the_bare_derivation(p):
    from postliemi.derivations import apply as apply_d

    assert rho(lelem(P1), p, CFG) == apply_d(Partial(1), p, CFG)


@given(l_keys)
def test_rho_kills_constants(key):
    assert rho(lelem(key), Polynomial.one(), CFG).is_zero


@given(l_keys, l_keys, polys)
def test_rho_is_a_lie_morphism_for_the_grand_bracket(k1, k2, p):
    x, y = lelem(k1), lelem(k2)
    lhs = rho(grand_bracket(x, y, CFG), p, CFG)
    rhs = rho(x, rho(y, p, CFG), CFG) - rho(y, rho(x, p, CFG), CFG)
    assert lhs == rhs


# -- iterated composition ----------------------------------------------------


@given(polys)
def test_empty_composition_is_the_identity(p):
    assert rho_hat((), p, CFG) == p


def test_two_step_composition():
    got = rho_hat((Z0D0, P1), mono((1, 0)), CFG)
    by_hand = rho(lelem(Z0D0), rho(lelem(P1), mono((1, 0)), CFG), CFG)
    assert got == by_hand
    assert got.is_zero


@given(l_keys, polys)
def test_single_letter_composition_is_rho(key, p):
    assert rho_hat((key,), p, CFG) == rho(lelem(key), p, CFG)


# -- the deformed recursion --------------------------------------------------


def test_length_one_is_the_plain_action():
    p = mono(0) * mono((1, 0))
    assert psi_apply([DOp((1, 0))], p, CFG) == mono(0)


def test_correction_term_shows_up():
    p = mono(0) * mono((1, 0))
    got = psi_apply([Partial(1), DOp((1, 0))], p, CFG)
    assert got == (mono(1) * mono((1, 0))).scale(2)


def test_commuting_tilts_reduce_to_composition():
    word = [DOp((1, 0)), DOp((0, 1)), DOp((0, 0))]
    p = mono((1, 0)) * mono((0, 1)) * mono(0)
    assert psi_apply(word, p, CFG) == apply_word(word, p, CFG)


@given(polys)
def test_deformed_action_of_the_empty_word(p):
    assert rho_bar_word(STRUCT_BTR, sym_word(()), p, CFG) == p


def test_decorations_multiply_after_the_recursion():
    word = sym_word((Z0D0, P1))
    for p in (mono((1, 0)), mono(0) * mono((0, 1)), Polynomial.one()):
        expect = mono(0) * psi_apply([Partial(1), DOp((0, 0))], p, CFG)
        assert rho_bar_word(STRUCT_BTR, word, p, CFG) == expect


def test_deformed_action_is_a_star_morphism():
    u = sym_word((P1,))
    v = sym_word((Z0D0,))
    p = mono((1, 0), 2)
    direct = rho_bar(STRUCT_BTR, star_word(STRUCT_BTR, u, v, CFG), p, CFG)
    nested = rho_bar_word(STRUCT_BTR, u, rho_bar_word(STRUCT_BTR, v, p, CFG), CFG)
    assert direct == nested


@settings(max_examples=50)
@given(st.lists(st.sampled_from([Partial(1), Partial(2), DOp((0, 0)), DOp((1, 0)), DOp((1, 1))]), max_size=3), polys)
def test_recursion_respects_the_grading(word, p):
    image = psi_apply(word, p, CFG)
    if image.is_zero:
        return
    shift = sum((derivation_degree(D) for D in word), start=homogeneity(MultiIndex.zero()))
    for h, part in grade_components(image).items():
        source = h - shift
        assert any(homogeneity(g) == source for g, _ in p.terms)


# -- coaction ----------------------------------------------------------------


def test_coaction_on_the_unit_monomial():
    assert coaction_contributions(MultiIndex.zero(), CFG) == (
        Contribution(sym_word(()), MultiIndex.zero(), Fraction(1)),
    )


def test_coaction_on_a_direction_variable():
    target = MultiIndex.single((1, 0))
    assert coaction_contributions(target, CFG) == (
        Contribution(sym_word(()), target, Fraction(1)),
    )


def test_coaction_on_the_squared_variable():
    target = MultiIndex.single(0, 2)
    got = coaction_contributions(target, CFG34)
    tilt10 = Tilt(MultiIndex.single(0, 2), (1, 0))
    tilt01 = Tilt(MultiIndex.single(0, 2), (0, 1))
    assert {(c.word, c.source): c.coeff for c in got} == {
        (sym_word(()), target): Fraction(1),
        (sym_word((tilt10,)), MultiIndex.single((1, 0))): Fraction(1),
        (sym_word((tilt01,)), MultiIndex.single((0, 1))): Fraction(1),
    }


def test_coaction_matches_the_brute_scan():
    for target in sorted(brute_slice(Fraction(3, 2), CFG34), key=lambda g: g.sort_rank()):
        got = {(c.word, c.source): c.coeff for c in coaction_contributions(target, CFG34)}
        assert got == brute_coaction(target, CFG34)


def test_coaction_scan_agrees_on_a_small_target():
    # Cheap spot check at a second parameter value; the exhaustive window
    # comparison lives in the acceptance suite.
    target = MultiIndex.single(0, 2)
    got = {(c.word, c.source): c.coeff for c in coaction_contributions(target, CFG)}
    assert got == brute_coaction(target, CFG)
