"""Top-level acceptance gate.

Each test drives one verification suite (or the oracle comparison) at its
default sample sizes and prints the summary line, so a plain run reads as a
pass/fail scoreboard.  Everything is exact rational arithmetic; a single
nonzero residual anywhere fails the criterion.
"""

from fractions import Fraction

from postliemi.group import Character, gamma_apply
from postliemi.multiindex import Config, MultiIndex, enumerate_below_value
from postliemi.polyalg import Polynomial
from postliemi.postlie import Tilt
from postliemi.enveloping import dual_coproduct
from postliemi.representation import coaction_contributions
from postliemi.suites import run_suite

from oracles import brute_coaction, brute_dual_table, brute_letters, brute_slice

CFG_HALF = Config(2, Fraction(1, 2))
CFG_THREEQ = Config(2, Fraction(3, 4))


def _suite(name):
    r = run_suite(name)
    print(r.line())
    assert r.passed, r.line() + "".join(f"\n  {v}" for v in r.violations[:10])
    assert r.checks > 0
    return r


def test_criterion_01_post_lie_axioms():
    _suite("post-lie-jz")


def test_criterion_02_pre_lie_from_symmetrization():
    _suite("pre-lie-btr")


def test_criterion_03_flat_connection():
    _suite("flat-diamond")


def test_criterion_04_bianchi_residuals():
    _suite("bianchi")


def test_criterion_05_curvature_torsion_identities():
    _suite("curvature-torsion")


def test_criterion_06_hopf_structure():
    _suite("hopf")


def test_criterion_07_word_representations():
    _suite("representation")


def test_criterion_08_duality_pairing():
    _suite("duality")


def test_criterion_09_recentering_composition():
    r = _suite("gamma-compose")
    f = Character.from_dict(
        {
            Tilt(MultiIndex.single(0, 2), (1, 0)): Fraction(1, 2),
            Tilt(MultiIndex.single(0, 2), (0, 1)): Fraction(-2),
        }
    )
    got = gamma_apply(f, MultiIndex.single(0, 2), CFG_THREEQ)
    expect = (
        Polynomial.monomial(MultiIndex.single(0, 2))
        + Polynomial.monomial(MultiIndex.single((1, 0)), Fraction(1, 2))
        + Polynomial.monomial(MultiIndex.single((0, 1)), Fraction(-2))
    )
    assert got == expect
    assert r.passed


def test_criterion_10_structure_constants():
    _suite("coordinates")


def test_criterion_11_brute_force_agreement():
    checks = 0

    for cfg, val in [
        (CFG_HALF, Fraction(0)),
        (CFG_HALF, Fraction(1)),
        (CFG_HALF, Fraction(3, 2)),
        (CFG_THREEQ, Fraction(3, 2)),
        (CFG_THREEQ, Fraction(2)),
    ]:
        got = enumerate_below_value(val, cfg)
        assert len(set(got)) == len(got)
        assert set(got) == brute_slice(val, cfg)
        checks += 1

    targets = sorted(brute_slice(Fraction(3, 2), CFG_THREEQ), key=lambda g: g.sort_rank())
    assert len(targets) == 12
    for target in targets:
        got = {
            (c.word, c.source): c.coeff
            for c in coaction_contributions(target, CFG_THREEQ)
        }
        assert got == brute_coaction(target, CFG_THREEQ)
        checks += 1

    letters = brute_letters(Fraction(3, 2), CFG_THREEQ)
    assert len(letters) == 25
    table = brute_dual_table(letters, Fraction(3, 2), CFG_THREEQ)
    assert len(table) == 558
    for w, expect in table.items():
        got = {k: c for (k, c) in dual_coproduct(w, CFG_THREEQ).terms if c}
        assert got == expect
        checks += 1

    print(f"[PASS] oracle-agreement: {checks} checks against the brute-force scans")
