"""Brute-force reference computations for the test suite.

Everything in this file trades speed for transparency: enumerate every
candidate inside sound finite caps, evaluate it exactly, keep the nonzero
ones.  The library proper prunes by divisibility and closure bookkeeping;
these scans are what that bookkeeping is checked against, so they must not
share its shortcuts.

The only library pieces reused here are the value types (MultiIndex, words,
polynomials) and the pointwise evaluators rho_bar_word / star_word, which the
relevant checks treat as ground truth for single candidates.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from postliemi.multiindex import (
    Config,
    HomDegree,
    MultiIndex,
    hom_value,
    homogeneity,
    n_norm,
)
from postliemi.polyalg import Polynomial
from postliemi.postlie import Shift, Tilt
from postliemi.enveloping import STRUCT_BTR, sigma, star_word, sym_word
from postliemi.representation import rho_bar_word


def direction_tuples(d: int, max_norm: int, include_zero: bool = False) -> list:
    """All d-tuples of naturals with coordinate sum between 1 (or 0) and max_norm."""
    low = 0 if include_zero else 1
    out = [n for n in product(range(max_norm + 1), repeat=d) if low <= sum(n) <= max_norm]
    out.sort(key=lambda n: (sum(n), n))
    return out


def brute_slice(val: Fraction, cfg: Config) -> set:
    """The capped degree slice {gamma : |gamma| <= val}, enumerated the slow way.

    Candidate support: counting keys k <= floor(val/alpha), direction keys
    with |n| <= floor(val).  Exponents are chosen one key at a time against
    the remaining exact budget; nothing smarter.
    """
    val = Fraction(val)
    if val < 0:
        return set()
    kmax = int(val / cfg.alpha)
    nmax = int(val)
    keys = [(k, cfg.alpha) for k in range(kmax + 1)]
    keys += [(n, Fraction(n_norm(n))) for n in direction_tuples(cfg.d, nmax)]
    found = set()

    def rec(i: int, remaining: Fraction, chosen: dict):
        if i == len(keys):
            found.add(MultiIndex.from_dict(chosen))
            return
        key, step = keys[i]
        count = 0
        while count * step <= remaining:
            rec(i + 1, remaining - count * step, {**chosen, key: count} if count else chosen)
            count += 1

    rec(0, val, {})
    return found


def brute_slice_hom(bound: HomDegree, cfg: Config) -> set:
    return brute_slice(bound.value(cfg), cfg)


# -- alphabet and word enumeration -------------------------------------------


def letter_degree(key) -> HomDegree:
    """Degree of a basis letter, recomputed from the definitions: a shift
    raises by one, a tilt carries its decoration minus the derivation norm."""
    if isinstance(key, Shift):
        return HomDegree(0, 1)
    return homogeneity(key.gamma) + HomDegree(0, -n_norm(key.n))


def word_degree(w) -> HomDegree:
    deg = HomDegree.zero()
    for key in w:
        deg = deg + letter_degree(key)
    return deg


def brute_letters(max_gamma: Fraction, cfg: Config) -> list:
    """Every basis key of the graded subalgebra whose decoration stays at or
    below the given degree value: all shifts, and every tilt with
    |gamma| <= max_gamma and |gamma| > |n|."""
    out = [Shift(i) for i in range(1, cfg.d + 1)]
    for g in sorted(brute_slice(max_gamma, cfg), key=lambda g: g.sort_rank()):
        gval = hom_value(g, cfg)
        for n in direction_tuples(cfg.d, int(Fraction(max_gamma)), include_zero=True):
            if gval > n_norm(n):
                out.append(Tilt(g, n))
    return out


def budget_words(letters: list, max_value: Fraction, cfg: Config) -> list:
    """All multiset words over the alphabet with total degree value at most
    max_value, the empty word included.  Every letter must have strictly
    positive degree or the recursion would not terminate."""
    max_value = Fraction(max_value)
    degs = [letter_degree(x).value(cfg) for x in letters]
    assert all(v > 0 for v in degs)
    words = []

    def rec(i: int, remaining: Fraction, acc: list):
        words.append(sym_word(acc))
        for j in range(i, len(letters)):
            if degs[j] <= remaining:
                rec(j, remaining - degs[j], acc + [letters[j]])

    rec(0, max_value, [])
    return words


# -- coaction by exhaustive scan ---------------------------------------------


def brute_coaction(target: MultiIndex, cfg: Config) -> dict:
    """Map (word, source) -> coefficient of the coaction on z^target.

    Scans every word of in-L letters whose decorations fit in the degree
    slice of the target, and every source monomial with the complementary
    degree, counting keys capped by the largest one in the target.  Each
    candidate is settled by applying the word to the source and reading off
    one coefficient.
    """
    tval = hom_value(target, cfg)
    ht = homogeneity(target)
    k_keys = [k for k, _ in target.k_entries()]
    max_k = max(k_keys) if k_keys else -1
    letters = brute_letters(tval, cfg)
    out = {}
    for u in budget_words(letters, tval, cfg):
        need = ht - word_degree(u)
        if need.a < 0 or need.b < 0:
            continue
        for beta in _sources(need, max_k, cfg):
            c = rho_bar_word(STRUCT_BTR, u, Polynomial.monomial(beta), cfg).coeff(target)
            if c != 0:
                out[(u, beta)] = out.get((u, beta), Fraction(0)) + c / sigma(u)
    return {k: v for k, v in out.items() if v != 0}


def _sources(need: HomDegree, max_k: int, cfg: Config) -> list:
    """All monomial exponents of homogeneity exactly (need.a, need.b) whose
    counting keys do not exceed max_k; the action never lowers an index."""
    k_opts = _count_splits(need.a, max_k)
    n_opts = _norm_splits(need.b, cfg.d)
    return [ks + ns for ks in k_opts for ns in n_opts]


def _count_splits(total: int, max_k: int) -> list:
    if total == 0:
        return [MultiIndex.zero()]
    if max_k < 0:
        return []
    out = []

    def rec(k: int, left: int, acc: MultiIndex):
        if k > max_k:
            if left == 0:
                out.append(acc)
            return
        for c in range(left + 1):
            rec(k + 1, left - c, acc + MultiIndex.single(k, c) if c else acc)

    rec(0, total, MultiIndex.zero())
    return out


def _norm_splits(total: int, d: int) -> list:
    if total == 0:
        return [MultiIndex.zero()]
    vecs = direction_tuples(d, total)
    out = []

    def rec(i: int, left: int, acc: MultiIndex):
        if left == 0:
            out.append(acc)
            return
        if i == len(vecs):
            return
        step = n_norm(vecs[i])
        c = 0
        while c * step <= left:
            rec(i + 1, left - c * step, acc + MultiIndex.single(vecs[i], c) if c else acc)
            c += 1

    rec(0, total, MultiIndex.zero())
    return out


# -- dual coproduct by pair scan ---------------------------------------------


def brute_dual_coproduct(w, letters: list, cfg: Config) -> dict:
    """Map (left word, right word) -> coefficient, from the defining duality:
    the coefficient of u1 (x) u2 is <u1 * u2, w> / (sigma(u1) sigma(u2)).

    All pairs over the supplied alphabet with the exact complementary degrees
    are tried; no closure computation, no pruning beyond degree bookkeeping.
    """
    degw = word_degree(w)
    valw = degw.value(cfg)
    sw = sigma(w)
    words = budget_words(letters, valw, cfg)
    buckets: dict = {}
    for u in words:
        du = word_degree(u)
        buckets.setdefault((du.a, du.b), []).append(u)
    out = {}
    for u1 in words:
        need = degw - word_degree(u1)
        for u2 in buckets.get((need.a, need.b), ()):
            c = star_word(STRUCT_BTR, u1, u2, cfg).coeff(w)
            if c != 0:
                out[(u1, u2)] = c * sw / (sigma(u1) * sigma(u2))
    return out


def brute_dual_table(letters: list, max_value: Fraction, cfg: Config) -> dict:
    """Dual coproducts of every word of degree value at most max_value over
    the alphabet, all at once: word -> {(left, right) -> coefficient}.

    One pass over the word pairs whose degree values fit the budget; each
    star product is expanded once and its support distributed to the matching
    targets.  Collecting by support rather than by complementary degree means
    a product that landed in the wrong degree would show up as a mismatch
    instead of being silently skipped.
    """
    max_value = Fraction(max_value)
    words = budget_words(letters, max_value, cfg)
    sig = {u: sigma(u) for u in words}
    val = {u: word_degree(u).value(cfg) for u in words}
    table: dict = {u: {} for u in words}
    for u1 in words:
        for u2 in words:
            if val[u1] + val[u2] > max_value:
                continue
            for w, c in star_word(STRUCT_BTR, u1, u2, cfg).terms:
                if w in table:
                    table[w][(u1, u2)] = c * sig[w] / (sig[u1] * sig[u2])
    return table
