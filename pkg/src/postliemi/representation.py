"""Action of basis elements and words on polynomials, and the coaction.

A basis key a (x) D acts on a polynomial by p -> a * D(p).  Words act two
ways: ``rho_hat`` composes the letter actions as operators, while ``rho_bar``
pulls every polynomial decoration out front and applies ``psi_word`` to the
derivation parts.  The two are intertwined by the word-to-star map: applying
rho_hat to a word equals applying rho_bar to its iterated star product.

``psi_word`` is the recursion

    Psi[D0 D1 ... Dn] p = D0(Psi[D1 ... Dn] p) - sum_i Psi[D1 ... (D0 <> Di) ... Dn] p

with Psi[] = id and Psi[D] = D; it is symmetric in the derivations even
though the recursion peels them in order.  Results are memoized per
(word, monomial, configuration) because the recursion branches factorially.

``coaction_contributions`` inverts rho_bar against a target monomial: it
finds every (word u, source monomial beta) with

    < rho_bar_btr(u)(z^beta), z^target > != 0,

reading the bracket as plain coefficient extraction, and reports the
coefficient divided by the symmetry factor of u.  The search space is finite:
tilt decorations must divide the target, the two-component degree is exactly
additive, and that fixes the shift count and bounds beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .derivations import (
    Derivation,
    apply as apply_derivation,
    apply_to_monomial,
    derivation_rank,
    diamond as derivation_diamond,
)
from .enveloping import STRUCT_BTR, Structure, SymElement, SymWord, sigma, sym_word
from .multiindex import Config, MultiIndex, direction_keys, hom_value, homogeneity, n_norm
from .polyalg import Polynomial
from .postlie import (
    LBasisKey,
    LElement,
    Shift,
    Tilt,
    key_derivation,
    key_poly,
    pbw_rank,
    structural_rank,
)

# -- letter and operator actions ---------------------------------------------


def rho_key(key: LBasisKey, p: Polynomial, cfg: Config) -> Polynomial:
    return key_poly(key) * apply_derivation(key_derivation(key), p, cfg)


def rho(x: LElement, p: Polynomial, cfg: Config) -> Polynomial:
    out = Polynomial.zero()
    for key, c in x.terms:
        out = out + rho_key(key, p, cfg).scale(c)
    return out


def rho_hat(seq: Sequence[LBasisKey], p: Polynomial, cfg: Config) -> Polynomial:
    """Compose the letter actions, rightmost letter applied first."""
    for key in reversed(tuple(seq)):
        p = rho_key(key, p, cfg)
    return p


# -- the symmetrized action of derivation words ------------------------------

_PSI_CACHE: dict = {}


def psi_word(ds: tuple, g: MultiIndex, cfg: Config) -> Polynomial:
    key = (ds, g, cfg)
    hit = _PSI_CACHE.get(key)
    if hit is not None:
        return hit
    if not ds:
        out = Polynomial.monomial(g)
    elif len(ds) == 1:
        out = Polynomial.from_terms(apply_to_monomial(ds[0], g, cfg))
    else:
        head, rest = ds[0], ds[1:]
        out = apply_derivation(head, psi_word(rest, g, cfg), cfg)
        for i in range(len(rest)):
            combo = derivation_diamond(head, rest[i])
            for dnew, c in combo.terms:
                repl = rest[:i] + (dnew,) + rest[i + 1 :]
                out = out - psi_word(repl, g, cfg).scale(c)
    _PSI_CACHE[key] = out
    return out


def psi_apply(ds: Iterable[Derivation], p: Polynomial, cfg: Config) -> Polynomial:
    ds = tuple(ds)
    out = Polynomial.zero()
    for g, c in p.terms:
        out = out + psi_word(ds, g, cfg).scale(c)
    return out


def _compose_derivations(ds: Sequence[Derivation], p: Polynomial, cfg: Config) -> Polynomial:
    for D in reversed(tuple(ds)):
        p = apply_derivation(D, p, cfg)
    return p


def rho_bar_word(struct: Structure, w: Sequence[LBasisKey], p: Polynomial, cfg: Config) -> Polynomial:
    """Product of the decorations times the derivation-word action.

    In the btr structure the derivation part is psi_word; with the plain
    structure the diamond terms vanish and it degenerates to composition in
    the fixed word order.
    """
    front = Polynomial.one()
    for key in w:
        front = front * key_poly(key)
    if struct.name == "btr":
        ds = tuple(sorted((key_derivation(k) for k in w), key=derivation_rank))
        acted = psi_apply(ds, p, cfg)
    else:
        ordered = sorted(w, key=lambda k: pbw_rank(k, cfg))
        acted = _compose_derivations([key_derivation(k) for k in ordered], p, cfg)
    return front * acted


def rho_bar(struct: Structure, u: SymElement, p: Polynomial, cfg: Config) -> Polynomial:
    out = Polynomial.zero()
    for w, c in u.terms:
        out = out + rho_bar_word(struct, w, p, cfg).scale(c)
    return out


# -- coaction ----------------------------------------------------------------


@dataclass(frozen=True)
class Contribution:
    """One term of the coaction on a monomial: coeff * word (x) z^source."""

    word: SymWord
    source: MultiIndex
    coeff: Fraction


def _tilt_letter_candidates(target: MultiIndex, cfg: Config) -> list:
    out = []
    for g in target.divisors():
        if g.is_zero:
            continue
        val = hom_value(g, cfg)
        zero_dir = tuple([0] * cfg.d)
        cap = int(val) if val != int(val) else int(val) - 1
        for n in [zero_dir] + direction_keys(cfg.d, cap):
            if n_norm(n) < val:
                out.append(Tilt(g, n))
    return sorted(out, key=structural_rank)


def _k_parts(count: int, max_key: int) -> list:
    """Multisets of count K-keys drawn from 0..max_key, as multi-indices."""
    if count == 0:
        return [MultiIndex.zero()]
    if max_key < 0:
        return []
    out = []

    def rec(k: int, left: int, acc: dict):
        if left == 0:
            out.append(MultiIndex.from_dict(dict(acc)))
            return
        if k > max_key:
            return
        for m in range(left + 1):
            nxt = dict(acc)
            if m:
                nxt[k] = m
            rec(k + 1, left - m, nxt)

    rec(0, count, {})
    return out


def _n_parts(budget: int, d: int) -> list:
    """Multi-indices supported on direction keys with weighted size <= budget."""
    keys = direction_keys(d, budget)
    out = []

    def rec(i: int, left: int, acc: dict):
        if i == len(keys):
            out.append(MultiIndex.from_dict(dict(acc)))
            return
        w = n_norm(keys[i])
        m = 0
        while m * w <= left:
            nxt = dict(acc)
            if m:
                nxt[keys[i]] = m
            rec(i + 1, left - m * w, nxt)
            m += 1

    rec(0, budget, {})
    return out


def _shift_distributions(total: int, d: int) -> list:
    """All ways of assigning total shift letters to the d directions."""
    out = []

    def rec(i: int, left: int, acc: list):
        if i == d:
            if left == 0:
                out.append(tuple(acc))
            return
        for m in range(left + 1):
            rec(i + 1, left - m, acc + [m])

    rec(0, total, [])
    return out


def coaction_contributions(target: MultiIndex, cfg: Config) -> tuple:
    """All (word, source, coefficient) triples of the coaction on z^target.

    Exact and complete: candidate words are enumerated from divisibility and
    degree bookkeeping, then every candidate coefficient is computed by
    evaluating the action; zero candidates are dropped.
    """
    ht = homogeneity(target)
    k_keys = [k for k, _ in target.k_entries()]
    max_k = max(k_keys) if k_keys else -1
    letters = _tilt_letter_candidates(target, cfg)
    results = []

    def finish(tilts: list, used: MultiIndex):
        rem = target.sub(used)
        a_fix = homogeneity(rem).a
        sum_norm = sum(n_norm(t.n) for t in tilts)
        sum_b = sum(homogeneity(t.gamma).b for t in tilts)
        b_budget = ht.b - sum_b + sum_norm
        if b_budget < 0:
            return
        for k_part in _k_parts(a_fix, max_k):
            for n_part in _n_parts(b_budget, cfg.d):
                beta = k_part + n_part
                m_total = b_budget - homogeneity(n_part).b
                for dist in _shift_distributions(m_total, cfg.d):
                    word_letters = list(tilts)
                    for i, m in enumerate(dist):
                        word_letters.extend([Shift(i + 1)] * m)
                    u = sym_word(word_letters)
                    value = rho_bar_word(STRUCT_BTR, u, Polynomial.monomial(beta), cfg)
                    c = value.coeff(target)
                    if c != 0:
                        results.append(Contribution(u, beta, c / sigma(u)))

    def choose(i: int, tilts: list, used: MultiIndex):
        finish(tilts, used)
        for j in range(i, len(letters)):
            g = letters[j].gamma
            if target.try_sub(used + g) is None:
                continue
            choose(j, tilts + [letters[j]], used + g)

    choose(0, [], MultiIndex.zero())
    results.sort(
        key=lambda r: (
            (len(r.word), tuple(structural_rank(k) for k in r.word)),
            r.source.sort_rank(),
        )
    )
    return tuple(results)
