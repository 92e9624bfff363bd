"""Word algebras over the basis keys: symmetric and enveloping products.

Words are multisets of basis keys, stored as sorted tuples (``SymWord``).
Under the commutative product ``poly_star`` they form the free polynomial
algebra on the keys; under ``star`` they carry the associative product

    u * v = sum u^(1) (u^(2) > v)

built from the Guin-Oudom extension ``ext_action`` of a letter-level product
to words.  Two structures are supported:

* ``STRUCT_JZ``: letter product >, letter bracket [.,.]; words multiply by
  concatenation followed by ``pbw_normal_form``;
* ``STRUCT_BTR``: letter product btr, zero bracket; words multiply by
  multiset union.

``coshuffle`` is the coproduct with primitive letters; on a word it sums
multiset splittings with binomial multiplicities, which is simultaneously
the coproduct of the symmetric algebra and, through the sorted-word basis,
of the enveloping algebra.

Duality: ``pairing`` satisfies <w, w> = prod m_i! on a word with letter
multiplicities m_i, zero on distinct words; ``tmap`` multiplies each word by
that symmetry factor.  ``dual_coproduct`` computes the coproduct dual to
``star`` in the btr structure,

    D(x) = x (x) 1 + sum_{u, y} <u > y, x> / sigma(u)  u (x) y

on letters, extended multiplicatively to words.  Letters must lie in the
graded subalgebra (``in_L``): there the contributing set is provably finite
and is found by a breadth-first un-grafting closure, every candidate being
confirmed by exact evaluation.  Outside that subalgebra the sum is genuinely
infinite, so membership is a precondition rather than a limitation of the
implementation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import TruncationRefused
from .multiindex import Config, MultiIndex, direction_keys, hom_value, n_norm
from .postlie import (
    LBasisKey,
    LElement,
    Shift,
    Tilt,
    bracket,
    btr,
    key_degree,
    key_in_L,
    pbw_rank,
    print_l_key,
    structural_rank,
    triangleright,
    zero_op,
)

SymWord = Tuple[LBasisKey, ...]  # letters sorted by structural_rank


def sym_word(letters: Iterable[LBasisKey]) -> SymWord:
    return tuple(sorted(letters, key=structural_rank))


EMPTY_WORD: SymWord = ()


def word_mults(w: SymWord) -> list:
    """Distinct letters with multiplicities, in canonical order."""
    out: list = []
    for x in w:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(x, m) for x, m in out]


def sigma(w: SymWord) -> int:
    """Symmetry factor: product of factorials of letter multiplicities."""
    s = 1
    for _, m in word_mults(w):
        s *= math.factorial(m)
    return s


def _word_rank(w: SymWord):
    return (len(w), tuple(structural_rank(x) for x in w))


def _norm_sym_terms(pairs) -> tuple:
    acc: dict = {}
    for w, c in pairs:
        c = Fraction(c)
        if c == 0:
            continue
        acc[w] = acc.get(w, Fraction(0)) + c
        if acc[w] == 0:
            del acc[w]
    return tuple(sorted(acc.items(), key=lambda wc: _word_rank(wc[0])))


@dataclass(frozen=True)
class SymElement:
    """Finite rational combination of words, canonical."""

    terms: tuple = ()

    @staticmethod
    def zero() -> "SymElement":
        return _SE_ZERO

    @staticmethod
    def unit() -> "SymElement":
        return _SE_UNIT

    @staticmethod
    def single(w: SymWord, c=1) -> "SymElement":
        return SymElement(_norm_sym_terms([(w, c)]))

    @staticmethod
    def from_terms(pairs) -> "SymElement":
        return SymElement(_norm_sym_terms(pairs))

    @staticmethod
    def from_l(x: LElement) -> "SymElement":
        return SymElement.from_terms(((k,), c) for k, c in x.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: SymWord) -> Fraction:
        for ww, c in self.terms:
            if ww == w:
                return c
        return Fraction(0)

    def __add__(self, other: "SymElement") -> "SymElement":
        return SymElement.from_terms(list(self.terms) + list(other.terms))

    def __neg__(self) -> "SymElement":
        return SymElement(tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def scale(self, c) -> "SymElement":
        c = Fraction(c)
        if c == 0:
            return _SE_ZERO
        return SymElement(tuple((w, cc * c) for w, cc in self.terms))


_SE_ZERO = SymElement(())
_SE_UNIT = SymElement(((EMPTY_WORD, Fraction(1)),))


def counit(u: SymElement) -> Fraction:
    return u.coeff(EMPTY_WORD)


def _norm_tensor_terms(pairs) -> tuple:
    acc: dict = {}
    for wp, c in pairs:
        c = Fraction(c)
        if c == 0:
            continue
        acc[wp] = acc.get(wp, Fraction(0)) + c
        if acc[wp] == 0:
            del acc[wp]
    return tuple(
        sorted(acc.items(), key=lambda wc: (_word_rank(wc[0][0]), _word_rank(wc[0][1])))
    )


@dataclass(frozen=True)
class TensorElement:
    """Combination of word pairs, canonical."""

    terms: tuple = ()

    @staticmethod
    def zero() -> "TensorElement":
        return TensorElement(())

    @staticmethod
    def single(w1: SymWord, w2: SymWord, c=1) -> "TensorElement":
        return TensorElement(_norm_tensor_terms([((w1, w2), c)]))

    @staticmethod
    def from_terms(pairs) -> "TensorElement":
        return TensorElement(_norm_tensor_terms(pairs))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w1: SymWord, w2: SymWord) -> Fraction:
        for (a, b), c in self.terms:
            if a == w1 and b == w2:
                return c
        return Fraction(0)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement.from_terms(list(self.terms) + list(other.terms))

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + TensorElement(tuple((wp, -c) for wp, c in other.terms))


# -- commutative product and coproduct ---------------------------------------


def poly_star(u: SymElement, v: SymElement) -> SymElement:
    """Multiset union on words, extended bilinearly."""
    terms = []
    for w1, c1 in u.terms:
        for w2, c2 in v.terms:
            terms.append((sym_word(w1 + w2), c1 * c2))
    return SymElement.from_terms(terms)


def tensor_poly_star(t1: TensorElement, t2: TensorElement) -> TensorElement:
    terms = []
    for (a1, b1), c1 in t1.terms:
        for (a2, b2), c2 in t2.terms:
            terms.append(((sym_word(a1 + a2), sym_word(b1 + b2)), c1 * c2))
    return TensorElement.from_terms(terms)


def _word_splits(w: SymWord):
    """(left, right, multiplicity) over all multiset splittings of w."""
    mults = word_mults(w)

    def rec(i: int, left: list, right: list, coeff: int):
        if i == len(mults):
            yield sym_word(left), sym_word(right), coeff
            return
        x, m = mults[i]
        for l in range(m + 1):
            yield from rec(
                i + 1, left + [x] * l, right + [x] * (m - l), coeff * math.comb(m, l)
            )

    yield from rec(0, [], [], 1)


def coshuffle_word(w: SymWord) -> TensorElement:
    return TensorElement.from_terms(
        ((w1, w2), Fraction(c)) for w1, w2, c in _word_splits(w)
    )


def coshuffle(u: SymElement) -> TensorElement:
    out = TensorElement.zero()
    for w, c in u.terms:
        out = out + TensorElement(tuple((wp, cc * c) for wp, cc in coshuffle_word(w).terms))
    return out


# -- the two structures ------------------------------------------------------


@dataclass(frozen=True)
class Structure:
    """A letter product with its bracket; picks the word multiplication."""

    name: str  # "jz" or "btr"

    @property
    def prod(self):
        return triangleright if self.name == "jz" else btr

    @property
    def lie(self):
        return bracket if self.name == "jz" else zero_op

    def mul_words(self, w1: SymWord, w2: SymWord, cfg: Config) -> SymElement:
        if self.name == "btr":
            return SymElement.single(sym_word(w1 + w2))
        return pbw_normal_form(w1 + w2, self.lie, cfg)

    def mul(self, u: SymElement, v: SymElement, cfg: Config) -> SymElement:
        out = SymElement.zero()
        for w1, c1 in u.terms:
            for w2, c2 in v.terms:
                out = out + self.mul_words(w1, w2, cfg).scale(c1 * c2)
        return out


STRUCT_JZ = Structure("jz")
STRUCT_BTR = Structure("btr")
STRUCTURES = {"jz": STRUCT_JZ, "btr": STRUCT_BTR}


# -- PBW normal form ---------------------------------------------------------


def _first_inversion(seq: tuple, ranks: list, strategy: str) -> int | None:
    positions = range(len(seq) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    for i in positions:
        if ranks[i] > ranks[i + 1]:
            return i
    return None


def pbw_normal_form(
    seq: Sequence[LBasisKey], lie, cfg: Config, strategy: str = "leftmost"
) -> SymElement:
    """Rewrite x y -> y x + lie(x, y) on adjacent inversions until every word
    is nondecreasing in the fixed total order; returns the resulting
    combination of sorted words.

    Terminates because each swap reduces the inversion count and each bracket
    term is strictly shorter.  The two strategies must agree; the test suite
    checks that.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    pending: dict = {tuple(seq): Fraction(1)}
    done: dict = {}
    while pending:
        word, coeff = pending.popitem()
        ranks = [pbw_rank(x, cfg) for x in word]
        i = _first_inversion(word, ranks, strategy)
        if i is None:
            # finished sequences are recorded as canonical words: the sorted
            # sequence determines its multiset and conversely
            key = sym_word(word)
            done[key] = done.get(key, Fraction(0)) + coeff
            continue
        x, y = word[i], word[i + 1]
        swapped = word[:i] + (y, x) + word[i + 2 :]
        pending[swapped] = pending.get(swapped, Fraction(0)) + coeff
        for k, c in lie(LElement.single(x), LElement.single(y), cfg).terms:
            shorter = word[:i] + (k,) + word[i + 2 :]
            pending[shorter] = pending.get(shorter, Fraction(0)) + coeff * c
        pending = {w: c for w, c in pending.items() if c != 0}
    return SymElement.from_terms(done.items())


# -- Guin-Oudom extension ----------------------------------------------------

_ACTION_CACHE: dict = {}


def ext_action_word(struct: Structure, u: SymWord, v: SymWord, cfg: Config) -> SymElement:
    """The extension of the letter product to words acting on words.

    Defining rules: the empty word acts as the identity; u acts on the empty
    word through the counit; (x v) > w = x > (v > w) - (x > v) > w peels one
    letter; u > (v w) splits u through the coproduct.
    """
    key = (struct.name, u, v, cfg)
    hit = _ACTION_CACHE.get(key)
    if hit is not None:
        return hit
    if not u:
        out = SymElement.single(v)
    elif not v:
        out = SymElement.zero()  # counit of a nonempty word
    elif len(u) == 1 and len(v) == 1:
        out = SymElement.from_l(struct.prod(LElement.single(u[0]), LElement.single(v[0]), cfg))
    elif len(v) == 1:
        x, rest = u[0], u[1:]
        inner = ext_action_word(struct, rest, v, cfg)
        first = ext_action_elem(struct, SymElement.single((x,)), inner, cfg)
        xrest = ext_action_word(struct, (x,), rest, cfg)
        second = ext_action_elem(struct, xrest, SymElement.single(v), cfg)
        out = first - second
    else:
        y, rest = (v[0],), v[1:]
        out = SymElement.zero()
        for u1, u2, mult in _word_splits(u):
            left = ext_action_word(struct, u1, y, cfg)
            right = ext_action_word(struct, u2, rest, cfg)
            prod = struct.mul(left, right, cfg)
            out = out + prod.scale(mult)
    _ACTION_CACHE[key] = out
    return out


def ext_action_elem(
    struct: Structure, u: SymElement, v: SymElement, cfg: Config
) -> SymElement:
    out = SymElement.zero()
    for wu, cu in u.terms:
        for wv, cv in v.terms:
            out = out + ext_action_word(struct, wu, wv, cfg).scale(cu * cv)
    return out


def star_word(struct: Structure, u: SymWord, v: SymWord, cfg: Config) -> SymElement:
    out = SymElement.zero()
    for u1, u2, mult in _word_splits(u):
        acted = ext_action_word(struct, u2, v, cfg)
        out = out + struct.mul(SymElement.single(u1), acted, cfg).scale(mult)
    return out


def star(struct: Structure, u: SymElement, v: SymElement, cfg: Config) -> SymElement:
    out = SymElement.zero()
    for wu, cu in u.terms:
        for wv, cv in v.terms:
            out = out + star_word(struct, wu, wv, cfg).scale(cu * cv)
    return out


def tensor_star(
    struct: Structure, t1: TensorElement, t2: TensorElement, cfg: Config
) -> TensorElement:
    """Componentwise star on tensors."""
    out = TensorElement.zero()
    for (a1, b1), c1 in t1.terms:
        for (a2, b2), c2 in t2.terms:
            left = star_word(struct, a1, a2, cfg)
            right = star_word(struct, b1, b2, cfg)
            for wl, cl in left.terms:
                for wr, cr in right.terms:
                    out = out + TensorElement.single(wl, wr, c1 * c2 * cl * cr)
    return out


def phi(struct: Structure, seq: Sequence[LBasisKey], cfg: Config) -> SymElement:
    """Iterated star of the letters, right-associated."""
    out = SymElement.unit()
    for x in reversed(tuple(seq)):
        out = star(struct, SymElement.single((x,)), out, cfg)
    return out


# -- duality -----------------------------------------------------------------


def tmap(u: SymElement) -> SymElement:
    return SymElement(tuple((w, c * sigma(w)) for w, c in u.terms))


def pairing(u: SymElement, v: SymElement) -> Fraction:
    """<w, w'> = delta_{w,w'} * sigma(w) on words, extended bilinearly."""
    vals = {w: c for w, c in v.terms}
    out = Fraction(0)
    for w, c in u.terms:
        if w in vals:
            out += c * vals[w] * sigma(w)
    return out


def tensor_pairing(u: SymElement, v: SymElement, t: TensorElement) -> Fraction:
    """<u (x) v, t> with the word pairing on both legs."""
    out = Fraction(0)
    for (a, b), c in t.terms:
        cu = u.coeff(a)
        if cu == 0:
            continue
        cv = v.coeff(b)
        if cv == 0:
            continue
        out += c * cu * sigma(a) * cv * sigma(b)
    return out


# -- dual coproduct ----------------------------------------------------------


@dataclass(frozen=True)
class TruncationParams:
    """Optional ceilings for the dual-coproduct search.

    Both default to None, meaning the exact (complete) computation.  Explicit
    values below what completeness requires are refused, never silently
    applied: a clipped coproduct is wrong, not approximate.
    """

    max_word_len: int | None = None
    max_letter_degree: Fraction | None = None


def _deg2(key: LBasisKey) -> tuple:
    """(counting weight, direction weight) of a key; additive along products
    of elements of the graded subalgebra."""
    h = key_degree(key)
    return (h.a, h.b)


def _ungraft_moves(zeta: Tilt, cfg: Config) -> list:
    """Candidate (letter, receiver) pairs whose product can contain zeta.

    Purely structural over-approximation: every returned pair is later
    confirmed or discarded by exact evaluation, so extra candidates cost time
    but never correctness.  Missing ones would be a bug; the enumeration
    below walks every letter shape that the product rules can consume.
    """
    out = []
    gz, nz = zeta.gamma, zeta.n
    d = cfg.d
    zero_dir = tuple([0] * d)
    # a decorated lowering letter z^{g'} D^(n'), n' != 0, acting multiplicatively:
    # receiver decoration gz - g' + e_{n'}
    for gp in gz.divisors():
        val = hom_value(gp, cfg)
        if val <= 0:
            continue
        cap = int(val) if val != int(val) else int(val) - 1
        for np_ in direction_keys(d, cap):
            if n_norm(np_) >= val:
                continue
            xi = Tilt(gp, np_)
            try:
                recv = Tilt(gz.sub(gp) + MultiIndex.single(np_), nz)
            except ValueError:
                continue
            out.append((xi, recv))
        # ladder letter z^{g'} D^(0): receiver gz - g' + e_k - e_{k+1}
        if not gp.is_zero:
            xi0 = Tilt(gp, zero_dir)
            rem = gz.try_sub(gp)
            if rem is not None:
                for k, _ in rem.k_entries():
                    if k == 0:
                        continue
                    recv_g = rem + MultiIndex.single(k - 1)
                    recv_g = recv_g.sub(MultiIndex.single(k))
                    out.append((xi0, Tilt(recv_g, nz)))
    for i in range(1, d + 1):
        xi = Shift(i)
        ei = tuple(1 if j == i - 1 else 0 for j in range(d))
        # triangular branch of a shift: receiver (gz, nz + e_i)
        out.append((xi, Tilt(gz, tuple(a + b for a, b in zip(nz, ei)))))
        # ladder branch of a shift: gz gains e_{k+1} and e_{(e_i)}
        rem = gz.try_sub(MultiIndex.single(ei))
        if rem is not None:
            for k, _ in rem.k_entries():
                if k == 0:
                    continue
                recv_g = rem.sub(MultiIndex.single(k)) + MultiIndex.single(k - 1)
                out.append((xi, Tilt(recv_g, nz)))
            # raising branch of a shift: gz gains e_{m + e_i} from e_m
            for nkey, _ in gz.n_entries():
                m = tuple(a - b for a, b in zip(nkey, ei))
                if any(c < 0 for c in m) or not any(m):
                    continue
                recv_g = gz.sub(MultiIndex.single(nkey)) + MultiIndex.single(m)
                out.append((xi, Tilt(recv_g, nz)))
    return out


def _letter_closure(x: LBasisKey, cfg: Config) -> list:
    """All keys that can appear in a contributing pair (u, y) for x, found by
    un-grafting breadth-first; finite because the combined degree drops by at
    least one per step."""
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for zeta in frontier:
            if not isinstance(zeta, Tilt):
                continue
            for xi, recv in _ungraft_moves(zeta, cfg):
                for cand in (xi, recv):
                    if cand not in seen and key_in_L(cand, cfg):
                        seen.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return sorted(seen, key=structural_rank)


def _letter_words(closure: list, budget_a: int, budget_c: int) -> list:
    """Multisets over the closure whose degree pairs add to the exact budget.

    Letters carry (a, c) with a >= 0 and a + c >= 1, so words are at most
    budget_a + budget_c letters long and the recursion stops quickly.
    """
    degs = [_deg2(k) for k in closure]
    out: list = []

    def rec(i: int, rem_a: int, rem_c: int, acc: list):
        if rem_a == 0 and rem_c == 0:
            out.append(tuple(acc))
        if i == len(closure):
            return
        if rem_a + rem_c <= 0:
            return
        a, c = degs[i]
        m = 0
        while True:
            na, nc = rem_a - m * a, rem_c - m * c
            if na < 0 or na + nc < 0:
                break
            rec(i + 1, na, nc, acc + [closure[i]] * m)
            m += 1

    rec(0, budget_a, budget_c, [])
    return [sym_word(w) for w in out if w]


_DUAL_LETTER_CACHE: dict = {}


def dual_coproduct_letter(x: LBasisKey, cfg: Config) -> TensorElement:
    """The coproduct dual to the btr star product, on a single letter."""
    hit = _DUAL_LETTER_CACHE.get((x, cfg))
    if hit is not None:
        return hit
    out = TensorElement.single((x,), EMPTY_WORD)
    if isinstance(x, Shift):
        out = out + TensorElement.single(EMPTY_WORD, (x,))
        _DUAL_LETTER_CACHE[(x, cfg)] = out
        return out
    closure = _letter_closure(x, cfg)
    ax, cx = _deg2(x)
    for y in closure:
        if not isinstance(y, Tilt):
            continue  # nothing acts nontrivially on a bare shift
        ay, cy = _deg2(y)
        for u in [EMPTY_WORD] + _letter_words(closure, ax - ay, cx - cy):
            acted = ext_action_word(STRUCT_BTR, u, (y,), cfg)
            c = acted.coeff((x,))
            if c != 0:
                out = out + TensorElement.single(u, (y,), c / sigma(u))
    _DUAL_LETTER_CACHE[(x, cfg)] = out
    return out


def _closure_requirements(w: SymWord, cfg: Config) -> tuple:
    """(word length, letter degree value) ceilings that completeness needs.

    Tensor legs multiply over the letters of w, so the length requirement is
    the sum of the per-letter ones.
    """
    need_len = 0
    max_deg = Fraction(0)
    for x in w:
        if isinstance(x, Shift):
            need_len += 1
            max_deg = max(max_deg, Fraction(1))
            continue
        closure = _letter_closure(x, cfg)
        ax, cx = _deg2(x)
        need_len += max(ax + cx - 1, 1)
        for k in closure:
            max_deg = max(max_deg, key_degree(k).value(cfg))
    return need_len, max_deg


def dual_coproduct(
    w: SymWord, cfg: Config, trunc: TruncationParams | None = None
) -> TensorElement:
    """Coproduct dual to star_btr; multiplicative over the letters of w.

    Every letter must satisfy in_L.  trunc=None computes exactly; explicit
    bounds are only accepted when they cover the computed requirements.
    """
    for x in w:
        if not key_in_L(x, cfg):
            raise ValueError(
                f"letter {print_l_key(x)} is outside the graded subalgebra; "
                "its dual coproduct has infinitely many terms"
            )
    if trunc is not None and (
        trunc.max_word_len is not None or trunc.max_letter_degree is not None
    ):
        need_len, need_deg = _closure_requirements(w, cfg)
        if trunc.max_word_len is not None and trunc.max_word_len < need_len:
            raise TruncationRefused(
                f"word length bound {trunc.max_word_len} is below the required {need_len}"
            )
        if trunc.max_letter_degree is not None and trunc.max_letter_degree < need_deg:
            raise TruncationRefused(
                f"letter degree bound {trunc.max_letter_degree} is below the required {need_deg}"
            )
    out = TensorElement.single(EMPTY_WORD, EMPTY_WORD)
    for x in w:
        out = tensor_poly_star(out, dual_coproduct_letter(x, cfg))
    return out


# -- text form ---------------------------------------------------------------
#
#   [P1][z{k0:1}xD(1,0)]        the empty word prints as 1


def print_word(w: Sequence[LBasisKey], cfg: Config | None = None) -> str:
    letters = list(w)
    if cfg is not None:
        letters.sort(key=lambda k: pbw_rank(k, cfg))
    if not letters:
        return "1"
    return "".join("[" + print_l_key(k) + "]" for k in letters)


def parse_word(s: str, d: int | None = None) -> tuple:
    """Bracketed letters in written order; '1' is the empty word."""
    from .errors import ParseError
    from .postlie import parse_l_key

    text = s
    s = s.strip()
    if s == "1" or not s:
        return ()
    if not (s.startswith("[") and s.endswith("]")):
        raise ParseError("word must be bracketed letters or '1'", text, 0)
    body = s[1:-1]
    letters = []
    for chunk in body.split("]["):
        letters.append(parse_l_key(chunk, d))
    return tuple(letters)


def print_sym_element(u: SymElement, cfg: Config) -> str:
    if u.is_zero:
        return "0"
    pieces = []
    for idx, (w, c) in enumerate(u.terms):
        neg = c < 0
        mag = -c if neg else c
        body = print_word(w, cfg) if mag == 1 else f"{mag} " + print_word(w, cfg)
        if idx == 0:
            pieces.append(("- " if neg else "") + body)
        else:
            pieces.append(("- " if neg else "+ ") + body)
    return " ".join(pieces)


def print_tensor_element(t: TensorElement, cfg: Config) -> str:
    """One term per line: coefficient, left word, (x), right word."""
    if t.is_zero:
        return "0"
    lines = []
    for (a, b), c in t.terms:
        lines.append(f"{c} {print_word(a, cfg)} (x) {print_word(b, cfg)}")
    return "\n".join(lines)
