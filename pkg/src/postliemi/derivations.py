"""Basis derivations of the polynomial algebra and their closed products.

Two families act on polynomials in the z-variables:

* ``DOp(n)`` for a d-tuple n of naturals.  For n = 0 it is the re-indexing
  ladder  z^g -> sum_k (k+1) g_k z^{g - e_k + e_{k+1}}; for n != 0 it lowers
  the direction variable:  z^g -> g_n z^{g - e_n}.
* ``Partial(i)`` for i = 1..d, acting as

      z^g -> sum_k (k+1) g_k z^{g - e_k + e_{k+1} + e_{(e_i)}}
           + sum_{n != 0} (n_i + 1) g_n z^{g - e_n + e_{n + e_i}}.

Degrees are exact: |Partial(i)| = (0, 1) and |DOp(n)| = (0, -|n|), so every
basis derivation shifts the graded pieces of a polynomial uniformly.

The composition commutator of two basis derivations is again a (multiple of
a) basis derivation; ``compose_commutator`` returns the closed form, which
the tests check against actual composition on polynomials.  ``diamond`` is
the triangular product  Partial(i) <> DOp(n) = -n_i DOp(n - e_i), zero on
every other pair; its commutator recovers ``compose_commutator``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import DimensionMismatch, ParseError
from .multiindex import Config, HomDegree, MultiIndex, n_norm
from .polyalg import Polynomial


@dataclass(frozen=True)
class DOp:
    """The derivation D^(n).  n is a d-tuple of naturals; zero is allowed
    and names the ladder operator."""

    n: tuple

    def __post_init__(self):
        if not isinstance(self.n, tuple) or not self.n:
            raise ValueError(f"DOp index must be a nonempty tuple, got {self.n!r}")
        if any((not isinstance(c, int)) or c < 0 for c in self.n):
            raise ValueError(f"DOp index must consist of naturals, got {self.n!r}")


@dataclass(frozen=True)
class Partial:
    """The derivation in the i-th direction, 1-based."""

    i: int

    def __post_init__(self):
        if not isinstance(self.i, int) or self.i < 1:
            raise ValueError(f"direction index must be >= 1, got {self.i!r}")


Derivation = Union[DOp, Partial]


def derivation_degree(D: Derivation) -> HomDegree:
    if isinstance(D, Partial):
        return HomDegree(0, 1)
    return HomDegree(0, -n_norm(D.n))


def derivation_rank(D: Derivation):
    """Sort rank: shifts by direction first, then DOp by (|n|, n)."""
    if isinstance(D, Partial):
        return (0, D.i, ())
    return (1, n_norm(D.n), D.n)


def check_derivation_dim(D: Derivation, d: int) -> None:
    if isinstance(D, DOp) and len(D.n) != d:
        raise DimensionMismatch(f"derivation index {D.n} has length {len(D.n)}, expected {d}")
    if isinstance(D, Partial) and D.i > d:
        raise DimensionMismatch(f"direction {D.i} out of range for dimension {d}")


def _unit_dir(i: int, d: int) -> tuple:
    return tuple(1 if j == i - 1 else 0 for j in range(d))


def _tuple_add(n: tuple, i: int) -> tuple:
    return tuple(c + 1 if j == i - 1 else c for j, c in enumerate(n))


def _tuple_sub(n: tuple, i: int) -> tuple:
    return tuple(c - 1 if j == i - 1 else c for j, c in enumerate(n))


def _ladder_moves(g: MultiIndex):
    """(coefficient, g - e_k + e_{k+1}) for each counting key of g."""
    for k, m in g.k_entries():
        moved = g.sub(MultiIndex.single(k)) + MultiIndex.single(k + 1)
        yield Fraction((k + 1) * m), moved


def apply_to_monomial(D: Derivation, g: MultiIndex, cfg: Config) -> list:
    """Action on a single monomial, as (multi-index, coefficient) pairs."""
    check_derivation_dim(D, cfg.d)
    out = []
    if isinstance(D, DOp):
        if all(c == 0 for c in D.n):
            for c, moved in _ladder_moves(g):
                out.append((moved, c))
        else:
            m = g.get(D.n)
            if m:
                out.append((g.sub(MultiIndex.single(D.n)), Fraction(m)))
        return out
    # Partial(i): the ladder branch decorated with e_i, plus the raising branch
    ei = _unit_dir(D.i, cfg.d)
    for c, moved in _ladder_moves(g):
        out.append((moved + MultiIndex.single(ei), c))
    for n, m in g.n_entries():
        raised = g.sub(MultiIndex.single(n)) + MultiIndex.single(_tuple_add(n, D.i))
        out.append((raised, Fraction((n[D.i - 1] + 1) * m)))
    return out


def apply(D: Derivation, p: Polynomial, cfg: Config) -> Polynomial:
    terms = []
    for g, c in p.terms:
        for gg, cc in apply_to_monomial(D, g, cfg):
            terms.append((gg, c * cc))
    return Polynomial.from_terms(terms)


def apply_word(ds: Sequence[Derivation], p: Polynomial, cfg: Config) -> Polynomial:
    """Compose right to left: apply_word([D1, D2], p) = D1(D2(p))."""
    for D in reversed(ds):
        p = apply(D, p, cfg)
    return p


# -- linear combinations -----------------------------------------------------


def _norm_combo(pairs) -> tuple:
    acc: dict = {}
    for D, c in pairs:
        c = Fraction(c)
        if c == 0:
            continue
        acc[D] = acc.get(D, Fraction(0)) + c
        if acc[D] == 0:
            del acc[D]
    return tuple(sorted(acc.items(), key=lambda Dc: derivation_rank(Dc[0])))


@dataclass(frozen=True)
class DerivationCombo:
    """Finite rational combination of basis derivations, canonical."""

    terms: tuple = ()

    @staticmethod
    def zero() -> "DerivationCombo":
        return _DC_ZERO

    @staticmethod
    def single(D: Derivation, c=1) -> "DerivationCombo":
        return DerivationCombo(_norm_combo([(D, c)]))

    @staticmethod
    def from_terms(pairs) -> "DerivationCombo":
        return DerivationCombo(_norm_combo(pairs))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "DerivationCombo") -> "DerivationCombo":
        return DerivationCombo.from_terms(list(self.terms) + list(other.terms))

    def __neg__(self) -> "DerivationCombo":
        return DerivationCombo(tuple((D, -c) for D, c in self.terms))

    def __sub__(self, other: "DerivationCombo") -> "DerivationCombo":
        return self + (-other)

    def scale(self, c) -> "DerivationCombo":
        c = Fraction(c)
        if c == 0:
            return _DC_ZERO
        return DerivationCombo(tuple((D, cc * c) for D, cc in self.terms))

    def apply(self, p: Polynomial, cfg: Config) -> Polynomial:
        out = Polynomial.zero()
        for D, c in self.terms:
            out = out + apply(D, p, cfg).scale(c)
        return out


_DC_ZERO = DerivationCombo(())


def diamond(D1: Derivation, D2: Derivation) -> DerivationCombo:
    """Partial(i) <> DOp(n) = -n_i DOp(n - e_i); zero on every other pair."""
    if isinstance(D1, Partial) and isinstance(D2, DOp):
        ni = D2.n[D1.i - 1] if D1.i <= len(D2.n) else 0
        if ni:
            return DerivationCombo.single(DOp(_tuple_sub(D2.n, D1.i)), -ni)
    return DerivationCombo.zero()


def compose_commutator(D1: Derivation, D2: Derivation) -> DerivationCombo:
    """[D1, D2] under composition, in closed form.

    The only nonzero bracket of basis elements is
    [Partial(i), DOp(n)] = -n_i DOp(n - e_i), equivalently
    [DOp(n), Partial(i)] = +n_i DOp(n - e_i).
    """
    return diamond(D1, D2) - diamond(D2, D1)


# -- text form ---------------------------------------------------------------
#
#   D(1,0)    D(0,0)    P1


def print_derivation(D: Derivation) -> str:
    if isinstance(D, Partial):
        return f"P{D.i}"
    return "D(" + ",".join(str(c) for c in D.n) + ")"


def parse_derivation(s: str, d: int | None = None) -> Derivation:
    text = s
    s = s.strip()
    if s.startswith("P"):
        try:
            i = int(s[1:])
        except ValueError:
            raise ParseError(f"bad direction index in {s!r}", text, 1) from None
        D: Derivation = Partial(i)
    elif s.startswith("D(") and s.endswith(")"):
        comps = s[2:-1].split(",")
        try:
            n = tuple(int(c.strip()) for c in comps)
        except ValueError:
            raise ParseError(f"bad derivation index in {s!r}", text, 2) from None
        try:
            D = DOp(n)
        except ValueError as e:
            raise ParseError(str(e), text, 2) from None
    else:
        raise ParseError(f"expected P<i> or D(...), got {s!r}", text, 0)
    if d is not None:
        check_derivation_dim(D, d)
    return D
