"""Structure constants of a connection/bracket pair on a finite index set.

A ``StructureConstants`` value holds two sparse tables over an index set I:

    gamma[i, j, m]   the connection,  i * j = sum_m gamma[i,j,m] m
    delta[i, j, m]   the bracket,     [i, j] = sum_m delta[i,j,m] m

with delta antisymmetric in (i, j).  Three polynomial conditions are checked
entry by entry, each returning the lexicographically sorted list of
``(indices, residual)`` pairs where the condition fails:

* ``check_null_torsion``:  gamma[i,j,m] - gamma[j,i,m] = delta[i,j,m];
* ``check_constant_torsion``: with t[j,k,m] the null-torsion residual,

      sum_l ( gamma[i,l,m] t[j,k,l] - gamma[i,j,l] t[l,k,m]
              - t[j,l,m] gamma[i,k,l] ) = 0   for all (i,j,k,m);

* ``check_flat``:

      sum_l ( gamma[i,l,m] gamma[j,k,l] - gamma[j,l,m] gamma[i,k,l]
              - delta[i,j,l] gamma[l,k,m] ) = 0   for all (i,j,k,m).

``diamond_from_order`` builds a torsion-free connection from a bracket table
and a ranking of the index set: the full bracket is assigned to the
ascending side of each noncommuting pair and zero to the other.

``constants_from_derivations`` extracts both tables from the closed-form
products of basis derivations; the label set must be closed under both
products or the truncated tables would be meaningless, so non-closure is an
error rather than a silent drop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .derivations import (
    DOp,
    Derivation,
    Partial,
    compose_commutator,
    derivation_rank,
    diamond,
    parse_derivation,
    print_derivation,
)
from .errors import ParseError
from .multiindex import direction_keys


def _norm_table(entries) -> dict:
    out: dict = {}
    for (i, j, m), v in entries:
        v = Fraction(v)
        if v == 0:
            continue
        key = (i, j, m)
        out[key] = out.get(key, Fraction(0)) + v
        if out[key] == 0:
            del out[key]
    return out


@dataclass
class StructureConstants:
    """Treated as immutable; use replace helpers rather than mutating."""

    index_set: tuple
    gamma: dict = field(default_factory=dict)
    delta: dict = field(default_factory=dict)

    def g(self, i, j, m) -> Fraction:
        return self.gamma.get((i, j, m), Fraction(0))

    def d(self, i, j, m) -> Fraction:
        return self.delta.get((i, j, m), Fraction(0))

    def pos(self, label) -> int:
        return self.index_set.index(label)

    def validate(self) -> None:
        known = set(self.index_set)
        if len(known) != len(self.index_set):
            raise ValueError("repeated label in index set")
        for table in (self.gamma, self.delta):
            for i, j, m in table:
                if not {i, j, m} <= known:
                    raise ValueError(f"entry ({i},{j},{m}) uses a label outside the index set")
        for (i, j, m), v in self.delta.items():
            if self.d(j, i, m) != -v:
                raise ValueError(f"bracket table not antisymmetric at ({i},{j},{m})")

    @staticmethod
    def from_entries(index_set, gamma_entries=(), delta_entries=()) -> "StructureConstants":
        sc = StructureConstants(
            tuple(index_set), _norm_table(gamma_entries), _norm_table(delta_entries)
        )
        sc.validate()
        return sc

    def with_entry(self, kind: str, i, j, m, value) -> "StructureConstants":
        """Copy with one entry overwritten; skips validation so deliberately
        broken tables can be built for regression checks."""
        gamma, delta = dict(self.gamma), dict(self.delta)
        table = gamma if kind == "g" else delta
        value = Fraction(value)
        if value == 0:
            table.pop((i, j, m), None)
        else:
            table[(i, j, m)] = value
        return StructureConstants(self.index_set, gamma, delta)


def _sorted_violations(sc: StructureConstants, found: dict) -> list:
    order = {label: k for k, label in enumerate(sc.index_set)}
    return sorted(found.items(), key=lambda iv: tuple(order[x] for x in iv[0]))


def check_null_torsion(sc: StructureConstants) -> list:
    found = {}
    for i in sc.index_set:
        for j in sc.index_set:
            for m in sc.index_set:
                r = sc.g(i, j, m) - sc.g(j, i, m) - sc.d(i, j, m)
                if r != 0:
                    found[(i, j, m)] = r
    return _sorted_violations(sc, found)


def _t(sc: StructureConstants, j, k, m) -> Fraction:
    return sc.g(j, k, m) - sc.g(k, j, m) - sc.d(j, k, m)


def check_constant_torsion(sc: StructureConstants) -> list:
    found = {}
    I = sc.index_set
    for i in I:
        for j in I:
            for k in I:
                for m in I:
                    r = Fraction(0)
                    for l in I:
                        r += (
                            sc.g(i, l, m) * _t(sc, j, k, l)
                            - sc.g(i, j, l) * _t(sc, l, k, m)
                            - _t(sc, j, l, m) * sc.g(i, k, l)
                        )
                    if r != 0:
                        found[(i, j, k, m)] = r
    return _sorted_violations(sc, found)


def check_flat(sc: StructureConstants) -> list:
    found = {}
    I = sc.index_set
    for i in I:
        for j in I:
            for k in I:
                for m in I:
                    r = Fraction(0)
                    for l in I:
                        r += (
                            sc.g(i, l, m) * sc.g(j, k, l)
                            - sc.g(j, l, m) * sc.g(i, k, l)
                            - sc.d(i, j, l) * sc.g(l, k, m)
                        )
                    if r != 0:
                        found[(i, j, k, m)] = r
    return _sorted_violations(sc, found)


ALL_CHECKS = {
    "torsion": check_null_torsion,
    "covtorsion": check_constant_torsion,
    "flat": check_flat,
}


def diamond_from_order(lie_constants: StructureConstants, order) -> StructureConstants:
    """Connection from a bracket and a ranking: for each noncommuting pair the
    bracket goes to the ascending side, gamma[i,j] = delta[i,j] when
    rank(i) < rank(j), zero otherwise.

    order may be a mapping label -> comparable rank or a sequence listing
    labels from smallest to largest.  Every label in a noncommuting pair must
    be ranked, and tied ranks on such a pair are rejected.
    """
    if not isinstance(order, Mapping):
        order = {label: k for k, label in enumerate(order)}
    gamma_entries = []
    for (i, j, m), v in lie_constants.delta.items():
        if i not in order or j not in order:
            missing = i if i not in order else j
            raise ValueError(f"order does not rank label {missing!r} of a noncommuting pair")
        if order[i] == order[j]:
            raise ValueError(f"order does not separate the noncommuting pair ({i!r}, {j!r})")
        if order[i] < order[j]:
            gamma_entries.append(((i, j, m), v))
    return StructureConstants.from_entries(
        lie_constants.index_set, gamma_entries, lie_constants.delta.items()
    )


# -- extraction from the derivation tables -----------------------------------


def derivation_labels(d: int, max_norm: int) -> list:
    """The standard closed truncation: all shifts and all DOp(n), |n| <= max_norm."""
    zero = tuple([0] * d)
    return [Partial(i) for i in range(1, d + 1)] + [
        DOp(n) for n in [zero] + direction_keys(d, max_norm)
    ]


def constants_from_derivations(derivs: Sequence[Derivation]) -> StructureConstants:
    """Extract gamma from the triangular product and delta from the
    composition commutator; rejects index sets not closed under either."""
    derivs = sorted(derivs, key=derivation_rank)
    known = set(derivs)
    labels = {D: print_derivation(D) for D in derivs}
    gamma_entries, delta_entries = [], []
    for D1 in derivs:
        for D2 in derivs:
            for entries, combo in (
                (gamma_entries, diamond(D1, D2)),
                (delta_entries, compose_commutator(D1, D2)),
            ):
                for D3, c in combo.terms:
                    if D3 not in known:
                        raise ValueError(
                            f"index set not closed: {labels[D1]} and {labels[D2]} "
                            f"produce {print_derivation(D3)}"
                        )
                    entries.append(((labels[D1], labels[D2], labels[D3]), c))
    return StructureConstants.from_entries(
        tuple(labels[D] for D in derivs), gamma_entries, delta_entries
    )


def derivation_order(sc: StructureConstants):
    """Rank the labels of a derivation-labelled table by kind: shifts first,
    then DOp by (|n|, n)."""
    return {label: derivation_rank(parse_derivation(label)) for label in sc.index_set}


# -- file form ---------------------------------------------------------------
#
#   g P1 D(1,0) D(0,0) = -1
#   d P1 D(1,0) D(0,0) = -1
#
# '#' starts a comment; labels are derivation grammar strings.


def print_constants(sc: StructureConstants) -> str:
    order = {label: k for k, label in enumerate(sc.index_set)}
    lines = []
    for kind, table in (("g", sc.gamma), ("d", sc.delta)):
        for (i, j, m), v in sorted(
            table.items(), key=lambda iv: tuple(order[x] for x in iv[0])
        ):
            lines.append(f"{kind} {i} {j} {m} = {v}")
    return "\n".join(lines) + ("\n" if lines else "")


def parse_constants(text: str, d: int | None = None) -> StructureConstants:
    gamma_entries, delta_entries = [], []
    seen: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if len(toks) != 6 or toks[4] != "=":
            raise ParseError(f"line {lineno}: expected 'g|d i j m = value', got {raw!r}")
        kind, *labels, _, value_s = toks
        if kind not in ("g", "d"):
            raise ParseError(f"line {lineno}: table must be 'g' or 'd', got {kind!r}")
        norm = []
        for lab in labels:
            try:
                D = parse_derivation(lab, d)
            except ParseError as e:
                raise ParseError(f"line {lineno}: {e}") from None
            canon = print_derivation(D)
            seen[canon] = D
            norm.append(canon)
        try:
            value = Fraction(value_s)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"line {lineno}: bad rational {value_s!r}") from None
        (gamma_entries if kind == "g" else delta_entries).append((tuple(norm), value))
    index_set = tuple(
        sorted(seen, key=lambda lab: derivation_rank(seen[lab]))
    )
    return StructureConstants.from_entries(index_set, gamma_entries, delta_entries)
