"""Chirotopes, oriented-matroid classes, and the MacPhersonian poset.

A chirotope is stored as its sign on each sorted basis; the alternating
extension to arbitrary tuples goes through the permutation sign.  The
three-term relation is scanned over sorted representatives of exchange
pairs, which suffices because reordering only changes the whole list by a
global sign (tested, not assumed).
"""

from dataclasses import dataclass
from itertools import product

from .ground import GroundSet, enumerate_subsets, exchange_pairs, perm_sign, basis_minus, basis_plus
from .matroid import MatroidVector


def sign_eval(signs, tup):
    """Alternating evaluation of a sparse sign map on an ordered tuple."""
    if len(set(tup)) != len(tup):
        return 0
    key = tuple(sorted(tup))
    return perm_sign(tup) * signs.get(key, 0)


def three_term_values(signs, X, Y):
    """The d+1 products (-1)^k chi(X minus x_k) chi(x_k, Y), for k = 1..d+1."""
    out = []
    for k, xk in enumerate(X):
        rest = X[:k] + X[k + 1:]
        a = sign_eval(signs, rest)
        b = sign_eval(signs, (xk,) + tuple(Y))
        out.append((-1) ** (k + 1) * a * b)
    return out


def is_chirotope(ground, rank, signs):
    """Three-term sign condition on every exchange pair (sorted representatives)."""
    signs = {B: s for B, s in signs.items() if s != 0}
    if not signs:
        raise ValueError("zero map is not a chirotope")
    if rank < 1 or rank + 1 > len(ground):
        return True
    for X, Y in exchange_pairs(ground, rank):
        vals = three_term_values(signs, X, Y)
        nonzero = {v for v in vals if v != 0}
        if nonzero and nonzero != {1, -1}:
            return False
    return True


@dataclass(frozen=True)
class Chirotope:
    """A validated chirotope; ``signs`` holds the nonzero basis signs only."""

    ground: GroundSet
    rank: int
    signs: tuple  # sorted tuple of (basis, sign), sign in {-1, +1}

    @classmethod
    def from_dict(cls, ground, rank, signs):
        entries = tuple(sorted((B, s) for B, s in signs.items() if s != 0))
        for B, s in entries:
            if s not in (-1, 1):
                raise ValueError(f"sign {s!r} at basis {B!r} not in {{-1, 0, +1}}")
            if len(B) != rank or tuple(sorted(B)) != B:
                raise ValueError(f"basis {B!r} is not a sorted {rank}-subset")
        if not is_chirotope(ground, rank, dict(entries)):
            raise ValueError("three-term sign condition fails")
        return cls(ground, rank, entries)

    def as_dict(self):
        return dict(self.signs)

    def sign(self, B):
        return dict(self.signs).get(B, 0)

    def negate(self):
        return Chirotope(self.ground, self.rank, tuple((B, -s) for B, s in self.signs))

    def support(self):
        return frozenset(B for B, _ in self.signs)


@dataclass(frozen=True)
class OrientedMatroidClass:
    """A chirotope up to global negation, held by its canonical representative.

    Canonical: the first nonzero sign in lexicographic basis order is +1.
    """

    rep: Chirotope


def om_class(chi):
    first_sign = chi.signs[0][1]
    return OrientedMatroidClass(chi.negate() if first_sign < 0 else chi)


def om_specializes(a, b):
    """True iff b arises from a by zeroing out some basis signs."""
    if a.rep.ground != b.rep.ground or a.rep.rank != b.rep.rank:
        raise ValueError("mismatched ground set or rank")
    chi = a.rep.as_dict()
    bases = enumerate_subsets(a.rep.ground, a.rep.rank)
    for candidate in (b.rep, b.rep.negate()):
        prime = candidate.as_dict()
        if all(prime.get(B, 0) in (chi.get(B, 0), 0) for B in bases):
            return True
    return False


def underlying_matroid_of_chirotope(chi):
    """The absolute-value matroid |chi|; asserts the exchange condition."""
    return MatroidVector(chi.ground, chi.rank, chi.support())


def i_max(chi):
    """The maximal initial datum compatible with chi.

    x enters I(X, Y) exactly when |chi|(X-x) and |chi|(Y+x) are both
    nonzero; pairs with no such x carry the full set X \\ Y (the degenerate
    convention for all-infinite pairs).
    """
    from .valuated import InitialDatum

    support = chi.support()
    data = {}
    for X, Y in exchange_pairs(chi.ground, chi.rank):
        diff = [i for i in X if i not in Y]
        active = frozenset(
            i for i in diff if basis_minus(X, i) in support and basis_plus(Y, i) in support
        )
        data[(X, Y)] = active if active else frozenset(diff)
    return InitialDatum.from_dict(data)


def datum_chirotope_condition(I, chi):
    """The sign half of compatibility: both signs occur inside I(X, Y).

    Scans every exchange pair; a pair passes when its three-term list is
    identically zero, or when indices with values +1 and -1 both fall
    inside I(X, Y).
    """
    signs = chi.as_dict()
    datum = I.as_dict()
    for X, Y in exchange_pairs(chi.ground, chi.rank):
        vals = three_term_values(signs, X, Y)
        if all(v == 0 for v in vals):
            continue
        selected = {vals[k] for k, xk in enumerate(X) if xk in datum[(X, Y)]}
        if not {1, -1} <= selected:
            return False
    return True


class IncompatibleDatumError(ValueError):
    """The initial datum is not even compatible with the underlying matroid."""


def initial_datum_compatible_with_chirotope(I, chi, assume_matroid_compatible=False):
    """Full compatibility of an initial datum with a chirotope.

    Requires I to be compatible with |chi| (certified by LP feasibility of
    the cell (|chi|, I) unless the caller vouches for it); raises
    ``IncompatibleDatumError`` otherwise, which is distinct from returning
    False on a sign failure.
    """
    if not assume_matroid_compatible:
        from .valuated import DressianCellId, cell_system, lp_feasible_interior

        p = underlying_matroid_of_chirotope(chi)
        cell = DressianCellId(p, I)
        if lp_feasible_interior(cell_system(cell)) is None:
            raise IncompatibleDatumError(
                "initial datum is not compatible with the underlying matroid"
            )
    return datum_chirotope_condition(I, chi)


@dataclass(frozen=True)
class MacPPoset:
    """The specialization poset of oriented-matroid classes of fixed rank."""

    elements: tuple

    def leq(self, a, b):
        return om_specializes(a, b)

    def __len__(self):
        return len(self.elements)

    def to_finite_poset(self):
        from .complexes import FinitePoset

        return FinitePoset.from_leq(self.elements, om_specializes)


def enumerate_oriented_matroids(d, n, max_bases=9):
    """All rank-d oriented matroid classes on n elements, with the poset.

    Brute force over 3^k sign vectors; guarded by ``max_bases`` on k.
    """
    ground = GroundSet.of_size(n)
    bases = enumerate_subsets(ground, d)
    if len(bases) > max_bases:
        raise ValueError(
            f"{len(bases)} bases exceeds the 3^k enumeration guard ({max_bases}); "
            f"pass max_bases={len(bases)} to override"
        )
    seen = set()
    classes = []
    for combo in product((-1, 0, 1), repeat=len(bases)):
        signs = {B: s for B, s in zip(bases, combo) if s != 0}
        if not signs:
            continue
        if not is_chirotope(ground, d, signs):
            continue
        cls = om_class(Chirotope.from_dict(ground, d, signs))
        if cls not in seen:
            seen.add(cls)
            classes.append(cls)
    classes.sort(key=lambda c: c.rep.signs)
    return MacPPoset(tuple(classes))
