"""Ordinary matroids as 0/1 vectors on d-subsets, with the basis-exchange check.

A matroid is stored sparsely by its support (the set of bases).  Enumeration
code manipulates raw frozensets of bases and only wraps the survivors in the
validated ``MatroidVector`` type.
"""

from dataclasses import dataclass
from itertools import combinations

from .ground import GroundSet, enumerate_subsets, exchange_pairs, basis_minus, basis_plus


def exchange_active_set(support, X, Y):
    """Elements i of X \\ Y with both X-i and Y+i in the support."""
    return [
        i
        for i in X
        if i not in Y and basis_minus(X, i) in support and basis_plus(Y, i) in support
    ]


def find_exchange_violation(ground, rank, support):
    """First (X, Y, i) violating the basis-exchange condition, or None.

    A violation is a pair with exactly one element i whose two exchange
    bases both lie in the support: no partner j can be chosen.
    """
    if not support:
        raise ValueError("zero vector is not a matroid")
    if rank < 1 or rank + 1 > len(ground):
        return None  # no exchange pairs exist at the extreme ranks
    for X, Y in exchange_pairs(ground, rank):
        active = exchange_active_set(support, X, Y)
        if len(active) == 1:
            return (X, Y, active[0])
    return None


def is_matroid(ground, rank, support):
    """Basis-exchange validity of a raw 0/1 vector given by its support."""
    return find_exchange_violation(ground, rank, support) is None


@dataclass(frozen=True)
class MatroidVector:
    """A validated matroid: ground set, rank, and frozenset of bases."""

    ground: GroundSet
    rank: int
    support: frozenset

    def __post_init__(self):
        object.__setattr__(self, "support", frozenset(self.support))
        for B in self.support:
            if len(B) != self.rank or tuple(sorted(B)) != B:
                raise ValueError(f"basis {B!r} is not a sorted {self.rank}-tuple")
            for x in B:
                if x not in self.ground:
                    raise ValueError(f"basis element {x!r} outside ground set")
        violation = find_exchange_violation(self.ground, self.rank, self.support)
        if violation is not None:
            X, Y, i = violation
            raise ValueError(f"exchange condition fails at X={X}, Y={Y}, i={i}")

    def __contains__(self, basis):
        return basis in self.support

    def sorted_support(self):
        return sorted(self.support)


def specializes(p, q):
    """True iff q is a specialization of p (bases may only disappear)."""
    if p.ground != q.ground or p.rank != q.rank:
        raise ValueError("mismatched ground set or rank")
    return q.support <= p.support


def uniform(d, ground):
    """The uniform matroid: every d-subset is a basis."""
    return MatroidVector(ground, d, frozenset(enumerate_subsets(ground, d)))


def enumerate_matroids(d, n, max_bases=20):
    """All matroids of rank d on n elements, brute-forced over supports.

    Deterministic lexicographic output.  Guarded: refuses when the number of
    d-subsets exceeds ``max_bases`` (2^k supports would be scanned); pass a
    larger ``max_bases`` to override.
    """
    ground = GroundSet.of_size(n)
    bases = enumerate_subsets(ground, d)
    if len(bases) > max_bases:
        raise ValueError(
            f"{len(bases)} bases exceeds the enumeration guard ({max_bases}); "
            f"pass max_bases={len(bases)} to override"
        )
    found = []
    for size in range(1, len(bases) + 1):
        for combo in combinations(bases, size):
            support = frozenset(combo)
            if is_matroid(ground, d, support):
                found.append(MatroidVector(ground, d, support))
    found.sort(key=lambda m: tuple(m.sorted_support()))
    return found
