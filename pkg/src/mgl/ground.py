"""Ground sets, subset enumeration, permutation signs, and alternating functions.

Everything downstream represents a rank-d object as a function on sorted
d-subsets (tuples) of a totally ordered ground set.  The alternating
extension to ordered tuples is recovered through ``alternating_eval``.
"""

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class GroundSet:
    """A finite, totally ordered set of distinct integer labels."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(self.elements)
        if list(elems) != sorted(set(elems)):
            raise ValueError("ground set elements must be distinct and sorted ascending")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of_size(cls, n):
        return cls(tuple(range(n)))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements


def perm_sign(sequence):
    """Sign of the unique permutation sorting ``sequence`` ascending.

    Raises ValueError on duplicate entries.
    """
    seq = list(sequence)
    if len(set(seq)) != len(seq):
        raise ValueError("not a permutation input: duplicate entries")
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _default_negate(v):
    return -v


def alternating_eval(g, tup, zero=0, negate=_default_negate, ground=None):
    """Evaluate the alternating extension of a subset-function on an ordered tuple.

    ``g`` maps sorted tuples to values (a dict; missing keys read as ``zero``).
    Returns ``zero`` when the tuple has a repeated entry, otherwise the value
    of ``g`` on the sorted tuple, negated when the sorting permutation is odd.
    """
    if ground is not None:
        for x in tup:
            if x not in ground:
                raise ValueError(f"tuple element {x!r} outside ground set")
    if len(set(tup)) != len(tup):
        return zero
    key = tuple(sorted(tup))
    value = g.get(key, zero)
    if perm_sign(tup) == 1:
        return value
    return negate(value)


def enumerate_subsets(E, d):
    """All d-subsets of the ground set as sorted tuples, in lexicographic order."""
    if not 0 <= d <= len(E):
        raise ValueError(f"rank {d} out of range for ground set of size {len(E)}")
    return [tuple(c) for c in combinations(E.elements, d)]


def exchange_pairs(E, d):
    """All pairs (X, Y) with X a (d+1)-subset and Y a (d-1)-subset, lexicographic.

    X and Y are allowed to intersect.  At extreme ranks (d < 1 or
    d + 1 > |E|) there are no pairs and the list is empty.
    """
    if d < 1 or d + 1 > len(E):
        return []
    bigs = enumerate_subsets(E, d + 1)
    smalls = enumerate_subsets(E, d - 1)
    return [(X, Y) for X in bigs for Y in smalls]


def basis_minus(X, i):
    """The sorted tuple X with element i removed."""
    return tuple(x for x in X if x != i)


def basis_plus(Y, i):
    """The sorted tuple Y with element i inserted."""
    return tuple(sorted(Y + (i,)))
