"""Direct sums of signed tropical vectors and the sliding family Phi_t^A.

Sliding multiplies each coordinate by the monomial t_0^{b_0} ... t_n^{b_n},
where b_k counts the components routed through the k-th injection.  Within
any exchange pair the monomial is a common factor of every nonzero product,
so the oriented tropical Plucker relation is inherited from the input; the
monomial itself is an exact rational modulus, which is why sliding requires
vectors in rational-modulus (``MulValuation``) form.  Vectors carrying plain
additive valuations can be converted with ``with_rational_modulus`` by
declaring a common base.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .ground import GroundSet, perm_sign
from .valuated import MulValuation


@dataclass(frozen=True)
class InjectionFamily:
    """A tuple of injections E -> F with pairwise disjoint images.

    ``maps`` stores each injection as a sorted tuple of (source, target)
    pairs; ``codomain`` is the common target ground set.
    """

    maps: tuple
    codomain: GroundSet

    @classmethod
    def from_maps(cls, maps, codomain):
        packed = []
        seen_targets = set()
        domain = None
        for alpha in maps:
            items = tuple(sorted(alpha.items()))
            keys = frozenset(alpha)
            if domain is None:
                domain = keys
            elif keys != domain:
                raise ValueError("all injections must share the same domain")
            targets = [y for _, y in items]
            if len(set(targets)) != len(targets):
                raise ValueError("injection has repeated targets")
            for y in targets:
                if y not in codomain:
                    raise ValueError(f"target {y!r} outside the codomain")
                if y in seen_targets:
                    raise ValueError(f"images overlap at {y!r}")
                seen_targets.add(y)
            packed.append(items)
        return cls(tuple(packed), codomain)

    def __len__(self):
        return len(self.maps)

    def map(self, k):
        return dict(self.maps[k])


@dataclass(frozen=True)
class SimplexPoint:
    """Nonnegative rational weights summing to one."""

    weights: tuple

    def __post_init__(self):
        w = tuple(Fraction(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        if any(x < 0 for x in w):
            raise ValueError("simplex weights must be nonnegative")
        if sum(w) != 1:
            raise ValueError("simplex weights must sum to one")

    @classmethod
    def vertex(cls, k, n):
        """The k-th vertex of the n-simplex (n + 1 weights)."""
        return cls(tuple(Fraction(1) if i == k else Fraction(0) for i in range(n + 1)))


def pushforward(Phi, alpha, codomain):
    """Relabel Phi along an injection; zero outside the image.

    The value at a sorted target basis picks up the sign of the permutation
    ordering the relabeled tuple.
    """
    from .orval import OrientedTropicalVector

    targets = [alpha[x] for x in sorted(alpha)]
    if len(set(targets)) != len(targets):
        raise ValueError("map is not injective")
    values = {}
    for B, (s, v) in Phi.values.items():
        image = tuple(alpha[x] for x in B)
        values[tuple(sorted(image))] = (s * perm_sign(image), v)
    return OrientedTropicalVector(codomain, Phi.rank, values)


def rank_zero_unit(zero=None):
    """The unique rank-zero vector on the empty ground set.

    ``zero`` is the additive identity of the valuation type in use; the
    default is the multiplicative form's unit modulus.
    """
    from .orval import OrientedTropicalVector

    if zero is None:
        zero = MulValuation(Fraction(1))
    return OrientedTropicalVector(GroundSet(()), 0, {(): (1, zero)})


def direct_sum(Phi1, Phi2):
    """The product vector on the concatenated ground set.

    Ground sets are relabeled to 0..n1+n2-1 with the first summand's labels
    first, so every supporting basis splits as an already-sorted
    concatenation and no reordering sign appears.  Signs multiply and
    valuations add.
    """
    from .orval import OrientedTropicalVector

    n1 = len(Phi1.ground)
    relabel1 = {x: i for i, x in enumerate(Phi1.ground)}
    relabel2 = {x: n1 + i for i, x in enumerate(Phi2.ground)}
    ground = GroundSet.of_size(n1 + len(Phi2.ground))
    values = {}
    for B1, (s1, v1) in Phi1.values.items():
        for B2, (s2, v2) in Phi2.values.items():
            B = tuple(relabel1[x] for x in B1) + tuple(relabel2[x] for x in B2)
            if Phi1.rank == 0:
                v = v2
            elif Phi2.rank == 0:
                v = v1
            else:
                v = v1 + v2
            values[B] = (s1 * s2, v)
    return OrientedTropicalVector(ground, Phi1.rank + Phi2.rank, values)


def with_rational_modulus(Phi, base):
    """Convert additive integer valuations to rational moduli base**(-v).

    Requires every valuation to be an integer; the base must be a rational
    greater than one.  This realizes the declared-base form needed by
    ``slide`` without evaluating any logarithm.
    """
    from .orval import OrientedTropicalVector

    base = Fraction(base)
    if base <= 1:
        raise ValueError("base must be a rational greater than one")
    values = {}
    for B, (s, v) in Phi.values.items():
        if isinstance(v, MulValuation):
            values[B] = (s, v)
            continue
        v = Fraction(v)
        if v.denominator != 1:
            raise ValueError(f"valuation {v} at {B!r} is not an integer")
        values[B] = (s, MulValuation(base ** (-int(v))))
    return OrientedTropicalVector(Phi.ground, Phi.rank, values)


def slide(Phi, family, t):
    """The sliding vector Phi_t^A on the family's codomain.

    The coordinate at a basis routed through the injections with
    multiplicities (b_0, ..., b_n) is Phi at the pulled-back basis times the
    monomial t_0^{b_0} ... t_n^{b_n}; bases not contained in the union of
    images are zero.  At the k-th vertex this is exactly the pushforward
    along the k-th injection.
    """
    from .orval import OrientedTropicalVector

    if len(t.weights) != len(family):
        raise ValueError("simplex point size does not match the family")
    for _, (_, v) in Phi.values.items():
        if not isinstance(v, MulValuation):
            raise ValueError(
                "slide needs rational-modulus coordinates; convert with "
                "with_rational_modulus(Phi, base)"
            )
    maps = [family.map(k) for k in range(len(family))]
    domain = set(maps[0]) if maps else set()
    if any(x not in domain for x in Phi.ground):
        raise ValueError("family domain does not cover the ground set")
    values = {}
    for B, (s, v) in Phi.values.items():
        for assignment in product(range(len(family)), repeat=len(B)):
            monomial = Fraction(1)
            for k in assignment:
                monomial *= t.weights[k]
            if monomial == 0:
                continue
            image = tuple(maps[k][x] for x, k in zip(B, assignment))
            values[tuple(sorted(image))] = (
                s * perm_sign(image),
                v + MulValuation(monomial),
            )
    if not values:
        raise ValueError("sliding produced the zero vector")
    return OrientedTropicalVector(family.codomain, Phi.rank, values)
