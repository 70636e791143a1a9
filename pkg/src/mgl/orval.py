"""Oriented valuated matroids: signed tropical vectors and their cells.

A coordinate of a signed vector is a pair (sign, valuation).  Vectors
imported from nonzero rationals r carry (sign(r), MulValuation(|r|)), so
every modulus comparison is a product of rationals; the analytic change of
coordinates x -> -log|x| is documented here but never evaluated.

The cell D([chi], I) is named by an oriented-matroid class and an initial
datum; nonemptiness is certified by the LP of the unsigned cell (|chi|, I)
together with the sign condition, which is well defined cell-wide because
compatibility only depends on the argmin sets.

Convention: a pair (X, Y) whose exchange terms are all infinite carries the
full set X \\ Y as its datum value and imposes no constraint.  Where the
underlying support shrinks along a specialization, datum values are read
through this convention (see ``restrict_datum``).
"""

from dataclasses import dataclass
from fractions import Fraction

from .ground import exchange_pairs, perm_sign, basis_minus, basis_plus
from .matroid import MatroidVector
from .oriented import (
    Chirotope,
    MacPPoset,
    OrientedMatroidClass,
    datum_chirotope_condition,
    i_max,
    om_class,
    om_specializes,
    three_term_values,
)
from .valuated import (
    DressianCellId,
    InitialDatum,
    MulValuation,
    TropicalVector,
    _argmin_or_all,
    _pair_terms,
    enumerate_dressian_cells,
    initial_datum,
    is_tropical_plucker,
)


@dataclass(frozen=True)
class OrientedTropicalVector:
    """A signed tropical vector, stored sparsely on its support.

    ``values`` maps each supporting basis to a pair (sign, valuation) with
    sign in {-1, +1}; omitted bases are (0, infinity).  Valuations may be
    ``Fraction`` or ``MulValuation`` (rational import), uniformly per vector.
    """

    ground: object
    rank: int
    values: dict

    def __post_init__(self):
        if not self.values:
            raise ValueError("zero vector")
        for B, (s, _) in self.values.items():
            if s not in (-1, 1):
                raise ValueError(f"sign {s!r} at basis {B!r} must be -1 or +1")
            if len(B) != self.rank or tuple(sorted(B)) != B:
                raise ValueError(f"key {B!r} is not a sorted {self.rank}-subset")

    @classmethod
    def from_rationals(cls, ground, rank, rationals):
        """Import from nonzero rationals; moduli compared multiplicatively."""
        values = {}
        for B, r in rationals.items():
            r = Fraction(r)
            if r == 0:
                continue
            values[B] = (1 if r > 0 else -1, MulValuation(abs(r)))
        return cls(ground, rank, values)

    def negate(self):
        return OrientedTropicalVector(
            self.ground, self.rank, {B: (-s, v) for B, (s, v) in self.values.items()}
        )

    def support(self):
        return frozenset(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, OrientedTropicalVector)
            and self.ground == other.ground
            and self.rank == other.rank
            and self.values == other.values
        )


def scale_by_rational(Phi, c):
    """The vector c * Phi for a nonzero rational c (rational-import vectors)."""
    c = Fraction(c)
    if c == 0:
        raise ValueError("scale must be nonzero")
    sign = 1 if c > 0 else -1
    factor = MulValuation(abs(c))
    return OrientedTropicalVector(
        Phi.ground, Phi.rank, {B: (s * sign, v + factor) for B, (s, v) in Phi.values.items()}
    )


def split(Phi):
    """Componentwise (valuation, sign) projection: (phi, sign map).

    The sign map is returned raw (not validated as a chirotope) so that
    coherence checks can evaluate both halves independently.
    """
    phi = TropicalVector(Phi.ground, Phi.rank, {B: v for B, (_, v) in Phi.values.items()})
    signs = {B: s for B, (s, _) in Phi.values.items()}
    return phi, signs


def sign_chirotope(Phi):
    """The validated chirotope of Phi."""
    _, signs = split(Phi)
    return Chirotope.from_dict(Phi.ground, Phi.rank, signs)


def signed_eval(Phi, tup):
    """Alternating evaluation on an ordered tuple: (sign, valuation) or None."""
    if len(set(tup)) != len(tup):
        return None
    entry = Phi.values.get(tuple(sorted(tup)))
    if entry is None:
        return None
    s, v = entry
    return (perm_sign(tup) * s, v)


def signed_three_term(Phi, X, Y):
    """The nonzero entries of the list (-1)^k Phi(X-x_k) Phi(x_k, Y).

    Returns (index x_k, sign, valuation) triples; zero products are omitted.
    Signs multiply and valuations add, so the modulus of each product is
    compared exactly.
    """
    out = []
    for k, xk in enumerate(X):
        a = signed_eval(Phi, X[:k] + X[k + 1:])
        b = signed_eval(Phi, (xk,) + tuple(Y))
        if a is None or b is None:
            continue
        out.append((xk, (-1) ** (k + 1) * a[0] * b[0], a[1] + b[1]))
    return out


def is_oriented_tropical_plucker(Phi):
    """For every pair: the three-term list is zero, or its maximum modulus
    (minimum valuation) is attained with both signs."""
    for X, Y in exchange_pairs(Phi.ground, Phi.rank):
        products = signed_three_term(Phi, X, Y)
        if not products:
            continue
        m = min(v for _, _, v in products)
        top_signs = {s for _, s, v in products if v == m}
        if top_signs != {1, -1}:
            return False
    return True


def is_compatible(phi, chi):
    """Compatibility of a tropical Plucker vector with a chirotope.

    Requires (1) phi(B) infinite exactly when chi(B) = 0, and (2) at every
    pair with a finite term, the argmin set contains indices whose signed
    three-term values have opposite signs.
    """
    if phi.ground != chi.ground or phi.rank != chi.rank:
        raise ValueError("mismatched ground set or rank")
    if frozenset(phi.values) != chi.support():
        return False
    signs = chi.as_dict()
    for X, Y in exchange_pairs(phi.ground, phi.rank):
        terms = _pair_terms(phi, X, Y)
        if all(v is None for v in terms.values()):
            continue
        argmin = _argmin_or_all(terms)
        vals = three_term_values(signs, X, Y)
        selected = {vals[k] for k, xk in enumerate(X) if xk in argmin}
        if not {1, -1} <= selected:
            return False
    return True


@dataclass(frozen=True)
class OrientedCellId:
    """The cell D([chi], I), named by class and initial datum."""

    om: OrientedMatroidClass
    datum: InitialDatum


def cell_of_oriented(Phi):
    """The cell containing Phi: (class of sign(Phi), argmin data of val(Phi))."""
    if not is_oriented_tropical_plucker(Phi):
        raise ValueError("input is not an oriented tropical Plucker vector")
    phi, _ = split(Phi)
    return OrientedCellId(om_class(sign_chirotope(Phi)), initial_datum(phi))


@dataclass(frozen=True)
class OrientedCellPoset:
    """All nonempty cells D([chi], I), ordered by specialization.

    ([chi], I) <= ([chi'], I') iff [chi] <= [chi'] in the chirotope
    specialization order and I(X, Y) is contained in I'(X, Y) for every pair.
    """

    elements: tuple

    def leq(self, a, b):
        return om_specializes(a.om, b.om) and a.datum.contained_in(b.datum)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, cell):
        return cell in set(self.elements)

    def to_finite_poset(self):
        from .complexes import FinitePoset

        return FinitePoset.from_leq(self.elements, self.leq)


def oriented_cell_poset(d, n, max_bases=20, max_sign_bases=9):
    """All nonempty oriented cells for rank d on n elements.

    A cell ([chi], I) is kept when the unsigned cell (|chi|, I) has an
    LP-certified interior point and I satisfies the sign condition for chi;
    this certifies nonemptiness because compatibility is constant across
    each unsigned cell.
    """
    from .oriented import enumerate_oriented_matroids

    classes = enumerate_oriented_matroids(d, n, max_bases=max_sign_bases)
    by_support = {}
    for cell in enumerate_dressian_cells(d, n, max_bases=max_bases):
        by_support.setdefault(cell.matroid.support, []).append(cell)
    elements = []
    for cls in classes.elements:
        for cell in by_support.get(cls.rep.support(), []):
            if datum_chirotope_condition(cell.datum, cls.rep):
                elements.append(OrientedCellId(cls, cell.datum))
    elements.sort(key=lambda c: (c.om.rep.signs, c.datum.entries))
    return OrientedCellPoset(tuple(elements))


def project_to_macp(poset):
    """The order-preserving map ([chi], I) -> [chi], as a dict."""
    return {cell: cell.om for cell in poset.elements}


def restrict_datum(I, chi):
    """Read a datum through the support of |chi|.

    At pairs where |chi| has an exchange-active index, the value is the
    intersection with the active set; pairs with no active index carry the
    full set (the no-constraint convention).  Raises if an intersection is
    empty, which cannot happen along a specialization.
    """
    support = chi.support()
    data = {}
    for (X, Y), value in I.entries:
        diff = [i for i in X if i not in Y]
        active = frozenset(
            i for i in diff if basis_minus(X, i) in support and basis_plus(Y, i) in support
        )
        if not active:
            data[(X, Y)] = frozenset(diff)
        else:
            clipped = value & active
            if not clipped:
                raise ValueError(f"datum at (X={X}, Y={Y}) misses every active index")
            data[(X, Y)] = clipped
    return InitialDatum.from_dict(data)


def check_fiber_finality(poset, macp):
    """Verify the two finality properties of the projection to classes.

    (a) The fiber over each class [chi] has the unique maximum
        ([chi], i_max(chi)).
    (b) For each cell ([tau], I) and each class [chi] <= [tau]: the
        restriction of I to |chi| names a cell of the poset and is the
        maximum among the cells ([chi], J) with J pointwise inside I.
        (The restriction equals I itself whenever no all-infinite pair is
        involved; this is downward inheritance of compatibility, read
        through the no-constraint convention for all-infinite pairs.)

    Returns the list of violation descriptions; empty means verified.
    """
    violations = []
    members = set(poset.elements)
    fibers = {}
    for cell in poset.elements:
        fibers.setdefault(cell.om, []).append(cell)
    for cls in macp.elements:
        fiber = fibers.get(cls, [])
        top = OrientedCellId(cls, i_max(cls.rep))
        if top not in members:
            violations.append(f"fiber over {cls.rep.signs}: i_max cell missing")
            continue
        for cell in fiber:
            if not cell.datum.contained_in(top.datum):
                violations.append(
                    f"fiber over {cls.rep.signs}: {cell.datum.entries} not below i_max"
                )
    for cell in poset.elements:
        for cls in macp.elements:
            if not om_specializes(cls, cell.om):
                continue
            try:
                restricted = restrict_datum(cell.datum, cls.rep)
            except ValueError as exc:
                violations.append(f"restriction failure under {cls.rep.signs}: {exc}")
                continue
            final = OrientedCellId(cls, restricted)
            if final not in members:
                violations.append(
                    f"cell {cell.om.rep.signs}/{cell.datum.entries}: restriction to "
                    f"{cls.rep.signs} is not a cell"
                )
                continue
            for other in fibers.get(cls, []):
                if other.datum.contained_in(cell.datum) and not other.datum.contained_in(
                    restricted
                ):
                    violations.append(
                        f"cell {cell.om.rep.signs}/{cell.datum.entries}: fiber over "
                        f"{cls.rep.signs} has no final object"
                    )
    return violations
