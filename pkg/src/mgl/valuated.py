"""Tropical Plucker vectors, initial data, and the Dressian's cone structure.

Values live in the tropical semiring: exact rationals plus infinity.  A
coordinate that is infinite is simply absent from the (sparse) value map.
Besides plain ``Fraction`` valuations, any value type supporting +, -, < and
== can be used; ``MulValuation`` carries the valuation of a nonzero rational
multiplicatively so that rational-modulus data never passes through a
logarithm.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product

from . import lp
from .ground import GroundSet, enumerate_subsets, exchange_pairs, basis_minus, basis_plus
from .matroid import MatroidVector, specializes


@dataclass(frozen=True)
class MulValuation:
    """Valuation of a nonzero rational, compared through its modulus.

    Ordering mirrors -log|.|: a larger modulus is a smaller valuation.
    Addition of valuations is multiplication of moduli, so all comparisons
    stay exact on rationals.
    """

    modulus: Fraction

    def __post_init__(self):
        m = Fraction(self.modulus)
        if m <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "modulus", m)

    def __add__(self, other):
        return MulValuation(self.modulus * other.modulus)

    def __sub__(self, other):
        return MulValuation(self.modulus / other.modulus)

    def __lt__(self, other):
        return self.modulus > other.modulus

    def __le__(self, other):
        return self.modulus >= other.modulus


@dataclass(frozen=True)
class TropicalVector:
    """A map from d-subsets to tropical values, stored sparsely.

    ``values`` holds the finite coordinates only; every omitted basis is
    infinite.  The vector must not be identically infinite.
    """

    ground: GroundSet
    rank: int
    values: dict

    def __post_init__(self):
        if not self.values:
            raise ValueError("vector is identically infinite")
        for B in self.values:
            if len(B) != self.rank or tuple(sorted(B)) != B:
                raise ValueError(f"key {B!r} is not a sorted {self.rank}-subset")
            for x in B:
                if x not in self.ground:
                    raise ValueError(f"basis element {x!r} outside ground set")

    def value(self, B):
        """Finite value of basis B, or None for infinity."""
        return self.values.get(B)

    def __eq__(self, other):
        return (
            isinstance(other, TropicalVector)
            and self.ground == other.ground
            and self.rank == other.rank
            and self.values == other.values
        )


def _pair_terms(phi, X, Y):
    """For each i in X \\ Y, the term phi(X-i) + phi(Y+i), or None if infinite."""
    terms = {}
    for i in X:
        if i in Y:
            continue
        a = phi.value(basis_minus(X, i))
        b = phi.value(basis_plus(Y, i))
        terms[i] = None if a is None or b is None else a + b
    return terms


def _argmin_or_all(terms):
    """Argmin of the finite terms; the full index set when all are infinite."""
    finite = {i: v for i, v in terms.items() if v is not None}
    if not finite:
        return frozenset(terms)
    m = min(finite.values())
    return frozenset(i for i, v in finite.items() if v == m)


@dataclass(frozen=True)
class InitialDatum:
    """For each exchange pair (X, Y), a nonempty subset of X \\ Y."""

    entries: tuple  # sorted tuple of ((X, Y), frozenset)

    @classmethod
    def from_dict(cls, mapping):
        for (X, Y), I in mapping.items():
            extra = set(I) - (set(X) - set(Y))
            if extra:
                raise ValueError(f"initial datum at (X={X}, Y={Y}) not contained in X \\ Y")
            if not I:
                raise ValueError(f"initial datum at (X={X}, Y={Y}) is empty")
        return cls(tuple(sorted((k, frozenset(v)) for k, v in mapping.items())))

    def as_dict(self):
        return dict(self.entries)

    def __getitem__(self, pair):
        return dict(self.entries)[pair]

    def contained_in(self, other):
        """Pointwise inclusion into another datum on the same pairs."""
        mine = self.as_dict()
        theirs = other.as_dict()
        if set(mine) != set(theirs):
            raise ValueError("initial data defined on different exchange pairs")
        return all(mine[k] <= theirs[k] for k in mine)


def initial_datum(phi):
    """The argmin set of phi(X-i) + phi(Y+i) over i in X \\ Y, for every pair.

    When every term is infinite the argmin is taken to be all of X \\ Y and
    the pair imposes no constraint.
    """
    data = {}
    for X, Y in exchange_pairs(phi.ground, phi.rank):
        data[(X, Y)] = _argmin_or_all(_pair_terms(phi, X, Y))
    return InitialDatum.from_dict(data)


def is_tropical_plucker(phi):
    """True iff every exchange-pair argmin with a finite term has size >= 2."""
    for X, Y in exchange_pairs(phi.ground, phi.rank):
        terms = _pair_terms(phi, X, Y)
        if all(v is None for v in terms.values()):
            continue
        if len(_argmin_or_all(terms)) < 2:
            return False
    return True


def underlying_matroid(phi):
    """The 0/1 vector of finite coordinates; asserts the exchange condition."""
    return MatroidVector(phi.ground, phi.rank, frozenset(phi.values))


def normalize(phi):
    """The orbit representative whose minimum finite value is zero."""
    m = min(phi.values.values())
    return TropicalVector(phi.ground, phi.rank, {B: v - m for B, v in phi.values.items()})


@dataclass(frozen=True)
class DressianCellId:
    """A cone C(p, I) of the Dressian, named by matroid and initial datum."""

    matroid: MatroidVector
    datum: InitialDatum
    witness: TropicalVector | None = field(default=None, compare=False)


@dataclass
class LinearSystem:
    """Equalities and strict inequalities over coordinates indexed by bases.

    Forms are integer-coefficient dicts basis -> coeff; an equality means
    form == 0 and a strict means form < 0.  ``inconsistent`` marks systems
    that are structurally unsatisfiable before any LP runs.
    """

    variables: tuple
    equalities: list
    stricts: list
    inconsistent: bool = False


def _accumulate(form, B, coeff):
    form[B] = form.get(B, 0) + coeff
    if form[B] == 0:
        del form[B]


def _term_form(X, Y, i):
    form = {}
    _accumulate(form, basis_minus(X, i), 1)
    _accumulate(form, basis_plus(Y, i), 1)
    return form


def _difference_form(X, Y, i, j):
    form = dict(_term_form(X, Y, i))
    _accumulate(form, basis_minus(X, j), -1)
    _accumulate(form, basis_plus(Y, j), -1)
    return form


def cell_system(cell):
    """The linear system cutting out C(p, I) inside the stratum of supp(p).

    Equalities tie the terms of I(X, Y) together; strict inequalities place
    them below every other finite term.  Pairs whose terms are all infinite
    impose nothing (and force I(X, Y) to be the full set X \\ Y).
    """
    p = cell.matroid
    support = p.support
    variables = tuple(sorted(support))
    datum = cell.datum.as_dict()
    equalities, stricts = [], []
    inconsistent = False
    for X, Y in exchange_pairs(p.ground, p.rank):
        I = datum[(X, Y)]
        diff = set(X) - set(Y)
        if not I <= diff:
            raise ValueError(f"initial datum at (X={X}, Y={Y}) not contained in X \\ Y")
        finite = frozenset(
            i for i in diff if basis_minus(X, i) in support and basis_plus(Y, i) in support
        )
        if not finite:
            if I != frozenset(diff):
                inconsistent = True
            continue
        if not I <= finite or len(I) < 2:
            inconsistent = True
            continue
        ordered = sorted(I)
        for i, j in zip(ordered, ordered[1:]):
            form = _difference_form(X, Y, i, j)
            if form:
                equalities.append(form)
        rep = ordered[0]
        for j in sorted(finite - I):
            form = _difference_form(X, Y, rep, j)
            if not form:
                inconsistent = True
            else:
                stricts.append(form)
    return LinearSystem(variables, equalities, stricts, inconsistent)


def lp_feasible_interior(system):
    """A rational point satisfying all equalities and strict inequalities, or None.

    Strictness is handled by maximizing a slack s <= 1 below every strict
    form; the system is feasible iff the optimum is positive.  The all-ones
    lineality direction is quotiented by pinning the first coordinate to 0.
    """
    if system.inconsistent:
        return None
    if not system.variables:
        return None
    index = {B: k for k, B in enumerate(system.variables)}
    nvars = len(system.variables) + 1  # trailing variable is the slack s
    s_var = nvars - 1
    equalities = []
    pinned = index[system.variables[0]]
    equalities.append(({pinned: Fraction(1)}, Fraction(0)))
    for form in system.equalities:
        equalities.append(({index[B]: Fraction(c) for B, c in form.items()}, Fraction(0)))
    inequalities = []
    for form in system.stricts:
        # form < 0 becomes -form - s >= 0
        coeffs = {index[B]: Fraction(-c) for B, c in form.items()}
        coeffs[s_var] = coeffs.get(s_var, Fraction(0)) - 1
        inequalities.append((coeffs, Fraction(0)))
    inequalities.append(({s_var: Fraction(-1)}, Fraction(-1)))  # s <= 1
    inequalities.append(({s_var: Fraction(1)}, Fraction(0)))  # s >= 0
    status, point = lp.solve_free_lp(nvars, equalities, inequalities, {s_var: Fraction(1)})
    if status == lp.UNBOUNDED:
        raise lp.SimplexError("slack-capped program cannot be unbounded")
    if status != lp.OPTIMAL or point[s_var] <= 0:
        return None
    return {B: point[index[B]] for B in system.variables}


def cell_of(phi):
    """The cell (underlying matroid, initial datum) containing phi."""
    if not is_tropical_plucker(phi):
        raise ValueError("input is not a tropical Plucker vector")
    return DressianCellId(underlying_matroid(phi), initial_datum(phi))


def closure_candidates(cell, universe):
    """Cells (p', I') with p specializing to p' and I pointwise inside I'."""
    return [
        other
        for other in universe
        if other != cell
        and specializes(cell.matroid, other.matroid)
        and cell.datum.contained_in(other.datum)
    ]


def _candidate_data(p):
    """All admissible initial data for a matroid p, as an iterator of dicts.

    Per pair the candidates are the subsets of size >= 2 of the exchange-
    active set; pairs with empty active set are forced to the full X \\ Y.
    """
    pairs = exchange_pairs(p.ground, p.rank)
    per_pair = []
    for X, Y in pairs:
        diff = [i for i in X if i not in Y]
        finite = [
            i
            for i in diff
            if basis_minus(X, i) in p.support and basis_plus(Y, i) in p.support
        ]
        if not finite:
            options = [frozenset(diff)]
        else:
            options = []
            for size in range(2, len(finite) + 1):
                options.extend(frozenset(c) for c in combinations(finite, size))
        per_pair.append(options)
    total = 1
    for options in per_pair:
        total *= len(options)
        if total > 10**7:
            raise ValueError("candidate initial data exceed the enumeration budget")
    for choice in product(*per_pair):
        yield dict(zip(pairs, choice))


def enumerate_dressian_cells(d, n, max_bases=20, matroids=None):
    """All nonempty cells C(p, I) for rank d on n elements, with witnesses.

    Nonemptiness is certified by exact LP feasibility; each returned cell
    carries one normalized interior witness point.
    """
    from .matroid import enumerate_matroids

    if matroids is None:
        matroids = enumerate_matroids(d, n, max_bases=max_bases)
    cells = []
    for p in matroids:
        for data in _candidate_data(p):
            datum = InitialDatum.from_dict(data)
            candidate = DressianCellId(p, datum)
            point = lp_feasible_interior(cell_system(candidate))
            if point is None:
                continue
            witness = normalize(TropicalVector(p.ground, d, point))
            cells.append(DressianCellId(p, datum, witness))
    cells.sort(key=lambda c: (tuple(sorted(c.matroid.support)), c.datum.entries))
    return cells


def closure_perturbation_feasible(cell, other):
    """Exact check that the witness of ``other`` is reachable from ``cell``.

    Pins the coordinates shared with supp(p') to the witness of (p', I'),
    relaxes the strict inequalities of C(p, I) to their closure, and asks
    whether the remaining coordinates can be pushed above any bound R.
    Reachability holds iff the program is feasible for every R.
    """
    if other.witness is None:
        raise ValueError("other cell carries no witness point")
    system = cell_system(cell)
    if system.inconsistent:
        return False
    pinned = {B: other.witness.value(B) for B in other.matroid.support}
    free = [B for B in system.variables if B not in pinned]
    if any(B not in system.variables for B in pinned):
        return False  # supports are not nested; not a closure candidate
    index = {B: k for k, B in enumerate(free)}
    r_var = len(free)
    nvars = len(free) + 1

    def split(form):
        coeffs, const = {}, Fraction(0)
        for B, c in form.items():
            if B in pinned:
                const += Fraction(c) * pinned[B]
            else:
                coeffs[index[B]] = coeffs.get(index[B], Fraction(0)) + Fraction(c)
        return coeffs, const

    equalities, inequalities = [], []
    for form in system.equalities:
        coeffs, const = split(form)
        if not coeffs and const != 0:
            return False
        if coeffs:
            equalities.append((coeffs, -const))
    for form in system.stricts:
        coeffs, const = split(form)  # closure: form <= 0
        if not coeffs:
            if const > 0:
                return False
            continue
        inequalities.append(({k: -v for k, v in coeffs.items()}, const))
    if not free:
        return True
    for B in free:
        inequalities.append(({index[B]: Fraction(1), r_var: Fraction(-1)}, Fraction(0)))
    status, _ = lp.solve_free_lp(nvars, equalities, inequalities, {r_var: Fraction(1)})
    return status == lp.UNBOUNDED
