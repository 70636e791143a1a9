from fractions import Fraction

import pytest

from mgl.ground import GroundSet, enumerate_subsets, exchange_pairs
from mgl.matroid import uniform
from mgl.valuated import (
    DressianCellId,
    InitialDatum,
    MulValuation,
    TropicalVector,
    cell_of,
    cell_system,
    closure_candidates,
    closure_perturbation_feasible,
    enumerate_dressian_cells,
    initial_datum,
    is_tropical_plucker,
    lp_feasible_interior,
    normalize,
    underlying_matroid,
)

E4 = GroundSet.of_size(4)
F = Fraction


def const_vector(value=F(0)):
    return TropicalVector(E4, 2, {B: value for B in enumerate_subsets(E4, 2)})


def two_valued():
    vals = {B: F(0) for B in enumerate_subsets(E4, 2)}
    vals[(0, 1)] = F(1)
    vals[(2, 3)] = F(1)
    return TropicalVector(E4, 2, vals)


def test_initial_datum_all_ties():
    I = initial_datum(const_vector())
    for (X, Y), s in I.entries:
        assert s == frozenset(set(X) - set(Y))


def test_initial_datum_two_valued():
    I = initial_datum(two_valued())
    assert I[((0, 1, 2), (3,))] == frozenset({0, 1})


def test_initial_datum_drops_infinite_terms():
    vals = {B: F(0) for B in enumerate_subsets(E4, 2) if B != (0, 1)}
    phi = TropicalVector(E4, 2, vals)
    I = initial_datum(phi)
    # terms through the missing basis (0,1) never attain the minimum
    assert I[((0, 1, 2), (3,))] == frozenset({0, 1})


def test_is_tropical_plucker():
    assert is_tropical_plucker(const_vector())
    assert is_tropical_plucker(two_valued())
    vals = {B: F(0) for B in enumerate_subsets(E4, 2)}
    vals[(0, 1)] = F(-1)
    assert not is_tropical_plucker(TropicalVector(E4, 2, vals))


def test_underlying_matroid():
    assert underlying_matroid(const_vector()) == uniform(2, E4)
    vals = {B: F(0) for B in enumerate_subsets(E4, 2) if B != (0, 1)}
    assert len(underlying_matroid(TropicalVector(E4, 2, vals)).support) == 5


def test_normalize():
    assert normalize(const_vector(F(5))) == const_vector(F(0))
    phi = TropicalVector(GroundSet.of_size(3), 1, {(0,): F(3), (1,): F(7)})
    nphi = normalize(phi)
    assert nphi.values == {(0,): F(0), (1,): F(4)}
    assert normalize(nphi) == nphi


def test_normalize_multiplicative():
    phi = TropicalVector(
        GroundSet.of_size(2), 1, {(0,): MulValuation(F(3)), (1,): MulValuation(F(6))}
    )
    nphi = normalize(phi)
    assert nphi.values[(1,)] == MulValuation(F(1))
    assert nphi.values[(0,)] == MulValuation(F(1, 2))


def test_cell_system_uniform_all_ties():
    p = uniform(2, E4)
    I = initial_datum(const_vector())
    sys = cell_system(DressianCellId(p, I))
    assert not sys.inconsistent
    assert not sys.stricts
    # the three Plucker sums repeat across all 16 pairs; 2 independent ties
    distinct = {tuple(sorted(f.items())) for f in sys.equalities}
    assert len(distinct) >= 2
    point = lp_feasible_interior(sys)
    assert point is not None


def test_cell_system_generic_cone():
    p = uniform(2, E4)
    phi = two_valued()
    cell = cell_of(phi)
    sys = cell_system(cell)
    assert sys.stricts
    point = lp_feasible_interior(sys)
    assert point is not None
    witness = TropicalVector(E4, 2, point)
    assert cell_of(normalize(witness)) == cell


def test_cell_of_round_trip_and_translation_invariance():
    phi = two_valued()
    cell = cell_of(phi)
    assert cell.matroid == uniform(2, E4)
    shifted = TropicalVector(E4, 2, {B: v + F(7, 3) for B, v in phi.values.items()})
    assert cell_of(shifted) == cell
    assert cell_of(normalize(phi)) == cell


def test_lp_infeasible_contradictory_cell():
    p = uniform(2, E4)
    # argmin {0,1} at one disjoint pair but {1,2} at a pair sharing the sums
    base = initial_datum(two_valued()).as_dict()
    base[((0, 1, 2), (3,))] = frozenset({1, 2})
    base[((0, 1, 3), (2,))] = frozenset({0, 1})
    sys = cell_system(DressianCellId(p, InitialDatum.from_dict(base)))
    assert lp_feasible_interior(sys) is None


def test_enumerate_dressian_uniform_2_4():
    cells = enumerate_dressian_cells(2, 4)
    u = uniform(2, E4)
    ucells = [c for c in cells if c.matroid == u]
    assert len(ucells) == 4
    sizes = sorted(
        len(c.datum[((0, 1, 2), (3,))]) for c in ucells
    )
    assert sizes == [2, 2, 2, 3]
    for c in ucells:
        assert cell_of(c.witness) == DressianCellId(c.matroid, c.datum)


def test_enumerate_dressian_rank1():
    for n in (2, 3, 4):
        cells = enumerate_dressian_cells(1, n)
        # one cell per matroid: rank-1 initial data are forced by the support
        supports = [c.matroid.support for c in cells]
        assert len(supports) == len(set(supports))
        assert len(cells) == 2**n - 1


def test_round_trip_all_cells_2_4():
    for c in enumerate_dressian_cells(2, 4):
        assert cell_of(c.witness) == DressianCellId(c.matroid, c.datum)


def test_closure_candidates():
    cells = enumerate_dressian_cells(2, 4)
    u = uniform(2, E4)
    ucells = [c for c in cells if c.matroid == u]
    top = next(c for c in ucells if all(len(s) >= 2 for _, s in c.datum.entries)
               and len(c.datum[((0, 1, 2), (3,))]) == 3)
    generic = next(c for c in ucells if c is not top)
    cands = closure_candidates(generic, cells)
    assert top in cands
    assert generic not in cands
    assert closure_candidates(top, [c for c in cells if c.matroid == u]) == []


def test_closure_perturbation_small():
    cells = enumerate_dressian_cells(2, 4)
    u = uniform(2, E4)
    ucells = [c for c in cells if c.matroid == u]
    top = next(c for c in ucells if len(c.datum[((0, 1, 2), (3,))]) == 3)
    generic = next(c for c in ucells if c is not top)
    assert closure_perturbation_feasible(generic, top)
    assert not closure_perturbation_feasible(top, generic)


def test_plucker_implies_matroid_sampled():
    import random

    rng = random.Random(11)
    bases = enumerate_subsets(E4, 2)
    found = 0
    for _ in range(300):
        vals = {}
        for B in bases:
            r = rng.randrange(4)
            if r < 3:
                vals[B] = F(rng.randrange(-2, 3))
        if not vals:
            continue
        phi = TropicalVector(E4, 2, vals)
        if is_tropical_plucker(phi):
            found += 1
            underlying_matroid(phi)  # raises if the exchange condition fails
    assert found > 0
