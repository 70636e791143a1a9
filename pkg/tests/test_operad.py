import random
from fractions import Fraction
from itertools import permutations

import pytest

from mgl.ground import GroundSet
from mgl.operad import (
    ConvexCombination,
    DEFAULT_PARTITION,
    InjectionVertex,
    Partition,
    WindowExhausted,
    check_action_compatibility,
    check_operad_laws,
    cone_vertex,
    empty_point,
    is_simplex,
    operad_act,
    operad_compose,
    piece_vertex,
    unit_point,
    unit_vertex,
    vertex_relabel,
)
from mgl.orval import OrientedTropicalVector, is_oriented_tropical_plucker
from mgl.sums_sliding import direct_sum, pushforward

F = Fraction


def rank1(*signed):
    ground = GroundSet.of_size(len(signed))
    return OrientedTropicalVector.from_rationals(
        ground, 1, {(i,): F(s) for i, s in enumerate(signed) if s != 0}
    )


def test_default_partition_pieces():
    p = DEFAULT_PARTITION
    assert [p.piece_of(m) for m in (0, 1, 6, 10, 12)] == [0] * 5
    assert [p.piece_of(m) for m in (2, 4, 8, 1024)] == [1] * 4
    assert [p.piece_of(m) for m in (3, 9, 27)] == [2] * 3
    assert p.piece_of(25) == 3 and p.piece_of(49) == 4
    assert p.elements(1, 5) == [2, 4, 8, 16, 32]
    assert p.elements(0, 5) == [0, 1, 6, 10, 12]
    # pieces partition an initial segment
    for m in range(200):
        i = p.piece_of(m)
        assert m in p.elements(i, 200)


def test_custom_partition_rule():
    p = Partition(piece_of=lambda m: m % 3)
    assert p.elements(1, 3) == [1, 4, 7]
    assert p.piece_of(8) == 2


def test_vertex_validation():
    with pytest.raises(ValueError):
        InjectionVertex((0,), 2, (((0, 0), 5), ((0, 1), 5)))
    with pytest.raises(ValueError):
        InjectionVertex((0,), 1, (((0, 1), 5),))
    with pytest.raises(ValueError):
        InjectionVertex((0,), 1, (((1, 0), 5),))
    v = unit_vertex("a", 3)
    assert v.is_total() and v.value("a", 2) == 2 and v.value("a", 3) is None


def test_piece_vertex_is_total_single_piece():
    v = piece_vertex((0, 1), 3, 2)
    assert v.is_total()
    assert v.pieces() == frozenset({2})
    # order-preserving enumeration of the powers of three
    assert [v.value(0, n) for n in range(3)] == [3, 9, 27]
    assert [v.value(1, n) for n in range(3)] == [81, 243, 729]


def test_is_simplex():
    a = piece_vertex((0,), 2, 1)
    b = piece_vertex((0,), 2, 2)
    assert is_simplex([a, b])
    assert not is_simplex([a, a])
    blocks = [piece_vertex((0,), 2, 1, offset=2 * k) for k in range(3)]
    assert is_simplex(blocks)
    with pytest.raises(ValueError):
        is_simplex([a, piece_vertex((1,), 2, 2)])


def test_cone_vertex():
    K = [piece_vertex((0, 1), 2, 1), piece_vertex((0, 1), 2, 2)]
    beta = cone_vertex(K)
    assert beta.pieces() == frozenset({3})
    assert is_simplex(K + [beta])
    empty = cone_vertex([], labels=("x",), window=2)
    assert empty.pieces() == frozenset({1})
    rng = random.Random(11)
    for _ in range(10):
        K = [
            piece_vertex((0, 1), 2, rng.randrange(0, 4), offset=rng.randrange(0, 6))
            for _ in range(rng.randrange(1, 4))
        ]
        beta = cone_vertex(K)
        assert all(not (beta.image() & v.image()) for v in K)


def test_combination_validation_and_merge():
    v = piece_vertex((0, 1), 2, 1)
    w = piece_vertex((0, 1), 2, 2)
    comb = ConvexCombination.from_terms([(F(1, 4), v), (F(1, 4), v), (F(1, 2), w)])
    assert comb.terms == ((F(1, 2), v), (F(1, 2), w))
    overlapping = piece_vertex((0, 1), 2, 1, offset=1)
    with pytest.raises(ValueError):
        ConvexCombination.from_terms([(F(1, 2), v), (F(1, 2), overlapping)])
    with pytest.raises(ValueError):
        ConvexCombination.from_terms([(F(1, 3), v), (F(1, 3), w)])


def test_compose_identity_and_projection_units():
    A = (0, 1)
    v0 = piece_vertex(A, 2, 0)
    v1 = piece_vertex(A, 2, 1)
    x = ConvexCombination.from_terms([(F(1, 2), v0), (F(1, 2), v1)])
    ident = {a: a for a in A}
    assert operad_compose(ident, x) == x
    star = {a: "*" for a in A}
    small = ConvexCombination.from_terms(
        [(F(1, 2), piece_vertex(A, 1, 0)), (F(1, 2), piece_vertex(A, 1, 1))]
    )
    assert operad_compose(star, unit_point("*", 20), {"*": small}) == small


def test_compose_product_distribution_weights():
    # two-vertex outer point, vertex inner point: two-term output, same weights
    A = ("a",)
    # |A| = 1 admits only the unit upstairs; use |A| = 2 with one empty fiber
    A = (0, 1)
    gamma = {10: 0, 11: 0}
    x = ConvexCombination.from_terms(
        [(F(1, 2), piece_vertex(A, 20, 1)), (F(1, 2), piece_vertex(A, 20, 2))]
    )
    inner = ConvexCombination.point(piece_vertex((10, 11), 2, 0))
    out = operad_compose(gamma, x, {0: inner, 1: empty_point(2)})
    assert len(out.terms) == 2
    assert [w for w, _ in out.terms] == [F(1, 2), F(1, 2)]


def test_compose_merges_identical_composites():
    # both outer vertices miss every looked-up slot, so both composites are
    # the empty partial vertex and merge into a single full-weight term
    A = (0, 1)
    x = ConvexCombination.from_terms(
        [(F(1, 2), piece_vertex(A, 1, 1)), (F(1, 2), piece_vertex(A, 1, 2))]
    )
    big = ConvexCombination.point(piece_vertex((5,), 1, 3))  # value 5 >= window 1
    out = operad_compose({5: 0}, x, {0: big, 1: empty_point(1)})
    assert len(out.terms) == 1
    assert out.terms[0][0] == F(1)
    assert out.terms[0][1].entries == ()


def test_compose_window_exhaustion_error():
    x = unit_point(0, 2)
    big = ConvexCombination.point(piece_vertex((5,), 2, 1))  # values 2, 4
    with pytest.raises(WindowExhausted):
        operad_compose({5: 0}, x, {0: big}, require_window=2)
    # lazily, the out-of-window slot is simply dropped
    out = operad_compose({5: 0}, x, {0: big})
    assert out.terms[0][1].entries == (((5, 0), 0),) or out.terms[0][1].entries == ()


def test_relabel_action_is_free():
    v = piece_vertex((0, 1, 2), 2, 1)
    images = {vertex_relabel(v, dict(zip((0, 1, 2), perm)))
              for perm in permutations((0, 1, 2))}
    assert len(images) == 6


def test_check_operad_laws_small():
    report = check_operad_laws(max_size=2, windows=(1, 5, 20))
    assert report["violations"] == []
    assert report["checks"] > 50


def test_act_unit_is_identity():
    Phi = rank1(1, -2)
    assert operad_act(unit_point(0, 5), {0: Phi}) == Phi


def test_act_vertex_is_pushforward_of_direct_sum():
    Phi0 = rank1(1, -1)
    Phi1 = rank1(2)
    alpha = piece_vertex((0, 1), 2, 1)  # values 2,4 then 8,16
    out = operad_act(ConvexCombination.point(alpha), {0: Phi0, 1: Phi1})
    total = direct_sum(Phi0, Phi1)
    expected = pushforward(total, {0: 2, 1: 4, 2: 8}, GroundSet((2, 4, 8)))
    assert out.rank == 2
    assert out == expected


def test_act_rank_bookkeeping_and_validity():
    Phi0 = rank1(1, -1)
    Phi1 = direct_sum(rank1(1, 2), rank1(-1))
    alpha = piece_vertex((0, 1), 3, 1)
    beta = piece_vertex((0, 1), 3, 2)
    pA = ConvexCombination.from_terms([(F(1, 3), alpha), (F(2, 3), beta)])
    out = operad_act(pA, {0: Phi0, 1: Phi1})
    assert out.rank == 3
    assert is_oriented_tropical_plucker(out)


def test_act_window_exhaustion():
    Phi = rank1(1, 1, 1)  # ground {0,1,2} needs window >= 3
    with pytest.raises(WindowExhausted):
        operad_act(unit_point(0, 2), {0: Phi})


def test_check_action_compatibility_sampled():
    report = check_action_compatibility(seed=3, trials=10)
    assert report["violations"] == []
    assert report["checks"] == 10
