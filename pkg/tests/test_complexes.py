from itertools import combinations

import pytest

from mgl.complexes import (
    FinitePoset,
    euler_characteristic,
    f_vector,
    good_cover_nerve_data,
    order_complex,
)
from mgl.oriented import enumerate_oriented_matroids


def chain_poset(n):
    return FinitePoset.from_leq(tuple(range(n)), lambda a, b: a <= b)


def test_poset_axioms_enforced():
    with pytest.raises(ValueError):
        FinitePoset((0, 1), (frozenset({1}), frozenset({1})))  # not reflexive at 0
    with pytest.raises(ValueError):
        FinitePoset((0, 1), (frozenset({0, 1}), frozenset({0, 1})))  # not antisymmetric
    with pytest.raises(ValueError):
        FinitePoset(
            (0, 1, 2),
            (frozenset({0, 1}), frozenset({1, 2}), frozenset({2})),
        )  # 0<=1<=2 but not 0<=2


def test_from_leq_chain():
    P = chain_poset(3)
    assert P.leq(0, 2)
    assert not P.leq(2, 0)
    assert P.maxima() == [2]


def test_order_complex_chain_is_simplex():
    # chains of a total order on n elements = nonempty subsets
    for n in (1, 2, 3, 4):
        K = order_complex(chain_poset(n))
        assert len(K.faces) == 2**n - 1
        assert euler_characteristic(K) == 1


def test_order_complex_antichain():
    P = FinitePoset.from_leq((0, 1, 2), lambda a, b: a == b)
    K = order_complex(P)
    assert f_vector(K) == [3]
    assert euler_characteristic(K) == 3


def test_order_complex_hexagon():
    # face poset of the boundary of a triangle: 3 vertices and 3 edges,
    # ordered by inclusion; its order complex is a hexagon (a circle)
    faces = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)]
    P = FinitePoset.from_leq(faces, lambda a, b: set(a) <= set(b))
    K = order_complex(P)
    assert f_vector(K) == [6, 6]
    assert euler_characteristic(K) == 0


def test_order_complex_max_dim_cap():
    K = order_complex(chain_poset(4), max_dim=1)
    assert K.dimension() == 1
    assert f_vector(K) == [4, 6]


def test_cone_euler_characteristic_one():
    # any poset with a maximum element has a contractible order complex
    faces = [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]
    P = FinitePoset.from_leq(faces, lambda a, b: set(a) <= set(b))
    assert euler_characteristic(order_complex(P)) == 1


def test_macp_1_3_nerve():
    poset = enumerate_oriented_matroids(1, 3).to_finite_poset()
    K = order_complex(good_cover_nerve_data(poset))
    assert f_vector(K) == [13, 36, 24]
    assert euler_characteristic(K) == 1


def test_macp_1_3_nerve_chain_oracle():
    # independent oracle: count chains by brute force over subsets
    poset = enumerate_oriented_matroids(1, 3).to_finite_poset()
    n = len(poset)
    counts = {}
    for size in (1, 2, 3):
        total = 0
        for sub in combinations(range(n), size):
            if all(
                poset.leq(a, b) or poset.leq(b, a)
                for a, b in combinations(sub, 2)
            ):
                total += 1
        counts[size - 1] = total
    K = order_complex(poset)
    assert f_vector(K) == [counts[0], counts[1], counts[2]]
