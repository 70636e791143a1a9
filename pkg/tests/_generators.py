"""Shared test generators: valid oriented tropical vectors and injection families.

Vectors are manufactured from the enumerated oriented cells: each cell
supplies an LP-certified unsigned witness plus a compatible chirotope, and
the witness valuations are cleared to integers so the vector can be carried
in rational-modulus form (base 2).
"""

from fractions import Fraction
from math import lcm

from mgl.ground import GroundSet
from mgl.orval import OrientedTropicalVector, oriented_cell_poset
from mgl.sums_sliding import InjectionFamily, SimplexPoint, with_rational_modulus
from mgl.valuated import enumerate_dressian_cells

_cache = {}


def oriented_witnesses(d, n):
    """One valid rational-modulus vector per oriented cell of (d, n)."""
    key = (d, n)
    if key in _cache:
        return _cache[key]
    witnesses = {}
    for cell in enumerate_dressian_cells(d, n):
        witnesses[(cell.matroid.support, cell.datum)] = cell.witness
    out = []
    for ocell in oriented_cell_poset(d, n).elements:
        chi = ocell.om.rep
        w = witnesses[(chi.support(), ocell.datum)]
        scale = lcm(*(Fraction(v).denominator for v in w.values.values()), 1)
        values = {B: (chi.sign(B), Fraction(v) * scale) for B, v in w.values.items()}
        Phi = OrientedTropicalVector(w.ground, d, values)
        out.append(with_rational_modulus(Phi, 2))
    _cache[key] = out
    return out


def random_oriented_vector(rng, d, n):
    """A uniformly chosen cell witness, randomly negated and scaled."""
    from mgl.orval import scale_by_rational

    pool = oriented_witnesses(d, n)
    Phi = pool[rng.randrange(len(pool))]
    if rng.random() < 0.5:
        Phi = Phi.negate()
    num = rng.choice([1, 2, 3])
    den = rng.choice([1, 2, 3])
    return scale_by_rational(Phi, Fraction(num, den))


def random_injection_family(rng, n_source, n_maps):
    """Disjoint random injections from 0..n_source-1 into a shared codomain."""
    size = n_source * n_maps + rng.randrange(4)
    targets = rng.sample(range(size), n_source * n_maps)
    maps = []
    for k in range(n_maps):
        block = targets[k * n_source:(k + 1) * n_source]
        maps.append({i: block[i] for i in range(n_source)})
    return InjectionFamily.from_maps(maps, GroundSet.of_size(size))


def random_simplex_point(rng, n_weights):
    """A random rational point of the simplex, occasionally on its boundary."""
    raw = [Fraction(rng.randrange(0, 5)) for _ in range(n_weights)]
    if sum(raw) == 0:
        raw[rng.randrange(n_weights)] = Fraction(1)
    total = sum(raw)
    return SimplexPoint(tuple(x / total for x in raw))
