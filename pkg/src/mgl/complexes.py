"""Finite posets, order complexes, f-vectors, and Euler characteristics."""

from dataclasses import dataclass


@dataclass(frozen=True)
class FinitePoset:
    """A finite poset over stable element ids 0..n-1.

    ``relation`` is a tuple of frozensets: relation[i] holds the ids j with
    i <= j.  Reflexivity, antisymmetry, and transitivity are validated on
    construction.
    """

    elements: tuple
    relation: tuple

    def __post_init__(self):
        n = len(self.elements)
        rel = tuple(frozenset(up) for up in self.relation)
        object.__setattr__(self, "relation", rel)
        if len(rel) != n:
            raise ValueError("relation size does not match element count")
        for i in range(n):
            if i not in rel[i]:
                raise ValueError(f"relation is not reflexive at {i}")
            for j in rel[i]:
                if j != i and i in rel[j]:
                    raise ValueError(f"relation is not antisymmetric at ({i}, {j})")
                for k in rel[j]:
                    if k not in rel[i]:
                        raise ValueError(f"relation is not transitive at ({i}, {j}, {k})")

    @classmethod
    def from_leq(cls, elements, leq):
        elements = tuple(elements)
        relation = tuple(
            frozenset(j for j, b in enumerate(elements) if leq(a, b))
            for a in elements
        )
        return cls(elements, relation)

    def leq(self, i, j):
        return j in self.relation[i]

    def __len__(self):
        return len(self.elements)

    def strictly_above(self, i):
        return sorted(j for j in self.relation[i] if j != i)

    def maxima(self):
        return [i for i in range(len(self.elements)) if self.relation[i] == frozenset({i})]


@dataclass(frozen=True)
class SimplicialComplex:
    """All faces of a finite simplicial complex, grouped nowhere: a flat tuple."""

    vertices: tuple
    faces: tuple  # nonempty faces as sorted tuples of vertex ids

    def dimension(self):
        return max(len(f) for f in self.faces) - 1 if self.faces else -1


def order_complex(poset, max_dim=None):
    """The nerve of a poset: simplices are the nonempty chains.

    ``max_dim`` caps the chain length (dimension) when materializing.
    """
    n = len(poset)
    cap = n if max_dim is None else max_dim + 1
    chains = []

    def extend(chain, last):
        if len(chain) >= cap:
            return
        for nxt in poset.strictly_above(last):
            chains.append(chain + (nxt,))
            extend(chain + (nxt,), nxt)

    for i in range(n):
        chains.append((i,))
        extend((i,), i)
    chains.sort(key=lambda c: (len(c), c))
    return SimplicialComplex(tuple(range(n)), tuple(chains))


def f_vector(K):
    """Face counts by dimension, starting at dimension 0."""
    counts = {}
    for f in K.faces:
        counts[len(f) - 1] = counts.get(len(f) - 1, 0) + 1
    if not counts:
        return []
    return [counts.get(d, 0) for d in range(max(counts) + 1)]


def euler_characteristic(K):
    """Alternating sum of the face counts."""
    return sum((-1) ** d * c for d, c in enumerate(f_vector(K)))


def good_cover_nerve_data(cell_poset):
    """The covering-by-open-stars nerve, which is the cell poset itself.

    Provided so the pipeline from enumerated cells to a nerve is one call.
    Accepts a ``FinitePoset`` (returned as is) or any object with
    ``elements`` and an element-wise ``leq``.
    """
    if isinstance(cell_poset, FinitePoset):
        return cell_poset
    return FinitePoset.from_leq(cell_poset.elements, cell_poset.leq)
