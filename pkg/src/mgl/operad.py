"""The operad of disjoint injective maps and its action by sliding.

The space assigned to a finite label set A is the simplicial complex whose
vertices are injections A x N -> N landing in a single piece of a fixed
partition of N, with simplices spanned by disjoint images; for |A| = 1 the
space is the single bijection (a, n) -> n.  All maps with infinite intended
domain carry an explicit finite window [0, W); lookups beyond a window are
simply undefined, and composition is computed lazily on the slots where
every lookup succeeds (``require_window`` turns missing slots into a loud
``WindowExhausted`` instead).

Composition is extended from vertices by the product distribution of
weights.  When the inner side carries a genuine convex combination in one
fiber while another fiber is nonempty, the product-distribution vertices
repeat values and fail the disjoint-images invariant; the construction is
only used (and only sound) outside that regime, and the combination
constructor re-validates rather than assumes disjointness.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .ground import GroundSet


def _first_primes(count):
    primes = []
    m = 2
    while len(primes) < count:
        if all(m % p for p in primes):
            primes.append(m)
        m += 1
    return primes


class Partition:
    """A partition of the naturals into infinitely many infinite pieces.

    The default sends each power p_i^k (k >= 1) of the i-th prime to piece
    i, and everything else (including 0 and 1) to piece 0.  A custom rule
    can be supplied as a function m -> piece index.
    """

    def __init__(self, piece_of=None):
        self._rule = piece_of
        self._primes = []

    def _prime(self, i):
        while len(self._primes) < i:
            self._primes = _first_primes(max(2 * len(self._primes), i))
        return self._primes[i - 1]

    def piece_of(self, m):
        if self._rule is not None:
            return self._rule(m)
        if m < 2:
            return 0
        base, y, d = None, m, 2
        while d * d <= y:
            if y % d == 0:
                base = d
                while y % d == 0:
                    y //= d
                break
            d += 1
        if base is None:
            base = m  # m is prime
        elif y != 1:
            return 0  # a second prime factor survives trial division
        i = 1
        while self._prime(i) < base:
            i += 1
        return i

    def elements(self, i, count):
        """The first ``count`` elements of piece i, ascending."""
        if self._rule is None and i >= 1:
            p = self._prime(i)
            return [p ** (k + 1) for k in range(count)]
        out, m = [], 0
        while len(out) < count:
            if self.piece_of(m) == i:
                out.append(m)
            m += 1
        return out


DEFAULT_PARTITION = Partition()


@dataclass(frozen=True)
class InjectionVertex:
    """A partial injective map labels x [0, window) -> N.

    ``entries`` lists ((label, n), value) pairs; slots not listed are
    undefined (window exhaustion).  Freshly built vertices are total; lazy
    composites may be partial.
    """

    labels: tuple
    window: int
    entries: tuple
    _map: dict = field(init=False, compare=False, repr=False, default=None)

    def __post_init__(self):
        entries = tuple(sorted(self.entries))
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "labels", tuple(self.labels))
        labels = set(self.labels)
        values = [v for _, v in entries]
        if len(set(values)) != len(values):
            raise ValueError("vertex map is not injective")
        slots = set()
        for (a, n), v in entries:
            if a not in labels or not 0 <= n < self.window:
                raise ValueError(f"slot ({a!r}, {n}) outside domain window")
            if (a, n) in slots:
                raise ValueError(f"slot ({a!r}, {n}) repeated")
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"value {v!r} is not a natural number")
            slots.add((a, n))
        object.__setattr__(self, "_map", dict(entries))

    def value(self, a, n):
        return self._map.get((a, n))

    def image(self):
        return frozenset(self._map.values())

    def is_total(self):
        return len(self.entries) == len(self.labels) * self.window

    def pieces(self, partition=DEFAULT_PARTITION):
        return frozenset(partition.piece_of(v) for v in self.image())


def unit_vertex(label, window):
    """The bijection (label, n) -> n, truncated to the window."""
    return InjectionVertex((label,), window, tuple(((label, n), n) for n in range(window)))


def piece_vertex(labels, window, piece, partition=DEFAULT_PARTITION, offset=0):
    """The order-preserving total vertex into the given partition piece.

    ``offset`` skips that many elements of the piece, so vertices with
    different offsets in the same piece have disjoint images.
    """
    labels = tuple(labels)
    slots = [(a, n) for a in labels for n in range(window)]
    values = partition.elements(piece, offset + len(slots))[offset:]
    return InjectionVertex(labels, window, tuple(zip(slots, values)))


def is_simplex(vertices):
    """True iff the vertices share a domain and have pairwise disjoint images."""
    vertices = list(vertices)
    for v in vertices[1:]:
        if v.labels != vertices[0].labels or v.window != vertices[0].window:
            raise ValueError("vertices live over different domains")
    for i, v in enumerate(vertices):
        for w in vertices[i + 1:]:
            if v.image() & w.image():
                return False
    return True


def cone_vertex(vertices, partition=DEFAULT_PARTITION, labels=(0,), window=1):
    """A vertex disjoint from every given one, into a fresh high piece.

    Every simplex of the span of ``vertices`` stays a simplex after adding
    the result: the order-preserving vertex into the first piece above all
    pieces in use (piece 1 when the list is empty, on the fallback domain
    given by ``labels`` and ``window``).
    """
    vertices = list(vertices)
    used = set()
    for v in vertices:
        used |= v.pieces(partition)
    M = max(max(used, default=0) + 1, 1)
    if vertices:
        labels, window = vertices[0].labels, vertices[0].window
    return piece_vertex(labels, window, M, partition)


@dataclass(frozen=True)
class ConvexCombination:
    """A point of the injection complex: weighted disjoint vertices.

    Weights are positive rationals summing to one; equal vertices are
    merged and terms are kept in a canonical sorted order, so equality of
    points is equality of dataclasses.
    """

    terms: tuple

    @classmethod
    def from_terms(cls, terms):
        merged = {}
        for w, v in terms:
            w = Fraction(w)
            if w < 0:
                raise ValueError("negative weight")
            if w == 0:
                continue
            merged[v] = merged.get(v, Fraction(0)) + w
        if not merged:
            raise ValueError("empty combination")
        if sum(merged.values()) != 1:
            raise ValueError("weights must sum to one")
        vertices = list(merged)
        if not is_simplex(vertices):
            raise ValueError("vertex images are not pairwise disjoint")
        return cls(tuple(sorted(((w, v) for v, w in merged.items()),
                                key=lambda t: t[1].entries)))

    @classmethod
    def point(cls, vertex):
        return cls.from_terms([(Fraction(1), vertex)])

    @property
    def labels(self):
        return self.terms[0][1].labels

    @property
    def window(self):
        return self.terms[0][1].window


def unit_point(label, window):
    """The unique point of the operad space on a single label."""
    return ConvexCombination.point(unit_vertex(label, window))


def empty_point(window):
    """The unique point on the empty label set."""
    return ConvexCombination.point(InjectionVertex((), window, ()))


class WindowExhausted(RuntimeError):
    """A composition needed a slot beyond a declared window."""


def vertex_relabel(vertex, sigma):
    """Rename the domain labels along a bijection ``sigma``."""
    labels = tuple(sorted((sigma[a] for a in vertex.labels), key=_label_key))
    return InjectionVertex(
        labels, vertex.window, tuple(((sigma[a], n), v) for (a, n), v in vertex.entries)
    )


def combination_relabel(comb, sigma):
    return ConvexCombination.from_terms(
        [(w, vertex_relabel(v, sigma)) for w, v in comb.terms]
    )


def _label_key(a):
    return (str(type(a)), a if isinstance(a, (int, str)) else str(a))


def operad_compose(gamma, pA, pFam=None, require_window=None):
    """Compose an outer point with per-fiber inner points along gamma: B -> A.

    Vertices compose as (b, n) -> alpha(gamma(b), beta_b(n)); combinations
    compose by the product distribution of weights.  Fibers of size one may
    be omitted from ``pFam`` (the unit is used), as may empty fibers.  The
    output window is the smallest inner window (the outer window when no
    inner point is supplied).  Slots whose lookups leave a window are
    dropped unless ``require_window`` is set, in which case an error names
    the window size that would be needed.
    """
    pFam = dict(pFam or {})
    A = pA.labels
    B = tuple(sorted(gamma, key=_label_key))
    if not set(gamma.values()) <= set(A):
        raise ValueError("gamma does not land in the outer label set")
    fibers = {a: tuple(b for b in B if gamma[b] == a) for a in A}
    provided = [p.window for p in pFam.values()]
    w_out = min(provided) if provided else pA.window
    if require_window is not None and require_window > w_out:
        raise WindowExhausted(
            f"inner points need window >= {require_window}, have {w_out}"
        )
    fam = {}
    for a in A:
        if a in pFam:
            if pFam[a].labels != fibers[a]:
                raise ValueError(f"inner point at {a!r} has the wrong fiber domain")
            fam[a] = pFam[a]
        elif len(fibers[a]) == 0:
            fam[a] = empty_point(w_out)
        elif len(fibers[a]) == 1:
            fam[a] = unit_point(fibers[a][0], w_out)
        else:
            raise ValueError(f"missing inner point for fiber of {a!r}")
    order = list(A)
    out_terms = []
    for choice in product(pA.terms, *(fam[a].terms for a in order)):
        (wA, alpha), inner = choice[0], choice[1:]
        weight = wA
        beta_of = {}
        for a, (w, beta) in zip(order, inner):
            weight *= w
            beta_of[a] = beta
        entries = []
        for b in B:
            a = gamma[b]
            beta = beta_of[a]
            for n in range(w_out):
                v1 = beta.value(b, n)
                if v1 is None:
                    if require_window is not None and n < require_window:
                        raise WindowExhausted(
                            f"inner point at {a!r} needs window >= {require_window}"
                        )
                    continue
                v2 = alpha.value(a, v1)
                if v2 is None:
                    if require_window is not None and n < require_window:
                        raise WindowExhausted(
                            f"outer point needs window >= {v1 + 1} at label {a!r}"
                        )
                    continue
                entries.append(((b, n), v2))
        out_terms.append((weight, InjectionVertex(B, w_out, tuple(entries))))
    return ConvexCombination.from_terms(out_terms)


def operad_act(pA, inputs):
    """Act on a family of signed tropical vectors: direct sum, then slide.

    ``inputs`` maps each label to a rational-modulus vector whose ground
    set is a window of the naturals; the output lives on the union of the
    images of the point's vertices.  The output rank is the sum of the
    input ranks.
    """
    from .sums_sliding import InjectionFamily, SimplexPoint, direct_sum, slide

    order = list(pA.labels)
    if set(inputs) != set(order):
        raise ValueError("inputs do not match the point's labels")
    slots = [(a, g) for a in order for g in inputs[a].ground]
    total = inputs[order[0]]
    for a in order[1:]:
        total = direct_sum(total, inputs[a])
    weights, maps = [], []
    for w, vertex in pA.terms:
        alpha = {}
        # the direct sum leaves a single summand's ground untouched and
        # relabels several consecutively, matching the slot enumeration
        for flat, (a, g) in zip(total.ground, slots):
            v = vertex.value(a, g)
            if v is None:
                raise WindowExhausted(
                    f"point needs window >= {g + 1} at label {a!r} to act on this input"
                )
            alpha[flat] = v
        weights.append(w)
        maps.append(alpha)
    used = sorted({v for alpha in maps for v in alpha.values()})
    family = InjectionFamily.from_maps(maps, GroundSet(tuple(used)))
    return slide(total, family, SimplexPoint(tuple(weights)))


def _sample_points(labels, window, allow_combination, partition=DEFAULT_PARTITION):
    """Deterministic sample points over a label set.

    Singleton and empty domains have a unique point.  Larger domains get a
    vertex point and, when the caller is in the regime where combinations
    compose soundly, a two-term combination.
    """
    labels = tuple(labels)
    if len(labels) == 0:
        return [empty_point(window)]
    if len(labels) == 1:
        return [unit_point(labels[0], window)]
    v0 = piece_vertex(labels, window, 0, partition)
    points = [ConvexCombination.point(v0)]
    if allow_combination:
        v1 = piece_vertex(labels, window, 1, partition)
        points.append(
            ConvexCombination.from_terms([(Fraction(1, 2), v0), (Fraction(1, 2), v1)])
        )
    return points


def _functions(src, dst):
    for values in product(dst, repeat=len(src)):
        yield dict(zip(src, values))


def _fiber_preserving_permutations(gamma, B):
    from itertools import permutations

    for perm in permutations(B):
        sigma = dict(zip(B, perm))
        if all(gamma[sigma[b]] == gamma[b] for b in B):
            yield sigma


def check_operad_laws(max_size=3, windows=(1, 7, 20), partition=DEFAULT_PARTITION):
    """Exhaustively verify the unit, associativity, and equivariance laws.

    All maps between label sets of size up to ``max_size`` are checked,
    with deterministic sample points over the three window sizes (bottom,
    middle, top); combinations appear on the inner side only over singleton
    outer sets, where the product-distribution extension is sound.  Returns
    a report dict with the number of checks and the list of violations.
    """
    w0, w1, w2 = windows
    checks, violations = 0, []

    def note(kind, detail):
        violations.append(f"{kind}: {detail}")

    sizes = range(1, max_size + 1)
    # unit laws, on points with values small enough to stay inside windows
    for nA in sizes:
        A = tuple(range(nA))
        ident = {a: a for a in A}
        star = {a: "*" for a in A}
        for x in _sample_points(A, 2, allow_combination=True, partition=partition):
            checks += 1
            if operad_compose(ident, x) != x:
                note("unit", f"id* on |A|={nA} changed the point")
        # pi* needs the inner point's values inside the unit's window, so
        # sample at window 1 where both pieces stay below 20
        for x in _sample_points(A, 1, allow_combination=True, partition=partition):
            checks += 1
            out = operad_compose(star, unit_point("*", w2), {"*": x})
            if out != x:
                note("unit", f"pi* on |A|={nA} changed the point")
    # associativity over all chains C -> B -> A
    for nA in sizes:
        A = tuple(range(nA))
        for nB in sizes:
            B = tuple(range(nB))
            for nC in sizes:
                C = tuple(range(nC))
                for gamma in _functions(B, A):
                    fibA = {a: tuple(b for b in B if gamma[b] == a) for a in A}
                    ys = {
                        a: _sample_points(
                            fibA[a], w1, allow_combination=(nA == 1), partition=partition
                        )[-1]
                        for a in A
                    }
                    for tau in _functions(C, B):
                        fibB = {b: tuple(c for c in C if tau[c] == b) for b in B}
                        zs = {
                            b: _sample_points(
                                fibB[b], w0, allow_combination=(nB == 1),
                                partition=partition,
                            )[-1]
                            for b in B
                        }
                        for x in _sample_points(
                            A, w2, allow_combination=True, partition=partition
                        ):
                            checks += 1
                            mid = operad_compose(gamma, x, ys)
                            lhs = operad_compose(tau, mid, zs)
                            gt = {c: gamma[tau[c]] for c in C}
                            inner = {}
                            for a in A:
                                tau_a = {c: tau[c] for c in C if gamma[tau[c]] == a}
                                inner[a] = operad_compose(
                                    tau_a, ys[a], {b: zs[b] for b in fibA[a]}
                                )
                            rhs = operad_compose(gt, x, inner)
                            if lhs != rhs:
                                note(
                                    "associativity",
                                    f"|A|={nA} |B|={nB} |C|={nC} gamma={gamma} tau={tau}",
                                )
    # equivariance under fiber-preserving permutations
    for nA in sizes:
        A = tuple(range(nA))
        for nB in sizes:
            B = tuple(range(nB))
            for gamma in _functions(B, A):
                fibA = {a: tuple(b for b in B if gamma[b] == a) for a in A}
                ys = {
                    a: _sample_points(
                        fibA[a], w1, allow_combination=(nA == 1), partition=partition
                    )[-1]
                    for a in A
                }
                for x in _sample_points(A, w2, allow_combination=True, partition=partition):
                    base = operad_compose(gamma, x, ys)
                    for sigma in _fiber_preserving_permutations(gamma, B):
                        checks += 1
                        inv = {v: k for k, v in sigma.items()}
                        moved = {
                            a: combination_relabel(
                                ys[a], {b: inv[b] for b in fibA[a]}
                            )
                            for a in A
                        }
                        # moved[a] lives over the fiber again after renaming
                        lhs = operad_compose(gamma, x, moved)
                        rhs = combination_relabel(base, inv)
                        if lhs != rhs:
                            note(
                                "equivariance",
                                f"|A|={nA} |B|={nB} gamma={gamma} sigma={sigma}",
                            )
    return {"checks": checks, "violations": violations}


def _random_rank1(rng, n):
    from .orval import OrientedTropicalVector

    while True:
        rationals = {}
        for i in range(n):
            if rng.random() < 0.7:
                num = rng.choice([-2, -1, 1, 2])
                den = rng.choice([1, 2])
                rationals[(i,)] = Fraction(num, den)
        if rationals:
            return OrientedTropicalVector.from_rationals(GroundSet.of_size(n), 1, rationals)


def _random_input(rng):
    """A rank-1 or rank-2 vector on a small window of the naturals."""
    from .sums_sliding import direct_sum

    if rng.random() < 0.5:
        return _random_rank1(rng, rng.choice([2, 3]))
    return direct_sum(_random_rank1(rng, 2), _random_rank1(rng, rng.choice([1, 2])))


def _proportional(u, v):
    """True iff two signed value maps agree up to one global nonzero scale."""
    if set(u) != set(v):
        return False
    ratio = None
    for B in u:
        su, mu = u[B][0], u[B][1].modulus
        sv, mv = v[B][0], v[B][1].modulus
        r = (su * sv, mu / mv)
        if ratio is None:
            ratio = r
        elif ratio != r:
            return False
    return True


def check_action_compatibility(seed=0, trials=40, partition=DEFAULT_PARTITION):
    """Sampled verification that acting commutes with operad composition.

    For random gamma: B -> A with |A| <= 2, random operad points, and
    random rank-1/rank-2 inputs: acting by the composite point equals
    composing the per-fiber actions, up to one global nonzero rational
    scale (the projective quotient).  Returns a report dict.
    """
    import random

    rng = random.Random(seed)
    checks, violations = 0, []
    for _ in range(trials):
        nA = rng.choice([1, 2])
        nB = rng.choice([1, 2, 3])
        A = tuple(range(nA))
        B = tuple(range(nB))
        gamma = {b: rng.choice(A) for b in B}
        fibers = {a: tuple(b for b in B if gamma[b] == a) for a in A}
        if nA == 1:
            pA = unit_point(0, 64)
        else:
            v0 = piece_vertex(A, 64, 0, partition)
            v1 = piece_vertex(A, 64, 1, partition)
            w = Fraction(rng.randrange(1, 4), 4)
            pA = ConvexCombination.from_terms([(w, v0), (1 - w, v1)])
        # inner vertices stay in the low end of piece 0 (offsets keep them
        # disjoint) so that the outer point's window covers their values
        pFam = {}
        for a in A:
            fib = fibers[a]
            if len(fib) == 0:
                pFam[a] = empty_point(4)
            elif len(fib) == 1:
                pFam[a] = unit_point(fib[0], 4)
            elif nA == 1:
                u0 = piece_vertex(fib, 4, 0, partition, offset=0)
                u1 = piece_vertex(fib, 4, 0, partition, offset=12)
                w = Fraction(rng.randrange(1, 3), 3)
                pFam[a] = ConvexCombination.from_terms([(w, u0), (1 - w, u1)])
            else:
                pFam[a] = ConvexCombination.point(
                    piece_vertex(fib, 4, 0, partition, offset=rng.choice([0, 12]))
                )
        inputs = {b: _random_input(rng) for b in B}
        checks += 1
        composite = operad_compose(gamma, pA, pFam)
        lhs = operad_act(composite, inputs)
        inner = {
            a: operad_act(pFam[a], {b: inputs[b] for b in fibers[a]})
            if fibers[a]
            else None
            for a in A
        }
        if any(v is None for v in inner.values()):
            # empty fibers contribute the rank-zero unit
            from .sums_sliding import rank_zero_unit

            for a in A:
                if inner[a] is None:
                    inner[a] = rank_zero_unit()
        rhs = operad_act(pA, inner)
        if lhs.rank != rhs.rank or not _proportional(lhs.values, rhs.values):
            violations.append(f"gamma={gamma} seed-state mismatch")
    return {"checks": checks, "violations": violations}
