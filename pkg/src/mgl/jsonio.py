"""JSON serialization for ground sets, vectors, cells, posets, and points.

Rationals travel as exact "p/q" strings (tropical infinity as "inf"), so no
precision is lost on a round trip.  Signed coordinates use either an
additive valuation ({"sign": 1, "val": "3/2"}) or a rational import
({"sign": -1, "q": "-7/4"}), the latter carrying the multiplicative modulus
|q| with the sign of q.
"""

import json
from fractions import Fraction

from .ground import GroundSet, enumerate_subsets
from .matroid import MatroidVector
from .complexes import FinitePoset, SimplicialComplex, euler_characteristic, f_vector
from .oriented import Chirotope
from .orval import OrientedTropicalVector
from .valuated import MulValuation, TropicalVector


class FormatError(ValueError):
    """Malformed or inconsistent JSON input."""


def frac_to_str(x):
    return str(Fraction(x))


def frac_from_str(s):
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational: {s!r}") from exc


def ground_to_json(ground):
    labels = tuple(ground)
    if labels == tuple(range(len(labels))):
        return {"n": len(labels)}
    return {"labels": list(labels)}


def ground_from_json(obj):
    if not isinstance(obj, dict):
        raise FormatError("ground set must be an object with 'n' or 'labels'")
    if "n" in obj:
        return GroundSet.of_size(int(obj["n"]))
    if "labels" in obj:
        return GroundSet(tuple(obj["labels"]))
    raise FormatError("ground set needs 'n' or 'labels'")


def matroid_to_json(p):
    return {
        "kind": "matroid",
        "d": p.rank,
        "n": len(p.ground),
        "support": [list(B) for B in p.sorted_support()],
    }


def matroid_from_json(obj):
    try:
        ground = GroundSet.of_size(int(obj["n"]))
        support = frozenset(tuple(B) for B in obj["support"])
        return MatroidVector(ground, int(obj["d"]), support)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed matroid JSON: {exc}") from exc


def tropical_to_json(phi):
    values = []
    for B in sorted(phi.values):
        values.append({"B": list(B), "val": frac_to_str(phi.values[B])})
    return {
        "kind": "tropical",
        "d": phi.rank,
        "ground": ground_to_json(phi.ground),
        "values": values,
    }


def tropical_from_json(obj):
    try:
        ground = ground_from_json(obj["ground"])
        values = {}
        for entry in obj["values"]:
            if entry.get("val") == "inf":
                continue
            values[tuple(entry["B"])] = frac_from_str(entry["val"])
        return TropicalVector(ground, int(obj["d"]), values)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed tropical JSON: {exc}") from exc


def chirotope_to_json(chi):
    ground, rank = chi.ground, chi.rank
    signs = [chi.sign(B) for B in enumerate_subsets(ground, rank)]
    return {
        "kind": "chirotope",
        "d": rank,
        "ground": ground_to_json(ground),
        "signs": signs,
    }


def chirotope_from_json(obj):
    try:
        ground = ground_from_json(obj["ground"])
        rank = int(obj["d"])
        bases = enumerate_subsets(ground, rank)
        signs = list(obj["signs"])
        if len(signs) != len(bases):
            raise FormatError(
                f"expected {len(bases)} signs in lexicographic basis order, "
                f"got {len(signs)}"
            )
        if any(s not in (-1, 0, 1) for s in signs):
            raise FormatError("signs must lie in {-1, 0, 1}")
        return Chirotope.from_dict(
            ground, rank, {B: s for B, s in zip(bases, signs) if s != 0}
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed chirotope JSON: {exc}") from exc


def orval_to_json(Phi):
    values = []
    for B in sorted(Phi.values):
        s, v = Phi.values[B]
        if isinstance(v, MulValuation):
            values.append({"B": list(B), "sign": s, "q": frac_to_str(s * v.modulus)})
        else:
            values.append({"B": list(B), "sign": s, "val": frac_to_str(v)})
    return {
        "kind": "orval",
        "d": Phi.rank,
        "ground": ground_to_json(Phi.ground),
        "values": values,
    }


def orval_from_json(obj):
    try:
        ground = ground_from_json(obj["ground"])
        values = {}
        for entry in obj["values"]:
            B = tuple(entry["B"])
            if "q" in entry:
                q = frac_from_str(entry["q"])
                if q == 0:
                    continue
                sign = 1 if q > 0 else -1
                if "sign" in entry and int(entry["sign"]) != sign:
                    raise FormatError(f"sign contradicts q at basis {B}")
                values[B] = (sign, MulValuation(abs(q)))
            else:
                sign = int(entry["sign"])
                if sign not in (-1, 1):
                    raise FormatError(f"sign must be +-1 at basis {B}")
                values[B] = (sign, frac_from_str(entry["val"]))
        return OrientedTropicalVector(ground, int(obj["d"]), values)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed orval JSON: {exc}") from exc


def datum_to_json(datum):
    return [
        {"X": list(X), "Y": list(Y), "I": sorted(s)} for (X, Y), s in datum.entries
    ]


def dressian_cell_to_json(cell):
    out = {
        "matroid": matroid_to_json(cell.matroid),
        "initial_datum": datum_to_json(cell.datum),
    }
    if cell.witness is not None:
        out["witness"] = tropical_to_json(cell.witness)
    return out


def oriented_cell_to_json(cell):
    return {
        "chirotope": chirotope_to_json(cell.om.rep),
        "initial_datum": datum_to_json(cell.datum),
    }


def poset_to_json(poset, labels=None):
    if labels is None:
        labels = [repr(e) for e in poset.elements]
    return {
        "kind": "poset",
        "elements": list(labels),
        "relation": [sorted(up) for up in poset.relation],
    }


def poset_from_json(obj):
    try:
        return FinitePoset(
            tuple(obj["elements"]), tuple(frozenset(up) for up in obj["relation"])
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed poset JSON: {exc}") from exc


def complex_to_json(K):
    return {
        "kind": "complex",
        "vertices": list(K.vertices),
        "faces": [list(f) for f in K.faces],
        "f_vector": f_vector(K),
        "euler": euler_characteristic(K),
    }


def complex_from_json(obj):
    try:
        return SimplicialComplex(
            tuple(obj["vertices"]), tuple(tuple(f) for f in obj["faces"])
        )
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed complex JSON: {exc}") from exc


def family_from_json(obj):
    """An injection family from [{"map": {"0": 5, ...}}, ...].

    Sources are JSON object keys, hence strings; they are read as integers.
    An optional wrapper {"maps": [...], "codomain": {...}} fixes the
    codomain; otherwise it is the smallest initial window containing every
    target.
    """
    from .sums_sliding import InjectionFamily

    try:
        if isinstance(obj, dict):
            entries, cod = obj["maps"], ground_from_json(obj["codomain"])
        else:
            entries, cod = obj, None
        maps = [{int(k): int(v) for k, v in e["map"].items()} for e in entries]
        if cod is None:
            top = max((v for m in maps for v in m.values()), default=-1)
            cod = GroundSet.of_size(top + 1)
        return InjectionFamily.from_maps(maps, cod)
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed family JSON: {exc}") from exc


def family_to_json(family):
    return {
        "maps": [{"map": {str(k): v for k, v in family.map(i).items()}}
                 for i in range(len(family))],
        "codomain": ground_to_json(family.codomain),
    }


def operad_point_to_json(point):
    return {
        "kind": "operad-point",
        "labels": list(point.labels),
        "window": point.window,
        "terms": [
            {
                "weight": frac_to_str(w),
                "entries": [[[a, n], val] for (a, n), val in v.entries],
            }
            for w, v in point.terms
        ],
    }


def operad_point_from_json(obj):
    from .operad import ConvexCombination, InjectionVertex

    try:
        labels = tuple(obj["labels"])
        window = int(obj["window"])
        terms = []
        for term in obj["terms"]:
            entries = tuple(
                ((slot[0], int(slot[1])), int(val)) for slot, val in term["entries"]
            )
            terms.append(
                (frac_from_str(term["weight"]), InjectionVertex(labels, window, entries))
            )
        return ConvexCombination.from_terms(terms)
    except (KeyError, TypeError, IndexError) as exc:
        raise FormatError(f"malformed operad point JSON: {exc}") from exc


def load(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"malformed JSON in {path}: {exc}") from exc


def dump(obj, path=None):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path is None:
        return text
    with open(path, "w") as fh:
        fh.write(text)
    return text
