"""Command-line front end: validation, enumeration, cells, sliding, operad.

Exit codes: 0 success/verified, 1 validation failure or property violation,
2 usage error (bad flags, malformed JSON, scale guard).  Progress goes to
standard error; artifacts go to files or standard output.  Randomized
commands embed their seed and trial count in the output header for replay.
"""

import argparse
import logging
import sys
from fractions import Fraction
from math import comb

from . import jsonio
from .jsonio import FormatError

log = logging.getLogger("mgl")


class ScaleGuardError(RuntimeError):
    pass


def _guard(d, n, override, limit=10):
    if comb(n, d) > limit and not override:
        raise ScaleGuardError(
            f"({d},{n}) has {comb(n, d)} bases (> {limit}); enumeration may be "
            "large — pass --guard-override to proceed"
        )


def _emit(obj, out):
    text = jsonio.dump(obj, out)
    if out is None:
        sys.stdout.write(text)
    else:
        log.info("wrote %s", out)


def _parse_label(s):
    try:
        return int(s)
    except (TypeError, ValueError):
        return s


def cmd_validate(args):
    obj = jsonio.load(args.file)
    kind = args.kind
    try:
        if kind == "matroid":
            from .ground import GroundSet
            from .matroid import find_exchange_violation

            ground = GroundSet.of_size(int(obj["n"]))
            support = frozenset(tuple(B) for B in obj["support"])
            violation = find_exchange_violation(ground, int(obj["d"]), support)
            if violation is not None:
                X, Y, i = violation
                print(f"invalid matroid: exchange condition fails at (X,Y)=({X},{Y}), i={i}")
                return 1
            print("valid matroid")
            return 0
        if kind == "tropical":
            from .valuated import is_tropical_plucker

            phi = jsonio.tropical_from_json(obj)
            if not is_tropical_plucker(phi):
                print("invalid: tropical Plucker relation fails (some exchange "
                      "pair has a unique minimum)")
                return 1
            print("valid tropical Plucker vector")
            return 0
        if kind == "chirotope":
            jsonio.chirotope_from_json(obj)
            print("valid chirotope")
            return 0
        if kind == "orval":
            from .orval import is_oriented_tropical_plucker

            Phi = jsonio.orval_from_json(obj)
            if not is_oriented_tropical_plucker(Phi):
                print("invalid: signed tropical Plucker relation fails (minimum "
                      "valuation does not carry both signs)")
                return 1
            print("valid oriented tropical Plucker vector")
            return 0
    except FormatError:
        raise
    except (ValueError, KeyError) as exc:
        print(f"invalid {kind}: {exc}")
        return 1
    raise FormatError(f"unknown kind {kind!r}")


def cmd_matroids(args):
    from .matroid import enumerate_matroids

    _guard(args.d, args.n, args.guard_override)
    matroids = enumerate_matroids(args.d, args.n, max_bases=args.max_bases)
    log.info("enumerated %d matroids of rank %d on %d elements", len(matroids), args.d, args.n)
    _emit(
        {"count": len(matroids), "matroids": [jsonio.matroid_to_json(p) for p in matroids]},
        args.out,
    )
    return 0


def cmd_macp(args):
    from .oriented import enumerate_oriented_matroids

    _guard(args.d, args.n, args.guard_override)
    macp = enumerate_oriented_matroids(args.d, args.n)
    poset = macp.to_finite_poset()
    labels = [
        "".join(
            {1: "+", -1: "-", 0: "0"}[cls.rep.sign(B)]
            for B in _bases(args.d, args.n)
        )
        for cls in macp.elements
    ]
    log.info("MacP(%d,%d) has %d classes", args.d, args.n, len(poset))
    _emit(jsonio.poset_to_json(poset, labels=labels), args.out)
    return 0


def _bases(d, n):
    from .ground import GroundSet, enumerate_subsets

    return enumerate_subsets(GroundSet.of_size(n), d)


def cmd_dressian(args):
    from .valuated import enumerate_dressian_cells

    _guard(args.d, args.n, args.guard_override)
    cells = enumerate_dressian_cells(args.d, args.n)
    log.info("Dressian (%d,%d): %d nonempty cells", args.d, args.n, len(cells))
    _emit(
        {"count": len(cells), "cells": [jsonio.dressian_cell_to_json(c) for c in cells]},
        args.out,
    )
    return 0


def cmd_orval_cells(args):
    from .orval import oriented_cell_poset

    _guard(args.d, args.n, args.guard_override)
    poset = oriented_cell_poset(args.d, args.n)
    log.info("oriented cells (%d,%d): %d", args.d, args.n, len(poset))
    _emit(
        {
            "count": len(poset),
            "cells": [jsonio.oriented_cell_to_json(c) for c in poset.elements],
        },
        args.out,
    )
    return 0


def cmd_closure_check(args):
    from .valuated import (
        closure_candidates,
        closure_perturbation_feasible,
        enumerate_dressian_cells,
    )

    _guard(args.d, args.n, args.guard_override)
    cells = enumerate_dressian_cells(args.d, args.n)
    violations = 0
    checked = 0
    for cell in cells:
        candidates = set(closure_candidates(cell, cells))
        for other in cells:
            if other == cell:
                continue
            checked += 1
            expected = other in candidates
            actual = closure_perturbation_feasible(cell, other)
            if expected != actual:
                violations += 1
                print(
                    f"closure mismatch: C{cell.matroid.sorted_support()} -> "
                    f"C{other.matroid.sorted_support()}: "
                    f"candidate={expected} feasible={actual}"
                )
    print(f"closure-check ({args.d},{args.n}): {checked} ordered pairs, "
          f"{violations} violations")
    return 1 if violations else 0


def cmd_fibers_check(args):
    from .oriented import enumerate_oriented_matroids
    from .orval import check_fiber_finality, oriented_cell_poset

    _guard(args.d, args.n, args.guard_override)
    poset = oriented_cell_poset(args.d, args.n)
    macp = enumerate_oriented_matroids(args.d, args.n)
    violations = check_fiber_finality(poset, macp)
    for v in violations:
        print(f"fiber violation: {v}")
    print(f"fibers-check ({args.d},{args.n}): {len(poset)} cells, "
          f"{len(violations)} violations")
    return 1 if violations else 0


def cmd_nerve(args):
    from .complexes import order_complex

    poset = jsonio.poset_from_json(jsonio.load(args.poset))
    K = order_complex(poset, max_dim=args.max_dim)
    log.info("nerve: %d vertices, %d faces", len(K.vertices), len(K.faces))
    _emit(jsonio.complex_to_json(K), args.out)
    return 0


def cmd_euler(args):
    from .complexes import euler_characteristic

    K = jsonio.complex_from_json(jsonio.load(args.complex))
    print(euler_characteristic(K))
    return 0


def cmd_dsum(args):
    from .sums_sliding import direct_sum

    a = jsonio.orval_from_json(jsonio.load(args.a))
    b = jsonio.orval_from_json(jsonio.load(args.b))
    _emit(jsonio.orval_to_json(direct_sum(a, b)), args.out)
    return 0


def _parse_weights(text):
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad weight list {text!r}: {exc}") from exc


def cmd_slide(args):
    from .sums_sliding import SimplexPoint, slide, with_rational_modulus
    from .valuated import MulValuation

    Phi = jsonio.orval_from_json(jsonio.load(args.phi))
    family = jsonio.family_from_json(jsonio.load(args.family))
    if not all(isinstance(v, MulValuation) for _, v in Phi.values.values()):
        log.info("converting additive valuations with base %s", args.base)
        Phi = with_rational_modulus(Phi, args.base)
    out = slide(Phi, family, SimplexPoint(_parse_weights(args.t)))
    _emit(jsonio.orval_to_json(out), args.out)
    return 0


def cmd_operad_compose(args):
    from .operad import operad_compose

    job = jsonio.load(args.job)
    try:
        gamma = {_parse_label(k): _parse_label(v) for k, v in job["gamma"].items()}
        outer = jsonio.operad_point_from_json(job["outer"])
        inner = {
            _parse_label(k): jsonio.operad_point_from_json(v)
            for k, v in job.get("inner", {}).items()
        }
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed compose job: {exc}") from exc
    out = operad_compose(gamma, outer, inner)
    _emit(jsonio.operad_point_to_json(out), args.out)
    return 0


def cmd_operad_act(args):
    from .operad import operad_act

    point = jsonio.operad_point_from_json(jsonio.load(args.point))
    if len(args.inputs) != len(point.labels):
        raise FormatError(
            f"point has {len(point.labels)} labels but {len(args.inputs)} "
            "inputs were given"
        )
    inputs = {
        a: jsonio.orval_from_json(jsonio.load(path))
        for a, path in zip(point.labels, args.inputs)
    }
    _emit(jsonio.orval_to_json(operad_act(point, inputs)), args.out)
    return 0


def cmd_operad_check_laws(args):
    from .operad import check_operad_laws

    windows = tuple(int(w) for w in args.windows.split(","))
    print(f"# check-laws max-size={args.max_size} windows={args.windows}")
    report = check_operad_laws(max_size=args.max_size, windows=windows)
    for v in report["violations"]:
        print(f"violation: {v}")
    print(f"{report['checks']} checks, {len(report['violations'])} violations")
    return 1 if report["violations"] else 0


def cmd_operad_check_action(args):
    from .operad import check_action_compatibility

    print(f"# check-action seed={args.seed} trials={args.trials}")
    report = check_action_compatibility(seed=args.seed, trials=args.trials)
    for v in report["violations"]:
        print(f"violation: {v}")
    print(f"{report['checks']} checks, {len(report['violations'])} violations")
    return 1 if report["violations"] else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mgl",
        description="Exact computation with matroids, valuated and oriented "
        "matroids, Dressian cells, sliding, and the injection operad.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def dn(p):
        p.add_argument("--d", type=int, required=True, help="rank")
        p.add_argument("--n", type=int, required=True, help="ground set size")
        p.add_argument("--guard-override", action="store_true",
                       help="lift the enumeration scale guard")

    p = sub.add_parser("validate", help="validate a JSON object")
    p.add_argument("--kind", required=True,
                   choices=["matroid", "tropical", "chirotope", "orval"])
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("matroids", help="enumerate matroids")
    dn(p)
    p.add_argument("--max-bases", type=int, default=20)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_matroids)

    p = sub.add_parser("macp", help="enumerate the MacPhersonian poset")
    dn(p)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_macp)

    p = sub.add_parser("dressian", help="enumerate Dressian cells with witnesses")
    dn(p)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_dressian)

    p = sub.add_parser("orval-cells", help="enumerate oriented Dressian cells")
    dn(p)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_orval_cells)

    p = sub.add_parser("closure-check", help="verify the cell closure relation")
    dn(p)
    p.set_defaults(func=cmd_closure_check)

    p = sub.add_parser("fibers-check", help="verify fiber finality over MacP")
    dn(p)
    p.set_defaults(func=cmd_fibers_check)

    p = sub.add_parser("nerve", help="order complex of a poset")
    p.add_argument("poset")
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_nerve)

    p = sub.add_parser("euler", help="Euler characteristic of a complex")
    p.add_argument("complex")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("dsum", help="direct sum of two signed vectors")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_dsum)

    p = sub.add_parser("slide", help="matroid sliding along an injection family")
    p.add_argument("phi")
    p.add_argument("family")
    p.add_argument("--t", required=True, help='simplex weights, e.g. "1/3,2/3"')
    p.add_argument("--base", type=int, default=2,
                   help="base for converting additive valuations")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_slide)

    p = sub.add_parser("operad", help="operad composition, action, and checks")
    opsub = p.add_subparsers(dest="operad_command", required=True)

    q = opsub.add_parser("compose", help="compose operad points along gamma")
    q.add_argument("job", help="JSON with gamma, outer point, inner points")
    q.add_argument("-o", "--out")
    q.set_defaults(func=cmd_operad_compose)

    q = opsub.add_parser("act", help="act on signed vectors")
    q.add_argument("point")
    q.add_argument("inputs", nargs="+")
    q.add_argument("-o", "--out")
    q.set_defaults(func=cmd_operad_act)

    q = opsub.add_parser("check-laws", help="exhaustive operad law check")
    q.add_argument("--max-size", type=int, default=3)
    q.add_argument("--windows", default="1,7,20")
    q.set_defaults(func=cmd_operad_check_laws)

    q = opsub.add_parser("check-action", help="sampled action compatibility check")
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--trials", type=int, default=40)
    q.set_defaults(func=cmd_operad_check_action)

    return parser


def main(argv=None):
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="mgl: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ScaleGuardError as exc:
        print(f"scale guard: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"validation failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
