"""Command-line surface: validate, invariants, closure, compare, perturb,
selftest, operating on the JSON diagram format.

Exit codes: 0 success (or indistinguishable), 1 validation failure, 2 usage or
parse error, 3 compare found distinguishing fields, 4 resource bound exceeded.
Errors are reported as machine-readable JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import closure as _closure
from . import diagram as _diagram
from . import invariants as _inv
from . import moves as _moves
from .errors import RailknotError, ResourceLimitError, UsageError

ENV_MAX_CROSSINGS = "RAILKNOT_MAX_CROSSINGS"

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_DISTINGUISHED = 3
EXIT_RESOURCE = 4

_SIDES = {"over": (_closure.SIDE_OVER,), "under": (_closure.SIDE_UNDER,),
          "both": (_closure.SIDE_OVER, _closure.SIDE_UNDER)}
_ORIENTS = {"plus": _closure.ORIENT_PLUS, "minus": _closure.ORIENT_MINUS}
_FAMILIES = ("bracket", "x", "jones", "homflypt", "kauffman", "all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="railknot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the structural invariants of a diagram file")
    p.add_argument("file")

    p = sub.add_parser("invariants", help="print invariant certificate fields as JSON")
    p.add_argument("file")
    p.add_argument("--side", choices=sorted(_SIDES), default="both")
    p.add_argument("--orient", choices=sorted(_ORIENTS), default="plus",
                   help="orientation for single oriented families (ignored with --family all)")
    p.add_argument("--family", choices=_FAMILIES, default="all")
    p.add_argument("--max-crossings", type=int, default=None)

    p = sub.add_parser("closure", help="print the companion loop as Gauss-code text")
    p.add_argument("file")
    p.add_argument("--side", choices=sorted(_SIDES), default="both")
    p.add_argument("--forget-rails", action="store_true")

    p = sub.add_parser("compare", help="compare the invariant certificates of two diagrams")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--max-crossings", type=int, default=None)

    p = sub.add_parser("perturb", help="apply a seeded random walk of moves")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--regular", action="store_true",
                   help="exclude R1Add/R1Remove (regular moves only)")

    sub.add_parser("selftest", help="run the built-in acceptance checks")

    return parser


def _read_diagram(path: str) -> _diagram.RailKnotoidDiagram:
    try:
        with open(path, "rb") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return _diagram.parse_diagram(text)


def _resolve_bounds(flag_value: int | None) -> _inv.Bounds:
    if flag_value is not None:
        return _inv.Bounds.capped(flag_value)
    env = os.environ.get(ENV_MAX_CROSSINGS)
    if env is not None:
        try:
            return _inv.Bounds.capped(int(env))
        except ValueError:
            raise UsageError(f"{ENV_MAX_CROSSINGS} must be an integer, got {env!r}") from None
    return _inv.Bounds()


# -- commands ------------------------------------------------------------------

def _cmd_validate(args, out, err) -> int:
    try:
        with open(args.file, "rb") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from None
    try:
        doc = json.loads(text.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed JSON: {exc}") from None
    try:
        _diagram.parse_diagram(text)
    except UsageError as exc:
        # distinguish structural violations (exit 1) from document-shape errors (exit 2)
        message = str(exc)
        if not message.startswith("invalid diagram:"):
            raise
        for violation in message[len("invalid diagram:"):].strip().split("; "):
            print(violation, file=out)
        return EXIT_INVALID
    del doc
    print("OK", file=out)
    return EXIT_OK


def _invariant_fields(d, sides, family, orientation, bounds) -> dict:
    fields = {}
    for side in sides:
        tag = "o" if side == _closure.SIDE_OVER else "u"
        loop = _closure.companion(d, side)
        orients = (("plus", _closure.ORIENT_PLUS), ("minus", _closure.ORIENT_MINUS)) \
            if family == "all" else ((orientation, _ORIENTS[orientation]),)
        if family in ("all", "bracket"):
            fields[f"bracket_{tag}"] = _inv.bracket(loop, bounds.bracket)
        if family == "all":
            fields[f"writhe_{tag}_plus"] = _inv.writhe(loop)
        for oname, ovalue in orients:
            oriented = _closure.orient(loop, ovalue)
            if family in ("all", "x"):
                fields[f"x_{tag}_{oname}"] = _inv.normalized_bracket(oriented, bounds.bracket)
            if family in ("all", "jones"):
                fields[f"jones_{tag}_{oname}"] = _inv.jones(oriented, bounds.bracket)
            if family in ("all", "homflypt"):
                fields[f"homfly_{tag}_{oname}"] = _inv.homflypt(oriented, bounds.homflypt)
        if family in ("all", "kauffman"):
            fields[f"kauffman_{tag}"] = _inv.kauffman_f(loop, bounds.kauffman)
    return {k: v if isinstance(v, int) else v.render() for k, v in fields.items()}


def _cmd_invariants(args, out, err) -> int:
    d = _read_diagram(args.file)
    bounds = _resolve_bounds(args.max_crossings)
    fields = _invariant_fields(d, _SIDES[args.side], args.family, args.orient, bounds)
    print(json.dumps(fields, indent=2), file=out)
    return EXIT_OK


def _cmd_closure(args, out, err) -> int:
    d = _read_diagram(args.file)
    build = _closure.forget_rails_closure if args.forget_rails else _closure.companion
    for side in _SIDES[args.side]:
        line = _diagram.render_gauss(build(d, side))
        if args.side == "both":
            print(f"{side}: {line}", file=out)
        else:
            print(line, file=out)
    return EXIT_OK


def _cmd_compare(args, out, err) -> int:
    d1 = _read_diagram(args.file_a)
    d2 = _read_diagram(args.file_b)
    bounds = _resolve_bounds(args.max_crossings)
    verdict, fields = _inv.compare(d1, d2, bounds)
    if verdict == _inv.DISTINGUISHED:
        print("DISTINGUISHED: " + " ".join(fields), file=out)
        return EXIT_DISTINGUISHED
    print("INDISTINGUISHABLE", file=out)
    return EXIT_OK


def _cmd_perturb(args, out, err) -> int:
    d = _read_diagram(args.file)
    if args.steps < 0:
        raise UsageError("--steps must be >= 0")
    spec = _moves.WalkSpec(steps=args.steps, seed=args.seed, regular_only=args.regular)
    result = _moves.random_walk(d, spec)
    out.write(_diagram.serialize_diagram(result).decode("utf-8"))
    return EXIT_OK


# -- selftest ------------------------------------------------------------------

_TREFOIL_ARC = _diagram.RailKnotoidDiagram(
    self_crossings={1: 1, 2: 1, 3: 1},
    arc_events=tuple(
        _diagram.SelfPass(c, r)
        for r, c in (("O", 1), ("U", 2), ("O", 3), ("U", 1), ("O", 2), ("U", 3))
    ),
)

_FIGURE7_WITNESS = _diagram.RailKnotoidDiagram(
    self_crossings={},
    arc_events=(_diagram.RailPass(1, 1), _diagram.RailPass(1, 2), _diagram.RailPass(1, 3)),
    rail1=(
        _diagram.ENDPOINT,
        _diagram.RailCrossing(3, _diagram.FLAG_OVER, _diagram.L2R),
        _diagram.RailCrossing(2, _diagram.FLAG_UNDER, _diagram.R2L),
        _diagram.RailCrossing(1, _diagram.FLAG_OVER, _diagram.L2R),
    ),
)


def _selftest_checks():
    from .polynomial import Laurent1, TAG_A, TAG_TQ

    one1 = Laurent1.one(TAG_TQ)
    neg_a3 = Laurent1.monomial(TAG_A, -1, 3)
    trefoil_jones = (
        Laurent1.from_dict(TAG_TQ, {4: 1, 12: 1, 16: -1}),
        Laurent1.from_dict(TAG_TQ, {-4: 1, -12: 1, -16: -1}),
    )

    def empty_trivial():
        cert = _inv.certificate(_diagram.EMPTY_DIAGRAM)
        doc = cert.to_doc()
        for name, value in doc.items():
            if name.startswith("writhe"):
                assert value == 0, (name, value)
            else:
                assert value.endswith("^0") and value.startswith("1*"), (name, value)

    def trefoil_fixture():
        lo = _closure.companion(_TREFOIL_ARC, _closure.SIDE_OVER)
        lu = _closure.companion(_TREFOIL_ARC, _closure.SIDE_UNDER)
        assert lo == lu, "companions of a rail-free arc must coincide"
        assert _inv.jones(lo) in trefoil_jones, _inv.jones(lo).render()

    def move_invariance():
        # the full certificate (bracket and writhe included) is a regular
        # invariant; regular walks still mix R2/R3, rail variants, and slides
        for base in (_diagram.EMPTY_DIAGRAM, _TREFOIL_ARC, _FIGURE7_WITNESS):
            c0 = _inv.certificate(base)
            for seed in (1, 2):
                walked = _moves.random_walk(
                    base, _moves.WalkSpec(steps=3, seed=seed, regular_only=True))
                verdict = _inv.certificate(walked).differing_fields(c0)
                assert not verdict, verdict

    def regular_and_r1():
        for base in (_TREFOIL_ARC, _FIGURE7_WITNESS):
            walked = _moves.random_walk(base, _moves.WalkSpec(steps=4, seed=5, regular_only=True))
            for side in (_closure.SIDE_OVER, _closure.SIDE_UNDER):
                assert _inv.rail_bracket(walked, side) == _inv.rail_bracket(base, side)
            move = _moves.enumerate_moves(base, kinds={_moves.R1_ADD})[0]
            kinked = _moves.apply_move(base, move)
            factor = neg_a3 ** move.params[0]
            for side in (_closure.SIDE_OVER, _closure.SIDE_UNDER):
                assert _inv.rail_bracket(kinked, side) == factor * _inv.rail_bracket(base, side)

    def normalization_identity():
        for base in (_TREFOIL_ARC, _FIGURE7_WITNESS):
            for side in (_closure.SIDE_OVER, _closure.SIDE_UNDER):
                loop = _closure.companion(base, side)
                x = _inv.normalized_bracket(loop)
                assert x == neg_a3 ** (-_inv.writhe(loop)) * _inv.bracket(loop)
                assert _inv.jones(loop) == _inv.substitute_A_to_t(x)

    def cross_oracles():
        for base in (_diagram.EMPTY_DIAGRAM, _TREFOIL_ARC, _FIGURE7_WITNESS):
            for side in (_closure.SIDE_OVER, _closure.SIDE_UNDER):
                loop = _closure.companion(base, side)
                assert _inv.homflypt_to_jones(_inv.homflypt(loop)) == _inv.jones(loop)
                assert _inv.kauffman_to_x(_inv.kauffman_f(loop)) == _inv.normalized_bracket(loop)
        kinked = _diagram.EMPTY_DIAGRAM
        for k in range(3):
            kinked = _moves.apply_move(
                kinked, _moves.Move(_moves.R1_ADD, (0,), ((-1) ** k, _diagram.OVER)))
            loop = _closure.companion(kinked, _closure.SIDE_OVER)
            assert _inv.kauffman_f(loop) == _inv.kauffman_f(_diagram.UNKNOT)

    def figure7_phenomenon():
        jo = _inv.jones(_closure.companion(_FIGURE7_WITNESS, _closure.SIDE_OVER))
        assert jo != one1, "over companion must be knotted"
        for side in (_closure.SIDE_OVER, _closure.SIDE_UNDER):
            forgotten = _closure.forget_rails_closure(_FIGURE7_WITNESS, side)
            assert _inv.jones(forgotten) == one1

    def determinism():
        spec = _moves.WalkSpec(steps=6, seed=42)
        a = _diagram.serialize_diagram(_moves.random_walk(_TREFOIL_ARC, spec))
        b = _diagram.serialize_diagram(_moves.random_walk(_TREFOIL_ARC, spec))
        assert a == b
        c1 = _inv.certificate(_TREFOIL_ARC).to_doc()
        c2 = _inv.certificate(_TREFOIL_ARC).to_doc()
        assert c1 == c2

    return [
        ("empty diagram certificate is trivial", empty_trivial),
        ("open-trefoil companions and Jones value", trefoil_fixture),
        ("certificate invariance under seeded walks", move_invariance),
        ("regular walks fix rail brackets; R1 scales by -A^±3", regular_and_r1),
        ("normalized bracket identity and Jones substitution", normalization_identity),
        ("HOMFLYPT->Jones and Kauffman->X cross-oracles", cross_oracles),
        ("rail-wrap witness: knotted companion, trivial knotoid", figure7_phenomenon),
        ("walks and certificates are deterministic", determinism),
    ]


def _cmd_selftest(args, out, err) -> int:
    failures = 0
    for name, check in _selftest_checks():
        try:
            check()
        except AssertionError as exc:
            failures += 1
            print(f"FAIL - {name}: {exc}", file=out)
        else:
            print(f"ok - {name}", file=out)
    print(f"{'FAILED' if failures else 'PASSED'} ({failures} failures)", file=out)
    return EXIT_OK if failures == 0 else 1


_COMMANDS = {
    "validate": _cmd_validate,
    "invariants": _cmd_invariants,
    "closure": _cmd_closure,
    "compare": _cmd_compare,
    "perturb": _cmd_perturb,
    "selftest": _cmd_selftest,
}


def _error_json(kind: str, exc: Exception) -> str:
    return json.dumps({"error": kind, "message": str(exc)})


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out, err)
    except UsageError as exc:
        print(_error_json("usage", exc), file=err)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(_error_json("resource", exc), file=err)
        return EXIT_RESOURCE
    except RailknotError as exc:  # any other domain error is a usage problem
        print(_error_json("usage", exc), file=err)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
