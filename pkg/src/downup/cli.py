"""Command-line surface for the down-up algebra toolkit.

Every subcommand prints a deterministic plain-text result; the global
``--json`` flag switches to a stable envelope {subcommand, inputs, result,
provenance} with sorted keys.  Exit codes: 0 success, 1 domain error,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .algebra import (
    Params,
    bimod_action_formula,
    bimod_class,
    ideal_power_membership,
    omega_coords,
    omega_to_pbw,
    pbw_normal_form,
)
from .classify import invariant_report, is_monomial, iso_verdict, lambda_sequence, type_of
from .errors import DomainError
from .expr import DU, DWU, YX, parse
from .homology import OneDimModule, tor_profile, tor1_bound
from .quiver import load_monomial_algebra, monomial_abelianization
from .quotients import (
    abelian_invariants,
    abelianization,
    project,
    q_normal_form,
    quantum_plane,
    quantum_weyl,
)
from .verify import run_all


def _scalar(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"bad rational {text!r}") from None


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def _invariant_text(invariants: dict) -> str:
    pieces = []
    for key in sorted(invariants):
        value = invariants[key]
        rendered = _bool_text(value) if isinstance(value, bool) else str(value)
        pieces.append(f"{key}={rendered}")
    return " ".join(pieces)


def _run_nf(args):
    params = Params.parse(args.params)
    result = str(pbw_normal_form(parse(args.expr, DU), params))
    return result, result, "pbw normal form by deglex rewriting"


def _run_omega(args):
    params = Params.parse(args.params)
    element = omega_coords(parse(args.expr, DWU), params)
    if args.invert:
        result = str(omega_to_pbw(element, params))
        return result, result, "omega basis inversion"
    result = str(element)
    return result, result, "omega basis conversion"


def _run_member(args):
    params = Params.parse(args.params)
    inside = ideal_power_membership(parse(args.expr, DWU), args.power, params)
    return _bool_text(inside), inside, "omega ideal power membership"


def _run_bimod(args, parser):
    params = Params.parse(args.params)
    if args.formula is not None:
        if args.expr is not None:
            parser.error("pass either an expression or --formula, not both")
        fields = [piece.strip() for piece in args.formula.split(",")]
        if len(fields) != 3 or fields[2] not in ("left", "right"):
            parser.error(f"--formula wants I,L,left|right, got {args.formula!r}")
        try:
            i, l = int(fields[0]), int(fields[1])
        except ValueError:
            parser.error(f"--formula indices must be integers, got {args.formula!r}")
        result = str(bimod_action_formula(i, l, fields[2], params))
        return result, result, "bimodule action formula"
    if args.expr is None:
        parser.error("bimod needs an expression or --formula")
    result = str(bimod_class(parse(args.expr, DWU), params))
    return result, result, "omega bimodule class"


def _run_project(args):
    params = Params.parse(args.params)
    result = str(project(parse(args.expr, DU), params))
    return result, result, "quantum quotient projection"


def _run_qnf(args):
    algebra = quantum_weyl(_scalar(args.alpha)) if args.weyl else quantum_plane(_scalar(args.alpha))
    result = str(q_normal_form(parse(args.expr, YX), algebra))
    return result, result, "quantum normal form"


def _run_abel(args):
    pres = abelianization(Params.parse(args.params))
    invariants = abelian_invariants(pres)
    text = f"{pres}\n{_invariant_text(invariants)}"
    return text, {"presentation": pres.to_json(), "invariants": invariants}, \
        "abelianization case analysis"


def _run_tor(args):
    params = Params.parse(args.params)
    profile = tor_profile(OneDimModule.parse(args.t1), OneDimModule.parse(args.t2), params)
    return str(profile), list(profile.dims), "tor profile from the collapsed resolution"


def _run_torbound(args):
    bound = tor1_bound(Params.parse(args.params), args.samples)
    return str(bound), bound, "sampled tor-one supremum"


def _run_classify(args):
    if args.mode == "type":
        tag = str(type_of(Params.parse(args.params)))
        return tag, tag, "type table"
    if args.mode == "monomial":
        flag = is_monomial(Params.parse(args.params))
        return _bool_text(flag), flag, "monomiality criterion"
    left, right = Params.parse(args.left), Params.parse(args.right)
    if args.mode == "iso":
        verdict = iso_verdict(left, right)
        payload = {
            "isomorphic": verdict.isomorphic,
            "rule": verdict.rule,
            "detail": verdict.detail,
        }
        return str(verdict), payload, verdict.rule
    report = invariant_report(left, right, args.samples)
    lines = [
        f"type: {report['left']['type']} vs {report['right']['type']}",
        f"tor1_bound: {report['left']['tor1_bound']} vs {report['right']['tor1_bound']}",
        "abelian: "
        + _invariant_text(report["left"]["abelian"])
        + " vs "
        + _invariant_text(report["right"]["abelian"]),
        "mismatches: " + (",".join(report["mismatches"]) or "none"),
        "certifies_non_isomorphism: " + _bool_text(report["certifies_non_isomorphism"]),
    ]
    return "\n".join(lines), report, "separating invariant report"


def _run_lambda(args):
    values = lambda_sequence(_scalar(args.alpha), args.terms)
    text = ",".join(str(value) for value in values)
    return text, [str(value) for value in values], "witness scalar recursion"


def _run_quiver_abel(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as err:
            raise DomainError(f"cannot read quiver file: {err}") from None
    pres = monomial_abelianization(load_monomial_algebra(text))
    return str(pres), {"presentation": pres.to_json()}, "vertexwise loop abelianization"


def _run_verify(args):
    results = run_all()
    lines = []
    payload = []
    for result in results:
        flag = "PASS" if result.passed else "FAIL"
        lines.append(f"{flag} {result.name}: {result.detail}")
        payload.append({"name": result.name, "passed": result.passed, "detail": result.detail})
    failed = sum(1 for result in results if not result.passed)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    total = sum(result.seconds for result in results)
    print(f"verify suite finished in {total:.2f}s", file=sys.stderr)
    text = "\n".join(lines)
    return text, payload, "acceptance property suite", failed == 0


class _Parser(argparse.ArgumentParser):
    """Accepts comma-separated rational values that start with a minus sign."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d[\d/.,-]*$")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json",
        action="store_true",
        default=argparse.SUPPRESS,
        help="emit a JSON envelope",
    )

    parser = _Parser(
        prog="downup",
        parents=[common],
        description="Exact computations in down-up algebras A(alpha, beta, gamma).",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def sub(name, help_text, **kwargs):
        return commands.add_parser(name, parents=[common], help=help_text, **kwargs)

    nf = sub("nf", "PBW normal form of a d,u expression")
    nf.add_argument("--params", required=True, help="alpha,beta,gamma")
    nf.add_argument("expr")

    omega = sub("omega", "omega-basis coordinates of an expression (beta = 0)")
    omega.add_argument("--params", required=True)
    omega.add_argument("--invert", action="store_true", help="convert back to the PBW basis")
    omega.add_argument("expr")

    member = sub("member", "membership in a power of the omega ideal")
    member.add_argument("--params", required=True)
    member.add_argument("--power", type=int, required=True)
    member.add_argument("expr")

    bimod = sub("bimod", "class in the omega bimodule quotient")
    bimod.add_argument("--params", required=True)
    bimod.add_argument("--formula", help="I,L,left|right: image of a basis class under the action")
    bimod.add_argument("expr", nargs="?")

    project_cmd = sub("project", "image in the quantum plane or Weyl algebra")
    project_cmd.add_argument("--params", required=True)
    project_cmd.add_argument("expr")

    qnf = sub("qnf", "normal form in a quantum plane or Weyl algebra")
    qnf.add_argument("--alpha", required=True)
    qnf.add_argument("--weyl", action="store_true", help="use the Weyl constant 1")
    qnf.add_argument("expr")

    abel = sub("abel", "abelianization presentation and its invariants")
    abel.add_argument("--params", required=True)

    tor = sub("tor", "Tor profile of two one-dimensional modules (beta = 0)")
    tor.add_argument("--params", required=True)
    tor.add_argument("--t1", required=True, help="delta,mu")
    tor.add_argument("--t2", required=True, help="delta,mu")

    torbound = sub("torbound", "largest sampled Tor_1 dimension (beta = 0)")
    torbound.add_argument("--params", required=True)
    torbound.add_argument("--samples", type=int, default=40)

    classify = sub("classify", "type tag, isomorphism verdict, monomiality, report")
    modes = classify.add_subparsers(dest="mode", required=True, metavar="MODE")
    for mode in ("type", "monomial"):
        mode_parser = modes.add_parser(mode, parents=[common])
        mode_parser.add_argument("--params", required=True)
    for mode in ("iso", "report"):
        mode_parser = modes.add_parser(mode, parents=[common])
        mode_parser.add_argument("--left", required=True)
        mode_parser.add_argument("--right", required=True)
        if mode == "report":
            mode_parser.add_argument("--samples", type=int, default=40)

    lam = sub("lambda", "witness scalar sequence for an invertible alpha")
    lam.add_argument("--alpha", required=True)
    lam.add_argument("--terms", type=int, default=20, help="largest index m")

    quiver_abel = sub("quiver-abel", "abelianization of a quiver monomial algebra")
    quiver_abel.add_argument("file", help="quiver description file, or - for stdin")

    sub("verify", "run the acceptance property suite")

    return parser


def _inputs_of(args) -> dict:
    skip = {"command", "mode", "json"}
    return {
        key: value
        for key, value in sorted(vars(args).items())
        if key not in skip and value is not None and value is not False
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    exit_code = 0
    try:
        if args.command == "nf":
            text, result, provenance = _run_nf(args)
        elif args.command == "omega":
            text, result, provenance = _run_omega(args)
        elif args.command == "member":
            text, result, provenance = _run_member(args)
        elif args.command == "bimod":
            text, result, provenance = _run_bimod(args, parser)
        elif args.command == "project":
            text, result, provenance = _run_project(args)
        elif args.command == "qnf":
            text, result, provenance = _run_qnf(args)
        elif args.command == "abel":
            text, result, provenance = _run_abel(args)
        elif args.command == "tor":
            text, result, provenance = _run_tor(args)
        elif args.command == "torbound":
            text, result, provenance = _run_torbound(args)
        elif args.command == "classify":
            text, result, provenance = _run_classify(args)
        elif args.command == "lambda":
            text, result, provenance = _run_lambda(args)
        elif args.command == "quiver-abel":
            text, result, provenance = _run_quiver_abel(args)
        else:
            text, result, provenance, clean = _run_verify(args)
            exit_code = 0 if clean else 1
    except DomainError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    if getattr(args, "json", False):
        envelope = {
            "subcommand": args.command if args.command != "classify" else f"classify {args.mode}",
            "inputs": {key: _jsonable(value) for key, value in _inputs_of(args).items()},
            "result": _jsonable(result),
            "provenance": provenance,
        }
        print(json.dumps(envelope, sort_keys=True))
    else:
        print(text)
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
