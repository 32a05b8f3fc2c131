"""Command-line front end.

Usage::

    symplab <subcommand> [--genus G] [--k K] [--p P] [--m M] [--cap N] [--format json|text]

Every run prints one result envelope.  Exit status is 0 on success, 2 on a
usage error and 1 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import checks, gwcalc, ruledtop, whiteheadlab
from .errors import TheoremViolation
from .exactalg import quotient_dims
from .sullivan import cohomology_dims, parse_model, verify_d_squared

ANCHORS = {
    "egw": "Theorem egwruled",
    "dimcheck": "Eq. pgwdim1 / Eq. pgwdim2",
    "relation": "Theorem rationaltypeclass",
    "poincare": "Theorem rationaltypeclass",
    "model-verify": "Theorem rationaltypeclass (Sullivan model)",
    "minimal-type": "Lemma sams (Claim)",
    "catalog": "Prop. mcduffacs(ii); Prop. mcduffdiff(i)",
    "verify-all": "all invariants",
}


class UsageError(Exception):
    pass


def _json_value(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    if isinstance(x, dict):
        return {str(k): _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"{args.subcommand} requires --{name.replace('_', '-')}")


def _range(name: str, value: int | None, low: int) -> None:
    if value is not None and value < low:
        raise UsageError(f"--{name} must be >= {low}, got {value}")


# -- subcommands --------------------------------------------------------


def cmd_egw(args):
    _need(args, "genus", "k")
    inv = gwcalc.egw_ruled(args.genus, args.k)
    p = inv.exponent
    return {"genus": args.genus, "k": args.k}, {
        "admissible_p": gwcalc.admissible_p(args.genus, args.k),
        "cohomological_degree": inv.cohomological_degree,
        "convention_sign": inv.coefficients[p],
        "exponent": p,
        "invariant": f"+-{'u' if p == 1 else f'u^{p}'}",
        "magnitude": inv.magnitude,
        "obstruction_rank": gwcalc.obstruction_rank(args.genus, args.k),
        "sign_convention": "(-1)^p",
        "sign_determined": inv.sign_determined,
    }


def cmd_dimcheck(args):
    _need(args, "genus", "k", "p")
    m = args.m or 0
    s = gwcalc.GWSetup(args.genus, args.k, args.p, m)
    idx = gwcalc.index(s)
    return {"genus": args.genus, "k": args.k, "m": m, "p": args.p}, {
        "admissible": idx == 0,
        "admissible_p": gwcalc.admissible_p(args.genus, args.k),
        "index": idx,
    }


def cmd_relation(args):
    _need(args, "k")
    system = whiteheadlab.build_constraints(args.k)
    rel = whiteheadlab.solve_relation(args.k)
    expanded = whiteheadlab.expanded_relation(args.k)
    if rel != expanded:
        raise TheoremViolation(f"solved relation {rel} != product {expanded}")
    coeffs = [rel.coefficient((1, args.k - j, j)) for j in range(args.k + 1)]
    return {"k": args.k}, {
        "coefficients": coeffs,
        "constraint_rows": [list(r) for r in system.rows],
        "degree": rel.degree,
        "relation": str(rel),
    }


def cmd_poincare(args):
    _need(args, "k")
    cap = 20 if args.cap is None else args.cap
    rp = whiteheadlab.ring_presentation(args.k, cap)
    return {"cap": cap, "k": args.k}, {
        "generators": {g.name: g.degree for g in rp.generators.generators},
        "model_series": rp.model_series.as_list(),
        "relation": str(rp.relation),
        "series": rp.series.as_list(),
        "series_agree": rp.series == rp.model_series,
    }


def cmd_model_verify(args):
    cap = 20 if args.cap is None else args.cap
    inputs = {"cap": cap}
    if args.model is not None:
        try:
            text = Path(args.model).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read model file: {exc}") from None
        try:
            model = parse_model(text, require_minimal=not args.allow_nonminimal)
        except (ValueError, KeyError) as exc:
            raise UsageError(f"invalid model: {exc}") from None
        inputs["model"] = model.to_text()
    elif args.k is not None:
        model = whiteheadlab.relation_model(args.k)
        inputs["k"] = args.k
    else:
        raise UsageError("model-verify requires --model FILE or --k")
    d_squared = verify_d_squared(model, cap + 1)
    if not d_squared:
        raise TheoremViolation("d^2 != 0 on a model that passed construction")
    result = {
        "cohomology": cohomology_dims(model, cap).as_list(),
        "d_squared_zero": d_squared,
        "differential": {n: str(p) for n, p in model.differential.items()},
        "generators": {g.name: g.degree for g in model.algebra.generators},
    }
    if args.model is None:
        quotient = quotient_dims(whiteheadlab.RING, whiteheadlab.solve_relation(args.k), cap)
        result["quotient_series"] = quotient.as_list()
        result["matches_quotient"] = quotient.as_list() == result["cohomology"]
        if not result["matches_quotient"]:
            raise TheoremViolation("model cohomology disagrees with the quotient ring")
    return inputs, result


def cmd_minimal_type(args):
    _need(args, "k")
    cands = whiteheadlab.minimal_type_candidates(args.k)
    t = whiteheadlab.minimal_type(args.k)
    return {"k": args.k}, {
        "candidates": [
            {"excluded": c.excluded, "p": c.type.p, "reason": c.reason, "s": c.type.s}
            for c in cands
        ],
        "order": t.order,
        "target_degree": t.target_degree,
        "type": [t.p, t.s],
    }


def cmd_catalog(args):
    _need(args, "genus")
    g = args.genus
    cap = 6 if args.cap is None else args.cap
    inputs = {"cap": cap, "genus": g}
    result = {
        "d0_homotopy_dims": [ruledtop.d0_homotopy_dim(g, i) for i in range(cap + 1)],
    }
    if args.k is not None:
        k = args.k
        inputs["k"] = k
        result["stratum_codim"] = ruledtop.stratum_codim(g, k)
        try:
            rep = whiteheadlab.samelson_order_report(g, k)
            result["samelson"] = {"degrees": list(rep.degrees), "orders": list(rep.orders)}
        except ValueError as exc:
            result["samelson"] = {"not_covered": str(exc)}
        if g == 0:
            result["fragile_set_size"] = whiteheadlab.FRAGILE_SET_SIZE
        try:
            rel = whiteheadlab.circle_action_relation(g, k)
            result["circle_action_multiple"] = rel.multiple
        except ValueError as exc:
            result["circle_action_multiple"] = {"not_covered": str(exc)}
    return inputs, result


def cmd_verify_all(args):
    cap = 20 if args.cap is None else args.cap
    kmax = 3 if args.kmax is None else args.kmax
    if cap < 10:
        raise UsageError(f"--cap must be >= 10 for verify-all, got {cap}")
    if kmax < 1:
        raise UsageError(f"--kmax must be >= 1, got {kmax}")
    results = checks.verify_all(cap, kmax)
    return {"cap": cap, "kmax": kmax}, {
        "all_passed": all(r.passed for r in results),
        "checks": [{"detail": r.detail, "name": r.name, "passed": r.passed} for r in results],
    }


COMMANDS = {
    "egw": cmd_egw,
    "dimcheck": cmd_dimcheck,
    "relation": cmd_relation,
    "poincare": cmd_poincare,
    "model-verify": cmd_model_verify,
    "minimal-type": cmd_minimal_type,
    "catalog": cmd_catalog,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--genus", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--p", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--cap", type=int)
    common.add_argument("--kmax", type=int)
    common.add_argument("--model", metavar="FILE")
    common.add_argument("--allow-nonminimal", action="store_true")
    common.add_argument("--format", choices=("json", "text"), default="text")
    parser = argparse.ArgumentParser(
        prog="symplab",
        description="Exact computations for symplectomorphism groups of ruled surfaces.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True, metavar="SUBCOMMAND")
    helps = {
        "egw": "equivariant GW invariant of Sigma_g x S^2 in class A - kF",
        "dimcheck": "virtual dimension over CP^p",
        "relation": "the ring relation F_{k+1}",
        "poincare": "Poincare series of H*(BG) through --cap",
        "model-verify": "check d^2 = 0 and compute cohomology of a Sullivan model",
        "minimal-type": "minimal Whitehead product type and the candidate filter",
        "catalog": "stratum codimensions and homotopy ranks",
        "verify-all": "run every invariant check",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def render_text(env: dict) -> str:
    lines = [
        f"subcommand: {env['subcommand']}",
        f"paper_anchor: {env['paper_anchor']}",
        "inputs: " + " ".join(f"{k}={_text_value(v)}" for k, v in sorted(env["inputs"].items())),
    ]
    for key, value in sorted(env["result"].items()):
        lines.append(f"{key}: {_text_value(value)}")
    lines.append(f"exact: {str(env['exact']).lower()}")
    return "\n".join(lines) + "\n"


def _text_value(v) -> str:
    if isinstance(v, str):
        return v.replace("\n", "; ").strip("; ")
    return json.dumps(v, sort_keys=True, separators=(",", ":"))


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _range("genus", args.genus, 0)
        _range("k", args.k, 0 if args.subcommand in ("relation", "poincare", "model-verify") else 1)
        _range("p", args.p, 0)
        _range("m", args.m, 0)
        _range("cap", args.cap, 0)
        inputs, result = COMMANDS[args.subcommand](args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(stderr)
        print(f"symplab {args.subcommand}: error: {exc}", file=stderr)
        return 2
    except TheoremViolation as exc:
        print(f"symplab {args.subcommand}: internal consistency failure: {exc}", file=stderr)
        return 1
    env = {
        "exact": True,
        "inputs": _json_value(inputs),
        "paper_anchor": ANCHORS[args.subcommand],
        "result": _json_value(result),
        "subcommand": args.subcommand,
    }
    if args.format == "json":
        stdout.write(json.dumps(env, sort_keys=True, indent=2) + "\n")
    else:
        stdout.write(render_text(env))
    if args.subcommand == "verify-all" and not result["all_passed"]:
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
