"""Command-line entry point and certificate reports.

Exit codes: 0 when a result was computed (any verdict), 2 for invalid
input, 3 when a step that the hypotheses guarantee failed anyway.
"""
from __future__ import annotations

import argparse
import enum
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .cointegrals import classify_discrete, cointegral_faithful, cointegral_legs, cointegral_space
from .comult import GaloisKind, galois_matrix, is_unital, leg, regularity_note
from .errors import InternalInconsistency, InvalidInput, MHAError
from .exactlin import Matrix, format_rational, rank
from .integrals import DEFAULT_COEFFICIENT_BOUND, gram_matrix, invariant_space, is_faithful
from .kg_backend import make_group, run_suite
from .ls_engine import AntipodeMap, Verdict, classify
from .specfile import load_spec

COMMANDS = ("check", "integrals", "cointegrals", "construct", "classify", "kg")


def to_plain(obj):
    """JSON-ready copy: rationals become "p/q" strings, matrices lists of rows."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, AntipodeMap):
        return to_plain(obj.matrix)
    if isinstance(obj, Matrix):
        return [[format_rational(c) for c in row] for row in obj.to_rows()]
    if isinstance(obj, dict):
        return {str(to_plain(k)) if not isinstance(k, str) else k: to_plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_plain(x) for x in obj]
    return str(obj)


def _read_input(options: dict) -> tuple:
    if "text" in options:
        text = options["text"]
        source = options.get("file", "<text>")
    else:
        path = Path(options["file"])
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise InvalidInput(f"cannot read {path}: {exc}") from None
        source = str(path)
    return text, source


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def _verdict_block(v: Verdict, alg) -> dict:
    out = {
        "verdict": v.kind,
        "route": v.route,
        "reason": v.reason,
        "violated_definition": v.definition,
        "witness": v.witness or {},
    }
    if v.is_hopf:
        out["epsilon"] = v.epsilon
        out["antipode"] = v.antipode.matrix
        out["antipode_images"] = {
            f"S({alg.labels[i]})": alg.format(v.antipode.of_basis(i)) for i in range(alg.dim)
        }
    return out


def _combine(a: Verdict, b: Verdict) -> tuple:
    """Cross-check the integral and cointegral routes; returns (kind, note)."""
    if a.kind == b.kind:
        if a.is_hopf and (a.epsilon != b.epsilon or a.antipode.matrix != b.antipode.matrix):
            raise InternalInconsistency("both routes give Hopf but different counit or antipode", stage="agreement")
        return a.kind, "routes agree"
    kinds = {a.kind, b.kind}
    if kinds == {"hopf", "not_hopf"}:
        raise InternalInconsistency(
            f"integral route says {a.kind}, cointegral route says {b.kind}", stage="agreement"
        )
    decided = a if a.kind != "inconclusive" else b
    return decided.kind, f"{decided.route} route decided; the other was inconclusive"


def _check_stages(alg, cm) -> list:
    d = alg.dim
    return [
        {
            "stage": "algebra",
            "concept": "associative algebra with non-degenerate product",
            "dim": d,
            "basis": list(alg.labels),
            "unit": alg.format(alg.unit) if alg.unit is not None else None,
        },
        {
            "stage": "comultiplication",
            "concept": "coassociative homomorphism",
            "coassociative": True,
            "homomorphism": True,
            "unital": is_unital(cm),
            "regularity": regularity_note(cm),
        },
        {
            "stage": "fullness",
            "concept": "legs of the comultiplication",
            "left_leg_dim": len(leg(cm, "left")),
            "right_leg_dim": len(leg(cm, "right")),
        },
        {
            "stage": "galois",
            "concept": "ranks of T1, T2, T1', T2'",
            "dim_tensor": d * d,
            "ranks": {k.value: rank(galois_matrix(cm, k)) for k in GaloisKind},
        },
    ]


def run(command: str, options: dict | None = None) -> dict:
    """Execute one command and return its report as plain data."""
    options = dict(options or {})
    if command not in COMMANDS:
        raise InvalidInput(f"unknown command {command!r}")
    bound = options.get("bound", DEFAULT_COEFFICIENT_BOUND)

    if command == "kg":
        group = make_group(options.get("group", "z"))
        seed = int(options.get("seed", 0))
        samples = int(options.get("samples", 50))
        if samples < 1:
            raise InvalidInput("samples must be positive")
        params = f"kg group={group.name} seed={seed} samples={samples}"
        suite = run_suite(group, seed=seed, samples=samples)
        return to_plain(
            {
                "command": "kg",
                "input": {"parameters": params, "sha256": _digest(params)},
                "stages": [{"stage": "backend", "concept": "finitely supported functions on a group", **suite}],
                "result": "all checks exact" if suite["all_zero"] else "residuals found",
            }
        )

    text, source = _read_input(options)
    alg, cm = load_spec(text)
    report = {
        "command": command,
        "input": {"source": source, "sha256": _digest(text), "dim": alg.dim, "basis": list(alg.labels)},
    }

    if command == "check":
        report["stages"] = _check_stages(alg, cm)
        report["result"] = "valid"
    elif command == "integrals":
        side = options.get("side", "left")
        space = invariant_space(cm, side)
        report["stages"] = [
            {
                "stage": "integrals",
                "concept": f"{side} invariant functionals",
                "side": side,
                "space_dim": len(space),
                "basis": space,
                "gram_ranks": [rank(gram_matrix(alg, f)) for f in space],
                "faithful": [is_faithful(alg, f) for f in space],
            }
        ]
        report["result"] = f"{len(space)}-dimensional space"
    elif command == "cointegrals":
        side = options.get("side", "left")
        space = cointegral_space(cm, side)
        report["stages"] = [
            {
                "stage": "cointegrals",
                "concept": f"{side} cointegrals",
                "side": side,
                "space_dim": len(space),
                "basis": space,
                "elements": [alg.format(h) for h in space],
                "leg_dims": [[len(x) for x in cointegral_legs(cm, h)] for h in space],
                "faithful": [cointegral_faithful(cm, h) for h in space],
            }
        ]
        report["result"] = f"{len(space)}-dimensional space"
    elif command == "construct":
        v = classify(cm, bound)
        report["stages"] = v.stages
        report.update(_verdict_block(v, alg))
    else:
        route = options.get("route", "both")
        if route not in ("integral", "cointegral", "both"):
            raise InvalidInput(f"unknown route {route!r}")
        if route == "integral":
            v = classify(cm, bound)
            report["stages"] = v.stages
            report.update(_verdict_block(v, alg))
        elif route == "cointegral":
            v = classify_discrete(cm, bound)
            report["stages"] = v.stages
            report.update(_verdict_block(v, alg))
        else:
            a = classify(cm, bound)
            b = classify_discrete(cm, bound)
            kind, note = _combine(a, b)
            chosen = a if a.kind == kind else b
            report["stages"] = (
                [dict(s, route="integral") for s in a.stages]
                + [dict(s, route="cointegral") for s in b.stages]
                + [{"stage": "agreement", "concept": "both routes", "integral": a.kind, "cointegral": b.kind, "note": note}]
            )
            report.update(_verdict_block(chosen, alg))
            report["route"] = "both"
    return to_plain(report)


def _text_lines(value, indent: int) -> list:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, dict):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(item)}")
        return lines
    return [f"{pad}{_inline(value)}"]


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "(" + ", ".join(_inline(x) for x in v) + ")"
    if isinstance(v, dict):
        return "{}" if not v else json.dumps(v)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    head = []
    if "verdict" in report:
        head.append(f"VERDICT: {report['verdict']}")
        if report.get("reason"):
            head.append(f"reason: {report['reason']}")
        if report.get("violated_definition") and report["verdict"] != "hopf":
            head.append(f"violated definition: {report['violated_definition']}")
    elif "result" in report:
        head.append(f"RESULT: {report['result']}")
    body = {k: v for k, v in report.items() if k not in ("verdict", "reason", "violated_definition", "result")}
    return "\n".join(head + _text_lines(body, 0)) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mha", description="Exact Hopf-structure checks for finite-dimensional algebras.")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help_: str):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file")
        p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
        return p

    with_file("check", "validate a spec file and report legs and Galois ranks")
    p = with_file("integrals", "solve for invariant functionals")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p = with_file("cointegrals", "solve for cointegrals")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p = with_file("construct", "build counit and antipode from a faithful left integral")
    p.add_argument("--bound", type=int, default=DEFAULT_COEFFICIENT_BOUND)
    p = with_file("classify", "decide whether the input is a Hopf algebra")
    p.add_argument("--route", choices=("integral", "cointegral", "both"), default="both")
    p.add_argument("--bound", type=int, default=DEFAULT_COEFFICIENT_BOUND)
    p = sub.add_parser("kg", help="run the K(G) backend checks")
    p.add_argument("--group", choices=("z", "z2", "dihedral"), default="z")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    options = {k: v for k, v in vars(args).items() if k not in ("command", "format")}
    try:
        report = run(args.command, options)
    except InvalidInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except InternalInconsistency as exc:
        print(f"internal inconsistency at stage {exc.stage or '?'}: {exc}", file=sys.stderr)
        return 3
    except MHAError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    sys.stdout.write(render_report(report, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
