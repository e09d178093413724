"""
Command line interface: every verb writes one JSON report.

Exit codes: 0 on success, 1 when a check fails or a computation hits a
non-generic case, 2 on bad input.
"""
import argparse
import logging
import sys
from typing import Dict, Optional, Sequence

from pydantic import ValidationError

from .degenerate import LimitDirection, PointZ, limit_point, prolonged_phi
from .embedding import (
    Matrix36,
    PointM,
    eval_phi,
    generator_map,
    normalize_matrix,
    phi_from_matrix,
    projection_p4,
)
from .errors import CubicModuliError
from .fiber import BaseField5, reconstruct_fiber
from .models import CheckResult, CommandOptions, Report, VerificationConfig
from .relations import (
    PRINTED_CUBICS,
    cubic_relation_set,
    linear_relation_basis,
    membership,
    reduced_cubics,
)
from .roots import Label, enumerate_group, label_orbit, signed_perm, simple_generators
from .roots.root_system import SIMPLE_ROOTS
from .verification import SECTIONS, VerificationRunner

logger = logging.getLogger(__name__)

VERBS = (
    "eval", "eval-matrix", "orbit", "membership", "fiber", "prolong", "limit",
    "export-relations", "verify", "group", "generator",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="launch.py",
        description="Exact computations with the W(E6)-equivariant embedding of the moduli of marked cubic surfaces",
    )
    parser.add_argument("verb", choices=VERBS)
    parser.add_argument("sections", nargs="*", help=f"verify sections: {', '.join(SECTIONS)} or all")
    parser.add_argument("--x", help="point of M as x1,x2,x3,x4")
    parser.add_argument("--matrix", help="3x6 matrix as 18 rationals, row-major")
    parser.add_argument("--z", help="six points on a conic as z1,z2,z3")
    parser.add_argument("--xi", help="limit direction xi1,xi2,xi3,xi4")
    parser.add_argument("--base", help="base point g1,...,g5 of the projection")
    parser.add_argument("--label", help="coordinate label such as (123,456)")
    parser.add_argument("--name", help="generator s1..s6 or sr")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=25)
    parser.add_argument("--long", action="store_true", help="run exhaustive symbolic checks")
    parser.add_argument("--parallel", action="store_true", help="run checks in worker processes")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--out", help="write the report to this file")
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    return parser


def _require(options: CommandOptions, *fields: str) -> str:
    for name in fields:
        if getattr(options, name) is not None:
            return name
    raise ValueError("One of " + ", ".join(f"--{f}" for f in fields) + " is required")


def cmd_eval(options: CommandOptions) -> Dict:
    point = eval_phi(PointM(options.rationals("x")))
    return {"point": point.to_json(), "projection_p4": projection_p4(point).to_json()}


def cmd_eval_matrix(options: CommandOptions) -> Dict:
    values = options.rationals("matrix")
    matrix = Matrix36([values[0:6], values[6:12], values[12:18]])
    point = phi_from_matrix(matrix)
    return {"point": point.to_json(), "x": [str(v) for v in normalize_matrix(matrix)]}


def cmd_orbit(options: CommandOptions) -> Dict:
    if options.label is None:
        raise ValueError("Option --label is required")
    labels = label_orbit(Label.parse(options.label), SIMPLE_ROOTS)
    return {"size": len(labels), "labels": [str(label) for label in labels]}


def cmd_membership(options: CommandOptions) -> Dict:
    source = _require(options, "x", "z")
    if source == "x":
        point = eval_phi(PointM(options.rationals("x")))
    else:
        point = prolonged_phi(PointZ(options.rationals("z")))
    return {"point": point.to_json(), **membership(point).to_json()}


def cmd_fiber(options: CommandOptions) -> Dict:
    source = _require(options, "base", "x")
    if source == "base":
        base = BaseField5(options.rationals("base"))
    else:
        base = BaseField5.from_point(eval_phi(PointM(options.rationals("x"))))
    return reconstruct_fiber(base).to_json()


def cmd_prolong(options: CommandOptions) -> Dict:
    point = prolonged_phi(PointZ(options.rationals("z")))
    return {"point": point.to_json(), "member": membership(point).member}


def cmd_limit(options: CommandOptions) -> Dict:
    point = limit_point(LimitDirection(options.rationals("xi")))
    return {"point": point.to_json(), "member": membership(point).member}


def cmd_export_relations(options: CommandOptions) -> Dict:
    forms, rank, basis = linear_relation_basis()
    cubics = cubic_relation_set()
    return {
        "linear": [list(form) for form in forms],
        "cubic": [relation.to_json() for relation in cubics],
        "pivot_expressions": basis.to_json(),
        "counts": {
            "linear_orbit": len(forms),
            "linear_rank": rank,
            "cubic_orbit": len(cubics),
            "cubic_independent": len(reduced_cubics()),
        },
        "printed_cubics": {f"cub_{j}": text for j, text in PRINTED_CUBICS.items()},
    }


def cmd_group(options: CommandOptions, config: VerificationConfig) -> Dict:
    gens = simple_generators()
    s6, _ = enumerate_group(gens[:5], config.group_budget)
    with_sr, _ = enumerate_group(gens[:5] + [signed_perm("sr")], config.group_budget)
    order, _ = enumerate_group(gens, config.group_budget)
    return {"order": order, "s6": s6, "s6_with_sr": with_sr}


def cmd_generator(options: CommandOptions) -> Dict:
    if options.name is None:
        raise ValueError("Option --name is required")
    gmap = generator_map(options.name)
    return {
        "name": gmap.name,
        "reflection": gmap.reflection,
        "map": list(gmap.formulas()),
        "cofactor": gmap.cofactor.to_text(),
        "table": gmap.table.to_signed_targets(),
    }


COMMANDS = {
    "eval": cmd_eval,
    "eval-matrix": cmd_eval_matrix,
    "orbit": cmd_orbit,
    "membership": cmd_membership,
    "fiber": cmd_fiber,
    "prolong": cmd_prolong,
    "limit": cmd_limit,
    "export-relations": cmd_export_relations,
    "generator": cmd_generator,
}


def execute(args: argparse.Namespace) -> Report:
    """Run one verb and build its report.

    Raises:
        ValueError: On bad input (including pydantic ValidationError)
        CubicModuliError: On a computational failure outside ``verify``
    """
    config = VerificationConfig(
        seed=args.seed,
        samples=args.samples,
        long_mode=args.long,
        parallel=args.parallel,
        max_workers=args.workers,
    )
    if args.verb == "verify":
        return VerificationRunner(config).run(args.sections or ["all"])
    options = CommandOptions(
        x=args.x, matrix=args.matrix, z=args.z, xi=args.xi, base=args.base,
        label=args.label, name=args.name, sections=args.sections, out=args.out,
    )
    if args.verb == "group":
        result = cmd_group(options, config)
    else:
        result = COMMANDS[args.verb](options)
    used = options.model_dump(exclude_none=True, exclude={"sections"})
    return Report(command=args.verb, options=used, result=result)


def _write(report: Report, out: Optional[str]) -> None:
    text = report.to_json()
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        logger.info("Report written to %s", out)
    else:
        sys.stdout.write(text + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        report = execute(args)
    except ValidationError as e:
        _write(_error_report(args.verb, "ValidationError", str(e)), args.out)
        return 2
    except ValueError as e:
        _write(_error_report(args.verb, type(e).__name__, str(e)), args.out)
        return 2
    except CubicModuliError as e:
        _write(_error_report(args.verb, type(e).__name__, str(e)), args.out)
        return 1
    _write(report, args.out)
    return 0 if report.passed else 1


def _error_report(verb: str, error: str, message: str) -> Report:
    logger.error("%s: %s", error, message)
    check = CheckResult(name=verb, status="fail", details={"error": error, "message": message})
    return Report(command=verb, checks=[check])
