"""
Verification runner: named checks grouped in sections, run sequentially or
fanned out to worker processes.
"""
import logging
import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor, as_completed
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..algebra import QMatrix
from ..degenerate import (
    conic_vanishes,
    generic_limit,
    limit_constancy,
    match_products,
    orbit_membership,
    prolongation_check,
    random_z_points,
    span_check,
    verify_prolong_table,
)
from ..embedding import (
    MAP_NAMES,
    column_transposition_check,
    coxeter_relation_holds,
    eval_phi,
    generator_map,
    matrix_from_point,
    phi_from_matrix,
    resolve_association_reading,
    sample_points,
    verify_equivariance,
)
from ..embedding.generators import coxeter_order
from ..embedding.matrix import matrix_coordinates
from ..errors import CubicModuliError, NonGeneric
from ..fiber import (
    BaseField5,
    build_qq_dd,
    divisibility_check,
    fiber_round_trip,
    point_on_quadrics,
    reconstruct_fiber,
)
from ..models import CheckResult, Report, VerificationConfig
from ..relations import (
    check_printed_cubics,
    cubic_relation_set,
    linear_relation_basis,
    membership,
    reduced_cubics,
    sample_vanishing,
    span_is_stable,
)
from ..roots import (
    Label,
    build_label_catalog,
    build_root_catalog,
    enumerate_group,
    label_orbit,
    random_elements,
    reflection_images,
    signed_perm,
    simple_generators,
    split_projection_order,
)
from ..roots.root_system import SIMPLE_ROOTS

logger = logging.getLogger(__name__)

# A check returns (passed, details); passed is None when the check is skipped
Outcome = Tuple[Optional[bool], Dict]

SECTIONS = ("roots", "group", "labels", "equivariance", "embedding", "linear", "cubic", "fiber", "degenerate")

X0 = (2, 3, 4, 5)

# Lower bounds on sample counts, whatever --samples says
MIN_ROUND_TRIPS = 50
MIN_EMBEDDING_POINTS = 100


def _roots_catalog(config: VerificationConfig) -> Outcome:
    catalog = build_root_catalog()
    norms = all(v.inner(v) == 2 for v in catalog.values())
    return len(catalog) == 36 and norms, {"roots": len(catalog)}


# Printed action of s_123 on roots modulo signs
S123_ACTION = {"r12": "r12", "r14": "r234", "r56": "r56", "r145": "r145", "r": "r456"}


def _roots_reflection_table(config: VerificationConfig) -> Outcome:
    images = reflection_images("r123")
    wrong = sorted(a for a, b in S123_ACTION.items() if images[a] != b)
    sr = reflection_images("r")
    fixed_pairs = all(sr[f"r{i}{j}"] == f"r{i}{j}" for i in range(1, 7) for j in range(i + 1, 7))
    return not wrong and fixed_pairs, {"mismatches": wrong, "sr_fixes_pairs": fixed_pairs}


def _group_coxeter(config: VerificationConfig) -> Outcome:
    names = MAP_NAMES[:6]
    perms = {name: signed_perm(name) for name in names}
    wrong = []
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            if (perms[a] * perms[b]).order() != coxeter_order(a, b):
                wrong.append(f"{a}{b}")
    return not wrong, {"pairs": 15, "failures": wrong}


def _group_subgroups(config: VerificationConfig) -> Outcome:
    gens = simple_generators()[:5]
    order, elements = enumerate_group(gens, config.group_budget)
    split = split_projection_order(elements)
    with_sr, _ = enumerate_group(gens + [signed_perm("sr")], config.group_budget)
    return (order, split, with_sr) == (720, 720, 1440), {"s6": order, "split_image": split, "with_sr": with_sr}


def _group_order(config: VerificationConfig) -> Outcome:
    order, _ = enumerate_group(simple_generators(), config.group_budget)
    return order == 51840, {"value": order}


def _labels_catalog(config: VerificationConfig) -> Outcome:
    catalog = build_label_catalog()
    splits = sum(1 for label in catalog if label.kind == "split")
    distinct = len(set(catalog.values()))
    return (len(catalog), distinct, splits) == (40, 40, 10), {"labels": len(catalog), "splits": splits}


def _labels_transitive(config: VerificationConfig) -> Outcome:
    size = len(label_orbit(Label.parse("(123,456)"), SIMPLE_ROOTS))
    return size == 40, {"orbit": size}


def _labels_printed_tables(config: VerificationConfig) -> Outcome:
    wrong = [name for name in MAP_NAMES if generator_map(name).table != signed_perm(generator_map(name).reflection)]
    return not wrong, {"mismatches": wrong}


def _equivariance(name: str) -> Callable[[VerificationConfig], Outcome]:
    def check(config: VerificationConfig) -> Outcome:
        report = verify_equivariance(name)
        return report.passed, report.model_dump(exclude={"signed_targets"})
    return check


def _equivariance_coxeter(config: VerificationConfig) -> Outcome:
    names = MAP_NAMES[:6]
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    wrong = [f"{a}{b}" for a, b in pairs if not coxeter_relation_holds(a, b)]
    return not wrong, {"pairs": len(pairs), "failures": wrong}


def _embedding_matrix_form(config: VerificationConfig) -> Outcome:
    points = sample_points(np.random.RandomState(config.seed), max(config.samples, MIN_EMBEDDING_POINTS))
    wrong = [str(p) for p in points if phi_from_matrix(matrix_from_point(p)) != eval_phi(p)]
    return not wrong, {"points": len(points), "failures": wrong}


def _embedding_scaling_law(config: VerificationConfig) -> Outcome:
    rng = np.random.RandomState(config.seed)
    a = matrix_from_point(X0)
    base = matrix_coordinates(a)
    checked, failures = 0, 0
    while checked < min(config.samples, 20):
        g = [[int(v) for v in row] for row in rng.randint(-3, 4, size=(3, 3))]
        h = [int(v) for v in rng.randint(1, 5, size=6)]
        det_g = QMatrix(g).det()
        if det_g == 0:
            continue
        det_h = Fraction(int(np.prod(h)))
        moved = matrix_coordinates(a.left_multiply(g).scale_columns(h))
        factor = det_g ** 6 * det_h ** 3
        if moved != [factor * v for v in base]:
            failures += 1
        checked += 1
    return failures == 0, {"samples": checked, "failures": failures}


def _embedding_columns(config: VerificationConfig) -> Outcome:
    points = sample_points(np.random.RandomState(config.seed), 3)
    results = column_transposition_check(points)
    return all(results.values()), results


def _embedding_association(config: VerificationConfig) -> Outcome:
    points = sample_points(np.random.RandomState(config.seed), 3)
    results = resolve_association_reading(points)
    return all(results["product"].values()), results


def _embedding_injectivity(config: VerificationConfig) -> Outcome:
    points = sample_points(np.random.RandomState(config.seed + 1), max(config.samples, MIN_EMBEDDING_POINTS))
    images: Dict = {}
    for p in points:
        images.setdefault(eval_phi(p), set()).add(p)
    collisions = sum(1 for ps in images.values() if len(ps) > 1)
    return collisions == 0, {"points": len(set(points)), "collisions": collisions}


def _linear_rank(config: VerificationConfig) -> Outcome:
    forms, rank, _ = linear_relation_basis()
    return rank == 30, {"value": rank, "orbit": len(forms)}


def _linear_pivots(config: VerificationConfig) -> Outcome:
    _, _, basis = linear_relation_basis()
    mismatches = basis.printed_mismatches()
    return not mismatches, {"mismatches": mismatches}


def _cubic_count(config: VerificationConfig) -> Outcome:
    return len(reduced_cubics()) == 30, {"value": len(reduced_cubics()), "orbit": len(cubic_relation_set())}


def _cubic_printed(config: VerificationConfig) -> Outcome:
    results = check_printed_cubics()
    wrong = sorted(j for j, r in results.items() if not (r["in_span"] and r["vanishes"]))
    return not wrong, {"printed": len(results), "failures": wrong}


def _cubic_orbit(config: VerificationConfig) -> Outcome:
    if config.long_mode:
        relations = cubic_relation_set()
        failed = sum(1 for r in relations if not r.vanishes_on_embedding())
        return failed == 0, {"checked": len(relations), "failed": failed}
    result = sample_vanishing(config.samples, config.seed)
    return result["failed"] == 0, result


def _cubic_stable(config: VerificationConfig) -> Outcome:
    if not config.long_mode:
        return None, {"reason": "long mode only"}
    results = span_is_stable()
    return all(results.values()), {"generators": len(results)}


def _fiber_sample_point(config: VerificationConfig) -> Outcome:
    solution = reconstruct_fiber(BaseField5((2, -1, -2, -2, -8)))
    expected = {eval_phi(X0), eval_phi(generator_map("sr")(list(X0)))}
    return set(solution.points) == expected and bool(solution.relations_satisfied), solution.to_json()


def _fiber_round_trips(config: VerificationConfig) -> Outcome:
    rng = np.random.RandomState(config.seed)
    target = max(config.samples, MIN_ROUND_TRIPS)
    checked, skipped = 0, 0
    mismatched, off_quadrics, distinctness = [], [], []
    while checked < target and skipped < target:
        p = sample_points(rng, 1)[0]
        try:
            result = fiber_round_trip(p)
            on_quadrics = point_on_quadrics(eval_phi(p))
        except NonGeneric:
            skipped += 1
            continue
        checked += 1
        label = [str(v) for v in p]
        if not result["matches"]:
            mismatched.append(label)
        if not all(on_quadrics.values()):
            off_quadrics.append(label)
        if result["distinct"] != result["expected_distinct"]:
            distinctness.append(label)
    passed = checked == target and not (mismatched or off_quadrics or distinctness)
    return passed, {
        "checked": checked,
        "skipped": skipped,
        "mismatched": mismatched,
        "off_quadrics": off_quadrics,
        "distinctness": distinctness,
    }


def _fiber_divisibility(config: VerificationConfig) -> Outcome:
    result = divisibility_check(symbolic=config.long_mode, samples=config.samples, seed=config.seed)
    expected = 1 if config.long_mode else config.samples
    return result["bases"] == expected and result["divisible"] == expected, result


def _fiber_cube_list(config: VerificationConfig) -> Outcome:
    if not config.long_mode:
        return None, {"reason": "long mode only"}
    data = build_qq_dd(BaseField5((2, -1, -2, -2, -8)))
    summary = data.summary()
    return not data.pair_failures and data.derived_dd_matches, summary


def _degenerate_conic(config: VerificationConfig) -> Outcome:
    return conic_vanishes(), {}


def _degenerate_table(config: VerificationConfig) -> Outcome:
    return True, verify_prolong_table()


def _degenerate_products(config: VerificationConfig) -> Outcome:
    matches = match_products()
    dimension = span_check()
    return len(matches) == 30, {"rows": len(matches), "span_dimension": dimension}


def _degenerate_prolongation(config: VerificationConfig) -> Outcome:
    result = prolongation_check(config.samples, config.seed)
    passed = result["identity_failures"] == 0 and result["outside_variety"] == 0
    return passed, result


def _degenerate_orbit(config: VerificationConfig) -> Outcome:
    rng = np.random.RandomState(config.seed)
    z = random_z_points(rng, 1)[0]
    result = orbit_membership(z, random_elements(rng, min(config.samples, 10)))
    return result["failed"] == 0, dict(result, z=[str(v) for v in z])


def _degenerate_limit(config: VerificationConfig) -> Outcome:
    result = limit_constancy(10, config.seed)
    limit = generic_limit()
    inside = membership(limit.point).member
    return result["differing"] == 0 and inside, dict(result, limit=limit.to_json(), in_variety=inside)


CHECKS: Dict[str, Callable[[VerificationConfig], Outcome]] = {
    "roots.catalog": _roots_catalog,
    "roots.reflection_table": _roots_reflection_table,
    "group.coxeter": _group_coxeter,
    "group.subgroups": _group_subgroups,
    "group.order": _group_order,
    "labels.catalog": _labels_catalog,
    "labels.transitive": _labels_transitive,
    "labels.printed_tables": _labels_printed_tables,
    **{f"equivariance.{name}": _equivariance(name) for name in MAP_NAMES},
    "equivariance.coxeter": _equivariance_coxeter,
    "embedding.matrix_form": _embedding_matrix_form,
    "embedding.scaling_law": _embedding_scaling_law,
    "embedding.column_transpositions": _embedding_columns,
    "embedding.association": _embedding_association,
    "embedding.injectivity": _embedding_injectivity,
    "linear.rank": _linear_rank,
    "linear.pivot_expressions": _linear_pivots,
    "cubic.count": _cubic_count,
    "cubic.printed": _cubic_printed,
    "cubic.orbit_vanishing": _cubic_orbit,
    "cubic.span_stable": _cubic_stable,
    "fiber.sample_point": _fiber_sample_point,
    "fiber.round_trips": _fiber_round_trips,
    "fiber.divisibility": _fiber_divisibility,
    "fiber.cube_list": _fiber_cube_list,
    "degenerate.conic": _degenerate_conic,
    "degenerate.prolong_table": _degenerate_table,
    "degenerate.minor_products": _degenerate_products,
    "degenerate.prolongation": _degenerate_prolongation,
    "degenerate.orbit": _degenerate_orbit,
    "degenerate.limit": _degenerate_limit,
}


def checks_for(sections: Sequence[str]) -> List[str]:
    """Names of the checks in the given sections ("all" selects every section).

    Raises:
        ValueError: If a section name is unknown
    """
    sections = list(sections) or ["all"]
    if "all" in sections:
        sections = list(SECTIONS)
    unknown = [s for s in sections if s not in SECTIONS]
    if unknown:
        raise ValueError(f"Unknown verification section(s) {unknown}: choose from {SECTIONS + ('all',)}")
    return [name for name in CHECKS if name.split(".")[0] in sections]


def run_check(name: str, config_dict: dict) -> dict:
    """Run one named check - used for multiprocessing.

    Args:
        name: Check name such as "linear.rank"
        config_dict: Verification configuration as dictionary

    Returns:
        The check result as dictionary
    """
    config = VerificationConfig(**config_dict)
    logger.info("Running check: %s", name)
    try:
        passed, details = CHECKS[name](config)
    except CubicModuliError as e:
        logger.warning("Check %s failed: %s", name, e)
        details = {"error": type(e).__name__, "message": str(e)}
        index = getattr(e, "index", None)
        if index is not None:
            details["index"] = index
        return CheckResult(name=name, status="fail", details=details).model_dump()
    status = "skipped" if passed is None else ("pass" if passed else "fail")
    return CheckResult(name=name, status=status, details=_plain(details)).model_dump()


def _plain(value):
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set)):
        return [_plain(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


# Derived constant -> (check, detail key) it is read from
DERIVED = {
    "group_order": ("group.order", "value"),
    "s6_order": ("group.subgroups", "s6"),
    "s6_with_sr_order": ("group.subgroups", "with_sr"),
    "label_orbit": ("labels.transitive", "orbit"),
    "linear_orbit": ("linear.rank", "orbit"),
    "linear_rank": ("linear.rank", "value"),
    "cubic_orbit": ("cubic.count", "orbit"),
    "cubic_independent": ("cubic.count", "value"),
    "span_dimension": ("degenerate.minor_products", "span_dimension"),
}


def derived_constants(checks: Sequence[CheckResult]) -> Dict[str, object]:
    """Constants found by the checks that ran, keyed as in ``DERIVED``."""
    details = {c.name: c.details for c in checks}
    derived = {}
    for key, (name, field) in DERIVED.items():
        if field in details.get(name, {}):
            derived[key] = details[name][field]
    return derived


class VerificationRunner:
    """Runs the named checks of one or more sections and assembles a report."""

    def __init__(self, config: VerificationConfig = None):
        """Initialize the runner.

        Args:
            config: Verification settings (defaults to VerificationConfig())
        """
        self.config = config or VerificationConfig()
        self.max_workers = self.config.max_workers or mp.cpu_count()

    def run(self, sections: Sequence[str] = ("all",)) -> Report:
        """Run every check of the sections.

        Returns:
            Report with checks ordered by name
        """
        names = checks_for(sections)
        if self.config.parallel and len(names) > 1:
            results = self._run_parallel(names)
        else:
            results = self._run_sequential(names)
        report = Report(
            command="verify",
            options={"sections": list(sections), **self.config.model_dump()},
            checks=results,
            derived=derived_constants(results),
        )
        failed = [c.name for c in report.checks if c.status == "fail"]
        logger.info("Verification finished: %d checks, %d failed", len(report.checks), len(failed))
        return report.sorted()

    def _run_parallel(self, names: Sequence[str]) -> List[CheckResult]:
        """Run checks in worker processes."""
        config_dict = self.config.model_dump()
        results = []
        with ProcessPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_name = {executor.submit(run_check, name, config_dict): name for name in names}
            for future in as_completed(future_to_name):
                name = future_to_name[future]
                try:
                    results.append(CheckResult(**future.result()))
                except Exception as e:
                    logger.error("Check %s crashed in a worker: %s", name, e)
                    results.append(CheckResult(name=name, status="fail",
                                               details={"error": type(e).__name__, "message": str(e)}))
        return results

    def _run_sequential(self, names: Sequence[str]) -> List[CheckResult]:
        """Run checks one after another in this process."""
        return [CheckResult(**run_check(name, self.config.model_dump())) for name in names]
