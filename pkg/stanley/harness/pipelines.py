"""
Verification pipelines, written as flows of steps over a :class:`Run`.

Every step that records checks is guarded by :data:`checked`, which raises
:class:`~stanley.exceptions.TheoremViolation` on the first failed check, so a
pipeline stops at the first counterexample. Caps exceeded inside a step skip
that computation with a warning and leave the rest of the pipeline running.
"""

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from stanley._bits import indices_of, popcount
from stanley.clutters import clutter_of, complement_graph, graph_is_chordal, is_chordal
from stanley.config import Limits
from stanley.depth import depth_quotient, projective_dimension, torsion_check
from stanley.exceptions import CapExceededError, TheoremViolation
from stanley.flow import Transformer, condition, ensure, transformer
from stanley.harness.checks import applies_to, elimination_pd_drop, main_induction_chain
from stanley.harness.instances import (
    WORKED_VALUES,
    Instance,
    Source,
    worked_examples,
)
from stanley.harness.io import BundleModel
from stanley.harness.report import Check, InstanceReport, VerificationReport, Violation
from stanley.ideals import (
    MonomialPrime,
    SqfIdeal,
    colon_by_variable,
    eliminate_variable,
    monomial_localization,
)
from stanley.linear_quotients import (
    LqOrder,
    check_lq_order,
    chordal_lq_order,
    depth_from_lq,
    find_lq_order,
)
from stanley.schmitt_vogel import (
    SvResult,
    SvWitness,
    check_sv_witness,
    sv_number,
    transport_eliminate,
    transport_localize,
)
from stanley.sdepth import PosetKind, SdepthResult, build_poset, sdepth

__all__ = [
    "Run",
    "InstanceOutcome",
    "PIPELINES",
    "verify_instance",
    "sweep",
    "verify_main",
    "verify_smain",
    "verify_linres",
    "run_worked_examples",
    "replay",
]

logger = logging.getLogger(__name__)

_T = TypeVar("_T")


@dataclass
class Run:
    """The state of one instance as it passes through a pipeline."""

    command: str
    instance: Instance
    limits: Limits
    trim: bool = False
    report: InstanceReport = field(init=False)
    lq: Optional[LqOrder] = None
    sv: Optional[SvResult] = None
    linear_resolution: Optional[bool] = None

    def __post_init__(self):
        ideal = self.instance.ideal
        self.report = InstanceReport(
            id=self.instance.id,
            command=self.command,
            n=ideal.n,
            m=popcount(ideal.support_mask) if self.trim else ideal.n,
            d=self.instance.d,
            generators=ideal.supports(),
        )

    @property
    def ideal(self) -> SqfIdeal:
        return self.instance.ideal

    @property
    def m(self) -> int:
        return self.report.m

    def record(self, check: Check) -> None:
        self.report.checks.append(check)
        logger.debug("%s: %s", self.instance.id, check)

    def skip(self, what: str, reason: str) -> None:
        self.report.skipped.append(f"{what}: {reason}")
        logger.warning("%s: skipped %s: %s", self.instance.id, what, reason)

    def attempt(self, what: str, compute: Callable[[], _T]) -> Optional[_T]:
        try:
            return compute()
        except CapExceededError as error:
            self.skip(what, str(error))
            return None


def no_failed_check(run: Run) -> None:
    for check in run.report.checks:
        if not check.holds:
            raise TheoremViolation(check, run.instance)


checked = ensure(outcome=[no_failed_check])


def _record_sdepth(run: Run, name: str, result: SdepthResult) -> None:
    run.report.certificates[name] = result.certificate.as_index_lists()
    poset = build_poset(run.ideal, result.kind, result.active)
    run.record(
        Check.claim(
            f"{name}_certificate",
            result.certificate.is_partition_of(poset),
            result.certificate.first_defect(poset),
        )
    )
    dimension = result.certificate.min_dimension
    run.record(
        Check.equal(
            f"{name}_certificate_dimension",
            dimension if dimension is not None else -1,
            result.value,
        )
    )


@checked
@transformer
def certify_chordality(run: Run) -> Run:
    clutter = run.instance.clutter
    if clutter is None:
        return run
    certificate = run.attempt(
        "chordality", lambda: is_chordal(clutter, limits=run.limits)
    )
    if certificate is None:
        return run
    run.report.chordal = bool(certificate)
    run.report.certificates["chordality"] = {
        "verdict": certificate.verdict.value,
        "minors": len(certificate.simplicial),
        "witness": certificate.witness.as_dict() if certificate.witness else None,
    }
    replays = certificate.recheck(clutter)
    run.record(Check.claim("chordality_certificate_replays", replays))
    if run.instance.source is Source.GENERATED:
        run.record(Check.claim("generated_clutter_is_chordal", bool(certificate)))

    is_graph = all(popcount(e) == 2 for e in clutter.edges)
    if clutter.edges and is_graph:
        run.record(
            Check.claim(
                "agrees_with_graph_chordality",
                bool(certificate) == graph_is_chordal(clutter),
            )
        )
        if run.instance.d == 2 and certificate:
            complement = complement_graph(clutter_of(run.ideal))
            run.record(
                Check.claim("froberg_complement_chordal", graph_is_chordal(complement))
            )
    return run


@transformer
def oracle_depth(run: Run) -> Run:
    pd = run.attempt(
        "depth oracle", lambda: projective_dimension(run.ideal, limits=run.limits)
    )
    if pd is None:
        return run
    run.report.depth_oracle = run.m - pd.value
    run.report.certificates["pd_witness"] = {
        "pd": pd.value,
        "sigma": list(indices_of(pd.sigma)),
        "homology_dimension": pd.homology_dimension,
    }
    run.report.torsion_free = torsion_check(run.ideal, limits=run.limits)
    return run


@checked
@transformer
def lq_depth(run: Run) -> Run:
    instance = run.instance
    clutter, d = instance.clutter, instance.d
    if (
        run.lq is None
        and clutter is not None
        and d is not None
        and run.report.chordal
        and not run.ideal.is_zero
    ):
        if not applies_to(clutter, d):
            run.skip("linear quotients", f"an edge has fewer than {d} vertices")
            return run
        run.lq = run.attempt(
            "linear quotients",
            lambda: chordal_lq_order(clutter, d, limits=run.limits),
        )
    lq = run.lq
    if lq is None:
        return run

    run.report.certificates["lq_order"] = {
        "order": [list(u.indices) for u in lq.order],
        "colon_counts": list(lq.colon_counts),
    }
    run.record(
        Check.claim("lq_order_replays", bool(check_lq_order(run.ideal, list(lq.order))))
    )
    run.report.depth_lq = depth_from_lq(lq, run.m)
    if run.report.depth_oracle is not None:
        run.record(
            Check.equal(
                "lq_depth_matches_oracle", run.report.depth_lq, run.report.depth_oracle
            )
        )
    return run


@checked
@transformer
def quotient_sdepth(run: Run) -> Run:
    if run.ideal.is_unit:
        run.skip("sdepth of S/I", "unit ideal")
        return run
    result = run.attempt(
        "sdepth of S/I",
        lambda: sdepth(run.ideal, PosetKind.QUOTIENT, run.m, limits=run.limits),
    )
    if result is not None:
        run.report.sdepth_quotient = result.value
        _record_sdepth(run, "sdepth_quotient", result)
    return run


@checked
@transformer
def ideal_sdepth(run: Run) -> Run:
    if run.ideal.is_zero or run.ideal.is_unit:
        return run
    result = run.attempt(
        "sdepth of I",
        lambda: sdepth(run.ideal, PosetKind.IDEAL, run.m, limits=run.limits),
    )
    if result is not None:
        run.report.sdepth_ideal = result.value
        _record_sdepth(run, "sdepth_ideal", result)
    return run


@checked
@transformer
def stanley_inequalities(run: Run) -> Run:
    """
    :math:`\\mathrm{sdepth}(S/I) \\geq \\mathrm{depth}(S/I)`, and
    :math:`\\mathrm{sdepth}(I) \\geq \\mathrm{depth}(I)` when :math:`I` has linear
    quotients.
    """
    report = run.report
    if report.depth_oracle is None:
        return run
    if report.sdepth_quotient is not None:
        run.record(
            Check.at_least(
                "sdepth_quotient_at_least_depth",
                report.sdepth_quotient,
                report.depth_oracle,
            )
        )
    if report.sdepth_ideal is not None and run.lq is not None:
        run.record(
            Check.at_least(
                "sdepth_ideal_at_least_depth",
                report.sdepth_ideal,
                report.depth_oracle + 1,
                "linear quotients",
            )
        )
    return run


@checked
@transformer
def induction_at_simplicial_vertex(run: Run) -> Run:
    clutter, d = run.instance.clutter, run.instance.d
    if clutter is None or d is None or not run.report.chordal:
        return run
    if not applies_to(clutter, d):
        return run
    chain = run.attempt(
        "induction chain", lambda: main_induction_chain(clutter, d, limits=run.limits)
    )
    eliminated = run.attempt(
        "elimination", lambda: elimination_pd_drop(clutter, d, limits=run.limits)
    )
    for check in (chain or []) + (eliminated or []):
        run.record(check)
    return run


@checked
@transformer
def froberg_criterion(run: Run) -> Run:
    """
    Fröberg's criterion on the polarization: the complement of its graph is
    chordal exactly when the polarized ideal has linear quotients.
    """
    general = run.instance.general or ()
    if not general or any(monomial.degree != 2 for monomial in general):
        run.linear_resolution = False
        run.skip("linear resolution", "not a quadratic monomial ideal")
        return run
    complement_chordal = graph_is_chordal(complement_graph(clutter_of(run.ideal)))
    run.lq = find_lq_order(run.ideal)
    run.linear_resolution = complement_chordal
    run.report.certificates["froberg"] = {"complement_chordal": complement_chordal}
    run.record(
        Check.claim(
            "froberg_agrees_with_linear_quotients",
            complement_chordal == (run.lq is not None),
        )
    )
    return run


@condition
def has_linear_resolution(run: Run) -> bool:
    return bool(run.linear_resolution)


@condition
def is_general(run: Run) -> bool:
    return run.instance.general is not None


@transformer
def without_linear_resolution(run: Run) -> Run:
    logger.info("%s: no linear resolution, nothing to verify", run.instance.id)
    return run


@checked
@transformer
def schmitt_vogel_number(run: Run) -> Run:
    if run.ideal.is_zero:
        run.skip("sv", "zero ideal")
        return run
    result = run.attempt("sv", lambda: sv_number(run.ideal, limits=run.limits))
    if result is None:
        return run
    run.sv = result
    run.report.sv_restricted = result.value
    run.report.certificates["sv_witness"] = result.witness.as_index_lists()
    check = check_sv_witness(run.ideal, result.witness)
    run.record(Check.claim("sv_witness_valid", bool(check), check.describe()))
    return run


@checked
@transformer
def sv_bounds(run: Run) -> Run:
    """
    :math:`\\mathrm{sdepth}(S/I) \\geq m - sv` and
    :math:`\\mathrm{sdepth}(I) \\geq m - sv + 1`.
    """
    if run.sv is None:
        return run
    r = run.sv.value
    if run.report.sdepth_quotient is not None:
        run.record(
            Check.at_least("sv_bound_quotient", run.report.sdepth_quotient, run.m - r)
        )
    if run.report.sdepth_ideal is not None:
        run.record(
            Check.at_least("sv_bound_ideal", run.report.sdepth_ideal, run.m - r + 1)
        )
    return run


def _localized(run: Run, witness: SvWitness, prime: MonomialPrime, name: str) -> None:
    image = monomial_localization(run.ideal, prime)
    moved = transport_localize(run.ideal, witness, prime)
    check = check_sv_witness(image, moved)
    run.record(Check.claim(f"{name}_witness", bool(check), check.describe()))
    run.record(Check.at_least(f"{name}_levels", witness.r, moved.r))


@checked
@transformer
def witness_transports(run: Run) -> Run:
    """
    Push the optimal witness through the colon by every used variable, through
    the prime of the two lowest used variables, and through the elimination of
    a variable of its first level.
    """
    if run.sv is None or run.ideal.is_unit:
        return run
    ideal, witness = run.ideal, run.sv.witness
    used = indices_of(ideal.support_mask)
    for i in used:
        prime = MonomialPrime.from_indices(ideal.n, [i])
        run.record(
            Check.claim(
                f"colon_is_localization_x{i}",
                colon_by_variable(ideal, i) == monomial_localization(ideal, prime),
            )
        )
        _localized(run, witness, prime, f"colon_x{i}")
    if len(used) >= 2:
        pair = MonomialPrime.from_indices(ideal.n, used[:2])
        _localized(run, witness, pair, f"localized_x{used[0]}_x{used[1]}")

    i, reduced = transport_eliminate(ideal, witness)
    check = check_sv_witness(eliminate_variable(ideal, i), reduced)
    run.record(Check.claim(f"eliminated_x{i}_witness", bool(check), check.describe()))
    run.record(Check.at_least(f"eliminated_x{i}_levels", witness.r - 1, reduced.r))
    return run


@checked
@transformer
def free_variable_shift(run: Run) -> Run:
    """With unused variables trimmed, one extra free variable adds one to each value."""
    if not run.trim or run.ideal.is_unit:
        return run
    wider = run.m + 1

    def shifted():
        depth = depth_quotient(run.ideal, run.m, limits=run.limits)
        checks = [
            Check.equal(
                "free_variable_depth",
                depth_quotient(run.ideal, wider, limits=run.limits),
                depth + 1,
            )
        ]
        values = [("quotient", PosetKind.QUOTIENT, run.report.sdepth_quotient)]
        if not run.ideal.is_zero:
            values.append(("ideal", PosetKind.IDEAL, run.report.sdepth_ideal))
        for name, kind, value in values:
            if value is None:
                continue
            result = sdepth(run.ideal, kind, wider, limits=run.limits)
            checks.append(
                Check.equal(f"free_variable_sdepth_{name}", result.value, value + 1)
            )
        return checks

    for check in run.attempt("free variable shift", shifted) or []:
        run.record(check)
    return run


@checked
@transformer
def printed_values(run: Run) -> Run:
    expected = WORKED_VALUES.get(run.instance.id)
    if expected is None:
        return run
    witness = SvWitness.from_supports(run.ideal.n, expected.witness)
    check = check_sv_witness(run.ideal, witness)
    run.record(Check.claim("printed_witness_valid", bool(check), check.describe()))
    run.record(Check.equal("printed_witness_levels", witness.r, expected.sv))
    if run.sv is not None:
        run.record(Check.equal("sv_matches_printed", run.sv.value, expected.sv))
    run.record(
        Check.equal(
            "quotient_bound_matches_printed",
            run.m - expected.sv,
            expected.quotient_bound,
        )
    )
    run.record(
        Check.equal(
            "ideal_bound_matches_printed", run.m - expected.sv + 1, expected.ideal_bound
        )
    )
    return run


linres_route = froberg_criterion >> has_linear_resolution.Then(
    oracle_depth >> lq_depth >> quotient_sdepth >> ideal_sdepth >> stanley_inequalities
).Else(without_linear_resolution)

main_route = (
    certify_chordality
    >> oracle_depth
    >> lq_depth
    >> quotient_sdepth
    >> ideal_sdepth
    >> stanley_inequalities
    >> induction_at_simplicial_vertex
)

smain_route = (
    schmitt_vogel_number
    >> quotient_sdepth
    >> ideal_sdepth
    >> sv_bounds
    >> witness_transports
    >> free_variable_shift
)

PIPELINES: dict[str, Transformer[Run, Run]] = {
    "main": is_general.Then(linres_route).Else(main_route),
    "smain": smain_route,
    "linres": linres_route,
    "examples": smain_route >> printed_values,
}


@dataclass(frozen=True)
class InstanceOutcome:
    report: InstanceReport
    violation: Optional[Check] = None


def verify_instance(
    command: str, instance: Instance, limits: Limits, trim: bool = False
) -> InstanceOutcome:
    """Run one instance through the pipeline of :code:`command`."""
    run = Run(command, instance, limits, trim)
    try:
        PIPELINES[command](run)
    except TheoremViolation as violation:
        logger.error("%s: %s", instance.id, violation.check)
        return InstanceOutcome(run.report, violation.check)
    logger.info(
        "%s: %d checks, %d skipped",
        instance.id,
        len(run.report.checks),
        len(run.report.skipped),
    )
    return InstanceOutcome(run.report)


def _verify_task(task: tuple[str, Instance, Limits, bool]) -> InstanceOutcome:
    return verify_instance(*task)


def _write_bundle(
    directory: Path,
    command: str,
    instance: Instance,
    outcome: InstanceOutcome,
    limits: Limits,
    trim: bool,
) -> Path:
    assert outcome.violation is not None
    bundle = BundleModel.from_domain(
        command,
        instance,
        outcome.violation.model_dump(mode="json"),
        outcome.report.certificates,
        limits,
        trim,
    )
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"bundle-{instance.id}.json"
    path.write_text(
        json.dumps(bundle.model_dump(mode="json"), sort_keys=True, indent=2) + "\n",
        encoding="utf-8",
    )
    logger.error("counterexample bundle written to %s", path)
    return path


def sweep(
    tasks: Iterable[tuple[str, Instance]],
    *,
    limits: Optional[Limits] = None,
    trim: bool = False,
    jobs: int = 1,
    seed: Optional[int] = None,
    bundle_dir: "Path | str | None" = None,
) -> VerificationReport:
    """
    Verify every :code:`(command, instance)` pair in instance-id order and stop
    at the first failed check, writing a reproduction bundle to
    :code:`bundle_dir` when one is given.

    With :code:`jobs > 1` instances run in a process pool; outcomes are merged
    in the same order, so the report does not depend on :code:`jobs`.
    """
    limits = limits or Limits.default()
    ordered = sorted(tasks, key=lambda task: task[1].id)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes: Sequence[InstanceOutcome] = list(
                pool.map(
                    _verify_task,
                    [(command, inst, limits, trim) for command, inst in ordered],
                )
            )
    else:
        outcomes = []
        for command, instance in ordered:
            outcome = verify_instance(command, instance, limits, trim)
            outcomes.append(outcome)
            if outcome.violation is not None:
                break

    report = VerificationReport(seed=seed, limits=limits, trim=trim)
    for (command, instance), outcome in zip(ordered, outcomes):
        report.instances.append(outcome.report)
        if outcome.violation is None:
            continue
        bundle = None
        if bundle_dir is not None:
            path = _write_bundle(
                Path(bundle_dir), command, instance, outcome, limits, trim
            )
            bundle = str(path)
        report.violation = Violation(
            instance=instance.id, check=outcome.violation, bundle=bundle
        )
        break
    return report


def verify_main(instances: Iterable[Instance], **options) -> VerificationReport:
    """
    :math:`\\mathrm{sdepth}(S/I) \\geq \\mathrm{depth}(S/I)` for edge ideals of
    d-complements of chordal clutters, with the depth cross-checked against the
    linear-quotient formula and one induction step replayed. Instances carrying
    a general quadratic ideal go through :func:`verify_linres`'s pipeline.
    """
    return sweep((("main", instance) for instance in instances), **options)


def verify_smain(instances: Iterable[Instance], **options) -> VerificationReport:
    """Both Schmitt-Vogel lower bounds for Stanley depth, plus witness transports."""
    return sweep((("smain", instance) for instance in instances), **options)


def verify_linres(instances: Iterable[Instance], **options) -> VerificationReport:
    return sweep((("linres", instance) for instance in instances), **options)


def run_worked_examples(**options) -> VerificationReport:
    """
    The two worked ideals end to end: the Schmitt-Vogel pipeline plus the
    printed witnesses, values and bounds, compared exactly.
    """
    return sweep((("examples", instance) for instance in worked_examples()), **options)


def replay(path: "Path | str") -> VerificationReport:
    """Re-run the failing instance of a bundle with the settings it was found with."""
    bundle = BundleModel.model_validate_json(Path(path).read_text(encoding="utf-8"))
    return sweep(
        [(bundle.command, bundle.to_domain())], limits=bundle.limits, trim=bundle.trim
    )
