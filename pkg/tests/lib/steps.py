from stanley._bits import popcount
from stanley.config import Limits
from stanley.depth import depth_quotient
from stanley.exceptions import CapExceededError
from stanley.flow import condition, transformer
from stanley.harness.instances import Instance, Source
from stanley.harness.pipelines import Run
from stanley.harness.report import Check
from stanley.ideals import SqfIdeal
from tests.lib.corpora import EXAMPLE_ONE, PATH


def run_of(ideal: SqfIdeal = EXAMPLE_ONE, command: str = "smain") -> Run:
    return Run(command, Instance("flow-000", Source.FILE, ideal), Limits.default())


def clutter_run() -> Run:
    instance = Instance.of_clutter("flow-001", Source.FILE, PATH, 2)
    return Run("main", instance, Limits.default())


@transformer
def oracle_depth(run: Run) -> Run:
    """Depth of S/I by Hochster's formula"""
    run.report.depth_oracle = depth_quotient(run.ideal)
    return run


@transformer
def depth_within_variables(run: Run) -> Run:
    depth = run.report.depth_oracle
    run.record(Check.at_least("variables_bound_depth", run.m, depth or 0))
    return run


@transformer
def support_within_variables(run: Run) -> Run:
    support = popcount(run.ideal.support_mask)
    run.record(Check.at_least("support_within_variables", run.m, support))
    return run


@transformer
def refuted_claim(run: Run) -> Run:
    run.record(Check.claim("refuted_claim", False, "recorded by a test step"))
    return run


@transformer
def mark_linear(run: Run) -> Run:
    run.linear_resolution = True
    return run


@transformer
def over_cap(run: Run) -> Run:
    raise CapExceededError("sdepth_max_n", 1, run.ideal.n)


@condition
def has_clutter(run: Run) -> bool:
    return run.instance.clutter is not None
