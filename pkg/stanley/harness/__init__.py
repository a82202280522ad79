"""
Seeded instance generation, the verification pipelines, their JSON reports
and counterexample bundles, and the :code:`stanley` command.
"""

from stanley.harness.instances import (
    Instance,
    Source,
    chordal_instances,
    generate_chordal_clutters,
    random_quadratic_ideals,
    random_squarefree_ideals,
    worked_examples,
)
from stanley.harness.pipelines import (
    replay,
    run_worked_examples,
    sweep,
    verify_instance,
    verify_linres,
    verify_main,
    verify_smain,
)
from stanley.harness.report import Check, InstanceReport, VerificationReport

__all__ = [
    "Instance",
    "Source",
    "chordal_instances",
    "generate_chordal_clutters",
    "random_quadratic_ideals",
    "random_squarefree_ideals",
    "worked_examples",
    "replay",
    "run_worked_examples",
    "sweep",
    "verify_instance",
    "verify_linres",
    "verify_main",
    "verify_smain",
    "Check",
    "InstanceReport",
    "VerificationReport",
]
