"""
The :code:`stanley` command.

Exit codes: 0 when everything checked holds, 1 on a theorem violation (the
report names the reproduction bundle), 2 on a usage error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from pydantic import TypeAdapter, ValidationError

from stanley import __version__
from stanley._bits import indices_of
from stanley.clutters import is_chordal, simplicial_vertices
from stanley.config import Limits
from stanley.depth import projective_dimension
from stanley.exceptions import StanleyException
from stanley.harness.instances import (
    Instance,
    Source,
    chordal_instances,
    generate_chordal_clutters,
    random_quadratic_ideals,
    random_squarefree_ideals,
)
from stanley.harness.io import (
    ClutterModel,
    GeneralIdealModel,
    IdealModel,
    InstanceModel,
    WitnessModel,
)
from stanley.harness.pipelines import (
    replay,
    run_worked_examples,
    sweep,
    verify_linres,
)
from stanley.harness.report import VerificationReport
from stanley.ideals import polarize
from stanley.linear_quotients import (
    LqOrder,
    chordal_lq_order,
    depth_from_lq,
    find_lq_order,
    pd_from_lq,
)
from stanley.schmitt_vogel import check_sv_witness, sv_number
from stanley.sdepth import sdepth

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

SUITES = ("main", "smain", "linres")


def _load(path: str) -> Any:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def _limits(args: argparse.Namespace) -> Limits:
    limits = Limits(field=args.field)
    if args.max_n is not None:
        limits = limits.with_max_n(args.max_n)
    return limits


def _emit(args: argparse.Namespace, payload: Any) -> None:
    if isinstance(payload, VerificationReport):
        text = payload.to_json()
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if args.json_out:
        Path(args.json_out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report_exit(report: VerificationReport) -> int:
    if report.violation is None:
        return EXIT_OK
    violation = report.violation
    print(
        f"theorem violation on {violation.instance}: {violation.check}"
        + (f" (bundle: {violation.bundle})" if violation.bundle else ""),
        file=sys.stderr,
    )
    return EXIT_VIOLATION


def _lq_payload(lq: LqOrder, m: int) -> dict[str, Any]:
    return {
        "linear_quotients": True,
        "order": [list(u.indices) for u in lq.order],
        "colon_counts": list(lq.colon_counts),
        "pd": pd_from_lq(lq),
        "depth": depth_from_lq(lq, m),
    }


def cmd_depth(args: argparse.Namespace) -> int:
    ideal = IdealModel.model_validate(_load(args.input)).to_domain()
    pd = projective_dimension(ideal, limits=_limits(args))
    depth = ideal.n - pd.value
    _emit(
        args,
        {
            "pd": pd.value,
            "depth_quotient": depth,
            "depth_ideal": None if ideal.is_zero else depth + 1,
            "sigma": list(indices_of(pd.sigma)),
            "homology_dimension": pd.homology_dimension,
        },
    )
    return EXIT_OK


def cmd_sdepth(args: argparse.Namespace) -> int:
    ideal = IdealModel.model_validate(_load(args.input)).to_domain()
    result = sdepth(ideal, args.kind, limits=_limits(args))
    _emit(
        args,
        {
            "sdepth": result.value,
            "kind": result.kind.value,
            "certificate": result.certificate.as_index_lists(),
        },
    )
    return EXIT_OK


def cmd_sv(args: argparse.Namespace) -> int:
    ideal = IdealModel.model_validate(_load(args.input)).to_domain()
    result = sv_number(ideal, limits=_limits(args))
    payload: dict[str, Any] = {
        "sv_restricted": result.value,
        "witness": result.witness.as_index_lists(),
    }
    if args.witness:
        witness = WitnessModel.model_validate(_load(args.witness)).to_domain(ideal.n)
        check = check_sv_witness(ideal, witness)
        payload["supplied"] = {
            "valid": check.ok,
            "levels": witness.r,
            "condition": check.condition,
            "detail": check.describe(),
        }
    _emit(args, payload)
    return EXIT_OK


def cmd_chordal(args: argparse.Namespace) -> int:
    clutter = ClutterModel.model_validate(_load(args.input)).to_domain()
    certificate = is_chordal(clutter, limits=_limits(args))
    _emit(
        args,
        {
            "chordal": bool(certificate),
            "minors": len(certificate.simplicial),
            "witness": certificate.witness.as_dict() if certificate.witness else None,
            "simplicial_vertices": simplicial_vertices(clutter),
        },
    )
    return EXIT_OK


def cmd_lq(args: argparse.Namespace) -> int:
    data = _load(args.input)
    if args.d is not None:
        clutter = ClutterModel.model_validate(data).to_domain()
        lq = chordal_lq_order(clutter, args.d, limits=_limits(args))
        _emit(args, _lq_payload(lq, len(clutter.vertices)))
        return EXIT_OK
    ideal = IdealModel.model_validate(data).to_domain()
    found = find_lq_order(ideal)
    _emit(
        args,
        _lq_payload(found, ideal.n) if found else {"linear_quotients": False},
    )
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    limits = _limits(args)
    if args.n is not None:
        d = args.d if args.d is not None else 2
        samples = generate_chordal_clutters(
            args.n, d, args.count, args.seed, limits=limits
        )
        instances = [
            Instance.of_clutter(
                f"gen-n{args.n}-d{d}-{k:03d}", Source.GENERATED, sample.clutter, d
            )
            for k, sample in enumerate(samples)
        ]
    else:
        instances = chordal_instances(
            args.max_n or 6, args.count, args.seed, limits=limits
        )
    _emit(
        args,
        [InstanceModel.from_domain(i).model_dump(mode="json") for i in instances],
    )
    return EXIT_OK


def _file_instances(path: str) -> list[Instance]:
    data = _load(path)
    models = TypeAdapter(list[InstanceModel]).validate_python(
        data if isinstance(data, list) else [data]
    )
    return [model.to_domain() for model in models]


def _suite_for(instance: Instance, suites: Sequence[str]) -> str:
    """A file instance goes to the one suite asked for, else by what it carries."""
    if len(suites) == 1:
        return suites[0]
    if instance.general is not None:
        return "linres"
    if instance.clutter is not None and instance.d is not None:
        return "main"
    return "smain"


def cmd_verify(args: argparse.Namespace) -> int:
    limits = _limits(args)
    suites = SUITES if args.suite == "all" else (args.suite,)
    tasks: list[tuple[str, Instance]] = []
    if args.input:
        for instance in _file_instances(args.input):
            tasks.append((_suite_for(instance, suites), instance))
    else:
        max_n = args.max_n or 6
        if "main" in suites:
            tasks += [
                ("main", i)
                for i in chordal_instances(
                    max_n,
                    args.count,
                    args.seed,
                    minimum=args.min_clutters,
                    limits=limits,
                )
            ]
        if "smain" in suites:
            tasks += [
                ("smain", i)
                for i in random_squarefree_ideals(max_n, args.ideals, args.seed + 1)
            ]
        if "linres" in suites:
            tasks += [
                ("linres", i)
                for i in random_quadratic_ideals(
                    min(max_n, 4), args.quadratics, args.seed + 2
                )
            ]
    report = sweep(
        tasks,
        limits=limits,
        trim=args.trim,
        jobs=args.jobs,
        seed=args.seed,
        bundle_dir=args.bundle_dir,
    )
    _emit(args, report)
    return _report_exit(report)


def cmd_examples(args: argparse.Namespace) -> int:
    report = run_worked_examples(limits=_limits(args), bundle_dir=args.bundle_dir)
    _emit(args, report)
    return _report_exit(report)


def cmd_linres(args: argparse.Namespace) -> int:
    data = _load(args.input)
    models = TypeAdapter(list[GeneralIdealModel]).validate_python(
        data if isinstance(data, list) else [data]
    )
    instances = []
    for k, model in enumerate(models):
        general = model.to_domain()
        instances.append(
            Instance(
                f"linres-{k:03d}",
                Source.FILE,
                polarize(general, model.n),
                general=general,
            )
        )
    report = verify_linres(
        instances, limits=_limits(args), jobs=args.jobs, bundle_dir=args.bundle_dir
    )
    _emit(args, report)
    return _report_exit(report)


def cmd_replay(args: argparse.Namespace) -> int:
    report = replay(args.bundle)
    _emit(args, report)
    return _report_exit(report)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-n", type=int, default=None, help="override every cap")
    parser.add_argument("--field", choices=("Q", "Fp"), default="Q")
    parser.add_argument("--json-out", default=None, help="write JSON here")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v INFO, -vv DEBUG"
    )


def _sweep_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument(
        "--bundle-dir", default=".", help="where counterexample bundles go"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stanley",
        description="Exact depth, Stanley depth and Schmitt-Vogel computations, "
        "and the sweeps that verify their inequalities.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help: str):
        sub = commands.add_parser(name, help=help)
        _common(sub)
        sub.set_defaults(handler=handler)
        return sub

    sub = add("depth", cmd_depth, "depth and pd of S/I by Hochster's formula")
    sub.add_argument("--input", required=True)

    sub = add("sdepth", cmd_sdepth, "exact Stanley depth with a certificate")
    sub.add_argument("--input", required=True)
    sub.add_argument("--kind", choices=("ideal", "quotient"), default="quotient")

    sub = add("sv", cmd_sv, "Schmitt-Vogel number over generator partitions")
    sub.add_argument("--input", required=True)
    sub.add_argument("--witness", default=None, help="witness file to check")

    sub = add("chordal", cmd_chordal, "decide chordality of a clutter")
    sub.add_argument("--input", required=True)

    sub = add("lq", cmd_lq, "linear quotients of an ideal, or of I(c_d(C))")
    sub.add_argument("--input", required=True)
    sub.add_argument("--d", type=int, default=None, help="read a clutter, use c_d")

    sub = add("gen", cmd_gen, "generate chordal clutters as instances")
    sub.add_argument("--n", type=int, default=None)
    sub.add_argument("--d", type=int, default=None)
    sub.add_argument("--count", type=int, default=10)
    sub.add_argument("--seed", type=int, default=0)

    sub = add("verify", cmd_verify, "run the verification sweeps")
    sub.add_argument("--input", default=None, help="instances instead of a corpus")
    sub.add_argument("--suite", choices=("all",) + SUITES, default="all")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--count", type=int, default=10, help="clutters per (n, d)")
    sub.add_argument(
        "--min-clutters",
        type=int,
        default=200,
        help="top the chordal corpus up to this many distinct clutters",
    )
    sub.add_argument("--ideals", type=int, default=200, help="random ideals")
    sub.add_argument("--quadratics", type=int, default=40, help="quadratic ideals")
    sub.add_argument("--trim", action="store_true", help="drop unused variables")
    _sweep_options(sub)

    sub = add("examples", cmd_examples, "the two worked examples, end to end")
    _sweep_options(sub)

    sub = add("linres", cmd_linres, "quadratic ideals through polarization")
    sub.add_argument("--input", required=True)
    _sweep_options(sub)

    sub = add("replay", cmd_replay, "re-run a counterexample bundle")
    sub.add_argument("bundle")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr
    )
    try:
        return args.handler(args)
    except (StanleyException, ValidationError, ValueError, OSError) as error:
        print(f"stanley {args.command}: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
