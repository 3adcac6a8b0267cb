"""Run one experiment or the whole suite and assemble their reports."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from time import perf_counter

from kernel.errors.custom_error import ErrorBase, custom_exception_handler
from quantum_harmonic.conf import qha_setting
from quantum_harmonic.experiments import subcommands  # noqa: F401
from quantum_harmonic.experiments.registry import get_experiment, registered
from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import ExperimentConfig, ExperimentReport

logger = get_logger(__name__)

SUITE = "suite"


def _ledger(config: ExperimentConfig, details: dict) -> dict:
    return {
        "in_effect": config.conventions.to_dict(),
        "tag": config.conventions.tag,
        "details": details,
    }


def run(name: str, config: ExperimentConfig) -> ExperimentReport:
    """
    Execute a single experiment.

    The report gets the configuration echo, the convention ledger in
    effect and its wall time. Domain errors propagate unchanged.
    """
    runner = get_experiment(name)
    logger.info("running %s (seed %d)", name, config.seed)
    start = perf_counter()
    try:
        report = runner(config)
    except ErrorBase as exc:
        logger.error("%s failed: %s", name, exc.message)
        raise
    report.wall_time = perf_counter() - start
    report.config = {
        **config.to_dict(),
        "experiment_parameters": report.config,
    }
    report.conventions = _ledger(config, report.conventions)
    logger.info(
        "%s %s in %.1fs",
        name,
        "passed" if report.passed else "FAILED",
        report.wall_time,
    )
    return report


def _failed_report(name: str, exc: Exception, config) -> ExperimentReport:
    payload = custom_exception_handler(exc, {"experiment": name})
    report = ExperimentReport(name)
    report.conventions = _ledger(config, {})
    report.scalars["error"] = payload
    report.flag("completed", False, note="; ".join(payload["messages"]))
    return report


def _safe_run(name: str, config: ExperimentConfig) -> ExperimentReport:
    try:
        return run(name, config)
    except Exception as exc:
        logger.exception("%s raised", name)
        return _failed_report(name, exc, config)


def suite(config: ExperimentConfig, names=None) -> tuple:
    """
    Run every registered experiment in a thread pool.

    Returns ``(aggregate, reports)``; reports keep registration order no
    matter which finishes first. With ``expected_failures`` set (negative
    controls) the listed experiments are expected to fail: their verdicts
    become non-primary and the aggregate checks that each of them did
    fail while everything else passed.
    """
    names = list(names or registered())
    start = perf_counter()
    with ThreadPoolExecutor(max_workers=qha_setting("WORKERS")) as pool:
        futures = [pool.submit(_safe_run, name, config) for name in names]
        reports = [future.result() for future in futures]

    aggregate = ExperimentReport(SUITE)
    aggregate.config = config.to_dict()
    aggregate.conventions = _ledger(config, {})
    expected = set(config.expected_failures)
    summary = []
    for name, report in zip(names, reports):
        failed = [v.name for v in report.failed_verdicts()]
        summary.append(
            {
                "experiment": name,
                "passed": report.passed,
                "failed_verdicts": "; ".join(failed),
                "wall_time": report.wall_time,
            }
        )
        if name in expected:
            for verdict in report.verdicts:
                verdict.primary = False
            aggregate.flag(
                f"{name}.fails_as_intended",
                bool(failed) and "completed" not in failed,
                note="negative control",
            )
            continue
        part = ExperimentReport(
            name, verdicts=[replace(v) for v in report.verdicts]
        )
        part.scalars = dict(report.scalars)
        part.warnings = list(report.warnings)
        aggregate.merge(part, name)
    if expected:
        aggregate.flag(
            "failures_as_intended",
            all(
                row["passed"] is False
                for row in summary
                if row["experiment"] in expected
            ),
        )
    aggregate.rows["summary"] = summary
    aggregate.wall_time = perf_counter() - start
    return aggregate, reports
