import operator
from dataclasses import dataclass, field

import numpy as np

from quantum_harmonic.conf import qha_setting

COMPARISONS = {
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
    "==": operator.eq,
}


@dataclass
class Verdict:
    """
    Pass/fail judgement of one value against the tolerance it was judged
    against.

    Attributes:
        name (str): Criterion name.
        value: Measured value (number or bool).
        tolerance: Threshold the value was compared with.
        comparison (str): One of ``COMPARISONS``.
        passed (bool): Outcome.
        primary (bool): Primary verdicts decide the exit status.
        note (str): Context such as the convention in effect.
    """

    name: str
    value: object
    tolerance: object
    comparison: str
    passed: bool
    primary: bool = True
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": to_jsonable(self.value),
            "tolerance": to_jsonable(self.tolerance),
            "comparison": self.comparison,
            "passed": bool(self.passed),
            "primary": self.primary,
            "note": self.note,
        }


@dataclass
class ExperimentReport:
    """
    Structured result of one experiment.

    Attributes:
        experiment (str): Subcommand name.
        config (dict): Echo of the validated configuration.
        conventions (dict): Convention ledger in effect.
        scalars (dict): Named scalar results.
        arrays (dict): Named 1-D/2-D arrays (exported as CSV).
        rows (dict): Named tables as lists of dicts (exported as CSV).
        verdicts (list[Verdict]): Judgements with their tolerances.
        warnings (list[str]): Non-fatal notes.
        wall_time (float): Seconds spent.
    """

    experiment: str
    config: dict = field(default_factory=dict)
    conventions: dict = field(default_factory=dict)
    scalars: dict = field(default_factory=dict)
    arrays: dict = field(default_factory=dict)
    rows: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    wall_time: float = 0.0

    def check(
        self,
        name: str,
        value,
        tolerance,
        comparison: str = "<",
        primary: bool = True,
        note: str = "",
    ) -> Verdict:
        """Judge ``value <comparison> tolerance`` and record the verdict."""
        passed = bool(COMPARISONS[comparison](value, tolerance))
        verdict = Verdict(
            name, value, tolerance, comparison, passed, primary, note
        )
        self.verdicts.append(verdict)
        return verdict

    def flag(self, name: str, passed: bool, note: str = "", primary=True):
        """Record a boolean verdict (judged against ``True``)."""
        return self.check(name, bool(passed), True, "==", primary, note)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts if v.primary)

    def failed_verdicts(self) -> list:
        return [v for v in self.verdicts if v.primary and not v.passed]

    def merge(self, other: "ExperimentReport", prefix: str):
        """Fold a sub-report in under ``prefix``."""
        for key, value in other.scalars.items():
            self.scalars[f"{prefix}.{key}"] = value
        for key, value in other.arrays.items():
            self.arrays[f"{prefix}.{key}"] = value
        for key, value in other.rows.items():
            self.rows[f"{prefix}.{key}"] = value
        for verdict in other.verdicts:
            verdict.name = f"{prefix}.{verdict.name}"
            self.verdicts.append(verdict)
        self.warnings.extend(f"{prefix}: {w}" for w in other.warnings)

    def to_dict(self) -> dict:
        return {
            "schema_version": qha_setting("SCHEMA_VERSION"),
            "experiment": self.experiment,
            "passed": self.passed,
            "config": to_jsonable(self.config),
            "conventions": to_jsonable(self.conventions),
            "scalars": to_jsonable(self.scalars),
            "arrays": to_jsonable(self.arrays),
            "rows": to_jsonable(self.rows),
            "verdicts": [v.to_dict() for v in self.verdicts],
            "warnings": list(self.warnings),
            "wall_time": self.wall_time,
        }


def to_jsonable(value):
    """Convert numpy scalars/arrays and complex numbers for ``json``."""
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, (np.floating,)):
        return float(value)
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    return value
