"""
Report files.

``<out>/<experiment>.json`` holds the full report; every array and every
row table is also written as ``<out>/<experiment>__<name>.csv``.

CSV columns:
  arrays, 1-D: ``index``, ``value`` (``value_re``/``value_im`` if complex)
  arrays, 2-D: ``row`` then ``c0``, ``c1``, ... (complex entries split
    into ``c0_re``, ``c0_im``, ...)
  row tables: the keys of the first row, complex values split the same
    way.
"""

import csv
import json
import re
from pathlib import Path

import numpy as np

from quantum_harmonic.logging.log import get_logger
from quantum_harmonic.models import ExperimentReport
from quantum_harmonic.models.report import to_jsonable

logger = get_logger(__name__)


def _slug(name: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.=+-]+", "_", name)


def _split_complex(row: dict) -> dict:
    out = {}
    for key, value in row.items():
        if isinstance(value, (complex, np.complexfloating)):
            out[f"{key}_re"] = float(value.real)
            out[f"{key}_im"] = float(value.imag)
        elif isinstance(value, (list, tuple, np.ndarray, dict)):
            out[key] = json.dumps(to_jsonable(value))
        else:
            out[key] = to_jsonable(value)
    return out


def array_rows(values) -> list:
    """Rows of a 1-D or 2-D array in the documented CSV layout."""
    values = np.asarray(values)
    if values.ndim == 1:
        return [
            _split_complex({"index": i, "value": v})
            for i, v in enumerate(values)
        ]
    if values.ndim == 2:
        return [
            _split_complex({"row": i, **{f"c{j}": v for j, v in enumerate(r)}})
            for i, r in enumerate(values)
        ]
    raise ValueError(f"cannot export a {values.ndim}-D array as CSV")


def _write_csv(path: Path, rows: list):
    if not rows:
        return None
    fieldnames = list(rows[0])
    for row in rows[1:]:
        fieldnames.extend(key for key in row if key not in fieldnames)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.DictWriter(f, fieldnames=fieldnames)
        writer.writeheader()
        for row in rows:
            writer.writerow(row)
    return path


def write_report(report: ExperimentReport, out_dir) -> list:
    """Write the JSON report and its CSV files; returns the paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = _slug(report.experiment)
    json_path = out / f"{stem}.json"
    json_path.write_text(
        json.dumps(report.to_dict(), ensure_ascii=False, indent=2),
        encoding="utf-8",
    )
    written = [json_path]
    tables = {
        name: array_rows(values) for name, values in report.arrays.items()
    }
    tables.update(
        {
            name: [_split_complex(row) for row in rows]
            for name, rows in report.rows.items()
        }
    )
    for name, rows in tables.items():
        path = _write_csv(out / f"{stem}__{_slug(name)}.csv", rows)
        if path is not None:
            written.append(path)
    logger.debug("wrote %d files for %s", len(written), report.experiment)
    return written
