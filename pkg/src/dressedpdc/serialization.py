"""Writing sweep results as CSV, JSON or whitespace-separated plot data.

Every column header carries its unit.  Flags are written as
semicolon-joined tokens (CSV), a list per point (JSON) or a single
whitespace-free token per row (plot data, ``-`` when empty).  JSON output is
deterministic: sorted keys, ``repr`` floats, NaN stored as ``null``.
"""

import csv
import io
import json
import math
from pathlib import Path

import numpy as np

from .sweeps import SweepResult

__all__ = ["FORMATS", "JSON_SCHEMA", "emit", "dumps_json", "loads_json", "load_json"]

FORMATS = ("csv", "json", "plotdata")
JSON_SCHEMA = "dressedpdc.sweep/1"


def _header(name, unit):
    return f"{name} [{unit}]"


def _num(x):
    return repr(float(x))


def _json_safe(value):
    if isinstance(value, float):
        return None if math.isnan(value) else value
    if isinstance(value, (np.floating,)):
        return _json_safe(float(value))
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    return value


def _to_dict(result):
    return {
        "schema": JSON_SCHEMA,
        "axis": {"name": result.axis, "unit": result.axis_unit, "values": _json_safe(result.axis_values.tolist())},
        "columns": [
            {"name": name, "unit": result.units[name], "values": _json_safe(values.tolist())}
            for name, values in result.columns.items()
        ],
        "flags": [list(f) for f in result.flags],
        "meta": _json_safe(result.meta),
    }


def dumps_json(result):
    return json.dumps(_to_dict(result), sort_keys=True, indent=1, allow_nan=False) + "\n"


def _nan(values):
    return [math.nan if v is None else v for v in values]


def loads_json(text):
    data = json.loads(text)
    if data.get("schema") != JSON_SCHEMA:
        raise ValueError(f"unsupported schema {data.get('schema')!r}, expected {JSON_SCHEMA}")
    axis = data["axis"]
    columns = {c["name"]: _nan(c["values"]) for c in data["columns"]}
    units = {c["name"]: c["unit"] for c in data["columns"]}
    return SweepResult(axis["name"], axis["unit"], _nan(axis["values"]), columns, units, data["flags"], data["meta"])


def load_json(path):
    return loads_json(Path(path).read_text())


def dumps_csv(result):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [_header(result.axis, result.axis_unit)]
        + [_header(k, result.units[k]) for k in result.columns]
        + ["flags"]
    )
    for n, x in enumerate(result.axis_values):
        writer.writerow([_num(x)] + [_num(v[n]) for v in result.columns.values()] + [";".join(result.flags[n])])
    return buf.getvalue()


def dumps_plotdata(result, comments=()):
    names = [_header(result.axis, result.axis_unit)] + [_header(k, result.units[k]) for k in result.columns] + ["flags"]
    lines = [f"# {c}" for c in comments]
    lines.append("# columns: " + " | ".join(names))
    for n, x in enumerate(result.axis_values):
        flags = ";".join(result.flags[n]) or "-"
        lines.append(" ".join([_num(x)] + [_num(v[n]) for v in result.columns.values()] + [flags]))
    return "\n".join(lines) + "\n"


def emit(result, fmt, path, comments=()):
    """Write ``result`` to ``path`` in ``fmt``; ``comments`` go to the plot-data header."""
    if fmt == "csv":
        text = dumps_csv(result)
    elif fmt == "json":
        text = dumps_json(result)
    elif fmt == "plotdata":
        text = dumps_plotdata(result, comments)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    path = Path(path)
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(exc.errno, f"cannot write {path}: {exc.strerror}", str(path)) from exc
    return path
