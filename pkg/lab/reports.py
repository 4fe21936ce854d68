"""
Run reports and their serializations.

Exact rationals travel as "a/b" strings, floats as JSON numbers. Every
results key carrying a number is tagged with where that number came from.
"""
import csv
import dataclasses
import io
import json
import numbers
import uuid
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy
from django.db import models

from monomials.exact import is_rational_text

from .exceptions import ParameterError


class Provenance(models.TextChoices):
    EXACT = "exact-rational", "Exact rational arithmetic"
    QUADRATURE = "float-quadrature", "Floating-point quadrature"
    HEURISTIC = "sampled-heuristic", "Sampled heuristic"


class Format(models.TextChoices):
    JSON = "json", "JSON"
    CSV = "csv", "CSV"
    TEXT = "text", "Text"


@dataclass
class Report:
    command: str
    config: dict
    results: dict
    provenance: dict
    exactness: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    def as_dict(self):
        return to_jsonable({f.name: getattr(self, f.name) for f in dataclasses.fields(self)})


def to_jsonable(value):
    if isinstance(value, (bool, type(None), str)):
        return value
    if isinstance(value, uuid.UUID):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, sympy.Rational):
        return str(value)
    if isinstance(value, np.generic):
        return to_jsonable(value.item())
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Real):
        return float(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, range)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "as_dict"):
        return to_jsonable(value.as_dict())
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _is_numeric_leaf(value):
    if isinstance(value, bool):
        return False
    if isinstance(value, (numbers.Real, Fraction)):
        return True
    return isinstance(value, str) and is_rational_text(value)


def _has_numeric_leaf(value):
    if isinstance(value, dict):
        return any(_has_numeric_leaf(v) for v in value.values())
    if isinstance(value, (list, tuple)):
        return any(_has_numeric_leaf(v) for v in value)
    return _is_numeric_leaf(value)


def validate_provenance(report):
    """Results keys holding numbers but carrying no known provenance tag."""
    results = to_jsonable(report.results)
    return sorted(
        key for key, value in results.items()
        if _has_numeric_leaf(value) and report.provenance.get(key) not in Provenance.values
    )


def _cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True)
    return "" if value is None else value


def _emit_csv(report):
    rows = report.as_dict()["results"].get("rows")
    if not isinstance(rows, list) or not all(isinstance(row, dict) for row in rows):
        raise ParameterError(f"{report.command} has no tabular payload; use --format json or text")
    columns = list(dict.fromkeys(key for row in rows for key in row))
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return buffer.getvalue()


def _flatten(prefix, value):
    if isinstance(value, dict) and value:
        for key in sorted(value):
            yield from _flatten(f"{prefix}.{key}" if prefix else key, value[key])
    else:
        yield prefix, json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value


def _emit_text(report):
    data = report.as_dict()
    lines = [f"{key}: {value}" for key, value in _flatten("", {k: data[k] for k in ("command", "config", "results")})]
    lines += [f"provenance.{key}: {tag}" for key, tag in sorted(data["provenance"].items())]
    lines += [f"{key}: {value}" for key, value in _flatten("timing", data["timing"])]
    return "\n".join(lines) + "\n"


def emit(report, fmt=Format.JSON):
    if fmt == Format.JSON:
        return json.dumps(report.as_dict(), sort_keys=True, indent=2) + "\n"
    if fmt == Format.CSV:
        return _emit_csv(report)
    if fmt == Format.TEXT:
        return _emit_text(report)
    raise ParameterError(f"unknown output format {fmt!r}")


def without_timing(text):
    """The JSON rendering of a report with its timing block removed."""
    data = json.loads(text)
    data.pop("timing", None)
    return json.dumps(data, sort_keys=True)
