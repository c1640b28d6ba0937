"""
Rendering of results as csv, json or a pretty aligned table

csv and json carry every float with repr, which reads back to the identical binary64 value.
The pretty format rounds to the configured number of significant digits.
"""
import dataclasses
from typing import Any, Dict, List, Optional, Sequence

from flax import struct

from abelfrac.utils.io import csv_text, json_text
from abelfrac.utils.tools import flatten_struct_to_dict


@struct.dataclass
class TableRow:
    """One row of a published style table: approximations for several k next to the exact value"""

    x: float
    values: List[float]
    """approximate solution for each k, in the order of the table's k values"""
    exact: float
    abs_error: float
    """error of the approximation with the largest k"""


@dataclasses.dataclass
class Report:
    command: str
    config: Dict[str, Any]
    header: List[str]
    table: List[List[Any]]
    """rows for csv and pretty output, aligned with header"""
    records: List[Dict[str, Any]]
    """rows for json output"""
    extra: Dict[str, Any] = dataclasses.field(default_factory=dict)
    """top level json fields, also printed below the pretty table"""


def as_float(v) -> Optional[float]:
    return None if v is None else float(v)


def fmt_value(v: Any, digits: int) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return format(v, f".{digits}g")
    return str(v)


def pretty_text(header: Sequence[str], table: Sequence[Sequence[Any]], digits: int, footer: Dict[str, Any] = None) -> str:
    cells = [list(header)] + [[fmt_value(v, digits) for v in row] for row in table]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    for key, value in (footer or {}).items():
        lines.append(f"{key}: {fmt_value(value, digits)}")
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str, digits: int = 10) -> str:
    if fmt == "csv":
        return csv_text(report.header, report.table)
    if fmt == "json":
        return json_text(dict(command=report.command, config=report.config, rows=report.records, **report.extra))
    if fmt == "pretty":
        return pretty_text(report.header, report.table, digits, footer=report.extra)
    raise ValueError(f"unknown format {fmt!r}")


def solve_report(config: Dict[str, Any], points, values, k: int, exact=None, abs_errors=None) -> Report:
    header = ["x", "k", "gtilde"]
    with_exact = exact is not None
    if with_exact:
        header += ["exact", "abs_error"]
    table, records = [], []
    for i, x in enumerate(points):
        row = dict(x=as_float(x), k=int(k), gtilde=as_float(values[i]))
        if with_exact:
            row.update(exact=as_float(exact[i]), abs_error=as_float(abs_errors[i]))
        records.append(row)
        table.append([row[h] for h in header])
    return Report(command="solve", config=config, header=header, table=table, records=records)


def table_report(config: Dict[str, Any], ks: Sequence[int], rows: Sequence[TableRow]) -> Report:
    header = ["x"] + [f"k={k}" for k in ks] + ["exact", "abs_error"]
    table, records = [], []
    for row in rows:
        table.append([as_float(row.x)] + [as_float(v) for v in row.values] + [as_float(row.exact), as_float(row.abs_error)])
        for k, v in zip(ks, row.values):
            records.append(
                dict(x=as_float(row.x), k=int(k), gtilde=as_float(v), exact=as_float(row.exact), abs_error=abs(float(v) - float(row.exact)))
            )
    return Report(command="table", config=config, header=header, table=table, records=records)


def converge_report(config: Dict[str, Any], study) -> Report:
    header = ["x", "k", "h", "gtilde", "exact", "abs_error"]
    data = flatten_struct_to_dict(study)
    table, records = [], []
    for i, k in enumerate(data["ks"]):
        row = dict(
            x=data["x"],
            k=int(k),
            h=data["h"][i],
            gtilde=data["values"][i],
            exact=as_float(data["exact"]),
            abs_error=data["abs_errors"][i],
        )
        records.append(row)
        table.append([row[h] for h in header])
    order = "floor" if data["floor"] else as_float(data.get("order"))
    return Report(command="converge", config=config, header=header, table=table, records=records, extra=dict(order=order))


def residual_report(config: Dict[str, Any], points, residuals, k: Optional[int]) -> Report:
    header = ["x", "k", "residual"]
    table, records = [], []
    for x, r in zip(points, residuals):
        row = dict(x=as_float(x), k=None if k is None else int(k), residual=as_float(r))
        records.append(row)
        table.append([row[h] for h in header])
    return Report(command="residual", config=config, header=header, table=table, records=records)
