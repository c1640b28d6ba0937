"""
Writers for result files. Floats are written with repr, the shortest text that reads back
to the same binary64 value.
"""
import csv
import io
import json
import os
import os.path as osp
from typing import Any, Dict, List, Sequence


def format_float(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return repr(v)
    return str(v)


def csv_text(header: Sequence[str], rows: List[Sequence[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=",", lineterminator="\n", quoting=csv.QUOTE_MINIMAL)
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(v) for v in row])
    return buf.getvalue()


def json_text(payload: Dict[str, Any]) -> str:
    # json.dumps writes floats with repr, so values read back bit for bit
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def save(save_path: str, text: str) -> None:
    os.makedirs(osp.dirname(osp.abspath(save_path)), exist_ok=True)
    with open(save_path, "w", newline="\n") as f:
        f.write(text)
