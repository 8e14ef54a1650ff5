"""Output documents in markdown, json and csv.

Big integers and rationals are written as decimal strings ("7980", "8/9"),
never as JSON numbers.  Floats use ``repr`` so the text is reproducible.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .core import BoundCertificate

SCHEMA_VERSION = "1"
FORMATS = ("markdown", "json", "csv")

CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["claim_id", "lhs", "rhs", "relation", "holds", "context"],
    "properties": {
        "claim_id": {"type": "string"},
        "lhs": {"type": "string"},
        "rhs": {"type": "string"},
        "relation": {"enum": ["<", "<=", "="]},
        "holds": {"type": "boolean"},
        "context": {"type": "object"},
    },
}

DOCUMENT_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "kind", "parameters", "payload"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "kind": {"type": "string"},
        "parameters": {"type": "object"},
        "payload": {"type": "object"},
    },
}


def encode(value: Any) -> Any:
    """Make a value JSON-safe with numbers as strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, BoundCertificate):
        return certificate_dict(value)
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    return str(value)


def certificate_dict(c: BoundCertificate) -> dict:
    context = dict(c.context)
    if c.rel_tol:
        context["rel_tol"] = float(c.rel_tol)
    return {
        "claim_id": c.claim_id,
        "lhs": encode(c.lhs),
        "rhs": encode(c.rhs),
        "relation": c.relation,
        "holds": c.holds,
        "context": encode(context),
    }


@dataclass
class OutputDocument:
    kind: str
    parameters: dict
    payload: dict
    # flat records for csv and the default markdown table
    columns: list[str] = field(default_factory=list)
    rows: list[list[Any]] = field(default_factory=list)
    markdown: str | None = None
    # False marks a document that reports a failed check
    ok: bool = True

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": self.kind,
            "parameters": encode(self.parameters),
            "payload": encode(self.payload),
        }


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    e = encode(v)
    return e if isinstance(e, str) else json.dumps(e)


def render_json(doc: OutputDocument) -> str:
    return dump_json(doc.to_json())


def dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_csv(columns: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    w.writerows(rows)
    return buf.getvalue()


def read_csv(text: str) -> tuple[list[str], list[list[str]]]:
    records = list(csv.reader(io.StringIO(text)))
    return records[0], records[1:]


def render_csv(doc: OutputDocument) -> str:
    return write_csv(doc.columns, [[_cell(v) for v in row] for row in doc.rows])


def markdown_table(columns: list[str], rows: list[list[Any]]) -> str:
    lines = ["| " + " | ".join(columns) + " |", "|" + "|".join("---" for _ in columns) + "|"]
    lines += ["| " + " | ".join(_cell(v) for v in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def render_markdown(doc: OutputDocument) -> str:
    if doc.markdown is not None:
        return doc.markdown
    return markdown_table(doc.columns, doc.rows)


def render(doc: OutputDocument, fmt: str) -> str:
    if fmt == "json":
        return render_json(doc)
    if fmt == "csv":
        return render_csv(doc)
    if fmt == "markdown":
        return render_markdown(doc)
    raise ValueError(f"unknown format {fmt!r}")
