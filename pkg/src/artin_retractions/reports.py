"""
Command reports: schema-validated JSON and human-readable text
"""

import json
from typing import Any, Dict, Iterable, List, Optional, Tuple

import jsonschema

from .config import Config
from .coxeter_graph import Label

REPORT_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["schema", "command", "inputs", "result", "witnesses"],
    "additionalProperties": False,
    "properties": {
        "schema": {"const": Config.REPORT_SCHEMA_VERSION},
        "command": {"type": "string", "minLength": 1},
        "inputs": {"type": "object"},
        "result": {"type": "object"},
        "witnesses": {"type": "array"},
    },
}


def subset_json(subset: Iterable[str]) -> List[str]:
    return sorted(subset)


def image_json(image: Optional[str]) -> str:
    return "1" if image is None else image


def labels_json(labels: Iterable[Label]) -> List[str]:
    return [str(lab) for lab in labels]


def build_report(command: str, inputs: Dict[str, Any], result: Dict[str, Any],
                 witnesses: Optional[List[Any]] = None) -> Dict[str, Any]:
    """Assemble and validate a report object"""
    report = {
        "schema": Config.REPORT_SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "witnesses": list(witnesses or []),
    }
    jsonschema.validate(instance=report, schema=REPORT_SCHEMA)
    return report


def dump_report(report: Dict[str, Any]) -> str:
    """Deterministic serialization"""
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def render_text_report(title: str, rows: Iterable[Tuple[str, Any]],
                       verdict: Optional[bool] = None, verdict_text: str = "",
                       details: Optional[Iterable[str]] = None) -> str:
    """Human-readable report"""
    report = [f"=== {title} ==="]
    for key, value in rows:
        if isinstance(value, (list, tuple, set, frozenset)):
            value = "{" + ", ".join(str(item) for item in value) + "}"
        elif value is None:
            value = "-"
        report.append(f"{key}: {value}")
    detail_lines = list(details or [])
    if detail_lines:
        report.append("")
        report.append("Details:")
        report.extend(f"  - {line}" for line in detail_lines)
    if verdict is not None:
        report.append("")
        report.append(f"{'✅' if verdict else '❌'} {verdict_text}")
    return "\n".join(report)
