"""Render reports: plain text through jinja2, JSON validated against its schema."""

import json
import logging
from pathlib import Path

import jsonschema
from jinja2 import Environment, FileSystemLoader

from config import load_schema

logger = logging.getLogger("transfers.render")

PROJECT_ROOT = Path(__file__).resolve().parent.parent
TEMPLATES_DIR = PROJECT_ROOT / "templates"

STATUS_MARKS = {"pass": "✓", "fail": "✗", "unverified": "?"}


def _summary(rows: list[dict]) -> dict:
    counts = {"pass": 0, "fail": 0, "unverified": 0}
    for row in rows:
        counts[row["status"]] += 1
    return counts


def render_text(report) -> str:
    """Human-readable report; carries the same rows and flags as the JSON."""
    env = Environment(loader=FileSystemLoader(str(TEMPLATES_DIR)), autoescape=False,
                      keep_trailing_newline=True, trim_blocks=True, lstrip_blocks=True)
    template = env.get_template("report.txt.j2")
    data = report.to_dict()
    return template.render(
        command=data["command"],
        rows=data["results"],
        flags=data["flags"],
        marks=STATUS_MARKS,
        summary=_summary(data["results"]),
    )


def render_json(report) -> str:
    data = report.to_dict()
    jsonschema.validate(instance=data, schema=load_schema("report"))
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_output(text: str, output_path: Path) -> None:
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8")
    logger.info("Wrote report: %s", output_path)
