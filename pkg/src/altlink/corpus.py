"""Corpus files: loading, validation and batch verification.

Schema (version 1)::

    {"schema": 1,
     "entries": [{"name": str, "pd": str, "edge": int?,
                  "expected": {"alternative": bool?, "fil_max": str?,
                               "rank": int?, "fibred": bool?,
                               "alexander": str?}?}]}
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .algebra import HalfInt, equal_up_to_unit, parse_poly
from .analysis import top_report, verify_theorem
from .diagram import LinkDiagram, decorate, parse_pd
from .errors import DiagramError, SchemaError

__all__ = ["CorpusEntry", "load_corpus", "bundled_corpus_path", "run_entry", "run_corpus"]

SCHEMA_VERSION = 1
_ENTRY_FIELDS = {"name", "pd", "edge", "expected"}
_EXPECTED_FIELDS = {"alternative", "fil_max", "rank", "fibred", "alexander"}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    pd: str
    edge: int | None = None
    expected: dict = field(default_factory=dict)

    def diagram(self) -> LinkDiagram:
        return parse_pd(self.pd)


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("altlink") / "data" / "alternating.json"))


def _validate_entry(raw, index: int) -> CorpusEntry:
    if not isinstance(raw, dict):
        raise SchemaError(f"entry {index} is not an object")
    name = raw.get("name")
    if not isinstance(name, str) or not name:
        raise SchemaError(f"entry {index} has no name")
    unknown = set(raw) - _ENTRY_FIELDS
    if unknown:
        raise SchemaError(f"entry {name!r}: unknown fields {sorted(unknown)}")
    pd = raw.get("pd")
    if not isinstance(pd, str):
        raise SchemaError(f"entry {name!r}: pd must be a string")
    try:
        d = parse_pd(pd)
    except DiagramError as exc:
        raise SchemaError(f"entry {name!r}: pd does not parse: {exc}") from None
    edge = raw.get("edge")
    if edge is not None and (not isinstance(edge, int) or edge not in d.arc_ends):
        raise SchemaError(f"entry {name!r}: edge {edge!r} is not an arc of the diagram")
    expected = raw.get("expected", {})
    if not isinstance(expected, dict):
        raise SchemaError(f"entry {name!r}: expected must be an object")
    unknown = set(expected) - _EXPECTED_FIELDS
    if unknown:
        raise SchemaError(f"entry {name!r}: unknown expectation fields {sorted(unknown)}")
    try:
        if "fil_max" in expected:
            HalfInt.parse(str(expected["fil_max"]))
        if "alexander" in expected:
            parse_poly(expected["alexander"])
    except ValueError as exc:
        raise SchemaError(f"entry {name!r}: {exc}") from None
    for key in ("alternative", "fibred"):
        if key in expected and not isinstance(expected[key], bool):
            raise SchemaError(f"entry {name!r}: {key} must be a boolean")
    if "rank" in expected and (not isinstance(expected["rank"], int) or expected["rank"] < 0):
        raise SchemaError(f"entry {name!r}: rank must be a nonnegative integer")
    return CorpusEntry(name, pd, edge, dict(expected))


def load_corpus(path: str | os.PathLike) -> list[CorpusEntry]:
    """Read and validate a corpus file.  Raises OSError or SchemaError."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top level must be an object")
    unknown = set(data) - {"schema", "entries"}
    if unknown:
        raise SchemaError(f"{path}: unknown top-level fields {sorted(unknown)}")
    if data.get("schema") != SCHEMA_VERSION:
        raise SchemaError(f"{path}: unsupported schema {data.get('schema')!r}")
    entries = data.get("entries")
    if not isinstance(entries, list):
        raise SchemaError(f"{path}: entries must be a list")
    return [_validate_entry(raw, i) for i, raw in enumerate(entries)]


def _compare(expected: dict, report) -> list[dict]:
    out = []
    observed = {
        "alternative": report.alternative,
        "fil_max": None if report.fil_max is None else str(report.fil_max),
        "rank": report.rank,
        "fibred": report.fibred,
        "alexander": str(report.alexander),
    }
    for key in sorted(expected):
        want = expected[key]
        got = observed[key]
        if key == "alexander":
            ok = equal_up_to_unit(parse_poly(want), report.alexander)
        elif key == "fil_max":
            ok = got is not None and HalfInt.parse(str(want)) == HalfInt.parse(got)
        else:
            ok = want == got
        out.append({"field": key, "expected": want, "observed": got, "ok": ok})
    return out


def run_entry(entry: CorpusEntry, brute: bool = False) -> dict:
    dd = decorate(entry.diagram(), entry.edge)
    report = top_report(dd, brute=brute)
    verification = verify_theorem(dd) if report.alternative else None
    expectations = _compare(entry.expected, report)
    passed = all(e["ok"] for e in expectations) and all(c.passed for c in report.checks)
    if verification is not None:
        passed = passed and verification.passed
    return {
        "name": entry.name,
        "passed": passed,
        "report": report.to_json(),
        "verification": None if verification is None else verification.to_json(),
        "expectations": expectations,
    }


def _run_one(args):
    entry, brute = args
    return run_entry(entry, brute)


def worker_count() -> int:
    raw = os.environ.get("ALTLINK_THREADS", "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            raise SchemaError(f"ALTLINK_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def run_corpus(entries: list[CorpusEntry], brute: bool = False, workers: int | None = None) -> list[dict]:
    """Run every entry; results keep corpus order."""
    workers = worker_count() if workers is None else workers
    jobs = [(e, brute) for e in entries]
    if workers <= 1 or len(entries) <= 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=min(workers, len(entries))) as pool:
        return list(pool.map(_run_one, jobs))
