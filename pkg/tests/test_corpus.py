import json

import pytest

from altlink.corpus import bundled_corpus_path, load_corpus, run_corpus, run_entry, worker_count
from altlink.errors import SchemaError


def write(tmp_path, payload):
    p = tmp_path / "c.json"
    p.write_text(json.dumps(payload))
    return p


def test_bundled_contents(corpus):
    assert len(corpus) >= 12
    names = " ".join(e.name for e in corpus)
    for needle in ["kink", "3_1 left", "3_1 right", "4_1", "5_2", "6_1", "Hopf", "T(2,4)", "pretzel", "square"]:
        assert needle in names
    decorated = [e for e in corpus if e.edge is not None]
    assert any(e.pd == d.pd for e in corpus for d in decorated if e is not d)


def test_top_level_copy_matches():
    from pathlib import Path

    root = Path(__file__).resolve().parents[1] / "corpus" / "alternating.json"
    assert root.read_bytes() == bundled_corpus_path().read_bytes()


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_corpus(tmp_path / "nope.json")


def test_bad_pd_names_entry(tmp_path):
    p = write(tmp_path, {"schema": 1, "entries": [{"name": "broken one", "pd": "X(1,2,3)"}]})
    with pytest.raises(SchemaError, match="broken one"):
        load_corpus(p)


@pytest.mark.parametrize("payload", [
    {"schema": 2, "entries": []},
    {"schema": 1},
    {"schema": 1, "entries": [], "extra": 1},
    {"schema": 1, "entries": [{"name": "a", "pd": "X(1,2,2,1)", "colour": 1}]},
    {"schema": 1, "entries": [{"name": "a", "pd": "X(1,2,2,1)", "expected": {"genus": 0}}]},
    {"schema": 1, "entries": [{"name": "a", "pd": "X(1,2,2,1)", "expected": {"fil_max": "1/3"}}]},
    {"schema": 1, "entries": [{"name": "a", "pd": "X(1,2,2,1)", "expected": {"rank": -1}}]},
    {"schema": 1, "entries": [{"name": "a", "pd": "X(1,2,2,1)", "edge": 7}]},
    {"schema": 1, "entries": [{"pd": "X(1,2,2,1)"}]},
])
def test_schema_errors(tmp_path, payload):
    with pytest.raises(SchemaError):
        load_corpus(write(tmp_path, payload))


def test_not_json(tmp_path):
    p = tmp_path / "c.json"
    p.write_text("{")
    with pytest.raises(SchemaError):
        load_corpus(p)


def test_every_entry_passes(corpus):
    for r in run_corpus(corpus, workers=1):
        assert r["passed"], r["name"]


def test_wrong_expectation_fails(corpus):
    entry = next(e for e in corpus if e.name == "5_2")
    from dataclasses import replace

    r = run_entry(replace(entry, expected={"rank": 1}))
    assert not r["passed"]
    assert r["expectations"] == [{"field": "rank", "expected": 1, "observed": 2, "ok": False}]


def test_parallel_order(corpus):
    serial = run_corpus(corpus, workers=1)
    parallel = run_corpus(corpus, workers=3)
    assert serial == parallel


def test_worker_env(monkeypatch):
    monkeypatch.setenv("ALTLINK_THREADS", "2")
    assert worker_count() == 2
    monkeypatch.setenv("ALTLINK_THREADS", "lots")
    with pytest.raises(SchemaError):
        worker_count()
