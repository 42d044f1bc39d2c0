import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import coarse_grade, fixture, grade, labels
from fuzzysoft.cli import fixture_dir
from fuzzysoft.workspace import (
    SCHEMA_VERSION,
    WorkspaceError,
    load_workspace,
    parse_workspace,
    serialize_workspace,
    to_dict,
)

FIXTURES = sorted(p.name for p in fixture_dir().glob("*.fsr"))


def raw(name):
    return json.loads((fixture_dir() / name).read_text(encoding="utf-8"))


def errors_of(data):
    text = data if isinstance(data, str) else json.dumps(data)
    with pytest.raises(WorkspaceError) as info:
        parse_workspace(text)
    return info.value.errors


def test_house_document_shape():
    doc = fixture("app1.fsr")
    assert list(doc.universes) == ["houses"]
    assert len(doc.universes["houses"]) == 7
    assert len(doc.fuzzy_soft_sets) == 4
    assert len(doc.queries) == 1
    assert doc.query().expected["winner"] == "h7"


def test_out_of_range_grade_names_set_parameter_and_element():
    data = raw("app1.fsr")
    data["fuzzy_soft_sets"][1]["parameters"]["beautiful"]["h3"] = 1.2
    [(path, reason)] = errors_of(data)
    assert "F2" in path and "beautiful" in path and "h3" in path
    assert "1.2" in reason


def test_unknown_set_in_query():
    data = raw("app1.fsr")
    data["queries"][0]["criteria"][0]["set"] = "cost2"
    [(path, reason)] = errors_of(data)
    assert "cost2" in reason and path.startswith("queries")


def test_unknown_parameter_and_label():
    data = raw("app1.fsr")
    data["queries"][0]["criteria"][0]["parameter"] = "gold plated"
    [(_, reason)] = errors_of(data)
    assert "gold plated" in reason
    data = raw("app1.fsr")
    data["queries"][0]["expected"]["winner"] = "h99"
    [(path, reason)] = errors_of(data)
    assert path.endswith("winner") and "h99" in reason


def test_unknown_keys_are_rejected():
    data = raw("app1.fsr")
    data["bogus"] = 1
    data["fuzzy_soft_sets"][0]["colour"] = "red"
    paths = [p for p, _ in errors_of(data)]
    assert "$.bogus" in paths
    assert any("colour" in p for p in paths)


def test_duplicate_json_keys_are_rejected():
    text = '{"version": 1, "universes": {"u": ["a"], "u": ["b"]}}'
    [(_, reason)] = errors_of(text)
    assert "duplicate" in reason


def test_duplicate_names_are_rejected():
    data = raw("app1.fsr")
    data["fuzzy_soft_sets"].append(dict(data["fuzzy_soft_sets"][0]))
    assert any("duplicate" in r for _, r in errors_of(data))
    data = raw("app1.fsr")
    data["universes"]["houses"].append("h1")
    assert errors_of(data)


def test_missing_grade_and_unknown_universe():
    data = raw("app1.fsr")
    del data["fuzzy_soft_sets"][0]["parameters"]["cheap"]["h4"]
    data["fuzzy_soft_sets"][1]["universe"] = "flats"
    errs = errors_of(data)
    assert any("h4" in p or "h4" in r for p, r in errs)
    assert any("flats" in r for _, r in errs)


@pytest.mark.parametrize("text", ["", "[1, 2]", "{", '{"version": 99}'])
def test_malformed_documents(text):
    assert errors_of(text)


def test_version_is_required():
    data = raw("payoff.fsr")
    data["version"] = SCHEMA_VERSION
    parse_workspace(json.dumps(data))
    del data["version"]
    assert errors_of(data)


@pytest.mark.parametrize("name", FIXTURES)
def test_every_fixture_parses(name):
    load_workspace(fixture_dir() / name)


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_round_trip(name):
    doc = fixture(name)
    text = serialize_workspace(doc)
    again = parse_workspace(text)
    assert again == doc
    assert serialize_workspace(again) == text


@st.composite
def documents(draw):
    n = draw(st.integers(1, 5))
    elements = labels(n, "x")
    sets = []
    for k in range(draw(st.integers(1, 3))):
        params = draw(st.lists(st.sampled_from(["low", "high", "mid", "odd name"]), min_size=1, max_size=3, unique=True))
        sets.append({
            "name": f"S{k}",
            "universe": "u",
            "parameters": {
                p: {e: draw(st.one_of(grade, coarse_grade)) for e in elements} for p in params
            },
        })
    criteria = [
        {"set": s["name"], "parameter": draw(st.sampled_from(sorted(s["parameters"])))}
        for s in sets
    ]
    cells = [[draw(coarse_grade) for _ in elements] for _ in elements]
    return {
        "version": SCHEMA_VERSION,
        "universes": {"u": elements},
        "fuzzy_soft_sets": sets,
        "relations": [{"name": "r", "rows": "u", "cols": "u", "cells": cells}],
        "queries": [{"name": "q", "combiner": draw(st.sampled_from(["min", "product"])), "criteria": criteria}],
        "payoff_tables": [{
            "name": "p",
            "states": ["s1", "s2"],
            "actions": ["a1"],
            "payoffs": [[draw(st.integers(-50, 50))], [draw(st.floats(-1e3, 1e3, allow_nan=False))]],
        }],
    }


@given(documents())
def test_random_document_round_trip(data):
    doc = parse_workspace(json.dumps(data))
    text = serialize_workspace(doc)
    assert parse_workspace(text) == doc
    assert json.loads(text) == to_dict(doc)
