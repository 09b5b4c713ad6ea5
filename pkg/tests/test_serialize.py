import json

import pytest
from hypothesis import given, settings, strategies as st

from prodstruct.generators import GenSpec, generate
from prodstruct.pipeline import decompose
from prodstruct.serialize import (
    ParseError,
    dumps_certificate,
    graph_to_graph6,
    graph_to_json,
    loads_certificate,
    parse_graph,
)
from prodstruct.verifier import verify_certificate


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["stacked", "grid-like", "edge-addition"]), st.integers(1, 60), st.integers(0, 999))
def test_certificate_round_trip(model, n, seed):
    cert = decompose(generate(GenSpec(model, n, seed)))
    text = dumps_certificate(cert)
    again = loads_certificate(text)
    assert dumps_certificate(again) == text
    assert verify_certificate(again).ok


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 40), st.integers(0, 999))
def test_graph6_and_json_agree(n, seed):
    g = generate(GenSpec("grid-like", n, seed))
    assert parse_graph(graph_to_graph6(g)) == parse_graph(json.dumps(graph_to_json(g))) == g


def test_graph6_header_accepted():
    assert parse_graph(">>graph6<<Bw\n").m == 3


@pytest.mark.parametrize(
    "text",
    ["", "{", '{"n": 3}', '{"n": 2, "edges": [[0, 0]]}', '{"n": "x", "edges": []}', "@@@@"],
)
def test_bad_graphs(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_schema_version_checked():
    doc = json.loads(dumps_certificate(decompose(generate(GenSpec("stacked", 6)))))
    doc["schema_version"] = 2
    with pytest.raises(ParseError, match="schema_version"):
        loads_certificate(json.dumps(doc))


def test_truncated_certificate():
    text = dumps_certificate(decompose(generate(GenSpec("stacked", 12))))
    with pytest.raises(ParseError):
        loads_certificate(text[: len(text) // 2])


def test_missing_field():
    doc = json.loads(dumps_certificate(decompose(generate(GenSpec("stacked", 6)))))
    del doc["partition"]
    with pytest.raises(ParseError, match="partition"):
        loads_certificate(json.dumps(doc))
