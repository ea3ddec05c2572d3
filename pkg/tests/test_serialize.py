import json

import pytest

from permwordle.construct import construct_general, csl_strategy, inductive_strategy
from permwordle.game import Strategy, StrategyError, play
from permwordle.oracle import census, verify_theorem
from permwordle.serialize import (
    SpecError,
    census_table,
    census_to_dict,
    dumps,
    offender_to_dict,
    parse_strategy,
    theorem_report_to_dict,
    transcript_from_dict,
    transcript_to_dict,
)


@pytest.mark.parametrize(
    "spec, top",
    [
        ("cs:4", (2, 3, 4, 1)),
        ("lcs:4", (4, 1, 2, 3)),
        ("csl:5", (5, 1, 2, 3, 4)),
        ("csr:5", (2, 3, 4, 5, 1)),
        ("inductive:right:[2,4,1,3]", (2, 4, 1, 3)),
        ("inductive:left:[2, 4, 1, 3]", (2, 4, 1, 3)),
    ],
)
def test_parse_named_specs(spec, top):
    s = parse_strategy(spec)
    assert s.components[-1] == top


def test_parse_inductive_left_base():
    assert parse_strategy("inductive:left:[2,4,1,3]").components[2] == (3, 1, 2)


def test_parse_explicit_and_file(tmp_path):
    literal = "[[1],[2,1],[2,3,1],[2,1,4,3],[3,4,5,2,1]]"
    s = parse_strategy(literal)
    assert s.components[4] == (3, 4, 5, 2, 1)
    path = tmp_path / "example.json"
    path.write_text(literal)
    assert parse_strategy(str(path)).components == s.components
    path.write_text(json.dumps({"label": "explicit", "components": json.loads(literal)}))
    assert parse_strategy(str(path)).label == "explicit"


@pytest.mark.parametrize("bad", ["cs", "foo:3", "inductive:up:[2,1]", "inductive:right:[1,2,3]", "[[1],"])
def test_parse_rejects(bad):
    with pytest.raises((SpecError, StrategyError)):
        parse_strategy(bad)


def test_transcript_document_fields_and_round_trip():
    s = Strategy.from_lists([[1], [2, 1], [2, 3, 1], [2, 1, 4, 3], [3, 4, 5, 2, 1]], "example")
    t = play([4, 1, 5, 2, 3], s)
    doc = transcript_to_dict(t)
    assert list(doc) == ["secret", "strategy", "records", "outcome", "repetitions"]
    assert doc["strategy"]["label"] == "example"
    assert doc["records"][1] == {"turn": 2, "guess": [5, 4, 1, 2, 3], "correct_positions": [4, 5]}
    assert doc["outcome"] == {"type": "solved", "turn": 4}
    assert doc["repetitions"] == [{"position": 1, "value": 1, "turns": [1, 3], "infinite": False}]
    assert transcript_from_dict(json.loads(dumps(doc))) == t


def test_loop_transcript_flags_infinite():
    t = play([3, 4, 1, 2], inductive_strategy([2, 1, 4, 3]))
    doc = transcript_to_dict(t)
    assert doc["outcome"] == {"type": "loop", "turn": 3}
    assert all(r["infinite"] for r in doc["repetitions"])


def test_offender_document():
    doc = offender_to_dict(construct_general(inductive_strategy([2, 4, 1, 3])))
    assert doc["omega"] == [4, 1, 2, 3]
    assert doc["case"]["tag"] == "Contains2"
    assert doc["evidence"]["secret"] == [4, 1, 2, 3]


def test_census_document_and_table():
    c = census(csl_strategy(4), keep_list=True)
    doc = census_to_dict(c)
    assert doc["total_offenders"] == 4
    assert doc["offender_definition"] == "repeating or looping"
    assert len(doc["offenders"]) == 4
    assert "elapsed" not in doc
    table = census_table([c, census(csl_strategy(5))]).splitlines()
    assert table[0] == "label,n,clean,repeating,looping"
    assert table[1] == "csl:4,4,20,4,0"
    assert table[2].startswith("csl:5,5,")


def test_structured_output_is_deterministic():
    a = dumps(theorem_report_to_dict(verify_theorem(4)))
    b = dumps(theorem_report_to_dict(verify_theorem(4)))
    assert a == b
    assert json.loads(a)["strategies_checked"] == 18
