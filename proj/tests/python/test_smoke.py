import json

import pytest

import leftorder


@pytest.fixture(scope="module")
def groups():
    return {name: entry["text"] for name, entry in leftorder.corpus().items()}


def test_betti_numbers(groups):
    assert leftorder.first_betti(groups["z"]) == 1
    assert leftorder.first_betti(groups["zz"]) == 2
    assert leftorder.first_betti(groups["thurston"]) == 0
    assert leftorder.smith_diagonal(groups["z3"]) == [3]


def test_torsion_certificate_replays(groups):
    doc = leftorder.check_lo(groups["z2"], ["a"], 2)
    assert doc["kind"] == "non_lo_certificate"
    ok, kind, message = leftorder.verify(doc)
    assert ok, message
    assert kind == "non_lo_certificate"


def test_realization_of_z(groups):
    doc = leftorder.realize(groups["z"], "lex", 3, 5)
    assert doc["status"] == "PASS"
    assert leftorder.verify(doc)[0]


def test_germ_order_transcript():
    doc = leftorder.germ_order([("f", "x + s", 1)], 4, 3)
    assert leftorder.verify(doc)[0]


def test_obstruction_report(groups):
    doc = leftorder.obstruct(groups["z3"], [("a", "x", 1)], 4)
    assert doc["verdict"] == "TrivialRepresentation"
    assert leftorder.verify(doc)[0]


def test_corrupted_document_rejected(groups):
    doc = leftorder.check_lo(groups["z2"], ["a"], 2)
    tampered = json.loads(doc.text)
    tampered["presentation"] = tampered["presentation"].replace("a^2", "a^4")
    ok, _, message = leftorder.verify(json.dumps(tampered))
    assert not ok
    assert message


def test_parse_error_is_raised():
    with pytest.raises(leftorder.ParseError):
        leftorder.first_betti("gens: a\nrels: a b\n")
    with pytest.raises(leftorder.Error):
        leftorder.first_betti("gens: a\nrels: a b\n")


def test_germ_evaluation():
    assert leftorder.eval_germ("x + s", "1", "1/2", "1/4") == "3/4"
