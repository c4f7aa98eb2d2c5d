import json
from pathlib import Path

import pytest

import jamesloop

DATA = Path(__file__).resolve().parents[2] / "tests" / "data"


def load(name):
    return json.loads((DATA / name).read_text())


def test_circle_homology():
    assert jamesloop.homology(load("circle.json")) == {"dims": {"0": 1, "1": 1}}


def test_torus_over_f2():
    assert jamesloop.homology(load("torus.json"), field="zp:2") == {"dims": {"0": 1, "1": 2, "2": 1}}


def test_loop_homology_of_torus():
    assert jamesloop.loop_homology(load("torus.json"), degree=5) == {"series": [1, 2, 5, 12, 29, 70]}


def test_sec_reads_letters():
    word = jamesloop.sec(load("two_letters.json"), load("circle.json"))
    assert [w["coords"] for w in word] == [["1/3"], ["2/3"]]


def test_jbeta_then_sec_drops_interval_letters():
    circle = load("circle.json")
    loop = jamesloop.j_beta_prime(load("word.json"), circle)
    assert jamesloop.sec(loop, circle) == [
        {"cube": "e", "coords": ["1/3"]},
        {"cube": "e", "coords": ["2/3"]},
    ]


def test_plateau_needs_increase():
    circle = load("circle.json")
    with pytest.raises(jamesloop.DomainError):
        jamesloop.sec(load("plateau.json"), circle)
    increased = jamesloop.make_increasing(load("plateau.json"), circle, epsilon="1/4")
    assert jamesloop.sec(increased, circle) == [{"cube": "e", "coords": ["1/4"]}]


def test_straighten_keeps_the_word():
    circle = load("circle.json")
    out = jamesloop.straighten(load("two_letters.json"), circle, samples=3)
    assert len(out["frames"]) == 3
    assert jamesloop.sec(out["result"], circle) == out["sec"]


def test_contract_ends_at_constant_loop():
    frames = jamesloop.contract(load("two_letters.json"), load("circle.json"))["frames"]
    assert all(seg["kind"] == "star" for seg in frames[-1]["segments"])


def test_evaluate():
    point = jamesloop.evaluate(load("two_letters.json"), load("circle.json"), "1")
    assert point == {"star": False, "h": "0", "x": {"cube": "e", "coords": ["1/3"]}}


def test_bad_square_is_reported():
    report = jamesloop.validate(load("bad_square.json"))
    assert not report["valid"] and len(report["violations"]) == 2
    with pytest.raises(jamesloop.DomainError):
        jamesloop.homology(load("bad_square.json"))


def test_malformed_input():
    with pytest.raises(jamesloop.ParseError):
        jamesloop.sec(load("bad_rational.json"), load("circle.json"))
    with pytest.raises(jamesloop.ParseError):
        jamesloop.validate(load("dangling.json"))
    with pytest.raises(jamesloop.ParseError):
        jamesloop.homology(load("circle.json"), field="zp:4")
    with pytest.raises(ValueError):
        jamesloop.validate("{not json")


def test_selftest_passes():
    results = jamesloop.selftest()
    assert len(results) == 10
    assert all(r["passed"] for r in results), [r for r in results if not r["passed"]]
