"""The claim registry: defaults, bounds, witnesses."""

import json

import pytest

from symhecke import verify as vf


@pytest.mark.parametrize("claim", sorted(vf.CLAIMS))
def test_every_claim_at_defaults(claim):
    r = vf.run_verification(claim)
    assert r.status in ("verified", "divisibility-holds"), r.witness
    assert r.ok and r.witness is None
    assert r.params == vf.default_params(claim)
    json.dumps(r.to_json())


def test_unknown_claim():
    with pytest.raises(KeyError):
        vf.run_verification("NOPE")
    with pytest.raises(KeyError):
        vf.default_params("NOPE")


@pytest.mark.parametrize("claim,params", [
    ("HB.quasi_idem", {"n": 9}),
    ("AK.basis", {"k": 0, "n": 2}),
    ("AK.basis", {"k": 3, "n": 4}),
    ("AK.conj", {"k": 7}),
    ("FH.dim", {"k": 2, "n": 5}),
    ("HB.quasi_idem", {"k": 2}),
])
def test_bounds(claim, params):
    with pytest.raises(vf.BoundsError):
        vf.run_verification(claim, params)


def test_falsification_names_the_failing_check(monkeypatch):
    def bogus(ch, details, n):
        ch.add("first", True)
        ch.add("second", False, "g0 != g1")
        ch.add("third", False)

    monkeypatch.setitem(vf.CLAIMS, "X.bogus", vf._Claim(bogus, {"n": 1}, [{"n": 1}]))
    r = vf.run_verification("X.bogus")
    assert r.status == "falsified" and not r.ok
    assert r.witness == "second: g0 != g1"
    assert r.details["checks"] == {"first": True, "second": False, "third": False}


def test_divisibility_report_carries_element():
    r = vf.run_verification("AK.conj", {"k": 1})
    assert r.status == "divisibility-holds"
    assert r.details["element"]["terms"]
