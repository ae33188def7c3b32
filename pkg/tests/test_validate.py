import json
from functools import lru_cache

from supero.flags import VermaFlag
from supero.lattice import Shape, Weight
from supero.tables.defects import KNOWN
from supero.tables.validate import classify, render, validate_tables

from conftest import GL31, w


@lru_cache(maxsize=None)
def report():
    return validate_tables()


def test_ledger_matches_the_reviewed_registry():
    r = report()
    assert r.failures == []
    assert [e.key for e in r.unexpected] == []
    assert r.stale == []
    assert {e.key for e in r.entries} == set(KNOWN)
    assert r.ok


def test_required_entries_are_present_with_engine_flags():
    entries = report().by_key()
    dup = entries["gl(3|1) projectives", "{b,c,a|c} [b<c, a=c+1, b<c-1]"]
    assert "repeated-term" in dup.kinds
    assert dup.invariants_ok and dup.derived_by == "engine"
    assert dup.printed.count("M_{c+1,b,c|c}") == 2
    bad = entries["gl(3|1) projectives", "{c,b,a|c} [b<c, a<c, a>b]"]
    assert "malformed-term" in bad.kinds and bad.invariants_ok
    assert bad.derived == "M_{c,b,a|c} + M_{c,a,b|c} + M_{c+1,b,a|c+1} + M_{c+1,a,b|c+1}"


def test_well_formed_branch_has_no_entry():
    keys = report().by_key()
    assert ("gl(2|2) projectives", "{a,b|b,a} [b<a-1]") not in keys
    assert not any(source == "gl(2|2) projectives" for source, _ in keys)


def test_every_entry_has_a_derivation_passing_invariants():
    for e in report().entries:
        assert e.invariants_ok, e.key
        assert e.samples, e.key


def test_report_json():
    data = json.loads(report().dumps())
    assert data["ok"] is True
    assert len(data["ledger"]) == len(KNOWN)
    assert all(entry["reviewed"] for entry in data["ledger"])


def test_classify_kinds():
    env = {"a": 5, "b": 3, "c": 1}
    derived = VermaFlag([w("5,3,1|1"), w("5,3,2|2")]).counter()
    anchor = w("5,3,1|1")
    assert classify("M_{a,b,c|c} + M_{a,b,c+1|c+1}", env, GL31, derived, anchor) == set()
    assert classify("M_{a,b,c|c}", env, GL31, derived, anchor) == {"missing-term"}
    assert classify("M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,b,c+1|c+1}", env, GL31, derived,
                    anchor) == {"repeated-term"}
    assert classify("M_{a,b,c|c} + M_{a,b,c+1,c+1}", env, GL31, derived, anchor) == {
        "malformed-term", "missing-term"}
    assert "out-of-block-term" in classify(
        "M_{a,b,c|c} + M_{a,b,c+1|c+1} + M_{a,a,a|c}", env, GL31, derived, anchor)


def test_render_uses_parameters():
    samples = []
    for c in (0, 3):
        for a in (c + 2, c + 5):
            env = {"a": a, "b": c + 1, "c": c}
            samples.append((env, VermaFlag([Weight((a, c + 1, c), (c,)), Weight((a, c + 2, c + 1), (c + 2,))])))
    assert render(samples, ("c", "a", "b")) == "M_{a,c+1,c|c} + M_{a,c+2,c+1|c+2}"
