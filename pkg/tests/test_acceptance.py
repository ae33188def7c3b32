"""Acceptance criteria 1 to 6, one printed pass/fail line each.

Criteria 3 and 4 are checked twice.  The strict form compares against every
printed entry and is expected to fail on the reviewed defects; the qualified
form accepts exactly the reviewed defects and nothing else.
"""

import json
import time

import pytest

from supero import cli
from supero.bgg import composition_series
from supero.checks import run_all
from supero.engine import projective_flag
from supero.linkage import atypicality
from supero.tables import GL22, GL22_JH, GL31, composition_gl22
from supero.tables.defects import KNOWN
from supero.tables.steps import STEPS

from conftest import w
from test_steps import exact

STEP_DISPLAY_KINDS = {"malformed-term", "out-of-block-term", "repeated-term",
                      "extra-term", "missing-term", "rep-mismatch"}


def gl31_pairs(c=0):
    pairs = set()
    for b in (c + 2, c + 3):
        pairs.update((a, b) for a in range(b, b + 4))
    pairs.update((a, c + 1) for a in (c + 1, c + 2, c + 3, c + 4))
    pairs.update((a, c) for a in (c, c + 1, c + 2, c + 3))
    for b in (c - 1, c - 2, c - 3, c - 4):
        pairs.update((a, b) for a in {b, b + 1, c - 1, c, c + 1, c + 2} if a >= b)
    return sorted(pairs)


def table_grid(table, envs):
    """Weights of ``table``'s degree reached by instantiating each family, with
    the set of branches hit."""
    weights, hit = set(), set()
    for env in envs:
        for family in table.families():
            lam = table.instantiate(family, env)
            if atypicality(lam).degree != table.degree:
                continue
            for m in table.matches(lam):
                if m.branch.family == family:
                    weights.add(lam)
                    hit.add(m.case_id)
    return sorted(weights), hit


def gl22_envs(a_values, low=3):
    return [{"a": a, "b": b} for a in a_values for b in range(a - low, a + 1)]


def compare_projectives(table, weights):
    """Mismatches at non-ledgered branches, and ledgered branches seen."""
    mismatches, ledgered = [], set()
    for lam in weights:
        case = table.lookup(lam).case_id
        if (table.name, case) in KNOWN:
            ledgered.add(case)
        elif projective_flag(lam) != table(lam):
            mismatches.append((lam, case))
    return mismatches, ledgered


def test_criterion_1_gl31_tables(acceptance_line):
    start = time.perf_counter()
    envs = [{"a": a, "b": b, "c": 0} for a, b in gl31_pairs()]
    weights, hit = table_grid(GL31, envs)
    missed = [br.case_id for br in GL31.branches if br.case_id not in hit]
    mismatches, ledgered = compare_projectives(GL31, weights)
    elapsed = time.perf_counter() - start
    ok = len(weights) >= 40 and not missed and not mismatches and elapsed < 10
    acceptance_line(
        1, ok,
        f"{len(weights)} weights, {len(hit)}/{len(GL31.branches)} branches, "
        f"{len(mismatches)} mismatches, {len(ledgered)} ledgered branches, {elapsed:.1f}s",
    )
    assert not missed
    assert not mismatches, mismatches[:5]
    assert len(weights) >= 40 and elapsed < 10


def test_criterion_2_gl22_tables(acceptance_line):
    weights, hit = table_grid(GL22, gl22_envs((0, 5)))
    missed = [br.case_id for br in GL22.branches if br.case_id not in hit]
    mismatches, ledgered = compare_projectives(GL22, weights)
    doubles = []
    for a in (0, 5):
        lam = w(f"{a},{a - 1}|{a - 1},{a}")
        doubles.append(projective_flag(lam).mult(w(f"{a + 1},{a}|{a},{a + 1}")) == 2)
        doubles.append(GL22(lam) == projective_flag(lam))
    ok = not missed and not mismatches and not ledgered and all(doubles)
    acceptance_line(
        2, ok,
        f"{len(weights)} weights, {len(hit)}/{len(GL22.branches)} branches, "
        f"{len(mismatches)} mismatches, multiplicity-2 entry {'ok' if all(doubles) else 'wrong'}",
    )
    assert not missed and not ledgered
    assert not mismatches, mismatches
    assert all(doubles)


def composition_cases():
    weights, hit = table_grid(GL22_JH, gl22_envs((0, 1, 5), low=4))
    cases = []
    for mu in weights:
        case = GL22_JH.lookup(mu).case_id
        # window 3 with the built-in stability check against window 4
        derived = composition_series(mu, window=3)
        cases.append((mu, case, derived == composition_gl22(mu)))
    return cases, hit


@pytest.fixture(scope="module")
def compositions():
    return composition_cases()


def double_factor_ok():
    out = []
    for a in (0, 1, 5):
        series = composition_series(w(f"{a},{a}|{a},{a}"), window=3)
        out.append(series.mult(w(f"{a - 1},{a}|{a},{a - 1}")) == 2)
    return all(out)


@pytest.mark.xfail(strict=True, reason="printed composition series contradict reciprocity; see ledger")
def test_criterion_3_compositions_strict(acceptance_line, compositions):
    cases, hit = compositions
    bad = sorted({case for _, case, same in cases if not same})
    ok = not bad and len(hit) == len(GL22_JH.branches) and double_factor_ok()
    acceptance_line(
        3, ok,
        f"{len(cases)} weights, {len(hit)}/{len(GL22_JH.branches)} branches, "
        f"{len(bad)} branches differ from the printed series",
        "strict",
    )
    assert ok


def test_criterion_3_compositions_ledger_qualified(acceptance_line, compositions):
    cases, hit = compositions
    unexplained = [(mu, c) for mu, c, same in cases if not same and (GL22_JH.name, c) not in KNOWN]
    differing = {c for _, c, same in cases if not same}
    stale = [c for (src, c) in KNOWN if src == GL22_JH.name and c not in differing]
    doubles = double_factor_ok()
    ok = not unexplained and not stale and len(hit) == len(GL22_JH.branches) and doubles
    acceptance_line(
        3, ok,
        f"{len(cases)} weights, {len(hit)}/{len(GL22_JH.branches)} branches, window 4 stable, "
        f"{len(differing)} ledgered branches, {len(unexplained)} unexplained",
        "ledger-qualified",
    )
    assert not unexplained, unexplained
    assert not stale
    assert doubles


@pytest.fixture(scope="module")
def step_results():
    return [(step, exact(step)) for step in STEPS]


@pytest.mark.xfail(strict=True, reason="six printed displays are self-inconsistent; see ledger")
def test_criterion_4_proof_steps_strict(acceptance_line, step_results):
    n_exact = sum(ok for _, ok in step_results)
    ok = n_exact == len(step_results) and len(step_results) >= 50
    acceptance_line(4, ok, f"{n_exact}/{len(step_results)} displays bit-exact", "strict")
    assert ok


def test_criterion_4_proof_steps_ledger_qualified(acceptance_line, step_results):
    wrong = []
    for step, is_exact in step_results:
        known = KNOWN.get(("proof steps", step.case_id))
        flagged = bool(known and STEP_DISPLAY_KINDS & set(known.kinds))
        if flagged == is_exact:
            wrong.append(step.case_id)
    n_exact = sum(ok for _, ok in step_results)
    ok = not wrong and len(step_results) >= 50
    acceptance_line(
        4, ok,
        f"{n_exact}/{len(step_results)} displays bit-exact, "
        f"{len(step_results) - n_exact} ledgered, {len(wrong)} unexplained",
        "ledger-qualified",
    )
    assert not wrong, wrong


def test_criterion_5_property_suites(acceptance_line):
    results = run_all()
    for r in results:
        print(r.line())
    ok = all(r.ok for r in results)
    acceptance_line(5, ok, f"{sum(r.ok for r in results)}/{len(results)} suites pass")
    assert ok, [f for r in results for f in r.failures]


REQUIRED_ENTRIES = {
    ("gl(3|1) projectives", "{b,c,a|c} [b<c, a=c+1, b<c-1]"): "repeated-term",
    ("gl(3|1) projectives", "{c,b,a|c} [b<c, a<c, a>b]"): "malformed-term",
}


def test_criterion_6_discrepancy_ledger(acceptance_line, capsys):
    code = cli.run(["verify", "--suite", "paper", "--format", "json"])
    payload = json.loads(capsys.readouterr().out)
    ledger = {(e["source"], e["case"]): e for e in payload["ledger"]}
    present = [
        key in ledger
        and kind in ledger[key]["kinds"]
        and ledger[key]["derived_passes_invariants"]
        for key, kind in REQUIRED_ENTRIES.items()
    ]
    all_valid = all(e["derived_passes_invariants"] for e in payload["ledger"])
    silent = payload["unexpected"] or payload["stale"] or payload["failures"]
    ok = code == 0 and all(present) and all_valid and not silent
    acceptance_line(
        6, ok,
        f"exit {code}, {len(ledger)} ledger entries, required entries "
        f"{sum(present)}/{len(present)}, all derived flags pass invariants: {all_valid}",
    )
    assert code == 0
    assert all(present)
    assert all_valid and not silent
