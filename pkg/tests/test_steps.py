"""Replay of every printed translation step through ``deduce_with_hint``."""

import pytest

from supero.engine import deduce_with_hint
from supero.flags import VermaFlag
from supero.lattice import Shape
from supero.reps import RepKind
from supero.tables.defects import KNOWN
from supero.tables.notation import guard_holds, instantiate, parse_display
from supero.tables.steps import STEPS


def step_envs(step):
    if step.shape == "3x1":
        grid = [{"a": a, "b": b, "c": 0} for a in range(-5, 7) for b in range(-5, 7)]
    else:
        grid = [{"a": a, "b": b} for a in (0, 5) for b in range(a - 4, a + 1)]
    return [e for e in grid if e["a"] >= e["b"] and guard_holds(step.guard, e)]


def replay(step, env):
    """Printed multiset (or None if unreadable) and the engine projection (or None)."""
    shape = Shape.parse(step.shape)
    lam = instantiate(step.target, env, shape)
    mu = instantiate(step.mu, env, shape)
    terms = parse_display(step.display, env, shape)
    printed = None
    if all(t.weight is not None for t in terms):
        counts = {}
        for t in terms:
            counts[t.weight] = counts.get(t.weight, 0) + t.coeff
        printed = VermaFlag(counts, shape)
    try:
        got = deduce_with_hint(lam, mu, RepKind.parse(step.rep))
    except ValueError:
        got = None
    return printed, got


def exact(step):
    envs = step_envs(step)
    assert envs, step.case_id
    for env in envs:
        printed, got = replay(step, env)
        if printed is None or got is None or printed != got:
            return False
    return True


def test_fixture_count():
    assert len(STEPS) >= 50
    assert len({s.case_id for s in STEPS}) == len(STEPS)


@pytest.mark.parametrize("step", STEPS, ids=lambda s: s.case_id)
def test_step_is_exact_or_ledgered(step):
    known = KNOWN.get(("proof steps", step.case_id))
    display_kinds = {
        k for k in (known.kinds if known else ())
        if not k.startswith("printed-pmu-") and k != "pmu-inconsistent"
    }
    if display_kinds:
        assert not exact(step)
    else:
        assert exact(step)
