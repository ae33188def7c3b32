import itertools
from collections import Counter

from hypothesis import given
from hypothesis import strategies as st

from conftest import GL22, GL31
from strategies import shapes
from supero.checks import PRINTED_REP_WEIGHTS, parse_rep_weight
from supero.lattice import Shape, act, delta, eps, weyl_elements
from supero.reps import DUAL, ENGINE_REPS, NATURAL, RepKind, rep_dim, rep_weight_list, rep_weights

KINDS = [RepKind(base, k) for base in (NATURAL, DUAL) for k in (1, 2, 3)]


def test_wedge_square_of_natural_gl31():
    printed = Counter(parse_rep_weight(t, GL31) for t in PRINTED_REP_WEIGHTS[GL31, "L2V"].split(","))
    assert rep_weights(GL31, RepKind.parse("L2V")) == printed
    assert sum(printed.values()) == 7


def test_wedge_cube_of_natural_gl22():
    kind = RepKind.parse("L3V")
    weights = rep_weight_list(GL22, kind)
    assert len(weights) == 12
    tail = [parse_rep_weight(t, GL22) for t in ("3e1", "2e1+e2", "e1+2e2", "3e2")]
    assert list(weights[-4:]) == tail


def test_eps_enters_as_lowered_r():
    assert rep_weight_list(GL31, RepKind.parse("V")) == (
        delta(GL31, 1), delta(GL31, 2), delta(GL31, 3), eps(GL31, 1)
    )
    assert eps(GL31, 1).r == (-1,)


def test_dimension_examples():
    assert rep_dim(GL31, RepKind.parse("L2V")) == 7
    assert rep_dim(GL22, RepKind.parse("L2V")) == 8
    for m, n in itertools.product((1, 2, 3), repeat=2):
        assert rep_dim(Shape(m, n), RepKind.parse("V")) == m + n


def test_rep_names_round_trip():
    for name in ("V", "V*", "L2V", "L3V", "L2V*", "L3V*"):
        assert RepKind.parse(name).name == name
    assert [k.name for k in ENGINE_REPS] == ["V", "V*", "L2V", "L2V*", "L3V", "L3V*"]


def test_printed_lists_all_match():
    for (shape, name), text in PRINTED_REP_WEIGHTS.items():
        printed = Counter(parse_rep_weight(t, shape) for t in text.split(","))
        assert printed == rep_weights(shape, RepKind.parse(name)), (shape, name)


@given(shapes, st.sampled_from(KINDS))
def test_counts_match_dimension(shape, kind):
    assert sum(rep_weights(shape, kind).values()) == rep_dim(shape, kind)


@given(shapes, st.sampled_from(KINDS))
def test_weights_are_weyl_stable(shape, kind):
    ws = rep_weights(shape, kind)
    for g in weyl_elements(shape):
        assert Counter({act(g, v): k for v, k in ws.items()}) == ws


@given(shapes, st.integers(1, 3))
def test_dual_is_negated_natural(shape, k):
    nat = rep_weight_list(shape, RepKind(NATURAL, k))
    dual = rep_weight_list(shape, RepKind(DUAL, k))
    assert dual == tuple(-v for v in nat)
