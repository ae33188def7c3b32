import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import GL22, GL31, w
from strategies import shapes, weights
from supero.flags import (
    AtypicalWeightError,
    CompositionSeries,
    VermaFlag,
    is_minimal,
    project_block,
    tensor_flag,
    translate,
    typical_projective,
    unique_minimum,
)
from supero.lattice import ShapeError
from supero.linkage import block_id, bruhat_leq, is_typical
from supero.reps import ENGINE_REPS, RepKind, rep_dim

V = RepKind.parse("V")
L2V = RepKind.parse("L2V")


def flag(*texts):
    return VermaFlag([w(t) for t in texts])


def test_typical_projective_examples():
    a, b, c = 5, 2, -1
    assert typical_projective(w(f"{a},{b}|{b+1},{a+1}")) == flag(f"{a},{b}|{b+1},{a+1}")
    a, b, c = 6, 3, 0
    assert typical_projective(w(f"{a},{b},{c}|{c+1}")) == flag(f"{a},{b},{c}|{c+1}")
    a, b = 5, 2
    assert typical_projective(w(f"{b},{a}|{b+1},{a+1}")) == flag(
        f"{b},{a}|{b+1},{a+1}", f"{a},{b}|{b+1},{a+1}"
    )


def test_typical_projective_rejects_atypical():
    with pytest.raises(AtypicalWeightError):
        typical_projective(w("1,0|0,1"))


def test_tensor_with_natural_shifts_four_ways():
    out = tensor_flag(flag("6,3,0|1"), V)
    assert len(out) == 4 and out.total() == 4


def test_projection_example_gl31():
    a, b, c = 6, 3, 0
    out = translate(flag(f"{a},{b},{c}|{c+1}"), V, w(f"{a},{b},{c}|{c}"))
    assert out == flag(f"{a},{b},{c}|{c}", f"{a},{b},{c+1}|{c+1}")


def test_projection_example_gl22():
    a, b = 5, 2
    out = translate(flag(f"{a},{b}|{b+1},{a+1}"), L2V, w("0,0|0,0"))
    assert out == flag(
        f"{a},{b}|{b},{a}", f"{a+1},{b}|{b},{a+1}", f"{a},{b+1}|{b+1},{a}",
        f"{a+1},{b+1}|{b+1},{a+1}",
    )


def test_projection_inside_block_is_unchanged():
    f = flag("1,0|0,1", "1,1|1,1")
    assert project_block(f, block_id(w("0,0|0,0"))) == f


def test_unique_minimum_examples():
    a, b, c = 6, 3, 0
    lam = w(f"{a},{b},{c}|{c}")
    f = flag(f"{a},{b},{c}|{c}", f"{a},{b},{c+1}|{c+1}")
    assert unique_minimum(f, lam)
    assert not unique_minimum(VermaFlag({lam: 2}), lam)
    # an incomparable weight does not disqualify lam
    other = w(f"{a+7},{b},{c}|{c+1}")
    assert not bruhat_leq(other, lam) and not bruhat_leq(lam, other)
    assert unique_minimum(f + VermaFlag([other]), lam)
    with pytest.raises(KeyError):
        unique_minimum(f, w("9,9,9|9"))


def test_multiset_algebra():
    f = flag("1,0|0,1", "1,0|0,1", "0,0|0,0")
    g = flag("1,0|0,1")
    assert f.mult(w("1,0|0,1")) == 2
    assert (f - g).total() == 2
    assert g <= f and not f <= g
    assert (f & g) == g
    assert f.floor_div(2) == g
    with pytest.raises(ValueError):
        g - f
    with pytest.raises(ShapeError):
        VermaFlag([w("1,0|0,1"), w("1,0,0|0")])


def test_json_round_trip_and_order():
    f = flag("2,0|0,2", "0,0|0,0", "0,0|0,0")
    assert VermaFlag.from_json(f.to_json(), GL22) == f
    assert f.to_json()[0] == {"weight": [0, 0, 0, 0], "mult": 2}
    s = CompositionSeries(f.counter(), GL22)
    assert s.to_json()[0]["label"] == "L"
    assert "L[" in s.text()


@given(shapes.flatmap(weights))
def test_typical_projective_invariants(lam):
    if not is_typical(lam):
        return
    p = typical_projective(lam)
    assert p.mult(lam) == 1
    assert all(bruhat_leq(lam, v) for v in p)


@st.composite
def flag_and_rep(draw):
    shape = draw(shapes)
    ws = draw(st.lists(weights(shape, -2, 2), min_size=1, max_size=4))
    return VermaFlag(ws, shape), draw(st.sampled_from(ENGINE_REPS)), draw(weights(shape, -2, 2))


@given(flag_and_rep())
def test_tensor_total_is_multiplicative(data):
    f, rep, _ = data
    assert tensor_flag(f, rep).total() == f.total() * rep_dim(f.shape, rep)


@given(flag_and_rep())
def test_projection_is_idempotent_and_monotone(data):
    f, rep, target = data
    t = tensor_flag(f, rep)
    b = block_id(target)
    p = project_block(t, b)
    assert p <= t
    assert project_block(p, b) == p


@given(flag_and_rep(), st.integers(1, 3))
def test_projection_commutes_with_scaling(data, k):
    f, rep, target = data
    assert translate(f.scale(k), rep, target) == translate(f, rep, target).scale(k)


def test_is_minimal_needs_presence():
    assert not is_minimal(flag("1,0|0,1"), w("0,0|0,0"))
