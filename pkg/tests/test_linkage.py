import itertools

from hypothesis import given
from hypothesis import strategies as st

from conftest import GL22, GL31, w
from strategies import shapes, weight_pair, weight_with_weyl, weights
from supero.lattice import Weight, act
from supero.linkage import (
    BlockId,
    atypicality,
    block_id,
    bruhat_leq,
    bruhat_lt,
    is_linked,
    linkage_oracle,
    weights_in_block,
)


def test_atypicality_examples():
    assert atypicality(w("2,1|1,2")).degree == 2
    assert atypicality(w("3,3|5,5")).degree == 0
    assert atypicality(w("2,1,3|1")).degree == 1


def test_matching_never_reuses_an_index():
    data = atypicality(w("1,1|1,2"))
    assert data.degree == 1
    assert data.pairs == ((1, 1),)
    data = atypicality(w("2,1|1,2"))
    assert data.pairs == ((1, 2), (2, 1))


def test_block_id_examples():
    assert block_id(w("5,0,2|2")) == BlockId(GL31, 1, (0, 5), ())
    assert block_id(w("7,3|3,7")) == BlockId(GL22, 2, (), ())
    assert block_id(w("4,1|2,3")) == BlockId(GL22, 0, (1, 4), (2, 3))


def test_block_id_json_round_trip():
    b = block_id(w("5,0,2|2"))
    assert BlockId.from_json(b.to_json(), GL31) == b
    assert b.to_json() == {"degree": 1, "core_q": [0, 5], "core_r": []}


def test_is_linked_examples():
    assert is_linked(w("2,1,3|1"), w("4,3,2|4"))
    assert is_linked(w("2,1|1,2"), w("3,5|5,3"))
    assert not is_linked(w("2,1|1,2"), w("3,3|5,5"))


def test_oracle_reproduces_the_examples():
    assert linkage_oracle(w("2,1,3|1"), w("4,3,2|4"))
    assert linkage_oracle(w("2,1|1,2"), w("3,5|5,3"))
    assert not linkage_oracle(w("2,1|1,2"), w("3,3|5,5"))
    assert linkage_oracle(w("1,0|4,2"), w("1,0|4,2"))
    # degree is invariant under the oracle's moves
    assert not linkage_oracle(w("1,1|1,1"), w("1,2|1,3"))


def test_bruhat_examples():
    a, b, c = 6, 3, 1
    assert bruhat_leq(w(f"{a},{b},{c}|{c}"), w(f"{a},{b},{c+1}|{c+1}"))
    lam = w("4,-2,0|0")
    assert bruhat_leq(lam, lam)
    assert bruhat_leq(w(f"{b},{a},{c}|{c}"), w(f"{a},{b},{c}|{c}"))
    assert not bruhat_leq(w(f"{a},{b},{c}|{c}"), w(f"{b},{a},{c}|{c}"))
    # unlinked weights are incomparable even if the difference is a sum of simple roots
    assert not bruhat_leq(w("3,3|5,5"), w("4,3|5,4"))


def test_gl22_degree_two_weights_form_one_block():
    blocks = set()
    for xs in itertools.product(range(-1, 4), repeat=4):
        lam = Weight(xs[:2], xs[2:])
        if atypicality(lam).degree == 2:
            blocks.add(block_id(lam))
    assert blocks == {BlockId(GL22, 2, (), ())}


def test_weights_in_block_lists_exactly_the_linked_weights():
    for anchor in (w("5,0,2|2"), w("0,0|0,0"), w("1,2|2,5")):
        block = block_id(anchor)
        listed = set(weights_in_block(block, -1, 5))
        shape = anchor.shape
        brute = set()
        for xs in itertools.product(range(-1, 6), repeat=shape.m + shape.n):
            lam = Weight(xs[: shape.m], xs[shape.m :])
            if block_id(lam) == block:
                brute.add(lam)
        assert listed == brute


@given(weight_with_weyl())
def test_atypicality_is_weyl_invariant(pair):
    lam, g = pair
    assert atypicality(act(g, lam)).degree == atypicality(lam).degree


@given(shapes.flatmap(lambda s: st.tuples(weights(s, 0, 3), weights(s, 0, 3), weights(s, 0, 3))))
def test_linkage_is_an_equivalence(triple):
    a, b, c = triple
    assert is_linked(a, a)
    assert is_linked(a, b) == is_linked(b, a)
    if is_linked(a, b) and is_linked(b, c):
        assert is_linked(a, c)


@given(weight_pair(0, 3))
def test_linkage_agrees_with_oracle_on_samples(pair):
    a, b = pair
    assert is_linked(a, b) == linkage_oracle(a, b)


@given(weight_pair(-2, 2))
def test_bruhat_is_antisymmetric(pair):
    a, b = pair
    if bruhat_leq(a, b) and bruhat_leq(b, a):
        assert a == b
    assert not (bruhat_lt(a, b) and bruhat_lt(b, a))


@given(shapes.flatmap(lambda s: st.tuples(weights(s, -2, 2), weights(s, -2, 2), weights(s, -2, 2))))
def test_bruhat_is_transitive(triple):
    a, b, c = triple
    if bruhat_leq(a, b) and bruhat_leq(b, c):
        assert bruhat_leq(a, c)
