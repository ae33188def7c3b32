import itertools

import pytest
from hypothesis import given

from conftest import GL22, GL31, w
from strategies import weight_pair, weight_with_weyl, weights, shapes
from hypothesis import strategies as st
from supero.lattice import (
    EVEN_DD,
    EVEN_EE,
    ODD,
    Root,
    Shape,
    ShapeError,
    Weight,
    WeylElement,
    act,
    coroot_pairing,
    delta,
    eps,
    even_positive_roots,
    form,
    is_dominant,
    positive_roots,
    reflect,
    rho,
    root_height,
    simple_root_coefficients,
    simple_roots,
    weyl_elements,
)


def test_rho_examples():
    assert rho(GL31) == w("3,2,1|1")
    assert rho(GL22) == w("2,1|1,2")
    assert rho(Shape(1, 1)) == w("1|1")


def test_form_sign_convention():
    assert form(delta(GL22, 1), delta(GL22, 1)) == 1
    assert form(eps(GL22, 1), eps(GL22, 1)) == -1
    odd = delta(GL22, 1) - eps(GL22, 2)
    assert form(odd, odd) == 0
    assert form(delta(GL22, 1), eps(GL22, 1)) == 0


def test_eps_lowers_the_stored_r_entry():
    # lam - 2 eps_2 for (a,a-1|a-1,a) is (a,a-1|a-1,a+2)
    a = 4
    lam = w(f"{a},{a-1}|{a-1},{a}")
    assert lam - 2 * eps(GL22, 2) == w(f"{a},{a-1}|{a-1},{a+2}")


def test_form_rejects_mixed_shapes():
    with pytest.raises(ShapeError):
        form(rho(GL22), rho(GL31))


def test_coroot_pairing_examples():
    a, b = 5, 2
    dd = Root(GL22, EVEN_DD, 1, 2)
    ee = Root(GL22, EVEN_EE, 1, 2)
    assert coroot_pairing(w(f"{a},{b}|0,0"), dd) == a - b
    assert coroot_pairing(w(f"0,0|{b+1},{a+1}"), ee) == a - b
    assert coroot_pairing(rho(GL22), dd) == 1


def test_coroot_pairing_rejects_odd_roots():
    with pytest.raises(ValueError):
        coroot_pairing(rho(GL22), Root(GL22, ODD, 1, 1))
    with pytest.raises(ValueError):
        reflect(Root(GL22, ODD, 1, 1), rho(GL22))


def test_reflect_examples():
    assert reflect(Root(GL22, EVEN_DD, 1, 2), w("7,3|1,9")) == w("3,7|1,9")
    assert reflect(Root(GL22, EVEN_EE, 1, 2), w("7,3|1,9")) == w("7,3|9,1")


def test_root_height_examples():
    assert root_height(Root(GL22, ODD, 2, 1)) == 1
    assert root_height(Root(GL22, ODD, 1, 2)) == 3
    assert root_height(Root(GL31, ODD, 3, 1)) == 1


def test_weyl_group_sizes_and_identity():
    assert len(weyl_elements(GL31)) == 6
    assert len(weyl_elements(GL22)) == 4
    lam = w("4,-1,2|7")
    assert act(WeylElement.identity(GL31), lam) == lam
    assert weyl_elements(GL31)[0] == WeylElement.identity(GL31)


def test_is_dominant_examples():
    a, b = 5, 2
    assert is_dominant(w(f"{a},{b}|{b+1},{a+1}"))
    assert not is_dominant(w(f"{b},{a}|{b+1},{a+1}"))
    for m, n in itertools.product((1, 2, 3), repeat=2):
        assert is_dominant(rho(Shape(m, n)))


def test_simple_root_coefficients_examples():
    a, b, c = 7, 4, 1
    diff = w(f"{a},{b},{c+1}|{c+1}") - w(f"{a},{b},{c}|{c}")
    assert simple_root_coefficients(diff) == (0, 0, 1)
    assert simple_root_coefficients(Weight.zero(GL31)) == (0, 0, 0)
    diff = w(f"{a},{b},{c}|{c}") - w(f"{b},{a},{c}|{c}")
    assert simple_root_coefficients(diff) == (a - b, 0, 0)
    assert simple_root_coefficients(delta(GL31, 1)) is None


def test_shape_bounds():
    with pytest.raises(ShapeError):
        Shape(4, 1)
    with pytest.raises(ShapeError):
        Shape(0, 2)
    assert Shape.parse("3x1") == GL31
    assert Shape.parse("2|2") == GL22


def test_weight_text_round_trip():
    for text in ("5,3,1|1", "-2,0|0,-2", " 1 , 2 | 3 "):
        lam = Weight.parse(text)
        assert Weight.parse(str(lam)) == lam
    for bad in ("1,2", "1|2|3", "a|1", "1,,2|3"):
        with pytest.raises(ValueError):
            Weight.parse(bad)


@given(weight_pair())
def test_form_is_symmetric(pair):
    a, b = pair
    assert form(a, b) == form(b, a)


@given(shapes.flatmap(lambda s: st.tuples(weights(s), weights(s), st.sampled_from(weyl_elements(s)))))
def test_form_is_weyl_invariant(triple):
    a, b, g = triple
    assert form(act(g, a), act(g, b)) == form(a, b)


@given(weight_with_weyl())
def test_reflections_are_form_preserving_involutions(pair):
    lam, _ = pair
    for alpha in even_positive_roots(lam.shape):
        image = reflect(alpha, lam)
        assert reflect(alpha, image) == lam
        assert form(image, image) == form(lam, lam)


@given(shapes)
def test_positive_roots_are_multiplicity_free_in_simple_roots(shape):
    simple = set(simple_roots(shape))
    for alpha in positive_roots(shape):
        coeffs = simple_root_coefficients(alpha.vector)
        assert coeffs is not None and set(coeffs) <= {0, 1}
        assert root_height(alpha) == sum(coeffs)
        assert (root_height(alpha) == 1) == (alpha in simple)
        if alpha.is_odd:
            assert form(alpha.vector, alpha.vector) == 0
        else:
            assert form(alpha.vector, alpha.vector) in (2, -2)


@given(weight_with_weyl())
def test_weyl_composition_is_closed(pair):
    lam, g = pair
    for h in weyl_elements(lam.shape):
        assert act(g * h, lam) == act(g, act(h, lam))
        assert g * h in weyl_elements(lam.shape)


@given(shapes.flatmap(weights))
def test_dominance_matches_exhaustive_weyl_search(lam):
    # dominant iff no Weyl image is bigger on either side after sorting by position
    def key(v):
        return v.q, tuple(-x for x in v.r)

    best = max((act(g, lam) for g in weyl_elements(lam.shape)), key=key)
    assert is_dominant(lam) == (key(best) == key(lam))
