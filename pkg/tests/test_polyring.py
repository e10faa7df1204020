import json

import pytest
from hypothesis import given, settings, strategies as st

from detinv.polyring import ONE, ZERO, MPoly, mono, pprod, psum

exps = st.tuples(*(st.integers(-20, 20) for _ in range(3)))
coeffs = st.integers(-10**6, 10**6)
polys = st.dictionaries(exps, coeffs, max_size=6).map(MPoly)
unit_monos = st.builds(lambda e, s: MPoly({e: s}), exps, st.sampled_from([1, -1]))

AXIOMS = settings(max_examples=1000, deadline=None)


@AXIOMS
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@AXIOMS
@given(polys)
def test_identities_and_inverse(a):
    assert a + ZERO == a
    assert a * ONE == a
    assert a * ZERO == ZERO
    assert a - a == ZERO
    assert -(-a) == a
    assert (a - 1) + 1 == a


@settings(max_examples=300, deadline=None)
@given(polys, polys, st.fixed_dictionaries({"q": unit_monos, "w": unit_monos, "t": unit_monos}))
def test_substitution_is_ring_homomorphism(a, b, images):
    assert (a * b).substitute(images) == a.substitute(images) * b.substitute(images)
    assert (a + b).substitute(images) == a.substitute(images) + b.substitute(images)


@settings(max_examples=300, deadline=None)
@given(polys, st.sampled_from("qwt"), st.integers(-30, 30))
def test_reverse_is_involution(a, var, center):
    assert a.reverse(var, center).reverse(var, center) == a


@settings(max_examples=300, deadline=None)
@given(polys)
def test_json_round_trip(a):
    assert MPoly.from_json(a.to_json()) == a
    assert MPoly.from_json_obj(json.loads(a.to_json())) == a


@settings(max_examples=200, deadline=None)
@given(polys)
def test_eval_all_one_is_coefficient_sum(a):
    assert a.eval_all_one() == sum(a.terms.values())


def test_zero_coefficients_dropped():
    p = MPoly({(1, 0, 0): 0, (2, 0, 0): 3})
    assert len(p) == 1
    assert mono(1) - mono(1) == ZERO
    assert not ZERO


def test_big_integer_coefficients_exact():
    big = 10**40 + 7
    p = MPoly({(0, 0, 0): big}) * MPoly({(1, 0, 0): big})
    assert p.coeff(1) == big * big
    assert MPoly.from_json(p.to_json()).coeff(1) == big * big
    assert json.loads(p.to_json())[0]["c"] == str(big * big)


def test_negative_power_only_for_monomials():
    assert mono(2, -1) ** -2 == mono(-4, 2)
    with pytest.raises(ValueError):
        (ONE + mono(1)) ** -1


def test_substitute_rejects_non_monomial():
    with pytest.raises(ValueError):
        mono(1).substitute({"q": ONE + mono(1)})


def test_specialize_w_to_q():
    p = mono(1, 1) + mono(3, 1) + mono(4, 1)
    assert p.substitute({"w": "q"}) == mono(2) + mono(4) + mono(5)
    assert p.substitute({"w": 1}) == mono(1) + mono(3) + mono(4)


def test_text_rendering():
    assert (mono(3) + mono(4) + mono(6)).to_text() == "q^3 + q^4 + q^6"
    assert mono(1, 3).to_text() == "q*w^3"
    assert (2 * mono(2)).to_text() == "2*q^2"
    assert mono(-2).to_text() == "q^-2"
    assert ONE.to_text() == "1"
    assert ZERO.to_text() == "0"


def test_latex_rendering():
    assert (mono(3) + mono(4)).to_latex() == "q^{3} + q^{4}"
    assert mono(-2).to_latex() == "q^{-2}"


def test_json_format():
    assert mono(6, 6).to_json() == '[{"e":[6,6,0],"c":"1"}]'


def test_support_ranges():
    p = mono(3, 1) + mono(-1, 4, 2)
    assert p.support_range("q") == (-1, 3)
    assert p.support_range("w") == (1, 4)
    with pytest.raises(ValueError):
        ZERO.support_range("q")


def test_psum_pprod():
    assert psum([]) == ZERO
    assert pprod([]) == ONE
    assert pprod(ONE + mono(k) for k in (1, 2)) == ONE + mono(1) + mono(2) + mono(3)


def test_first_difference():
    assert (mono(1) + mono(2)).first_difference(mono(1)) == ((2, 0, 0), 1, 0)
    assert mono(1).first_difference(mono(1)) is None
