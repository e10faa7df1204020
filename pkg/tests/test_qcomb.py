from math import comb

import pytest
from hypothesis import given, strategies as st

from detinv.polyring import ONE, ZERO, mono
from detinv.qcomb import (
    QBinSpec,
    gauss_coeffs,
    gauss_product,
    gauss_sum,
    qbinom,
    qbinom_at,
    qbinom_oracle,
    qbinom_or_zero,
    rescale_identity_check,
)


def test_small_values():
    assert qbinom(2, 1) == ONE + mono(1)
    assert qbinom(4, 2) == ONE + mono(1) + 2 * mono(2) + mono(3) + mono(4)
    assert qbinom(5, 0) == ONE
    assert qbinom(5, 5) == ONE


@pytest.mark.parametrize("a", range(13))
def test_matches_partition_oracle(a):
    for b in range(a + 1):
        assert qbinom(a, b) == qbinom_oracle(a, b)


def test_q_pascal_both_forms():
    for a in range(1, 12):
        for b in range(1, a):
            q = mono(1)
            assert qbinom(a, b) == q ** b * qbinom(a - 1, b) + qbinom(a - 1, b - 1)
            assert qbinom(a, b) == qbinom(a - 1, b) + q ** (a - b) * qbinom(a - 1, b - 1)


@pytest.mark.parametrize("step", [1, -1, 2, -2, 4, -4])
def test_rescale_identity(step):
    for a in range(11):
        for b in range(a + 1):
            assert rescale_identity_check(a, b, step)


def test_symmetry_and_value_at_one():
    for a in range(12):
        for b in range(a + 1):
            assert gauss_coeffs(a, b) == gauss_coeffs(a, a - b)
            assert sum(gauss_coeffs(a, b)) == comb(a, b)
            c = gauss_coeffs(a, b)
            assert c == c[::-1]


@pytest.mark.parametrize("n", range(11))
def test_gaussian_binomial_theorem(n):
    for a in (mono(1), mono(2), mono(4)):
        for b in (mono(0, 1), mono(1, 1), mono(0, 1, 1)):
            assert gauss_product(n, a, b) == gauss_sum(n, a, b)


@given(st.integers(0, 12).flatmap(lambda a: st.tuples(st.just(a), st.integers(0, a))))
def test_degree_and_leading_coefficients(ab):
    a, b = ab
    p = qbinom(a, b)
    assert p.support_range("q") == (0, b * (a - b))
    assert p.coeff(0) == 1 and p.coeff(b * (a - b)) == 1


def test_substituted_base():
    assert qbinom(3, 1, "w", -4) == ONE + mono(0, -4) + mono(0, -8)
    assert qbinom_at(2, 1, mono(2, 0, 2)) == ONE + mono(2, 0, 2)
    assert qbinom(QBinSpec(2, 1, "t", 3)) == ONE + mono(0, 0, 3)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        qbinom(2, 3)
    with pytest.raises(ValueError):
        qbinom(-1, 0)
    with pytest.raises(ValueError):
        QBinSpec(3, 1, step=0)
    with pytest.raises(ValueError):
        qbinom_at(2, 1, ONE + mono(1))
    with pytest.raises(ValueError):
        qbinom_oracle(20, 3)
    assert qbinom_or_zero(2, 3, mono(1)) == ZERO
    assert qbinom_or_zero(2, -1, mono(1)) == ZERO
