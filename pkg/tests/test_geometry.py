import pytest

from detinv.geometry import Case, Space, codim_orbit, dim_orbit, epsilon_p, parse_space


def test_dimensions():
    assert Space.general(3, 2).dim == 6
    assert Space.skew(4).dim == 6
    assert Space.symmetric(3).dim == 6


def test_p_max():
    assert Space.general(4, 3).p_max == 3
    assert Space.skew(5).p_max == 2
    assert Space.symmetric(5).p_max == 5


def test_dim_orbit_examples():
    assert dim_orbit(Space.general(2, 2), 1) == 3
    for n in (3, 5, 7, 9):
        assert dim_orbit(Space.symmetric(n), 2) == 2 * n - 1
    for space in (Space.general(4, 3), Space.skew(6), Space.symmetric(4)):
        assert dim_orbit(space, 0) == 0


def test_codim_orbit_examples():
    assert codim_orbit(Space.general(3, 2), 1) == 2
    assert codim_orbit(Space.skew(4), 1) == 1
    for space in (Space.general(4, 3), Space.skew(6), Space.skew(7), Space.symmetric(4)):
        assert codim_orbit(space, space.p_max) == 0


def test_general_dim_formula():
    for n in range(1, 7):
        for m in range(n, 8):
            s = Space.general(m, n)
            for p in s.orbits():
                assert dim_orbit(s, p) == p * (m + n - p)


def test_epsilon_p():
    s5, s4 = Space.symmetric(5), Space.symmetric(4)
    assert epsilon_p(s5, 2) == 1
    assert epsilon_p(s4, 2) == 0
    assert epsilon_p(s5, 1) == 0
    with pytest.raises(ValueError):
        epsilon_p(Space.skew(4), 0)


def test_validation():
    with pytest.raises(ValueError):
        Space.general(2, 3)
    with pytest.raises(ValueError):
        Space.skew(1)
    with pytest.raises(ValueError):
        Space.symmetric(0)
    with pytest.raises(ValueError):
        Space(Case.SKEW, 4, 4)
    with pytest.raises(ValueError):
        dim_orbit(Space.skew(5), 3)
    with pytest.raises(ValueError):
        parse_space("hermitian", 3)
    with pytest.raises(ValueError):
        parse_space("general", 3)


def test_parse_space():
    assert parse_space("general", 2, 3) == Space.general(3, 2)
    assert parse_space("skew", 4) == Space.skew(4)
    assert str(parse_space("symmetric", 3)) == "symmetric(n=3)"
