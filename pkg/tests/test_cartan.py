import pytest

from detinv.cartan import (
    Presentation,
    PresentationError,
    cartan_poincare,
    hilbert_quotient,
    presentation_for,
)
from detinv.geometry import Case, Space
from detinv.invariants import orbit_cohomology
from detinv.polyring import ONE, mono, psum


def all_spaces(max_size=8):
    for n in range(1, max_size + 1):
        for m in range(n, max_size + 1):
            yield Space.general(m, n)
    for n in range(2, max_size + 1):
        yield Space.skew(n)
    for n in range(1, max_size + 1):
        yield Space.symmetric(n)


def test_projective_space_shape():
    for n in range(1, 8):
        pres = Presentation([2], [2 * n], [])
        assert cartan_poincare(pres) == psum(mono(2 * k) for k in range(n))


def test_exterior_only():
    assert cartan_poincare(Presentation([], [], [3])) == ONE + mono(3)
    assert cartan_poincare(Presentation([], [], [])) == ONE


def test_grassmannian_quotient():
    # C[c_1, c_2, d_1, d_2]/(degrees 2..8) for Grass(2,4)
    assert hilbert_quotient([2, 4, 2, 4], [2, 4, 6, 8]) == psum(mono(e) for e in (0, 2, 4, 4, 6, 8))


def test_inconsistent_data_detected():
    with pytest.raises(PresentationError):
        hilbert_quotient([4], [6])
    with pytest.raises(PresentationError):
        Presentation([2], [], [])
    with pytest.raises(PresentationError):
        Presentation([3], [6], [])
    with pytest.raises(PresentationError):
        Presentation([], [], [4])
    with pytest.raises(PresentationError):
        hilbert_quotient([4], [2])


@pytest.mark.parametrize("space", list(all_spaces()), ids=str)
def test_matches_orbit_cohomology(space):
    for p in space.orbits():
        assert cartan_poincare(presentation_for(space, p)) == orbit_cohomology(space, p)


def test_skew_degree_data():
    for n in (6, 7):
        e = n % 2
        pres = presentation_for(Space.skew(n), 2)
        assert pres.gen_degrees == (4, 8)
        assert pres.rel_degrees == (8, 12)
        assert pres.ext_degrees == tuple(range(2 * (n + e) - 7, 2 * (n + e) - 2, 4))


def test_symmetric_odd_has_z_n():
    for n in range(1, 9):
        for p in range(1, n + 1, 2):
            assert 2 * n - 1 in presentation_for(Space.symmetric(n), p).ext_degrees


def test_general_p0_empty():
    pres = presentation_for(Space.general(4, 3), 0)
    assert pres.ext_degrees == ()
    assert cartan_poincare(pres) == ONE


def test_out_of_range():
    with pytest.raises(ValueError):
        presentation_for(Space.symmetric(3), 4)
