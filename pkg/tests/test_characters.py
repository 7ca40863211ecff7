from fractions import Fraction as F
from itertools import product

import pytest

from orbitrr.characters import character_series, orbit_volume, weyl_dim
from orbitrr.errors import DegenerateOrbitError
from orbitrr.roots import build_root_system, enumerate_weyl_group


def test_weyl_dim_examples():
    assert weyl_dim(build_root_system("A", 1), (3,)) == 4
    assert weyl_dim(build_root_system("A", 2), (1, 1)) == 8
    for label in ("A1", "B2", "G2"):
        rs = build_root_system(label[0], int(label[1]))
        assert weyl_dim(rs, (0,) * rs.rank) == 1


def test_weyl_dim_rejects_bad_weights():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError):
        weyl_dim(rs, (-1, 0))
    with pytest.raises(ValueError):
        weyl_dim(rs, (F(1, 2), 0))


def test_orbit_volume_examples():
    assert orbit_volume(build_root_system("A", 1), (1,)) == 1
    assert orbit_volume(build_root_system("A", 2), (1, 1)) == 1
    assert orbit_volume(build_root_system("A", 2), (2, 1)) == 3


def test_orbit_volume_allows_rational_points():
    # Lambda = rho/2 scales each of the three root pairings by 1/2
    rs = build_root_system("A", 2)
    assert orbit_volume(rs, (F(1, 2), F(1, 2))) == F(1, 8)


def test_orbit_volume_wall_error():
    with pytest.raises(DegenerateOrbitError):
        orbit_volume(build_root_system("A", 2), (1, 0))


def test_character_series_su2_example():
    rs = build_root_system("A", 1)
    s = character_series(rs, (2,), 2)
    assert s.to_text() == "3 + 4 * x1^2"


def test_character_series_constant_terms():
    rs = build_root_system("A", 1)
    for lam in range(5):
        assert character_series(rs, (lam,), 0).constant_term() == lam + 1
    assert character_series(build_root_system("A", 2), (1, 1), 0).constant_term() == 8


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_character_constant_equals_dimension(label):
    rs = build_root_system(label[0], int(label[1]))
    for labels in product(range(3), repeat=rs.rank):
        s = character_series(rs, labels, 0)
        assert s.constant_term() == weyl_dim(rs, labels)


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_character_series_weyl_invariance(label):
    rs = build_root_system(label[0], int(label[1]))
    labels = (2,) * rs.rank
    s = character_series(rs, labels, 4)
    for w in enumerate_weyl_group(rs):
        assert s.substitute_linear(rs.coroot_matrix(w)) == s


def _finite_difference_vanishes(values, order):
    diffs = list(values)
    for _ in range(order):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return all(x == 0 for x in diffs)


def test_character_coefficients_polynomial_in_labels():
    # each truncated coefficient is polynomial in the Dynkin labels of
    # degree at most trunc + (number of positive roots)
    rs = build_root_system("A", 1)
    trunc, m = 2, 1
    order = trunc + m + 1
    monos = [(j,) for j in range(trunc + 1)]
    for mono in monos:
        values = [character_series(rs, (lam,), trunc).coeffs.get(mono, F(0))
                  for lam in range(order + 2)]
        assert _finite_difference_vanishes(values, order)

    rs = build_root_system("A", 2)
    trunc, m = 1, 3
    order = trunc + m + 1
    for mono in [(0, 0), (1, 0), (0, 1)]:
        for fixed in (0, 1):
            values = [character_series(rs, (lam, fixed), trunc).coeffs.get(mono, F(0))
                      for lam in range(order + 2)]
            assert _finite_difference_vanishes(values, order)
