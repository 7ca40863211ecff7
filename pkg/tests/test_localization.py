from fractions import Fraction as F
from itertools import product

import pytest

from orbitrr.characters import orbit_volume, weyl_dim
from orbitrr.errors import (CalibrationDriftError, DegenerateOrbitError,
                            InadmissibleInputError, SingularValueError)
from orbitrr.localization import (BaseIntersectionOracle, CalibrationRegistry,
                                  FixedPointDatum, coadjoint_orbit_points,
                                  fibration_rr_base, fibration_rr_residue,
                                  orbit_fixed_data, product_orbit_fixed_data,
                                  raw_fibration_residue, rr_leading_coefficient,
                                  rr_orbit_fixedpoint, todd_restriction_identity)
from orbitrr.multiplicities import tensor_multiplicity
from orbitrr.roots import build_root_system, enumerate_weyl_group
from orbitrr.series import TruncatedSeries, positive_root_product


@pytest.fixture(scope="module")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="module")
def a2():
    return build_root_system("A", 2)


def test_orbit_fixed_data_su2(a1):
    data = orbit_fixed_data(a1, (1,))
    assert len(data) == 2
    moments = sorted(pt.moment[0] for pt in data)
    assert moments == [-1, 1]
    for pt in data:
        assert len(pt.tangent_weights) == 1
        assert abs(pt.tangent_weights[0][0]) == 2
        # tangent weight points away from the opposite pole
        assert pt.tangent_weights[0][0] == 2 * pt.moment[0]


def test_orbit_fixed_data_a2_rho(a2):
    data = orbit_fixed_data(a2, (1, 1))
    assert len(data) == 6
    orbit = {tuple(a2.dynkin(w.act(a2.rho))) for w in enumerate_weyl_group(a2)}
    assert {pt.moment for pt in data} == orbit
    # product of tangent weights at w equals sign(w) times the root product
    root_poly = positive_root_product(a2)
    for pt, w in zip(data, enumerate_weyl_group(a2)):
        prod = TruncatedSeries.constant(1, 2, None)
        for t in pt.tangent_weights:
            prod = prod * TruncatedSeries.linear_form(t)
        assert prod == root_poly * w.sign


def test_orbit_fixed_data_wall_error(a1):
    with pytest.raises(DegenerateOrbitError):
        orbit_fixed_data(a1, (0,))


def test_coadjoint_orbit_points_non_regular(a2):
    pts = coadjoint_orbit_points(a2, (1, 0))
    assert len(pts) == 3
    for _, tangent in pts:
        assert len(tangent) == 2


def test_rr_orbit_examples(a1, a2):
    assert rr_orbit_fixedpoint(a1, (1,), 5) == 6
    assert rr_orbit_fixedpoint(a2, (1, 1), 1) == 8
    for rs in (a1, a2):
        assert rr_orbit_fixedpoint(rs, (2,) * rs.rank, 0) == 1


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_rr_orbit_is_borel_weil_bott(label):
    rs = build_root_system(label[0], int(label[1]))
    for labels in product(range(3), repeat=rs.rank):
        for k in range(4):
            kl = tuple(k * c for c in labels)
            assert rr_orbit_fixedpoint(rs, labels, k) == weyl_dim(rs, kl)


def test_todd_restriction_identity_examples(a1, a2):
    for w in enumerate_weyl_group(a1):
        assert todd_restriction_identity(a1, w, 6)
    for w in enumerate_weyl_group(a2):
        assert todd_restriction_identity(a2, w, 8)


def test_rr_leading_coefficient_examples(a1, a2):
    assert rr_leading_coefficient(a1, (1,)) == 1
    assert rr_leading_coefficient(a2, (1, 1)) == 1
    assert rr_leading_coefficient(a2, (2, 1)) == 3
    assert rr_leading_coefficient(a2, (2, 1)) == orbit_volume(a2, (2, 1))


def test_flagship_cube_of_spheres(a1):
    points = product_orbit_fixed_data(a1, [(1,)] * 3)
    assert len(points) == 8
    registry = CalibrationRegistry()
    value = fibration_rr_residue(points, a1, (1,), 3, registry=registry)
    assert value == 4
    oracle = BaseIntersectionOracle.point(a1)
    assert fibration_rr_base(oracle, a1, (1,), 3) == 4
    assert fibration_rr_base(oracle, a1, (1,), 1) == 2
    assert fibration_rr_base(oracle, a1, (0,), 5) == 1


def test_route_equality_on_every_shared_configuration(a1):
    registry = CalibrationRegistry()
    points = product_orbit_fixed_data(a1, [(1,)] * 3)
    oracle = BaseIntersectionOracle.point(a1)
    for k in range(1, 7):
        res = fibration_rr_residue(points, a1, (1,), k, registry=registry)
        base = fibration_rr_base(oracle, a1, (1,), k)
        tensor = tensor_multiplicity(a1, [(k,)] * 3, (k,))
        assert res == base == tensor == k + 1


def test_residue_route_on_rational_lambda(a1):
    # Lambda = omega/2: parity k(3 + 1/2) needs k divisible by 4
    registry = CalibrationRegistry()
    points = product_orbit_fixed_data(a1, [(1,)] * 3)
    for k in (4, 8):
        value = fibration_rr_residue(points, a1, (F(1, 2),), k, registry=registry)
        assert value == tensor_multiplicity(a1, [(k,)] * 3, (k // 2,))
    for k in (2, 3):
        with pytest.raises(InadmissibleInputError):
            fibration_rr_residue(points, a1, (F(1, 2),), k, registry=registry)


def test_singular_value_error_on_boundary_collision(a1):
    points = product_orbit_fixed_data(a1, [(1,)] * 2)
    with pytest.raises(SingularValueError):
        raw_fibration_residue(points, a1, (2,), 2)


def test_interior_collision_is_allowed(a1):
    registry = CalibrationRegistry()
    points = product_orbit_fixed_data(a1, [(1,)] * 4)
    for k in (1, 2, 3):
        value = fibration_rr_residue(points, a1, (2,), k, registry=registry)
        assert value == tensor_multiplicity(a1, [(k,)] * 4, (2 * k,)) == (k + 1) * (k + 2) // 2


def test_parity_admissibility(a1):
    points = product_orbit_fixed_data(a1, [(1,)] * 2)
    with pytest.raises(InadmissibleInputError):
        raw_fibration_residue(points, a1, (1,), 1)
    registry = CalibrationRegistry()
    assert fibration_rr_residue(points, a1, (1,), 2, registry=registry) == 1


def test_lambda_on_wall_rejected(a1):
    points = product_orbit_fixed_data(a1, [(1,)] * 3)
    with pytest.raises(DegenerateOrbitError):
        raw_fibration_residue(points, a1, (0,), 2)


def test_calibration_drift_detection(a1):
    registry = CalibrationRegistry()
    points = product_orbit_fixed_data(a1, [(1,)] * 3)
    registry.constants[("A1", 3)] = F(7)  # wrong on purpose
    with pytest.raises(CalibrationDriftError):
        registry.check(a1, points, (1,), 1, 2)


def test_calibration_signature_without_case_is_refused(a2):
    registry = CalibrationRegistry()
    with pytest.raises(InadmissibleInputError):
        registry.constant_for(a2, 5)


def test_registered_calibration_is_used(a1):
    registry = CalibrationRegistry()
    points = product_orbit_fixed_data(a1, [(1,)] * 3)
    c = registry.register(a1, points, (1,), 1, 2)
    assert c == 1
    assert registry.constant_for(a1, 3) == 1


def test_symplectic_factor_scales_contributions(a1):
    # doubling every point's factor doubles the raw residue
    points = product_orbit_fixed_data(a1, [(1,)] * 3)
    doubled = tuple(FixedPointDatum(pt.label, pt.moment, pt.tangent_weights, F(2))
                    for pt in points)
    raw1, _ = raw_fibration_residue(points, a1, (1,), 2)
    raw2, _ = raw_fibration_residue(doubled, a1, (1,), 2)
    assert raw2 == 2 * raw1


def test_rank_two_constant_is_a_signature_invariant(a2):
    # two different products of A2 orbits share the (group, dimension)
    # signature; the constant calibrated on one must transport to the other
    registry = CalibrationRegistry()
    rho_pair = product_orbit_fixed_data(a2, [(1, 1), (1, 1)])
    expected = tensor_multiplicity(a2, [(3, 3), (3, 3)], (6, 3))
    c = registry.register(a2, rho_pair, (2, 1), 3, expected)
    assert c == F(1, 2)
    mixed = product_orbit_fixed_data(a2, [(2, 1), (1, 2)])
    oracle = tensor_multiplicity(a2, [(6, 3), (3, 6)], (3, 6))
    registry.check(a2, mixed, (1, 2), 3, oracle)
    assert fibration_rr_residue(mixed, a2, (1, 2), 3, registry=registry) == oracle == 3


def test_base_route_with_a_curve_oracle(a1):
    # a synthetic curve base: top degree 1, pairing <w0> = 1, Todd = 1 + w0.
    # The integrand (1 + k w0)(1 + w0) S picks off (k+1) S(0), and the
    # character class of lambda = k Lambda has constant term k*lam + 1
    oracle = BaseIntersectionOracle(
        generator_names=("w0", "a2"),
        generator_degrees=(1, 2),
        top_degree=1,
        pairing={(1, 0): F(1)},
        todd={(0, 0): F(1), (1, 0): F(1)},
    )
    for lam in (1, 2, 3):
        for k in (1, 2):
            expect = (k + 1) * (k * lam + 1)
            assert fibration_rr_base(oracle, a1, (lam,), k) == expect


def test_base_route_rejects_mismatched_generators(a1):
    bad = BaseIntersectionOracle(
        generator_names=("w0", "a3"),
        generator_degrees=(1, 3),
        top_degree=0,
        pairing={(0, 0): F(1)},
        todd={(0, 0): F(1)},
    )
    with pytest.raises(ValueError):
        fibration_rr_base(bad, a1, (1,), 1)


def test_base_route_requires_dominant_integral_k_lambda(a1):
    oracle = BaseIntersectionOracle.point(a1)
    with pytest.raises(ValueError):
        fibration_rr_base(oracle, a1, (F(1, 2),), 1)
    with pytest.raises(ValueError):
        fibration_rr_base(oracle, a1, (-1,), 2)
