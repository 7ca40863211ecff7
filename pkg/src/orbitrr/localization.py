"""Localization pipelines for Riemann-Roch numbers.

Three routes live here, sharing only the root-system data:

* ``rr_orbit_fixedpoint``: the fixed-point sum for a single coadjoint
  orbit, evaluated along a generic one-parameter direction as an exact
  rational function of u = e^t and then at u -> 1.
* ``fibration_rr_residue``: the iterated-residue route for a fibration
  with fiber a coadjoint orbit, assembled from per-fixed-point data.
  The overall constant of the residue theorem is calibrated once per
  (group, half-dimension) signature and frozen.
* ``fibration_rr_base``: the base-integral route, pairing the character
  class (expressed in invariant generators) against an intersection
  oracle for the reduced space at zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .characters import character_series, check_weight
from .errors import (CalibrationDriftError, DegenerateOrbitError, InadmissibleInputError,
                     InternalInconsistencyError, SingularValueError)
from .invariants import express_invariant, fundamental_degrees
from .linalg import Vec, vec
from .multiplicities import tensor_multiplicity
from .residues import (DEFAULT_RETRIES, DEFAULT_SEED, build_cone, make_term, res_cone)
from .roots import RootSystem, WeylElement, enumerate_weyl_group
from .series import TruncatedSeries, positive_root_product


@dataclass(frozen=True)
class FixedPointDatum:
    """One isolated fixed point: moment value and tangent weights as
    covectors in the coordinates dual to the integer-lattice basis, plus
    the rational value the symplectic class pairs to at the point (1 for
    honest isolated fixed points)."""

    label: str
    moment: Vec
    tangent_weights: tuple[Vec, ...]
    symplectic_factor: Fraction = Fraction(1)

    def __post_init__(self):
        for w in self.tangent_weights:
            if all(c == 0 for c in w):
                raise ValueError("tangent weights must be nonzero (isolated fixed points)")


def orbit_fixed_data(rs: RootSystem, labels) -> tuple[FixedPointDatum, ...]:
    """Torus-fixed points of the coadjoint orbit through a regular point:
    one per Weyl element, with moment value w(Lambda) and tangent weights
    the w-images of the positive roots."""
    point = rs.weight_vector(vec(labels))
    if not rs.is_regular(point):
        raise DegenerateOrbitError("orbit point lies on a Weyl wall")
    data = []
    for w in enumerate_weyl_group(rs):
        data.append(FixedPointDatum(
            label="w" + ("".join(str(i + 1) for i in w.word) or "0"),
            moment=rs.dynkin(w.act(point)),
            tangent_weights=tuple(rs.dynkin(w.act(g)) for g in rs.positive_roots),
        ))
    return tuple(data)


def coadjoint_orbit_points(rs: RootSystem, labels) -> list[tuple[Vec, tuple[Vec, ...]]]:
    """(moment, tangent weights) for each fixed point of one coadjoint
    orbit; the point need not be regular (smaller orbits have fewer
    fixed points and fewer tangent weights)."""
    mu = rs.weight_vector(vec(labels))
    seen = {}
    for w in enumerate_weyl_group(rs):
        img = w.act(mu)
        if img in seen:
            continue
        tangent = tuple(rs.dynkin(w.act(g)) for g in rs.positive_roots
                        if rs.pairing(g, mu) > 0)
        seen[img] = (rs.dynkin(img), tangent)
    return list(seen.values())


def product_orbit_fixed_data(rs: RootSystem, factor_labels) -> tuple[FixedPointDatum, ...]:
    """Fixed-point data of a product of coadjoint orbits: moments add,
    tangent weights concatenate."""
    factors = [coadjoint_orbit_points(rs, f) for f in factor_labels]
    data = []
    for combo in iproduct(*factors):
        moment = tuple(sum(pt[0][i] for pt in combo) for i in range(rs.rank))
        tangent = tuple(w for pt in combo for w in pt[1])
        label = "x".join(",".join(str(c) for c in pt[0]) for pt in combo)
        data.append(FixedPointDatum(label=label, moment=moment, tangent_weights=tangent))
    return tuple(data)


# ----------------------------------------------------------------------
# fixed-point route for a single orbit


def _generic_direction(covectors, rank: int, start: int = 0) -> tuple[int, ...]:
    """Deterministic integer direction pairing nonzero with every given
    covector; powers of an increasing base eventually clear the finitely
    many walls."""
    j = start
    while True:
        base = j + 2
        xi = tuple(base**i for i in range(rank))
        if all(sum(c * x for c, x in zip(cov, xi)) != 0 for cov in covectors):
            return xi
        j += 1


def _poly_shrink_at_one(coeffs: list[Fraction], times: int) -> list[Fraction]:
    """Divide a polynomial (ascending coefficients) by (u-1) `times` times,
    requiring a zero remainder each round."""
    for _ in range(times):
        rem = sum(coeffs)
        if rem != 0:
            raise InternalInconsistencyError("fixed-point sum has a pole at u = 1")
        out = [Fraction(0)] * (len(coeffs) - 1)
        acc = Fraction(0)
        for i in range(len(coeffs) - 1, 0, -1):
            acc += coeffs[i]
            out[i - 1] = acc
        coeffs = out if out else [Fraction(0)]
    return coeffs


def rr_orbit_fixedpoint(rs: RootSystem, labels, k: int) -> int:
    """Riemann-Roch number of the k-th power of the prequantum bundle on
    the orbit through a dominant integral weight, by the fixed-point sum

        sum over w of e^{k<w lam, X>} prod (1 - e^{-<w gamma, X>})^{-1}

    evaluated at X = t xi for a generic integer direction xi, as an exact
    rational function of u = e^t, then at u -> 1.
    """
    labels = check_weight(rs, labels, dominant=True, integral=True)
    if k < 0:
        raise ValueError("k must be nonnegative")
    lam = rs.weight_vector(labels)
    group = enumerate_weyl_group(rs)
    root_covs = [rs.dynkin(g) for g in rs.positive_roots]
    all_covs = [rs.dynkin(w.act(g)) for w in group for g in rs.positive_roots]
    xi = _generic_direction(all_covs, rs.rank)

    base_mults = sorted(abs(sum(c * x for c, x in zip(cov, xi))) for cov in root_covs)
    exps = []
    for w in group:
        e = k * sum(c * x for c, x in zip(rs.dynkin(w.act(lam)), xi))
        sign = 1
        mults = []
        for g in rs.positive_roots:
            c = sum(a * x for a, x in zip(rs.dynkin(w.act(g)), xi))
            mults.append(abs(c))
            if c > 0:
                e += c
            else:
                sign = -sign
        if sorted(mults) != base_mults:
            raise InternalInconsistencyError("denominator multiset varies across fixed points")
        e = Fraction(e)
        if e.denominator != 1:
            raise InternalInconsistencyError("non-integral exponent %s in fixed-point sum" % e)
        exps.append((int(e), sign))

    shift = min(e for e, _ in exps)
    degree = max(e for e, _ in exps) - shift
    coeffs = [Fraction(0)] * (degree + 1)
    for e, sign in exps:
        coeffs[e - shift] += sign
    m = len(rs.positive_roots)
    reduced = _poly_shrink_at_one(coeffs, m)
    num = sum(reduced)
    den = Fraction(1)
    for n in base_mults:
        den *= n
    value = num / den
    if value.denominator != 1 or value < 0:
        raise InternalInconsistencyError("fixed-point limit %s is not a nonneg integer" % value)
    return int(value)


def rr_leading_coefficient(rs: RootSystem, labels) -> Fraction:
    """Leading coefficient of the polynomial k -> rr_orbit_fixedpoint(k),
    by exact finite differences on k = 0..(number of positive roots)."""
    labels = check_weight(rs, labels, dominant=True, integral=True)
    if not rs.is_regular(rs.weight_vector(labels)):
        raise DegenerateOrbitError("leading coefficient needs a regular weight")
    m = len(rs.positive_roots)
    values = [Fraction(rr_orbit_fixedpoint(rs, labels, k)) for k in range(m + 1)]
    for _ in range(m):
        values = [b - a for a, b in zip(values, values[1:])]
    acc = values[0]
    for i in range(2, m + 1):
        acc /= i
    return acc


# ----------------------------------------------------------------------
# the Todd-restriction identity behind the residue assembly


def todd_restriction_identity(rs: RootSystem, w: WeylElement, trunc: int) -> bool:
    """Check, as truncated series after factoring out the product of the
    positive roots, that

      sign(w) prod (1 - e^{-<w gamma, X>})^{-1}
        = e^{<w rho, X>} / prod (e^{<gamma,X>/2} - e^{-<gamma,X>/2}).
    """
    from .characters import weyl_denominator

    m = len(rs.positive_roots)
    work = trunc + m
    root_poly = positive_root_product(rs)
    lhs_prod = TruncatedSeries.constant(1, rs.rank, work)
    for g in rs.positive_roots:
        cov = rs.dynkin(w.act(g))
        lhs_prod = lhs_prod * (1 - TruncatedSeries.exp_linear(tuple(-c for c in cov), work))
    lhs = (lhs_prod.divide_exact(root_poly)).inverse() * w.sign
    rhs_unit = weyl_denominator(rs, work).divide_exact(root_poly)
    rhs = TruncatedSeries.exp_linear(rs.dynkin(w.act(rs.rho)), trunc) * rhs_unit.inverse()
    return lhs == rhs


# ----------------------------------------------------------------------
# residue route


def _weight_in_root_lattice(rs: RootSystem, dynkin_cov: Vec) -> bool:
    v = rs.weight_vector(dynkin_cov)
    return all(c.denominator == 1 for c in v)


def _check_regularity(points, rs: RootSystem, lam_cov: Vec):
    """Zero must be a regular value of the shifted moment map.  An exact
    collision of a fixed-point moment value with a Weyl image of Lambda is
    fatal when that value is extreme in the moment image (rank-1 test);
    interior coincidences merge into zero-phase terms that the residue
    sign rule disposes of."""
    orbit = {w.act(rs.weight_vector(lam_cov)) for w in enumerate_weyl_group(rs)}
    orbit_covs = {rs.dynkin(v) for v in orbit}
    moments = [pt.moment for pt in points]
    collisions = [mu for mu in moments if mu in orbit_covs]
    if not collisions:
        return
    if rs.rank == 1:
        values = [mu[0] for mu in moments]
        lo, hi = min(values), max(values)
        if all(lo < mu[0] < hi for mu in collisions):
            return
    raise SingularValueError(
        "fixed-point moment value coincides with a Weyl image of Lambda "
        "on the boundary of the moment image")


def _fibration_terms(points, rs: RootSystem, lam_labels, k: int):
    """RatExpTerms of the residue integrand: for each fixed point F and
    Weyl element w, phase k(mu(F) - w Lambda), numerator the
    degree-truncated product of the orbit factor prod(1 - e^{-<w gamma,X>})
    with the tangent Todd units, denominators the tangent weights."""
    l = rs.rank
    lam_vec = rs.weight_vector(lam_labels)
    group = enumerate_weyl_group(rs)
    terms = []
    for pt in points:
        cap = len(pt.tangent_weights) - l
        if cap < 0:
            continue
        todd_unit = TruncatedSeries.constant(1, l, cap)
        for t in pt.tangent_weights:
            one_minus = 1 - TruncatedSeries.exp_linear(tuple(-c for c in t), cap + 1)
            todd_unit = todd_unit * one_minus.divide_exact(
                TruncatedSeries.linear_form(t)).inverse()
        for w in group:
            orbit_factor = TruncatedSeries.constant(1, l, cap)
            for g in rs.positive_roots:
                cov = rs.dynkin(w.act(g))
                orbit_factor = orbit_factor * (
                    1 - TruncatedSeries.exp_linear(tuple(-c for c in cov), cap))
            num = orbit_factor * todd_unit * pt.symplectic_factor
            if num.is_zero():
                continue
            phase = tuple(k * (pm - wl) for pm, wl in
                          zip(pt.moment, rs.dynkin(w.act(lam_vec))))
            terms.append(make_term(l, num, phase,
                                   [(t, 1) for t in pt.tangent_weights]))
    return terms


def raw_fibration_residue(points, rs: RootSystem, lam_labels, k: int, *,
                          seed: int = DEFAULT_SEED,
                          retries: int = DEFAULT_RETRIES) -> tuple[Fraction, int]:
    """Iterated residue of the fibration integrand, before the calibrated
    constant; returns (value, retry attempts used)."""
    lam_labels = vec(lam_labels)
    points = tuple(points)
    if not points:
        raise ValueError("need at least one fixed point")
    sizes = {len(pt.tangent_weights) for pt in points}
    if len(sizes) != 1:
        raise ValueError("fixed points disagree on the manifold dimension")
    lam_vec = rs.weight_vector(lam_labels)
    if not rs.is_regular(lam_vec):
        raise DegenerateOrbitError("Lambda lies on a Weyl wall")
    scaled = tuple(k * c for c in lam_labels)
    if any(c.denominator != 1 for c in scaled):
        raise InadmissibleInputError("k Lambda is not a weight")
    for pt in points:
        if any((k * c).denominator != 1 for c in pt.moment):
            raise InadmissibleInputError("k-scaled moment value %s is not a weight" % (pt.moment,))
        diff = tuple(k * (a - b) for a, b in zip(pt.moment, lam_labels))
        if not _weight_in_root_lattice(rs, diff):
            raise InadmissibleInputError(
                "k(mu(F) - Lambda) is not in the root lattice at %s" % pt.label)
    _check_regularity(points, rs, lam_labels)

    terms = _fibration_terms(points, rs, lam_labels, k)
    group = enumerate_weyl_group(rs)
    weights = [t for pt in points for t in pt.tangent_weights]
    weights += [rs.dynkin(w.act(g)) for w in group for g in rs.positive_roots]
    phases = [t.phase for t in terms if any(c != 0 for c in t.phase)]
    xi = _generic_direction(weights + phases, rs.rank)
    cone = build_cone(weights, vec(xi))
    return res_cone(terms, cone, seed=seed, retries=retries)


@dataclass
class CalibrationRegistry:
    """Frozen residue-theorem constants, one per (group label, half
    dimension of the manifold).  SU(2) signatures self-calibrate on the
    product of spheres whose reduction at zero is a point; other
    signatures must be registered explicitly against a known value."""

    constants: dict[tuple[str, int], Fraction] = field(default_factory=dict)

    def register(self, rs: RootSystem, points, lam_labels, k: int, expected,
                 *, seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> Fraction:
        raw, _ = raw_fibration_residue(points, rs, lam_labels, k, seed=seed, retries=retries)
        if raw == 0:
            raise InternalInconsistencyError("calibration case has zero raw residue")
        c = Fraction(expected) / raw
        self.constants[(rs.label, len(points[0].tangent_weights))] = c
        return c

    def constant_for(self, rs: RootSystem, half_dim: int, *,
                     seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> Fraction:
        key = (rs.label, half_dim)
        if key in self.constants:
            return self.constants[key]
        if rs.label == "A1" and half_dim >= 2:
            # product of half_dim spheres; for half_dim = 3 this is the
            # M0 = point case with Lambda = rho, k = 1
            points = product_orbit_fixed_data(rs, [(1,)] * half_dim)
            k = 1 if half_dim % 2 == 1 else 2
            expected = tensor_multiplicity(rs, [(k,)] * half_dim, (k,))
            return self.register(rs, points, (1,), k, expected, seed=seed, retries=retries)
        raise InadmissibleInputError(
            "no calibration case known for signature (%s, %d); register one" % key)

    def check(self, rs: RootSystem, points, lam_labels, k: int, expected, *,
              seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> Fraction:
        """Recompute the implied constant on a case with known value and
        fail loudly if it drifted from the frozen one."""
        raw, _ = raw_fibration_residue(points, rs, lam_labels, k, seed=seed, retries=retries)
        frozen = self.constant_for(rs, len(points[0].tangent_weights))
        if raw == 0 or Fraction(expected) / raw != frozen:
            raise CalibrationDriftError(
                "implied constant %s differs from frozen %s"
                % ("undefined" if raw == 0 else Fraction(expected) / raw, frozen))
        return frozen


GLOBAL_CALIBRATIONS = CalibrationRegistry()


def fibration_rr_residue(points, rs: RootSystem, lam_labels, k: int, *,
                         seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES,
                         registry: CalibrationRegistry | None = None) -> Fraction:
    """Riemann-Roch number of the fibration by the residue route: the
    calibrated constant times the iterated residue of the fixed-point
    integrand."""
    registry = registry if registry is not None else GLOBAL_CALIBRATIONS
    points = tuple(points)
    raw, _ = raw_fibration_residue(points, rs, lam_labels, k, seed=seed, retries=retries)
    c = registry.constant_for(rs, len(points[0].tangent_weights), seed=seed, retries=retries)
    return c * raw


# ----------------------------------------------------------------------
# base route


@dataclass
class BaseIntersectionOracle:
    """Intersection pairings of the reduced space at zero: named generator
    classes (the symplectic class first, then one class per invariant
    generator), the complex top degree, the Todd class and the pairing
    table as polynomials in the generators (exponent tuple -> rational)."""

    generator_names: tuple[str, ...]
    generator_degrees: tuple[int, ...]
    top_degree: int
    pairing: dict
    todd: dict

    def __post_init__(self):
        if len(self.generator_names) != len(self.generator_degrees):
            raise ValueError("generator names and degrees differ in length")
        if not self.generator_degrees or self.generator_degrees[0] != 1:
            raise ValueError("first generator must be the symplectic class, degree 1")
        for mono, value in self.pairing.items():
            if self._wdeg(mono) != self.top_degree and Fraction(value) != 0:
                raise ValueError("pairing is supported off the top degree")

    def _wdeg(self, mono) -> int:
        return sum(e * d for e, d in zip(mono, self.generator_degrees))

    @classmethod
    def point(cls, rs: RootSystem) -> "BaseIntersectionOracle":
        degs = fundamental_degrees(rs)
        names = ("w0",) + tuple("a%d" % d for d in degs)
        zero = (0,) * (1 + len(degs))
        return cls(generator_names=names, generator_degrees=(1,) + degs,
                   top_degree=0, pairing={zero: Fraction(1)}, todd={zero: Fraction(1)})


def _weighted_mul(a: dict, b: dict, degrees, cap: int) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            if sum(e * d for e, d in zip(mono, degrees)) > cap:
                continue
            out[mono] = out.get(mono, Fraction(0)) + ca * cb
    return {m: c for m, c in out.items() if c}


def fibration_rr_base(oracle: BaseIntersectionOracle, rs: RootSystem, lam_labels,
                      k: int, trunc: int | None = None) -> Fraction:
    """Riemann-Roch number by the base route: expand the exponential of
    k times the symplectic class against the Todd class and the character
    class written in the invariant generators, then apply the pairing."""
    lam_labels = vec(lam_labels)
    scaled = tuple(k * c for c in lam_labels)
    scaled = check_weight(rs, scaled, dominant=True, integral=True)
    degs = fundamental_degrees(rs)
    if tuple(oracle.generator_degrees[1:]) != degs:
        raise ValueError("oracle generator degrees %s do not match the group's %s"
                         % (oracle.generator_degrees[1:], degs))
    cap = oracle.top_degree
    n_series = cap if trunc is None else trunc
    s_series = character_series(rs, scaled, n_series)
    s_in_gens = express_invariant(rs, s_series)
    nsym = 1 + len(degs)
    s_poly = {(0,) + mono: c for mono, c in s_in_gens.items()}

    wdegrees = oracle.generator_degrees
    exp_w0 = {}
    power = Fraction(1)
    for j in range(cap + 1):
        mono = (j,) + (0,) * (len(degs))
        exp_w0[mono] = power
        power = power * k / (j + 1)
    total = _weighted_mul(exp_w0, {tuple(m): Fraction(c) for m, c in oracle.todd.items()},
                          wdegrees, cap)
    total = _weighted_mul(total, s_poly, wdegrees, cap)
    value = Fraction(0)
    for mono, c in total.items():
        if len(mono) != nsym:
            raise ValueError("oracle monomial arity mismatch")
        value += c * Fraction(oracle.pairing.get(mono, 0))
    return value
