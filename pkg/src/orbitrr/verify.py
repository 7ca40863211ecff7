"""The acceptance suite: every check the package must pass, grouped into
named suites so the command line can run them selectively.

Each check returns a CheckResult; the test suite asserts them and the
CLI renders them as a JSON report.  All sweeps are exact; tolerances do
not exist here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

from .characters import character_series, orbit_volume, weyl_dim
from .errors import CalibrationDriftError
from .localization import (BaseIntersectionOracle, CalibrationRegistry, fibration_rr_base,
                           fibration_rr_residue, product_orbit_fixed_data,
                           rr_leading_coefficient, rr_orbit_fixedpoint, todd_restriction_identity)
from .multiplicities import tensor_multiplicity, weight_count_dimension
from .residues import DEFAULT_RETRIES, DEFAULT_SEED, build_cone, make_term, res_cone
from .roots import build_root_system, enumerate_weyl_group
from .series import TruncatedSeries, flag_integral, positive_root_product
from .volumes import partition_fiber_volume


@dataclass
class CheckResult:
    check_id: str
    passed: bool
    detail: str
    error: str | None = None

    def line(self) -> str:
        return "%s %s: %s" % ("PASS" if self.passed else "FAIL", self.check_id, self.detail)


def _sweep_weights(rank: int, max_label: int):
    return list(iproduct(range(max_label + 1), repeat=rank))


def suite_bwb(seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> list[CheckResult]:
    """Criteria 1 and 2: fixed-point sums against the dimension formula and
    the weight-count oracle, and character constant terms."""
    out = []
    for label in ("A1", "A2", "B2", "G2"):
        rs = build_root_system(label[0], int(label[1]))
        bad = []
        count = 0
        for labels in _sweep_weights(rs.rank, 3):
            for k in range(5):
                kl = tuple(k * c for c in labels)
                r = rr_orbit_fixedpoint(rs, labels, k)
                d = weyl_dim(rs, kl)
                c = weight_count_dimension(rs, kl)
                count += 1
                if not (r == d == c):
                    bad.append((labels, k, r, d, c))
        out.append(CheckResult(
            "bwb/%s" % label, not bad,
            "%d (weight, k) configs, rr = dim = weight count" % count
            if not bad else "mismatches: %s" % bad[:3]))
    for label in ("A1", "A2", "B2", "G2"):
        rs = build_root_system(label[0], int(label[1]))
        bad = []
        for labels in _sweep_weights(rs.rank, 3):
            s = character_series(rs, labels, 0)
            if s.constant_term() != weyl_dim(rs, labels):
                bad.append(labels)
        out.append(CheckResult(
            "character-constant/%s" % label, not bad,
            "constant term equals Weyl dimension on labels <= 3"
            if not bad else "mismatch at %s" % bad[:3]))
    return out


def suite_identity(seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> list[CheckResult]:
    """Criteria 3 and 4: the per-element Todd-restriction identity and the
    flag fiber integral of the root product."""
    out = []
    for label in ("A1", "A2", "B2"):
        rs = build_root_system(label[0], int(label[1]))
        bad = [w.word for w in enumerate_weyl_group(rs)
               if not todd_restriction_identity(rs, w, 8)]
        out.append(CheckResult(
            "todd-restriction-identity/%s" % label, not bad,
            "all %d Weyl elements at truncation 8" % len(enumerate_weyl_group(rs))
            if not bad else "fails at words %s" % bad[:3]))
    for label in ("A1", "A2", "B2", "G2"):
        rs = build_root_system(label[0], int(label[1]))
        value = flag_integral(rs, positive_root_product(rs))
        expect = len(enumerate_weyl_group(rs))
        out.append(CheckResult(
            "fiber-integral/%s" % label, value == expect,
            "integral of the root product = %s (|W| = %d)" % (value, expect)))
    return out


def _random_residue_problem(rng: random.Random):
    while True:
        n = rng.randint(2, 4)
        weights = []
        for _ in range(n):
            while True:
                a, b = rng.randint(0, 3), rng.randint(-3, 3)
                if (a, b) != (0, 0) and (a > 0 or (a == 0 and b > 0)):
                    weights.append((Fraction(a), Fraction(b)))
                    break
        dets = [w1[0] * w2[1] - w1[1] * w2[0] for i, w1 in enumerate(weights)
                for w2 in weights[i + 1:]]
        if all(d == 0 for d in dets):
            continue
        xi = None
        for radius in range(1, 40):
            for x in range(-radius, radius + 1):
                for y in (-radius, radius):
                    for cand in ((x, y), (y, x)):
                        if all(w[0] * cand[0] + w[1] * cand[1] > 0 for w in weights):
                            xi = (Fraction(cand[0]), Fraction(cand[1]))
                            break
                    if xi:
                        break
                if xi:
                    break
            if xi:
                break
        if xi is None:
            continue
        choices = [Fraction(1, 3), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
        coeffs = [rng.choice(choices) for _ in weights]
        p = tuple(sum(c * w[i] for c, w in zip(coeffs, weights)) for i in range(2))
        return weights, xi, p


def suite_residue(seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> list[CheckResult]:
    """Criterion 7: iterated residues against the simplicial chamber
    volume oracle on seeded random two-variable problems."""
    rng = random.Random(seed)
    bad = []
    for idx in range(20):
        weights, xi, p = _random_residue_problem(rng)
        term = make_term(2, TruncatedSeries.constant(1, 2), p,
                         [(w, 1) for w in weights])
        cone = build_cone(weights, xi)
        value, _ = res_cone([term], cone, seed=seed + idx, retries=retries)
        oracle = partition_fiber_volume(weights, p)
        if value != oracle:
            bad.append((idx, weights, p, value, oracle))
    return [CheckResult(
        "residue-vs-volume", not bad,
        "20 seeded 2-variable problems agree exactly (seed %d)" % seed
        if not bad else "disagreements: %s" % bad[:2])]


def _su2_fibration_cases():
    """(points label, factors, Lambda, k values) for the SU(2) fibration
    sweep; all values are checked against the tensor oracle."""
    return [
        ("three-spheres", [(1,), (1,), (1,)], (Fraction(1),), [1, 2, 3, 4, 5, 6]),
        ("four-spheres", [(1,), (1,), (1,), (1,)], (Fraction(1),), [2, 4]),
        ("four-spheres", [(1,), (1,), (1,), (1,)], (Fraction(2),), [1, 2]),
        ("mixed-spins", [(1,), (2,), (1,)], (Fraction(2),), [1, 2]),
    ]


def suite_fibration(seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> list[CheckResult]:
    """Criteria 5 and 9: the end-to-end fibration family by both routes
    against the tensor oracle, and stability of the calibrated constant."""
    out = []
    rs = build_root_system("A", 1)
    registry = CalibrationRegistry()
    point_oracle = BaseIntersectionOracle.point(rs)

    points3 = product_orbit_fixed_data(rs, [(1,), (1,), (1,)])
    bad = []
    for k in range(1, 7):
        res = fibration_rr_residue(points3, rs, (1,), k, seed=seed, retries=retries,
                                   registry=registry)
        base = fibration_rr_base(point_oracle, rs, (1,), k)
        oracle = tensor_multiplicity(rs, [(k,)] * 3, (k,))
        if not (res == base == oracle == k + 1):
            bad.append((k, res, base, oracle))
    out.append(CheckResult(
        "fibration-three-spheres", not bad,
        "residue = base = tensor oracle = k+1 for k = 1..6"
        if not bad else "mismatches: %s" % bad))

    drift = None
    bad = []
    for name, factors, lam, ks in _su2_fibration_cases():
        points = product_orbit_fixed_data(rs, factors)
        for k in ks:
            expected = tensor_multiplicity(
                rs, [tuple(k * c for c in f) for f in factors],
                tuple(int(k * c) for c in lam))
            value = fibration_rr_residue(points, rs, lam, k, seed=seed, retries=retries,
                                         registry=registry)
            if value != expected:
                bad.append((name, lam, k, value, expected))
            try:
                registry.check(rs, points, lam, k, expected, seed=seed, retries=retries)
            except CalibrationDriftError as exc:
                drift = str(exc)
    out.append(CheckResult(
        "fibration-oracle-consistency", not bad,
        "residue route matches the tensor oracle on %d SU(2) product cases"
        % sum(len(ks) for _, _, _, ks in _su2_fibration_cases())
        if not bad else "mismatches: %s" % bad[:3]))
    out.append(CheckResult(
        "calibration-stability", drift is None,
        "constant %s unchanged across every fibration case"
        % dict(registry.constants)
        if drift is None else drift,
        error=None if drift is None else "CalibrationDriftError"))
    return out


def suite_asymptotics(seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> list[CheckResult]:
    """Criteria 6 and 8: leading coefficients against orbit volumes, and
    the polynomiality / degree-bound finite-difference checks."""
    out = []
    for label in ("A1", "A2", "B2"):
        rs = build_root_system(label[0], int(label[1]))
        bad = []
        for labels in iproduct(range(1, 4), repeat=rs.rank):
            lead = rr_leading_coefficient(rs, labels)
            vol = orbit_volume(rs, labels)
            if lead != vol:
                bad.append((labels, lead, vol))
        out.append(CheckResult(
            "leading-coefficient/%s" % label, not bad,
            "leading coefficient equals orbit volume on regular labels <= 3"
            if not bad else "mismatches: %s" % bad[:3]))

    bad = []
    for label, labels in (("A1", (1,)), ("A2", (1, 1)), ("B2", (1, 1))):
        rs = build_root_system(label[0], int(label[1]))
        m = len(rs.positive_roots)
        values = [Fraction(rr_orbit_fixedpoint(rs, labels, k)) for k in range(m + 2)]
        diffs = values
        for _ in range(m):
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        top = diffs[0]
        last = [b - a for a, b in zip(diffs, diffs[1:])]
        if any(x != 0 for x in last) or top == 0:
            bad.append((label, values))
    out.append(CheckResult(
        "k-polynomiality", not bad,
        "rr(k) is a degree-(number of positive roots) polynomial in k"
        if not bad else "failures: %s" % bad))

    rs = build_root_system("A", 1)
    point_oracle = BaseIntersectionOracle.point(rs)
    vals = [fibration_rr_base(point_oracle, rs, (lam,), 1, trunc=1) for lam in range(1, 6)]
    second = [vals[i] - 2 * vals[i + 1] + vals[i + 2] for i in range(len(vals) - 2)]
    out.append(CheckResult(
        "lambda-degree-bound", all(x == 0 for x in second),
        "second finite difference in lambda vanishes at truncation 1"
        if all(x == 0 for x in second) else "second differences %s" % second))
    return out


SUITES = {
    "bwb": suite_bwb,
    "identity": suite_identity,
    "residue": suite_residue,
    "fibration": suite_fibration,
    "asymptotics": suite_asymptotics,
}


def run_suite(name: str, seed: int = DEFAULT_SEED,
              retries: int = DEFAULT_RETRIES) -> list[CheckResult]:
    if name == "all":
        results = []
        for key in ("bwb", "identity", "residue", "fibration", "asymptotics"):
            results.extend(SUITES[key](seed, retries))
        return results
    if name not in SUITES:
        raise ValueError("unknown suite %r (choose from %s, all)"
                         % (name, ", ".join(sorted(SUITES))))
    return SUITES[name](seed, retries)
