"""Command-line front end.

Every subcommand prints one canonical JSON document (sorted keys, no
whitespace variance) to stdout, so identical configurations produce
byte-identical reports.  Exact rationals are rendered as "p/q" strings.

Exit codes: 0 success, 1 input or precondition error, 2 genericity
retries exhausted, 3 internal inconsistency (failed exact division or
calibration drift).
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .characters import character_series, orbit_volume, weyl_dim
from .errors import (ExactDivisionError, GenericityError, InternalInconsistencyError)
from .jsonio import (canonical_json, fraction_to_str, load_base_oracle, load_fixed_points,
                     load_residue_problem, parse_weight_labels)
from .localization import (GLOBAL_CALIBRATIONS, fibration_rr_base, fibration_rr_residue,
                           rr_orbit_fixedpoint)
from .multiplicities import tensor_multiplicity
from .residues import DEFAULT_RETRIES, DEFAULT_SEED, build_cone, res_cone
from .roots import parse_group_label
from .verify import run_suite

EXIT_INPUT = 1
EXIT_GENERICITY = 2
EXIT_INTERNAL = 3


def _default_seed() -> int:
    env = os.environ.get("ORBITRR_SEED")
    return int(env) if env else DEFAULT_SEED


def _emit(doc: dict) -> None:
    sys.stdout.write(canonical_json(doc))


def _cmd_dim(args) -> int:
    rs = parse_group_label(args.group)
    labels = parse_weight_labels(args.weight)
    _emit({"group": rs.label, "weight": args.weight, "dim": weyl_dim(rs, labels),
           "seed": args.seed})
    return 0


def _cmd_orbit_volume(args) -> int:
    rs = parse_group_label(args.group)
    labels = parse_weight_labels(args.weight)
    _emit({"group": rs.label, "weight": args.weight,
           "volume": fraction_to_str(orbit_volume(rs, labels)), "seed": args.seed})
    return 0


def _cmd_character(args) -> int:
    rs = parse_group_label(args.group)
    labels = parse_weight_labels(args.weight)
    series = character_series(rs, labels, args.trunc)
    _emit({"group": rs.label, "weight": args.weight, "trunc": args.trunc,
           "series": series.to_text(),
           "constant_term": fraction_to_str(series.constant_term()),
           "seed": args.seed})
    return 0


def _cmd_rr_orbit(args) -> int:
    rs = parse_group_label(args.group)
    labels = parse_weight_labels(args.weight)
    _emit({"group": rs.label, "weight": args.weight, "k": args.k,
           "rr": rr_orbit_fixedpoint(rs, labels, args.k), "seed": args.seed})
    return 0


def _cmd_jk_residue(args) -> int:
    problem = load_residue_problem(args.input)
    cone = build_cone([form for term in problem["terms"] for form, _ in term.dens],
                      problem["xi"])
    value, attempts = res_cone(problem["terms"], cone, problem["coords"],
                               seed=args.seed, retries=args.retries)
    _emit({"value": fraction_to_str(value), "retries": attempts, "seed": args.seed})
    return 0


def _cmd_fibration(args) -> int:
    rs, points = load_fixed_points(args.fixture)
    if args.group and parse_group_label(args.group).label != rs.label:
        raise ValueError("--group %s contradicts fixture group %s" % (args.group, rs.label))
    lam = parse_weight_labels(args.weight)
    doc = {"group": rs.label, "weight": args.weight, "k": args.k, "route": args.route,
           "seed": args.seed}
    if args.oracle_factors:
        factors = [tuple(args.k * c for c in parse_weight_labels(part))
                   for part in args.oracle_factors.split(";")]
        target = tuple(args.k * c for c in lam)
        doc["oracle"] = tensor_multiplicity(rs, factors, target)
    if args.route in ("residue", "both"):
        value = fibration_rr_residue(points, rs, lam, args.k,
                                     seed=args.seed, retries=args.retries)
        doc["residue"] = fraction_to_str(value)
        constant = GLOBAL_CALIBRATIONS.constants[(rs.label, len(points[0].tangent_weights))]
        doc["constant"] = fraction_to_str(constant)
    if args.route in ("base", "both"):
        if not args.base_fixture:
            raise ValueError("--base-fixture is required for the base route")
        base_rs, oracle = load_base_oracle(args.base_fixture)
        if base_rs.label != rs.label:
            raise ValueError("base fixture group %s does not match %s"
                             % (base_rs.label, rs.label))
        doc["base"] = fraction_to_str(fibration_rr_base(oracle, rs, lam, args.k, args.trunc))
    if args.route == "both":
        diff = Fraction(doc["residue"]) - Fraction(doc["base"])
        doc["difference"] = fraction_to_str(diff)
        _emit(doc)
        if diff != 0:
            raise InternalInconsistencyError("routes disagree by %s" % diff)
        return 0
    _emit(doc)
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, seed=args.seed, retries=args.retries)
    for r in results:
        sys.stderr.write(r.line() + "\n")
    doc = {
        "suite": args.suite,
        "seed": args.seed,
        "checks": [{"id": r.check_id, "passed": r.passed, "detail": r.detail}
                   for r in results],
        "all_passed": all(r.passed for r in results),
    }
    _emit(doc)
    if all(r.passed for r in results):
        return 0
    if any(r.error == "CalibrationDriftError" for r in results):
        return EXIT_INTERNAL
    return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitrr",
        description="Exact Riemann-Roch numbers of coadjoint orbits and "
                    "symplectic fibrations")
    parser.add_argument("--seed", type=int, default=None,
                        help="deterministic seed (default: ORBITRR_SEED or built-in)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        return p

    p = add("dim", _cmd_dim, help="Weyl dimension of a dominant integral weight")
    p.add_argument("--group", required=True)
    p.add_argument("--weight", required=True, help="Dynkin labels, e.g. 1,1")

    p = add("orbit-volume", _cmd_orbit_volume, help="symplectic volume of a coadjoint orbit")
    p.add_argument("--group", required=True)
    p.add_argument("--weight", required=True)

    p = add("character", _cmd_character, help="truncated character class")
    p.add_argument("--group", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--trunc", type=int, default=0)

    p = add("rr-orbit", _cmd_rr_orbit, help="Riemann-Roch number of an orbit by fixed points")
    p.add_argument("--group", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("jk-residue", _cmd_jk_residue, help="iterated residue of a problem file")
    p.add_argument("--input", required=True)
    p.add_argument("--retries", type=int, default=DEFAULT_RETRIES)

    p = add("fibration", _cmd_fibration, help="Riemann-Roch of a fibration from fixture data")
    p.add_argument("--group")
    p.add_argument("--weight", required=True, help="Dynkin labels of Lambda (rationals allowed)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--fixture", required=True, help="fixed-point data JSON")
    p.add_argument("--base-fixture", help="intersection oracle JSON (base route)")
    p.add_argument("--route", choices=("base", "residue", "both"), default="both")
    p.add_argument("--trunc", type=int, default=None)
    p.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    p.add_argument("--oracle-factors", dest="oracle_factors",
                   help="semicolon-separated factor weights for the tensor "
                        "oracle value, e.g. '1;1;1' for a product of orbits")

    p = add("verify", _cmd_verify, help="run the acceptance suites")
    p.add_argument("--suite", default="all",
                   choices=("bwb", "identity", "residue", "fibration", "asymptotics", "all"))
    p.add_argument("--retries", type=int, default=DEFAULT_RETRIES)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = _default_seed()
    try:
        if getattr(args, "trunc", None) is not None and args.trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        if getattr(args, "retries", 1) < 1:
            raise ValueError("retry limit must be >= 1")
        return args.fn(args)
    except (InternalInconsistencyError, ExactDivisionError) as exc:
        sys.stderr.write("internal inconsistency: %s\n" % exc)
        return EXIT_INTERNAL
    except GenericityError as exc:
        sys.stderr.write("genericity failure: %s\n" % exc)
        return EXIT_GENERICITY
    except (ValueError, OSError, KeyError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
