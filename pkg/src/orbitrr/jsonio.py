"""JSON interchange: exact rationals travel as strings "p/q", vectors as
lists of such strings, series in their canonical text form.

Three file schemas are read here (documented in the README): fixed-point
data for the residue route, intersection oracles for the base route, and
standalone residue problems.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .localization import BaseIntersectionOracle, FixedPointDatum
from .residues import RatExpTerm, make_term
from .roots import RootSystem, parse_group_label
from .series import TruncatedSeries


def fraction_to_str(x) -> str:
    x = Fraction(x)
    return str(x)


def parse_fraction(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        return Fraction(s)
    raise ValueError("expected an integer or a 'p/q' string, got %r" % (s,))


def vector_to_json(v) -> list[str]:
    return [fraction_to_str(c) for c in v]


def parse_vector(v) -> tuple[Fraction, ...]:
    return tuple(parse_fraction(c) for c in v)


def parse_weight_labels(text: str) -> tuple[Fraction, ...]:
    """Comma-separated Dynkin labels, integers or rationals: "2,1" or "1/2,1"."""
    return tuple(Fraction(part.strip()) for part in text.split(","))


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# ----------------------------------------------------------------------
# fixed-point data files


def fixed_points_to_json(group: str, points) -> dict:
    return {
        "group": group,
        "fixed_points": [
            {
                "label": pt.label,
                "moment": vector_to_json(pt.moment),
                "tangent_weights": [vector_to_json(w) for w in pt.tangent_weights],
                "symplectic_factor": fraction_to_str(pt.symplectic_factor),
            }
            for pt in points
        ],
    }


def parse_fixed_points(doc: dict) -> tuple[RootSystem, tuple[FixedPointDatum, ...]]:
    rs = parse_group_label(doc["group"])
    points = []
    for entry in doc["fixed_points"]:
        # "symplectic_exponent" accepted as an alias: for isolated fixed
        # points the pairing value of the symplectic class is the only
        # exact semantics, so both keys carry the same rational factor
        factor = entry.get("symplectic_factor", entry.get("symplectic_exponent", 1))
        points.append(FixedPointDatum(
            label=str(entry.get("label", "F%d" % len(points))),
            moment=parse_vector(entry["moment"]),
            tangent_weights=tuple(parse_vector(w) for w in entry["tangent_weights"]),
            symplectic_factor=parse_fraction(factor),
        ))
    return rs, tuple(points)


def load_fixed_points(path) -> tuple[RootSystem, tuple[FixedPointDatum, ...]]:
    with open(path, encoding="utf-8") as fh:
        return parse_fixed_points(json.load(fh))


# ----------------------------------------------------------------------
# base intersection oracle files


def parse_base_oracle(doc: dict) -> tuple[RootSystem, BaseIntersectionOracle]:
    rs = parse_group_label(doc["group"])
    names = tuple(str(n) for n, _ in doc["generators"])
    degrees = tuple(int(d) for _, d in doc["generators"])

    def parse_table(rows):
        return {tuple(int(e) for e in mono): parse_fraction(c) for mono, c in rows}

    oracle = BaseIntersectionOracle(
        generator_names=names,
        generator_degrees=degrees,
        top_degree=int(doc["top_degree"]),
        pairing=parse_table(doc["pairing"]),
        todd=parse_table(doc["todd"]),
    )
    return rs, oracle


def load_base_oracle(path) -> tuple[RootSystem, BaseIntersectionOracle]:
    with open(path, encoding="utf-8") as fh:
        return parse_base_oracle(json.load(fh))


# ----------------------------------------------------------------------
# standalone residue problems


def _parse_poly(rows, num_vars: int) -> TruncatedSeries:
    coeffs = {tuple(int(e) for e in mono): parse_fraction(c) for mono, c in rows}
    return TruncatedSeries(num_vars, coeffs, None)


def parse_residue_problem(doc: dict) -> dict:
    num_vars = int(doc["vars"])
    terms: list[RatExpTerm] = []
    for t in doc["terms"]:
        num = _parse_poly(t.get("num", [[[0] * num_vars, "1"]]), num_vars)
        phase = parse_vector(t["phase"])
        dens = [(parse_vector(form), int(mult)) for form, mult in t["dens"]]
        terms.append(make_term(num_vars, num, phase, dens))
    coords = doc.get("coords")
    if coords is not None:
        cols = [parse_vector(c) for c in coords]
        coords = tuple(tuple(cols[j][i] for j in range(num_vars)) for i in range(num_vars))
    return {
        "vars": num_vars,
        "terms": terms,
        "xi": parse_vector(doc["xi"]),
        "coords": coords,
    }


def load_residue_problem(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return parse_residue_problem(json.load(fh))


def fixture_path(name: str):
    """Path of a fixture shipped with the package (see src/orbitrr/fixtures)."""
    from importlib.resources import files

    return files("orbitrr").joinpath("fixtures", name)
