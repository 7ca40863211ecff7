"""Weyl dimension formula, coadjoint-orbit volume, and the truncated
character class of a dominant weight.

The character class is the alternating exponential sum over the Weyl
group divided by the Weyl denominator.  The division is performed by
factoring the product of positive roots out of the denominator (an exact
polynomial division, which doubles as an arithmetic self-check) and
inverting the remaining unit series.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateOrbitError, ExactDivisionError, InternalInconsistencyError
from .linalg import Vec, vec, vec_add
from .roots import RootSystem, enumerate_weyl_group
from .series import TruncatedSeries, positive_root_product


def check_weight(rs: RootSystem, labels, *, dominant=False, integral=False) -> Vec:
    labels = vec(labels)
    if len(labels) != rs.rank:
        raise ValueError("expected %d Dynkin labels, got %d" % (rs.rank, len(labels)))
    if dominant and any(c < 0 for c in labels):
        raise ValueError("weight %s is not dominant" % (labels,))
    if integral and any(c.denominator != 1 for c in labels):
        raise ValueError("weight %s is not integral" % (labels,))
    return labels


def weyl_dim(rs: RootSystem, labels) -> int:
    """Dimension of the irreducible representation with the given
    dominant integral highest weight."""
    labels = check_weight(rs, labels, dominant=True, integral=True)
    lam = rs.weight_vector(labels)
    shifted = vec_add(lam, rs.rho)
    num = Fraction(1)
    den = Fraction(1)
    for g in rs.positive_roots:
        num *= rs.pairing(shifted, g)
        den *= rs.pairing(rs.rho, g)
    value = num / den
    if value.denominator != 1 or value <= 0:
        raise InternalInconsistencyError("Weyl dimension %s is not a positive integer" % value)
    return int(value)


def orbit_volume(rs: RootSystem, labels) -> Fraction:
    """Symplectic volume of the coadjoint orbit through a strictly dominant
    rational point, as the ratio of root-pairing products against rho.

    The point need not be a weight; it must stay off every Weyl wall.
    """
    labels = vec(labels)
    point = rs.weight_vector(labels)
    num = Fraction(1)
    den = Fraction(1)
    for g in rs.positive_roots:
        pg = rs.pairing(point, g)
        if pg == 0:
            raise DegenerateOrbitError("point lies on the wall of %s" % (g,))
        num *= pg
        den *= rs.pairing(rs.rho, g)
    if num < 0:
        raise ValueError("point is regular but not dominant")
    return num / den


def weyl_denominator(rs: RootSystem, trunc: int) -> TruncatedSeries:
    """prod over positive roots of (e^{(gamma,X)/2} - e^{-(gamma,X)/2})."""
    out = TruncatedSeries.constant(1, rs.rank, trunc)
    for g in rs.positive_roots:
        half = tuple(c / 2 for c in rs.dynkin(g))
        out = out * (TruncatedSeries.exp_linear(half, trunc)
                     - TruncatedSeries.exp_linear(tuple(-c for c in half), trunc))
    return out


def character_series(rs: RootSystem, labels, trunc: int) -> TruncatedSeries:
    """Degree-truncated character class of the dominant integral weight.

    Variables are the coordinates dual to the integer-lattice basis, so a
    weight mu enters through the linear form sum_i <mu, u_i> X_i.  The
    constant term is the Weyl dimension.
    """
    if trunc < 0:
        raise ValueError("truncation degree must be >= 0")
    labels = check_weight(rs, labels, dominant=True, integral=True)
    m = len(rs.positive_roots)
    work = trunc + m
    shifted = vec_add(rs.weight_vector(labels), rs.rho)
    numerator = TruncatedSeries(rs.rank, {}, work)
    for w in enumerate_weyl_group(rs):
        numerator = numerator + TruncatedSeries.exp_linear(rs.dynkin(w.act(shifted)), work) * w.sign
    root_poly = positive_root_product(rs)
    try:
        reduced = numerator.divide_exact(root_poly)
        unit = weyl_denominator(rs, work).divide_exact(root_poly)
    except ExactDivisionError as exc:
        raise InternalInconsistencyError(
            "alternating numerator/denominator not divisible by the root product") from exc
    return reduced * unit.inverse()
