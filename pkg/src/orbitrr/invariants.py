"""Generators of the Weyl-invariant polynomial ring and exact expression
of invariant series in them.

Generators are orbit power sums: for a dominant weight c the polynomial
sum over the orbit W.c of <mu, X>^d is invariant of degree d.  For each
fundamental degree of the group a candidate weight is chosen (fundamental
weights first, then rho) so that the new generator enlarges the span of
products of the ones already chosen; the Molien series supplies the
expected dimension count as an independent check.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import GeneratorDeficiencyError
from .linalg import Vec, solve_exact
from .roots import RootSystem, enumerate_weyl_group
from .series import TruncatedSeries


def fundamental_degrees(rs: RootSystem) -> tuple[int, ...]:
    l = rs.rank
    if rs.family == "A":
        degs = list(range(2, l + 2))
    elif rs.family in ("B", "C"):
        degs = [2 * i for i in range(1, l + 1)]
    elif rs.family == "D":
        degs = sorted([2 * i for i in range(1, l)] + [l])
    else:  # G2
        degs = [2, 6]
    return tuple(degs)


def weyl_orbit(rs: RootSystem, v: Vec) -> tuple[Vec, ...]:
    return tuple(sorted({w.act(v) for w in enumerate_weyl_group(rs)}))


def orbit_power_sum(rs: RootSystem, v: Vec, degree: int) -> TruncatedSeries:
    """sum over the W-orbit of v of the linear form <mu, X>^degree."""
    out = TruncatedSeries(rs.rank, {}, None)
    for mu in weyl_orbit(rs, v):
        out = out + TruncatedSeries.linear_form(rs.dynkin(mu)) ** degree
    return out


def molien_dimension(rs: RootSystem, degree: int) -> int:
    """Dimension of the space of degree-d Weyl-invariant polynomials,
    from the Molien series (1/|W|) sum_w 1/det(1 - t w)."""
    if degree == 0:
        return 1
    total = Fraction(0)
    for w in enumerate_weyl_group(rs):
        # det(1 - t M) as a univariate polynomial via permutation expansion
        char = _det_one_minus_t(w.matrix)
        total += _recip_coefficient(char, degree)
    value = total / len(enumerate_weyl_group(rs))
    assert value.denominator == 1
    return int(value)


def _det_one_minus_t(m) -> list[Fraction]:
    n = len(m)
    from itertools import permutations

    coeffs = [Fraction(0)] * (n + 1)
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        # product of (delta_ij - t m[i][j]) entries
        prod = [Fraction(1)]
        for i in range(n):
            entry0 = Fraction(int(i == perm[i]))
            entry1 = -m[i][perm[i]]
            nxt = [Fraction(0)] * (len(prod) + 1)
            for e, c in enumerate(prod):
                nxt[e] += c * entry0
                nxt[e + 1] += c * entry1
            prod = nxt
        for e, c in enumerate(prod):
            coeffs[e] += sign * c
    return coeffs


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _recip_coefficient(coeffs: list[Fraction], degree: int) -> Fraction:
    """[t^degree] of 1/p(t) for p with p(0) = 1."""
    assert coeffs[0] == 1
    inv = [Fraction(1)] + [Fraction(0)] * degree
    for d in range(1, degree + 1):
        acc = Fraction(0)
        for j in range(1, min(d, len(coeffs) - 1) + 1):
            acc += coeffs[j] * inv[d - j]
        inv[d] = -acc
    return inv[degree]


def _span_dimension(polys: list[TruncatedSeries]) -> int:
    monos = sorted({m for p in polys for m in p.coeffs})
    rows = [[p.coeffs.get(m, Fraction(0)) for m in monos] for p in polys]
    rank = 0
    for col in range(len(monos)):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _monomials_of_weighted_degree(degrees, target: int):
    if not degrees:
        if target == 0:
            yield ()
        return
    d0 = degrees[0]
    for e in range(target // d0 + 1):
        for rest in _monomials_of_weighted_degree(degrees[1:], target - e * d0):
            yield (e,) + rest


def _generator_products(gens, degrees, target: int) -> dict[tuple[int, ...], TruncatedSeries]:
    out = {}
    for mono in _monomials_of_weighted_degree(degrees, target):
        p = TruncatedSeries.constant(1, gens[0].num_vars if gens else 0, None)
        for g, e in zip(gens, mono):
            if e:
                p = p * g**e
        out[mono] = p
    return out


@lru_cache(maxsize=None)
def invariant_generators(rs: RootSystem) -> tuple[TruncatedSeries, ...]:
    """One invariant generator per fundamental degree, chosen from orbit
    power sums of fundamental weights (then rho) so that each enlarges the
    span at its degree; dimensions are checked against the Molien count.
    """
    candidates = list(rs.fundamental_weights) + [rs.rho]
    degrees = fundamental_degrees(rs)
    chosen: list[TruncatedSeries] = []
    chosen_degs: list[int] = []
    for d in degrees:
        base = [p for p in _generator_products(chosen, tuple(chosen_degs), d).values()
                if not p.is_zero()]
        base_dim = _span_dimension(base)
        picked = None
        for c in candidates:
            cand = orbit_power_sum(rs, c, d)
            if cand.is_zero():
                continue
            if _span_dimension(base + [cand]) > base_dim:
                picked = cand
                break
        if picked is None:
            raise GeneratorDeficiencyError(
                "no orbit power sum enlarges the invariants of degree %d for %s" % (d, rs.label))
        chosen.append(picked)
        chosen_degs.append(d)
    for d in degrees:
        prods = [p for p in _generator_products(tuple(chosen), degrees, d).values()
                 if not p.is_zero()]
        if _span_dimension(prods) != molien_dimension(rs, d):
            raise GeneratorDeficiencyError(
                "generators span too little in degree %d for %s" % (d, rs.label))
    return tuple(chosen)


def express_invariant(rs: RootSystem, series: TruncatedSeries,
                      upto: int | None = None) -> dict[tuple[int, ...], Fraction]:
    """Write a Weyl-invariant series as a polynomial in the invariant
    generators, degree by degree, by exact linear solve on coefficients.

    Returns {generator exponent tuple: coefficient}.  Raises
    GeneratorDeficiencyError if some homogeneous component is not in the
    span of generator products of its degree.
    """
    gens = invariant_generators(rs)
    degrees = fundamental_degrees(rs)
    cap = series.trunc if upto is None else upto
    if cap is None:
        cap = series.max_degree()
    out: dict[tuple[int, ...], Fraction] = {}
    c0 = series.constant_term()
    if c0:
        out[(0,) * len(gens)] = c0
    for d in range(1, cap + 1):
        component = series.homogeneous_part(d)
        products = _generator_products(gens, degrees, d)
        products = {m: p for m, p in products.items() if not p.is_zero()}
        if component.is_zero():
            continue
        if not products:
            raise GeneratorDeficiencyError(
                "nonzero invariant component in degree %d but no generator products" % d)
        monos = sorted({m for p in products.values() for m in p.coeffs}
                       | set(component.coeffs))
        keys = sorted(products)
        matrix = tuple(tuple(products[k].coeffs.get(m, Fraction(0)) for k in keys)
                       for m in monos)
        rhs = [tuple(component.coeffs.get(m, Fraction(0)) for m in monos)]
        sol = solve_exact(matrix, rhs)
        if sol is None:
            raise GeneratorDeficiencyError(
                "invariant component of degree %d is outside the generator span" % d)
        for k, c in zip(keys, sol[0]):
            if c:
                out[k] = out.get(k, Fraction(0)) + c
    return out
