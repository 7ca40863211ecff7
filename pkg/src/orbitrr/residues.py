"""One-variable residue sums with a decay sign rule, and the iterated
multidimensional residue attached to a cone.

The objects are sums of terms q(X) e^{<phase,X>} / prod_j beta_j(X)^{m_j}
with polynomial numerator, rational linear phase and linear-form
denominators.  The class is closed under d/dz and under taking residues
in one variable, which is what makes the iterated residue computable
exactly.

Sign rule for the one-variable operation: a positive phase coefficient
in the distinguished variable picks up the residues at every finite
pole, a negative one contributes zero, and the zero-phase marginal case
contributes zero only when the term decays at least like 1/z^2 (then the
residue at infinity vanishes); otherwise it is refused rather than
guessed.  Terms with equal phase and denominators are merged before the
rule is applied -- cancellations between fixed-point contributions are
what keep honest wall configurations finite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import ConvergenceError, GenericityError
from .linalg import Mat, Vec, mat_det, primitive_covector, vec
from .series import TruncatedSeries

LinearForm = tuple[Fraction, ...]
DEFAULT_SEED = 20270614
DEFAULT_RETRIES = 8


@dataclass
class RatExpTerm:
    """q(X) e^{<phase,X>} / prod (beta_j)^{m_j} in canonical form: every
    denominator form has coprime integer entries with positive leading
    entry, scalars being absorbed into the numerator; proportional forms
    are merged into one multiplicity."""

    num_vars: int
    numerator: TruncatedSeries
    phase: Vec
    dens: tuple[tuple[LinearForm, int], ...]

    def scaled(self, c) -> "RatExpTerm":
        return RatExpTerm(self.num_vars, self.numerator * Fraction(c), self.phase, self.dens)

    def signature(self):
        return (self.phase, self.dens)

    def derivative(self, var: int) -> list["RatExpTerm"]:
        """d/dx_var, as a list of terms in the same class."""
        out = []
        poly_part = self.numerator.diff(var) + self.numerator * self.phase[var]
        if not poly_part.is_zero():
            out.append(RatExpTerm(self.num_vars, poly_part, self.phase, self.dens))
        for idx, (form, mult) in enumerate(self.dens):
            a = form[var]
            if a == 0:
                continue
            bumped = list(self.dens)
            bumped[idx] = (form, mult + 1)
            out.append(RatExpTerm(self.num_vars, self.numerator * (-mult * a),
                                  self.phase, tuple(bumped)))
        return out

    def substitute_var(self, var: int, replacement_cov: Vec) -> "RatExpTerm":
        """Set x_var := <replacement_cov, X> (a linear form in the other
        variables); used to evaluate at a pole location."""
        assert replacement_cov[var] == 0
        repl = TruncatedSeries.linear_form(replacement_cov)
        num = self.numerator.substitute_var(var, repl)
        phase = list(self.phase)
        p = phase[var]
        phase[var] = Fraction(0)
        for j, c in enumerate(replacement_cov):
            phase[j] += p * c
        dens = []
        for form, mult in self.dens:
            a = form[var]
            if a == 0:
                dens.append((form, mult))
                continue
            evaluated = tuple(
                (0 if j == var else form[j] + a * replacement_cov[j])
                for j in range(self.num_vars))
            if all(c == 0 for c in evaluated):
                raise GenericityError("pole locations collide after substitution")
            dens.append((evaluated, mult))
        return make_term(self.num_vars, num, tuple(phase), dens)


def make_term(num_vars: int, numerator: TruncatedSeries, phase, dens) -> RatExpTerm:
    """Build a term in canonical form (normalized, merged denominators)."""
    phase = vec(phase)
    scale = Fraction(1)
    merged: dict[LinearForm, int] = {}
    for form, mult in dens:
        canon, scalar = primitive_covector(vec(form))
        scale *= scalar ** mult
        merged[canon] = merged.get(canon, 0) + mult
    numerator = numerator.as_polynomial() * (1 / scale)
    return RatExpTerm(num_vars, numerator,
                      phase, tuple(sorted(merged.items())))


def merge_terms(terms: list[RatExpTerm]) -> list[RatExpTerm]:
    """Combine terms sharing (phase, denominators); drop zero numerators."""
    buckets: dict = {}
    order: list = []
    for t in terms:
        key = t.signature()
        if key in buckets:
            buckets[key] = RatExpTerm(t.num_vars, buckets[key].numerator + t.numerator,
                                      t.phase, t.dens)
        else:
            buckets[key] = t
            order.append(key)
    return [buckets[k] for k in order if not buckets[k].numerator.is_zero()]


def _residue_at_pole(term: RatExpTerm, var: int, pole_index: int) -> list[RatExpTerm]:
    """Residue of `term` in x_var at the pole of the given denominator form,
    via (1/(m-1)!) d^{m-1}/dz^{m-1} [(z-b)^m f] evaluated at z = b."""
    form, mult = term.dens[pole_index]
    a = form[var]
    rest = term.dens[:pole_index] + term.dens[pole_index + 1:]
    # (z-b)^mult * f  =  numerator e^{..} / (a^mult * rest)
    base = RatExpTerm(term.num_vars, term.numerator * (Fraction(1) / a**mult),
                      term.phase, rest)
    work = [base]
    for _ in range(mult - 1):
        nxt: list[RatExpTerm] = []
        for t in work:
            nxt.extend(t.derivative(var))
        work = merge_terms(nxt)
    pole_cov = tuple(Fraction(0) if j == var else -form[j] / a
                     for j in range(term.num_vars))
    out = [t.scaled(Fraction(1, factorial(mult - 1))).substitute_var(var, pole_cov)
           for t in work]
    return out


def res_plus_1d(terms: list[RatExpTerm], var: int) -> list[RatExpTerm]:
    """Residue-sum over the distinguished variable, by the sign rule.

    Returns a sum of terms in the remaining variables (the distinguished
    coordinate is zeroed everywhere).
    """
    out: list[RatExpTerm] = []
    for term in merge_terms(terms):
        p = term.phase[var]
        active = [i for i, (form, _) in enumerate(term.dens) if form[var] != 0]
        if p < 0:
            continue
        if p == 0:
            den_deg = sum(term.dens[i][1] for i in active)
            num_deg = term.numerator.degree_in(var) if not term.numerator.is_zero() else 0
            if num_deg <= den_deg - 2:
                continue
            raise ConvergenceError(
                "zero-phase term decays too slowly (numerator degree %d, denominator %d)"
                % (num_deg, den_deg))
        for i in active:
            out.extend(_residue_at_pole(term, var, i))
    return merge_terms(out)


@dataclass(frozen=True)
class Cone:
    """The chamber {X : beta_i(X) > 0} cut out by sign-adjusted weights."""

    weights: tuple[LinearForm, ...]
    flips: tuple[bool, ...]
    xi: Vec

    def contains(self, v: Vec) -> bool:
        return all(sum(b * x for b, x in zip(form, v)) > 0 for form in self.weights)


def build_cone(weights, xi) -> Cone:
    """Flip each weight so it pairs positively with xi; error on a zero
    pairing (xi fails to be generic)."""
    xi = vec(xi)
    flipped = []
    flips = []
    for w in weights:
        w = vec(w)
        val = sum(a * b for a, b in zip(w, xi))
        if val == 0:
            raise GenericityError("xi pairs to zero with weight %s" % (w,))
        flips.append(val < 0)
        flipped.append(tuple(-c for c in w) if val < 0 else w)
    return Cone(weights=tuple(flipped), flips=tuple(flips), xi=xi)


def _default_coords(cone: Cone, n: int) -> Mat:
    """Basis whose last vector is xi (interior to the cone), completed by
    standard basis vectors; columns are the basis vectors."""
    from itertools import combinations

    std = [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
    for combo in combinations(range(n), n - 1):
        cols = [std[j] for j in combo] + [cone.xi]
        mat = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
        if mat_det(mat) != 0:
            return mat
    raise GenericityError("could not complete xi to a basis")  # pragma: no cover


def _rational_rotation(rng: random.Random, size: int) -> Mat:
    """Exact rational rotation from a few Givens factors with Pythagorean
    cosine/sine pairs."""
    rows = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    pairs = [(i, j) for i in range(size) for j in range(i + 1, size)]
    for (i, j) in pairs:
        m = rng.randrange(2, 8)
        nn = rng.randrange(1, m)
        c = Fraction(m * m - nn * nn, m * m + nn * nn)
        s = Fraction(2 * m * nn, m * m + nn * nn)
        for row in rows:
            row[i], row[j] = c * row[i] - s * row[j], s * row[i] + c * row[j]
    return tuple(tuple(r) for r in rows)


def _perturbed_coords(base: Mat, attempt: int, seed: int) -> Mat:
    """Deterministic pseudorandom change of the first n-1 basis vectors,
    keeping the last (cone) vector fixed: rotate among them and shear each
    by a small multiple of the cone vector."""
    n = len(base)
    if n == 1 or attempt == 0:
        return base
    rng = random.Random((seed * 1000003 + attempt) & 0x7FFFFFFF)
    cols = [tuple(base[i][j] for i in range(n)) for j in range(n)]
    head, xi_col = cols[:-1], cols[-1]
    if n > 2:
        rot = _rational_rotation(rng, n - 1)
        head = [tuple(sum(rot[a][b] * head[b][i] for b in range(n - 1)) for i in range(n))
                for a in range(n - 1)]
    sheared = []
    for c in head:
        t = Fraction(rng.randrange(1, 12), rng.randrange(13, 29))
        sheared.append(tuple(ci + t * xi for ci, xi in zip(c, xi_col)))
    cols = sheared + [xi_col]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def _transform_terms(terms: list[RatExpTerm], coords: Mat) -> list[RatExpTerm]:
    """Rewrite terms in the coordinates X = V Y (V = coords, columns are
    the basis vectors): covectors pull back by V, numerators by linear
    substitution."""
    n = len(coords)
    out = []
    for t in terms:
        phase = tuple(sum(t.phase[i] * coords[i][j] for i in range(n)) for j in range(n))
        dens = []
        for form, mult in t.dens:
            new_form = tuple(sum(form[i] * coords[i][j] for i in range(n)) for j in range(n))
            dens.append((new_form, mult))
        num = t.numerator.substitute_linear(coords)
        out.append(make_term(n, num, phase, dens))
    return out


def res_cone(terms: list[RatExpTerm], cone: Cone, coords: Mat | None = None, *,
             seed: int = DEFAULT_SEED, retries: int = DEFAULT_RETRIES) -> tuple[Fraction, int]:
    """Iterated residue of a sum of terms over the cone.

    Applies the one-variable residue innermost in the last coordinate,
    then outward, and multiplies by the Jacobian |det coords| so the
    result does not depend on the admissible coordinate choice.  On a
    genericity failure the first n-1 coordinate vectors are re-drawn
    deterministically from the seed, up to `retries` times.

    Returns (value, attempts_used).
    """
    if not terms:
        return Fraction(0), 0
    n = terms[0].num_vars
    base = coords if coords is not None else _default_coords(cone, n)
    if len(base) != n:
        raise ValueError("coordinate matrix has wrong size")
    last = tuple(base[i][n - 1] for i in range(n))
    if not cone.contains(last):
        raise ValueError("last coordinate vector must lie inside the cone")
    failure: Exception | None = None
    for attempt in range(retries + 1):
        frame = _perturbed_coords(base, attempt, seed)
        if mat_det(frame) == 0:  # pragma: no cover - shears keep det nonzero
            continue
        try:
            work = _transform_terms(terms, frame)
            for var in range(n - 1, -1, -1):
                work = res_plus_1d(work, var)
            total = Fraction(0)
            for t in work:
                assert not t.dens and all(c == 0 for c in t.phase)
                total += t.numerator.constant_term()
            jac = mat_det(frame)
            return total * abs(jac), attempt
        except (ConvergenceError, GenericityError) as exc:
            failure = exc
            if n == 1:
                break
    raise GenericityError(
        "residue genericity exhausted after %d attempts: %s" % (retries + 1, failure))
