"""Sparse multivariate polynomials and truncated power series over the
rationals.

One class covers both: ``trunc=None`` means an honest polynomial (no
degree cap, multiplication is exact), an integer ``trunc=N`` means a
power series known modulo total degree > N.  Coefficients are stored in
a dict keyed by exponent tuples; zero coefficients are never stored.

The flag-variety fiber integral also lives here: it is a pure identity
on antisymmetrized polynomials and is the self-check that exact division
by the product of positive roots is available.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import ExactDivisionError, InternalInconsistencyError
from .linalg import Mat, vec
from .roots import RootSystem, enumerate_weyl_group

Monomial = tuple[int, ...]


def _min_trunc(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class TruncatedSeries:
    """Exact sparse series/polynomial in ``num_vars`` variables."""

    __slots__ = ("num_vars", "trunc", "coeffs")

    def __init__(self, num_vars: int, coeffs=None, trunc: int | None = None):
        self.num_vars = num_vars
        self.trunc = trunc
        clean: dict[Monomial, Fraction] = {}
        for mono, c in (coeffs or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            if len(mono) != num_vars:
                raise ValueError("monomial arity mismatch")
            if trunc is not None and sum(mono) > trunc:
                continue
            clean[tuple(int(e) for e in mono)] = c
        self.coeffs = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def constant(cls, value, num_vars: int, trunc: int | None = None) -> "TruncatedSeries":
        return cls(num_vars, {(0,) * num_vars: Fraction(value)}, trunc)

    @classmethod
    def linear_form(cls, cov, trunc: int | None = None) -> "TruncatedSeries":
        cov = vec(cov)
        n = len(cov)
        coeffs = {}
        for i, c in enumerate(cov):
            mono = tuple(int(i == j) for j in range(n))
            coeffs[mono] = c
        return cls(n, coeffs, trunc)

    @classmethod
    def exp_linear(cls, cov, trunc: int) -> "TruncatedSeries":
        """exp of a linear form, truncated; small and frequent enough to
        deserve a direct construction."""
        return cls.linear_form(cov, trunc).exp()

    # ------------------------------------------------------------------
    # basic structure

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.num_vars == other.num_vars and self.trunc == other.trunc
                and self.coeffs == other.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def constant_term(self) -> Fraction:
        return self.coeffs.get((0,) * self.num_vars, Fraction(0))

    def max_degree(self) -> int:
        return max((sum(m) for m in self.coeffs), default=0)

    def min_degree(self) -> int:
        return min((sum(m) for m in self.coeffs), default=0)

    def homogeneous_part(self, degree: int) -> "TruncatedSeries":
        part = {m: c for m, c in self.coeffs.items() if sum(m) == degree}
        return TruncatedSeries(self.num_vars, part, self.trunc)

    def truncate(self, trunc: int | None) -> "TruncatedSeries":
        return TruncatedSeries(self.num_vars, self.coeffs, trunc)

    def as_polynomial(self) -> "TruncatedSeries":
        return TruncatedSeries(self.num_vars, self.coeffs, None)

    # ------------------------------------------------------------------
    # ring operations

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.num_vars, self.trunc)
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return TruncatedSeries(self.num_vars, out, _min_trunc(self.trunc, other.trunc))

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.num_vars, {m: -c for m, c in self.coeffs.items()}, self.trunc)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.constant(other, self.num_vars, self.trunc)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncatedSeries(self.num_vars, {m: c * v for m, v in self.coeffs.items()},
                                   self.trunc)
        if self.num_vars != other.num_vars:
            raise ValueError("variable count mismatch")
        trunc = _min_trunc(self.trunc, other.trunc)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.coeffs.items():
            d1 = sum(m1)
            for m2, c2 in other.coeffs.items():
                if trunc is not None and d1 + sum(m2) > trunc:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return TruncatedSeries(self.num_vars, out, trunc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = TruncatedSeries.constant(1, self.num_vars, self.trunc)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # ------------------------------------------------------------------
    # series-only operations

    def exp(self) -> "TruncatedSeries":
        if self.trunc is None:
            raise ValueError("exp needs a truncation degree")
        if self.constant_term() != 0:
            raise ValueError("exp requires zero constant term")
        result = TruncatedSeries.constant(1, self.num_vars, self.trunc)
        term = TruncatedSeries.constant(1, self.num_vars, self.trunc)
        for k in range(1, self.trunc + 1):
            term = term * self
            if term.is_zero():
                break
            result = result + term * Fraction(1, factorial(k))
        return result

    def inverse(self) -> "TruncatedSeries":
        c = self.constant_term()
        if c == 0:
            raise ValueError("cannot invert a series with zero constant term")
        if self.trunc is None:
            raise ValueError("inverse needs a truncation degree")
        # 1/s = (1/c) * sum t^k  with  t = 1 - s/c
        t = TruncatedSeries.constant(1, self.num_vars, self.trunc) - self * Fraction(1, c)
        result = TruncatedSeries.constant(1, self.num_vars, self.trunc)
        power = TruncatedSeries.constant(1, self.num_vars, self.trunc)
        for _ in range(self.trunc):
            power = power * t
            if power.is_zero():
                break
            result = result + power
        return result * Fraction(1, c)

    def divide_exact(self, den: "TruncatedSeries") -> "TruncatedSeries":
        """Exact division by a polynomial divisor.

        The quotient satisfies q * den = num through every representable
        degree.  A nonzero remainder (at any degree that the inputs
        determine) raises ExactDivisionError.
        """
        if den.is_zero():
            raise ExactDivisionError("division by zero polynomial")
        if self.num_vars != den.num_vars:
            raise ValueError("variable count mismatch")
        dmin = den.min_degree()
        lead = {m: c for m, c in den.coeffs.items() if sum(m) == dmin}
        n_cap = self.trunc if self.trunc is not None else self.max_degree()
        rem = dict(self.coeffs)
        quot: dict[Monomial, Fraction] = {}
        for deg in range(0, n_cap + 1):
            part = {m: c for m, c in rem.items() if sum(m) == deg}
            if not part:
                continue
            if deg < dmin:
                raise ExactDivisionError("numerator has terms below divisor degree")
            qpart = _divide_homogeneous(part, lead, self.num_vars)
            for mq, cq in qpart.items():
                quot[mq] = quot.get(mq, Fraction(0)) + cq
                for md, cd in den.coeffs.items():
                    m = tuple(a + b for a, b in zip(mq, md))
                    val = rem.get(m, Fraction(0)) - cq * cd
                    if val:
                        rem[m] = val
                    else:
                        rem.pop(m, None)
        if self.trunc is None and any(c for c in rem.values()):
            raise ExactDivisionError("nonzero remainder in exact division")
        if any(c for m, c in rem.items() if sum(m) <= n_cap):
            raise ExactDivisionError("nonzero remainder in exact division")
        qtrunc = None if self.trunc is None else self.trunc - dmin
        return TruncatedSeries(self.num_vars, quot, qtrunc)

    # ------------------------------------------------------------------
    # calculus / substitution helpers

    def diff(self, var: int) -> "TruncatedSeries":
        out = {}
        for m, c in self.coeffs.items():
            if m[var] == 0:
                continue
            m2 = list(m)
            m2[var] -= 1
            out[tuple(m2)] = c * m[var]
        trunc = None if self.trunc is None else self.trunc - 1
        return TruncatedSeries(self.num_vars, out, trunc)

    def degree_in(self, var: int) -> int:
        return max((m[var] for m in self.coeffs), default=0)

    def coefficients_in(self, var: int) -> dict[int, "TruncatedSeries"]:
        """Split into powers of one variable; values keep all variables,
        with the split variable's exponent set to zero."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for m, c in self.coeffs.items():
            k = m[var]
            m2 = list(m)
            m2[var] = 0
            buckets.setdefault(k, {})[tuple(m2)] = c
        return {k: TruncatedSeries(self.num_vars, d, None) for k, d in buckets.items()}

    def substitute_var(self, var: int, replacement: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute x_var := replacement (replacement must not involve x_var)."""
        if replacement.degree_in(var) > 0:
            raise ValueError("replacement may not involve the substituted variable")
        result = TruncatedSeries(self.num_vars, {}, self.trunc)
        powers: dict[int, TruncatedSeries] = {0: TruncatedSeries.constant(1, self.num_vars, self.trunc)}
        for k, part in sorted(self.coefficients_in(var).items()):
            if k not in powers:
                prev = max(powers)
                p = powers[prev]
                for _ in range(prev, k):
                    p = p * replacement
                powers[k] = p
            result = result + part.truncate(self.trunc) * powers[k]
        return result

    def substitute_linear(self, matrix: Mat) -> "TruncatedSeries":
        """Replace x_k by the linear form sum_i matrix[k][i] * x_i."""
        n = self.num_vars
        forms = [TruncatedSeries.linear_form(matrix[k], self.trunc) for k in range(n)]
        result = TruncatedSeries(n, {}, self.trunc)
        cache: dict[tuple[int, int], TruncatedSeries] = {}

        def form_power(k: int, e: int) -> TruncatedSeries:
            if e == 0:
                return TruncatedSeries.constant(1, n, self.trunc)
            if (k, e) not in cache:
                cache[(k, e)] = form_power(k, e - 1) * forms[k]
            return cache[(k, e)]

        for m, c in self.coeffs.items():
            term = TruncatedSeries.constant(c, n, self.trunc)
            for k, e in enumerate(m):
                if e:
                    term = term * form_power(k, e)
            result = result + term
        return result

    # ------------------------------------------------------------------
    # canonical text form

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for m in sorted(self.coeffs, key=lambda mo: (sum(mo), mo)):
            c = self.coeffs[m]
            factors = [str(c)]
            for i, e in enumerate(m):
                if e:
                    factors.append("x%d^%d" % (i + 1, e))
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    @classmethod
    def from_text(cls, text: str, num_vars: int, trunc: int | None = None) -> "TruncatedSeries":
        coeffs: dict[Monomial, Fraction] = {}
        text = text.strip()
        if text == "0":
            return cls(num_vars, {}, trunc)
        for term in text.split(" + "):
            factors = term.split(" * ")
            c = Fraction(factors[0])
            mono = [0] * num_vars
            for f in factors[1:]:
                name, e = f.split("^")
                mono[int(name[1:]) - 1] = int(e)
            mono = tuple(mono)
            coeffs[mono] = coeffs.get(mono, Fraction(0)) + c
        return cls(num_vars, coeffs, trunc)

    def __repr__(self):
        cap = "" if self.trunc is None else " + O(deg %d)" % (self.trunc + 1)
        return "<series %s%s>" % (self.to_text(), cap)


def _divide_homogeneous(part: dict[Monomial, Fraction], lead: dict[Monomial, Fraction],
                        num_vars: int) -> dict[Monomial, Fraction]:
    """Exact division of a homogeneous polynomial by a homogeneous divisor
    (single-divisor long division under lex order; any surviving remainder
    means the division is not exact)."""
    rem = dict(part)
    lead_mono = max(lead)
    lead_coeff = lead[lead_mono]
    quot: dict[Monomial, Fraction] = {}
    while rem:
        m = max(rem)
        if any(a < b for a, b in zip(m, lead_mono)):
            raise ExactDivisionError("homogeneous division has a remainder")
        mq = tuple(a - b for a, b in zip(m, lead_mono))
        cq = rem[m] / lead_coeff
        quot[mq] = quot.get(mq, Fraction(0)) + cq
        for md, cd in lead.items():
            mm = tuple(a + b for a, b in zip(mq, md))
            val = rem.get(mm, Fraction(0)) - cq * cd
            if val:
                rem[mm] = val
            else:
                rem.pop(mm, None)
    return quot


def positive_root_product(rs: RootSystem, trunc: int | None = None) -> TruncatedSeries:
    """The polynomial prod_{gamma>0} (gamma, X) in the coordinates dual to
    the integer-lattice basis."""
    out = TruncatedSeries.constant(1, rs.rank, trunc)
    for g in rs.positive_roots:
        out = out * TruncatedSeries.linear_form(rs.dynkin(g), trunc)
    return out


def flag_integral(rs: RootSystem, p: TruncatedSeries) -> Fraction:
    """Fiber integral over the flag variety of a polynomial in the line
    classes e_1..e_l, by localization.

    Restricting e_j at the fixed point w gives the linear form
    (w fundamental_weight_j, X); the alternating sum over the Weyl group is
    divisible by prod (gamma, X) exactly, and the constant term of the
    quotient is the integral.  Components of degree above the number of
    positive roots are rejected; lower components integrate to zero.
    """
    m = len(rs.positive_roots)
    if p.num_vars != rs.rank:
        raise ValueError("polynomial must be in rank-many variables")
    if p.max_degree() > m:
        raise ValueError("degree exceeds the number of positive roots")
    total = TruncatedSeries(rs.rank, {}, None)
    for w in enumerate_weyl_group(rs):
        matrix = tuple(rs.dynkin(w.act(fw)) for fw in rs.fundamental_weights)
        total = total + p.substitute_linear(matrix) * w.sign
    if total.is_zero():
        return Fraction(0)
    den = positive_root_product(rs)
    try:
        quotient = total.divide_exact(den)
    except ExactDivisionError as exc:
        raise InternalInconsistencyError(
            "antisymmetrized polynomial not divisible by the root product") from exc
    return quotient.constant_term()
