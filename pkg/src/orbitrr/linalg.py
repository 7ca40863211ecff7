"""Small exact-rational linear algebra helpers on tuples of Fractions.

Everything here works on immutable tuples so results can live inside
frozen dataclasses and be hashed/cached.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def vec(entries) -> Vec:
    return tuple(Fraction(e) for e in entries)


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_scale(c, v: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in v)


def vec_dot(u: Vec, v: Vec) -> Fraction:
    return sum((a * b for a, b in zip(u, v, strict=True)), Fraction(0))


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(vec_dot(row, v) for row in m)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = tuple(zip(*b))
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def identity(n: int) -> Mat:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_det(m: Mat) -> Fraction:
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(m)
    rows = [list(r) for r in m]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col]:
                f = rows[r][col] * inv
                for c in range(col, n):
                    rows[r][c] -= f * rows[col][c]
    return det


def mat_inv(m: Mat) -> Mat:
    """Exact inverse; raises ZeroDivisionError on singular input."""
    n = len(m)
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)


def solve_exact(a: Mat, b: list[Vec]) -> list[Vec] | None:
    """Solve a (possibly non-square, possibly inconsistent) system a·x = b.

    `b` is a list of right-hand-side vectors handled simultaneously.
    Returns one exact solution per rhs (free variables set to 0), or None
    when any rhs is inconsistent.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    nrhs = len(b)
    aug = [list(a[i]) + [b[k][i] for k in range(nrhs)] for i in range(nrows)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if any(aug[i][ncols + k] != 0 for k in range(nrhs)):
            return None
    out = []
    for k in range(nrhs):
        x = [Fraction(0)] * ncols
        for i, c in enumerate(pivots):
            x[c] = aug[i][ncols + k]
        out.append(tuple(x))
    return out


def kernel_basis(a: Mat) -> list[Vec]:
    """Basis of the right kernel of `a`, via reduced row echelon form."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    rows = [list(r) for r in a]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][f]
        basis.append(tuple(v))
    return basis


def primitive_covector(form: Vec) -> tuple[Vec, Fraction]:
    """Scale a nonzero rational covector to coprime integers with positive
    leading entry. Returns (canonical form, scalar) with form = scalar·canonical.
    """
    denom_lcm = 1
    for e in form:
        denom_lcm = denom_lcm * e.denominator // gcd(denom_lcm, e.denominator)
    ints = [int(e * denom_lcm) for e in form]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero covector has no canonical form")
    lead = next(x for x in ints if x != 0)
    sign = 1 if lead > 0 else -1
    canon = tuple(Fraction(sign * x, g) for x in ints)
    scalar = Fraction(sign * g, denom_lcm)
    return canon, scalar
