"""Exact root-system and Weyl-group data for the simple compact groups of
rank at most 4 (families A, B, C, D and G2).

All vectors are coordinate tuples in the simple-root basis, with the
invariant inner product given by the symmetrized Cartan matrix normalized
so that long roots have squared length 2.  In this basis every simple
reflection is an integer matrix, so the whole Weyl group acts by integer
matrices and all pairings are exact rationals.

t is identified with t* through the invariant form: the integer-lattice
basis (the simple coroots, simply connected convention) is stored as a
tuple of covectors, and ``dynkin(v)`` gives the pairings of ``v`` against
it, i.e. the Dynkin labels when ``v`` is a weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import ConfigurationError
from .linalg import Mat, Vec, identity, mat_det, mat_inv, mat_mul, mat_vec, vec, vec_add, vec_dot

SUPPORTED = {
    "A": (1, 2, 3, 4),
    "B": (2, 3, 4),
    "C": (2, 3, 4),
    "D": (4,),
    "G": (2,),
}


def _cartan_and_lengths(family: str, rank: int) -> tuple[Mat, Vec]:
    """Cartan matrix A[i][j] = <alpha_i, alpha_j_vee> and the half squared
    lengths d_i of the simple roots (long roots normalized to length^2 = 2).
    """
    a = [[2 * int(i == j) for j in range(rank)] for i in range(rank)]
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    d = [Fraction(1)] * rank
    if family == "B":
        # last simple root is short
        a[rank - 2][rank - 1] = -2
        d[rank - 1] = Fraction(1, 2)
    elif family == "C":
        # last simple root is long, the others short
        a[rank - 1][rank - 2] = -2
        d = [Fraction(1, 2)] * (rank - 1) + [Fraction(1)]
    elif family == "D":
        # fork: detach the chain end and attach it to the third-to-last node
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    elif family == "G":
        a[0][1], a[1][0] = -1, -3
        d = [Fraction(1, 3), Fraction(1)]
    mat = tuple(tuple(Fraction(x) for x in row) for row in a)
    return mat, tuple(d)


def positive_root_count(family: str, rank: int) -> int:
    return {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "C": rank * rank,
        "D": rank * (rank - 1),
        "G": 6,
    }[family]


def weyl_order(family: str, rank: int) -> int:
    return {
        "A": factorial(rank + 1),
        "B": 2**rank * factorial(rank),
        "C": 2**rank * factorial(rank),
        "D": 2 ** (rank - 1) * factorial(rank),
        "G": 12,
    }[family]


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element: reduced word, integer matrix in the simple-root
    basis, length, and sign = (-1)^length = det(matrix)."""

    word: tuple[int, ...]
    matrix: Mat
    length: int
    sign: int

    def act(self, v: Vec) -> Vec:
        return mat_vec(self.matrix, v)


@dataclass(frozen=True)
class RootSystem:
    label: str
    family: str
    rank: int
    cartan: Mat
    d: Vec
    gram: Mat
    simple_roots: tuple[Vec, ...]
    positive_roots: tuple[Vec, ...]
    fundamental_weights: tuple[Vec, ...]
    rho: Vec
    integer_lattice_basis: tuple[Vec, ...]

    def pairing(self, u: Vec, v: Vec) -> Fraction:
        """Invariant bilinear form (long roots have squared length 2)."""
        if len(u) != self.rank or len(v) != self.rank:
            raise ValueError("dimension mismatch with rank %d" % self.rank)
        return vec_dot(u, mat_vec(self.gram, v))

    def coroot(self, root: Vec) -> Vec:
        n = self.pairing(root, root)
        return tuple(2 * c / n for c in root)

    def dynkin(self, v: Vec) -> Vec:
        """Pairings of v against the simple coroots (Dynkin labels)."""
        return tuple(self.pairing(v, u) for u in self.integer_lattice_basis)

    def weight_vector(self, labels) -> Vec:
        """The weight with the given Dynkin labels, in simple-root coordinates."""
        labels = vec(labels)
        if len(labels) != self.rank:
            raise ValueError("expected %d Dynkin labels" % self.rank)
        out = (Fraction(0),) * self.rank
        for c, w in zip(labels, self.fundamental_weights):
            out = vec_add(out, tuple(c * x for x in w))
        return out

    def is_regular(self, v: Vec) -> bool:
        return all(self.pairing(g, v) != 0 for g in self.positive_roots)

    def simple_reflection_matrix(self, i: int) -> Mat:
        rows = []
        for k in range(self.rank):
            if k != i:
                rows.append(tuple(Fraction(int(k == j)) for j in range(self.rank)))
            else:
                rows.append(tuple(Fraction(int(i == j)) - self.cartan[j][i] for j in range(self.rank)))
        return tuple(rows)

    def coroot_coordinates(self, v: Vec) -> Vec:
        """Coordinates of v in the simple-coroot basis."""
        return tuple(c * di for c, di in zip(v, self.d))

    def coroot_matrix(self, w: WeylElement) -> Mat:
        """Matrix of w acting on coroot-basis coordinates (integer entries)."""
        cols = []
        for j in range(self.rank):
            img = w.act(self.integer_lattice_basis[j])
            cols.append(self.coroot_coordinates(img))
        return tuple(tuple(cols[j][k] for j in range(self.rank)) for k in range(self.rank))


def build_root_system(family: str, rank: int) -> RootSystem:
    """Construct the root system of the given Cartan type.

    Positive roots are generated by closure: starting from the simple
    roots, apply simple reflections and keep every image that stays in
    the positive cone, until nothing new appears.
    """
    return _build_cached(family.upper(), int(rank))


@lru_cache(maxsize=None)
def _build_cached(family: str, rank: int) -> RootSystem:
    if family not in SUPPORTED or rank not in SUPPORTED[family]:
        raise ConfigurationError("unsupported Cartan type %s%s" % (family, rank))
    cartan, d = _cartan_and_lengths(family, rank)
    gram = tuple(tuple(cartan[i][j] * d[j] for j in range(rank)) for i in range(rank))
    simple = tuple(tuple(Fraction(int(i == j)) for j in range(rank)) for i in range(rank))

    refl = []
    for i in range(rank):
        rows = []
        for k in range(rank):
            if k != i:
                rows.append(tuple(Fraction(int(k == j)) for j in range(rank)))
            else:
                rows.append(tuple(Fraction(int(i == j)) - cartan[j][i] for j in range(rank)))
        refl.append(tuple(rows))

    positive = set(simple)
    frontier = set(simple)
    while frontier:
        new = set()
        for root in frontier:
            for s in refl:
                img = mat_vec(s, root)
                if img not in positive and all(c >= 0 for c in img):
                    new.add(img)
        positive |= new
        frontier = new
    pos = tuple(sorted(positive, key=lambda r: (sum(r), r)))
    if len(pos) != positive_root_count(family, rank):
        raise ConfigurationError(
            "positive-root closure produced %d roots for %s%d, expected %d"
            % (len(pos), family, rank, positive_root_count(family, rank))
        )

    inv = mat_inv(cartan)
    fw = tuple(tuple(inv[i][k] for k in range(rank)) for i in range(rank))
    rho = fw[0]
    for w in fw[1:]:
        rho = vec_add(rho, w)
    half_sum = tuple(sum(r[k] for r in pos) / 2 for k in range(rank))
    if rho != half_sum:
        raise ConfigurationError("rho mismatch for %s%d" % (family, rank))
    coroots = tuple(tuple(simple[i][k] / d[i] for k in range(rank)) for i in range(rank))
    return RootSystem(
        label="%s%d" % (family, rank),
        family=family,
        rank=rank,
        cartan=cartan,
        d=d,
        gram=gram,
        simple_roots=simple,
        positive_roots=pos,
        fundamental_weights=fw,
        rho=rho,
        integer_lattice_basis=coroots,
    )


def parse_group_label(label: str) -> RootSystem:
    """Parse a label like "A2" or "G2" into a root system."""
    label = label.strip().upper()
    if len(label) < 2 or not label[0].isalpha():
        raise ConfigurationError("bad group label %r" % label)
    try:
        rank = int(label[1:])
    except ValueError as exc:
        raise ConfigurationError("bad group label %r" % label) from exc
    return build_root_system(label[0], rank)


@lru_cache(maxsize=None)
def enumerate_weyl_group(rs: RootSystem) -> tuple[WeylElement, ...]:
    """All Weyl group elements, by breadth-first closure over reduced words.

    Deduplication is by matrix; the returned order is deterministic,
    sorted by (length, word).
    """
    ident = WeylElement(word=(), matrix=identity(rs.rank), length=0, sign=1)
    refl = [rs.simple_reflection_matrix(i) for i in range(rs.rank)]
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in sorted(frontier, key=lambda e: e.word):
            for i in range(rs.rank):
                m = mat_mul(w.matrix, refl[i])
                if m not in seen:
                    elem = WeylElement(word=w.word + (i,), matrix=m, length=w.length + 1,
                                       sign=-w.sign)
                    seen[m] = elem
                    nxt.append(elem)
        frontier = nxt
    if len(seen) != weyl_order(rs.family, rs.rank):
        raise ConfigurationError(
            "Weyl closure found %d elements for %s, expected %d"
            % (len(seen), rs.label, weyl_order(rs.family, rs.rank))
        )
    for w in seen.values():
        if mat_det(w.matrix) != w.sign:
            raise ConfigurationError("sign/determinant mismatch in %s" % rs.label)
    return tuple(sorted(seen.values(), key=lambda e: (e.length, e.word)))


def weyl_act(w: WeylElement, v: Vec) -> Vec:
    """Apply a Weyl element to a vector in simple-root coordinates."""
    if len(v) != len(w.matrix):
        raise ValueError("dimension mismatch")
    return w.act(vec(v))


def longest_element(rs: RootSystem) -> WeylElement:
    return max(enumerate_weyl_group(rs), key=lambda w: w.length)
