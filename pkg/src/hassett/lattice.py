"""The ambient rank-23 lattice, its vectors, sublattices, and short vectors.

The ambient lattice is the orthogonal direct sum

    E8 (+) E8 (+) U (+) U (+) I3

in that fixed coordinate order, where E8 is the even unimodular rank-8 root
lattice, U is the hyperbolic plane with Gram [[0,1],[1,0]], and I3 is the
standard odd unimodular rank-3 lattice diag(1,1,1).  The distinguished class
``h2`` (the square of the hyperplane class of a cubic fourfold) sits in the
I3 block with coordinates (1,1,1) and has norm 3.

The two generators ``a1``, ``a2`` of the hexagonal plane A2 inside the
orthogonal complement of ``h2`` in I3 are pinned to (1,-1,0) and (0,-1,1).
Every integer triple with zero coordinate sum and norm 2 is one of the six
roots of this plane; the chosen pair realizes the Gram [[2,1],[1,2]].

Saturation (the quotient of the ambient lattice by a sublattice being
torsion-free) is detected through Smith invariants of the 23 x k coordinate
matrix, and short vectors are enumerated exactly with rational LDL bounds.
No floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (
    IntMatrix,
    determinant,
    integer_rank,
    invariant_factors,
    is_positive_definite,
    quadratic_form,
    solve_integer,
)

RANK = 23

E8_GRAM = IntMatrix(
    [
        [2, -1, 0, 0, 0, 0, 0, 0],
        [-1, 2, -1, 0, 0, 0, 0, 0],
        [0, -1, 2, -1, -1, 0, 0, 0],
        [0, 0, -1, 2, 0, 0, 0, 0],
        [0, 0, -1, 0, 2, -1, 0, 0],
        [0, 0, 0, 0, -1, 2, -1, 0],
        [0, 0, 0, 0, 0, -1, 2, -1],
        [0, 0, 0, 0, 0, 0, -1, 2],
    ]
)

U_GRAM = IntMatrix([[0, 1], [1, 0]])

I3_GRAM = IntMatrix.identity(3)

AMBIENT_GRAM = IntMatrix.block_diagonal([E8_GRAM, E8_GRAM, U_GRAM, U_GRAM, I3_GRAM])

# Edges of the E8 diagram in 1-based node labels, read off E8_GRAM.
E8_EDGES = frozenset({(1, 2), (2, 3), (3, 4), (3, 5), (5, 6), (6, 7), (7, 8)})

_BLOCK_OFFSETS = {"E8_1": 0, "E8_2": 8, "U1": 16, "U2": 18, "I3": 20}

BASIS_LABELS = tuple(
    [f"t1_{i}" for i in range(1, 9)]
    + [f"t2_{i}" for i in range(1, 9)]
    + ["e1_1", "e1_2", "e2_1", "e2_2"]
    + ["i3_1", "i3_2", "i3_3"]
)


@dataclass(frozen=True)
class AmbientVector:
    """Element of the ambient lattice in the fixed 23-coordinate basis."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        if len(self.coords) != RANK:
            raise ValueError(f"ambient vectors have {RANK} coordinates")

    def __add__(self, other: "AmbientVector") -> "AmbientVector":
        return AmbientVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "AmbientVector") -> "AmbientVector":
        return AmbientVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "AmbientVector":
        return AmbientVector(tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> "AmbientVector":
        return AmbientVector(tuple(k * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def i3_part(self) -> tuple[int, int, int]:
        off = _BLOCK_OFFSETS["I3"]
        return self.coords[off], self.coords[off + 1], self.coords[off + 2]

    def __repr__(self) -> str:
        named = [f"{c}*{l}" for c, l in zip(self.coords, BASIS_LABELS) if c != 0]
        return "AmbientVector(" + (" + ".join(named) if named else "0") + ")"


def zero_vector() -> AmbientVector:
    return AmbientVector((0,) * RANK)


def _unit(index: int) -> AmbientVector:
    coords = [0] * RANK
    coords[index] = 1
    return AmbientVector(tuple(coords))


def t_vec(copy: int, i: int) -> AmbientVector:
    """Basis vector t^copy_i of one of the two E8 blocks (copy in {1,2}, i in 1..8)."""
    if copy not in (1, 2) or not 1 <= i <= 8:
        raise ValueError("t_vec expects copy in {1,2} and i in 1..8")
    return _unit(_BLOCK_OFFSETS[f"E8_{copy}"] + i - 1)


def e_vec(copy: int, i: int) -> AmbientVector:
    """Basis vector e^copy_i of one of the two hyperbolic planes (i in {1,2})."""
    if copy not in (1, 2) or i not in (1, 2):
        raise ValueError("e_vec expects copy in {1,2} and i in {1,2}")
    return _unit(_BLOCK_OFFSETS[f"U{copy}"] + i - 1)


def i3_unit(i: int) -> AmbientVector:
    """Unit vector of the I3 block (i in 1..3)."""
    if i not in (1, 2, 3):
        raise ValueError("i3_unit expects i in 1..3")
    return _unit(_BLOCK_OFFSETS["I3"] + i - 1)


def i3_vector(x: int, y: int, z: int) -> AmbientVector:
    """Vector (x, y, z) supported in the I3 block."""
    coords = [0] * RANK
    coords[20], coords[21], coords[22] = int(x), int(y), int(z)
    return AmbientVector(tuple(coords))


H_SQUARED = i3_vector(1, 1, 1)

A1 = i3_vector(1, -1, 0)
A2 = i3_vector(0, -1, 1)


def inner_product(u: AmbientVector, v: AmbientVector) -> int:
    """Bilinear form of the ambient lattice, evaluated blockwise."""
    uc, vc = u.coords, v.coords
    total = 0
    for base in (0, 8):
        ub, vb = uc[base : base + 8], vc[base : base + 8]
        if any(ub) and any(vb):
            for i in range(8):
                row = E8_GRAM[i]
                if ub[i]:
                    total += ub[i] * sum(row[j] * vb[j] for j in range(8) if vb[j])
    total += uc[16] * vc[17] + uc[17] * vc[16]
    total += uc[18] * vc[19] + uc[19] * vc[18]
    total += uc[20] * vc[20] + uc[21] * vc[21] + uc[22] * vc[22]
    return total


def norm(v: AmbientVector) -> int:
    return inner_product(v, v)


def gram_of(basis: Sequence[AmbientVector]) -> IntMatrix:
    """Symmetric matrix of pairwise inner products of the given vectors."""
    if not basis:
        raise ValueError("gram_of needs at least one vector")
    k = len(basis)
    g = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i, k):
            g[i][j] = g[j][i] = inner_product(basis[i], basis[j])
    return IntMatrix(g)


def coordinate_matrix(basis: Sequence[AmbientVector]) -> IntMatrix:
    """23 x k matrix whose columns are the coordinates of the given vectors."""
    return IntMatrix.from_columns([v.coords for v in basis])


@dataclass(frozen=True)
class AmbientLattice:
    """The fixed ambient lattice: rank, Gram matrix, and basis labels."""

    rank: int
    gram: IntMatrix
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        if determinant(self.gram) != 1:
            raise ValueError("ambient Gram must be unimodular")


AMBIENT = AmbientLattice(rank=RANK, gram=AMBIENT_GRAM, basis_labels=BASIS_LABELS)


@dataclass(frozen=True)
class A2Embedding:
    """A hexagonal-plane pair inside the h2-orthogonal part of the I3 block."""

    a1: AmbientVector = A1
    a2: AmbientVector = A2

    def __post_init__(self):
        ok = (
            inner_product(self.a1, self.a1) == 2
            and inner_product(self.a2, self.a2) == 2
            and inner_product(self.a1, self.a2) == 1
            and inner_product(self.a1, H_SQUARED) == 0
            and inner_product(self.a2, H_SQUARED) == 0
        )
        if not ok:
            raise ValueError("not a valid A2 pair orthogonal to h2")


DEFAULT_A2 = A2Embedding()


class Sublattice:
    """Ordered independent vectors spanning a sublattice, with cached Gram."""

    __slots__ = ("basis", "gram")

    def __init__(self, basis: Iterable[AmbientVector]):
        vectors = tuple(basis)
        if not vectors:
            raise ValueError("sublattice needs at least one basis vector")
        coords = coordinate_matrix(vectors)
        if integer_rank(coords) != len(vectors):
            raise ValueError("basis vectors are linearly dependent")
        self.basis = vectors
        self.gram = gram_of(vectors)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self) -> IntMatrix:
        return coordinate_matrix(self.basis)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Sublattice) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash(self.basis)

    def __repr__(self) -> str:
        return f"Sublattice(rank={self.rank})"


class Labelling:
    """Rank-2 sublattice spanned by h2 and one more vector.

    Its discriminant 3*(v.v) - (h2.v)^2 is the determinant of the Gram
    [[3, h2.v], [h2.v, v.v]].
    """

    __slots__ = ("sub", "discriminant")

    def __init__(self, v: AmbientVector):
        self.sub = Sublattice((H_SQUARED, v))
        hv = inner_product(H_SQUARED, v)
        self.discriminant = 3 * inner_product(v, v) - hv * hv

    @property
    def second(self) -> AmbientVector:
        return self.sub.basis[1]

    def __repr__(self) -> str:
        return f"Labelling(discriminant={self.discriminant})"


def is_saturated(m: Sublattice) -> bool:
    """Whether the ambient quotient by ``m`` is torsion-free.

    Equivalent to every Smith invariant of the 23 x k coordinate matrix
    being 1, i.e. m equals the intersection of its rational span with the
    ambient lattice.
    """
    factors = invariant_factors(m.coordinates())
    return len(factors) == m.rank and all(f == 1 for f in factors)


def contains(m: Sublattice, v: AmbientVector) -> bool:
    """Whether ``v`` is an integer combination of the basis of ``m``."""
    return solve_integer(m.coordinates(), v.coords) is not None


def member_coordinates(m: Sublattice, v: AmbientVector) -> tuple[int, ...] | None:
    """Coordinates of ``v`` in the basis of ``m``, or None if not a member."""
    return solve_integer(m.coordinates(), v.coords)


def saturation_in(k: Sublattice, m: Sublattice) -> bool:
    """Whether ``k`` is saturated inside ``m``.

    Every basis vector of ``k`` must lie in ``m``; a violation is an error,
    not a False.
    """
    columns = []
    for v in k.basis:
        x = member_coordinates(m, v)
        if x is None:
            raise ValueError("saturation_in: first argument is not contained in second")
        columns.append(x)
    factors = invariant_factors(IntMatrix.from_columns(columns))
    return len(factors) == k.rank and all(f == 1 for f in factors)


def _ldl(g: IntMatrix) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Decompose positive definite ``g`` as U^T D U with U unit upper triangular."""
    n = g.nrows
    a = [[Fraction(x) for x in row] for row in g.rows]
    d: list[Fraction] = [Fraction(0)] * n
    u = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = a[i][i]
        u[i][i] = Fraction(1)
        for j in range(i + 1, n):
            u[i][j] = a[i][j] / d[i]
        for r in range(i + 1, n):
            for c in range(r, n):
                a[r][c] -= a[i][r] * a[i][c] / d[i]
                a[c][r] = a[r][c]
    return d, u


def _floor_sqrt(q: Fraction) -> int:
    """Largest integer s with s*s <= q, for q >= 0."""
    if q < 0:
        raise ValueError("negative radicand")
    num, den = q.numerator, q.denominator
    return math.isqrt(num * den) // den


def _canonical(x: Sequence[int]) -> tuple[int, ...]:
    for c in x:
        if c != 0:
            return tuple(x) if c > 0 else tuple(-a for a in x)
    return tuple(x)


def short_vectors(g: IntMatrix, c: int) -> list[tuple[int, ...]]:
    """All nonzero x with x^T g x <= c, one representative per +- pair.

    Representatives have a positive first nonzero coordinate and the list is
    sorted lexicographically.  Enumeration is exact branch-and-bound on the
    rational LDL decomposition; an indefinite input is rejected.
    """
    if c < 0:
        raise ValueError("short_vectors needs a nonnegative bound")
    if not is_positive_definite(g):
        raise ValueError("short_vectors requires a positive definite Gram matrix")
    n = g.nrows
    d, u = _ldl(g)
    bound = Fraction(c)
    found: set[tuple[int, ...]] = set()
    x = [0] * n

    def descend(i: int, remaining: Fraction) -> None:
        # remaining = c - sum over levels > i of d_k (x_k + offset_k)^2
        offset = sum((u[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        radius = _floor_sqrt(remaining / d[i])
        lo = math.floor(-offset) - radius - 1
        hi = math.ceil(-offset) + radius + 1
        for xi in range(lo, hi + 1):
            term = d[i] * (xi + offset) ** 2
            if term > remaining:
                continue
            x[i] = xi
            if i == 0:
                if any(x):
                    found.add(_canonical(x))
            else:
                descend(i - 1, remaining - term)
        x[i] = 0

    descend(n - 1, bound)
    return sorted(found)


def minimum(g: IntMatrix) -> int:
    """Least nonzero value of a positive definite integral form."""
    if not is_positive_definite(g):
        raise ValueError("minimum requires a positive definite Gram matrix")
    c = 1
    while True:
        vs = short_vectors(g, c)
        if vs:
            return min(quadratic_form(g, v) for v in vs)
        c += 1
