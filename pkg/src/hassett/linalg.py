"""Exact integer and rational matrix kernel.

Everything in this module runs on arbitrary-precision Python integers (and
``fractions.Fraction`` where a division is unavoidable).  There is no floating
point anywhere: determinants use fraction-free Bareiss elimination, Smith and
Hermite normal forms use elementary unimodular operations with a
smallest-pivot strategy, and signatures come from exact symmetric elimination.

Conventions fixed here so results are reproducible byte for byte:

* Smith normal form diagonal entries are nonnegative and satisfy the
  divisibility chain ``d1 | d2 | ...``.
* Hermite normal form is column-style (``H = M @ T`` with ``T`` unimodular),
  pivots positive, entries left of a pivot reduced into ``[0, pivot)``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense integer matrix (row-major, arbitrary precision)."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def block_diagonal(cls, blocks: Sequence["IntMatrix"]) -> "IntMatrix":
        size = sum(b.nrows for b in blocks)
        out = [[0] * size for _ in range(size)]
        offset = 0
        for b in blocks:
            if b.nrows != b.ncols:
                raise ValueError("block_diagonal expects square blocks")
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[offset + i][offset + j] = b[i][j]
            offset += b.nrows
        return cls(out)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        if not columns:
            raise ValueError("need at least one column")
        nrows = len(columns[0])
        return cls([[col[i] for col in columns] for i in range(nrows)])

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return len(self._rows[0])

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self._rows[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self._rows)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows))

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        return all(
            self._rows[i][j] == self._rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().rows
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._rows]
        )

    def mul_vector(self, vec: Sequence[int]) -> tuple[int, ...]:
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch in matrix-vector product")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._rows)

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch in matrix difference")
        return IntMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self._rows, other._rows)
            ]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in row] for row in self._rows])

    def is_zero(self) -> bool:
        return all(all(a == 0 for a in row) for row in self._rows)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self._rows]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in row) for row in self._rows)
        return f"IntMatrix[{body}]"


def _require_symmetric(g: IntMatrix, op: str) -> None:
    if not g.is_symmetric():
        raise ValueError(f"{op} requires a symmetric matrix")


def determinant(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    n = m.nrows
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_rank(m: IntMatrix) -> int:
    """Rank over the rationals, computed fraction-free."""
    a = m.to_lists()
    nrows, ncols = m.nrows, m.ncols
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for i in range(rank + 1, nrows):
            if a[i][col] != 0:
                p, q = a[rank][col], a[i][col]
                a[i] = [p * x - q * y for x, y in zip(a[i], a[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _swap_rows(a: list[list[int]], u: list[list[int]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    u[i], u[j] = u[j], u[i]


def _swap_cols(a: list[list[int]], v: list[list[int]], i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]
    for row in v:
        row[i], row[j] = row[j], row[i]


def _add_row(a: list[list[int]], u: list[list[int]], dst: int, src: int, q: int) -> None:
    # row_dst += q * row_src
    a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
    u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]


def _add_col(a: list[list[int]], v: list[list[int]], dst: int, src: int, q: int) -> None:
    for row in a:
        row[dst] += q * row[src]
    for row in v:
        row[dst] += q * row[src]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return unimodular ``U``, diagonal ``D``, unimodular ``V`` with ``U m V = D``.

    Nonzero diagonal entries are positive and form a divisibility chain.
    """
    nrows, ncols = m.nrows, m.ncols
    a = m.to_lists()
    u = IntMatrix.identity(nrows).to_lists()
    v = IntMatrix.identity(ncols).to_lists()

    t = 0
    while t < min(nrows, ncols):
        # Smallest absolute nonzero entry of the trailing block becomes the pivot.
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            _swap_rows(a, u, t, pivot[0])
        if pivot[1] != t:
            _swap_cols(a, v, t, pivot[1])

        while True:
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            restart = False
            for i in range(nrows):
                if i == t or a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                _add_row(a, u, i, t, -q)
                if a[i][t] != 0:
                    _swap_rows(a, u, i, t)
                    restart = True
                    break
            if restart:
                continue
            for j in range(ncols):
                if j == t or a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                _add_col(a, v, j, t, -q)
                if a[t][j] != 0:
                    _swap_cols(a, v, j, t)
                    restart = True
                    break
            if restart:
                continue
            # Pivot must divide the rest of the trailing block for the chain.
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(a, u, t, offender, 1)
        t += 1

    return IntMatrix(u), IntMatrix(a), IntMatrix(v)


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero Smith normal form diagonal entries, in chain order."""
    _, d, _ = smith_normal_form(m)
    out = []
    for i in range(min(d.nrows, d.ncols)):
        if d[i][i] != 0:
            out.append(d[i][i])
    return tuple(out)


def hermite_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column-style Hermite form: ``H = m @ T`` with ``T`` unimodular."""
    nrows, ncols = m.nrows, m.ncols
    a = m.to_lists()
    t = IntMatrix.identity(ncols).to_lists()

    def col_swap(i: int, j: int) -> None:
        _swap_cols(a, t, i, j)

    def col_add(dst: int, src: int, q: int) -> None:
        _add_col(a, t, dst, src, q)

    def col_negate(j: int) -> None:
        for row in a:
            row[j] = -row[j]
        for row in t:
            row[j] = -row[j]

    pc = 0
    for r in range(nrows):
        if pc >= ncols:
            break
        active = [j for j in range(pc, ncols) if a[r][j] != 0]
        if not active:
            continue
        while True:
            active = [j for j in range(pc, ncols) if a[r][j] != 0]
            if len(active) == 1:
                if active[0] != pc:
                    col_swap(pc, active[0])
                break
            best = min(active, key=lambda j: abs(a[r][j]))
            if best != pc:
                col_swap(pc, best)
            for j in active:
                if j == pc or a[r][j] == 0:
                    continue
                col_add(j, pc, -(a[r][j] // a[r][pc]))
        if a[r][pc] < 0:
            col_negate(pc)
        for j in range(pc):
            q = a[r][j] // a[r][pc]
            if q:
                col_add(j, pc, -q)
        pc += 1

    return IntMatrix(a), IntMatrix(t)


def solve_integer(a: IntMatrix, b: Sequence[int]) -> tuple[int, ...] | None:
    """One integer solution ``x`` of ``a x = b``, or ``None`` if there is none."""
    if len(b) != a.nrows:
        raise ValueError("right-hand side length must match row count")
    u, d, v = smith_normal_form(a)
    c = u.mul_vector(tuple(int(x) for x in b))
    z = [0] * a.ncols
    for i in range(a.nrows):
        di = d[i][i] if i < min(a.nrows, a.ncols) else 0
        if di == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % di != 0:
                return None
            z[i] = c[i] // di
    x = v.mul_vector(z)
    assert a.mul_vector(x) == tuple(int(e) for e in b)
    return x


def inertia(g: IntMatrix) -> tuple[int, int, int]:
    """Signs of the eigenvalues of a symmetric matrix: (positive, negative, zero).

    Uses exact symmetric (congruence) elimination over the rationals, so the
    counts are Sylvester inertia, not a numerical estimate.
    """
    _require_symmetric(g, "inertia")
    n = g.nrows
    a = [[Fraction(x) for x in row] for row in g.rows]
    nplus = nminus = nzero = 0
    i = 0
    while i < n:
        if a[i][i] == 0:
            swap = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if swap is not None:
                a[i], a[swap] = a[swap], a[i]
                for row in a:
                    row[i], row[swap] = row[swap], row[i]
            else:
                pair = None
                for j in range(i, n):
                    for k in range(j + 1, n):
                        if a[j][k] != 0:
                            pair = (j, k)
                            break
                    if pair is not None:
                        break
                if pair is None:
                    nzero += n - i
                    break
                j, k = pair
                # Congruence by (row_j += row_k) creates a nonzero diagonal entry.
                a[j] = [x + y for x, y in zip(a[j], a[k])]
                for row in a:
                    row[j] = row[j] + row[k]
                continue
        pivot = a[i][i]
        for j in range(i + 1, n):
            if a[j][i] == 0:
                continue
            f = a[j][i] / pivot
            a[j] = [x - f * y for x, y in zip(a[j], a[i])]
            for row in a:
                row[j] = row[j] - f * row[i]
        if pivot > 0:
            nplus += 1
        else:
            nminus += 1
        i += 1
    return nplus, nminus, nzero


def is_positive_definite(g: IntMatrix) -> bool:
    """Exact Sylvester test: every leading principal minor is positive."""
    _require_symmetric(g, "is_positive_definite")
    n = g.nrows
    a = g.to_lists()
    prev = 1
    for k in range(n):
        if a[k][k] <= 0:
            return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return True


def rational_inverse(g: IntMatrix) -> tuple[tuple[Fraction, ...], ...]:
    """Exact inverse of a nonsingular matrix, entries in lowest terms."""
    if not g.is_square:
        raise ValueError("rational_inverse requires a square matrix")
    n = g.nrows
    a = [[Fraction(x) for x in row] for row in g.rows]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix has no inverse")
        a[col], a[pivot] = a[pivot], a[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        inv[col] = [x / p for x in inv[col]]
        for i in range(n):
            if i == col or a[i][col] == 0:
                continue
            f = a[i][col]
            a[i] = [x - f * y for x, y in zip(a[i], a[col])]
            inv[i] = [x - f * y for x, y in zip(inv[i], inv[col])]
    return tuple(tuple(row) for row in inv)


def quadratic_form(g: IntMatrix, x: Sequence[int]) -> int:
    """Value ``x^T g x`` of the integral form at an integer point."""
    gx = g.mul_vector(tuple(int(e) for e in x))
    return sum(a * b for a, b in zip(x, gx))
