"""Exact integer linear algebra on immutable square matrices.

Determinants use Bareiss fraction-free elimination, signatures use
symmetric Gaussian elimination over rationals, and skew-symmetric
unimodular forms are brought to the standard symplectic shape by paired
integer row/column operations.  All values are immutable and every
operation is a pure function, so concurrent use is safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "IntMatrix",
    "det",
    "is_unimodular",
    "congruent",
    "standard_symplectic",
    "skew_standardize",
    "signature",
    "unimodular_inverse",
    "parse_matrix",
    "format_matrix",
]


@dataclass(frozen=True)
class IntMatrix:
    """A square matrix of arbitrary-precision integers.

    The 0x0 matrix is legal; its determinant is 1 by the empty-product
    convention.
    """

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        n = len(self.rows)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_size(other)
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_size(other)
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in row) for row in self.rows))

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_size(other)
        n = self.size
        cols = other.transpose().rows
        return IntMatrix(
            tuple(
                tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                for row in self.rows
            )
        )

    def _check_size(self, other: "IntMatrix") -> None:
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def is_symmetric(self) -> bool:
        return self.rows == self.transpose().rows

    def is_skew_symmetric(self) -> bool:
        return all(
            self.rows[i][j] == -self.rows[j][i]
            for i in range(self.size)
            for j in range(i, self.size)
        )

    def max_abs_entry(self) -> int:
        return max((abs(a) for row in self.rows for a in row), default=0)


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = m.size
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def is_unimodular(a: IntMatrix) -> bool:
    return det(a) in (1, -1)


def congruent(m: IntMatrix, a: IntMatrix) -> IntMatrix:
    """The congruence A * M * A^T for unimodular A."""
    if a.size != m.size:
        raise ValueError(f"size mismatch: matrix {m.size}, transform {a.size}")
    if not is_unimodular(a):
        raise ValueError("congruence transform must be unimodular")
    return a * m * a.transpose()


def standard_symplectic(g: int) -> IntMatrix:
    """The 2g x 2g block diagonal of [[0, 1], [-1, 0]] blocks."""
    if g < 0:
        raise ValueError("genus must be non-negative")
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for b in range(g):
        rows[2 * b][2 * b + 1] = 1
        rows[2 * b + 1][2 * b] = -1
    return IntMatrix.from_rows(rows)


def unimodular_inverse(a: IntMatrix) -> IntMatrix:
    """Exact integer inverse of a unimodular matrix, via the adjugate."""
    n = a.size
    d = det(a)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    if n == 0:
        return a
    rows = a.rows

    def minor_det(skip_i: int, skip_j: int) -> int:
        sub = [
            [rows[i][j] for j in range(n) if j != skip_j]
            for i in range(n)
            if i != skip_i
        ]
        return det(IntMatrix.from_rows(sub))

    adj = [
        [(-1) ** (i + j) * minor_det(j, i) for j in range(n)]
        for i in range(n)
    ]
    if d == -1:
        adj = [[-x for x in row] for row in adj]
    return IntMatrix.from_rows(adj)


def signature(q: IntMatrix) -> int:
    """Signature of a symmetric integer matrix, computed exactly.

    Symmetric Gaussian elimination over rationals: nonzero diagonal
    entries are used as pivots first; once every remaining diagonal entry
    is zero, a nonzero off-diagonal pair [[0, b], [b, 0]] contributes one
    positive and one negative eigenvalue; an all-zero block contributes
    nothing.
    """
    if not q.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    n = q.size
    a = [[Fraction(x) for x in row] for row in q.rows]
    active = list(range(n))
    pos = neg = 0
    while active:
        d = next((i for i in active if a[i][i] != 0), None)
        if d is not None:
            pivot = a[d][d]
            if pivot > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in active if i != d]
            for i in rest:
                c = a[i][d] / pivot
                if c:
                    for j in rest:
                        a[i][j] -= c * a[d][j]
            active = rest
            continue
        pair = next(
            ((i, j) for i in active for j in active if i < j and a[i][j] != 0),
            None,
        )
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        pos += 1
        neg += 1
        rest = [k for k in active if k not in (i, j)]
        for k in rest:
            cki, ckj = a[k][i], a[k][j]
            if cki or ckj:
                for l in rest:
                    a[k][l] -= (cki * a[j][l] + ckj * a[i][l]) / b
        active = rest
    return pos - neg


def skew_standardize(s: IntMatrix) -> IntMatrix:
    """Unimodular A with A * S * A^T equal to the standard symplectic form.

    Requires S skew-symmetric of even size with determinant 1.  Pivots on
    a minimal-absolute-value nonzero entry (ties broken by lowest row,
    then column, index) and applies paired row/column operations until
    the leading 2x2 block is [[0, 1], [-1, 0]]; then recurses on the rest.
    The pivot rule makes the output deterministic.
    """
    n = s.size
    if n % 2:
        raise ValueError("skew standardization requires even size")
    if not s.is_skew_symmetric():
        raise ValueError("input must be skew-symmetric")
    if det(s) != 1:
        raise ValueError("input must have determinant 1")
    w = [list(row) for row in s.rows]
    a = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap(i: int, j: int) -> None:
        w[i], w[j] = w[j], w[i]
        for row in w:
            row[i], row[j] = row[j], row[i]
        a[i], a[j] = a[j], a[i]

    def add_row(i: int, j: int, c: int) -> None:
        # row_i += c * row_j, mirrored on columns; tracked on A.
        wi, wj = w[i], w[j]
        for l in range(n):
            wi[l] += c * wj[l]
        for row in w:
            row[i] += c * row[j]
        ai, aj = a[i], a[j]
        for l in range(n):
            ai[l] += c * aj[l]

    k = 0
    while k < n:
        best: tuple[int, int] | None = None
        for i in range(k, n):
            for j in range(k, n):
                v = w[i][j]
                if v != 0 and (best is None or abs(v) < abs(w[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            raise AssertionError("unexpected zero block in unimodular skew form")
        i, j = best
        if i != k:
            swap(i, k)
            if j == k:
                j = i
            elif j == i:
                j = k
        if j != k + 1:
            swap(j, k + 1)
        pivot = w[k][k + 1]
        if pivot < 0:
            swap(k, k + 1)
            pivot = -pivot
        clean = True
        for l in range(k + 2, n):
            # w[k][l] shifts by c * pivot under add_row(l, k+1, c).
            q, r = divmod(w[k][l], pivot)
            if q:
                add_row(l, k + 1, -q)
            if r:
                clean = False
            # w[k+1][l] shifts by -c * pivot under add_row(l, k, c).
            q, r = divmod(w[k + 1][l], pivot)
            if q:
                add_row(l, k, q)
            if r:
                clean = False
        if clean:
            assert pivot == 1, "determinant 1 forces a unit pivot"
            k += 2
    return IntMatrix.from_rows(a)


def parse_matrix(text: str) -> IntMatrix:
    """Parse the matrix text format: first line the size m, then m rows.

    The empty matrix is the single line "0".
    """
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0].split()[0])
    except ValueError as exc:
        raise ValueError(f"bad size line: {lines[0]!r}") from exc
    if n < 0:
        raise ValueError("matrix size must be non-negative")
    if len(lines) < n + 1:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for line in lines[1 : n + 1]:
        entries = [int(tok) for tok in line.split()]
        if len(entries) != n:
            raise ValueError(f"expected {n} entries per row, got {len(entries)}")
        rows.append(entries)
    return IntMatrix.from_rows(rows)


def format_matrix(m: IntMatrix) -> str:
    lines = [str(m.size)]
    for row in m.rows:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"
