"""Seifert matrices, their abelian invariants, and S-equivalence moves.

A Seifert matrix is a square integer matrix M of even size with
det(M - M^T) = 1.  Congruence by unimodular matrices and row/column
enlargements generate S-equivalence; the invariants computed here
(Alexander polynomial, signature, determinant, Arf) are constant on each
S-equivalence class.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .intlin import IntMatrix, congruent, det, signature
from .laurent import LaurentPoly, laurent_matrix_det

__all__ = [
    "SeifertMatrix",
    "validate",
    "alexander",
    "alexander_raw",
    "is_alexander_trivial",
    "knot_signature",
    "knot_determinant",
    "arf",
    "column_enlarge",
    "row_enlarge",
    "try_reduce",
    "SearchBudget",
    "SearchResult",
    "Move",
    "CongruenceMove",
    "ReduceMove",
    "EnlargeMove",
    "apply_moves",
    "bounded_sequiv_search",
]


@dataclass(frozen=True)
class SeifertMatrix:
    """A validated Seifert matrix; construct through validate()."""

    matrix: IntMatrix

    @property
    def size(self) -> int:
        return self.matrix.size

    @property
    def genus(self) -> int:
        return self.matrix.size // 2


def validate(m: IntMatrix) -> SeifertMatrix:
    """Wrap m as a Seifert matrix, checking both defining invariants."""
    if m.size % 2:
        raise ValueError(f"Seifert matrix must have even size, got {m.size}")
    pairing = det(m - m.transpose())
    if pairing != 1:
        raise ValueError(f"det(M - M^T) must be 1, got {pairing}")
    return SeifertMatrix(m)


def alexander_raw(sm: SeifertMatrix) -> LaurentPoly:
    """The unnormalized polynomial det(M - t * M^T)."""
    m = sm.matrix
    n = m.size
    entries = [
        [LaurentPoly.of(0, (m.rows[i][j], -m.rows[j][i])) for j in range(n)]
        for i in range(n)
    ]
    return laurent_matrix_det(entries)


def alexander(sm: SeifertMatrix) -> LaurentPoly:
    """The Alexander polynomial t**(-g) * det(M - t * M^T).

    The result always satisfies delta(1) = 1 and delta(1/t) = delta(t);
    both are enforced as postconditions.
    """
    delta = alexander_raw(sm).shift(-sm.genus)
    assert delta.evaluate(1) == 1, "Alexander polynomial must take value 1 at t=1"
    assert delta.is_palindromic(), "Alexander polynomial must be palindromic"
    return delta


def is_alexander_trivial(sm: SeifertMatrix) -> bool:
    return alexander(sm) == LaurentPoly.one


def knot_signature(sm: SeifertMatrix) -> int:
    return signature(sm.matrix + sm.matrix.transpose())


def knot_determinant(sm: SeifertMatrix) -> int:
    """|det(M + M^T)|, cross-checked against |delta(-1)|."""
    d = abs(det(sm.matrix + sm.matrix.transpose()))
    assert d == abs(alexander(sm).evaluate(-1)), "determinant cross-check failed"
    return d


def arf(sm: SeifertMatrix) -> int:
    """0 when delta(-1) is congruent to +-1 mod 8, else 1."""
    return 0 if alexander(sm).evaluate(-1) % 8 in (1, 7) else 1


def column_enlarge(sm: SeifertMatrix, xi: Sequence[int], x: int) -> SeifertMatrix:
    """Append the block [[M, xi, 0], [0, x, 1], [0, 0, 0]].

    Preserves the Alexander polynomial, signature, determinant and Arf
    invariant, and multiplies the unnormalized polynomial by exactly t.
    """
    n = sm.size
    xi = tuple(int(v) for v in xi)
    if len(xi) != n:
        raise ValueError(f"column must have length {n}, got {len(xi)}")
    rows = [list(row) + [xi[i], 0] for i, row in enumerate(sm.matrix.rows)]
    rows.append([0] * n + [int(x), 1])
    rows.append([0] * (n + 2))
    return validate(IntMatrix.from_rows(rows))


def row_enlarge(sm: SeifertMatrix, eta: Sequence[int], x: int) -> SeifertMatrix:
    """Append the block [[M, 0, 0], [eta, x, 0], [0, 1, 0]]; mirror form."""
    n = sm.size
    eta = tuple(int(v) for v in eta)
    if len(eta) != n:
        raise ValueError(f"row must have length {n}, got {len(eta)}")
    rows = [list(row) + [0, 0] for row in sm.matrix.rows]
    rows.append(list(eta) + [int(x), 0])
    rows.append([0] * n + [1, 0])
    return validate(IntMatrix.from_rows(rows))


def _column_pattern(rows: tuple[tuple[int, ...], ...], p: int, q: int) -> bool:
    n = len(rows)
    if any(rows[q][l] for l in range(n)):
        return False
    if rows[p][q] != 1:
        return False
    if any(rows[l][q] for l in range(n) if l != p):
        return False
    return not any(rows[p][l] for l in range(n) if l not in (p, q))


def _row_pattern(rows: tuple[tuple[int, ...], ...], p: int, q: int) -> bool:
    n = len(rows)
    if any(rows[l][q] for l in range(n)):
        return False
    if rows[q][p] != 1:
        return False
    if any(rows[q][l] for l in range(n) if l != p):
        return False
    return not any(rows[l][p] for l in range(n) if l not in (p, q))


def _strip(rows: tuple[tuple[int, ...], ...], p: int, q: int) -> tuple[tuple[int, ...], ...]:
    keep = [i for i in range(len(rows)) if i not in (p, q)]
    return tuple(tuple(rows[i][j] for j in keep) for i in keep)


def _reduction_sites(rows: tuple[tuple[int, ...], ...]):
    """Yield (p, q, kind) for every enlargement pattern, bottom-right first."""
    n = len(rows)
    for p in range(n - 1, -1, -1):
        for q in range(n - 1, -1, -1):
            if p == q:
                continue
            if _column_pattern(rows, p, q):
                yield p, q, "column"
            if _row_pattern(rows, p, q):
                yield p, q, "row"


def try_reduce(sm: SeifertMatrix) -> Optional[SeifertMatrix]:
    """Strip one enlargement if the matrix matches a block pattern.

    Only simultaneous permutation congruences are searched: a pair of
    indices (p, q) is moved to the last two positions and the column or
    row pattern is matched literally.  Scanning runs bottom-right first,
    so reducing an enlarged matrix undoes the enlargement that produced
    it.  Returns None when no pattern matches.
    """
    for p, q, _kind in _reduction_sites(sm.matrix.rows):
        return validate(IntMatrix(_strip(sm.matrix.rows, p, q)))
    return None


# ---------------------------------------------------------------------------
# Bounded search for an explicit S-equivalence witness.


@dataclass(frozen=True)
class CongruenceMove:
    """Congruence by the elementary matrix I + c * e(i, j), 0-indexed."""

    i: int
    j: int
    c: int

    def apply_rows(self, rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        n = len(rows)
        work = [list(r) for r in rows]
        for l in range(n):
            work[self.i][l] += self.c * work[self.j][l]
        for row in work:
            row[self.i] += self.c * row[self.j]
        return tuple(tuple(r) for r in work)

    def describe(self) -> str:
        return f"congruence E[{self.i + 1},{self.j + 1};{self.c:+d}]"


@dataclass(frozen=True)
class ReduceMove:
    p: int
    q: int
    kind: str

    def apply_rows(self, rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        pattern = _column_pattern if self.kind == "column" else _row_pattern
        if not pattern(rows, self.p, self.q):
            raise ValueError("reduction pattern does not match")
        return _strip(rows, self.p, self.q)

    def describe(self) -> str:
        return f"reduce {self.kind} ({self.p + 1},{self.q + 1})"


@dataclass(frozen=True)
class EnlargeMove:
    kind: str
    x: int = 0

    def apply_rows(self, rows: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
        sm = SeifertMatrix(IntMatrix(rows))
        zeros = (0,) * sm.size
        if self.kind == "column":
            return column_enlarge(sm, zeros, self.x).matrix.rows
        return row_enlarge(sm, zeros, self.x).matrix.rows

    def describe(self) -> str:
        return f"enlarge {self.kind} x={self.x}"


Move = CongruenceMove | ReduceMove | EnlargeMove


def apply_moves(sm: SeifertMatrix, moves: Sequence[Move]) -> SeifertMatrix:
    rows = sm.matrix.rows
    for move in moves:
        rows = move.apply_rows(rows)
    return validate(IntMatrix(rows))


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the breadth-first witness search."""

    max_size: Optional[int] = None
    max_entry: int = 8
    max_nodes: int = 20000


@dataclass(frozen=True)
class SearchResult:
    verdict: str  # "equivalent" | "distinct" | "unknown"
    witness: Optional[tuple[Move, ...]] = None
    reason: str = ""


_INVARIANTS = (
    ("alexander", alexander),
    ("signature", knot_signature),
    ("determinant", knot_determinant),
    ("arf", arf),
)


def bounded_sequiv_search(
    m1: SeifertMatrix, m2: SeifertMatrix, budget: SearchBudget = SearchBudget()
) -> SearchResult:
    """Decide S-equivalence within a search budget.

    Returns "distinct" only when a computed invariant differs, and
    "equivalent" only with an explicit move witness transforming m1 into
    m2.  Breadth-first search with moves enumerated in a fixed order
    yields the lexicographically least minimal-length witness;
    exhausting the budget gives the honest verdict "unknown".
    """
    for name, fn in _INVARIANTS:
        if fn(m1) != fn(m2):
            return SearchResult("distinct", reason=f"{name} differs")

    max_size = budget.max_size
    if max_size is None:
        max_size = max(m1.size, m2.size) + 2

    start = m1.matrix.rows
    target = m2.matrix.rows
    if start == target:
        return SearchResult("equivalent", witness=())

    parents: dict[tuple, Optional[tuple[tuple, Move]]] = {start: None}
    frontier: deque[tuple] = deque([start])
    while frontier:
        rows = frontier.popleft()
        for move in _moves_from(rows, max_size, budget.max_entry):
            child = move.apply_rows(rows)
            if child in parents:
                continue
            parents[child] = (rows, move)
            if child == target:
                return SearchResult("equivalent", witness=_unwind(parents, child))
            if len(parents) >= budget.max_nodes:
                return SearchResult(
                    "unknown", reason=f"budget exhausted after {len(parents)} states"
                )
            frontier.append(child)
    return SearchResult("unknown", reason=f"move space exhausted ({len(parents)} states)")


def _moves_from(rows: tuple[tuple[int, ...], ...], max_size: int, max_entry: int):
    n = len(rows)
    for p, q, kind in _reduction_sites(rows):
        yield ReduceMove(p, q, kind)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for c in (1, -1):
                move = CongruenceMove(i, j, c)
                child = move.apply_rows(rows)
                if max((abs(x) for row in child for x in row), default=0) <= max_entry:
                    yield move
    if n + 2 <= max_size:
        yield EnlargeMove("column")
        yield EnlargeMove("row")


def _unwind(parents, child) -> tuple[Move, ...]:
    moves = []
    while parents[child] is not None:
        child, move = parents[child]
        moves.append(move)
    return tuple(reversed(moves))
