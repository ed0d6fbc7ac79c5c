"""Seifert matrices of knots presented as braid closures.

The closure of a braid word is a knot exactly when the underlying
permutation is a single cycle.  Applying the standard spanning-surface
construction to the closed diagram gives one disk per strand and one
band per crossing; the homology basis consists of the loops through
consecutive same-index crossings, so the matrix has size
length(word) - strands + 1.

Crossing conventions are pinned operationally: the positive trefoil
braid on two strands must produce a matrix with signature -2, and the
polynomial of every generated knot closure must agree exactly with the
reduced-Burau evaluation, which is computed by an entirely independent
code path and serves as the oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .intlin import IntMatrix
from .laurent import LaurentPoly, laurent_matrix_det, normalize_knot_polynomial
from .seifert import SeifertMatrix, validate

__all__ = [
    "ArtinBraidWord",
    "closure_permutation",
    "is_knot_closure",
    "missing_generators",
    "seifert_matrix",
    "burau_alexander",
    "knot_corpus",
    "parse_artin_word",
    "format_artin_word",
]


@dataclass(frozen=True)
class ArtinBraidWord:
    """A braid word: signed generator indices on a fixed strand count."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError("braid words need at least 2 strands")
        for v in self.letters:
            if v == 0 or abs(v) >= self.strands:
                raise ValueError(f"generator index {v} out of range 1..{self.strands - 1}")

    def mirror(self) -> "ArtinBraidWord":
        """Reverse the word and flip every crossing."""
        return ArtinBraidWord(self.strands, tuple(-v for v in reversed(self.letters)))


def closure_permutation(w: ArtinBraidWord) -> tuple[int, ...]:
    """The permutation of strand start positions; entry s-1 holds the end of s."""
    at = list(range(w.strands + 1))  # at[p] = strand currently at position p
    for v in w.letters:
        i = abs(v)
        at[i], at[i + 1] = at[i + 1], at[i]
    ends = [0] * w.strands
    for p in range(1, w.strands + 1):
        ends[at[p] - 1] = p
    return tuple(ends)


def is_knot_closure(w: ArtinBraidWord) -> bool:
    """True when the closure has a single component."""
    perm = closure_permutation(w)
    seen = 1
    s = perm[0]
    while s != 1:
        s = perm[s - 1]
        seen += 1
    return seen == w.strands


def missing_generators(w: ArtinBraidWord) -> list[int]:
    used = {abs(v) for v in w.letters}
    return [i for i in range(1, w.strands) if i not in used]


def seifert_matrix(w: ArtinBraidWord) -> SeifertMatrix:
    """Seifert matrix of the knot closure of w.

    Requires a one-component closure using every generator index at
    least once.  The matrix passes validation and its normalized
    polynomial equals the reduced-Burau value.
    """
    if not is_knot_closure(w):
        perm = closure_permutation(w)
        count = _cycle_count(perm)
        raise ValueError(f"closure has {count} components, not a knot")
    missing = missing_generators(w)
    if missing:
        raise ValueError(f"generator index {missing[0]} never occurs; surface is disconnected")

    columns: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, w.strands)}
    for pos, v in enumerate(w.letters):
        columns[abs(v)].append((pos, 1 if v > 0 else -1))

    loops: list[tuple[int, int, int, int, int]] = []  # (col, t1, t2, e1, e2)
    index_of: dict[tuple[int, int], int] = {}
    for col in range(1, w.strands):
        occ = columns[col]
        for j in range(len(occ) - 1):
            index_of[(col, j)] = len(loops)
            (t1, e1), (t2, e2) = occ[j], occ[j + 1]
            loops.append((col, t1, t2, e1, e2))

    size = len(loops)
    v = [[0] * size for _ in range(size)]
    for col in range(1, w.strands):
        count = len(columns[col]) - 1
        for j in range(count):
            r = index_of[(col, j)]
            _, _, _, e1, e2 = loops[r]
            v[r][r] = -(e1 + e2) // 2
            if j + 1 < count:
                s = index_of[(col, j + 1)]
                shared = loops[r][4]  # crossing shared with the next loop
                if shared == 1:
                    v[r][s] = 1
                else:
                    v[s][r] = -1
    # Interleaved loops in adjacent columns contribute a single +-1 in the
    # (left loop, right loop) slot: +1 when the left-column loop opens
    # first, -1 when the right-column loop does.  The side and sign are
    # pinned by exact oracle agreement over generated corpora.
    for col in range(1, w.strands - 1):
        for j in range(len(columns[col]) - 1):
            a = index_of[(col, j)]
            _, t1, t2, _, _ = loops[a]
            for m in range(len(columns[col + 1]) - 1):
                b = index_of[(col + 1, m)]
                _, u1, u2, _, _ = loops[b]
                if t1 < u1 < t2 < u2:
                    v[a][b] = 1
                elif u1 < t1 < u2 < t2:
                    v[a][b] = -1
    return validate(IntMatrix.from_rows(v))


def _cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    count = 0
    for s in range(1, len(perm) + 1):
        if not seen[s - 1]:
            count += 1
            t = s
            while not seen[t - 1]:
                seen[t - 1] = True
                t = perm[t - 1]
    return count


# ---------------------------------------------------------------------------
# Reduced Burau oracle.

_T = LaurentPoly.t_power(1)
_TINV = LaurentPoly.t_power(-1)
_ONE = LaurentPoly.one


def _burau_letter(n: int, v: int) -> list[list[LaurentPoly]]:
    """Reduced Burau image of one signed generator, an (n-1) square matrix."""
    i = abs(v)
    m = n - 1
    rows = [[_ONE if a == b else LaurentPoly() for b in range(m)] for a in range(m)]

    def put(block: Sequence[Sequence[LaurentPoly]], at: int) -> None:
        for a, row in enumerate(block):
            for b, e in enumerate(row):
                rows[at + a][at + b] = e

    z = LaurentPoly()
    if n == 2:
        rows[0][0] = -_T if v > 0 else -_TINV
        return rows
    if i == 1:
        if v > 0:
            put([[-_T, z], [_ONE, _ONE]], 0)
        else:
            put([[-_TINV, z], [_TINV, _ONE]], 0)
    elif i == n - 1:
        if v > 0:
            put([[_ONE, _T], [z, -_T]], n - 3)
        else:
            put([[_ONE, _ONE], [z, -_TINV]], n - 3)
    else:
        if v > 0:
            put([[_ONE, _T, z], [z, -_T, z], [z, _ONE, _ONE]], i - 2)
        else:
            put([[_ONE, _ONE, z], [z, -_TINV, z], [z, _TINV, _ONE]], i - 2)
    return rows


def _mat_mul(a, b):
    m = len(a)
    return [
        [
            sum((a[i][k] * b[k][j] for k in range(m)), LaurentPoly())
            for j in range(m)
        ]
        for i in range(m)
    ]


def burau_alexander(w: ArtinBraidWord) -> LaurentPoly:
    """Alexander polynomial of the closure via the reduced Burau matrix.

    Computes det(rho(w) - I) * (1 - t) / (1 - t**n) with exact Laurent
    arithmetic and normalizes the result to value 1 at t=1, palindromic.
    The division is exact for every knot closure; an inexact division
    signals an implementation bug.
    """
    if not is_knot_closure(w):
        raise ValueError("closure is not a knot")
    n = w.strands
    m = n - 1
    rho = [[_ONE if a == b else LaurentPoly() for b in range(m)] for a in range(m)]
    for v in w.letters:
        rho = _mat_mul(rho, _burau_letter(n, v))
    for d in range(m):
        rho[d][d] = rho[d][d] - _ONE
    numerator = laurent_matrix_det(rho)
    quotient = LaurentPoly.of(0, (1,) * n)  # 1 + t + ... + t**(n-1)
    try:
        reduced = numerator.divexact(quotient)
    except ValueError as exc:
        raise RuntimeError("Burau determinant not divisible; implementation bug") from exc
    return normalize_knot_polynomial(reduced)


# ---------------------------------------------------------------------------
# Deterministic corpus of knot-closure words.


def knot_corpus(
    max_strands: int, max_length: int, seed: int, count: int
) -> list[ArtinBraidWord]:
    """Deterministic sample of distinct knot-closure words meeting all
    preconditions of seifert_matrix."""
    rng = random.Random(seed)
    seen: set[tuple[int, tuple[int, ...]]] = set()
    out: list[ArtinBraidWord] = []
    attempts = 0
    limit = 1000 * count
    while len(out) < count:
        attempts += 1
        if attempts > limit:
            raise RuntimeError("corpus generation failed to converge; widen the limits")
        n = rng.randint(2, max_strands)
        if max_length < n - 1:
            continue
        length = rng.randint(n - 1, max_length)
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)
        )
        key = (n, letters)
        if key in seen:
            continue
        seen.add(key)
        word = ArtinBraidWord(n, letters)
        if is_knot_closure(word) and not missing_generators(word):
            out.append(word)
    return out


def parse_artin_word(text: str) -> ArtinBraidWord:
    """Parse: header "n <strands>"; then signed generator indices."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("n"):
        raise ValueError('braid file must start with a header line "n <strands>"')
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad header line: {lines[0]!r}") from exc
    letters = []
    for line in lines[1:]:
        letters.extend(int(tok) for tok in line.split())
    return ArtinBraidWord(n, tuple(letters))


def format_artin_word(w: ArtinBraidWord) -> str:
    body = " ".join(str(v) for v in w.letters)
    return f"n {w.strands}\n{body}\n" if body else f"n {w.strands}\n"
