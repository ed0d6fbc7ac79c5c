"""Pure braid words and the linking-number abelianization.

A word is a sequence of letters (i, j, e) with 1 <= i < j <= n and
e in {1, -1}, each standing for the e-th power of the standard generator
that links strands i and j.  The generator's own linking number is +1 by
convention; every other sign in the toolkit derives from that choice.

Summing exponents per strand pair is a homomorphism onto the
abelianization, and two words are delta-equivalent exactly when those
pairwise linking numbers agree.  Free reduction is a separate
normalizing pass: linking numbers never need it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

__all__ = [
    "Letter",
    "PureBraidWord",
    "LinkingMatrix",
    "linking_matrix",
    "delta_relator",
    "is_delta_trivial",
    "delta_equivalent",
    "insert_relator",
    "parse_braid",
    "format_braid",
]

Letter = tuple[int, int, int]


def _check_letter(n: int, letter: Letter) -> Letter:
    i, j, e = letter
    if not (1 <= i < j <= n):
        raise ValueError(f"letter indices must satisfy 1 <= i < j <= {n}, got ({i}, {j})")
    if e not in (1, -1):
        raise ValueError(f"letter exponent must be +-1, got {e}")
    return (i, j, e)


@dataclass(frozen=True)
class PureBraidWord:
    """A word in the standard generators of the pure braid group on n strands."""

    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("strand count must be positive")
        for letter in self.letters:
            _check_letter(self.strands, letter)

    @classmethod
    def identity(cls, n: int) -> "PureBraidWord":
        return cls(n)

    @classmethod
    def generator(cls, n: int, i: int, j: int, e: int = 1) -> "PureBraidWord":
        if i > j:
            i, j = j, i
        return cls(n, (_check_letter(n, (i, j, e)),))

    def __mul__(self, other: "PureBraidWord") -> "PureBraidWord":
        if self.strands != other.strands:
            raise ValueError("strand-count mismatch")
        return PureBraidWord(self.strands, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "PureBraidWord":
        return PureBraidWord(
            self.strands, tuple((i, j, -e) for i, j, e in reversed(self.letters))
        )

    def free_reduce(self) -> "PureBraidWord":
        """Cancel adjacent x * x^-1 pairs until none remain."""
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1] == (letter[0], letter[1], -letter[2]):
                stack.pop()
            else:
                stack.append(letter)
        return PureBraidWord(self.strands, tuple(stack))


@dataclass(frozen=True)
class LinkingMatrix:
    """Pairwise linking numbers: symmetric with zero diagonal."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def zero(cls, n: int) -> "LinkingMatrix":
        return cls(n, tuple((0,) * n for _ in range(n)))

    @classmethod
    def from_entries(cls, n: int, entries: dict[tuple[int, int], int]) -> "LinkingMatrix":
        rows = [[0] * n for _ in range(n)]
        for (i, j), v in entries.items():
            if i == j:
                raise ValueError("diagonal entries must be zero")
            rows[i - 1][j - 1] += v
            rows[j - 1][i - 1] += v
        return cls(n, tuple(tuple(row) for row in rows))

    def entry(self, i: int, j: int) -> int:
        """Linking number of strands i and j, 1-indexed."""
        return self.rows[i - 1][j - 1]

    def __add__(self, other: "LinkingMatrix") -> "LinkingMatrix":
        if self.n != other.n:
            raise ValueError("strand-count mismatch")
        return LinkingMatrix(
            self.n,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows)),
        )

    def __neg__(self) -> "LinkingMatrix":
        return LinkingMatrix(self.n, tuple(tuple(-a for a in row) for row in self.rows))

    def is_zero(self) -> bool:
        return all(all(a == 0 for a in row) for row in self.rows)

    def nonzero_entries(self) -> list[tuple[int, int, int]]:
        return [
            (i + 1, j + 1, self.rows[i][j])
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if self.rows[i][j]
        ]


def linking_matrix(w: PureBraidWord) -> LinkingMatrix:
    """Sum of exponents per strand pair; a homomorphism to the abelianization."""
    rows = [[0] * w.strands for _ in range(w.strands)]
    for i, j, e in w.letters:
        rows[i - 1][j - 1] += e
        rows[j - 1][i - 1] += e
    return LinkingMatrix(w.strands, tuple(tuple(row) for row in rows))


def delta_relator(i: int, j: int, k: int, strands: Optional[int] = None) -> PureBraidWord:
    """The four-letter commutator of the generators on strands (i,j) and (j,k).

    Inserting or deleting a conjugate of this word is the algebraic form
    of one delta move; its linking numbers all vanish.
    """
    n = k if strands is None else strands
    if not (1 <= i < j < k <= n):
        raise ValueError(f"indices must satisfy 1 <= i < j < k <= {n}, got ({i}, {j}, {k})")
    return PureBraidWord(n, ((i, j, 1), (j, k, 1), (i, j, -1), (j, k, -1)))


def is_delta_trivial(w: PureBraidWord) -> bool:
    """True exactly when every pairwise linking number vanishes."""
    return linking_matrix(w).is_zero()


def delta_equivalent(w1: PureBraidWord, w2: PureBraidWord) -> bool:
    """True exactly when the two words have the same pairwise linking numbers."""
    if w1.strands != w2.strands:
        raise ValueError("strand-count mismatch")
    return linking_matrix(w1) == linking_matrix(w2)


def insert_relator(
    w: PureBraidWord,
    position: int,
    relator: PureBraidWord,
    conjugator: Optional[PureBraidWord] = None,
) -> PureBraidWord:
    """Splice conjugator * relator * conjugator^-1 into w at position."""
    if not (0 <= position <= len(w.letters)):
        raise IndexError(f"position must be in 0..{len(w.letters)}, got {position}")
    if conjugator is None:
        conjugator = PureBraidWord.identity(w.strands)
    if relator.strands != w.strands or conjugator.strands != w.strands:
        raise ValueError("strand-count mismatch")
    inserted = conjugator * relator * conjugator.inverse()
    letters = w.letters[:position] + inserted.letters + w.letters[position:]
    return PureBraidWord(w.strands, letters)


def parse_braid(text: str) -> PureBraidWord:
    """Parse the pure-braid format: header "n <strands>", then "i j e" lines."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or not lines[0].startswith("n"):
        raise ValueError('pure-braid file must start with a header line "n <strands>"')
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad header line: {lines[0]!r}") from exc
    letters = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"letter lines must be 'i j e', got {line!r}")
        letters.append(tuple(int(p) for p in parts))
    return PureBraidWord(n, tuple(letters))


def format_braid(w: PureBraidWord) -> str:
    lines = [f"n {w.strands}"]
    for i, j, e in w.letters:
        lines.append(f"{i} {j} {e}")
    return "\n".join(lines) + "\n"
