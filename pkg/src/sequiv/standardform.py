"""Standardized Seifert matrices and the disk-band normal form.

A Seifert matrix N is standardized when N - N^T is the standard
symplectic form; any Seifert matrix reaches that shape by a unimodular
congruence.  A standardized matrix is the same data as a disk-band form:
one framing per band (the diagonal of N) plus the band-linking numbers
(the lower triangle).  The symplectic correction on dual band pairs is
carried by the surface, not by the band string link, which makes the
correspondence a bijection.

Two standardizations of a common matrix differ by a transition matrix
that must preserve the symplectic form; the witness report checks that
and exhibits the identical disk-band data on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intlin import (
    IntMatrix,
    congruent,
    is_unimodular,
    skew_standardize,
    standard_symplectic,
    unimodular_inverse,
)
from .purebraid import PureBraidWord
from .seifert import SeifertMatrix, validate
from .stringlink import DoubledStringLink

__all__ = [
    "DiskBandForm",
    "standardize",
    "is_standardized",
    "to_disk_band",
    "from_disk_band",
    "transition",
    "StandardizationReport",
    "standardization_witness",
    "to_string_link",
    "parse_disk_band",
    "format_disk_band",
]


@dataclass(frozen=True)
class DiskBandForm:
    """Genus, one framing per band, and band-linking numbers lk(i, j)."""

    genus: int
    framings: tuple[int, ...]
    linking: tuple[tuple[int, ...], ...]  # full symmetric 2g x 2g, zero diagonal

    def __post_init__(self) -> None:
        n = 2 * self.genus
        if len(self.framings) != n:
            raise ValueError(f"expected {n} framings, got {len(self.framings)}")
        if len(self.linking) != n or any(len(row) != n for row in self.linking):
            raise ValueError("band-linking table must be 2g x 2g")
        for i in range(n):
            if self.linking[i][i]:
                raise ValueError("band-linking diagonal must be zero")
            for j in range(n):
                if self.linking[i][j] != self.linking[j][i]:
                    raise ValueError("band-linking table must be symmetric")

    @classmethod
    def build(
        cls, genus: int, framings, entries: dict[tuple[int, int], int]
    ) -> "DiskBandForm":
        n = 2 * genus
        table = [[0] * n for _ in range(n)]
        for (i, j), v in entries.items():
            if not (1 <= i < j <= n):
                raise ValueError(f"band pair must satisfy 1 <= i < j <= {n}, got ({i}, {j})")
            table[i - 1][j - 1] = v
            table[j - 1][i - 1] = v
        return cls(genus, tuple(int(f) for f in framings), tuple(tuple(r) for r in table))

    def lk(self, i: int, j: int) -> int:
        """Band-linking number, 1-indexed."""
        return self.linking[i - 1][j - 1]


def is_standardized(sm: SeifertMatrix) -> bool:
    m = sm.matrix
    return (m - m.transpose()).rows == standard_symplectic(sm.genus).rows


def standardize(sm: SeifertMatrix) -> tuple[IntMatrix, SeifertMatrix]:
    """Unimodular A and N = A * M * A^T with N - N^T in standard form."""
    a = skew_standardize(sm.matrix - sm.matrix.transpose())
    n = congruent(sm.matrix, a)
    return a, validate(n)


def to_disk_band(sm: SeifertMatrix) -> DiskBandForm:
    """Read framings off the diagonal and band linking off the lower triangle."""
    if not is_standardized(sm):
        raise ValueError("matrix is not standardized; apply standardize() first")
    m = sm.matrix
    n = m.size
    framings = tuple(m.rows[i][i] for i in range(n))
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            table[i][j] = table[j][i] = m.rows[j][i]
    return DiskBandForm(sm.genus, framings, tuple(tuple(r) for r in table))


def from_disk_band(d: DiskBandForm) -> SeifertMatrix:
    """Rebuild the standardized matrix; the upper triangle is forced."""
    n = 2 * d.genus
    x = standard_symplectic(d.genus)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = d.framings[i]
        for j in range(i + 1, n):
            rows[j][i] = d.linking[i][j]
            rows[i][j] = d.linking[i][j] + x.rows[i][j]
    return validate(IntMatrix.from_rows(rows))


def transition(a1: IntMatrix, a2: IntMatrix) -> IntMatrix:
    """C = A1 * A2^-1, verified to preserve the standard symplectic form."""
    if a1.size != a2.size:
        raise ValueError("size mismatch")
    if a1.size % 2:
        raise ValueError("transition requires even size")
    if not is_unimodular(a1) or not is_unimodular(a2):
        raise ValueError("inputs must be unimodular")
    c = a1 * unimodular_inverse(a2)
    x = standard_symplectic(a1.size // 2)
    if (c * x * c.transpose()).rows != x.rows:
        raise ValueError(
            "transition matrix is not symplectic; the inputs do not standardize "
            "congruent forms of a common matrix"
        )
    return c


@dataclass(frozen=True)
class StandardizationReport:
    """Two standardizations of one matrix, tied together symplectically."""

    c: IntMatrix
    c_symplectic: bool
    form_1: DiskBandForm
    form_2: DiskBandForm
    forms_match_after_transition: bool
    framings: tuple[int, ...]

    def lines(self) -> list[str]:
        out = [
            f"transition symplectic: {str(self.c_symplectic).lower()}",
            f"forms match after transition: {str(self.forms_match_after_transition).lower()}",
            "framings " + " ".join(str(f) for f in self.framings),
        ]
        return out


def standardization_witness(
    sm: SeifertMatrix, a1: IntMatrix, a2: IntMatrix
) -> StandardizationReport:
    """Check that two standardizations of sm carry identical disk-band data.

    Both A_i must be unimodular with N_i = A_i * M * A_i^T standardized.
    The transition C = A1 * A2^-1 is verified symplectic, C * N2 * C^T is
    N1 on the nose, and both disk-band forms agree after that basis
    change, framings included.
    """
    n1 = validate(congruent(sm.matrix, a1))
    n2 = validate(congruent(sm.matrix, a2))
    if not is_standardized(n1) or not is_standardized(n2):
        raise ValueError("both transforms must standardize the matrix")
    c = transition(a1, a2)
    d1 = to_disk_band(n1)
    d2 = to_disk_band(n2)
    transformed = validate(congruent(n2.matrix, c))
    match = to_disk_band(transformed) == d1
    assert transformed.matrix.rows == n1.matrix.rows, "C must carry N2 to N1"
    return StandardizationReport(
        c=c,
        c_symplectic=True,
        form_1=d1,
        form_2=d2,
        forms_match_after_transition=match,
        framings=d1.framings,
    )


def to_string_link(d: DiskBandForm) -> DoubledStringLink:
    """Canonical single-pass string link carrying the disk-band data.

    Band i becomes strand i with its framing; the braid is the product of
    p(i, j)**lk(i, j) over band pairs in lexicographic order.
    """
    n = 2 * d.genus
    strands = max(n, 1)
    letters = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = d.lk(i, j)
            e = 1 if v > 0 else -1
            letters.extend([(i, j, e)] * abs(v))
    braid = PureBraidWord(strands, tuple(letters))
    framings = d.framings if n else (0,)
    return DoubledStringLink(strands, 1, braid, framings)


def parse_disk_band(text: str) -> DiskBandForm:
    """Parse: "g <g>", "framings f1 ... f_2g", then "i j lk" lines."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 2:
        raise ValueError("disk-band file needs a genus line and a framings line")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "g":
        raise ValueError(f'first line must be "g <g>", got {lines[0]!r}')
    genus = int(head[1])
    fr = lines[1].split()
    if fr[0] != "framings":
        raise ValueError(f'second line must start with "framings", got {lines[1]!r}')
    framings = [int(tok) for tok in fr[1:]]
    entries: dict[tuple[int, int], int] = {}
    for line in lines[2:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"band-linking lines must be 'i j lk', got {line!r}")
        i, j, v = (int(p) for p in parts)
        entries[(min(i, j), max(i, j))] = v
    return DiskBandForm.build(genus, framings, entries)


def format_disk_band(d: DiskBandForm) -> str:
    lines = [f"g {d.genus}"]
    lines.append("framings " + " ".join(str(f) for f in d.framings))
    n = 2 * d.genus
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if d.lk(i, j):
                lines.append(f"{i} {j} {d.lk(i, j)}")
    return "\n".join(lines) + "\n"
