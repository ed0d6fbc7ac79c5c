"""Framed doubled string links presented as pure braids.

An n-strand string link drawn with k back-and-forth passes is encoded by
a pure braid on k*n strands plus one framing integer per strand.  Braid
strands carry a double index (i, a): the a-th pass of string-link strand
i.  Passes snake boustrophedon-style: odd passes run left to right,
even passes right to left, so pass orientation agrees with the
string-link orientation exactly when a is odd.

The string-link linking number of strands i and j is the alternating sum
over passes of the braid linking numbers; stabilizing multiplications
slide linking between consecutive passes without changing the underlying
string link, and normalize_linking uses them to push every braid-level
linking number to zero whenever the string-link linking numbers vanish.
"""

from __future__ import annotations

from dataclasses import dataclass
from .purebraid import Letter, LinkingMatrix, PureBraidWord, linking_matrix

__all__ = [
    "DoubleIndex",
    "DoubledStringLink",
    "position_of",
    "strand_label",
    "orientation_sign",
    "pairwise_linking",
    "stabilizing_multiply",
    "normalize_linking",
    "delta_equivalent_links",
    "parse_string_link",
    "format_string_link",
]

DoubleIndex = tuple[int, int]


def position_of(idx: DoubleIndex, n: int, k: int) -> int:
    """Braid strand position of the double index (i, a), boustrophedon order."""
    i, a = idx
    if not (1 <= i <= n and 1 <= a <= k):
        raise ValueError(f"double index ({i}, {a}) out of range for n={n}, k={k}")
    if a % 2:
        return (a - 1) * n + i
    return a * n - i + 1


def strand_label(position: int, n: int, k: int) -> DoubleIndex:
    """Inverse of position_of."""
    if not (1 <= position <= n * k):
        raise ValueError(f"position {position} out of range for n={n}, k={k}")
    a = (position - 1) // n + 1
    r = position - (a - 1) * n
    return (r, a) if a % 2 else (n - r + 1, a)


def orientation_sign(a: int) -> int:
    """+1 when pass a runs with the string-link orientation, -1 against it."""
    if a < 1:
        raise ValueError("pass index must be positive")
    return 1 if a % 2 else -1


@dataclass(frozen=True)
class DoubledStringLink:
    """n strands, k passes, a pure braid on k*n strands, and framings."""

    n: int
    k: int
    braid: PureBraidWord
    framings: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("pass count k must be at least 1")
        if self.braid.strands != self.n * self.k:
            raise ValueError(
                f"braid must live on n*k = {self.n * self.k} strands, got {self.braid.strands}"
            )
        if len(self.framings) != self.n:
            raise ValueError(f"expected {self.n} framings, got {len(self.framings)}")

    def braid_lk(self, idx1: DoubleIndex, idx2: DoubleIndex) -> int:
        lm = linking_matrix(self.braid)
        return lm.entry(position_of(idx1, self.n, self.k), position_of(idx2, self.n, self.k))


def pairwise_linking(link: DoubledStringLink) -> LinkingMatrix:
    """String-link linking numbers: alternating pass sums of braid linking."""
    n, k = link.n, link.k
    lm = linking_matrix(link.braid)
    entries: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            total = 0
            for a in range(1, k + 1):
                pa = position_of((i, a), n, k)
                for b in range(1, k + 1):
                    pb = position_of((j, b), n, k)
                    total += (-1) ** (a + b) * lm.entry(pa, pb)
            if total:
                entries[(i, j)] = total
    return LinkingMatrix.from_entries(n, entries)


def _pair_letters(
    n: int, k: int, i: int, a: int, j: int, b: int, sign: int
) -> tuple[Letter, ...]:
    """Letters of the stabilizing pair word for (i,a) against passes b, b+1 of j.

    A generator between coincident double indices is the identity and is
    dropped, so when i == j and a is b or b+1 the word is the single
    generator between passes b and b+1 of strand i.
    """
    pos_a = position_of((i, a), n, k)
    letters: list[Letter] = []
    for bb in (b, b + 1):
        pos_b = position_of((j, bb), n, k)
        if pos_a == pos_b:
            continue
        lo, hi = min(pos_a, pos_b), max(pos_a, pos_b)
        letters.append((lo, hi, 1))
    if sign == -1:
        letters = [(lo, hi, -1) for lo, hi, _ in reversed(letters)]
    return tuple(letters)


def stabilizing_multiply(
    link: DoubledStringLink, i: int, a: int, j: int, b: int, sign: int
) -> DoubledStringLink:
    """Multiply by the pass-pair word without changing the string link.

    The word pairs (i,a) with passes b and b+1 of strand j; it is
    prepended when b is even and appended when b is odd.  Both braid
    linking numbers lk((i,a),(j,b)) and lk((i,a),(j,b+1)) move by sign,
    except that when i == j and a is b or b+1 the single self entry
    lk((i,b),(i,b+1)) moves by sign.  String-link linking numbers and
    framings are unchanged.
    """
    n, k = link.n, link.k
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    if not (1 <= b < k):
        raise ValueError(f"pass index b must satisfy 1 <= b < k = {k}, got {b}")
    position_of((i, a), n, k)
    position_of((j, b), n, k)
    word = PureBraidWord(n * k, _pair_letters(n, k, i, a, j, b, sign))
    braid = word * link.braid if b % 2 == 0 else link.braid * word
    return DoubledStringLink(n, k, braid, link.framings)


def normalize_linking(link: DoubledStringLink) -> DoubledStringLink:
    """Drive every braid-level linking number to zero.

    Requires all string-link linking numbers of the input to vanish.
    Works pair by pair: linking between strands i and j is folded pass
    column by pass column onto the entry lk((i,1),(j,1)), which the
    alternating-sum condition then forces to zero; self linking between
    passes of one strand is folded the same way and the final entry is
    cleared by the single-generator move.  The result represents the
    same framed string link and its braid is delta-trivial.
    """
    pairwise = pairwise_linking(link)
    for i, j, value in pairwise.nonzero_entries():
        raise ValueError(f"string-link linking must vanish; lk({i},{j}) = {value}")

    n, k = link.n, link.k
    letters = list(link.braid.letters)
    lk: dict[tuple[int, int], int] = {}
    for p, q, e in letters:
        key = (p, q)
        lk[key] = lk.get(key, 0) + e

    def entry(idx1: DoubleIndex, idx2: DoubleIndex) -> int:
        p1 = position_of(idx1, n, k)
        p2 = position_of(idx2, n, k)
        return lk.get((min(p1, p2), max(p1, p2)), 0)

    def move(mi: int, ma: int, mj: int, mb: int, sign: int) -> None:
        word = _pair_letters(n, k, mi, ma, mj, mb, sign)
        if mb % 2 == 0:
            letters[:0] = word
        else:
            letters.extend(word)
        for p, q, e in word:
            key = (p, q)
            lk[key] = lk.get(key, 0) + e

    def clear(mi: int, ma: int, mj: int, mb: int, idx2_pass: int) -> None:
        # repeat the move with the cancelling sign until the entry dies
        while True:
            v = entry((mi, ma), (mj, idx2_pass))
            if v == 0:
                return
            move(mi, ma, mj, mb, -1 if v > 0 else 1)

    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            # fold the pass grid of (i, j) onto lk((i,1),(j,1))
            for c in range(k, 1, -1):
                for a in range(1, k + 1):
                    clear(i, a, j, c - 1, c)
            for c in range(k, 1, -1):
                clear(j, 1, i, c - 1, c)
            leftover = entry((i, 1), (j, 1))
            assert leftover == 0, f"alternating-sum condition violated at ({i},{j})"
    for i in range(1, n + 1):
        # self linking between passes of strand i; the a == c-1 case is
        # the single-generator move and clears the entry outright
        for c in range(k, 1, -1):
            for a in range(1, c):
                if a < c - 1:
                    clear(i, a, i, c - 1, c)
                else:
                    clear(i, c - 1, i, c - 1, c)

    braid = PureBraidWord(n * k, tuple(letters))
    result = DoubledStringLink(n, k, braid, link.framings)
    assert linking_matrix(braid).is_zero(), "normalization left a nonzero linking number"
    return result


def delta_equivalent_links(l1: DoubledStringLink, l2: DoubledStringLink) -> bool:
    """Same pairwise linking numbers and same framings; k may differ."""
    if l1.n != l2.n:
        raise ValueError("strand-count mismatch")
    return pairwise_linking(l1) == pairwise_linking(l2) and l1.framings == l2.framings


def parse_string_link(text: str) -> DoubledStringLink:
    """Parse: header "n <n> k <k>"; "framings f1 ... fn"; letters "i.a j.b e"."""
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) < 2:
        raise ValueError("string-link file needs a header and a framings line")
    head = lines[0].split()
    if len(head) != 4 or head[0] != "n" or head[2] != "k":
        raise ValueError(f'header must be "n <n> k <k>", got {lines[0]!r}')
    n, k = int(head[1]), int(head[3])
    fr = lines[1].split()
    if fr[0] != "framings":
        raise ValueError(f'second line must start with "framings", got {lines[1]!r}')
    framings = tuple(int(tok) for tok in fr[1:])
    letters: list[Letter] = []
    for line in lines[2:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"letter lines must be 'i.a j.b e', got {line!r}")
        idx1 = _parse_double(parts[0])
        idx2 = _parse_double(parts[1])
        e = int(parts[2])
        p1 = position_of(idx1, n, k)
        p2 = position_of(idx2, n, k)
        if p1 == p2:
            raise ValueError(f"letter joins a strand to itself: {line!r}")
        letters.append((min(p1, p2), max(p1, p2), e))
    braid = PureBraidWord(n * k, tuple(letters))
    return DoubledStringLink(n, k, braid, framings)


def _parse_double(token: str) -> DoubleIndex:
    try:
        i, a = token.split(".")
        return (int(i), int(a))
    except ValueError as exc:
        raise ValueError(f"bad double index {token!r}; expected 'i.a'") from exc


def format_string_link(link: DoubledStringLink) -> str:
    lines = [f"n {link.n} k {link.k}"]
    lines.append("framings " + " ".join(str(f) for f in link.framings))
    for p, q, e in link.braid.letters:
        i1, a1 = strand_label(p, link.n, link.k)
        i2, a2 = strand_label(q, link.n, link.k)
        lines.append(f"{i1}.{a1} {i2}.{a2} {e}")
    return "\n".join(lines) + "\n"
