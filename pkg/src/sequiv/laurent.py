"""Exact integer Laurent polynomials in one variable t.

Coefficients are arbitrary-precision integers, stored constant-first from
the lowest exponent.  Canonical form keeps the first and last stored
coefficients nonzero; the zero polynomial is the empty tuple with lowest
exponent 0.  Everything here is exact, no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "LaurentPoly",
    "format_laurent",
    "parse_laurent",
    "normalize_knot_polynomial",
    "laurent_matrix_det",
]


def _canonical(lo: int, coeffs: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    first, last = 0, len(coeffs)
    while first < last and coeffs[first] == 0:
        first += 1
    while last > first and coeffs[last - 1] == 0:
        last -= 1
    if first == last:
        return 0, ()
    return lo + first, tuple(coeffs[first:last])


@dataclass(frozen=True)
class LaurentPoly:
    """An integer Laurent polynomial sum(coeffs[m] * t**(lo + m))."""

    lo: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.coeffs:
            if self.coeffs[0] == 0 or self.coeffs[-1] == 0:
                raise ValueError("coefficients not in canonical form; use LaurentPoly.of")
        elif self.lo != 0:
            raise ValueError("zero polynomial must have lo == 0")

    @classmethod
    def of(cls, lo: int, coeffs: Sequence[int]) -> "LaurentPoly":
        return cls(*_canonical(lo, coeffs))

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.of(0, (c,))

    @classmethod
    def t_power(cls, k: int, c: int = 1) -> "LaurentPoly":
        return cls.of(k, (c,))

    @property
    def hi(self) -> int:
        """Highest exponent with nonzero coefficient (lo for the zero polynomial)."""
        return self.lo + max(len(self.coeffs) - 1, 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.lo if self.coeffs else 0, tuple(-c for c in self.coeffs))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for m, c in enumerate(self.coeffs):
            out[self.lo - lo + m] += c
        for m, c in enumerate(other.coeffs):
            out[other.lo - lo + m] += c
        return LaurentPoly.of(lo, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly.of(self.lo, tuple(c * other for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for m, a in enumerate(self.coeffs):
            if a:
                for p, b in enumerate(other.coeffs):
                    out[m + p] += a * b
        return LaurentPoly.of(self.lo + other.lo, out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t**k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.lo + k, self.coeffs)

    def mirror(self) -> "LaurentPoly":
        """Substitute t -> 1/t."""
        if self.is_zero():
            return self
        return LaurentPoly(-self.hi, tuple(reversed(self.coeffs)))

    def is_palindromic(self) -> bool:
        return self == self.mirror()

    def evaluate(self, c: int) -> int:
        """Evaluate at an integer; negative exponents require c in {1, -1}."""
        if self.lo < 0 and c not in (1, -1):
            raise ValueError("negative exponents only evaluate at units 1, -1")
        total = 0
        for m, co in enumerate(self.coeffs):
            e = self.lo + m
            total += co * (c ** e if e >= 0 else c ** (-e))
        return total

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ValueError if the quotient is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        q = _pdivexact(self.coeffs, other.coeffs)
        return LaurentPoly.of(self.lo - other.lo, q)

    def __str__(self) -> str:
        return format_laurent(self)


LaurentPoly.zero = LaurentPoly()
LaurentPoly.one = LaurentPoly(0, (1,))


def format_laurent(p: LaurentPoly) -> str:
    """Render as "lo=<lowest exponent>; coeffs=<space-separated integers>"."""
    if p.is_zero():
        return "lo=0; coeffs=0"
    return "lo=%d; coeffs=%s" % (p.lo, " ".join(str(c) for c in p.coeffs))


def parse_laurent(text: str) -> LaurentPoly:
    text = text.strip()
    try:
        lo_part, coeff_part = text.split(";")
        lo = int(lo_part.split("=")[1])
        coeffs = [int(tok) for tok in coeff_part.split("=")[1].split()]
    except (ValueError, IndexError) as exc:
        raise ValueError(f"malformed Laurent polynomial: {text!r}") from exc
    return LaurentPoly.of(lo, coeffs)


def normalize_knot_polynomial(p: LaurentPoly) -> LaurentPoly:
    """Multiply by the unit +-t**m that makes p palindromic with value 1 at t=1.

    Raises ValueError when no such unit exists (the input is not a knot
    Alexander polynomial up to units).
    """
    if p.is_zero():
        raise ValueError("zero polynomial cannot be normalized")
    span = p.lo + p.hi
    if span % 2:
        raise ValueError("odd exponent span cannot be centered")
    q = p.shift(-(span // 2))
    at_one = q.evaluate(1)
    if at_one == -1:
        q = -q
    elif at_one != 1:
        raise ValueError(f"value at t=1 is {at_one}, not a unit")
    if not q.is_palindromic():
        raise ValueError("not palindromic after centering")
    return q


# ---------------------------------------------------------------------------
# Determinants of Laurent-polynomial matrices.
#
# Bareiss fraction-free elimination over Z[t]; every division below is exact.
# Entries are handled internally as plain coefficient tuples (constant-first,
# no trailing zeros) after clearing a common power of t.


def _pmul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for m, x in enumerate(a):
        if x:
            for p, y in enumerate(b):
                out[m + p] += x * y
    return tuple(out)


def _psub(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = [0] * n
    for m, x in enumerate(a):
        out[m] = x
    for m, y in enumerate(b):
        out[m] -= y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _pdivexact(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not b:
        raise ZeroDivisionError
    if not a:
        return ()
    if len(a) < len(b):
        raise ValueError("inexact polynomial division")
    rem = list(a)
    lead = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(b) - 1]
        if c % lead:
            raise ValueError("inexact polynomial division")
        qk = c // lead
        q[k] = qk
        if qk:
            for m, bc in enumerate(b):
                rem[k + m] -= qk * bc
    if any(rem):
        raise ValueError("inexact polynomial division")
    while q and q[-1] == 0:
        q.pop()
    return tuple(q)


def _as_plain(e: LaurentPoly, up: int) -> tuple[int, ...]:
    if e.is_zero():
        return ()
    pad = e.lo + up
    return (0,) * pad + e.coeffs


def laurent_matrix_det(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Exact determinant of a square matrix of Laurent polynomials."""
    m = len(rows)
    for row in rows:
        if len(row) != m:
            raise ValueError("matrix must be square")
    if m == 0:
        return LaurentPoly.one
    los = [e.lo for row in rows for e in row if not e.is_zero()]
    up = -min(los) if los and min(los) < 0 else 0
    a = [[_as_plain(e, up) for e in row] for row in rows]
    sign = 1
    prev: tuple[int, ...] = (1,)
    for k in range(m - 1):
        if not a[k][k]:
            for r in range(k + 1, m):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        pivot = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            for j in range(k + 1, m):
                num = _psub(_pmul(a[i][j], pivot), _pmul(aik, a[k][j]))
                a[i][j] = _pdivexact(num, prev)
            a[i][k] = ()
        prev = pivot
    final = a[m - 1][m - 1]
    if sign < 0:
        final = tuple(-c for c in final)
    return LaurentPoly.of(-up * m, final)
