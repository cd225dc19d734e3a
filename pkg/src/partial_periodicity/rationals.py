"""Reduced non-negative fractions, continued fractions and Farey descent.

Everything here is exact integer arithmetic.  The improper fraction 1/0 is
admitted and compares greater than every finite fraction, which is what the
Stern-Brocot / Farey descent needs as its initial right bound.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator, Literal

from .errors import checked, checked_mul

Parity = Literal["even", "odd"]


@functools.total_ordering
@dataclass(frozen=True)
class Fraction:
    num: int
    den: int

    def __post_init__(self):
        if self.num < 0 or self.den < 0:
            raise ValueError(f"negative component in {self.num}/{self.den}")
        if self.num == 0 and self.den == 0:
            raise ValueError("0/0 is not a fraction")
        if math.gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")
        checked(self.num)
        checked(self.den)

    def __lt__(self, other: Fraction) -> bool:
        if not isinstance(other, Fraction):
            return NotImplemented
        return checked_mul(self.num, other.den) < checked_mul(other.num, self.den)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def size(self) -> int:
        """num + den, the budget measure used by F_k."""
        return self.num + self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"


ZERO = Fraction(0, 1)
ONE = Fraction(1, 1)
INFINITY = Fraction(1, 0)


def reduce(num: int, den: int) -> Fraction:
    if num == 0 and den == 0:
        raise ValueError("0/0 is not a fraction")
    g = math.gcd(num, den)
    return Fraction(num // g, den // g)


def parse_fraction(text: str) -> Fraction:
    """Parse ``"a/b"`` or a bare integer ``"a"``."""
    if "/" in text:
        a, b = text.split("/", 1)
        return reduce(int(a), int(b))
    return reduce(int(text), 1)


def mediant(a: Fraction, c: Fraction) -> Fraction:
    return reduce(checked(a.num + c.num), checked(a.den + c.den))


def _require_positive_finite(x: Fraction) -> None:
    if x.num == 0 or x.den == 0:
        raise ValueError(f"expected a finite positive fraction, got {x}")


@dataclass(frozen=True)
class ContinuedFraction:
    """``[g0; g1, ..., gm]``; the empty tuple is the improper ``[;] = 1/0``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs:
            if self.coeffs[0] < 0:
                raise ValueError("leading coefficient must be non-negative")
            if any(g < 1 for g in self.coeffs[1:]):
                raise ValueError("trailing coefficients must be positive")

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    @property
    def parity(self) -> Parity:
        # [;] is treated as odd
        if not self.coeffs:
            return "odd"
        return "even" if self.m % 2 == 0 else "odd"

    def __str__(self) -> str:
        if not self.coeffs:
            return "[;]"
        head, *tail = self.coeffs
        return f"[{head};" + ",".join(map(str, tail)) + "]"


def cf_expand(x: Fraction, parity: Parity) -> ContinuedFraction:
    """Continued fraction of ``x`` with the requested parity of ``m``."""
    _require_positive_finite(x)
    coeffs = []
    a, b = x.num, x.den
    while b:
        coeffs.append(a // b)
        a, b = b, a % b
    # Euclid ends with g_m >= 2 (or m = 0); the other form splits off a 1.
    if (len(coeffs) - 1) % 2 != (0 if parity == "even" else 1):
        coeffs[-1] -= 1
        coeffs.append(1)
    return ContinuedFraction(tuple(coeffs))


def cf_value(cf: ContinuedFraction) -> Fraction:
    h_prev, h = 0, 1
    k_prev, k = 1, 0
    for g in cf.coeffs:
        h_prev, h = h, checked(g * h + h_prev)
        k_prev, k = k, checked(g * k + k_prev)
    return Fraction(h, k)


def farey_pairs_slow(x: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Every pair reported by the unit-step Farey process for ``x``.

    Takes O(x.num + x.den) steps; use :func:`left_k`/:func:`right_k` for
    anything beyond desk-sized inputs.
    """
    _require_positive_finite(x)
    left, right = ZERO, INFINITY
    pairs = []
    while True:
        pairs.append((left, right))
        med = mediant(left, right)
        if med < x:
            left = med
        elif med == x:
            break
        else:
            right = med
    return pairs


def _descent_runs(x: Fraction) -> Iterator[tuple[Fraction, Fraction, str, int, bool]]:
    """Batched Stern-Brocot descent toward ``x``.

    Yields ``(left, right, side, steps, hits)`` for every run of equal moves:
    the bracket before the run, which endpoint moves (``"left"`` or
    ``"right"``), how many single moves the run contains, and whether its
    last move lands on ``x`` itself.
    """
    p, q = x.num, x.den
    a, b, c, d = 0, 1, 1, 0
    while True:
        med_num, med_den = a + c, b + d
        lhs, rhs = checked_mul(med_num, q), checked_mul(p, med_den)
        if lhs == rhs:
            yield Fraction(a, b), Fraction(c, d), "left", 1, True
            return
        if lhs < rhs:
            # (a + t c)/(b + t d) <= x  <=>  t (c q - p d) <= p b - a q
            gap = checked_mul(p, b) - checked_mul(a, q)
            step = checked_mul(c, q) - checked_mul(p, d)
            t, rem = divmod(gap, step)
            hits = rem == 0
            yield Fraction(a, b), Fraction(c, d), "left", t, hits
            if hits:
                return
            a, b = a + t * c, b + t * d
        else:
            gap = checked_mul(c, q) - checked_mul(p, d)
            step = checked_mul(p, b) - checked_mul(a, q)
            t, rem = divmod(gap, step)
            hits = rem == 0
            yield Fraction(a, b), Fraction(c, d), "right", t, hits
            if hits:
                return
            c, d = c + t * a, d + t * b


def semiconvergents(x: Fraction) -> list[Fraction]:
    """All semiconvergents of ``x`` (1/0 included, ``x`` excluded).

    These are exactly the endpoints visited by the Farey process, listed in
    the order the descent discovers them (non-decreasing ``num + den``).
    """
    _require_positive_finite(x)
    out = [INFINITY, ZERO]
    for left, right, side, t, hits in _descent_runs(x):
        last = t - 1 if hits else t
        for s in range(1, last + 1):
            if side == "left":
                out.append(Fraction(left.num + s * right.num, left.den + s * right.den))
            else:
                out.append(Fraction(right.num + s * left.num, right.den + s * left.den))
    return out


def best_approximations(x: Fraction, k: int) -> tuple[Fraction, Fraction]:
    """``(Left_k(x), Right_k(x))`` in O(log k) arithmetic operations."""
    if k < 1:
        raise ValueError("k must be at least 1")
    _require_positive_finite(x)
    if x.size <= k:
        return x, x
    for left, right, side, t, hits in _descent_runs(x):
        a, b, c, d = left.num, left.den, right.num, right.den
        moving, fixed = (a + b, c + d) if side == "left" else (c + d, a + b)
        budget = (k - moving) // fixed
        if budget >= t and not hits:
            continue
        # x itself is out of budget, so a run ending on x stops one short
        s = min(budget, t - 1 if hits else t)
        if side == "left":
            return Fraction(a + s * c, b + s * d), right
        return left, Fraction(c + s * a, d + s * b)
    raise AssertionError("descent ended without reaching the budget")


def left_k(x: Fraction, k: int) -> Fraction:
    """max{a in F_k : a <= x}."""
    return best_approximations(x, k)[0]


def right_k(x: Fraction, k: int) -> Fraction:
    """min{a in F_k : a >= x}."""
    return best_approximations(x, k)[1]


def is_best_left_approx(a: Fraction, x: Fraction) -> bool:
    """Arithmetic test for ``a`` being a best left approximation of ``x``.

    With ``x = p/q``: ``a.den == floor(a.num q / p) + 1`` and ``a.num q mod p``
    is a strict prefix maximum of the sequence ``i q mod p``.
    """
    _require_positive_finite(x)
    if not a < x:
        raise ValueError(f"{a} is not left of {x}")
    p, q = x.num, x.den
    if a.den != (a.num * q) // p + 1:
        return False
    target = (a.num * q) % p
    return all(target > (i * q) % p for i in range(a.num))


def is_best_right_approx(c: Fraction, x: Fraction) -> bool:
    """Mirror of :func:`is_best_left_approx` for ``c > x``."""
    _require_positive_finite(x)
    if not x < c:
        raise ValueError(f"{c} is not right of {x}")
    p, q = x.num, x.den
    if c.num != (c.den * p) // q + 1:
        return False
    target = (c.den * p) % q
    return all(target > (i * p) % q for i in range(c.den))
