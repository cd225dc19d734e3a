"""Threshold and holes functions for two strong periods.

``L(h, p, q)`` is the least length n such that every partial word with h
holes, periods p and q, and length >= n also has period gcd(p, q).  ``H`` is
its dual: the fewest holes admitting a length-n counterexample, and
``L(h) = min{n : H(n) > h}``.

Two word families realise the extremes: the "s" family grown from a
Fine-Wilf word (``h_s``/``l_s``) and the "d" family of special words
(``h_d``/``l_d``).  ``l_full`` and ``h_full`` pick whichever is optimal.
"""

from __future__ import annotations

import bisect
import math

from .errors import TrivialInstanceError, checked, checked_mul
from .rationals import best_approximations, reduce


def _coprime_pair(p: int, q: int, min_period: int = 2) -> None:
    if p < min_period or q < min_period:
        raise ValueError(f"periods must be at least {min_period}, got p={p}, q={q}")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} must be coprime")


def _ordered_coprime(p: int, q: int, min_p: int) -> None:
    _coprime_pair(p, q, min_p)
    if p >= q:
        raise ValueError(f"need p < q, got p={p}, q={q}")


def g(n: int, p: int, q: int) -> int:
    """How many of 1..n are multiples of exactly one of p and q."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return n // p + n // q - 2 * (n // checked_mul(p, q))


def g_tilde(k: int, p: int, q: int) -> int:
    """Smallest n with g(n, p, q) > k; by convention 0 for k = -1.

    Binary search over multiples of p and of q after peeling off whole
    blocks of length pq (each block adds p + q - 2 to g).
    """
    if k < -1:
        raise ValueError("k must be at least -1")
    _coprime_pair(p, q)
    if k == -1:
        return 0
    pq = checked_mul(p, q)
    blocks, r = divmod(k, p + q - 2)
    # within a block the answer is below pq, i.e. j*p with j < q or j*q with j < p
    jp = bisect.bisect_right(range(1, q), r, key=lambda j: g(j * p, p, q)) + 1
    jq = bisect.bisect_right(range(1, p), r, key=lambda j: g(j * q, p, q)) + 1
    best = min(jp * p if jp < q else pq, jq * q if jq < p else pq)
    return checked(checked_mul(blocks, pq) + best)


def g_tilde_sequence(count: int, p: int, q: int) -> list[int]:
    """g_tilde(0..count-1) by merging the multiples of p and q."""
    _coprime_pair(p, q)
    pq = p * q
    out: list[int] = []
    i, j = p, q
    while len(out) < count:
        nxt = min(i, j)
        if i == nxt:
            i += p
        if j == nxt:
            j += q
        if nxt % pq:
            out.append(nxt)
    return out


def h_s(n: int, p: int, q: int) -> int:
    _ordered_coprime(p, q, 2)
    if n < q:
        raise ValueError("n must be at least q")
    return (n - q) // p + (n - q + 1) // p


def l_s(h: int, p: int, q: int) -> int:
    _ordered_coprime(p, q, 2)
    if h < 0:
        raise ValueError("h must be non-negative")
    return checked(-(-(h + 1) // 2) * p + q - (h + 1) % 2)


def _h_d_scan(n: int, p: int, q: int) -> int:
    return min(g(l, p, q) + g(n - l - 1, p, q) for l in range((n + 1) // 2))


def h_d_direct(n: int, p: int, q: int) -> int:
    """min over pin positions l of g(l) + g(n - l - 1).

    Lengths beyond one period block are folded back using
    H^d(n + pq) = H^d(n) + p + q - 2, so the scan costs O(min(n, pq)).
    """
    _coprime_pair(p, q)
    if n < max(p, q):
        raise ValueError("n must be at least max(p, q)")
    pq = checked_mul(p, q)
    floor = max(p, q) + pq
    if n < floor + pq:
        return _h_d_scan(n, p, q)
    blocks = (n - floor) // pq
    return _h_d_scan(n - blocks * pq, p, q) + blocks * (p + q - 2)


def l_d_linear(h: int, p: int, q: int) -> int:
    """max over splits k of g_tilde(k) + g_tilde(h - k); O(h)."""
    if h < 0:
        raise ValueError("h must be non-negative")
    seq = g_tilde_sequence(h + 1, p, q)
    return max(seq[k] + seq[h - k] for k in range(h // 2 + 1))


def l_d_fast(h: int, p: int, q: int) -> int:
    """L^d(h, p, q) in O(log p + log q) arithmetic operations.

    Budgets are reduced modulo p + q - 2 (each full round adds pq); the
    remainder is decided by the best (h+3)-bounded approximations a/b, c/d
    of p/q: if a+b+c+d = h+4 the answer splits as g_tilde(a+b-2) +
    g_tilde(c+d-2), otherwise it is g_tilde(h+2).
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    _coprime_pair(p, q, 3)
    pq = checked_mul(p, q)
    rounds, r = divmod(h, p + q - 2)
    base = checked_mul(rounds, pq)
    if r == p + q - 3:
        return checked(base + pq)
    left, right = best_approximations(reduce(p, q), r + 3)
    if left.size + right.size == r + 4:
        value = g_tilde(left.size - 2, p, q) + g_tilde(right.size - 2, p, q)
    else:
        value = g_tilde(r + 2, p, q)
    return checked(base + value)


def h_d_inverse(n: int, p: int, q: int) -> int:
    """H^d recovered as min{h : L^d(h) > n}; cross-check for ``h_d_direct``."""
    _coprime_pair(p, q, 3)
    if n < max(p, q):
        raise ValueError("n must be at least max(p, q)")
    hi = 1
    while l_d_fast(hi, p, q) <= n:
        hi *= 2
    return bisect.bisect_right(range(hi + 1), n, key=lambda h: l_d_fast(h, p, q))


def uses_h_s(n: int, p: int, q: int) -> bool:
    """Whether the optimal length-n counterexample comes from the s family."""
    ceil_qp = -(-q // p)
    return n <= q + p * ceil_qp - 1 or 3 * q <= n <= q + 3 * p - 1


def h_full(n: int, p: int, q: int, method: str = "direct") -> int:
    """H(n, p, q) for coprime 2 < p < q and n >= p + q - 2.

    ``method="inverse"`` evaluates the d-branch by inverting ``l_d_fast``,
    which stays logarithmic for huge n.
    """
    _ordered_coprime(p, q, 3)
    if n < p + q - 2:
        raise ValueError("n must be at least p + q - 2")
    if uses_h_s(n, p, q):
        return h_s(n, p, q)
    if method == "direct":
        return h_d_direct(n, p, q)
    if method == "inverse":
        return h_d_inverse(n, p, q)
    raise ValueError(f"unknown method {method!r}")


def l_two(h: int, q: int) -> int:
    """L(h, 2, q) for odd q > 2.

    Every q further holes cost 2q extra length; within a round each hole
    costs one position: q * (h // q + 1) + h + 1.

    This equals (2q+1) * (h // q) + h % q + q + 1.  The form sometimes quoted
    without the trailing ``q + 1`` gives 0 at h = 0 instead of the Fine-Wilf
    value q + 1; the version here is checked against the separator oracle.
    """
    if q <= 2 or q % 2 == 0:
        raise ValueError("q must be odd and greater than 2")
    if h < 0:
        raise ValueError("h must be non-negative")
    return checked(checked_mul(q, h // q + 1) + h + 1)


def uses_l_s(h: int, p: int, q: int) -> bool:
    """Routing rule for coprime 2 < p < q: q/p > ceil(h/2), or h = 4 and q/p < 3/2."""
    return q > -(-h // 2) * p or (h == 4 and 2 * q < 3 * p)


def l_full(h: int, p: int, q: int) -> int:
    """L(h, p, q) for any p, q > 1 whose gcd is neither p nor q."""
    if h < 0:
        raise ValueError("h must be non-negative")
    if p < 2 or q < 2:
        raise ValueError("periods must be at least 2")
    checked(p)
    checked(q)
    d = math.gcd(p, q)
    if d in (p, q):
        raise TrivialInstanceError(
            f"gcd({p}, {q}) = {d} is one of the periods; the lemma holds at every length")
    p, q = sorted((p // d, q // d))
    if p == 2:
        value = l_two(h, q)
    elif uses_l_s(h, p, q):
        value = l_s(h, p, q)
    else:
        value = l_d_fast(h, p, q)
    return checked_mul(d, value)
