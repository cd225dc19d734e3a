"""Standard Sturmian words and their link to the d-family thresholds.

``St(g1, ..., gm)`` is ``X_m`` where ``X_-1 = q``, ``X_0 = p`` and
``X_i = X_{i-1}^{g_i} X_{i-2}``.  For ``fr(g) = p/q`` the word has p letters
``q`` and q letters ``p``, and its first p+q-2 letters spell out which of p,
q divides each successive value of g_tilde.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .rationals import ContinuedFraction, Fraction, Parity, cf_expand, cf_value, reduce
from .thresholds import g_tilde

P = "p"
Q = "q"


@dataclass(frozen=True)
class DirectiveSequence:
    gammas: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(g, int) or g < 1 for g in self.gammas):
            raise ValueError(f"directive entries must be positive integers: {self.gammas}")

    @property
    def parity(self) -> Parity:
        return "even" if len(self.gammas) % 2 == 0 else "odd"


@dataclass(frozen=True)
class SturmianWord:
    symbols: str
    source: DirectiveSequence

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    def __str__(self) -> str:
        return self.symbols

    @property
    def parity(self) -> Parity:
        return self.source.parity


def sturmian(gamma: DirectiveSequence | tuple[int, ...]) -> SturmianWord:
    if not isinstance(gamma, DirectiveSequence):
        gamma = DirectiveSequence(tuple(gamma))
    older, old = Q, P
    for g in gamma.gammas:
        older, old = old, old * g + older
    return SturmianWord(old, gamma)


def parse_sturmian(text: str) -> str:
    """Validate a ``p``/``q`` string; the round-trip of ``str(word)``."""
    if set(text) - {P, Q}:
        raise ValueError(f"Sturmian text may contain only 'p' and 'q': {text!r}")
    return text


def fr(gamma: DirectiveSequence | tuple[int, ...]) -> Fraction:
    if not isinstance(gamma, DirectiveSequence):
        gamma = DirectiveSequence(tuple(gamma))
    return cf_value(ContinuedFraction((0,) + gamma.gammas))


def _check_pair(p: int, q: int) -> None:
    if not 1 < p < q or math.gcd(p, q) != 1:
        raise ValueError(f"need coprime 1 < p < q, got p={p}, q={q}")


def st_pq(p: int, q: int, parity: Parity) -> SturmianWord:
    _check_pair(p, q)
    coeffs = cf_expand(reduce(p, q), parity).coeffs
    return sturmian(DirectiveSequence(coeffs[1:]))


def g_tilde_from_sturmian(p: int, q: int, i: int) -> int:
    """Recover g_tilde(i, p, q) by walking St_{p,q}: each ``p`` advances to
    the next multiple of p, each ``q`` to the next multiple of q."""
    _check_pair(p, q)
    if not 0 <= i <= p + q - 3:
        raise ValueError(f"i must lie in [0, {p + q - 3}]")
    word = st_pq(p, q, "even").symbols
    mp = mq = 0
    value = 0
    for letter in word[: i + 1]:
        if letter == P:
            mp += 1
            value = mp * p
        else:
            mq += 1
            value = mq * q
    return value


def standard_words(a: int, b: int) -> list[SturmianWord]:
    """Every standard word with ``a`` letters q and ``b`` letters p."""
    if (a, b) == (0, 1):
        return [sturmian(())]
    if a == 0 or b == 0 or math.gcd(a, b) != 1:
        return []
    x = Fraction(a, b)
    out = []
    for parity in ("even", "odd"):
        coeffs = cf_expand(x, parity).coeffs
        if coeffs[0] == 0:
            out.append(sturmian(DirectiveSequence(coeffs[1:])))
    return out


def exact_prefixes(word: str) -> list[int]:
    """Lengths t such that ``word[:t]`` is itself a standard word."""
    return [t for t in range(1, len(word) + 1)
            if any(s.symbols == word[:t]
                   for s in standard_words(word[:t].count(Q), word[:t].count(P)))]


def sturmian_prefixes(word: str) -> list[tuple[int, Parity]]:
    """``(t, parity)`` for every standard word of length t that agrees with
    ``word`` on its first t - 1 letters.

    Exact prefixes are not enough: when q > 2p, St_{p,q} opens with more
    ``p``s than the words of 1/1, 1/2, ... allow, yet those fractions still
    bound the budgets.  Letting the last letter differ recovers every
    semiconvergent, with the parity telling on which side of p/q it lies.
    """
    out = set()
    for t in range(1, len(word) + 1):
        stem = word[: t - 1]
        for last in (P, Q):
            cand = stem + last
            for s in standard_words(cand.count(Q), cand.count(P)):
                if s.symbols.startswith(stem):
                    out.add((t, s.parity))
    return sorted(out)


def sturmian_prefix_lengths(p: int, q: int, bound: int) -> list[tuple[int, Parity]]:
    """Prefix lengths ``a + b`` of St_{p,q} for semiconvergents a/b of p/q.

    Even semiconvergents give even prefixes.  The full word (length p+q) is
    listed once per parity when ``bound`` reaches it.
    """
    from .rationals import semiconvergents

    _check_pair(p, q)
    if bound > p + q:
        raise ValueError("bound may not exceed p + q")
    x = reduce(p, q)
    out: list[tuple[int, Parity]] = []
    for s in semiconvergents(x):
        if s.is_infinite or s.size > bound:
            continue
        out.append((s.size, "even" if s < x else "odd"))
    if bound == p + q:
        out.extend([(p + q, "even"), (p + q, "odd")])
    return sorted(out)


def l_d_via_sturmian(h: int, p: int, q: int) -> int:
    """L^d from the Sturmian prefix structure of St_{p,q}.

    If some standard word of length h+4 follows St_{p,q} up to its last
    letter, the answer is g_tilde(l-2) + g_tilde(r-2) for the longest shorter
    such words of each parity (g_tilde(-1) = 0); otherwise g_tilde(h+2).
    """
    _check_pair(p, q)
    if not 0 <= h < p + q - 3:
        raise ValueError(f"h must lie in [0, {p + q - 4}]")
    found = sturmian_prefixes(st_pq(p, q, "even").symbols[: h + 4])
    if not any(t == h + 4 for t, _ in found):
        return g_tilde(h + 2, p, q)
    longest = {}
    for t, parity in found:
        if t < h + 4:
            longest[parity] = t
    return g_tilde(longest["even"] - 2, p, q) + g_tilde(longest["odd"] - 2, p, q)
