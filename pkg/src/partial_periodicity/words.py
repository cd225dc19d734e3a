"""Partial words, strong periods, and the extremal constructions.

Letters are small non-negative integers and the hole is ``None``.  Text form
uses ``a``, ``b``, ``c``, ... for letters and ``*`` for the hole.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass
from typing import Optional

HOLE = None
HOLE_CHAR = "*"

Symbol = Optional[int]


def matches(a: Symbol, b: Symbol) -> bool:
    return a is HOLE or b is HOLE or a == b


@dataclass(frozen=True)
class PartialWord:
    symbols: tuple[Symbol, ...]

    def __post_init__(self):
        for s in self.symbols:
            if s is not HOLE and (not isinstance(s, int) or s < 0 or s >= 26):
                raise ValueError(f"invalid symbol {s!r}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]

    @property
    def holes(self) -> int:
        return sum(1 for s in self.symbols if s is HOLE)

    @property
    def hole_positions(self) -> list[int]:
        return [i for i, s in enumerate(self.symbols) if s is HOLE]

    @property
    def letters(self) -> set[int]:
        return {s for s in self.symbols if s is not HOLE}

    def is_non_unary(self) -> bool:
        return len(self.letters) >= 2

    def __str__(self) -> str:
        return "".join(HOLE_CHAR if s is HOLE else string.ascii_lowercase[s]
                       for s in self.symbols)

    @classmethod
    def parse(cls, text: str) -> PartialWord:
        out = []
        for ch in text:
            if ch == HOLE_CHAR:
                out.append(HOLE)
            elif ch in string.ascii_lowercase:
                out.append(ord(ch) - ord("a"))
            else:
                raise ValueError(f"unexpected character {ch!r}")
        return cls(tuple(out))

    def canonical(self) -> PartialWord:
        """Rename letters in order of first occurrence (a, b, c, ...)."""
        names: dict[int, int] = {}
        out = []
        for s in self.symbols:
            if s is HOLE:
                out.append(HOLE)
            else:
                out.append(names.setdefault(s, len(names)))
        return PartialWord(tuple(out))

    def equivalent(self, other: PartialWord) -> bool:
        """Equality up to a bijective renaming of letters."""
        return self.canonical() == other.canonical()


def has_strong_period(w: PartialWord, p: int) -> bool:
    """Whether some solid word P of length p satisfies w[i] ~ P[i mod p].

    Equivalent to: within each residue class mod p, the solid symbols agree.
    """
    if p < 1:
        raise ValueError("period must be positive")
    seen: dict[int, int] = {}
    for i, s in enumerate(w.symbols):
        if s is HOLE:
            continue
        r = i % p
        if seen.setdefault(r, s) != s:
            return False
    return True


def _require_coprime(p: int, q: int) -> None:
    if math.gcd(p, q) != 1:
        raise ValueError(f"p={p} and q={q} must be coprime")


def fine_wilf_word(p: int, q: int) -> PartialWord:
    """A binary word of length p+q-2 with periods p and q but not period 1.

    Built by 2-colouring the two connected components of the graph on
    positions 0..p+q-3 with edges (i, i+p) and (i, i+q).
    """
    if not 1 < p < q:
        raise ValueError("need 1 < p < q")
    _require_coprime(p, q)
    n = p + q - 2
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for step in (p, q):
        for i in range(n - step):
            parent[find(i)] = find(i + step)
    roots = [find(i) for i in range(n)]
    if len(set(roots)) != 2:
        raise AssertionError(f"expected 2 components, found {len(set(roots))}")
    return PartialWord(tuple(0 if r == roots[0] else 1 for r in roots))


def w_word(p: int, q: int) -> PartialWord:
    """(S[0..p-3] ** k) S (** S[q..q+p-3])^k with k = q // p."""
    if not 2 < p < q:
        raise ValueError("need 2 < p < q")
    s = fine_wilf_word(p, q).symbols
    k = q // p
    left = (s[: p - 2] + (HOLE, HOLE)) * k
    right = ((HOLE, HOLE) + s[q: q + p - 2]) * k
    return PartialWord(left + s + right)


def extremal_word_s(n: int, p: int, q: int) -> PartialWord:
    """Grow S_{p,q} toward W_{p,q}** to length n: prepend first, then append.

    The result has exactly h_s(n, p, q) holes.
    """
    if not 2 < p < q:
        raise ValueError("need 2 < p < q")
    k = q // p
    lo, hi = p + q - 2, p + q + 2 * p * k
    if not lo <= n <= hi:
        raise ValueError(f"n must lie in [{lo}, {hi}]")
    w = w_word(p, q).symbols + (HOLE, HOLE)
    prefix_len = p * k
    extra = n - lo
    before = min(extra, prefix_len)
    after = extra - before
    start = prefix_len - before
    return PartialWord(w[start: prefix_len + lo + after])


def special_word(n: int, p: int, q: int, l: int) -> PartialWord:
    """The (p, q)-special partial word of length n pinned at position l.

    Position i holds ``b`` when both p and q divide l - i, a hole when exactly
    one does, and ``a`` otherwise.
    """
    if p < 2 or q < 2:
        raise ValueError("need p, q > 1")
    _require_coprime(p, q)
    if n < max(p, q):
        raise ValueError("n must be at least max(p, q)")
    if not 0 <= l < n:
        raise ValueError("l must be a position of the word")
    out: list[Symbol] = []
    for i in range(n):
        by_p = (l - i) % p == 0
        by_q = (l - i) % q == 0
        if by_p and by_q:
            out.append(1)
        elif by_p or by_q:
            out.append(HOLE)
        else:
            out.append(0)
    return PartialWord(tuple(out))
