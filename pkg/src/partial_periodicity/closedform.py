"""Piecewise-linear tables of the thresholds as functions of p/q.

For a fixed budget h, each of g_tilde(h+2, p, q), L^d(h, p, q) and L(h, p, q)
is a linear form ``c_q*q + c_p*p + c_0`` on each of O(h) intervals of the
ratio p/q.  Breakpoints come from the h-special points
``l_i = (i-1)/(h+4-i)`` and the h-middle points ``m_i = i/(h+4-i)``.
"""

from __future__ import annotations

import bisect
import json
import math
import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import checked
from .rationals import ONE, ZERO, Fraction, best_approximations, parse_fraction, reduce

KINDS = ("g_tilde", "l_d", "l")

# each table is exact for h <= p + q - _OFFSET[kind]
_OFFSET = {"g_tilde": 5, "l_d": 3, "l": 3}


class SpecialPoint(NamedTuple):
    num: int
    den: int

    def reduced(self) -> Fraction:
        return reduce(self.num, self.den)


def special_points(h: int) -> tuple[list[SpecialPoint], list[SpecialPoint]]:
    """``(l_1..l_{h+4}, m_1..m_{h+4})`` as unreduced numerator/denominator pairs."""
    if h < 0:
        raise ValueError("h must be non-negative")
    n = h + 4
    ls = [SpecialPoint(i - 1, n - i) for i in range(1, n + 1)]
    ms = [SpecialPoint(i, n - i) for i in range(1, n + 1)]
    return ls, ms


@dataclass(frozen=True)
class LinearForm:
    c_q: int
    c_p: int
    c_0: int = 0

    def evaluate(self, p: int, q: int) -> int:
        return checked(self.c_q * q + self.c_p * p + self.c_0)

    def __str__(self) -> str:
        terms = []
        for coeff, var in ((self.c_q, "q"), (self.c_p, "p")):
            if coeff:
                body = var if abs(coeff) == 1 else f"{abs(coeff)}{var}"
                terms.append(("-" if coeff < 0 else "+") + body)
        if self.c_0:
            terms.append(f"{self.c_0:+d}")
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text[0] == "+" else text

    @classmethod
    def parse(cls, text: str) -> LinearForm:
        coeffs = {"q": 0, "p": 0, "": 0}
        pos = 0
        text = text.replace(" ", "").replace("−", "-")
        for m in re.finditer(r"([+-]?)(\d*)([pq]?)", text):
            if m.end() == m.start():
                continue
            if m.start() != pos or (not m.group(2) and not m.group(3)) \
                    or (pos and not m.group(1)):
                raise ValueError(f"cannot parse linear form {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            mag = int(m.group(2)) if m.group(2) else 1
            coeffs[m.group(3)] += sign * mag
            pos = m.end()
        if pos != len(text) or not text:
            raise ValueError(f"cannot parse linear form {text!r}")
        return cls(coeffs["q"], coeffs["p"], coeffs[""])


def _format_fraction(x: Fraction) -> str:
    return str(x.num) if x.den == 1 else str(x)


@dataclass(frozen=True)
class Piece:
    lo: Fraction
    hi: Fraction
    lo_closed: bool
    hi_closed: bool
    form: LinearForm

    def __post_init__(self):
        if self.hi < self.lo or (self.lo == self.hi and not (self.lo_closed and self.hi_closed)):
            raise ValueError(f"empty piece {self}")

    def contains(self, x: Fraction) -> bool:
        above = self.lo < x or (self.lo_closed and self.lo == x)
        below = x < self.hi or (self.hi_closed and self.hi == x)
        return above and below

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return (f"{self.form} on {left}{_format_fraction(self.lo)}, "
                f"{_format_fraction(self.hi)}{right}")


_PIECE_RE = re.compile(r"^(\S+) on ([\[(])\s*([0-9/]+)\s*,\s*([0-9/]+)\s*([\])])$")


def parse_piece(line: str) -> Piece:
    m = _PIECE_RE.match(line.strip())
    if not m:
        raise ValueError(f"cannot parse piece {line!r}")
    form, lb, lo, hi, rb = m.groups()
    return Piece(parse_fraction(lo), parse_fraction(hi), lb == "[", rb == "]",
                 LinearForm.parse(form))


@dataclass(frozen=True)
class PiecewiseThreshold:
    kind: str
    h: int
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        for a, b in zip(self.pieces, self.pieces[1:]):
            if b.lo < a.hi:
                raise ValueError(f"pieces overlap or are unsorted: {a} / {b}")

    def __len__(self) -> int:
        return len(self.pieces)

    def valid_for(self, p: int, q: int) -> bool:
        return self.h <= p + q - _OFFSET[self.kind]

    def locate(self, x: Fraction) -> Piece:
        idx = bisect.bisect_right(self.pieces, x, key=lambda piece: piece.lo)
        for j in (idx - 1, idx - 2):
            if j >= 0 and self.pieces[j].contains(x):
                return self.pieces[j]
        raise LookupError(f"{x} lies outside every piece of the h={self.h} table")

    def to_text(self) -> str:
        lines = [f"# {self.kind} h={self.h}"]
        lines.extend(str(piece) for piece in self.pieces)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> PiecewiseThreshold:
        header, *body = [ln for ln in text.splitlines() if ln.strip()]
        kind, h = _parse_header(header)
        return cls(kind, h, tuple(parse_piece(ln) for ln in body))

    def to_tsv(self) -> str:
        lines = [f"# {self.kind} h={self.h}", "\t".join(TSV_COLUMNS)]
        for pc in self.pieces:
            row = (pc.lo.num, pc.lo.den, int(pc.lo_closed), pc.hi.num, pc.hi.den,
                   int(pc.hi_closed), pc.form.c_q, pc.form.c_p, pc.form.c_0)
            lines.append("\t".join(map(str, row)))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_tsv(cls, text: str) -> PiecewiseThreshold:
        header, columns, *rows = text.splitlines()
        kind, h = _parse_header(header)
        if tuple(columns.split("\t")) != TSV_COLUMNS:
            raise ValueError("unexpected TSV columns")
        pieces = []
        for row in rows:
            if not row.strip():
                continue
            rec = dict(zip(TSV_COLUMNS, map(int, row.split("\t"))))
            pieces.append(_piece_from_record(rec))
        return cls(kind, h, tuple(pieces))

    def to_structured(self) -> dict:
        return {
            "kind": self.kind,
            "h": self.h,
            "pieces": [
                {
                    "lo_num": pc.lo.num, "lo_den": pc.lo.den, "lo_closed": pc.lo_closed,
                    "hi_num": pc.hi.num, "hi_den": pc.hi.den, "hi_closed": pc.hi_closed,
                    "c_q": pc.form.c_q, "c_p": pc.form.c_p, "c_0": pc.form.c_0,
                }
                for pc in self.pieces
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_structured(), indent=2)

    @classmethod
    def from_structured(cls, data: dict) -> PiecewiseThreshold:
        return cls(data["kind"], int(data["h"]),
                   tuple(_piece_from_record(rec) for rec in data["pieces"]))

    @classmethod
    def from_json(cls, text: str) -> PiecewiseThreshold:
        return cls.from_structured(json.loads(text))


TSV_COLUMNS = ("lo_num", "lo_den", "lo_closed", "hi_num", "hi_den", "hi_closed",
               "c_q", "c_p", "c_0")


def _parse_header(line: str) -> tuple[str, int]:
    m = re.fullmatch(r"#\s*(\w+)\s+h=(\d+)\s*", line)
    if not m:
        raise ValueError(f"bad table header {line!r}")
    return m.group(1), int(m.group(2))


def _piece_from_record(rec: dict) -> Piece:
    return Piece(
        Fraction(int(rec["lo_num"]), int(rec["lo_den"])),
        Fraction(int(rec["hi_num"]), int(rec["hi_den"])),
        bool(rec["lo_closed"]), bool(rec["hi_closed"]),
        LinearForm(int(rec["c_q"]), int(rec["c_p"]), int(rec["c_0"])),
    )


def _clip(pieces: list[Piece], cut: Fraction = ZERO, cut_closed: bool = False) -> list[Piece]:
    """Restrict pieces to the part of (0, 1) above ``cut``.

    A piece straddling the cut starts just after it (open).  Pieces that only
    touch the cut keep their own closure unless ``cut_closed`` is false and
    they reduce to the single cut point.
    """
    out = []
    for pc in pieces:
        lo, lo_closed, hi, hi_closed = pc.lo, pc.lo_closed, pc.hi, pc.hi_closed
        if hi < cut or (hi == cut and not cut_closed):
            continue
        if lo < cut:
            lo, lo_closed = cut, cut_closed
        if lo == ZERO:
            lo_closed = False
        if not lo < ONE:
            continue
        if not hi < ONE:
            hi, hi_closed = ONE, False
        if lo == hi and not (lo_closed and hi_closed):
            continue
        out.append(Piece(lo, hi, lo_closed, hi_closed, pc.form))
    return _merge_points(out)


def _merge_points(pieces: list[Piece]) -> list[Piece]:
    # a point piece whose value is already covered by a closed neighbour adds nothing
    out = []
    for i, pc in enumerate(pieces):
        if pc.lo == pc.hi:
            prev = out[-1] if out else None
            nxt = pieces[i + 1] if i + 1 < len(pieces) else None
            if (prev and prev.hi == pc.lo and prev.hi_closed) or \
               (nxt and nxt.lo == pc.hi and nxt.lo_closed):
                continue
        out.append(pc)
    return out


def _gaps(h: int):
    """Yield ``(i, l_i, m_i, l_{i+1})`` for the gaps meeting (0, 1)."""
    ls, ms = special_points(h)
    for i in range(1, h + 4):
        lo = ls[i - 1].reduced()
        if not lo < ONE:
            break
        yield i, lo, ms[i - 1], ls[i].reduced()


def g_tilde_piecewise(h: int) -> PiecewiseThreshold:
    """Table of g_tilde(h + 2, p, q): ``(h+4-i)p`` on [l_i, m_i] and ``iq`` on
    [m_i, l_{i+1}].  Valid when h + 2 <= p + q - 3."""
    n = h + 4
    pieces = []
    for i, lo, mid, hi in _gaps(h):
        m = mid.reduced()
        pieces.append(Piece(lo, m, True, True, LinearForm(0, n - i)))
        pieces.append(Piece(m, hi, True, True, LinearForm(i, 0)))
    return PiecewiseThreshold("g_tilde", h, tuple(_clip(pieces)))


def _l_d_pieces(h: int) -> list[Piece]:
    n = h + 4
    pieces = []
    for i, lo, mid, hi in _gaps(h):
        left, right = best_approximations(mid.reduced(), h + 3)
        pieces.append(Piece(lo, left, True, True, LinearForm(0, n - i)))
        if left != right:
            pieces.append(Piece(left, right, False, False,
                                LinearForm(left.num, right.den)))
        pieces.append(Piece(right, hi, True, True, LinearForm(i, 0)))
    return pieces


def l_d_piecewise(h: int) -> PiecewiseThreshold:
    """Table of L^d(h, p, q), valid when h <= p + q - 3.

    Each gap [l_i, l_{i+1}] splits around the best (h+3)-bounded
    approximations a/b <= m_i <= c/d: ``(h+4-i)p`` up to a/b, ``aq + dp``
    strictly between, and ``iq`` from c/d on.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    return PiecewiseThreshold("l_d", h, tuple(_clip(_l_d_pieces(h))))


def _l_s_form(h: int) -> LinearForm:
    # l_s is linear in p and q with these coefficients
    return LinearForm(1, -(-(h + 1) // 2), -((h + 1) % 2))


def l_piecewise(h: int) -> PiecewiseThreshold:
    """Table of L(h, p, q) for coprime 2 < p < q with h <= p + q - 3.

    The s family wins for p/q < 1/ceil(h/2) (everywhere when h <= 2), and for
    h = 4 also above 2/3; elsewhere the L^d table applies.  Seams between the
    two families sit at fractions no admissible pair reaches.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    form = _l_s_form(h)
    half = -(-h // 2)
    if half <= 1:
        return PiecewiseThreshold("l", h, (Piece(ZERO, ONE, False, False, form),))
    cut = Fraction(1, half)
    pieces = [Piece(ZERO, cut, False, False, form)]
    pieces.extend(_clip(_l_d_pieces(h), cut, cut_closed=False))
    if h == 4:
        top = Fraction(2, 3)
        kept = []
        for pc in pieces[1:]:
            if not pc.lo < top:
                continue
            if top < pc.hi:
                pc = Piece(pc.lo, top, pc.lo_closed, True, pc.form)
            kept.append(pc)
        pieces = [pieces[0], *kept, Piece(top, ONE, False, False, form)]
    return PiecewiseThreshold("l", h, tuple(pieces))


def eval_piecewise(t: PiecewiseThreshold, p: int, q: int) -> int:
    """Evaluate the table at coprime 2 < p < q inside its validity range."""
    if not 2 < p < q or math.gcd(p, q) != 1:
        raise ValueError(f"need coprime 2 < p < q, got p={p}, q={q}")
    if not t.valid_for(p, q):
        raise ValueError(
            f"the h={t.h} {t.kind} table needs h <= p + q - {_OFFSET[t.kind]}")
    return t.locate(Fraction(p, q)).form.evaluate(p, q)


def table_for(kind: str, h: int) -> PiecewiseThreshold:
    builders = {"g_tilde": g_tilde_piecewise, "l_d": l_d_piecewise, "l": l_piecewise}
    if kind not in builders:
        raise ValueError(f"unknown table kind {kind!r}")
    return builders[kind](h)
