"""Friezes as triangular tables ``m[a, b]`` for ``lo <= a <= b <= hi``.

Entries are filled one anti-diagonal at a time from the quiddity row with
``m[a, b+1] = (m[a, b] m[a+1, b+1] - 1) / m[a+1, b]``.  Every division is
checked for exactness.  A fountain frieze leaves the pairs ``a < f < b``
undefined.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator, Mapping, Sequence

from .arcs import Arc
from .errors import (
    DoesNotCloseError,
    FountainCrossingError,
    MismatchError,
    NonIntegralEntryError,
    NonPositiveEntryError,
)
from .triangulation import TriangulationWindow, quiddity_at

KINDS = ("finite", "right", "left", "fountain")


@dataclass(frozen=True, eq=False)
class FriezeArray:
    kind: str
    lo: int
    hi: int
    entries: Mapping = field(repr=False)
    fountain: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown frieze kind {self.kind!r}")

    @property
    def m(self) -> int:
        """Number of vertices of the window."""
        return self.hi - self.lo + 1

    @property
    def width(self) -> int | None:
        """Number of nontrivial rows of a finite frieze."""
        return self.m - 3 if self.kind == "finite" else None

    def in_hole(self, a: int, b: int) -> bool:
        f = self.fountain
        return f is not None and a < f < b

    def __getitem__(self, key):
        a, b = key
        if not (self.lo <= a <= b <= self.hi):
            raise KeyError(f"({a},{b}) lies outside the window [{self.lo},{self.hi}]")
        if self.in_hole(a, b):
            raise FountainCrossingError(
                f"({a},{b}) crosses the fountain point {self.fountain}", a=a, b=b, fountain=self.fountain
            )
        return self.entries[(a, b)]

    def get(self, a: int, b: int, default=None):
        try:
            return self[a, b]
        except (KeyError, FountainCrossingError):
            return default

    def defined_pairs(self) -> Iterator[tuple[int, int]]:
        for a in range(self.lo, self.hi + 1):
            for b in range(a, self.hi + 1):
                if not self.in_hole(a, b):
                    yield a, b

    def row(self, a: int) -> list:
        """``m[a, a], m[a, a+1], ...`` up to the window edge; ``None`` in the hole."""
        return [self.get(a, b) for b in range(a, self.hi + 1)]

    def rows(self) -> list[list]:
        return [self.row(a) for a in range(self.lo, self.hi)]

    def quiddity(self) -> list:
        return [self.get(a, a + 2) for a in range(self.lo, self.hi - 1)]

    def diamonds(self) -> Iterator[tuple[int, int]]:
        """Pairs ``(a, b)`` with ``a + 1 <= b`` whose whole diamond is defined."""
        for a in range(self.lo, self.hi):
            for b in range(a + 1, self.hi):
                cells = ((a, b), (a + 1, b + 1), (a + 1, b), (a, b + 1))
                if all(not self.in_hole(*c) for c in cells):
                    yield a, b

    def diamond_defect(self, a: int, b: int):
        """``m[a,b] m[a+1,b+1] - m[a+1,b] m[a,b+1]``."""
        return self[a, b] * self[a + 1, b + 1] - self[a + 1, b] * self[a, b + 1]

    def one_entries(self) -> set:
        return {Arc(a, b) for a, b in self.defined_pairs() if b > a and self[a, b] == 1}

    def map(self, fn) -> "FriezeArray":
        return FriezeArray(self.kind, self.lo, self.hi, {k: fn(v) for k, v in self.entries.items()}, self.fountain)

    def __eq__(self, other):
        if not isinstance(other, FriezeArray):
            return NotImplemented
        return (self.kind, self.lo, self.hi, self.fountain, dict(self.entries)) == (
            other.kind, other.lo, other.hi, other.fountain, dict(other.entries))

    def __hash__(self):
        return hash((self.kind, self.lo, self.hi, self.fountain, len(self.entries)))

    def to_json(self) -> dict:
        def enc(v):
            return v if isinstance(v, int) else str(v)

        return {
            "kind": self.kind,
            "lo": self.lo,
            "hi": self.hi,
            "fountain": self.fountain,
            "entries": [[a, b, enc(self.entries[(a, b)])] for a, b in sorted(self.entries)],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FriezeArray":
        entries = {(a, b): v for a, b, v in data["entries"]}
        return cls(data["kind"], data["lo"], data["hi"], entries, data.get("fountain"))


def _fill(lo: int, hi: int, quiddity: Mapping[int, Any], fountain: int | None, check: bool = True) -> dict:
    """Fill ``m[a, b]`` for ``lo <= a <= b <= hi`` outside the hole.

    ``quiddity[v]`` is the value at vertex ``v`` (i.e. ``m[v-1, v+1]``).
    """
    m: dict = {}
    for a in range(lo, hi + 1):
        m[(a, a)] = 0
    for a in range(lo, hi):
        m[(a, a + 1)] = 1
    for a in range(lo, hi - 1):
        if fountain is not None and a < fountain < a + 2:
            continue
        m[(a, a + 2)] = _checked(quiddity[a + 1], a, a + 2, check)
    for d in range(3, hi - lo + 1):
        for a in range(lo, hi - d + 1):
            b = a + d
            if fountain is not None and a < fountain < b:
                continue
            num = m[(a, b - 1)] * m[(a + 1, b)] - 1
            den = m[(a + 1, b - 1)]
            q, r = divmod(num, den)
            if r:
                raise NonIntegralEntryError(f"m[{a},{b}] = {num}/{den} is not an integer", a=a, b=b)
            m[(a, b)] = _checked(q, a, b, check)
    return m


def _checked(value, a, b, check=True):
    if check and value <= 0:
        raise NonPositiveEntryError(f"m[{a},{b}] = {value} is not positive", a=a, b=b, value=value)
    return value


def frieze_from_quiddity(q: Sequence, kind: str = "right", lo: int = 0,
                         fountain: int | None = None) -> FriezeArray:
    """Build a frieze from its quiddity row.

    ``q[i]`` is the value at vertex ``lo + 1 + i``, i.e. ``m[lo+i, lo+i+2]``.
    ``finite``: ``q`` is the cyclic quiddity of an ``m``-gon on ``lo..lo+m-1``
    (the last entry belongs to ``lo``) and the frieze must close: its rows
    reach 0 exactly at distance ``m``.  Otherwise the window is
    ``lo..lo+len(q)+1``; for ``fountain`` kind the entry at the fountain point
    is ignored.
    """
    q = list(q)
    if kind not in KINDS:
        raise ValueError(f"unknown frieze kind {kind!r}")
    if any(not isinstance(v, int) for v in q if v is not None):
        raise TypeError("quiddity entries must be integers")
    if kind == "finite":
        return _finite(q, lo)
    hi = lo + len(q) + 1
    if kind == "right":
        fountain = lo if fountain is None else fountain
    elif kind == "left":
        fountain = hi if fountain is None else fountain
    elif fountain is None:
        raise ValueError("a fountain frieze needs a fountain point")
    quid = {lo + 1 + i: v for i, v in enumerate(q)}
    for v, val in quid.items():
        if v != fountain and (val is None or val <= 0):
            raise NonPositiveEntryError(f"quiddity at {v} must be positive", v=v, value=val)
    return FriezeArray(kind, lo, hi, _fill(lo, hi, quid, fountain), fountain)


def _finite(q: list, lo: int) -> FriezeArray:
    m = len(q)
    if m < 3:
        raise DoesNotCloseError("a finite frieze needs at least three vertices", m=m)
    if any(v is None or v <= 0 for v in q):
        raise NonPositiveEntryError("quiddity entries must be positive", quiddity=q)
    # unroll two periods so each start vertex sees a full row
    ext = {lo + 1 + i: q[i % m] for i in range(2 * m + 1)}
    full = _fill_rows(lo, m, ext)
    entries = {(a, b): v for (a, b), v in full.items() if lo <= a <= b <= lo + m - 1}
    return FriezeArray("finite", lo, lo + m - 1, entries)


def _fill_rows(lo: int, m: int, ext: Mapping[int, int]) -> dict:
    """Rows starting at ``lo..lo+m-1`` out to distance ``m``, checking closure."""
    hi = lo + 2 * m - 1
    vals: dict = {}
    for a in range(lo, hi + 1):
        vals[(a, a)] = 0
    for a in range(lo, hi):
        vals[(a, a + 1)] = 1
    for a in range(lo, hi - 1):
        vals[(a, a + 2)] = ext[a + 1]
    for d in range(3, m + 1):
        for a in range(lo, hi - d + 1):
            b = a + d
            num = vals[(a, b - 1)] * vals[(a + 1, b)] - 1
            den = vals[(a + 1, b - 1)]
            if den == 0:
                raise NonPositiveEntryError(f"m[{a + 1},{b - 1}] = 0 before the row closes", a=a + 1, b=b - 1, value=0)
            q, r = divmod(num, den)
            if r:
                raise NonIntegralEntryError(f"m[{a},{b}] = {num}/{den} is not an integer", a=a, b=b)
            vals[(a, b)] = q
    for a in range(lo, lo + m):
        for b in range(a + 2, a + m):
            if vals[(a, b)] <= 0:
                raise NonPositiveEntryError(
                    f"m[{a},{b}] = {vals[(a, b)]} is not positive", a=a, b=b, value=vals[(a, b)])
        if vals[(a, a + m)] != 0:
            raise DoesNotCloseError(
                f"row {a} does not return to 0 at distance {m}", a=a, value=vals[(a, a + m)])
    return vals


def frieze_from_window(w: TriangulationWindow) -> FriezeArray:
    """Integral frieze whose quiddity counts triangles at each vertex of ``w``.

    A window without fountain is treated as a closed polygon.
    """
    kind = w.kind()
    if kind == "finite":
        vs = list(w.vertices)
        q = [quiddity_at(w, v, closed=True) for v in vs[1:] + vs[:1]]
        return _finite(q, w.lo)
    quid = {v: quiddity_at(w, v) for v in range(w.lo + 1, w.hi) if v != w.fountain}
    return FriezeArray(kind, w.lo, w.hi, _fill(w.lo, w.hi, quid, w.fountain), w.fountain)


def entry_one_iff_arc(f: FriezeArray, w: TriangulationWindow) -> None:
    for a, b in f.defined_pairs():
        if b == a:
            continue
        is_one = f[a, b] == 1
        if is_one != (Arc(a, b) in w.arcs):
            raise MismatchError(
                f"m[{a},{b}] = {f[a, b]} but ({a},{b}) is {'not ' if is_one else ''}an arc",
                a=a, b=b, value=str(f[a, b]),
            )


def shift_frieze(f: FriezeArray, i: int) -> FriezeArray:
    """``m'[a, b] = m[a-i, b-i]``."""
    entries = {(a + i, b + i): v for (a, b), v in f.entries.items()}
    fountain = None if f.fountain is None else f.fountain + i
    return FriezeArray(f.kind, f.lo + i, f.hi + i, entries, fountain)


def check_diamond_rule(f: FriezeArray, rhs=None) -> None:
    """Check ``m[a,b] m[a+1,b+1] - m[a+1,b] m[a,b+1] = m[a,a+1] m[b,b+1]``.

    ``rhs(a, b)`` overrides the right-hand side.
    """
    for a, b in f.diamonds():
        want = f[a, a + 1] * f[b, b + 1] if rhs is None else rhs(a, b)
        got = f.diamond_defect(a, b)
        if got != want:
            raise MismatchError(f"diamond at ({a},{b}) gives {got}, expected {want}",
                                a=a, b=b, got=str(got), expected=str(want))


def format_grid(f: FriezeArray, hole: str = "·", cell_width: int | None = None, style=None) -> str:
    """Rows in the staircase layout: row ``a`` is indented by ``a - lo`` cells.

    ``style(a, b, value, text)`` may decorate a padded cell (e.g. with ANSI codes).
    """
    texts = {}
    for a in range(f.lo, f.hi):
        for b in range(a, f.hi + 1):
            v = f.get(a, b)
            texts[(a, b)] = (v, hole if v is None else str(v))
    width = cell_width or max(len(t) for _, t in texts.values())
    lines = []
    for i, a in enumerate(range(f.lo, f.hi)):
        cells = []
        for b in range(a, f.hi + 1):
            v, t = texts[(a, b)]
            t = t.rjust(width)
            cells.append(style(a, b, v, t) if style else t)
        lines.append((" " * ((width + 1) * i) + " ".join(cells)).rstrip())
    return "\n".join(lines)
