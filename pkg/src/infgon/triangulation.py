"""Finite windows of triangulations of the completed infinity-gon.

A window lists every arc of a triangulation whose endpoints lie in
``[lo, hi]``.  It is *closed*: either ``(lo, hi)`` is an arc, or a fountain
point ``f`` is designated (the infinite arc ``(f, inf)`` is implied) and the
arcs ``(lo, f)`` and ``(f, hi)`` are present.  A closed window decomposes into
fully triangulated polygons, so every count taken at an interior vertex is
complete.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .arcs import INF, Arc, crossing
from .errors import (
    CrossingPairError,
    IncompleteAtVertexError,
    MissingBoundaryError,
    NoFountainError,
    NotClosedError,
    NotMutableHereError,
    WindowError,
    WrongCountError,
)

FORMAT = "infgon/1"


def _as_arc(value) -> Arc:
    return value if isinstance(value, Arc) else Arc(*value)


@dataclass(frozen=True)
class TriangulationWindow:
    lo: int
    hi: int
    arcs: frozenset
    fountain: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "arcs", frozenset(_as_arc(x) for x in self.arcs))

    @classmethod
    def make(cls, lo: int, hi: int, arcs: Iterable = (), fountain: int | None = None,
             validate: bool = True) -> "TriangulationWindow":
        """Build a window, inserting the boundary arcs, and validate it."""
        arcs = {_as_arc(x) for x in arcs}
        for x in list(arcs):
            if x.is_infinite:
                if fountain is not None and fountain != x.a:
                    raise WindowError("two different fountain points", arc=x, fountain=fountain)
                fountain = x.a
                arcs.discard(x)
        arcs.update(Arc(i, i + 1) for i in range(lo, hi))
        w = cls(lo, hi, frozenset(arcs), fountain)
        if validate:
            validate_window(w)
        return w

    # -- derived data --------------------------------------------------------

    @cached_property
    def sorted_arcs(self) -> tuple:
        return tuple(sorted(self.arcs))

    @cached_property
    def diagonals(self) -> tuple:
        return tuple(x for x in self.sorted_arcs if not x.is_boundary)

    @cached_property
    def neighbours(self) -> dict:
        adj = {v: set() for v in range(self.lo, self.hi + 1)}
        for a, b in self.arcs:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        return adj

    @cached_property
    def triangle_set(self) -> frozenset:
        adj = self.neighbours
        out = set()
        for a, b in self.arcs:
            for t in adj[a] & adj[b]:
                if t > b:
                    out.add((a, b, t))
        return frozenset(out)

    @cached_property
    def apexes(self) -> dict:
        """For each arc, the third vertices of the triangles containing it."""
        result = {x: [] for x in self.arcs}
        for u, v, t in self.triangle_set:
            result[Arc(u, v)].append(t)
            result[Arc(v, t)].append(u)
            result[Arc(u, t)].append(v)
        return result

    @property
    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)

    def __contains__(self, arc) -> bool:
        return _as_arc(arc) in self.arcs

    def __len__(self) -> int:
        return len(self.arcs)

    # -- transformations -----------------------------------------------------

    def replace(self, old: Arc, new: Arc) -> "TriangulationWindow":
        return TriangulationWindow(self.lo, self.hi, (self.arcs - {old}) | {new}, self.fountain)

    def shift(self, i: int) -> "TriangulationWindow":
        f = None if self.fountain is None else self.fountain + i
        return TriangulationWindow(self.lo + i, self.hi + i,
                                   frozenset(x.shifted(i) for x in self.arcs), f)

    def mirror(self) -> "TriangulationWindow":
        """Image under the reflection ``v -> -v``."""
        f = None if self.fountain is None else -self.fountain
        return TriangulationWindow(-self.hi, -self.lo,
                                   frozenset(x.mirrored() for x in self.arcs), f)

    def kind(self) -> str:
        f = self.fountain
        if f is None:
            return "finite"
        if f == self.lo:
            return "right"
        if f == self.hi:
            return "left"
        return "fountain"

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "format": FORMAT,
            "lo": self.lo,
            "hi": self.hi,
            "fountain": self.fountain,
            "arcs": [x.to_json() for x in self.sorted_arcs],
        }

    @classmethod
    def from_json(cls, data: dict, validate: bool = True) -> "TriangulationWindow":
        if not isinstance(data, dict) or "lo" not in data or "hi" not in data:
            raise WindowError("window JSON needs integer fields lo and hi")
        fmt = data.get("format", FORMAT)
        if fmt != FORMAT:
            raise WindowError(f"unsupported format {fmt!r}", format=fmt)
        lo, hi = data["lo"], data["hi"]
        if not isinstance(lo, int) or not isinstance(hi, int):
            raise WindowError("lo and hi must be integers")
        try:
            arcs = [Arc.from_json(x) for x in data.get("arcs", [])]
        except (TypeError, ValueError) as exc:
            raise WindowError(f"bad arc: {exc}") from None
        return cls.make(lo, hi, arcs, data.get("fountain"), validate=validate)


def window(lo: int, hi: int, arcs: Iterable = (), fountain: int | None = None) -> TriangulationWindow:
    return TriangulationWindow.make(lo, hi, arcs, fountain)


# -- validation ----------------------------------------------------------------


def _check_shape(w: TriangulationWindow) -> None:
    if not (isinstance(w.lo, int) and isinstance(w.hi, int) and w.lo < w.hi):
        raise WindowError("window needs integers lo < hi", lo=w.lo, hi=w.hi)
    f = w.fountain
    if f is not None and not w.lo <= f <= w.hi:
        raise WindowError("fountain point outside the window", fountain=f, lo=w.lo, hi=w.hi)
    for x in w.arcs:
        if x.is_infinite:
            raise WindowError("infinite arcs are implied by the fountain, not listed", arc=x)
        if x.a < w.lo or x.b > w.hi:
            raise WindowError("arc outside the window", arc=x, lo=w.lo, hi=w.hi)


def closing_arcs(w: TriangulationWindow) -> list[Arc]:
    f = w.fountain
    if f is None:
        return [Arc(w.lo, w.hi)]
    out = []
    if f > w.lo:
        out.append(Arc(w.lo, f))
    if f < w.hi:
        out.append(Arc(f, w.hi))
    return out


def validate_window(w: TriangulationWindow) -> None:
    """Raise the first violated invariant; return ``None`` for a valid window."""
    _check_shape(w)
    for i in range(w.lo, w.hi):
        if Arc(i, i + 1) not in w.arcs:
            raise MissingBoundaryError(f"boundary arc ({i},{i + 1}) missing", i=i)
    for x in closing_arcs(w):
        if x not in w.arcs:
            raise NotClosedError(f"closing arc {x} missing", arc=x)
    arcs = w.diagonals
    f = w.fountain
    if f is not None:
        spine = Arc(f, INF)
        for x in arcs:
            if crossing(x, spine):
                raise CrossingPairError(f"{x} crosses {spine}", p=x, q=spine)
    for i, p in enumerate(arcs):
        for q in arcs[i + 1:]:
            if q.a >= p.b:
                break
            if crossing(p, q):
                raise CrossingPairError(f"{p} crosses {q}", p=p, q=q)
    _check_counts(w)


def _check_counts(w: TriangulationWindow) -> None:
    arcs = w.sorted_arcs
    for region in sorted(w.diagonals, key=lambda x: (x.length, x.a)):
        a, b = region
        m = b - a + 1
        count = sum(1 for x in arcs if a <= x.a and x.b <= b)
        if count != 2 * m - 3:
            raise WrongCountError(
                f"polygon {region} on {m} vertices has {count} arcs, expected {2 * m - 3}",
                region=region, count=count, expected=2 * m - 3,
            )


def is_valid(w: TriangulationWindow) -> bool:
    try:
        validate_window(w)
    except WindowError:
        return False
    return True


# -- triangles and quiddity ----------------------------------------------------


def triangles(w: TriangulationWindow) -> frozenset:
    return w.triangle_set


def quiddity_at(w: TriangulationWindow, v: int, closed: bool = False) -> int:
    """Number of triangles at ``v``.

    With ``closed=True`` a fountain-free window is treated as a whole polygon,
    so its end vertices count too.
    """
    if closed and w.fountain is None:
        ok = w.lo <= v <= w.hi
    else:
        ok = w.lo < v < w.hi and v != w.fountain
    if not ok:
        raise IncompleteAtVertexError(f"triangles at {v} may extend beyond the window", v=v)
    return sum(1 for t in w.triangle_set if v in t)


def quiddity_sequence(w: TriangulationWindow, closed: bool = False) -> list:
    """Quiddity at each vertex; ``None`` where it is undefined."""
    out = []
    for v in w.vertices:
        try:
            out.append(quiddity_at(w, v, closed=closed))
        except IncompleteAtVertexError:
            out.append(None)
    return out


@dataclass(frozen=True)
class Quadrilateral:
    vertices: tuple
    arc: Arc
    partner: Arc


def quadrilateral_of(w: TriangulationWindow, arc) -> Quadrilateral:
    arc = _as_arc(arc)
    if arc not in w.arcs:
        raise NotMutableHereError(f"{arc} is not in the window", arc=arc)
    if arc.is_boundary:
        raise NotMutableHereError(f"{arc} is a boundary arc", arc=arc)
    a, b = arc
    apex = w.apexes[arc]
    inner = [t for t in apex if a < t < b]
    outer = [t for t in apex if t < a or t > b]
    if len(inner) != 1 or len(outer) != 1:
        raise NotMutableHereError(
            f"the quadrilateral around {arc} is not inside the window", arc=arc
        )
    s, t = inner[0], outer[0]
    return Quadrilateral(tuple(sorted((a, b, s, t))), arc, Arc(min(s, t), max(s, t)))


def is_mutable(w: TriangulationWindow, arc) -> bool:
    try:
        quadrilateral_of(w, arc)
    except NotMutableHereError:
        return False
    return True


def mutable_arcs(w: TriangulationWindow) -> list[Arc]:
    return [x for x in w.diagonals if is_mutable(w, x)]


def flip(w: TriangulationWindow, arc) -> TriangulationWindow:
    q = quadrilateral_of(w, arc)
    return w.replace(q.arc, q.partner)


# -- fountain data ---------------------------------------------------------------


def _fountain_point(w: TriangulationWindow, at: int | None = None) -> int:
    f = w.fountain if at is None else at
    if f is None:
        raise NoFountainError("the window has no fountain point")
    return f


def _side(w: TriangulationWindow, f: int, side: str | None) -> str:
    if side is None:
        return "left" if f == w.hi and f > w.lo else "right"
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    return side


def fountain_endpoints(w: TriangulationWindow, at: int | None = None, side: str | None = None) -> list[int]:
    """Distances ``n >= 1`` with a fountain arc of length ``n`` on the given side."""
    f = _fountain_point(w, at)
    side = _side(w, f, side)
    if side == "right":
        return [n for n in range(1, w.hi - f + 1) if Arc(f, f + n) in w.arcs]
    return [n for n in range(1, f - w.lo + 1) if Arc(f - n, f) in w.arcs]


def fountain_arc_sets(w: TriangulationWindow, at: int | None = None, side: str | None = None):
    """``(A1, A2)``: fountain arcs, and arcs joining consecutive fountain endpoints."""
    f = _fountain_point(w, at)
    side = _side(w, f, side)
    ns = fountain_endpoints(w, f, side)
    ys = [1] + [n for n in ns if n >= 2]
    if side == "right":
        a1 = {Arc(f, f + n) for n in ns}
        a2 = {Arc(f + p, f + q) for p, q in zip(ys, ys[1:])}
    else:
        a1 = {Arc(f - n, f) for n in ns}
        a2 = {Arc(f - q, f - p) for p, q in zip(ys, ys[1:])}
    return a1, a2


# -- standard windows -----------------------------------------------------------


def running_example() -> TriangulationWindow:
    return window(0, 8, [(0, 3), (0, 7), (0, 8), (1, 3), (3, 5), (3, 7), (5, 7)], fountain=0)


def fan_window(lo: int, hi: int, f: int = 0) -> TriangulationWindow:
    """All arcs ``(f, n)``: the fan at ``f``."""
    arcs = [(f, n) for n in range(f + 2, hi + 1)] + [(n, f) for n in range(lo, f - 1)]
    return window(lo, hi, arcs, fountain=f)


def leapfrog_window(n: int, mirrored: bool = False) -> TriangulationWindow:
    """The arcs ``(-k, k-1)`` and ``(-k, k)`` inside ``[-n, n]``."""
    arcs = [(-k, k) for k in range(1, n + 1)] + [(-k, k - 1) for k in range(2, n + 1)]
    w = window(-n, n, arcs)
    return w.mirror() if mirrored else w


# -- enumeration ------------------------------------------------------------------


def polygon_triangulations(lo: int, hi: int) -> Iterator[frozenset]:
    """Every set of diagonals triangulating the polygon on ``lo..hi``."""
    yield from _triangulations(lo, hi, {})


def _triangulations(a: int, b: int, memo: dict):
    key = (a, b)
    if key not in memo:
        if b - a < 2:
            memo[key] = [frozenset()]
        else:
            out = []
            for t in range(a + 1, b):
                extra = set()
                if t - a >= 2:
                    extra.add(Arc(a, t))
                if b - t >= 2:
                    extra.add(Arc(t, b))
                for left in _triangulations(a, t, memo):
                    for right in _triangulations(t, b, memo):
                        out.append(frozenset(extra) | left | right)
            memo[key] = out
    return memo[key]


def polygon_windows(m: int, lo: int = 0, fountain: int | None = None) -> Iterator[TriangulationWindow]:
    """All triangulations of the ``m``-gon on ``lo..lo+m-1`` as windows."""
    hi = lo + m - 1
    closing = {Arc(lo, hi)} if hi - lo >= 2 else set()
    for diags in polygon_triangulations(lo, hi):
        yield TriangulationWindow.make(lo, hi, diags | closing, fountain, validate=False)


def right_fountain_windows(max_points: int, min_points: int = 3) -> Iterator[TriangulationWindow]:
    """All right-fountain windows ``0..N`` at ``f = 0`` with at most ``max_points`` vertices."""
    for m in range(min_points, max_points + 1):
        yield from polygon_windows(m, 0, fountain=0)


def two_sided_windows(left: int, right: int) -> Iterator[TriangulationWindow]:
    """All fountain windows ``-left..right`` with fountain point 0."""
    lefts = list(polygon_triangulations(-left, 0)) if left else [frozenset()]
    rights = list(polygon_triangulations(0, right)) if right else [frozenset()]
    extra = set()
    if left >= 2:
        extra.add(Arc(-left, 0))
    if right >= 2:
        extra.add(Arc(0, right))
    for l in lefts:
        for r in rights:
            yield TriangulationWindow.make(-left, right, l | r | extra, 0, validate=False)


def random_polygon_diagonals(lo: int, hi: int, rng: random.Random) -> set:
    out = set()
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        if b - a < 2:
            continue
        t = rng.randrange(a + 1, b)
        for p, q in ((a, t), (t, b)):
            if q - p >= 2:
                out.add(Arc(p, q))
                stack.append((p, q))
    return out


def random_window(rng: random.Random, max_points: int = 9, two_sided: bool = False) -> TriangulationWindow:
    """A random valid window with at most ``max_points`` vertices and a fountain."""
    if two_sided:
        total = rng.randrange(3, max_points + 1)
        left = rng.randrange(1, total - 1)
        right = total - 1 - left
        arcs = random_polygon_diagonals(-left, 0, rng) | random_polygon_diagonals(0, right, rng)
        arcs |= {Arc(-left, 0), Arc(0, right)}
        return TriangulationWindow.make(-left, right, {x for x in arcs if not x.is_boundary}, 0)
    m = rng.randrange(3, max_points + 1)
    arcs = random_polygon_diagonals(0, m - 1, rng) | {Arc(0, m - 1)}
    return TriangulationWindow.make(0, m - 1, arcs, 0)
