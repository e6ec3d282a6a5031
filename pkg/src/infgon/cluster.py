"""Cluster variables with coefficients, computed by Ptolemy flips.

Each arc of the initial window carries its own variable ``x[a,b]``.  The
variable of any other arc ``gamma`` is reached by repeatedly flipping the
first diagonal that ``gamma`` crosses, counted from its left endpoint.  The
new diagonal then shares that endpoint, so each flip removes exactly one
crossing and divides by a single initial variable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Mapping

from .arcs import Arc, crossing
from .errors import FountainCrossingError, IncompleteCrossingsError, MismatchError
from .frieze import FriezeArray
from .laurent import LaurentPoly, exact_div
from .triangulation import TriangulationWindow, flip, quadrilateral_of

NEAR = "near"
FAR = "far"


@dataclass(frozen=True, eq=False)
class ClusterSeed:
    window: TriangulationWindow
    assignment: Mapping

    def __getitem__(self, arc) -> LaurentPoly:
        return self.assignment[arc if isinstance(arc, Arc) else Arc(*arc)]

    def __contains__(self, arc) -> bool:
        return (arc if isinstance(arc, Arc) else Arc(*arc)) in self.assignment

    def __eq__(self, other):
        if not isinstance(other, ClusterSeed):
            return NotImplemented
        return self.window == other.window and dict(self.assignment) == dict(other.assignment)

    def __hash__(self):
        return hash(self.window)


def initial_seed(w: TriangulationWindow) -> ClusterSeed:
    return ClusterSeed(w, {x: LaurentPoly.var(x) for x in w.arcs})


def flip_seed(s: ClusterSeed, arc) -> ClusterSeed:
    q = quadrilateral_of(s.window, arc)
    a, b, c, d = q.vertices
    p = s.assignment
    num = p[Arc(a, b)] * p[Arc(c, d)] + p[Arc(b, c)] * p[Arc(a, d)]
    value = exact_div(num, p[q.arc], laurent=True)
    assignment = dict(p)
    del assignment[q.arc]
    assignment[q.partner] = value
    return ClusterSeed(s.window.replace(q.arc, q.partner), assignment)


def _check_gamma(w: TriangulationWindow, gamma: Arc) -> None:
    if gamma.is_infinite or gamma.a < w.lo or gamma.b > w.hi:
        raise IncompleteCrossingsError(f"{gamma} is not inside the window [{w.lo},{w.hi}]", gamma=gamma)
    f = w.fountain
    if f is not None and gamma.a < f < gamma.b:
        raise FountainCrossingError(f"{gamma} crosses the fountain point {f}", gamma=gamma, fountain=f)


def first_crossed(w: TriangulationWindow, gamma: Arc):
    """The triangle at ``gamma.a`` that ``gamma`` enters, as ``(u, v)`` with ``(u, v)`` crossed."""
    a = gamma.a
    for tri in w.triangle_set:
        if a in tri:
            u, v = (t for t in tri if t != a)
            side = Arc(min(u, v), max(u, v))
            if crossing(side, gamma):
                return side
    return None


def cluster_variable(s0: ClusterSeed, gamma, max_flips: int | None = None) -> LaurentPoly:
    gamma = gamma if isinstance(gamma, Arc) else Arc(*gamma)
    _check_gamma(s0.window, gamma)
    s = s0
    flips = 0
    while gamma not in s.assignment:
        side = first_crossed(s.window, gamma)
        if side is None:
            raise IncompleteCrossingsError(f"no triangle at {gamma.a} is crossed by {gamma}", gamma=gamma)
        s = flip_seed(s, side)
        flips += 1
        if max_flips is not None and flips > max_flips:
            raise RuntimeError("flip recursion did not terminate")
    return s.assignment[gamma]


def cluster_variable_by_path(s0: ClusterSeed, gamma, rng: random.Random) -> LaurentPoly:
    """Reach ``gamma`` by flipping a random crossed diagonal at each step."""
    gamma = gamma if isinstance(gamma, Arc) else Arc(*gamma)
    _check_gamma(s0.window, gamma)
    s = s0
    while gamma not in s.assignment:
        crossed = [x for x in s.window.diagonals if crossing(x, gamma)]
        mutable = [x for x in crossed if _flippable(s.window, x)]
        s = flip_seed(s, rng.choice(mutable))
    return s.assignment[gamma]


def _flippable(w, x) -> bool:
    try:
        quadrilateral_of(w, x)
    except Exception:
        return False
    return True


# -- coefficient friezes ------------------------------------------------------


def coefficient_frieze(w: TriangulationWindow) -> FriezeArray:
    """Frieze of cluster variables over every pair of the window outside the hole."""
    s0 = initial_seed(w)
    f = w.fountain
    entries = {}
    for a in range(w.lo, w.hi + 1):
        entries[(a, a)] = LaurentPoly()
        for b in range(a + 1, w.hi + 1):
            if f is not None and a < f < b:
                continue
            entries[(a, b)] = cluster_variable(s0, Arc(a, b))
    return FriezeArray(w.kind(), w.lo, w.hi, entries, f)


def specialize_ones(f: FriezeArray) -> FriezeArray:
    return f.map(lambda v: v.specialize_ones() if isinstance(v, LaurentPoly) else v)


# -- crossing strings and the submodule count -------------------------------------


@dataclass(frozen=True)
class CrossingString:
    gamma: Arc
    crossed: tuple
    sides: tuple
    shared: tuple

    def __len__(self):
        return len(self.crossed)

    def arrows(self) -> list[tuple[int, int]]:
        """Arrow ``(i, j)`` meaning position ``i`` in a subset forces ``j``."""
        out = []
        for i, side in enumerate(self.sides):
            out.append((i, i + 1) if side == NEAR else (i + 1, i))
        return out

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma.to_json(),
            "crossed": [x.to_json() for x in self.crossed],
            "sides": [f"{s}({v})" for s, v in zip(self.sides, self.shared)],
        }


def crossing_string(w: TriangulationWindow, gamma) -> CrossingString:
    gamma = gamma if isinstance(gamma, Arc) else Arc(*gamma)
    _check_gamma(w, gamma)
    a, b = gamma
    crossed = []
    current = first_crossed(w, gamma)
    prev_apex = a
    while current is not None:
        crossed.append(current)
        others = [t for t in w.apexes[current] if t != prev_apex]
        if len(others) != 1:
            raise IncompleteCrossingsError(f"crossings of {gamma} leave the window", gamma=gamma)
        t = others[0]
        if t == b:
            break
        u, v = current
        nxt = None
        for p in (u, v):
            side = Arc(min(p, t), max(p, t))
            if crossing(side, gamma):
                nxt = side
        prev_apex = next(p for p in (u, v) if Arc(min(p, t), max(p, t)) != nxt)
        current = nxt
    sides, shared = [], []
    for p, q in zip(crossed, crossed[1:]):
        (s,) = set(p) & set(q)
        shared.append(s)
        sides.append(NEAR if a < s < b else FAR)
    expected = sum(1 for x in w.diagonals if crossing(x, gamma))
    if expected != len(crossed):
        raise MismatchError("triangle walk missed a crossing", gamma=gamma)
    return CrossingString(gamma, tuple(crossed), tuple(sides), tuple(shared))


def submodule_count(cs: CrossingString) -> int:
    """Number of subsets of crossing positions closed under the arrows."""
    n = len(cs.crossed)
    if n == 0:
        return 1
    # ways[k][s]: subsets of positions < k+1 with position k in (s=1) or out (s=0)
    out_, in_ = 1, 1
    for side in cs.sides:
        if side == NEAR:
            # i -> i+1: i in forces i+1 in
            out_, in_ = out_, out_ + in_
        else:
            # i+1 -> i: i+1 in forces i in
            out_, in_ = out_ + in_, in_
    return out_ + in_


def submodule_count_brute(cs: CrossingString) -> int:
    n = len(cs.crossed)
    arrows = cs.arrows()
    total = 0
    for mask in range(1 << n):
        if all(not (mask >> i) & 1 or (mask >> j) & 1 for i, j in arrows):
            total += 1
    return total


# -- identities ---------------------------------------------------------------------


def check_plucker(f: FriezeArray) -> int:
    """Check ``p_ac p_bd = p_ab p_cd + p_bc p_ad`` on all defined quadruples; return how many."""
    count = 0
    pts = range(f.lo, f.hi + 1)
    for a in pts:
        for b in pts:
            if b <= a:
                continue
            for c in pts:
                if c <= b:
                    continue
                for d in pts:
                    if d <= c:
                        continue
                    pairs = [(a, c), (b, d), (a, b), (c, d), (b, c), (a, d)]
                    if any(f.in_hole(*p) for p in pairs):
                        continue
                    lhs = f[a, c] * f[b, d]
                    rhs = f[a, b] * f[c, d] + f[b, c] * f[a, d]
                    if lhs != rhs:
                        raise MismatchError("Ptolemy relation fails", quad=[a, b, c, d])
                    count += 1
    return count
