"""Fountain sequences, their behaviour under mutation, and Penrose index words.

Position ``n >= 1`` of the x-word of a right fountain at ``f`` records whether
the arc ``(f, f+n+1)`` is present.  The y-sequence lists ``1`` followed by the
lengths of the non-boundary fountain arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .arcs import Arc
from .errors import ConsecutiveOnesError, MismatchError, NotMutableHereError
from .triangulation import (
    TriangulationWindow,
    _fountain_point,
    _side,
    flip,
    fountain_arc_sets,
    quadrilateral_of,
)


@dataclass(frozen=True)
class BinarySeq:
    word: str
    origin: int = 1

    def __post_init__(self):
        if not isinstance(self.word, str):
            object.__setattr__(self, "word", "".join(str(int(c)) for c in self.word))
        if set(self.word) - {"0", "1"}:
            raise ValueError(f"binary words use only 0 and 1, got {self.word!r}")

    @classmethod
    def parse(cls, text: str, origin: int = 1) -> "BinarySeq":
        return cls(text.replace(",", "").replace(" ", ""), origin)

    def __len__(self):
        return len(self.word)

    def __getitem__(self, n: int) -> int:
        """Letter at position ``n`` (positions start at ``origin``)."""
        i = n - self.origin
        if not 0 <= i < len(self.word):
            raise IndexError(n)
        return int(self.word[i])

    @property
    def letters(self) -> list[int]:
        return [int(c) for c in self.word]

    def positions(self) -> range:
        return range(self.origin, self.origin + len(self.word))

    def with_flip(self, n: int) -> "BinarySeq":
        i = n - self.origin
        w = self.word
        return BinarySeq(w[:i] + ("1" if w[i] == "0" else "0") + w[i + 1:], self.origin)

    def __str__(self):
        return ",".join(self.word)

    def to_json(self) -> dict:
        return {"word": self.word, "origin": self.origin}

    @classmethod
    def from_json(cls, data) -> "BinarySeq":
        if isinstance(data, str):
            return cls(data)
        return cls(data["word"], data.get("origin", 1))


@dataclass(frozen=True)
class GapSeq:
    values: tuple

    def __post_init__(self):
        vals = tuple(self.values)
        if any(v <= 0 for v in vals) or any(p >= q for p, q in zip(vals, vals[1:])):
            raise ValueError(f"a gap sequence is strictly increasing and positive, got {vals}")
        object.__setattr__(self, "values", vals)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def to_json(self) -> list:
        return list(self.values)


# -- x and y sequences ---------------------------------------------------------


def x_sequence(w: TriangulationWindow, at: int | None = None, side: str | None = None) -> BinarySeq:
    f = _fountain_point(w, at)
    side = _side(w, f, side)
    if side == "right":
        n_max = w.hi - f - 1
        present = [Arc(f, f + n + 1) in w.arcs for n in range(1, n_max + 1)]
    else:
        n_max = f - w.lo - 1
        present = [Arc(f - n - 1, f) in w.arcs for n in range(1, n_max + 1)]
    return BinarySeq("".join("1" if p else "0" for p in present))


def x_to_y(x: BinarySeq) -> GapSeq:
    return GapSeq((1,) + tuple(n + 1 for n in x.positions() if x[n]))


def y_to_x(y: GapSeq, length: int, origin: int = 1) -> BinarySeq:
    ends = set(y.values[1:])
    return BinarySeq("".join("1" if n + 1 in ends else "0" for n in range(origin, origin + length)), origin)


def y_sequence(w: TriangulationWindow, at: int | None = None, side: str | None = None) -> GapSeq:
    return x_to_y(x_sequence(w, at, side))


# -- mutation ------------------------------------------------------------------


@dataclass(frozen=True)
class MutationEffect:
    """Predicted change of the x-word; ``position`` is ``None`` when unchanged."""

    position: int | None = None
    before: int | None = None
    after: int | None = None

    @property
    def unchanged(self) -> bool:
        return self.position is None

    def apply(self, x: BinarySeq) -> BinarySeq:
        return x if self.position is None else x.with_flip(self.position)

    def __str__(self):
        if self.position is None:
            return "Unchanged"
        return f"FlipAt({self.position}: {self.before}->{self.after})"

    def to_json(self) -> dict:
        if self.position is None:
            return {"effect": "Unchanged"}
        return {"effect": "FlipAt", "position": self.position, "from": self.before, "to": self.after}


UNCHANGED = MutationEffect()


def predict_mutation_effect(w: TriangulationWindow, arc, at: int | None = None,
                            side: str | None = None) -> MutationEffect:
    quad = quadrilateral_of(w, arc)
    arc = quad.arc
    f = _fountain_point(w, at)
    side = _side(w, f, side)
    a1, a2 = fountain_arc_sets(w, f, side)

    def dist(v):
        return v - f if side == "right" else f - v

    if arc in a1:
        n = max(dist(arc.a), dist(arc.b))
        return MutationEffect(n - 1, 1, 0)
    if arc in a2:
        apex = [v for v in quad.vertices if v not in arc and arc.a < v < arc.b][0]
        return MutationEffect(dist(apex) - 1, 0, 1)
    return UNCHANGED


def check_mutation_effect(w: TriangulationWindow, arc, at: int | None = None,
                          side: str | None = None) -> MutationEffect:
    """Predict, flip, and compare against the recomputed x-word."""
    effect = predict_mutation_effect(w, arc, at, side)
    before = x_sequence(w, at, side)
    after = x_sequence(flip(w, arc), at, side)
    if effect.apply(before) != after:
        raise MismatchError("mutation changed the x-word unexpectedly", arc=arc,
                            predicted=str(effect), before=before.word, after=after.word)
    return effect


# -- equivalence and specialness ------------------------------------------------


@dataclass(frozen=True)
class WordComparison:
    differences: tuple
    overlap: int
    left_tail: str = ""
    right_tail: str = ""
    threshold: int | None = None

    @property
    def count(self) -> int:
        return len(self.differences)

    def __bool__(self):
        return self.threshold is None or self.count <= self.threshold

    def to_json(self) -> dict:
        return {
            "differences": list(self.differences),
            "count": self.count,
            "overlap": self.overlap,
            "left_tail": self.left_tail,
            "right_tail": self.right_tail,
        }


def sequences_differ_finitely(s: BinarySeq, t: BinarySeq, threshold: int | None = None) -> WordComparison:
    """Compare two words on their common positions.

    Finite words always differ in finitely many places, so truthiness is
    governed by ``threshold`` when one is given.  Letters beyond the overlap
    are reported as tails.
    """
    start = max(s.origin, t.origin)
    stop = min(s.origin + len(s), t.origin + len(t))
    diffs = tuple(n for n in range(start, stop) if s[n] != t[n])
    s_tail = "".join(str(s[n]) for n in s.positions() if not start <= n < stop)
    t_tail = "".join(str(t[n]) for n in t.positions() if not start <= n < stop)
    return WordComparison(diffs, max(0, stop - start), s_tail, t_tail, threshold)


def has_consecutive_ones(s) -> bool:
    word = s.word if isinstance(s, BinarySeq) else "".join(str(int(c)) for c in s)
    return "11" in word


def is_special_window(w: TriangulationWindow, at: int | None = None, side: str | None = None) -> bool:
    """True iff no arc joining consecutive fountain endpoints (beyond ``y_0``) is a boundary arc."""
    f = _fountain_point(w, at)
    side = _side(w, f, side)
    _, a2 = fountain_arc_sets(w, f, side)
    near = Arc(f + 1, f + 2) if side == "right" else Arc(f - 2, f - 1)
    return not any(x.is_boundary for x in a2 if x != near)


def specialize_word(x: BinarySeq, last_fixed: bool = True) -> BinarySeq:
    """Remove every ``11`` left to right by zeroing the later letter.

    When ``last_fixed`` the final letter stands for the closing arc of the
    window, which cannot be mutated; a pair ending there zeroes its earlier
    letter instead.
    """
    letters = list(x.word)
    i = 0
    while i + 1 < len(letters):
        if letters[i] == letters[i + 1] == "1":
            j = i if last_fixed and i + 1 == len(letters) - 1 else i + 1
            letters[j] = "0"
        i += 1
    return BinarySeq("".join(letters), x.origin)


def specialize(w: TriangulationWindow, at: int | None = None, side: str | None = None) -> TriangulationWindow:
    """Mutate fountain arcs until the x-word has no two consecutive 1s."""
    f = _fountain_point(w, at)
    side = _side(w, f, side)
    sign = 1 if side == "right" else -1

    def fountain_arc(n):
        v = f + sign * (n + 1)
        return Arc(min(f, v), max(f, v))

    while True:
        x = x_sequence(w, f, side)
        word = x.word
        i = word.find("11")
        if i < 0:
            return w
        n = x.origin + i
        target = fountain_arc(n + 1)
        try:
            quadrilateral_of(w, target)
        except NotMutableHereError:
            target = fountain_arc(n)
        check_mutation_effect(w, target, f, side)
        w = flip(w, target)


# -- the psi map ---------------------------------------------------------------


def psi(w: TriangulationWindow, at: int | None = None) -> tuple[BinarySeq, BinarySeq]:
    """``(left x-word, right x-word)`` at the fountain point."""
    f = _fountain_point(w, at)
    return x_sequence(w, f, "left"), x_sequence(w, f, "right")


# -- Penrose index words ---------------------------------------------------------


def penrose_encode(s: BinarySeq) -> BinarySeq:
    return BinarySeq(s.word.replace("1", "10"), s.origin)


def penrose_decode(t: BinarySeq) -> BinarySeq:
    """Inverse of :func:`penrose_encode`; a trailing bare ``1`` is accepted."""
    word = t.word
    i = word.find("11")
    if i >= 0:
        raise ConsecutiveOnesError("index word contains consecutive 1s", word=word, position=t.origin + i)
    out = []
    i = 0
    while i < len(word):
        out.append(word[i])
        i += 2 if word[i] == "1" else 1
    return BinarySeq("".join(out), t.origin)


def words(length: int) -> Iterable[BinarySeq]:
    for k in range(2 ** length):
        yield BinarySeq(format(k, f"0{length}b") if length else "")
