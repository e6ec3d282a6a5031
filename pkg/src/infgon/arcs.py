"""Marked points and arcs of the completed infinity-gon.

Marked points are the integers plus a single accumulation point ``INF``.
An arc is a pair ``(a, b)`` with ``a < b`` and ``a`` finite.
"""

from __future__ import annotations

from enum import Enum
from operator import itemgetter


class _Infinity:
    """The accumulation point; compares strictly greater than every integer."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("infgon.INF")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()


def _point(value):
    if value is INF or value == "inf":
        return INF
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"marked point must be an integer or INF, got {value!r}")
    return value


class ArcKind(str, Enum):
    BOUNDARY = "boundary"
    FINITE_INTERNAL = "finite_internal"
    INFINITE = "infinite"


class Arc(tuple):
    """An arc ``(a, b)``; behaves as the tuple ``(a, b)`` for hashing and order."""

    __slots__ = ()

    def __new__(cls, a, b):
        a = _point(a)
        b = _point(b)
        if a is INF:
            raise ValueError("the left endpoint of an arc must be finite")
        if not a < b:
            raise ValueError(f"arc endpoints must satisfy a < b, got ({a}, {b})")
        return tuple.__new__(cls, (a, b))

    a = property(itemgetter(0))
    b = property(itemgetter(1))

    def __getnewargs__(self):
        return (self[0], self[1])

    def __repr__(self):
        return f"Arc({self[0]}, {self[1]!r})"

    def __str__(self):
        return f"({self[0]},{'∞' if self[1] is INF else self[1]})"

    @property
    def kind(self) -> ArcKind:
        return classify_arc(self)

    @property
    def is_boundary(self) -> bool:
        return self[1] is not INF and self[1] - self[0] == 1

    @property
    def is_infinite(self) -> bool:
        return self[1] is INF

    @property
    def is_finite(self) -> bool:
        return self[1] is not INF

    @property
    def length(self) -> int:
        if self[1] is INF:
            raise ValueError("infinite arcs have no length")
        return self[1] - self[0]

    @property
    def var_name(self) -> str:
        return f"x[{self[0]},{self[1]}]"

    def shifted(self, i: int) -> "Arc":
        return Arc(self[0] + i, self[1] if self[1] is INF else self[1] + i)

    def mirrored(self) -> "Arc":
        """Image under the reflection ``v -> -v`` (finite arcs only)."""
        return Arc(-self[1], -self[0])

    def to_json(self) -> list:
        return [self[0], "inf" if self[1] is INF else self[1]]

    @classmethod
    def from_json(cls, data) -> "Arc":
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            raise ValueError(f"an arc is a two-element array, got {data!r}")
        return cls(data[0], data[1])


def classify_arc(arc: Arc) -> ArcKind:
    if arc.b is INF:
        return ArcKind.INFINITE
    if arc.b - arc.a == 1:
        return ArcKind.BOUNDARY
    return ArcKind.FINITE_INTERNAL


def crossing(p: Arc, q: Arc) -> bool:
    """Strict interleaving of endpoints, ``INF`` taking part as the largest point."""
    a, b = p
    c, d = q
    return (a < c < b < d) or (c < a < d < b)


def parse_arc(text: str) -> Arc:
    """Parse ``"1,4"`` or ``"3,inf"``."""
    parts = [t.strip() for t in text.replace("(", "").replace(")", "").split(",")]
    if len(parts) != 2:
        raise ValueError(f"cannot parse arc from {text!r}")
    a = int(parts[0])
    b = INF if parts[1] in ("inf", "∞") else int(parts[1])
    return Arc(a, b)
