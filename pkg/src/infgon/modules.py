"""Graded MCM modules over the A-infinity singularity, indexed by arcs.

Grading: ``deg x = +1``, ``deg y = -1`` and ``M(j)_d = M_{d+j}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .arcs import INF, Arc, crossing
from .errors import NoExtensionError, NoTranslateError
from .laurent import LaurentPoly

X = LaurentPoly.var("x")
Y = LaurentPoly.var("y")


@dataclass(frozen=True)
class Projective:
    """The shifted free module S(j)."""

    j: int

    def __str__(self):
        return f"S({self.j})"


@dataclass(frozen=True)
class Ideal:
    """The shifted ideal (x, y^k)(j)."""

    k: int
    j: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"Ideal requires k >= 1, got {self.k}")

    def __str__(self):
        return f"(x,y^{self.k})({self.j})"


@dataclass(frozen=True)
class CY:
    """The shifted module C[y](j)."""

    j: int

    def __str__(self):
        return f"C[y]({self.j})"


GradedModuleDesc = Union[Projective, Ideal, CY]


def arc_to_module(arc: Arc) -> GradedModuleDesc:
    a, b = arc
    if b is INF:
        return CY(-a)
    if b - a == 1:
        return Projective(-a)
    return Ideal(b - a - 1, 1 - b)


def module_to_arc(desc: GradedModuleDesc) -> Arc:
    if isinstance(desc, Projective):
        return Arc(-desc.j, 1 - desc.j)
    if isinstance(desc, Ideal):
        return Arc(-desc.j - desc.k, 1 - desc.j)
    if isinstance(desc, CY):
        return Arc(-desc.j, INF)
    raise TypeError(f"not a module descriptor: {desc!r}")


def min_y_degree(desc: GradedModuleDesc) -> int:
    """Internal degree of the generator ``y^k`` of ``(x, y^k)(j)``."""
    if not isinstance(desc, Ideal):
        raise TypeError("min_y_degree is defined for Ideal descriptors only")
    return -desc.k - desc.j


def describe(desc: GradedModuleDesc) -> dict:
    if isinstance(desc, Projective):
        return {"variant": "Projective", "j": desc.j, "symbol": str(desc)}
    if isinstance(desc, Ideal):
        return {"variant": "Ideal", "k": desc.k, "j": desc.j, "symbol": str(desc)}
    return {"variant": "CY", "j": desc.j, "symbol": str(desc)}


# -- matrix factorizations ---------------------------------------------------


@dataclass(frozen=True)
class MatrixFactorization:
    """``B: F_source -> F_middle`` and ``A: F_middle -> F_target`` with ``AB = BA = x^2``.

    Shifts list the degrees of the basis elements of each free module, so an
    entry in row ``i``, column ``j`` of ``A`` must have degree
    ``target[i] - middle[j]``.
    """

    A: tuple
    B: tuple
    source: tuple
    middle: tuple
    target: tuple

    @property
    def size(self) -> int:
        return len(self.A)

    def products(self):
        return _matmul(self.A, self.B), _matmul(self.B, self.A)

    def product_check(self) -> bool:
        n = self.size
        x2 = X * X
        want = tuple(tuple(x2 if i == j else LaurentPoly() for j in range(n)) for i in range(n))
        ab, ba = self.products()
        return ab == want and ba == want

    def is_homogeneous(self) -> bool:
        return _homogeneous(self.A, self.target, self.middle) and _homogeneous(
            self.B, self.middle, self.source
        )

    def to_json(self) -> dict:
        def mat(m):
            return [[str(e) for e in row] for row in m]

        return {
            "A": mat(self.A),
            "B": mat(self.B),
            "shifts": [list(self.source), list(self.middle), list(self.target)],
        }


def _matmul(p, q):
    n, m, r = len(p), len(q), len(q[0])
    return tuple(
        tuple(sum((p[i][k] * q[k][j] for k in range(m)), LaurentPoly()) for j in range(r))
        for i in range(n)
    )


def _xy_degree(p: LaurentPoly):
    degs = {sum(e if v == "x" else -e for v, e in m) for m in p.terms}
    return degs.pop() if len(degs) == 1 else None


def _homogeneous(mat, rows, cols) -> bool:
    for i, row in enumerate(mat):
        for j, entry in enumerate(row):
            if entry.is_zero():
                continue
            if _xy_degree(entry) != rows[i] - cols[j]:
                return False
    return True


def matrix_factorization(desc: GradedModuleDesc) -> MatrixFactorization:
    if isinstance(desc, Projective):
        j = desc.j
        return MatrixFactorization(
            A=((X * X,),), B=((LaurentPoly.const(1),),),
            source=(j - 2,), middle=(j - 2,), target=(j,),
        )
    if isinstance(desc, CY):
        j = desc.j
        return MatrixFactorization(
            A=((X,),), B=((X,),), source=(j - 2,), middle=(j - 1,), target=(j,)
        )
    if isinstance(desc, Ideal):
        k, j = desc.k, desc.j
        m = ((X, Y ** k), (LaurentPoly(), -X))
        return MatrixFactorization(
            A=m, B=m,
            source=(j - 2, j + k - 1), middle=(j - 1, j + k), target=(j, j + k + 1),
        )
    raise TypeError(f"not a module descriptor: {desc!r}")


# -- extensions --------------------------------------------------------------


def extension_middle_or_none(M: Arc, N: Arc):
    """Middle term of the nonsplit ``0 -> N -> E -> M -> 0``, or ``None``."""
    if M.is_infinite and N.is_infinite:
        a, b = M.a, N.a
        return [Arc(a, b)] if a < b else None
    if not crossing(M, N):
        return None
    if N.is_infinite:
        # N = (b, inf), M = (a, c) with a < b < c
        a, c = M
        return [Arc(a, N.a), Arc(c, INF)]
    if M.is_infinite:
        # N = (a, c), M = (b, inf)
        a, c = N
        return [Arc(a, INF), Arc(M.a, c)]
    if N.a < M.a:
        # N = (a, b), M = (c, d) with a < c < b < d
        (a, b), (c, d) = N, M
        return [Arc(a, d), Arc(c, b)]
    (a, b), (c, d) = M, N
    return [Arc(a, c), Arc(b, d)]


def ext_dimension(M: Arc, N: Arc) -> int:
    return 0 if extension_middle_or_none(M, N) is None else 1


def extension_middle(M: Arc, N: Arc) -> list[Arc]:
    mid = extension_middle_or_none(M, N)
    if mid is None:
        raise NoExtensionError("no nonsplit extension between these arcs", M=M, N=N)
    return sorted(mid)


# -- Auslander-Reiten structure ------------------------------------------------


def _require_internal(arc: Arc):
    if arc.is_infinite:
        raise NoTranslateError("infinite arcs have no almost split sequence", arc=arc)
    if arc.is_boundary:
        raise NoTranslateError("boundary arcs are projective-injective", arc=arc)


def ar_translate(arc: Arc) -> Arc:
    _require_internal(arc)
    return arc.shifted(-1)


def ar_sequence(arc: Arc):
    """``(start, middle, end)`` of the almost split sequence ending at ``arc``."""
    _require_internal(arc)
    a, b = arc
    return Arc(a - 1, b - 1), sorted([Arc(a - 1, b), Arc(a, b - 1)]), arc


def ar_sequence_starting(arc: Arc):
    _require_internal(arc)
    a, b = arc
    return arc, sorted([Arc(a + 1, b), Arc(a, b + 1)]), Arc(a + 1, b + 1)


def exchange_sequence(arc: Arc):
    _require_internal(arc)
    a, b = arc
    return arc, [Arc(a - 1, a), Arc(b - 1, b)], Arc(a - 1, b - 1)


def irreducible_maps_from(arc: Arc) -> list[Arc]:
    """Targets of the irreducible maps leaving ``arc`` in the AR-quiver."""
    a, b = arc
    if b is INF:
        return [Arc(a + 1, INF)]
    out = [Arc(a, b + 1)]
    if a + 1 < b:
        out.insert(0, Arc(a + 1, b))
    return out


def irreducible_maps_to(arc: Arc) -> list[Arc]:
    a, b = arc
    if b is INF:
        return [Arc(a - 1, INF)]
    out = [Arc(a - 1, b)]
    if a < b - 1:
        out.append(Arc(a, b - 1))
    return out
