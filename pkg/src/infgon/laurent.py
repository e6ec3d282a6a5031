"""Sparse multivariate Laurent polynomials with integer coefficients.

A polynomial is a mapping from monomials to nonzero ``int`` coefficients.  A
monomial is a tuple of ``(variable, exponent)`` pairs sorted by variable, with
no zero exponents.  Variables may be any hashable, mutually comparable keys
(arcs for cluster variables, the strings ``"x"``/``"y"`` for matrix
factorizations).
"""

from __future__ import annotations

from typing import Any, Iterable, Iterator, Mapping

from .errors import NonExactDivisionError

Monomial = tuple  # tuple[tuple[var, int], ...]


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        s = exps.get(v, 0) + e
        if s:
            exps[v] = s
        else:
            del exps[v]
    return tuple(sorted(exps.items()))


def _mono_inv(m: Monomial) -> Monomial:
    return tuple((v, -e) for v, e in m)


def _degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def var_name(v: Any) -> str:
    return getattr(v, "var_name", None) or str(v)


class LaurentPoly:
    """Immutable Laurent polynomial.  Use :meth:`var` and :meth:`const` to build."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._raw({(): c} if c else {})

    @classmethod
    def var(cls, v: Any, exponent: int = 1) -> "LaurentPoly":
        return cls._raw({((v, exponent),): 1} if exponent else {(): 1})

    @classmethod
    def monomial(cls, exponents: Mapping[Any, int], coeff: int = 1) -> "LaurentPoly":
        mono = tuple(sorted((v, e) for v, e in exponents.items() if e))
        return cls._raw({mono: coeff} if coeff else {})

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical order: graded, then lexicographic, both descending."""
        return iter(sorted(self._terms.items(), key=_canonical_key))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variables(self) -> frozenset:
        return frozenset(v for m in self._terms for v, _ in m)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.items()]

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return LaurentPoly._raw(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        terms: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, 0) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return LaurentPoly._raw(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (m, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("coefficient is not a unit")
            return LaurentPoly._raw({_mono_inv(m): c}) ** (-n)
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- division and specialization -----------------------------------------

    def exact_div(self, divisor: "LaurentPoly", laurent: bool = False) -> "LaurentPoly":
        return exact_div(self, divisor, laurent)

    def specialize_ones(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, values: Mapping[Any, Any]):
        """Substitute values for variables; unspecified variables are an error."""
        total = 0
        for m, c in self._terms.items():
            t = c
            for v, e in m:
                t = t * values[v] ** e
            total = total + t
        return total

    def has_positive_coefficients(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # -- rendering -----------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for m, c in self.items():
            factors = [var_name(v) + ("" if e == 1 else f"^{e}") for v, e in m]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def to_json(self) -> list:
        """``[[coeff, [[var, exp], ...]], ...]`` in canonical order."""
        return [
            [c, [[v.to_json() if hasattr(v, "to_json") else v, e] for v, e in m]]
            for m, c in self.items()
        ]


def _canonical_key(item):
    m, _ = item
    # descending total degree, then descending lex on (var, exp) pairs
    return (-_degree(m), _NegLex(m))


class _NegLex:
    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m

    def __lt__(self, other):
        return _lex_greater(self.m, other.m)

    def __eq__(self, other):
        return self.m == other.m


def _lex_greater(m1: Monomial, m2: Monomial) -> bool:
    """Lexicographic comparison of exponent vectors (earlier variables first)."""
    d1, d2 = dict(m1), dict(m2)
    for v in sorted(set(d1) | set(d2)):
        e1, e2 = d1.get(v, 0), d2.get(v, 0)
        if e1 != e2:
            return e1 > e2
    return False


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return LaurentPoly.const(value)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def specialize_ones(p: LaurentPoly) -> int:
    return p.specialize_ones()


def has_positive_coefficients(p: LaurentPoly) -> bool:
    return p.has_positive_coefficients()


def exact_div(p: LaurentPoly, q: LaurentPoly, laurent: bool = False) -> LaurentPoly:
    """Return ``r`` with ``q * r == p`` or raise :class:`NonExactDivisionError`.

    With ``laurent=False`` two polynomials divide only if the quotient is again
    a polynomial.  With ``laurent=True`` every monomial is a unit.

    Monomial divisors shift exponents.  Otherwise this is multivariate
    division under the lexicographic order; every quotient term must lie in the
    exponent box forced by the extreme degrees of ``p`` and ``q`` in each
    variable, which also guarantees termination.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return ZERO
    r = _exact_div(p, q)
    if not laurent and _is_polynomial(p) and _is_polynomial(q) and not _is_polynomial(r):
        raise NonExactDivisionError(
            "quotient is not a polynomial", dividend=str(p), divisor=str(q)
        )
    return r


def _is_polynomial(p: LaurentPoly) -> bool:
    return all(e >= 0 for m in p._terms for _, e in m)


def _exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    if q.is_monomial():
        (qm, qc), = q._terms.items()
        inv = _mono_inv(qm)
        terms = {}
        for m, c in p._terms.items():
            quo, rem = divmod(c, qc)
            if rem:
                raise NonExactDivisionError(
                    "coefficient is not divisible", dividend=str(p), divisor=str(q)
                )
            terms[_mono_mul(m, inv)] = quo
        return LaurentPoly._raw(terms)

    order = sorted(p.variables() | q.variables())
    index = {v: i for i, v in enumerate(order)}

    def dense(m):
        vec = [0] * len(order)
        for v, e in m:
            vec[index[v]] = e
        return tuple(vec)

    def sparse(vec):
        return tuple((order[i], e) for i, e in enumerate(vec) if e)

    rem = {dense(m): c for m, c in p._terms.items()}
    qd = {dense(m): c for m, c in q._terms.items()}
    lead_q = max(qd)
    lead_c = qd[lead_q]
    lower = [min(m[i] for m in rem) - min(m[i] for m in qd) for i in range(len(order))]
    upper = [max(m[i] for m in rem) - max(m[i] for m in qd) for i in range(len(order))]

    def fail():
        return NonExactDivisionError("polynomial is not divisible", dividend=str(p), divisor=str(q))

    quotient = {}
    while rem:
        lead = max(rem)
        e = tuple(x - y for x, y in zip(lead, lead_q))
        if any(not lo <= x <= hi for x, lo, hi in zip(e, lower, upper)):
            raise fail()
        c, r = divmod(rem[lead], lead_c)
        if r:
            raise fail()
        quotient[e] = c
        for m, qc in qd.items():
            t = tuple(x + y for x, y in zip(e, m))
            s = rem.get(t, 0) - c * qc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return LaurentPoly._raw({sparse(e): c for e, c in quotient.items()})


def from_terms(terms: Iterable[tuple[Mapping[Any, int], int]]) -> LaurentPoly:
    total = ZERO
    for exps, c in terms:
        total = total + LaurentPoly.monomial(exps, c)
    return total
