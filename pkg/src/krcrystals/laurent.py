"""Exact Laurent polynomials in q with integer coefficients.

Provides the q-integers, q-factorials and Gaussian (q-)binomial
coefficients, the q-adic valuation, membership tests for the ring A of
rational functions regular at q = 0 (restricted here to Laurent
polynomials), and the positivity predicate that induces the total order
f > g iff f - g has positive lowest coefficient.

Everything is side-effect free and exact; coefficients are Python ints,
so no overflow is possible.
"""
from __future__ import annotations

import functools
import math
from typing import Iterable, Mapping, Union

CoeffSource = Union[Mapping[int, int], Iterable[tuple[int, int]], None]


class LaurentPoly:
    """Sparse integer Laurent polynomial, a map exponent -> coefficient.

    Zero coefficients are never stored. Instances are immutable by
    convention (no mutating methods) and safe to share across threads.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: CoeffSource = None):
        acc: dict[int, int] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for e, c in items:
                acc[e] = acc.get(e, 0) + c
        self._coeffs = {e: c for e, c in acc.items() if c != 0}

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def coeff(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def evaluate_at_one(self) -> int:
        """Substitute q = 1 (the sum of all coefficients)."""
        return sum(self._coeffs.values())

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._coeffs.items())))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            raise ValueError("negative powers of a general Laurent polynomial are not defined")
        out = one()
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({render(self)!r})"


def zero() -> LaurentPoly:
    return LaurentPoly()


def one() -> LaurentPoly:
    return LaurentPoly({0: 1})


def const(c: int) -> LaurentPoly:
    return LaurentPoly({0: c})


def q_power(e: int) -> LaurentPoly:
    """The monomial q^e."""
    return LaurentPoly({e: 1})


def q_int(m: int) -> LaurentPoly:
    """The symmetric q-integer [m] = q^(m-1) + q^(m-3) + ... + q^(1-m).

    [0] is the zero polynomial.
    """
    if m < 0:
        raise ValueError(f"q_int requires m >= 0, got {m}")
    return LaurentPoly({m - 1 - 2 * j: 1 for j in range(m)})


@functools.lru_cache(maxsize=None)
def q_factorial(m: int) -> LaurentPoly:
    """[m]! = [1][2]...[m]."""
    if m < 0:
        raise ValueError(f"q_factorial requires m >= 0, got {m}")
    out = one()
    for j in range(1, m + 1):
        out = out * q_int(j)
    return out


@functools.lru_cache(maxsize=None)
def q_binomial(l: int, m: int) -> LaurentPoly:
    """The Gaussian binomial coefficient [l]! / ([m]! [l-m]!).

    Computed through the q-Pascal recurrence so that only Laurent
    arithmetic is needed, no polynomial division.
    """
    if m < 0 or m > l:
        raise ValueError(f"q_binomial requires 0 <= m <= l, got (l, m) = ({l}, {m})")
    if m == 0 or m == l:
        return one()
    return q_power(m) * q_binomial(l - 1, m) + q_power(m - l) * q_binomial(l - 1, m - 1)


def valuation(p: LaurentPoly):
    """Smallest exponent with a nonzero coefficient; +infinity for 0."""
    if p.is_zero():
        return math.inf
    return min(p.coeffs)


def in_A(p: LaurentPoly) -> bool:
    """Regular at q = 0, i.e. valuation >= 0."""
    return valuation(p) >= 0


def in_c_plus_qA(p: LaurentPoly, c: int) -> bool:
    """Membership in c + qA: constant term c, all else valuation >= 1."""
    return valuation(p - c) >= 1


def in_qn_A(p: LaurentPoly, nshift: int) -> bool:
    """Membership in q^nshift A, i.e. valuation >= nshift."""
    return valuation(p) >= nshift


def positive(p: LaurentPoly) -> bool:
    """True iff the coefficient at the lowest exponent is positive.

    This is the positivity notion of the q-adic total order. Undefined
    (and an error) for the zero polynomial.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial is neither positive nor negative")
    return p.coeff(min(p.coeffs)) > 0


def render(p: LaurentPoly) -> str:
    """Canonical text form with exponents ascending, e.g. "1 + q^2"."""
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs):
        c = p.coeff(e)
        if e == 0:
            body = str(abs(c))
        else:
            base = "q" if e == 1 else f"q^{e}"
            body = base if abs(c) == 1 else f"{abs(c)}*{base}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)
