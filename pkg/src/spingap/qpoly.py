"""Exact arithmetic for univariate polynomials in q over the rationals.

Everything this package computes with -- character degrees, group orders,
classification bounds -- is a polynomial in the field-size parameter q.
This module keeps that arithmetic exact: coefficients are
`fractions.Fraction`, stored ascending by exponent with no trailing
zeros, and no floating point is used anywhere.

Half-integral coefficients are normal here (many character degrees carry
a global factor 1/2); integrality only appears after evaluation at a
concrete odd q.

The one non-trivial decision procedure is `dominates_from`: it settles
p1(q) < p2(q) for *all* integers q >= q0 by evaluating the difference at
every integer up to its Cauchy root bound, beyond which the sign of the
leading coefficient takes over.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DivisionByZero, NonExactDivision, ZeroPolynomial

__all__ = [
    "QPoly",
    "ZERO",
    "ONE",
    "Q",
    "q_power",
    "q_minus",
    "q_plus",
    "dominates_from",
    "certainly_dominates_from",
]


class QPoly:
    """A univariate polynomial in q with exact rational coefficients.

    Immutable; coefficients ascend by exponent and the last one is
    nonzero (the zero polynomial has an empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree in q; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, e: int) -> Fraction:
        if 0 <= e < len(self.coeffs):
            return self.coeffs[e]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    # -- ring operations ------------------------------------------------

    def __add__(self, other) -> "QPoly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "QPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "QPoly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            return QPoly([c * other for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other) -> "QPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero scalar")
            return QPoly([c / other for c in self.coeffs])
        return self.divide_exact(other)

    # -- the operations the rest of the package relies on ----------------

    def eval_at(self, q) -> Fraction:
        """Exact value of the polynomial at a rational point (Horner)."""
        q = q if isinstance(q, Fraction) else Fraction(q)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def divide_exact(self, d: "QPoly") -> "QPoly":
        """Quotient self/d, raising NonExactDivision on any remainder."""
        if not isinstance(d, QPoly):
            raise TypeError("divisor must be a QPoly")
        if d.is_zero():
            raise DivisionByZero("polynomial division by zero")
        if self.is_zero():
            return ZERO
        if self.degree() < d.degree():
            raise NonExactDivision(f"{self} is not divisible by {d}")
        rem = list(self.coeffs)
        dc = d.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        quot = [Fraction(0)] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c / lead
            quot[i - dd] = f
            for j, dj in enumerate(dc):
                rem[i - dd + j] -= f * dj
        if any(rem):
            raise NonExactDivision(f"{self} is not divisible by {d}")
        return QPoly(quot)

    def q_valuation(self) -> int:
        """Exponent of the lowest nonzero term."""
        if self.is_zero():
            raise ZeroPolynomial("q-valuation of the zero polynomial")
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise AssertionError("unreachable: canonical form violated")

    # -- serialization ----------------------------------------------------

    def to_strings(self) -> list[str]:
        """Ascending coefficient list as "num/den" strings (den omitted when 1)."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items) -> "QPoly":
        return cls([Fraction(s) for s in items])

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "q" if e == 1 else f"q^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({self})"


def _coerce(value) -> QPoly:
    if isinstance(value, QPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return QPoly([value])
    raise TypeError(f"cannot coerce {value!r} to QPoly")


ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([0, 1])


def q_power(e: int, coeff=1) -> QPoly:
    """The monomial coeff * q^e."""
    if e < 0:
        raise ValueError("negative exponent")
    return QPoly([0] * e + [coeff])


def q_minus(e: int) -> QPoly:
    """q^e - 1."""
    return QPoly([-1] + [0] * (e - 1) + [1])


def q_plus(e: int) -> QPoly:
    """q^e + 1."""
    return QPoly([1] + [0] * (e - 1) + [1])


def cauchy_bound(p: QPoly) -> Fraction:
    """1 + max |a_i| / |a_lead|: every real root of p is below this."""
    if p.is_zero():
        raise ZeroPolynomial("root bound of the zero polynomial")
    lead = abs(p.leading())
    top = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + top / lead


def dominates_from(p1: QPoly, p2: QPoly, q0: int) -> bool:
    """Rigorously decide p1(q) < p2(q) for every integer q >= q0.

    The difference d = p2 - p1 is evaluated at each integer in
    [q0, cauchy_bound(d)]; past the bound d has no real roots, so the
    sign of its leading coefficient settles the rest.
    """
    if q0 < 2:
        raise ValueError("q0 must be at least 2")
    d = _coerce(p2) - _coerce(p1)
    if d.is_zero():
        return False
    if d.leading() <= 0:
        return False
    hi = int(cauchy_bound(d))
    for q in range(q0, hi + 1):
        if d.eval_at(q) <= 0:
            return False
    return True


def certainly_dominates_from(p1: QPoly, p2: QPoly, q0: int) -> bool:
    """Cheap sufficient test for dominates_from (never a false positive).

    With d = p2 - p1 of degree k and positive lead a_k, the condition
    a_k * q0^k > sum_{i<k} |a_i| * q0^i forces d(q) > 0 for all q >= q0.
    Used as a fast filter before the exhaustive check.
    """
    d = _coerce(p2) - _coerce(p1)
    if d.is_zero() or d.leading() <= 0:
        return False
    cs = d.coeffs
    # Horner over |a_i| at q0, excluding the leading term.
    tail = Fraction(0)
    for c in reversed(cs[:-1]):
        tail = tail * q0 + abs(c)
    return cs[-1] * Fraction(q0) ** (len(cs) - 1) > tail
