"""Exact arithmetic in Z[t, t^-1] and its fraction field Q(t).

``LaurentPoly`` stores a sparse exponent -> coefficient map with integer
coefficients; the map never contains zeros, so structural equality is ring
equality and hashing is sound.  ``RationalFunction`` keeps a reduced
numerator/denominator pair in a canonical form (denominator has lowest
exponent 0 and positive lowest coefficient).  Specializing t at a nonzero
rational lands in ``fractions.Fraction``, re-exported as ``FieldScalar``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import ZeroSpecialization

__all__ = [
    "FieldScalar",
    "LaurentPoly",
    "RationalFunction",
    "T",
    "ZERO",
    "ONE",
    "laurent_gcd",
    "parse_laurent",
    "parse_rational",
]

FieldScalar = Fraction


class LaurentPoly:
    """Sparse Laurent polynomial over the integers.

    >>> p = (T + 1) * (T - 1)
    >>> str(p)
    't^2 - 1'
    >>> p == LaurentPoly({2: 1, 0: -1})
    True
    >>> (T ** -3).is_unit()
    True
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for exp, coeff in terms.items():
                if not isinstance(coeff, int):
                    raise TypeError(f"coefficients must be integers, got {coeff!r}")
                if coeff:
                    data[int(exp)] = coeff
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors --------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: int(c)})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @staticmethod
    def coerce(value) -> LaurentPoly:
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return LaurentPoly({0: value})
        raise TypeError(f"cannot coerce {value!r} into the Laurent ring")

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {0: 1}

    def is_unit(self) -> bool:
        """Units of Z[t, t^-1] are exactly the monomials with coefficient +-1."""
        if len(self.terms) != 1:
            return False
        ((_, c),) = self.terms.items()
        return c in (1, -1)

    def inverse_unit(self) -> LaurentPoly:
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit")
        ((e, c),) = self.terms.items()
        return LaurentPoly({-e: c})

    def degree(self):
        """Largest exponent, or None for the zero polynomial."""
        return max(self.terms) if self.terms else None

    def valuation(self):
        """Smallest exponent, or None for the zero polynomial."""
        return min(self.terms) if self.terms else None

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, abs(c))
        return g

    def shifted(self, k: int) -> LaurentPoly:
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse_unit() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def exact_div(self, other) -> LaurentPoly:
        """Exact division in the ring; raises ValueError when the quotient
        would leave Z[t, t^-1]."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return ZERO
        va, vb = self.valuation(), other.valuation()
        a = _dense(self)
        b = _dense(other)
        qdeg = len(a) - len(b)
        if qdeg < 0:
            raise ValueError(f"({self}) is not an exact multiple of ({other})")
        lead = b[-1]
        rem = a[:]
        quo = [0] * (qdeg + 1)
        for k in range(qdeg, -1, -1):
            c = rem[k + len(b) - 1]
            if c % lead:
                raise ValueError(f"({self}) is not an exact multiple of ({other})")
            q = c // lead
            quo[k] = q
            if q:
                for j, bj in enumerate(b):
                    rem[k + j] -= q * bj
        if any(rem):
            raise ValueError(f"({self}) is not an exact multiple of ({other})")
        return LaurentPoly({k + va - vb: c for k, c in enumerate(quo) if c})

    # -- specialization --------------------------------------------------

    def evaluate(self, t0) -> Fraction:
        """Value at a nonzero rational t0."""
        t0 = Fraction(t0)
        if t0 == 0:
            raise ZeroSpecialization("t may not be specialized to 0")
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c * t0 ** e
        return total

    # -- comparison / text -------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                tpart = "t" if e == 1 else f"t^{e}"
                body = tpart if mag == 1 else f"{mag}*{tpart}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
T = LaurentPoly({1: 1})


def _dense(p: LaurentPoly) -> list[int]:
    """Coefficient list of p shifted to valuation 0."""
    v = p.valuation()
    d = p.degree()
    out = [0] * (d - v + 1)
    for e, c in p.terms.items():
        out[e - v] = c
    return out


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _frac_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of dense polynomial division over Q."""
    a = a[:]
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db:
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] / lead
        off = len(a) - 1 - db
        for j in range(db + 1):
            a[off + j] -= f * b[j]
        a.pop()
    return _trim(a)


def _primitive(coeffs: list[Fraction]) -> list[int]:
    """Scale a nonzero rational polynomial to a primitive integer polynomial
    with positive leading coefficient."""
    denom = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * denom) for c in coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def laurent_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """A gcd in Z[t, t^-1], canonicalized to valuation 0 with positive
    leading coefficient.  Includes the integer content, so e.g.
    laurent_gcd(2, 4*t) == 2."""
    if f.is_zero() and g.is_zero():
        return ZERO
    if f.is_zero() or g.is_zero():
        p = g if f.is_zero() else f
        dense = _dense(p)
        if dense[-1] < 0:
            dense = [-c for c in dense]
        return LaurentPoly({e: c for e, c in enumerate(dense) if c})
    cont = math.gcd(f.content(), g.content())
    a = [Fraction(c) for c in _dense(f)]
    b = [Fraction(c) for c in _dense(g)]
    while b:
        a, b = b, _frac_rem(a, b)
    prim = _primitive(a)
    return LaurentPoly({e: c * cont for e, c in enumerate(prim) if c})


class RationalFunction:
    """Element of Q(t) as a reduced fraction of Laurent polynomials.

    The canonical form has gcd(num, den) a unit, den with lowest exponent 0
    and positive lowest-degree coefficient, so structural equality is field
    equality.

    >>> RationalFunction(T ** 2 - 1, T + 1)
    RationalFunction('t - 1')
    >>> str(RationalFunction(ONE, 2 * T))
    '(1)/(2*t)'
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(t)")
        if num.is_zero():
            object.__setattr__(self, "num", ZERO)
            object.__setattr__(self, "den", ONE)
            return
        g = laurent_gcd(num, den)
        if not g.is_unit():
            num = num.exact_div(g)
            den = den.exact_div(g)
        shift = -den.valuation()
        num = num.shifted(shift)
        den = den.shifted(shift)
        if den.terms[0] < 0:
            num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @staticmethod
    def coerce(value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, LaurentPoly)):
            return RationalFunction(value)
        if isinstance(value, Fraction):
            return RationalFunction(
                LaurentPoly.constant(value.numerator),
                LaurentPoly.constant(value.denominator),
            )
        raise TypeError(f"cannot coerce {value!r} into Q(t)")

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        """True when the reduced denominator is a unit, i.e. the value lies
        in Z[t, t^-1] up to the unit."""
        return self.den.is_unit()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num * self.den.inverse_unit()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFunction)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Q(t)")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return other / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_zero():
                raise ZeroDivisionError("inverting zero in Q(t)")
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def evaluate(self, t0) -> Fraction:
        top = self.num.evaluate(t0)
        bottom = self.den.evaluate(t0)
        if bottom == 0:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at t = {t0}")
        return top / bottom

    # -- comparison / text ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPoly, Fraction)):
            other = RationalFunction.coerce(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RationalFunction('{self}')"


RF_ZERO = RationalFunction(0)
RF_ONE = RationalFunction(1)


_TERM_RE = re.compile(r"([+-]?)(?:(\d+)\*?)?(t(?:\^(-?\d+))?)?")


def parse_laurent(text: str) -> LaurentPoly:
    """Parse the rendering produced by ``str(LaurentPoly)``.

    Accepts e.g. '0', '-t', '2*t^3 - 1', 't^-2 + 4'.  Whitespace around
    '+'/'-' is ignored; every other deviation is an error.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError(f"empty Laurent literal: {text!r}")
    terms: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"bad Laurent literal: {text!r}")
        sign, coeff, tpart, exp = m.groups()
        if coeff is None and tpart is None:
            raise ValueError(f"bad Laurent literal: {text!r}")
        if not first and sign == "":
            raise ValueError(f"missing sign between terms: {text!r}")
        c = int(coeff) if coeff is not None else 1
        if sign == "-":
            c = -c
        if tpart is None:
            e = 0
        else:
            e = int(exp) if exp is not None else 1
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
        first = False
    return LaurentPoly(terms)


_RATFUNC_RE = re.compile(r"^\((?P<num>[^()]*)\)/\((?P<den>[^()]*)\)$")


def parse_rational(text: str) -> RationalFunction:
    """Parse the rendering produced by ``str(RationalFunction)``."""
    s = text.strip()
    m = _RATFUNC_RE.match(s)
    if m:
        return RationalFunction(parse_laurent(m.group("num")), parse_laurent(m.group("den")))
    return RationalFunction(parse_laurent(s))
