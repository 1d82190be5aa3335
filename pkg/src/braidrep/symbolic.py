"""Polynomials in named unknowns with coefficients in Q(t).

``SymPoly`` is the sparse multivariate polynomial type used to assemble
matrix-relation constraints before anything is known about their degree;
``LinearExpr`` is its affine slice, the currency of the linear solver.  A
monomial is a sorted tuple of (name, power) pairs, the empty tuple being the
constant monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .laurent import LaurentPoly, RationalFunction
from .matrix import EntryDomain, register_domain

__all__ = ["SymPoly", "LinearExpr", "SYMBOLIC"]

Mono = tuple


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    powers: dict[str, int] = dict(m1)
    for name, k in m2:
        powers[name] = powers.get(name, 0) + k
    return tuple(sorted(powers.items()))


def _mono_degree(m: Mono) -> int:
    return sum(k for _, k in m)


class SymPoly:
    """Sparse polynomial in named unknowns over Q(t)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = RationalFunction.coerce(coeff)
                if not coeff.is_zero():
                    data[mono] = coeff
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("SymPoly is immutable")

    @classmethod
    def const(cls, value) -> SymPoly:
        return cls({(): RationalFunction.coerce(value)})

    @classmethod
    def symbol(cls, name: str) -> SymPoly:
        return cls({((name, 1),): RationalFunction(1)})

    @staticmethod
    def coerce(value) -> SymPoly:
        if isinstance(value, SymPoly):
            return value
        if isinstance(value, (int, Fraction, LaurentPoly, RationalFunction)):
            return SymPoly.const(value)
        raise TypeError(f"cannot coerce {value!r} into a symbolic polynomial")

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[str]:
        return {name for mono in self.terms for name, _ in mono}

    def degree(self) -> int:
        """Total degree in the unknowns; the zero polynomial has degree -1."""
        if not self.terms:
            return -1
        return max(_mono_degree(m) for m in self.terms)

    def is_linear(self) -> bool:
        return self.degree() <= 1

    def linear_parts(self) -> tuple[RationalFunction, dict[str, RationalFunction]]:
        """Split an affine polynomial into (constant, coefficient map)."""
        if not self.is_linear():
            raise ValueError(f"{self} has degree {self.degree()} > 1")
        constant = RationalFunction(0)
        coeffs: dict[str, RationalFunction] = {}
        for mono, coeff in self.terms.items():
            if mono == ():
                constant = coeff
            else:
                ((name, _),) = mono
                coeffs[name] = coeff
        return constant, coeffs

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            other = SymPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = terms.get(mono)
            terms[mono] = coeff if acc is None else acc + coeff
        return SymPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return SymPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = SymPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = SymPoly.coerce(other)
        except TypeError:
            return NotImplemented
        terms: dict[Mono, RationalFunction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                prod = c1 * c2
                acc = terms.get(m)
                terms[m] = prod if acc is None else acc + prod
        return SymPoly(terms)

    __rmul__ = __mul__

    def substitute(self, mapping: dict[str, "SymPoly"]) -> SymPoly:
        """Replace unknowns by polynomials; unmapped names stay symbolic."""
        out = SymPoly()
        for mono, coeff in self.terms.items():
            term = SymPoly.const(coeff)
            for name, power in mono:
                factor = mapping.get(name, SymPoly.symbol(name))
                for _ in range(power):
                    term = term * factor
            out = out + term
        return out

    # -- comparison / text -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, RationalFunction)):
            other = SymPoly.const(other)
        if not isinstance(other, SymPoly):
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
        for mono in sorted(self.terms, key=lambda m: (-_mono_degree(m), m)):
            coeff = self.terms[mono]
            body = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in mono
            )
            if not body:
                pieces.append(str(coeff))
            elif coeff.is_one():
                pieces.append(body)
            elif (-coeff).is_one():
                pieces.append(f"-{body}")
            elif coeff.den.is_one() and len(coeff.num.terms) == 1:
                pieces.append(f"{coeff}*{body}")
            else:
                pieces.append(f"({coeff})*{body}")
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"SymPoly('{self}')"


def _sym_is_unit(p: SymPoly) -> bool:
    return set(p.terms) == {()} and not p.terms[()].is_zero()


def _sym_exact_div(a: SymPoly, b: SymPoly) -> SymPoly:
    if not _sym_is_unit(b):
        raise ValueError("symbolic division is only available by nonzero constants")
    inv = RationalFunction(1) / b.terms[()]
    return SymPoly({m: c * inv for m, c in a.terms.items()})


SYMBOLIC = EntryDomain(
    name="symbolic",
    zero=SymPoly(),
    one=SymPoly.const(1),
    is_field=False,
    coerce=SymPoly.coerce,
    is_unit=_sym_is_unit,
    exact_div=_sym_exact_div,
    render=str,
    parse=None,
)
register_domain(SYMBOLIC)


@dataclass(frozen=True)
class LinearExpr:
    """Affine expression in named unknowns with Q(t) coefficients.

    ``coeffs`` is a name-sorted tuple of (unknown, coefficient) pairs with
    all coefficients nonzero, so equality and hashing are structural.
    """

    constant: RationalFunction
    coeffs: tuple[tuple[str, RationalFunction], ...]

    @classmethod
    def build(cls, constant=0, coeffs: dict | None = None) -> LinearExpr:
        cleaned = []
        for name in sorted(coeffs or {}):
            c = RationalFunction.coerce(coeffs[name])
            if not c.is_zero():
                cleaned.append((name, c))
        return cls(RationalFunction.coerce(constant), tuple(cleaned))

    @classmethod
    def from_sympoly(cls, p: SymPoly) -> LinearExpr:
        constant, coeffs = p.linear_parts()
        return cls.build(constant, coeffs)

    def to_sympoly(self) -> SymPoly:
        terms = {(): self.constant}
        for name, c in self.coeffs:
            terms[((name, 1),)] = c
        return SymPoly(terms)

    def coeff_map(self) -> dict[str, RationalFunction]:
        return dict(self.coeffs)

    def is_zero(self) -> bool:
        return self.constant.is_zero() and not self.coeffs

    def negated(self) -> LinearExpr:
        return LinearExpr(-self.constant, tuple((n, -c) for n, c in self.coeffs))

    def substitute(self, values: dict) -> RationalFunction:
        """Evaluate with every unknown bound to a Q(t) value."""
        total = self.constant
        for name, c in self.coeffs:
            if name not in values:
                raise KeyError(f"no value for unknown {name!r}")
            total = total + c * RationalFunction.coerce(values[name])
        return total

    def rename(self, old: str, new: str) -> LinearExpr:
        if all(name != old for name, _ in self.coeffs):
            return self
        coeffs = {new if name == old else name: c for name, c in self.coeffs}
        return LinearExpr.build(self.constant, coeffs)

    def render(self) -> str:
        """Compact text such as 'a', 'c*t', '2 + x*(t+1)'."""
        pieces = []
        for name, c in self.coeffs:
            if c.is_one():
                pieces.append(name)
            elif (-c).is_one():
                pieces.append(f"-{name}")
            elif c.den.is_one() and len(c.num.terms) == 1 and c.num.terms[c.num.degree()] > 0:
                pieces.append(f"{name}*{c}")
            elif c.den.is_one() and len(c.num.terms) == 1:
                pieces.append(f"-{name}*{-c}")
            else:
                pieces.append(f"{name}*({c})")
        if not self.constant.is_zero() or not pieces:
            pieces.append(str(self.constant))
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LinearExpr('{self.render()}')"
