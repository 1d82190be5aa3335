"""Dense exact matrices over the package's entry domains.

A matrix carries an ``EntryDomain`` tag (Laurent ring, Q(t), or Q) that
supplies the zero/one elements, coercion, and the division notion used by the
fraction-free elimination.  Determinants use the one-step fraction-free
(Bareiss) scheme, which stays inside the entry domain; rank and nullspace work
over the relevant fraction field and are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import (
    IndexOutOfRange,
    NotInvertible,
    NotSquare,
    NotUnitDeterminant,
    ShapeMismatch,
)
from .laurent import (
    ONE,
    ZERO,
    LaurentPoly,
    RationalFunction,
    parse_laurent,
    parse_rational,
)

__all__ = [
    "EntryDomain",
    "LAURENT",
    "RATFUNC",
    "QQ",
    "Matrix",
    "Subspace",
    "block_embed",
    "mat_vec",
    "stack",
    "domain_by_name",
    "register_domain",
]


@dataclass(frozen=True, eq=False)
class EntryDomain:
    """Bundle of ring/field operations for one entry type."""

    name: str
    zero: Any
    one: Any
    is_field: bool
    coerce: Callable[[Any], Any]
    is_unit: Callable[[Any], bool]
    exact_div: Callable[[Any, Any], Any]
    render: Callable[[Any], str]
    parse: Callable[[str], Any]

    def __repr__(self):
        return f"EntryDomain({self.name})"


def _coerce_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} into Q")


LAURENT = EntryDomain(
    name="laurent",
    zero=ZERO,
    one=ONE,
    is_field=False,
    coerce=LaurentPoly.coerce,
    is_unit=lambda f: f.is_unit(),
    exact_div=lambda a, b: a.exact_div(b),
    render=str,
    parse=parse_laurent,
)

RATFUNC = EntryDomain(
    name="ratfunc",
    zero=RationalFunction(0),
    one=RationalFunction(1),
    is_field=True,
    coerce=RationalFunction.coerce,
    is_unit=lambda x: not x.is_zero(),
    exact_div=lambda a, b: a / b,
    render=str,
    parse=parse_rational,
)

QQ = EntryDomain(
    name="rational",
    zero=Fraction(0),
    one=Fraction(1),
    is_field=True,
    coerce=_coerce_fraction,
    is_unit=lambda x: x != 0,
    exact_div=lambda a, b: a / b,
    render=str,
    parse=Fraction,
)

_DOMAINS: dict[str, EntryDomain] = {d.name: d for d in (LAURENT, RATFUNC, QQ)}


def register_domain(domain: EntryDomain) -> None:
    _DOMAINS[domain.name] = domain


def domain_by_name(name: str) -> EntryDomain:
    try:
        return _DOMAINS[name]
    except KeyError:
        raise ValueError(f"unknown entry domain {name!r}") from None


class Matrix:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("domain", "rows", "cols", "entries")

    def __init__(self, domain: EntryDomain, entries):
        rows = tuple(tuple(domain.coerce(e) for e in row) for row in entries)
        if not rows or not rows[0]:
            raise ShapeMismatch("matrices must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, domain: EntryDomain, n: int) -> Matrix:
        return cls(
            domain,
            [[domain.one if i == j else domain.zero for j in range(n)] for i in range(n)],
        )

    @classmethod
    def zeros(cls, domain: EntryDomain, rows: int, cols: int) -> Matrix:
        return cls(domain, [[domain.zero] * cols for _ in range(rows)])

    # -- access -------------------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        if not self.is_square():
            return False
        dom = self.domain
        return all(
            e == (dom.one if i == j else dom.zero)
            for i, row in enumerate(self.entries)
            for j, e in enumerate(row)
        )

    def is_zero(self) -> bool:
        z = self.domain.zero
        return all(e == z for row in self.entries for e in row)

    def map_entries(self, fn: Callable, domain: EntryDomain | None = None) -> Matrix:
        return Matrix(domain or self.domain, [[fn(e) for e in row] for row in self.entries])

    def transpose(self) -> Matrix:
        return Matrix(self.domain, list(zip(*self.entries)))

    # -- arithmetic ---------------------------------------------------------

    def _check_domain(self, other: Matrix):
        if self.domain is not other.domain:
            raise ShapeMismatch(
                f"mixed entry domains: {self.domain.name} vs {other.domain.name}"
            )

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_domain(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        cols = other.transpose().entries
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = self.domain.zero
                for a, b in zip(row, col):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.domain, out)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_domain(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeMismatch("shape mismatch in addition")
        return Matrix(
            self.domain,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, scalar) -> Matrix:
        s = self.domain.coerce(scalar) if not isinstance(scalar, int) else scalar
        return Matrix(self.domain, [[e * s for e in row] for row in self.entries])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.domain is other.domain
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.domain.name, self.entries))

    # -- elimination-based operations ------------------------------------------

    def det(self):
        """Fraction-free determinant; stays inside the entry domain."""
        if not self.is_square():
            raise NotSquare("determinant of a non-square matrix")
        n = self.rows
        dom = self.domain
        m = [list(row) for row in self.entries]
        sign = 1
        prev = dom.one
        for k in range(n - 1):
            pivot_row = next((r for r in range(k, n) if m[r][k] != dom.zero), None)
            if pivot_row is None:
                return dom.zero
            if pivot_row != k:
                m[k], m[pivot_row] = m[pivot_row], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = dom.exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
                m[i][k] = dom.zero
            prev = m[k][k]
        d = m[n - 1][n - 1]
        return d if sign > 0 else -d

    def _field_lift(self) -> Matrix:
        """View over the fraction field (Laurent entries go to Q(t))."""
        if self.domain.is_field:
            return self
        if self.domain is LAURENT:
            return self.map_entries(RationalFunction, RATFUNC)
        raise TypeError(f"no fraction field registered for {self.domain.name}")

    def rank(self) -> int:
        lifted = self._field_lift()
        reduced, pivots = lifted.rref()
        return len(pivots)

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        """Reduced row echelon form over a field; returns (matrix, pivot columns)."""
        if not self.domain.is_field:
            raise TypeError("rref needs field entries; lift Laurent matrices first")
        dom = self.domain
        m = [list(row) for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, self.rows) if m[i][c] != dom.zero), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = dom.exact_div(dom.one, m[r][c])
            m[r] = [e * inv for e in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != dom.zero:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(dom, m), tuple(pivots)

    def nullspace(self) -> "Subspace":
        """Basis of the right kernel, over a field."""
        reduced, pivots = self._field_lift().rref()
        dom = reduced.domain
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for f in free:
            vec = [dom.zero] * self.cols
            vec[f] = dom.one
            for r, p in enumerate(pivots):
                vec[p] = -reduced.entries[r][f]
            basis.append(tuple(vec))
        return Subspace(dom, self.cols, tuple(basis))

    def inverse(self) -> Matrix:
        if not self.is_square():
            raise NotSquare("inverse of a non-square matrix")
        dom = self.domain
        if dom.is_field:
            n = self.rows
            aug = Matrix(
                dom,
                [
                    list(row) + [dom.one if i == j else dom.zero for j in range(n)]
                    for i, row in enumerate(self.entries)
                ],
            )
            reduced, pivots = aug.rref()
            if pivots[:n] != tuple(range(n)):
                raise NotInvertible("matrix is singular", det=self.det())
            return Matrix(dom, [row[n:] for row in reduced.entries])
        if dom is LAURENT:
            d = self.det()
            if not d.is_unit():
                raise NotUnitDeterminant(
                    f"determinant {d} is not a unit of the Laurent ring", det=d
                )
            inv = self._field_lift().inverse()
            return inv.map_entries(lambda e: e.as_laurent(), LAURENT)
        raise TypeError(f"no inverse available over {dom.name}")

    # -- serialization / display -------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "domain": self.domain.name,
            "entries": [[self.domain.render(e) for e in row] for row in self.entries],
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> Matrix:
        dom = domain_by_name(obj["domain"])
        entries = [[dom.parse(e) for e in row] for row in obj["entries"]]
        m = cls(dom, entries)
        if (m.rows, m.cols) != (obj["rows"], obj["cols"]):
            raise ShapeMismatch("JSON shape header disagrees with entries")
        return m

    def __str__(self):
        rendered = [[self.domain.render(e) for e in row] for row in self.entries]
        widths = [max(len(rendered[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        lines = []
        for row in rendered:
            cells = ", ".join(cell.rjust(w) for cell, w in zip(row, widths))
            lines.append(f"[ {cells} ]")
        return "\n".join(lines)

    def __repr__(self):
        return f"Matrix({self.domain.name}, {self.rows}x{self.cols})"


@dataclass(frozen=True)
class Subspace:
    """A subspace given by an explicit basis, verified independent."""

    domain: EntryDomain
    ambient: int
    basis: tuple[tuple, ...]

    def __post_init__(self):
        for vec in self.basis:
            if len(vec) != self.ambient:
                raise ShapeMismatch("basis vector has wrong length")
        if self.basis:
            m = Matrix(self.domain, [list(v) for v in self.basis])
            if m.rank() != len(self.basis):
                raise ValueError("claimed basis is linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        if not self.basis:
            return all(e == self.domain.zero for e in vector)
        rows = [list(v) for v in self.basis]
        base_rank = Matrix(self.domain, rows).rank()
        extended = Matrix(self.domain, rows + [list(vector)])
        return extended.rank() == base_rank

    def to_json_dict(self) -> dict:
        return {
            "ambient": self.ambient,
            "dim": self.dim,
            "basis": [[self.domain.render(e) for e in vec] for vec in self.basis],
        }


def block_embed(block: Matrix, i: int, n: int) -> Matrix:
    """Embed a k x k block at strand position i into the identity, giving a
    matrix of size (n + k - 2): identity of size i-1, then the block, then
    identity of size n - i - 1."""
    if not block.is_square():
        raise NotSquare("block must be square")
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"position {i} not in 1..{n - 1}")
    k = block.rows
    dim = n + k - 2
    dom = block.domain
    entries = [[dom.one if r == c else dom.zero for c in range(dim)] for r in range(dim)]
    off = i - 1
    for r in range(k):
        for c in range(k):
            entries[off + r][off + c] = block.entries[r][c]
    return Matrix(dom, entries)


def mat_vec(m: Matrix, vec) -> tuple:
    if len(vec) != m.cols:
        raise ShapeMismatch("vector length does not match matrix columns")
    vec = [m.domain.coerce(v) for v in vec]
    out = []
    for row in m.entries:
        acc = m.domain.zero
        for a, b in zip(row, vec):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def stack(matrices) -> Matrix:
    """Stack matrices with equal column counts vertically."""
    matrices = list(matrices)
    if not matrices:
        raise ShapeMismatch("nothing to stack")
    dom = matrices[0].domain
    cols = matrices[0].cols
    rows = []
    for m in matrices:
        if m.domain is not dom or m.cols != cols:
            raise ShapeMismatch("stack needs one domain and one width")
        rows.extend(list(r) for r in m.entries)
    return Matrix(dom, rows)
