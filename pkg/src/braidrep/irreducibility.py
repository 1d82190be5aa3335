"""Irreducibility of specialized representations via the span criterion.

A set of matrices over a field acts irreducibly (over the algebraic closure)
exactly when the unital algebra it generates is the full matrix algebra.
The dimension of that algebra is a rank over the base field and ranks do not
change under field extension, so exact rational arithmetic settles the
question outright: span = dim^2 certifies irreducibility, span < dim^2
certifies a proper invariant subspace exists over the closure.

Witness extraction (an explicit invariant line) is best effort: common fixed
vectors, the all-ones direction, and simultaneous rational eigenvectors.  A
verdict never depends on finding a witness, since eigenvectors may need
irrational coordinates that the span criterion happily avoids.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

from .errors import SingularTau, ZeroSpecialization
from .laurent import RationalFunction
from .matrix import (
    LAURENT,
    QQ,
    RATFUNC,
    EntryDomain,
    Matrix,
    Subspace,
    block_embed,
    mat_vec,
    stack,
)
from .presentations import SIGMA, TAU
from .reps import Representation, singular_extension_specialized, standard_block

__all__ = [
    "SpecializedRep",
    "IrreducibilityVerdict",
    "GridCell",
    "GridReport",
    "specialize",
    "specialized_extension",
    "symbolic_extension",
    "matrix_algebra_span",
    "burnside_span",
    "is_irreducible",
    "all_ones_check",
    "orbit_closure",
    "invariant_line_witness",
    "predicted_irreducible",
    "grid_report",
]


@dataclass(frozen=True)
class SpecializedRep:
    """A representation with field entries: t evaluated at a nonzero rational,
    or kept symbolic with entries promoted to Q(t) (t0 is None)."""

    rep: Representation
    t0: Fraction | None

    @property
    def n(self) -> int:
        return self.rep.n

    @property
    def dim(self) -> int:
        return self.rep.dim

    @property
    def domain(self) -> EntryDomain:
        return self.rep.domain

    def images(self) -> list[Matrix]:
        return [self.rep.assignment[key] for key in self.rep.generator_keys()]

    def describe(self) -> str:
        at = "t symbolic" if self.t0 is None else f"t={self.t0}"
        return f"{self.rep.name or self.rep.mode} (n={self.n}, {at})"


def specialize(rep: Representation, t0) -> SpecializedRep:
    """Evaluate every Laurent entry at t0, or lift to Q(t) when t0 is None."""
    if rep.domain is not LAURENT:
        raise TypeError(f"can only specialize Laurent-entry representations, got {rep.domain.name}")
    if t0 is None:
        assignment = {key: m._field_lift() for key, m in rep.assignment.items()}
        marker = None
    else:
        t0 = Fraction(t0)
        if t0 == 0:
            raise ZeroSpecialization("t may not be specialized to 0")
        assignment = {
            key: m.map_entries(lambda e: e.evaluate(t0), QQ)
            for key, m in rep.assignment.items()
        }
        marker = t0
    spec = Representation(rep.n, rep.mode, assignment, group=rep.group,
                          name=rep.name, params=dict(rep.params))
    return SpecializedRep(spec, marker)


def specialized_extension(n: int, t0, a, c, group: bool = True) -> SpecializedRep:
    """Singular extension with rational parameters at a rational point t0."""
    t0 = Fraction(t0)
    rep = singular_extension_specialized(n, t0, a, c, group=group)
    return SpecializedRep(rep, t0)


def symbolic_extension(n: int, a, c, group: bool = True) -> SpecializedRep:
    """Singular extension over Q(t): t stays a variable, a and c rational."""
    a = RationalFunction.coerce(Fraction(a))
    c = RationalFunction.coerce(Fraction(c))
    sblock = standard_block()._field_lift()
    t = sblock.entries[0][1]
    tblock = Matrix(RATFUNC, [[a, c * t], [c, a]])
    assignment = {(SIGMA, i): block_embed(sblock, i, n) for i in range(1, n)}
    assignment.update({(TAU, i): block_embed(tblock, i, n) for i in range(1, n)})
    rep = Representation(n, "singular", assignment, group=group,
                         name="singular-ext", params={"a": str(a), "c": str(c)})
    return SpecializedRep(rep, None)


# -- algebra span ------------------------------------------------------------


def matrix_algebra_span(images: list[Matrix]) -> int:
    """Dimension of the unital algebra generated by the given field matrices.

    Breadth-first closure: seed with the identity and the images, then keep
    right-multiplying new basis elements by the images, inserting each product
    into an exact echelon basis until nothing new appears (or the full
    dim^2 is reached, at which point nothing larger is possible).

    Over Q(t) no specialization has been chosen, so the powers of t are
    treated as independent scalars: independence is measured over Q on
    (cell, exponent) coordinates, still capped at dim^2.  See _scalar_span.
    """
    if not images:
        raise ValueError("need at least one matrix")
    dom = images[0].domain
    if not dom.is_field:
        images = [m._field_lift() for m in images]
        dom = images[0].domain
    if dom is RATFUNC:
        return _scalar_span(images)
    d = images[0].rows
    cap = d * d
    echelon: list[tuple[int, list]] = []

    def insert(m: Matrix) -> bool:
        v = [e for row in m.entries for e in row]
        for pivot, basis_row in echelon:
            coeff = v[pivot]
            if coeff != dom.zero:
                v = [x - coeff * y for x, y in zip(v, basis_row)]
        lead = next((k for k, e in enumerate(v) if e != dom.zero), None)
        if lead is None:
            return False
        inv = dom.exact_div(dom.one, v[lead])
        echelon.append((lead, [e * inv for e in v]))
        return True

    frontier: list[Matrix] = []
    for m in [Matrix.identity(dom, d), *images]:
        if insert(m):
            frontier.append(m)
        if len(echelon) == cap:
            return cap
    while frontier:
        fresh: list[Matrix] = []
        for m in frontier:
            for g in images:
                product = m * g
                if insert(product):
                    fresh.append(product)
                    if len(echelon) == cap:
                        return cap
        frontier = fresh
    return len(echelon)


def _flatten_cells(m: Matrix) -> dict[tuple[int, int, int], Fraction]:
    """Coordinates of a Q(t)-entry matrix in the Q-basis (cell, t-exponent)."""
    out: dict[tuple[int, int, int], Fraction] = {}
    for i, row in enumerate(m.entries):
        for j, entry in enumerate(row):
            if len(entry.den.terms) > 1:
                raise TypeError(f"entry {entry} is not a Laurent combination of t powers")
            if entry.num.is_zero():
                continue
            bottom = entry.den.terms[0]
            for exp, coeff in entry.num.terms.items():
                out[(i, j, exp)] = Fraction(coeff, bottom)
    return out


def _scalar_span(images: list[Matrix]) -> int:
    """Span over Q of the word closure, on (cell, t-exponent) coordinates.

    With t left symbolic there is no ground value to collapse its powers, so
    t^k I and t^m I count as independent directions for k != m.  The count is
    still capped at dim^2: reaching the cap means the images already separate
    as many directions as any single specialization possibly could.
    """
    d = images[0].rows
    cap = d * d
    echelon: list[tuple[tuple[int, int, int], dict]] = []

    def insert(m: Matrix) -> bool:
        v = _flatten_cells(m)
        for pivot, basis_row in echelon:
            coeff = v.get(pivot)
            if coeff:
                v = {k: val for k in set(v) | set(basis_row)
                     if (val := v.get(k, 0) - coeff * basis_row.get(k, 0))}
        if not v:
            return False
        pivot = min(v)
        scale = v[pivot]
        echelon.append((pivot, {k: val / scale for k, val in v.items()}))
        return True

    frontier: list[Matrix] = []
    for m in [Matrix.identity(RATFUNC, d), *images]:
        if insert(m):
            frontier.append(m)
        if len(echelon) >= cap:
            return cap
    while frontier:
        fresh: list[Matrix] = []
        for m in frontier:
            for g in images:
                product = m * g
                if insert(product):
                    fresh.append(product)
                    if len(echelon) >= cap:
                        return cap
        frontier = fresh
    return len(echelon)


def burnside_span(spec: SpecializedRep) -> int:
    return matrix_algebra_span(spec.images())


# -- witness search ----------------------------------------------------------


def all_ones_check(spec: SpecializedRep) -> bool:
    """True iff every image maps (1, ..., 1)^T to a scalar multiple of it."""
    dom = spec.domain
    ones = [dom.one] * spec.dim
    for g in spec.images():
        w = mat_vec(g, ones)
        if any(e != w[0] for e in w[1:]):
            return False
    return True


def _char_poly(m: Matrix) -> list[Fraction]:
    """Monic characteristic polynomial coefficients, highest power first.

    Trace recurrence: M_1 = A, c_k = tr(M_k)/k, M_{k+1} = A(M_k - c_k I);
    then det(xI - A) = x^d - c_1 x^(d-1) - ... - c_d.
    """
    d = m.rows
    identity = Matrix.identity(QQ, d)
    coeffs = [Fraction(1)]
    power = m
    for k in range(1, d + 1):
        ck = sum((power.entries[i][i] for i in range(d)), Fraction(0)) / k
        coeffs.append(-ck)
        if k < d:
            power = m * (power - identity.scaled(ck))
    return coeffs


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            out.append(k)
            if k * k != n:
                out.append(n // k)
    return sorted(out)


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of the polynomial with the given coefficients
    (highest power first), via the rational root bound after clearing
    denominators."""
    scale = lcm(*(c.denominator for c in coeffs)) if len(coeffs) > 1 else 1
    ints = [int(c * scale) for c in coeffs]
    roots = []
    while ints and ints[-1] == 0:
        ints.pop()
        if 0 not in roots:
            roots.append(Fraction(0))
    if len(ints) < 2:
        return roots
    lead, const = ints[0], ints[-1]
    seen = set(roots)
    for p in _divisors(const):
        for q in _divisors(lead):
            for candidate in (Fraction(p, q), Fraction(-p, q)):
                if candidate in seen:
                    continue
                value = Fraction(0)
                for c in ints:
                    value = value * candidate + c
                if value == 0:
                    seen.add(candidate)
                    roots.append(candidate)
    return sorted(roots)


def _eigenspaces(m: Matrix) -> list[list[tuple]]:
    """Bases (as vector lists) of the rational eigenspaces of a Q-matrix."""
    out = []
    identity = Matrix.identity(QQ, m.rows)
    for lam in _rational_roots(_char_poly(m)):
        space = (m - identity.scaled(lam)).nullspace()
        if space.dim:
            out.append([list(v) for v in space.basis])
    return out


def _independent(vectors: list, dom: EntryDomain) -> list:
    """Echelon-filter a list of vectors down to an independent subset."""
    echelon: list[tuple[int, list]] = []
    kept = []
    for vec in vectors:
        v = list(vec)
        for pivot, row in echelon:
            coeff = v[pivot]
            if coeff != dom.zero:
                v = [x - coeff * y for x, y in zip(v, row)]
        lead = next((k for k, e in enumerate(v) if e != dom.zero), None)
        if lead is None:
            continue
        inv = dom.exact_div(dom.one, v[lead])
        echelon.append((lead, [e * inv for e in v]))
        kept.append(list(vec))
    return kept


def _intersect(basis1: list, basis2: list, dom: EntryDomain, ambient: int) -> list:
    """Basis of span(basis1) meet span(basis2)."""
    if not basis1 or not basis2:
        return []
    cols = len(basis1) + len(basis2)
    rows = []
    for i in range(ambient):
        rows.append([b[i] for b in basis1] + [-b[i] for b in basis2])
    null = Matrix(dom, rows).nullspace()
    vectors = []
    for coeff in null.basis:
        vec = [dom.zero] * ambient
        for k, b in enumerate(basis1):
            if coeff[k] != dom.zero:
                vec = [x + coeff[k] * y for x, y in zip(vec, b)]
        vectors.append(vec)
    return _independent(vectors, dom)


def _maps_into(images: list[Matrix], sub: Subspace) -> bool:
    return all(sub.contains(mat_vec(g, v)) for g in images for v in sub.basis)


def invariant_line_witness(spec: SpecializedRep) -> Subspace | None:
    """Best-effort explicit invariant subspace for a reducible specialization.

    Tries, in order: the all-ones line, the common fixed subspace, and (over
    Q) a simultaneous rational eigenvector.  Returns None when all three come
    up empty; reducibility itself is already settled by the span criterion.
    """
    dom = spec.domain
    d = spec.dim
    images = spec.images()
    if all_ones_check(spec):
        ones = Subspace(dom, d, (tuple([dom.one] * d),))
        if _maps_into(images, ones):
            return ones
    identity = Matrix.identity(dom, d)
    fixed = stack([g - identity for g in images]).nullspace()
    if fixed.dim:
        if _maps_into(images, fixed):
            return fixed
    if dom is not QQ:
        return None
    candidates: list[list] | None = None
    for g in images:
        spaces = _eigenspaces(g)
        if candidates is None:
            candidates = spaces
        else:
            candidates = [
                meet
                for prev in candidates
                for space in spaces
                for meet in [_intersect(prev, space, dom, d)]
                if meet
            ]
        if not candidates:
            return None
    for space in candidates or []:
        line = Subspace(dom, d, (tuple(space[0]),))
        if _maps_into(images, line):
            return line
    return None


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str  # "irreducible" | "reducible"
    span_dim: int
    dim: int
    witness: Subspace | None

    @property
    def irreducible(self) -> bool:
        return self.status == "irreducible"

    def to_json_dict(self) -> dict:
        out = {"status": self.status, "span_dim": self.span_dim,
               "full_dim": self.dim * self.dim}
        if self.witness is not None:
            out["witness"] = self.witness.to_json_dict()
        return out


def is_irreducible(spec: SpecializedRep) -> IrreducibilityVerdict:
    span = burnside_span(spec)
    d = spec.dim
    if span == d * d:
        return IrreducibilityVerdict("irreducible", span, d, None)
    witness = invariant_line_witness(spec)
    if witness is not None:
        assert _maps_into(spec.images(), witness)
    return IrreducibilityVerdict("reducible", span, d, witness)


def orbit_closure(spec: SpecializedRep, vector) -> Subspace:
    """Smallest subspace containing the vector and stable under every image."""
    dom = spec.domain
    d = spec.dim
    images = spec.images()
    echelon: list[tuple[int, list]] = []
    kept: list[tuple] = []

    def insert(vec) -> bool:
        v = [dom.coerce(e) for e in vec]
        for pivot, row in echelon:
            coeff = v[pivot]
            if coeff != dom.zero:
                v = [x - coeff * y for x, y in zip(v, row)]
        lead = next((k for k, e in enumerate(v) if e != dom.zero), None)
        if lead is None:
            return False
        inv = dom.exact_div(dom.one, v[lead])
        echelon.append((lead, [e * inv for e in v]))
        kept.append(tuple(dom.coerce(e) for e in vec))
        return True

    frontier = []
    if insert(vector):
        frontier.append(tuple(dom.coerce(e) for e in vector))
    while frontier and len(kept) < d:
        fresh = []
        for v in frontier:
            for g in images:
                w = mat_vec(g, v)
                if insert(w):
                    fresh.append(w)
        frontier = fresh
    return Subspace(dom, d, tuple(kept))


# -- parameter grid ----------------------------------------------------------


def predicted_irreducible(t0, a, c) -> bool:
    """The dichotomy the grid is compared against: irreducible away from
    t = 1, and at t = 1 exactly when a + c != 1."""
    return Fraction(t0) != 1 or Fraction(a) + Fraction(c) != 1


@dataclass(frozen=True)
class GridCell:
    n: int
    t0: Fraction
    a: Fraction
    c: Fraction
    span_dim: int
    verdict: str
    predicted: str
    agree: bool
    watch: bool  # n = 2 cells are expected to diverge from the prediction

    def csv_row(self) -> str:
        return ",".join([
            str(self.n), str(self.t0), str(self.a), str(self.c),
            str(self.span_dim), self.verdict, self.predicted,
            "yes" if self.agree else "no",
        ])

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "t0": str(self.t0), "a": str(self.a), "c": str(self.c),
            "span_dim": self.span_dim, "verdict": self.verdict,
            "predicted": self.predicted, "agree": self.agree, "watch": self.watch,
        }


@dataclass(frozen=True)
class GridReport:
    cells: tuple[GridCell, ...]

    @property
    def agreements(self) -> int:
        return sum(1 for cell in self.cells if cell.agree)

    @property
    def divergences(self) -> tuple[GridCell, ...]:
        return tuple(cell for cell in self.cells if not cell.agree)

    @property
    def status(self) -> str:
        bad = self.divergences
        if not bad:
            return "pass"
        if all(cell.watch for cell in bad):
            return "divergence"
        return "fail"

    def csv(self) -> str:
        lines = ["n,t0,a,c,span_dim,verdict,predicted,agree"]
        lines.extend(cell.csv_row() for cell in self.cells)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "cells": [cell.to_json_dict() for cell in self.cells],
            "agreements": self.agreements,
            "divergences": [cell.to_json_dict() for cell in self.divergences],
            "status": self.status,
        }


def grid_cell(n: int, t0, a, c) -> GridCell:
    t0, a, c = Fraction(t0), Fraction(a), Fraction(c)
    if a * a - t0 * c * c == 0:
        raise SingularTau(
            f"(a, c) = ({a}, {c}) makes the block determinant vanish at t = {t0}")
    spec = specialized_extension(n, t0, a, c, group=True)
    verdict = is_irreducible(spec)
    predicted = predicted_irreducible(t0, a, c)
    return GridCell(
        n=n, t0=t0, a=a, c=c,
        span_dim=verdict.span_dim,
        verdict=verdict.status,
        predicted="irreducible" if predicted else "reducible",
        agree=verdict.irreducible == predicted,
        watch=(n == 2),
    )


def grid_report(n: int, t_samples, ac_samples) -> GridReport:
    cells = [grid_cell(n, t0, a, c) for t0 in t_samples for (a, c) in ac_samples]
    return GridReport(tuple(cells))
