"""The catalog of matrix representations and relation checking.

Crossing generators act by a 2x2 block embedded at the strand position; the
three named braid representations differ only in that block:

    standard   [[0, t], [1, 0]]
    burau      [[1-t, t], [1, 0]]
    f          [[1, 1, 0], [0, -t, 0], [0, t, 1]]   (3x3 block, dimension n+1)

The singular extension sends the singular generator at position i to the
embedded block [[a, c*t], [c, a]] = a*I + c*(standard block), with parameters
a, c from the Laurent ring.  On two strands the virtual extension additionally
sends the virtual generator to one of five involution families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BadStrandCount,
    DivisibilityViolation,
    ModeMismatch,
    NonInvertibleLetter,
    NonInvertibleTau,
    NotUnitDeterminant,
    UnassignedGenerator,
    ZeroQ,
    ZeroSpecialization,
)
from .laurent import ONE, T, LaurentPoly
from .matrix import LAURENT, QQ, EntryDomain, Matrix, block_embed
from .presentations import NU, SIGMA, TAU, Presentation, Relation, Word

__all__ = [
    "Representation",
    "Violation",
    "InvolutionFamily",
    "standard_block",
    "standard_rep",
    "burau_rep",
    "f_rep",
    "tau_block",
    "singular_extension",
    "singular_extension_specialized",
    "involution_matrix",
    "vsb2_extension",
    "evaluate_word",
    "verify_relations",
]


class Representation:
    """An assignment of a square matrix to every generator of one mode.

    ``group`` records whether t-kind letters may be inverted when evaluating
    words; s- and v-kind images are always invertible by construction.
    """

    def __init__(self, n: int, mode: str, assignment: dict, group: bool = True,
                 name: str = "", params: dict | None = None):
        if n < 2:
            raise BadStrandCount(f"need at least 2 strands, got {n}")
        mats = list(assignment.values())
        dim = mats[0].rows
        domain = mats[0].domain
        for m in mats:
            if not m.is_square() or m.rows != dim or m.domain is not domain:
                raise ModeMismatch("all generator images must share one square shape and domain")
        self.n = n
        self.mode = mode
        self.dim = dim
        self.domain = domain
        self.group = group
        self.name = name
        self.params = dict(params or {})
        self.assignment = dict(assignment)
        self._inverses: dict = {}

    def generator_keys(self):
        return sorted(self.assignment, key=lambda k: (k[0], k[1]))

    def image(self, kind: str, index: int, exp: int = 1) -> Matrix:
        key = (kind, index)
        if key not in self.assignment:
            raise UnassignedGenerator(f"no image assigned to {kind}{index}")
        if exp == 1:
            return self.assignment[key]
        if exp != -1:
            raise ValueError(f"letter exponent must be +-1, got {exp}")
        if kind == TAU and not self.group:
            raise NonInvertibleLetter(
                f"{kind}{index} has no inverse in monoid mode"
            )
        if key not in self._inverses:
            try:
                self._inverses[key] = self.assignment[key].inverse()
            except NotUnitDeterminant as exc:
                raise NonInvertibleLetter(
                    f"image of {kind}{index} is not invertible over {self.domain.name}: {exc}"
                ) from exc
        return self._inverses[key]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "mode": self.mode,
            "group": self.group,
            "domain": self.domain.name,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "assignment": {
                f"{kind}{index}": self.assignment[(kind, index)].to_json_dict()
                for kind, index in self.generator_keys()
            },
        }

    def __repr__(self):
        label = self.name or self.mode
        return f"Representation({label}, n={self.n}, dim={self.dim}, domain={self.domain.name})"


def standard_block(domain: EntryDomain = LAURENT, t0=None) -> Matrix:
    """[[0, t], [1, 0]] (or its value at t0 over a field)."""
    if t0 is None:
        return Matrix(LAURENT, [[0, T], [1, 0]])
    return Matrix(domain, [[0, t0], [1, 0]])


def _block_rep(n: int, block: Matrix, name: str) -> Representation:
    if n < 2:
        raise BadStrandCount(f"need at least 2 strands, got {n}")
    assignment = {(SIGMA, i): block_embed(block, i, n) for i in range(1, n)}
    return Representation(n, "braid", assignment, group=True, name=name)


def standard_rep(n: int) -> Representation:
    return _block_rep(n, standard_block(), "standard")


def burau_rep(n: int) -> Representation:
    block = Matrix(LAURENT, [[ONE - T, T], [1, 0]])
    return _block_rep(n, block, "burau")


def f_rep(n: int) -> Representation:
    """The (n+1)-dimensional representation with 3x3 local block."""
    block = Matrix(LAURENT, [[1, 1, 0], [0, -T, 0], [0, T, 1]])
    return _block_rep(n, block, "f")


def tau_block(a, c, domain: EntryDomain = LAURENT, t0=None) -> Matrix:
    """[[a, c*t], [c, a]]; over a field the t slot takes the value t0."""
    if t0 is None:
        a = LaurentPoly.coerce(a)
        c = LaurentPoly.coerce(c)
        return Matrix(LAURENT, [[a, c * T], [c, a]])
    return Matrix(domain, [[a, c * t0], [c, a]])


def singular_extension(n: int, a, c, group: bool = False) -> Representation:
    """Extension of the standard representation by t-generators with the
    embedded block a*I + c*(standard block).

    In group mode the block determinant a^2 - t*c^2 must be a unit of the
    Laurent ring; monoid mode (the default) accepts any parameters.
    """
    a = LaurentPoly.coerce(a)
    c = LaurentPoly.coerce(c)
    block = tau_block(a, c)
    if group:
        d = block.det()
        if not d.is_unit():
            raise NonInvertibleTau(
                f"tau block determinant {d} is not a unit, so the images "
                "do not land in the general linear group", det=d)
    assignment = {(SIGMA, i): block_embed(standard_block(), i, n) for i in range(1, n)}
    assignment.update({(TAU, i): block_embed(block, i, n) for i in range(1, n)})
    return Representation(n, "singular", assignment, group=group,
                          name="singular-extension", params={"a": a, "c": c})


def singular_extension_specialized(n: int, t0, a, c, group: bool = False) -> Representation:
    """Field-valued variant: t specialized at a nonzero rational, parameters
    a, c rational numbers."""
    t0 = Fraction(t0)
    a = Fraction(a)
    c = Fraction(c)
    if t0 == 0:
        raise ZeroSpecialization("t may not be specialized to 0")
    sblock = standard_block(QQ, t0)
    tblock = tau_block(a, c, QQ, t0)
    if group and a * a - t0 * c * c == 0:
        raise NonInvertibleTau("tau block is singular at this specialization",
                               det=Fraction(0))
    assignment = {(SIGMA, i): block_embed(sblock, i, n) for i in range(1, n)}
    assignment.update({(TAU, i): block_embed(tblock, i, n) for i in range(1, n)})
    return Representation(n, "singular", assignment, group=group,
                          name="singular-extension",
                          params={"t0": t0, "a": a, "c": c})


@dataclass(frozen=True)
class InvolutionFamily:
    """One of the five 2x2 involution families, with its parameters.

    family 1: [[p, q], [(1 - p^2)/q, -p]]   with q != 0 dividing 1 - p^2
    family 2: [[-1, 0], [r, 1]]
    family 3: [[1, 0], [r, -1]]
    family 4: -identity
    family 5: identity
    """

    family_id: int
    params: dict

    def __post_init__(self):
        if self.family_id not in (1, 2, 3, 4, 5):
            raise ValueError(f"family_id must be 1..5, got {self.family_id}")
        expected = {1: {"p", "q"}, 2: {"r"}, 3: {"r"}, 4: set(), 5: set()}[self.family_id]
        if set(self.params) != expected:
            raise ValueError(
                f"family {self.family_id} takes parameters {sorted(expected)}, "
                f"got {sorted(self.params)}")


def involution_matrix(family_id: int, *, p=None, q=None, r=None,
                      domain: EntryDomain = LAURENT) -> Matrix:
    """Construct the 2x2 involution of the given family.

    Over the Laurent ring, family 1 requires q to divide 1 - p^2 exactly;
    over a field only q != 0 is needed.
    """
    if family_id == 1:
        p = domain.coerce(p)
        q = domain.coerce(q)
        if q == domain.zero:
            raise ZeroQ("family 1 requires q != 0")
        top = domain.one - p * p
        if domain.is_field:
            lower = domain.exact_div(top, q)
        else:
            try:
                lower = top.exact_div(q)
            except ValueError as exc:
                raise DivisibilityViolation(
                    f"q = {q} does not divide 1 - p^2 = {top} in the Laurent ring"
                ) from exc
        m = Matrix(domain, [[p, q], [lower, -p]])
    elif family_id == 2:
        r = domain.coerce(r)
        m = Matrix(domain, [[-domain.one, domain.zero], [r, domain.one]])
    elif family_id == 3:
        r = domain.coerce(r)
        m = Matrix(domain, [[domain.one, domain.zero], [r, -domain.one]])
    elif family_id == 4:
        m = Matrix.identity(domain, 2).scaled(-1)
    elif family_id == 5:
        m = Matrix.identity(domain, 2)
    else:
        raise ValueError(f"family_id must be 1..5, got {family_id}")
    assert (m * m).is_identity(), "involution family produced a non-involution"
    return m


def vsb2_extension(family_id: int, *, a, c, p=None, q=None, r=None,
                   group: bool = False) -> Representation:
    """Two-strand virtual singular representation: standard s-image, the
    (a, c) t-image, and a v-image from the chosen involution family."""
    base = singular_extension(2, a, c, group=group)
    nu_image = involution_matrix(family_id, p=p, q=q, r=r, domain=LAURENT)
    assignment = dict(base.assignment)
    assignment[(NU, 1)] = nu_image
    params = dict(base.params)
    params.update({k: v for k, v in (("p", p), ("q", q), ("r", r)) if v is not None})
    params["family"] = family_id
    return Representation(2, "virtual_singular", assignment, group=group,
                          name=f"vsb2-extension-family-{family_id}", params=params)


def evaluate_word(rep: Representation, w: Word) -> Matrix:
    """Product of the letter images; the empty word gives the identity."""
    out = Matrix.identity(rep.domain, rep.dim)
    for g in w:
        out = out * rep.image(g.kind, g.index, g.exp)
    return out


@dataclass(frozen=True)
class Violation:
    relation: Relation
    lhs: Matrix
    rhs: Matrix
    diff: Matrix

    def to_json_dict(self) -> dict:
        return {
            "relation": str(self.relation),
            "kind": self.relation.kind,
            "indices": list(self.relation.indices),
            "lhs": self.lhs.to_json_dict(),
            "rhs": self.rhs.to_json_dict(),
            "diff": self.diff.to_json_dict(),
        }


def verify_relations(rep: Representation, pres: Presentation) -> list[Violation]:
    """Check every defining relation; returns the list of violations, each
    carrying the two sides and their difference."""
    if rep.n != pres.n or rep.mode != pres.mode:
        raise ModeMismatch(
            f"representation ({rep.mode}, n={rep.n}) does not match "
            f"presentation ({pres.mode}, n={pres.n})")
    violations = []
    for rel in pres.relations:
        lhs = evaluate_word(rep, rel.lhs)
        rhs = evaluate_word(rep, rel.rhs)
        if lhs != rhs:
            violations.append(Violation(rel, lhs, rhs, lhs - rhs))
    return violations
