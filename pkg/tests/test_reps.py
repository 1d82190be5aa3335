"""Catalog representations and relation verification."""

from __future__ import annotations

import random

import pytest

from braidrep import (
    LAURENT,
    LaurentPoly,
    Matrix,
    T,
    build_presentation,
    burau_rep,
    evaluate_word,
    f_rep,
    involution_matrix,
    parse_word,
    pure_braid_generator,
    sigma,
    singular_extension,
    singular_extension_specialized,
    standard_rep,
    tau,
    verify_relations,
    vsb2_extension,
    word,
)
from braidrep.errors import (
    DivisibilityViolation,
    ModeMismatch,
    NonInvertibleLetter,
    NonInvertibleTau,
    ZeroQ,
)
from braidrep.reps import standard_block, tau_block


@pytest.mark.parametrize("builder", [standard_rep, burau_rep, f_rep])
@pytest.mark.parametrize("n", range(2, 7))
def test_braid_representations_satisfy_all_relations(builder, n):
    rep = builder(n)
    assert verify_relations(rep, build_presentation(n, "braid")) == []


def test_dimensions():
    assert standard_rep(4).dim == 4
    assert burau_rep(4).dim == 4
    assert f_rep(4).dim == 5


def test_tau_block_is_a_plus_c_times_standard():
    a = T + 2
    c = 1 - T
    block = tau_block(a, c)
    expected = Matrix.identity(LAURENT, 2).scaled(a) + standard_block().scaled(c)
    assert block == expected


@pytest.mark.parametrize("n", range(2, 7))
def test_singular_extension_satisfies_all_relations(n):
    rng = random.Random(n)
    pres = build_presentation(n, "singular", group=False)
    for _ in range(20):
        a = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
        c = LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)})
        rep = singular_extension(n, a, c)
        assert verify_relations(rep, pres) == []


def test_singular_extension_specialized_satisfies_relations():
    pres = build_presentation(4, "singular", group=False)
    rep = singular_extension_specialized(4, 3, 2, -1)
    assert verify_relations(rep, pres) == []
    assert rep.domain.name == "rational"


def test_broken_assignment_is_caught():
    rep = singular_extension(3, 1, 1)
    rep.assignment[("t", 2)] = Matrix.identity(LAURENT, 3).scaled(T)
    violations = verify_relations(rep, build_presentation(3, "singular", group=False))
    assert violations
    kinds = {v.relation.kind for v in violations}
    assert "tau_slide_up" in kinds or "tau_slide_down" in kinds
    v = violations[0]
    assert v.diff == v.lhs - v.rhs and not v.diff.is_zero()


def test_group_mode_rejects_non_unit_tau_determinant():
    with pytest.raises(NonInvertibleTau):
        singular_extension(3, 1, 1, group=True)
    with pytest.raises(NonInvertibleTau):
        singular_extension_specialized(3, 4, 2, 1, group=True)
    rep = singular_extension(3, 0, 1, group=True)
    assert rep.image("t", 1, -1) * rep.image("t", 1) == Matrix.identity(LAURENT, 3)


def test_monoid_mode_blocks_tau_inversion():
    rep = singular_extension(3, 1, 1)
    with pytest.raises(NonInvertibleLetter):
        rep.image("t", 1, -1)


def test_verify_relations_mode_mismatch():
    with pytest.raises(ModeMismatch):
        verify_relations(standard_rep(3), build_presentation(3, "singular"))
    with pytest.raises(ModeMismatch):
        verify_relations(standard_rep(3), build_presentation(4, "braid"))


def test_evaluate_word_respects_inverses():
    rep = standard_rep(3)
    w = parse_word("s1 s2 s2^-1 s1^-1")
    assert evaluate_word(rep, w).is_identity()
    assert evaluate_word(rep, ()).is_identity()


def test_pure_braid_images_are_diagonal():
    rep = standard_rep(3)
    a12 = evaluate_word(rep, pure_braid_generator(1, 2, 3))
    assert a12 == Matrix(LAURENT, [[T, 0, 0], [0, T, 0], [0, 0, 1]])
    a13 = evaluate_word(rep, pure_braid_generator(1, 3, 3))
    assert a13 == Matrix(LAURENT, [[T, 0, 0], [0, 1, 0], [0, 0, T]])
    a23 = evaluate_word(rep, pure_braid_generator(2, 3, 3))
    assert a23 == Matrix(LAURENT, [[1, 0, 0], [0, T, 0], [0, 0, T]])


def test_sigma_and_tau_images_commute_blockwise():
    rep = singular_extension(4, T, 1 - T)
    s2 = rep.image("s", 2)
    t2 = rep.image("t", 2)
    assert s2 * t2 == t2 * s2


@pytest.mark.parametrize("family_id,kwargs", [
    (1, {"p": 0, "q": 1}),
    (1, {"p": 3, "q": 2}),
    (1, {"p": T, "q": 1 - T}),
    (2, {"r": 5}),
    (3, {"r": T ** -1}),
    (4, {}),
    (5, {}),
])
def test_involution_families_square_to_identity(family_id, kwargs):
    m = involution_matrix(family_id, **kwargs)
    assert (m * m).is_identity()


def test_involution_family_one_divisibility():
    with pytest.raises(ZeroQ):
        involution_matrix(1, p=1, q=0)
    with pytest.raises(DivisibilityViolation):
        involution_matrix(1, p=0, q=T + 1)
    m = involution_matrix(1, p=T, q=T + 1)
    assert m.entries[1][0] == 1 - T


@pytest.mark.parametrize("family_id,kwargs", [
    (1, {"p": 0, "q": 1}),
    (2, {"r": 0}),
    (3, {"r": 2}),
    (4, {}),
    (5, {}),
])
def test_vsb2_extension_satisfies_all_relations(family_id, kwargs):
    pres = build_presentation(2, "virtual_singular", group=False)
    for a, c in [(1, 1), (0, 1), (2, -3)]:
        rep = vsb2_extension(family_id, a=a, c=c, **kwargs)
        assert verify_relations(rep, pres) == []


def test_vsb2_family_one_nu_slide_needs_no_indices_beyond_two_strands():
    rep = vsb2_extension(1, a=1, c=1, p=2, q=3)
    assert rep.image("v", 1) == Matrix(LAURENT, [[2, 3], [-1, -2]])
    pres = build_presentation(2, "virtual_singular", group=False)
    assert verify_relations(rep, pres) == []


def test_word_images_multiply():
    rep = singular_extension(3, 1, 2)
    w = word(sigma(1), tau(2), sigma(2))
    expected = rep.image("s", 1) * rep.image("t", 2) * rep.image("s", 2)
    assert evaluate_word(rep, w) == expected
