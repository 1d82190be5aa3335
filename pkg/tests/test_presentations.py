"""Words and defining presentations for the three generator families."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidrep import (
    build_presentation,
    commutator,
    format_word,
    free_reduce,
    nu,
    parse_word,
    pure_braid_generator,
    sigma,
    tau,
    word,
)
from braidrep.errors import BadIndices, BadStrandCount, InverseUnavailable
from braidrep.presentations import word_inverse

letters = st.builds(
    lambda kind, index, exp: {"s": sigma, "t": tau, "v": nu}[kind](index, exp),
    st.sampled_from("stv"),
    st.integers(min_value=1, max_value=5),
    st.sampled_from([-1, 1]),
)
words = st.lists(letters, max_size=8).map(tuple)


def far_pairs(n):
    return (n - 2) * (n - 3) // 2


@pytest.mark.parametrize("n", range(2, 9))
def test_relation_counts_match_closed_forms(n):
    braid = build_presentation(n, "braid")
    assert len(braid.relations) == (n - 2) + far_pairs(n)

    singular = build_presentation(n, "singular")
    extra = far_pairs(n) + 2 * far_pairs(n) + (n - 1) + 2 * (n - 2)
    assert len(singular.relations) == len(braid.relations) + extra

    virtual = build_presentation(n, "virtual_singular")
    v_extra = (n - 1) + 3 * (n - 2) + 2 * (2 * far_pairs(n))
    assert len(virtual.relations) == len(singular.relations) + v_extra


def test_two_strand_relation_sets():
    assert [str(r) for r in build_presentation(2, "braid").relations] == []
    assert [str(r) for r in build_presentation(2, "singular").relations] == [
        "t1 s1 = s1 t1",
    ]
    assert [str(r) for r in build_presentation(2, "virtual_singular").relations] == [
        "t1 s1 = s1 t1",
        "v1 v1 = 1",
    ]


def test_three_strand_singular_relations():
    pres = build_presentation(3, "singular")
    assert [str(r) for r in pres.relations] == [
        "s1 s2 s1 = s2 s1 s2",
        "t1 s1 = s1 t1",
        "t2 s2 = s2 t2",
        "s1 s2 t1 = t2 s1 s2",
        "s2 s1 t2 = t1 s2 s1",
    ]


def test_four_strand_distant_commutations_appear():
    pres = build_presentation(4, "singular")
    kinds = {r.kind for r in pres.relations}
    assert "sigma_far" in kinds and "tau_far" in kinds and "tau_sigma_far" in kinds
    far = pres.relations_of_kind("tau_sigma_far")
    assert {r.indices for r in far} == {(1, 3), (3, 1)}


def test_defining_relations_are_positive_words():
    for mode in ("braid", "singular", "virtual_singular"):
        for n in (2, 3, 4, 5):
            for rel in build_presentation(n, mode).relations:
                for g in rel.lhs + rel.rhs:
                    assert g.exp == 1


def test_generator_keys_order():
    assert build_presentation(3, "braid").generator_keys() == (("s", 1), ("s", 2))
    assert build_presentation(3, "virtual_singular").generator_keys() == (
        ("s", 1), ("s", 2), ("t", 1), ("t", 2), ("v", 1), ("v", 2),
    )


def test_strand_count_validation():
    with pytest.raises(BadStrandCount):
        build_presentation(1, "braid")
    with pytest.raises(ValueError):
        build_presentation(3, "planar")


@given(words)
def test_format_parse_round_trip(w):
    assert parse_word(format_word(w)) == w


def test_parse_word_forms():
    assert parse_word("s1 t2^-1 v3") == (sigma(1), tau(2, -1), nu(3))
    assert parse_word("") == ()
    with pytest.raises(ValueError):
        parse_word("x7")


@given(words)
def test_free_reduce_is_idempotent(w):
    once = free_reduce(w)
    assert free_reduce(once) == once


@given(words)
def test_word_times_inverse_reduces_to_nothing(w):
    assert free_reduce(w + word_inverse(w)) == ()


def test_monoid_mode_blocks_tau_inverses():
    with pytest.raises(InverseUnavailable):
        word_inverse(word(tau(1)), group=False)
    assert word_inverse(word(sigma(1), sigma(2)), group=False) == (
        sigma(2, -1), sigma(1, -1),
    )


def test_commutator_shape():
    c = commutator(word(sigma(1)), word(sigma(2)))
    assert c == (sigma(1), sigma(2), sigma(1, -1), sigma(2, -1))


@pytest.mark.parametrize("i,j,n", [(1, 2, 3), (1, 3, 3), (2, 5, 6), (1, 4, 4)])
def test_pure_braid_generator_shape(i, j, n):
    w = pure_braid_generator(i, j, n)
    assert len(w) == 2 * (j - i - 1) + 2
    assert w[j - i - 1] == sigma(i) and w[j - i] == sigma(i)
    assert free_reduce(w) == w


def test_pure_braid_generator_validation():
    with pytest.raises(BadIndices):
        pure_braid_generator(2, 2, 4)
    with pytest.raises(BadIndices):
        pure_braid_generator(1, 5, 4)
    with pytest.raises(BadStrandCount):
        pure_braid_generator(1, 2, 1)
