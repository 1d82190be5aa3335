"""Assembly and exact solving of the extension constraint systems."""

from __future__ import annotations

from fractions import Fraction

import pytest

from braidrep import (
    LAURENT,
    ConstraintSystem,
    LaurentPoly,
    LinearExpr,
    Matrix,
    QQ,
    SymPoly,
    T,
    assemble,
    assemble_singular,
    assemble_vsb2,
    build_presentation,
    involution_classify,
    involution_matrix,
    laurent_representability,
    solve_involution_2x2,
    solve_linear,
    solve_with_residue,
    solved_images,
    standard_rep,
    verify_relations,
)
from braidrep.errors import (
    Inconsistent,
    ModeMismatch,
    NonlinearSystem,
    NotInvolution,
    UnassignedGenerator,
)
from braidrep.reps import Representation, standard_block
from braidrep.solver import entry_names


def test_entry_names():
    assert entry_names(2, "v", "") == [["p", "q"], ["r", "s"]]
    assert entry_names(2, "t", "") == [["a", "b"], ["c", "d"]]
    assert entry_names(3, "t", "2") == [["a2", "b2", "c2"], ["d2", "e2", "f2"], ["g2", "h2", "i2"]]
    five = entry_names(5, "t", "1")
    assert five[0][0] == "a1" and five[4][4] == "z1"
    assert all("t1" != name for row in five for name in row)
    six = entry_names(6, "t", "")
    assert six[0][0] == "x1_1" and six[5][5] == "x6_6"


def test_two_strand_assembly():
    system = assemble_singular(2)
    assert system.unknowns == ("a", "b", "c", "d")
    assert system.nonlinear == ()
    assert system.discarded_zero == 0
    assert system.discarded_duplicate == 1
    assert set(system.equations) == {
        LinearExpr.build(0, {"b": 1, "c": -T}),
        LinearExpr.build(0, {"a": T, "d": -T}),
        LinearExpr.build(0, {"a": 1, "d": -1}),
    }


def test_two_strand_solution_family():
    family = solve_linear(assemble_singular(2))
    assert family.free == ("a", "c")
    assert family.bindings["d"] == LinearExpr.build(0, {"a": 1})
    assert family.bindings["b"] == LinearExpr.build(0, {"c": T})
    assert family.binding_strings() == {"d": "a", "b": "c*t"}


def test_two_strand_solution_satisfies_the_relation():
    family = solve_linear(assemble_singular(2))
    values = family.assignment({"a": 5, "c": T})
    entries = [[values["a"], values["b"]], [values["c"], values["d"]]]
    tau = Matrix(LAURENT, [[e.as_laurent() for e in row] for row in entries])
    sigma = standard_block()
    assert tau * sigma == sigma * tau
    assert tau == Matrix(LAURENT, [[5, T ** 2], [T, 5]])


def test_three_strand_assembly_counts():
    system = assemble_singular(3)
    assert len(system.unknowns) == 18
    assert len(system.equations) == 32
    assert system.nonlinear == ()
    assert system.discarded_zero == 11
    assert system.discarded_duplicate == 2
    # the five defining relations contribute 5 * 9 = 45 matrix entries
    assert len(system.equations) + system.discarded_zero + system.discarded_duplicate == 45


def test_three_strand_solution_family():
    family = solve_linear(assemble_singular(3))
    assert family.free == ("a1", "d1", "i1")
    zero = LinearExpr.build(0, {})
    expected = {
        "b1": LinearExpr.build(0, {"d1": T}),
        "e1": LinearExpr.build(0, {"a1": 1}),
        "a2": LinearExpr.build(0, {"i1": 1}),
        "e2": LinearExpr.build(0, {"a1": 1}),
        "f2": LinearExpr.build(0, {"d1": T}),
        "h2": LinearExpr.build(0, {"d1": 1}),
        "i2": LinearExpr.build(0, {"a1": 1}),
    }
    for name, expr in expected.items():
        assert family.bindings[name] == expr
    others = set(family.bindings) - set(expected)
    assert others == {"c1", "f1", "g1", "h1", "b2", "c2", "d2", "g2"}
    assert all(family.bindings[name] == zero for name in others)


def test_three_strand_solution_annihilates_every_equation():
    system = assemble_singular(3)
    family = solve_linear(system)
    substitution = {name: expr.to_sympoly() for name, expr in family.bindings.items()}
    for eq in system.equations:
        assert eq.to_sympoly().substitute(substitution).is_zero()


def test_three_strand_solution_passes_relation_verification():
    family = solve_linear(assemble_singular(3))
    values = family.assignment({"a1": 2, "d1": 3, "i1": 5})
    names = entry_names(3, "t", "")
    mats = {}
    for idx in (1, 2):
        rows = [[values[f"{name}{idx}"].as_laurent() for name in row] for row in names]
        mats[("t", idx)] = Matrix(LAURENT, rows)
    assignment = dict(standard_rep(3).assignment)
    assignment.update(mats)
    rep = Representation(3, "singular", assignment, group=False)
    pres = build_presentation(3, "singular", group=False)
    assert verify_relations(rep, pres) == []
    assert mats[("t", 1)] == Matrix(LAURENT, [[2, 3 * T, 0], [3, 2, 0], [0, 0, 5]])
    assert mats[("t", 2)] == Matrix(LAURENT, [[5, 0, 0], [0, 2, 3 * T], [0, 3, 2]])


def test_four_strand_solution_has_three_parameters_and_no_residue():
    system = assemble_singular(4)
    family, residue = solve_with_residue(system)
    assert residue == ()
    assert len(family.free) == 3
    # every relation entry is linear, identically zero, or a duplicate
    pres = build_presentation(4, "singular")
    entry_count = len(pres.relations) * 16
    assert (len(system.equations) + len(system.nonlinear)
            + system.discarded_zero + system.discarded_duplicate) == entry_count


def test_solved_images_two_strands():
    family = solve_linear(assemble_singular(2))
    images = solved_images(family, 2, [("t", 1)])
    tau = images[("t", 1)]
    a, c = SymPoly.symbol("a"), SymPoly.symbol("c")
    assert tau.entries[0][0] == a
    assert tau.entries[0][1] == c * SymPoly.const(T)
    assert tau.entries[1][0] == c
    assert tau.entries[1][1] == a


def test_assemble_validates_generators():
    pres = build_presentation(2, "singular")
    with pytest.raises(ModeMismatch):
        assemble(pres, {("s", 1): standard_block()}, [("v", 1)])
    with pytest.raises(UnassignedGenerator):
        assemble(pres, {}, [("t", 1)])
    with pytest.raises(UnassignedGenerator):
        assemble(build_presentation(3, "singular"),
                 {("s", 1): standard_rep(3).assignment[("s", 1)]},
                 [("t", 1), ("t", 2)])


def test_inconsistent_system_raises_with_witness():
    system = ConstraintSystem(
        unknowns=("x",),
        equations=(LinearExpr.build(1, {"x": 1}), LinearExpr.build(0, {"x": 1})),
        nonlinear=(),
        discarded_zero=0,
        discarded_duplicate=0,
    )
    with pytest.raises(Inconsistent) as info:
        solve_linear(system)
    assert info.value.witness is not None


def test_nonlinear_system_refuses_linear_solver():
    with pytest.raises(NonlinearSystem):
        solve_linear(assemble_vsb2())


def test_rename_pass_prefers_earliest_names():
    system = ConstraintSystem(
        unknowns=("x", "y", "z"),
        equations=(LinearExpr.build(0, {"x": 1, "z": -1}),
                   LinearExpr.build(0, {"y": 1, "z": -1})),
        nonlinear=(),
        discarded_zero=0,
        discarded_duplicate=0,
    )
    family = solve_linear(system)
    assert family.free == ("x",)
    assert family.bindings["y"] == LinearExpr.build(0, {"x": 1})
    assert family.bindings["z"] == LinearExpr.build(0, {"x": 1})


def test_laurent_representability_flags_denominators():
    system = ConstraintSystem(
        unknowns=("x", "y"),
        equations=(LinearExpr.build(0, {"x": T + 1, "y": -1}),),
        nonlinear=(),
        discarded_zero=0,
        discarded_duplicate=0,
    )
    family = solve_linear(system)
    report = laurent_representability(family)
    assert not report["representable"]
    assert report["flagged"][0]["unknown"] == "y" or report["flagged"][0]["unknown"] == "x"

    clean = laurent_representability(solve_linear(assemble_singular(3)))
    assert clean["representable"] and clean["flagged"] == []


def test_vsb2_assembly_is_the_involution_problem():
    system = assemble_vsb2()
    assert system.unknowns == ("p", "q", "r", "s")
    assert system.equations == ()
    assert system.discarded_zero == 4
    p, q, r, s = (SymPoly.symbol(x) for x in "pqrs")
    one = SymPoly.const(1)
    assert set(system.nonlinear) == {
        p * p + q * r - one,
        p * q + q * s,
        p * r + r * s,
        q * r + s * s - one,
    }


def test_vsb2_assembly_with_numeric_parameters_matches():
    generic = assemble_vsb2()
    concrete = assemble_vsb2(a=2, c=3)
    assert set(concrete.nonlinear) == set(generic.nonlinear)


def test_vsb2_residue_is_the_full_quadratic_system():
    system = assemble_vsb2()
    family, residue = solve_with_residue(system)
    assert family.free == ("p", "q", "r", "s")
    assert set(residue) == set(system.nonlinear)


def test_involution_catalog():
    sols = solve_involution_2x2()
    assert [s.family_id for s in sols] == [1, 2, 3, 4, 5]
    assert sols[0].free == ("p", "q")
    assert sols[0].entries[1][0] == "(1 - p^2)/q"
    assert sols[3].entries == (("-1", "0"), ("0", "-1"))


@pytest.mark.parametrize("family_id", [1, 2, 3, 4, 5])
def test_involution_families_square_to_identity_symbolically(family_id):
    from braidrep.solver import involution_square_is_identity

    assert involution_square_is_identity(family_id)


def test_involution_classification_round_trip():
    cases = [
        (1, {"p": Fraction(3), "q": Fraction(2)}),
        (2, {"r": Fraction(5)}),
        (2, {"r": Fraction(0)}),
        (3, {"r": Fraction(-7, 2)}),
        (3, {"r": Fraction(0)}),
        (4, {}),
        (5, {}),
    ]
    for family_id, params in cases:
        m = involution_matrix(family_id, domain=QQ, **params)
        got_id, got_params = involution_classify(m)
        assert got_id == family_id
        assert got_params == params


def test_involution_classify_rejects_non_involutions():
    with pytest.raises(NotInvolution):
        involution_classify(Matrix(QQ, [[2, 0], [0, 2]]))
    with pytest.raises(NotInvolution):
        involution_classify(Matrix(QQ, [[1, 2, 3], [4, 5, 6], [7, 8, 9]]))


def test_constraint_system_json_shape():
    obj = assemble_singular(2).to_json_dict()
    assert obj["unknowns"] == ["a", "b", "c", "d"]
    assert obj["discarded_zero_equations"] == 0
    assert obj["discarded_duplicate_equations"] == 1
    assert "b - c*t" in obj["equations"]
