"""Exact computations with braid-family representations.

Laurent-polynomial linear algebra, presentations of the braid, singular, and
virtual singular families, the catalogued representations, symbolic solving
of the extension problems, span-criterion irreducibility, and kernel
certificates, plus a CLI (``braidrep``) tying them together.
"""

from .errors import BraidRepError
from .irreducibility import (
    GridReport,
    IrreducibilityVerdict,
    SpecializedRep,
    all_ones_check,
    burnside_span,
    grid_report,
    is_irreducible,
    matrix_algebra_span,
    orbit_closure,
    predicted_irreducible,
    specialize,
    specialized_extension,
    symbolic_extension,
)
from .kernel import KernelCertificate, certify, pure_commutator_certificate, pure_commutator_image
from .laurent import LaurentPoly, RationalFunction, T, laurent_gcd, parse_laurent, parse_rational
from .matrix import LAURENT, QQ, RATFUNC, Matrix, Subspace, block_embed, mat_vec, stack
from .presentations import (
    GeneratorSymbol,
    Presentation,
    Relation,
    Word,
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
from .reps import (
    InvolutionFamily,
    Representation,
    Violation,
    burau_rep,
    evaluate_word,
    f_rep,
    involution_matrix,
    singular_extension,
    singular_extension_specialized,
    standard_rep,
    verify_relations,
    vsb2_extension,
)
from .solver import (
    ConstraintSystem,
    InvolutionSolution,
    SolutionFamily,
    assemble,
    assemble_singular,
    assemble_vsb2,
    involution_classify,
    laurent_representability,
    solve_involution_2x2,
    solve_linear,
    solve_with_residue,
    solved_images,
)
from .symbolic import SYMBOLIC, LinearExpr, SymPoly

__version__ = "0.1.0"
