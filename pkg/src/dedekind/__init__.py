"""Exact integral-closedness engine over valued fields.

Decides whether the ring generated over a valuation ring by a root of a
monic irreducible separable polynomial is integrally closed, with
per-factor certificates, three cross-checking formulations, Eisenstein
and residue-irreducibility certificates, ramification reporting, and
radical-polynomial fast paths.  All arithmetic is exact.
"""

from .errors import (
    DedekindError,
    DegreeCapExceeded,
    DomainError,
    GcdNotOne,
    InseparableInput,
    IrreducibilityUncertified,
    NoMinimum,
    NotAUnit,
    NotIntegral,
    NotMonic,
    NoUniformizerAtValue,
    ParseError,
    PreconditionError,
    ValueNotMultipleOfSigma,
)
from .valuegroup import (
    DenseQuadratic,
    GroupDescriptor,
    GroupElement,
    IntegerRankOne,
    LexPairRankTwo,
    ScaledInteger,
    add,
    compare,
    is_positive,
    min_positive,
    scalar_mul,
)
from .finitefield import FiniteField, ResidueElement, finite_field
from .valued_field import (
    FieldElement,
    LambdaComposite,
    LambdaTrivial,
    LexBivariate,
    PAdicRationals,
    ValuationDescriptor,
    lift,
    residue,
    uniformizer,
    valuation,
)
from .poly import (
    Poly,
    ResiduePoly,
    derivative,
    euclid_divide,
    gauss_valuation,
    gcd_over_K,
    is_separable,
    lift_monic,
    set_degree_cap,
)
from .residue_factor import ResidueFactorization, factor, irreducibles, is_irreducible
from .criterion import (
    DedekindReport,
    EisensteinReason,
    EisensteinResult,
    ErshovResult,
    FactorCertificate,
    IrreducibilityStatus,
    MFormResult,
    RadicalTransform,
    RamificationReport,
    RamificationRow,
    Verdict,
    certify_irreducible,
    dedekind_test,
    dedekind_test_m_form,
    ershov_test,
    is_nu_eisenstein,
    radical_test,
    radical_transform,
    ramification_report,
)
from .oracle import classical_dedekind_qp, exhaustive_factor, quadratic_table
from .grammar import parse_descriptor, parse_element, parse_group_element, parse_poly

__version__ = "0.1.0"
