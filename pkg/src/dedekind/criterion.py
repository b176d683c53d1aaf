"""The integral-closedness engine.

Given a monic integral separable f over one of the built-in valued
fields, the engine reduces f modulo the maximal ideal, factors the
reduction, lifts each factor, and divides f by each lift.  The ring
generated by a root of f over the valuation ring is integrally closed
exactly when every repeated factor's remainder has Gaussian valuation
equal to the minimum positive value sigma of the value group; when the
positive part of the value group has no minimum, any repeated factor
already rules closedness out.

Three equivalent formulations are provided and cross-check each other:

* :func:`dedekind_test`        -- remainder valuations (the reference),
* :func:`ershov_test`          -- writes f as (product of lifted factor
  powers) + pi*T and checks divisibility of the reduction of T,
* :func:`dedekind_test_m_form` -- same difference divided by a
  uniformizer, checked through its reduction M.

The module also certifies irreducibility where possible (full-degree
irreducible reduction, or the Eisenstein-type condition), reports
ramification indices and residue degrees for closed inputs, and ships
fast paths for pure radicals x^n - a.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd as int_gcd
from typing import Callable

from .errors import (
    GcdNotOne,
    InseparableInput,
    IrreducibilityUncertified,
    NoMinimum,
    NotIntegral,
    NotMonic,
    PreconditionError,
    ValueNotMultipleOfSigma,
)
from .poly import Poly, ResiduePoly, euclid_divide, gauss_valuation, is_separable, lift_monic
from .residue_factor import ResidueFactorization, factor, is_irreducible
from .valuegroup import GroupElement
from .valued_field import FieldElement, ValuationDescriptor

__all__ = [
    "Verdict",
    "IrreducibilityStatus",
    "FactorCertificate",
    "DedekindReport",
    "RamificationRow",
    "RamificationReport",
    "ErshovResult",
    "MFormResult",
    "EisensteinReason",
    "EisensteinResult",
    "RadicalTransform",
    "dedekind_test",
    "ershov_test",
    "dedekind_test_m_form",
    "is_nu_eisenstein",
    "certify_irreducible",
    "ramification_report",
    "radical_test",
    "radical_transform",
]


class Verdict(Enum):
    CLOSED = "CLOSED"
    NOT_CLOSED = "NOT_CLOSED"
    # sub-verdict of NOT_CLOSED: the value group's positive part has no
    # minimum, and the reduction of f has a repeated factor
    NOT_CLOSED_NO_MINIMUM = "NOT_CLOSED_NO_MINIMUM"

    @property
    def closed(self) -> bool:
        return self is Verdict.CLOSED

    def __str__(self):
        return self.value


class IrreducibilityStatus(Enum):
    RESIDUE_IRREDUCIBLE = "certified-residue-irreducible"
    EISENSTEIN = "certified-eisenstein"
    UNKNOWN = "unknown"
    ASSERTED = "asserted-by-caller"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class FactorCertificate:
    """Division data for one residue factor.

    ``passes`` compares the remainder's Gaussian valuation with sigma
    and is only meaningful when the multiplicity l is at least 2.
    """

    phi: Poly
    l: int
    r: Poly
    r_value: GroupElement
    passes: bool


@dataclass(frozen=True)
class DedekindReport:
    f: Poly
    verdict: Verdict
    sigma: GroupElement | None
    certificates: tuple[FactorCertificate, ...]
    separable: bool
    irreducibility: IrreducibilityStatus

    @property
    def closed(self) -> bool:
        return self.verdict.closed

    @property
    def repeated_indices(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.certificates) if c.l >= 2)


@dataclass(frozen=True)
class RamificationRow:
    phi: Poly
    e: int
    f: int


@dataclass(frozen=True)
class RamificationReport:
    s: int
    rows: tuple[RamificationRow, ...]
    total: int


@dataclass(frozen=True)
class ErshovResult:
    closed: bool
    pi: FieldElement | None
    T: Poly | None

    def __bool__(self):
        return self.closed


@dataclass(frozen=True)
class MFormResult:
    closed: bool
    M: Poly

    def __bool__(self):
        return self.closed


class EisensteinReason(Enum):
    ELIGIBLE = "eligible"
    NO_MINIMUM = "value group has no minimum positive element"
    MULTIPLE_FACTORS = "reduction has more than one distinct irreducible factor"
    REMAINDER_VALUE = "remainder valuation differs from sigma"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EisensteinResult:
    eisenstein: bool
    reason: EisensteinReason
    sigma: GroupElement | None
    psi: Poly | None = None
    r: Poly | None = None
    r_value: GroupElement | None = None

    def __bool__(self):
        return self.eisenstein


@dataclass(frozen=True)
class RadicalTransform:
    u: int
    v: int
    A: FieldElement
    g: Poly
    eisenstein: bool


LiftChooser = Callable[[ResiduePoly], Poly]


def _check_monic_integral(f: Poly) -> None:
    if f.degree < 1:
        raise PreconditionError("expected a polynomial of degree >= 1")
    if not f.is_monic():
        raise NotMonic("input polynomial must be monic")
    if not f.is_integral():
        raise NotIntegral("input polynomial must have integral coefficients")


def _check_separable(f: Poly) -> None:
    if not is_separable(f):
        raise InseparableInput(f"{f} is inseparable over {f.field.spec_string()}")


def certify_irreducible(f: Poly) -> IrreducibilityStatus:
    """Try to certify irreducibility over the base field.

    A monic integral polynomial whose reduction is irreducible of full
    degree is irreducible; so is one passing :func:`is_nu_eisenstein`.
    Everything else is ``UNKNOWN`` (which may well still be irreducible).
    """
    _check_monic_integral(f)
    fbar = f.reduce()
    if fbar.degree == f.degree and is_irreducible(fbar):
        return IrreducibilityStatus.RESIDUE_IRREDUCIBLE
    if is_nu_eisenstein(f):
        return IrreducibilityStatus.EISENSTEIN
    return IrreducibilityStatus.UNKNOWN


def _irreducibility_for_report(f: Poly, mode: str) -> IrreducibilityStatus:
    if mode not in ("strict", "assert"):
        raise PreconditionError(f"unknown irreducibility mode {mode!r}")
    cert = certify_irreducible(f)
    if cert is IrreducibilityStatus.UNKNOWN:
        if mode == "strict":
            raise IrreducibilityUncertified(
                "no irreducibility certificate applies; rerun in assert mode to vouch"
            )
        return IrreducibilityStatus.ASSERTED
    return cert


def _lift_factors(f: Poly, fact: ResidueFactorization, lifts: LiftChooser | None) -> list[Poly]:
    field = f.field
    out = []
    for phibar, _ in fact:
        if lifts is None:
            phi = lift_monic(phibar, field)
        else:
            phi = lifts(phibar)
            if not phi.is_monic() or not phi.is_integral() or phi.reduce() != phibar:
                raise PreconditionError(f"{phi} is not a monic integral lift of {phibar}")
        out.append(phi)
    return out


def dedekind_test(f: Poly, mode: str = "assert", lifts: LiftChooser | None = None) -> DedekindReport:
    """Decide integral closedness of the ring generated by a root of f.

    ``mode`` controls irreducibility handling: ``"strict"`` refuses
    inputs without a certificate from :func:`certify_irreducible`,
    ``"assert"`` records that the caller vouches for it.  ``lifts`` may
    replace the canonical monic lift of each residue factor; the verdict
    does not depend on the choice.
    """
    _check_monic_integral(f)
    _check_separable(f)
    irr = _irreducibility_for_report(f, mode)
    fact = factor(f.reduce())
    sigma = f.field.min_positive()
    certificates = []
    for phi, (phibar, l) in zip(_lift_factors(f, fact, lifts), fact):
        _, r = euclid_divide(f, phi)
        r_value = gauss_valuation(r)
        passes = sigma is not None and r_value == sigma
        certificates.append(FactorCertificate(phi=phi, l=l, r=r, r_value=r_value, passes=passes))
    repeated = [c for c in certificates if c.l >= 2]
    if not repeated:
        verdict = Verdict.CLOSED
    elif sigma is None:
        verdict = Verdict.NOT_CLOSED_NO_MINIMUM
    elif all(c.passes for c in repeated):
        verdict = Verdict.CLOSED
    else:
        verdict = Verdict.NOT_CLOSED
    return DedekindReport(
        f=f,
        verdict=verdict,
        sigma=sigma,
        certificates=tuple(certificates),
        separable=True,
        irreducibility=irr,
    )


def _lifted_product(f: Poly, fact: ResidueFactorization) -> Poly:
    prod = Poly.one(f.field)
    for phibar, l in fact:
        prod = prod * lift_monic(phibar, f.field) ** l
    return prod


def ershov_test(f: Poly, mode: str = "assert") -> ErshovResult:
    """Closedness via the decomposition f = prod(phi_i^l_i) + pi*T.

    pi is chosen as a concrete element realizing the Gaussian valuation
    of the difference D (a prime power, or a monomial), making T = D/pi
    exact; every value is realized this way in all built-in fields.
    Closed iff there is no repeated factor, or pi has value sigma and no
    repeated reduced factor divides the reduction of T.
    """
    _check_monic_integral(f)
    _check_separable(f)
    _irreducibility_for_report(f, mode)
    fact = factor(f.reduce())
    sigma = f.field.min_positive()
    repeated = fact.repeated_indices
    diff = f - _lifted_product(f, fact)
    if diff.is_zero():
        return ErshovResult(closed=not repeated, pi=None, T=None)
    pi = f.field.element_of_value(gauss_valuation(diff))
    T = Poly(f.field, [c / pi for c in diff.coeffs])
    if not repeated:
        return ErshovResult(closed=True, pi=pi, T=T)
    if sigma is None or pi.valuation() != sigma:
        return ErshovResult(closed=False, pi=pi, T=T)
    Tbar = T.reduce()
    closed = all(not fact.factors[i][0].divides(Tbar) for i in repeated)
    return ErshovResult(closed=closed, pi=pi, T=T)


def dedekind_test_m_form(f: Poly, mode: str = "assert") -> MFormResult:
    """Closedness via M = (f - prod(phi_i^l_i)) / pi with pi a uniformizer.

    Requires a minimum positive value and at least one repeated factor;
    closed iff no repeated reduced factor divides the reduction of M.
    """
    _check_monic_integral(f)
    _check_separable(f)
    _irreducibility_for_report(f, mode)
    pi = f.field.uniformizer()
    if pi is None:
        raise NoMinimum("the value group has no minimum positive element; use dedekind_test")
    fact = factor(f.reduce())
    repeated = fact.repeated_indices
    if not repeated:
        raise PreconditionError("no repeated residue factor; use dedekind_test")
    diff = f - _lifted_product(f, fact)
    M = Poly(f.field, [c / pi for c in diff.coeffs])
    if not M.is_integral():
        raise NotIntegral("internal error: M = (f - prod phi^l)/pi must be integral")
    Mbar = M.reduce()
    closed = all(not fact.factors[i][0].divides(Mbar) for i in repeated)
    return MFormResult(closed=closed, M=M)


def is_nu_eisenstein(g: Poly) -> EisensteinResult:
    """Eisenstein-type test: the reduction of g is a power of a single
    irreducible, and dividing g by the canonical lift leaves a remainder
    of Gaussian valuation exactly sigma.

    When the value group has no minimum positive element the condition
    is unsatisfiable; the result says so distinctly.
    """
    _check_monic_integral(g)
    sigma = g.field.min_positive()
    if sigma is None:
        return EisensteinResult(False, EisensteinReason.NO_MINIMUM, sigma=None)
    fact = factor(g.reduce())
    if fact.s != 1:
        return EisensteinResult(False, EisensteinReason.MULTIPLE_FACTORS, sigma=sigma)
    psibar, _ = fact.factors[0]
    psi = lift_monic(psibar, g.field)
    _, r = euclid_divide(g, psi)
    r_value = gauss_valuation(r)
    ok = r_value == sigma
    reason = EisensteinReason.ELIGIBLE if ok else EisensteinReason.REMAINDER_VALUE
    return EisensteinResult(ok, reason, sigma=sigma, psi=psi, r=r, r_value=r_value)


def ramification_report(report: DedekindReport) -> RamificationReport:
    """Ramification indices and residue degrees of the extension
    valuations, read off a CLOSED report: one valuation per residue
    factor, with index l_i and degree deg(phi_i); they sum to deg f.
    """
    if not report.closed:
        raise PreconditionError("ramification data is only defined for CLOSED verdicts")
    rows = tuple(
        RamificationRow(phi=c.phi, e=c.l, f=c.phi.degree) for c in report.certificates
    )
    total = sum(row.e * row.f for row in rows)
    assert total == report.f.degree
    return RamificationReport(s=len(rows), rows=rows, total=total)


def radical_test(n: int, a: FieldElement, mode: str = "assert") -> DedekindReport:
    """Specialized test for f = x^n - a with a in the maximal ideal.

    Produces the same report dedekind_test would: the reduction is x^n,
    so the single certificate divides by x and the remainder is -a.
    """
    if n < 2:
        raise PreconditionError("radical polynomials need n >= 2")
    field = a.field
    if a.is_zero():
        raise PreconditionError("the radicand must be nonzero")
    if not a.valuation().is_positive:
        raise PreconditionError("the radicand must lie in the maximal ideal (valuation > 0)")
    f = Poly.x(field) ** n - Poly.constant(a)
    _check_separable(f)
    irr = _irreducibility_for_report(f, mode)
    sigma = field.min_positive()
    phi = Poly.x(field)
    r = Poly.constant(-a)
    r_value = a.valuation()
    passes = sigma is not None and r_value == sigma
    cert = FactorCertificate(phi=phi, l=n, r=r, r_value=r_value, passes=passes)
    if sigma is None:
        verdict = Verdict.NOT_CLOSED_NO_MINIMUM
    elif passes:
        verdict = Verdict.CLOSED
    else:
        verdict = Verdict.NOT_CLOSED
    return DedekindReport(
        f=f,
        verdict=verdict,
        sigma=sigma,
        certificates=(cert,),
        separable=True,
        irreducibility=irr,
    )


def _multiple_of_sigma(value: GroupElement, sigma: GroupElement) -> int:
    """The non-negative integer m with value = m * sigma, if any."""
    gd = sigma.group
    coords = value.coords
    scoords = sigma.coords
    m = None
    for x, s in zip(coords, scoords):
        if s != 0:
            if x % s == 0:
                m = x // s
            break
    if m is None or m < 0 or m * sigma != value:
        raise ValueNotMultipleOfSigma(
            f"{value} is not a non-negative integer multiple of sigma = {sigma}"
        )
    return m


def radical_transform(n: int, a: FieldElement) -> RadicalTransform:
    """Rewrite x^n - a as an Eisenstein-type radical.

    With value(a) = m*sigma and gcd(m, n) = 1, the unique u, v with
    m*v - n*u = 1 and 0 <= v < n give A = a^v / pi^(n*u) of value sigma,
    and g = x^n - A passes the Eisenstein test; a root of g generates
    the integral closure.
    """
    if n < 1:
        raise PreconditionError("radical transform needs n >= 1")
    field = a.field
    sigma = field.min_positive()
    if sigma is None:
        raise NoMinimum("radical transform needs a minimum positive value")
    if a.is_zero():
        raise PreconditionError("the radicand must be nonzero")
    m = _multiple_of_sigma(a.valuation(), sigma)
    if int_gcd(m, n) != 1:
        raise GcdNotOne(f"gcd(m, n) = gcd({m}, {n}) != 1")
    v = pow(m, -1, n)
    u = (m * v - 1) // n
    pi = field.uniformizer()
    A = a**v / pi ** (n * u)
    assert A.valuation() == sigma
    g = Poly.x(field) ** n - Poly.constant(A)
    eis = is_nu_eisenstein(g)
    return RadicalTransform(u=u, v=v, A=A, g=g, eisenstein=bool(eis))
