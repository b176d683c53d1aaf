"""Independent ground truth for validating the engine.

Nothing here calls into the criterion or residue_factor modules; only
the shared polynomial arithmetic layer is reused.  Three sources:

* :func:`classical_dedekind_qp` -- the classical gcd-form maximality
  test over the p-adic rationals (radical lift g, cofactor lift h,
  T = (g*h - f)/p, maximal iff gcd of the reductions is 1),
* :func:`quadratic_table` -- the closed-form answer for x^2 - d from
  quadratic number field theory (only p = 2 can divide the index, and
  does exactly when d = 1 mod 4),
* :func:`exhaustive_factor` -- residue factorization by complete
  enumeration of monic divisors, for small degrees and fields.
"""

from __future__ import annotations

from .errors import PreconditionError
from .finitefield import FiniteField
from .poly import Poly, ResiduePoly, gauss_valuation, is_separable, lift_monic
from .residue_factor import ResidueFactorization, monic_polys
from .valued_field import PAdicRationals

__all__ = ["classical_dedekind_qp", "quadratic_table", "exhaustive_factor"]

_MAX_DEGREE = 6
_MAX_FIELD = 9


def _enum_is_irreducible(rp: ResiduePoly) -> bool:
    # no monic divisor of any degree strictly between 0 and deg; full
    # enumeration, independent of the irreducible tables used elsewhere
    for d in range(1, rp.degree):
        for cand in monic_polys(rp.gf, d):
            if cand.divides(rp):
                return False
    return True


def exhaustive_factor(rp: ResiduePoly) -> ResidueFactorization:
    """Factor by trying every monic polynomial in canonical order."""
    if rp.is_zero() or rp.degree < 1:
        raise PreconditionError("factorization expects a nonzero polynomial of degree >= 1")
    if rp.degree > _MAX_DEGREE or rp.gf.q > _MAX_FIELD:
        raise PreconditionError(
            f"exhaustive_factor is limited to degree <= {_MAX_DEGREE} and q <= {_MAX_FIELD}"
        )
    unit = rp.coeffs[-1]
    f = rp.monic()
    factors = []
    d = 1
    while f.degree >= 1:
        for cand in monic_polys(f.gf, d):
            if cand.degree > f.degree:
                break
            if cand.divides(f) and _enum_is_irreducible(cand):
                l = 0
                while cand.divides(f):
                    f = f // cand
                    l += 1
                factors.append((cand, l))
        d += 1
    return ResidueFactorization(rp.gf, unit, tuple(factors))


def quadratic_table(d: int, p: int) -> bool:
    """Whether the order generated by a square root of d is p-maximal.

    Closed form: the index of that order in the ring of integers is 2
    when d = 1 mod 4 and 1 otherwise, so only p = 2 can fail.
    """
    if d in (0, 1):
        raise PreconditionError(f"d = {d} does not define a quadratic extension")
    for f in range(2, int(abs(d)) + 1):
        if f * f > abs(d):
            break
        if d % (f * f) == 0:
            raise PreconditionError(f"{d} is not squarefree")
    return p != 2 or d % 4 != 1


def classical_dedekind_qp(f: Poly) -> bool:
    """Classical gcd-form maximality test over the p-adic rationals.

    Factors the reduction by exhaustive enumeration, lifts the radical g
    and the cofactor h, forms T = (g*h - f)/p, and declares maximality
    exactly when gcd(T-bar, g-bar, h-bar) = 1 over GF(p).  Shares no
    code with the criterion module beyond polynomial arithmetic.
    """
    field = f.field
    if not isinstance(field, PAdicRationals):
        raise PreconditionError("classical_dedekind_qp works over the p-adic rationals")
    if f.degree < 1 or not f.is_monic():
        raise PreconditionError("expected a monic polynomial of degree >= 1")
    if not f.is_integral():
        raise PreconditionError("expected an integral polynomial")
    if not is_separable(f):
        raise PreconditionError("expected a separable polynomial")
    fact = exhaustive_factor(f.reduce())
    g = Poly.one(field)
    h = Poly.one(field)
    for gbar_i, e in fact:
        lifted = lift_monic(gbar_i, field)
        g = g * lifted
        h = h * lifted ** (e - 1)
    p = field.from_int(field.p)
    diff = g * h - f
    assert diff.is_zero() or gauss_valuation(diff).is_positive  # T is integral
    T = Poly(field, [c / p for c in diff.coeffs])
    Tbar = T.reduce()
    gbar = g.reduce()
    hbar = h.reduce()
    d = Tbar.gcd(gbar).gcd(hbar)
    return d.degree == 0
