"""Complete monic irreducible factorization over the finite residue field.

The algorithm is deliberately elementary so it can be audited directly:
squarefree decomposition (handling the characteristic-p case where the
derivative vanishes by taking p-th roots of coefficients), then trial
division of each squarefree part by monic irreducibles enumerated in
increasing (degree, coefficient-code) order.  The enumerated tables are
memoized per (q, degree); lru_cache keeps concurrent initialization safe
(a race at worst recomputes the same tuple).

Factors are reported sorted by degree, then lexicographically on the
coefficient representatives, so output is reproducible byte for byte.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import PreconditionError
from .finitefield import FiniteField, finite_field
from .poly import ResiduePoly

__all__ = [
    "ResidueFactorization",
    "factor",
    "is_irreducible",
    "irreducibles",
    "monic_polys",
]

_ENUMERATION_LIMIT = 1 << 20  # candidates per (q, degree) table


def monic_polys(gf: FiniteField, degree: int):
    """All monic polynomials of the given degree, in coefficient-code order."""
    if degree == 0:
        yield ResiduePoly.one(gf)
        return
    q = gf.q
    if q**degree > _ENUMERATION_LIMIT:
        raise PreconditionError(
            f"enumerating monic degree-{degree} polynomials over GF({q}) is too large"
        )
    for code in range(q**degree):
        coeffs = []
        v = code
        for _ in range(degree):
            coeffs.append(v % q)
            v //= q
        coeffs.append(1)
        yield ResiduePoly(gf, coeffs)


@functools.lru_cache(maxsize=None)
def _irreducible_table(q: int, degree: int) -> tuple[ResiduePoly, ...]:
    gf = finite_field(q)
    out = []
    for cand in monic_polys(gf, degree):
        for d in range(1, degree // 2 + 1):
            if any(psi.divides(cand) for psi in _irreducible_table(q, d)):
                break
        else:
            out.append(cand)
    return tuple(out)


def irreducibles(gf: FiniteField, degree: int) -> tuple[ResiduePoly, ...]:
    """Monic irreducibles of the given degree over GF(q), in canonical order."""
    if degree < 1:
        raise PreconditionError("irreducible polynomials have degree >= 1")
    return _irreducible_table(gf.q, degree)


def is_irreducible(rp: ResiduePoly) -> bool:
    """No monic factor of degree between 1 and deg/2."""
    if rp.degree < 1:
        raise PreconditionError("irreducibility is only defined for degree >= 1")
    for d in range(1, rp.degree // 2 + 1):
        if any(psi.divides(rp) for psi in irreducibles(rp.gf, d)):
            return False
    return True


def _squarefree_parts(f: ResiduePoly) -> list[tuple[ResiduePoly, int]]:
    """Distinct squarefree factors of a monic f with their multiplicities."""
    out = []
    scale = 1
    p = f.gf.p
    while True:
        df = f.derivative()
        if not df.is_zero():
            g = f.gcd(df)
            h = f // g
            i = 1
            while h.degree >= 1:
                step = g.gcd(h)
                part = h // step
                if part.degree >= 1:
                    out.append((part, i * scale))
                g, h = g // step, step
                i += 1
            if g.degree < 1:
                return out
            f = g  # all remaining multiplicities divisible by p
        f = f.pth_root()
        scale *= p
        if f.degree < 1:
            return out


def _factor_squarefree(g: ResiduePoly) -> list[ResiduePoly]:
    """Irreducible factors of a monic squarefree g, each exactly once."""
    factors = []
    d = 1
    while 2 * d <= g.degree:
        for psi in irreducibles(g.gf, d):
            if psi.divides(g):
                factors.append(psi)
                g = g // psi
        d += 1
    if g.degree >= 1:
        factors.append(g)
    return factors


@dataclass(frozen=True)
class ResidueFactorization:
    """The multiset of monic irreducible factors with multiplicities.

    ``unit * product(phi_i ** l_i)`` reproduces the input exactly.
    """

    gf: FiniteField
    unit: int
    factors: tuple[tuple[ResiduePoly, int], ...]

    @property
    def s(self) -> int:
        return len(self.factors)

    @property
    def repeated_indices(self) -> tuple[int, ...]:
        """Indices with multiplicity >= 2."""
        return tuple(i for i, (_, l) in enumerate(self.factors) if l >= 2)

    def product(self) -> ResiduePoly:
        out = ResiduePoly(self.gf, (self.unit,))
        for phi, l in self.factors:
            out = out * phi**l
        return out

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        parts = [] if self.unit == 1 else [str(self.unit)]
        for phi, l in self.factors:
            parts.append(f"({phi})" if l == 1 else f"({phi})^{l}")
        return " * ".join(parts) if parts else "1"


def factor(rp: ResiduePoly) -> ResidueFactorization:
    """Monic irreducible factorization over GF(q), deterministic order."""
    if rp.is_zero() or rp.degree < 1:
        raise PreconditionError("factorization expects a nonzero polynomial of degree >= 1")
    unit = rp.coeffs[-1]
    f = rp.monic()
    found: dict[ResiduePoly, int] = {}
    for part, mult in _squarefree_parts(f):
        for psi in _factor_squarefree(part):
            assert psi not in found  # squarefree parts are coprime
            found[psi] = mult
    factors = tuple(sorted(found.items(), key=lambda it: (it[0].degree, it[0].coeffs)))
    result = ResidueFactorization(rp.gf, unit, factors)
    assert result.product() == rp, "internal error: factorization does not multiply back"
    assert sum(l * phi.degree for phi, l in factors) == rp.degree
    return result
