"""Sparse polynomials over an exact coefficient field, and reduced
fractions of them.

A polynomial is a dict mapping exponent tuples to nonzero coefficients;
the zero polynomial is the empty dict.  Coefficient arithmetic is
delegated to a tiny domain object (rationals, or a finite field), so the
same code serves GF(q)[X,Y], GF(q)[X] and Q[X].  Only one or two
variables are ever needed.

Fractions are pairs (num, den) kept in lowest terms with the denominator
scaled to leading coefficient 1 (in total-degree-then-lex term order),
so equality is a plain dict comparison and re-canonicalization is
idempotent.  GCDs use content/primitive-part splitting with a primitive
pseudo-remainder sequence in the bivariate case; inputs are desk scale,
so coefficient growth is a non-issue.
"""

from __future__ import annotations

from fractions import Fraction

from .finitefield import FiniteField


class RationalDomain:
    """Coefficient domain Q, backed by fractions.Fraction."""

    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n):
        return Fraction(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def inv(a):
        return 1 / a

    @staticmethod
    def div(a, b):
        return a / b


QQ = RationalDomain()


class GFDomain:
    """Coefficient domain GF(q); values are canonical int representatives."""

    def __init__(self, gf: FiniteField):
        self.gf = gf
        self.zero = 0
        self.one = 1

    def from_int(self, n):
        return self.gf.from_int(n)

    def add(self, a, b):
        return self.gf.add(a, b)

    def sub(self, a, b):
        return self.gf.sub(a, b)

    def neg(self, a):
        return self.gf.neg(a)

    def mul(self, a, b):
        return self.gf.mul(a, b)

    def inv(self, a):
        return self.gf.inv(a)

    def div(self, a, b):
        return self.gf.div(a, b)


# ---------------------------------------------------------------------------
# polynomial primitives (exponent tuples -> nonzero coefficients)

def term_key(e):
    """Total-degree-then-lex order on exponent tuples."""
    return (sum(e), e)


def _eadd(e1, e2):
    return tuple(x + y for x, y in zip(e1, e2))


def pzero():
    return {}


def pconst(dom, c, nvars):
    return {} if c == dom.zero else {(0,) * nvars: c}


def pone(dom, nvars):
    return {(0,) * nvars: dom.one}


def is_const(a, nvars):
    return not a or (len(a) == 1 and (0,) * nvars in a)


def plead(a):
    e = max(a, key=term_key)
    return e, a[e]


def padd(dom, a, b):
    out = dict(a)
    for e, c in b.items():
        s = dom.add(out.get(e, dom.zero), c)
        if s == dom.zero:
            out.pop(e, None)
        else:
            out[e] = s
    return out


def pneg(dom, a):
    return {e: dom.neg(c) for e, c in a.items()}


def psub(dom, a, b):
    return padd(dom, a, pneg(dom, b))


def pmul(dom, a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = _eadd(e1, e2)
            s = dom.add(out.get(e, dom.zero), dom.mul(c1, c2))
            if s == dom.zero:
                out.pop(e, None)
            else:
                out[e] = s
    return out


def pscale(dom, a, c):
    if c == dom.zero:
        return {}
    return {e: dom.mul(x, c) for e, x in a.items()}


# ---------------------------------------------------------------------------
# univariate helpers (1-tuple exponents)

def udeg(a):
    return max(e[0] for e in a) if a else -1


def udivmod(dom, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    (db,), lb = plead(b)
    q = {}
    r = dict(a)
    while r:
        (dr,), lr = plead(r)
        if dr < db:
            break
        c = dom.div(lr, lb)
        k = dr - db
        q[(k,)] = c
        for e, bc in b.items():
            ke = (e[0] + k,)
            s = dom.sub(r.get(ke, dom.zero), dom.mul(c, bc))
            if s == dom.zero:
                r.pop(ke, None)
            else:
                r[ke] = s
    return q, r


def _monic_lead(dom, a):
    _, lc = plead(a)
    if lc == dom.one:
        return dict(a)
    return pscale(dom, a, dom.inv(lc))


def ugcd(dom, a, b):
    if not a and not b:
        return {}
    if not a:
        return _monic_lead(dom, b)
    if not b:
        return _monic_lead(dom, a)
    while b:
        a, b = b, udivmod(dom, a, b)[1]
    return _monic_lead(dom, a)


def uexact_div(dom, a, b):
    q, r = udivmod(dom, a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


# ---------------------------------------------------------------------------
# bivariate helpers via the recursive view GF(q)[Y][X]

def _to_rec(a):
    rec = {}
    for (i, j), c in a.items():
        rec.setdefault(i, {})[(j,)] = c
    return rec


def _from_rec(rec):
    return {(i, j): c for i, coeff in rec.items() for (j,), c in coeff.items()}


def _rec_sub(dom, A, B):
    out = dict(A)
    for i, coeff in B.items():
        s = psub(dom, out.get(i, {}), coeff)
        if s:
            out[i] = s
        else:
            out.pop(i, None)
    return out


def _rec_scale(dom, A, u):
    out = {}
    for i, coeff in A.items():
        prod = pmul(dom, coeff, u)
        if prod:
            out[i] = prod
    return out


def _rec_shift_mul(dom, A, k, u):
    out = {}
    for i, coeff in A.items():
        prod = pmul(dom, coeff, u)
        if prod:
            out[i + k] = prod
    return out


def _rec_content(dom, A):
    g = {}
    for coeff in A.values():
        g = ugcd(dom, g, coeff)
        if udeg(g) == 0:
            break
    return g


def _rec_prim(dom, A, cont):
    if udeg(cont) == 0 and cont == {(0,): dom.one}:
        return dict(A)
    return {i: uexact_div(dom, coeff, cont) for i, coeff in A.items()}


def _prem(dom, A, B):
    """Pseudo-remainder of A by B in the main variable."""
    dB = max(B)
    lB = B[dB]
    R = A
    while R:
        dR = max(R)
        if dR < dB:
            break
        R = _rec_sub(dom, _rec_scale(dom, R, lB), _rec_shift_mul(dom, B, dR - dB, R[dR]))
    return R


def bgcd(dom, a, b):
    A, B = _to_rec(a), _to_rec(b)
    contA = _rec_content(dom, A)
    contB = _rec_content(dom, B)
    cont = ugcd(dom, contA, contB)
    A = _rec_prim(dom, A, contA)
    B = _rec_prim(dom, B, contB)
    if max(A) < max(B):
        A, B = B, A
    while B:
        R = _prem(dom, A, B)
        A, B = B, (_rec_prim(dom, R, _rec_content(dom, R)) if R else {})
    result = _from_rec(_rec_scale(dom, A, cont))
    return _monic_lead(dom, result)


def bexact_div(dom, a, b):
    A, B = _to_rec(a), _to_rec(b)
    dB = max(B)
    lB = B[dB]
    q = {}
    while A:
        dA = max(A)
        if dA < dB:
            raise ArithmeticError("inexact polynomial division")
        c = uexact_div(dom, A[dA], lB)
        q[dA - dB] = c
        A = _rec_sub(dom, A, _rec_shift_mul(dom, B, dA - dB, c))
    return _from_rec(q)


def _mono_gcd(dom, nvars, mono, other):
    e = next(iter(mono))
    m = tuple(min(e[i], min(k[i] for k in other)) for i in range(nvars))
    return {m: dom.one}


def pgcd(dom, nvars, a, b):
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    if not a:
        return _monic_lead(dom, b)
    if not b:
        return _monic_lead(dom, a)
    if is_const(a, nvars) or is_const(b, nvars):
        return pone(dom, nvars)
    if len(a) == 1:
        return _mono_gcd(dom, nvars, a, b)
    if len(b) == 1:
        return _mono_gcd(dom, nvars, b, a)
    if nvars == 1:
        return ugcd(dom, a, b)
    return bgcd(dom, a, b)


def pexact_div(dom, nvars, a, b):
    if not a:
        return {}
    if nvars == 1:
        return uexact_div(dom, a, b)
    return bexact_div(dom, a, b)


# ---------------------------------------------------------------------------
# reduced fractions

def frac_canon(dom, nvars, num, den):
    if not den:
        raise ZeroDivisionError("zero denominator in rational function")
    if not num:
        return {}, pone(dom, nvars)
    if len(den) == 1 or len(num) == 1:
        # a one-term side only shares a monomial factor; no full gcd needed
        m = tuple(
            min(min(e[i] for e in num), min(e[i] for e in den))
            for i in range(nvars)
        )
        if any(m):
            num = {tuple(x - y for x, y in zip(e, m)): c for e, c in num.items()}
            den = {tuple(x - y for x, y in zip(e, m)): c for e, c in den.items()}
    else:
        g = pgcd(dom, nvars, num, den)
        if not is_const(g, nvars):
            num = pexact_div(dom, nvars, num, g)
            den = pexact_div(dom, nvars, den, g)
    _, lc = plead(den)
    if lc != dom.one:
        c = dom.inv(lc)
        num = pscale(dom, num, c)
        den = pscale(dom, den, c)
    return num, den


def frac_zero(dom, nvars):
    return {}, pone(dom, nvars)


def frac_from_poly(dom, nvars, num):
    return dict(num), pone(dom, nvars)


def frac_is_zero(x):
    return not x[0]


def frac_add(dom, nvars, x, y):
    a, b = x
    c, d = y
    if not a:
        return y
    if not c:
        return x
    if b == d:
        return frac_canon(dom, nvars, padd(dom, a, c), b)
    g = pgcd(dom, nvars, b, d)
    if is_const(g, nvars):
        # coprime reduced denominators: the sum is already reduced
        num = padd(dom, pmul(dom, a, d), pmul(dom, c, b))
        if not num:
            return frac_zero(dom, nvars)
        return num, pmul(dom, b, d)
    b1 = pexact_div(dom, nvars, b, g)
    d1 = pexact_div(dom, nvars, d, g)
    num = padd(dom, pmul(dom, a, d1), pmul(dom, c, b1))
    if not num:
        return frac_zero(dom, nvars)
    h = pgcd(dom, nvars, num, g)
    if not is_const(h, nvars):
        num = pexact_div(dom, nvars, num, h)
        g = pexact_div(dom, nvars, g, h)
    den = pmul(dom, pmul(dom, b1, d1), g)
    _, lc = plead(den)
    if lc != dom.one:
        c_ = dom.inv(lc)
        num = pscale(dom, num, c_)
        den = pscale(dom, den, c_)
    return num, den


def frac_neg(dom, x):
    return pneg(dom, x[0]), x[1]


def frac_sub(dom, nvars, x, y):
    return frac_add(dom, nvars, x, frac_neg(dom, y))


def _cross_cancel(dom, nvars, a, d):
    # reduce the pair (a, d) by their gcd; both stay canonical enough
    if not a or is_const(a, nvars) or is_const(d, nvars):
        return a, d
    g = pgcd(dom, nvars, a, d)
    if is_const(g, nvars):
        return a, d
    return pexact_div(dom, nvars, a, g), pexact_div(dom, nvars, d, g)


def frac_mul(dom, nvars, x, y):
    a, b = x
    c, d = y
    if not a or not c:
        return frac_zero(dom, nvars)
    a, d = _cross_cancel(dom, nvars, a, d)
    c, b = _cross_cancel(dom, nvars, c, b)
    num = pmul(dom, a, c)
    den = pmul(dom, b, d)
    _, lc = plead(den)
    if lc != dom.one:
        c_ = dom.inv(lc)
        num = pscale(dom, num, c_)
        den = pscale(dom, den, c_)
    return num, den


def frac_div(dom, nvars, x, y):
    if not y[0]:
        raise ZeroDivisionError("division by zero")
    return frac_mul(dom, nvars, x, (y[1], y[0]))
