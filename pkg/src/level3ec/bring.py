"""The coordinate ring B = Z[1/3][w][nu, (nu^3-1)^(-1)] / (1 + w + w^2).

An element is a polynomial in ``nu`` with ``EisElem`` coefficients divided
by a power of ``nu^3 - 1``.  The representation is canonical: the numerator
is not divisible by ``nu^3 - 1`` whenever the denominator exponent is
positive, which makes equality syntactic (B is a domain, so cross
multiplication cannot hide a mismatch between canonical forms).

Because ``nu^3 - 1 = (nu-1)(nu-w)(nu-wbar)`` and the three differences of
``{1, w, wbar}`` have norm 3, every element factors uniquely as

    unit_part * (nu-1)^n1 * (nu-w)^nw * (nu-wbar)^nwb

with integer (possibly negative) exponents and a unit_part polynomial with
no root in ``{1, w, wbar}``.  ``factor_nu_linear`` computes this form; the
unit test and inversion are read off from it.
"""

from collections import namedtuple

from .errors import NotAUnit, NotEverywhereDistinct, NonUnitDenominator, ZeroInput
from .eisenstein import EIS_ONE, EIS_ZERO, EisElem, OMEGA, OMEGA_BAR, QOmega

# -- dense polynomial helpers over EisElem (ascending coefficient tuples) ----


def _ptrim(c):
    n = len(c)
    while n and c[n - 1].is_zero():
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return _ptrim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [EIS_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return _ptrim(out)


def _pscale(a, s):
    return _ptrim([x * s for x in a])


def _pdivmod_monic(a, d):
    """Divide by a monic polynomial d; exact quotient/remainder pair."""
    r = list(a)
    dd = len(d) - 1
    if dd == 0:
        return tuple(r), ()
    q = [EIS_ZERO] * max(len(a) - dd, 0)
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i]
        if c.is_zero():
            continue
        q[i - dd] = c
        for j in range(dd + 1):
            r[i - dd + j] = r[i - dd + j] - c * d[j]
    return _ptrim(q), _ptrim(r)


def _peval(a, x):
    acc = EIS_ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


# nu^3 - 1 as a coefficient tuple
_D = (EisElem(-1), EIS_ZERO, EIS_ZERO, EIS_ONE)
_D_POWS = {0: (EIS_ONE,), 1: _D}


def _dpow(k):
    p = _D_POWS.get(k)
    if p is None:
        p = _pmul(_dpow(k - 1), _D)
        _D_POWS[k] = p
    return p


class BElem:
    __slots__ = ("coeffs", "den", "_hash")

    def __init__(self, coeffs, den=0):
        coeffs = _ptrim(tuple(coeffs))
        if not coeffs:
            den = 0
        else:
            while den > 0:
                q, r = _pdivmod_monic(coeffs, _D)
                if r:
                    break
                coeffs = q
                den -= 1
        self.coeffs = coeffs
        self.den = den
        self._hash = None

    # -- constructors ----------------------------------------------------

    @classmethod
    def const(cls, e):
        if isinstance(e, int):
            e = EisElem(e)
        return cls((e,))

    @classmethod
    def nu(cls):
        return cls((EIS_ZERO, EIS_ONE))

    # -- ring protocol ----------------------------------------------------

    def zero(self):
        return B_ZERO

    def one(self):
        return B_ONE

    def from_int(self, n):
        return BElem.const(EisElem(n))

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1 and self.den == 0

    def constant_value(self):
        """The EisElem value of a constant element."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.coeffs[0] if self.coeffs else EIS_ZERO

    def nu_degree(self):
        """Total degree in nu, counting the denominator negatively."""
        if self.is_zero():
            raise ZeroInput("degree of zero")
        return len(self.coeffs) - 1 - 3 * self.den

    def is_unit(self):
        if self.is_zero():
            return False
        fac = factor_nu_linear(self)
        return fac.unit_part.is_constant() and fac.unit_part.constant_value().norm().is_unit()

    def inverse(self):
        return invert(self)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, BElem):
            return other
        if isinstance(other, (int, EisElem)):
            return BElem.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = max(self.den, o.den)
        a = _pmul(self.coeffs, _dpow(d - self.den)) if d > self.den else self.coeffs
        b = _pmul(o.coeffs, _dpow(d - o.den)) if d > o.den else o.coeffs
        return BElem(_padd(a, b), d)

    __radd__ = __add__

    def __neg__(self):
        return BElem(_pneg(self.coeffs), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return BElem(_pmul(self.coeffs, o.coeffs), self.den + o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * invert(o)

    def __pow__(self, n):
        if n < 0:
            return invert(self) ** (-n)
        result = B_ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.den == o.den and self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            key = tuple(
                (c.c0.num, c.c0.exp, c.c1.num, c.c1.exp) for c in self.coeffs
            )
            self._hash = hash((key, self.den))
        return self._hash

    def __repr__(self):
        return f"BElem({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            cs = str(c)
            if "+" in cs or cs.startswith("-") and k > 0 or "/" in cs or "w" in cs:
                cs = f"({cs})"
            if k == 0:
                terms.append(cs)
            elif k == 1:
                terms.append("v" if cs == "1" else f"{cs}*v")
            else:
                terms.append(f"v^{k}" if cs == "1" else f"{cs}*v^{k}")
        body = "+".join(terms).replace("+-", "-")
        if self.den == 0:
            return body
        if len([t for t in terms]) > 1:
            body = f"({body})"
        suffix = "(v^3-1)" if self.den == 1 else f"(v^3-1)^{self.den}"
        return f"{body}/{suffix}"


B_ZERO = BElem(())
B_ONE = BElem((EIS_ONE,))
NU = BElem((EIS_ZERO, EIS_ONE))
B_OMEGA = BElem((OMEGA,))
B_OMEGA_BAR = BElem((OMEGA_BAR,))


def nu_minus(alpha):
    """The element nu - alpha for an EisElem alpha."""
    if isinstance(alpha, int):
        alpha = EisElem(alpha)
    return BElem((-alpha, EIS_ONE))


def canonicalize(e):
    """Re-run canonicalisation; idempotent by construction."""
    return BElem(e.coeffs, e.den)


def cross_equal(f, g):
    """Equality via cross multiplication, ignoring canonical forms.

    Used as an independent oracle against the syntactic equality of the
    canonical representation.
    """
    left = _pmul(f.coeffs, _dpow(g.den))
    right = _pmul(g.coeffs, _dpow(f.den))
    return left == right


NuLinearFactorization = namedtuple(
    "NuLinearFactorization", ["unit_part", "n1", "n_omega", "n_omega_bar"]
)

_ROOTS = (EIS_ONE, OMEGA, OMEGA_BAR)


def factor_nu_linear(f):
    """Split off the maximal powers of (nu-1), (nu-w), (nu-wbar).

    The returned exponents absorb the denominator, so they may be negative.
    ``unit_part`` is a polynomial (denominator exponent 0) with no root in
    {1, w, wbar}.
    """
    if f.is_zero():
        raise ZeroInput("cannot factor zero")
    coeffs = f.coeffs
    exps = []
    for root in _ROOTS:
        lin = (-root, EIS_ONE)
        m = 0
        while _peval(coeffs, root).is_zero():
            coeffs, rem = _pdivmod_monic(coeffs, lin)
            assert not rem
            m += 1
        exps.append(m - f.den)
    return NuLinearFactorization(BElem(coeffs), *exps)


def reassemble(fac):
    """Inverse of factor_nu_linear; used as a test oracle."""
    out = fac.unit_part
    for alpha, n in zip(_ROOTS, (fac.n1, fac.n_omega, fac.n_omega_bar)):
        if n >= 0:
            out = out * nu_minus(alpha) ** n
        else:
            out = out * _linear_inverse(alpha) ** (-n)
    return out


def _linear_inverse(alpha):
    """(nu - alpha)^(-1) for alpha in {1, w, wbar}: the complementary
    quadratic over nu^3 - 1."""
    others = [r for r in _ROOTS if r != alpha]
    quad = _pmul((-others[0], EIS_ONE), (-others[1], EIS_ONE))
    return BElem(quad, 1)


def is_unit(f):
    return f.is_unit()


def invert(f):
    """Inverse in B, via the nu-linear factorisation."""
    if f.is_zero():
        raise NotAUnit("zero is not a unit")
    fac = factor_nu_linear(f)
    if not fac.unit_part.is_constant():
        raise NotAUnit(f"{f} is not a unit of B (residual {fac.unit_part})")
    c = fac.unit_part.constant_value()
    if not c.norm().is_unit():
        raise NotAUnit(f"{f} is not a unit of B (constant norm {c.norm()})")
    out = BElem.const(c.inverse())
    for alpha, n in zip(_ROOTS, (fac.n1, fac.n_omega, fac.n_omega_bar)):
        if n > 0:
            out = out * _linear_inverse(alpha) ** n
        elif n < 0:
            out = out * nu_minus(alpha) ** (-n)
    return out


def eis_norm(a):
    """norm(a + b*w) = a^2 - a*b + b^2 in Z[1/3]."""
    return a.norm()


# -- unit-ideal certificates ---------------------------------------------------
#
# Over a field any nonzero minor is already a certificate.  Over B we first
# look for a single unit generator, then fall back to an extended gcd over
# Q(w)[nu]: clear denominators, strip the (nu - alpha) factors (units of B)
# from the gcd, and accept if what is left is a unit of B and all cofactors
# land back in B.


def _qpoly_trim(p):
    n = len(p)
    while n and p[n - 1].is_zero():
        n -= 1
    return p[:n]


def _qpoly_divmod(a, b):
    r = list(a)
    db = len(b) - 1
    inv_lead = b[-1].inverse()
    q = [QOmega(0)] * max(len(a) - db, 0)
    for i in range(len(r) - 1, db - 1, -1):
        if r[i].is_zero():
            continue
        c = r[i] * inv_lead
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] = r[i - db + j] - c * b[j]
    return _qpoly_trim(q), _qpoly_trim(r)


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [QOmega(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _qpoly_trim(out)


def _qpoly_sub(a, b):
    out = list(a) + [QOmega(0)] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = out[i] - y
    return _qpoly_trim(out)


def _qpoly_xgcd(a, b):
    """Extended gcd in Q(w)[nu]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = list(a), list(b)
    s0, s1 = [QOmega(1)], []
    t0, t1 = [], [QOmega(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        t0, t1 = t1, _qpoly_sub(t0, _qpoly_mul(q, t1))
    return r0, s0, t0


def _qpoly_from_belem_numer(f):
    return [QOmega.from_eis(c) for c in f.coeffs]


def _belem_from_qpoly(p):
    coeffs = []
    for c in p:
        e = c.to_eis()
        if e is None:
            return None
        coeffs.append(e)
    return BElem(coeffs)


def unit_ideal_certificate(elems):
    """Cofactors s_i with sum(s_i * elems_i) = 1, or None.

    The fast path returns a certificate as soon as some single element is a
    unit.  The general path goes through Q(w)[nu]; it can fail to find a
    certificate that exists only for arithmetic (mod p) reasons, but every
    returned certificate is verified exactly before being handed back.
    """
    elems = list(elems)
    n = len(elems)
    zero = B_ZERO
    # fast path: a single unit generator
    for i, f in enumerate(elems):
        if not f.is_zero() and f.is_unit():
            cert = [zero] * n
            cert[i] = invert(f)
            return cert
    nonzero = [(i, f) for i, f in enumerate(elems) if not f.is_zero()]
    if not nonzero:
        return None
    # extended gcd of the numerators over Q(w)[nu]
    g = _qpoly_from_belem_numer(nonzero[0][1])
    cof = {nonzero[0][0]: [QOmega(1)]}
    for i, f in nonzero[1:]:
        g2, s, t = _qpoly_xgcd(g, _qpoly_from_belem_numer(f))
        cof = {j: _qpoly_mul(s, c) for j, c in cof.items()}
        cof[i] = t
        g = g2
    # strip (nu - alpha) factors, which are units of B
    strip = B_ONE
    for root in (QOmega(1), QOmega(0, 1), QOmega(-1, -1)):
        lin = [-root, QOmega(1)]
        while len(g) > 1:
            q, r = _qpoly_divmod(g, lin)
            if r:
                break
            g = q
            strip = strip * nu_minus(root.to_eis())
    if len(g) != 1:
        return None  # residual common zero away from the nu^3 = 1 locus
    const = g[0]
    inv_const = const.inverse()
    cert = [zero] * n
    ok = True
    for j, c in cof.items():
        scaled = _qpoly_mul(c, [inv_const])
        b = _belem_from_qpoly(scaled)
        if b is None:
            ok = False
            break
        # undo the numerator lift (elems[j] = numer / (nu^3-1)^den) and the
        # stripped unit factor
        cert[j] = b * D_POWER(elems[j].den) * invert(strip)
    if ok:
        total = B_ZERO
        for s, f in zip(cert, elems):
            total = total + s * f
        if total == B_ONE:
            return cert
    return None


def D_POWER(k):
    return BElem(_dpow(k))


def distinct_certificate_or_raise(elems):
    cert = unit_ideal_certificate(elems)
    if cert is None:
        raise NotEverywhereDistinct("no unit-ideal certificate found")
    return cert


# -- specialisation -------------------------------------------------------------


def specialize(f, omega_img, nu_img):
    """Apply the ring map B -> R sending w, nu to the given images.

    R is any ring whose elements support the arithmetic protocol.  The map
    must invert 3 whenever a coefficient carries a 3-power denominator, and
    must invert nu_img^3 - 1 whenever f has a denominator; otherwise the
    specialisation does not exist and an error is raised.
    """
    one = omega_img.one()
    inv3 = None

    def r3_image(r):
        nonlocal inv3
        out = one.from_int(r.num)
        if r.exp:
            if inv3 is None:
                three = one.from_int(3)
                if not three.is_unit():
                    raise NonUnitDenominator(
                        "specialisation target does not invert 3"
                    )
                inv3 = three.inverse()
            out = out * inv3 ** r.exp
        return out

    def eis_image(e):
        return r3_image(e.c0) + r3_image(e.c1) * omega_img

    acc = one.zero()
    for c in reversed(f.coeffs):
        acc = acc * nu_img + eis_image(c)
    if f.den:
        d = nu_img ** 3 - one
        if not d.is_unit():
            raise SingularSpecialization(
                "nu^3 - 1 is not invertible at the requested point"
            )
        acc = acc * d.inverse() ** f.den
    return acc


class SingularSpecialization(NonUnitDenominator):
    """Specialisation hit the singular locus; subclass so callers that keep
    the coarse NonUnitDenominator contract still work."""
