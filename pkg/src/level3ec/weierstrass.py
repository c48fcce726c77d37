"""Weierstrass curves and projective points over any supported ring.

Everything is exact.  The chord-tangent group law performs divisions only
by certified units; over a ring with nontrivial spectrum (such as B) a
non-unit, nonzero denominator means the construction is not uniform across
fibres, and that situation is reported as ``NonUnitDenominator`` rather
than silently specialised away.

Model transforms are the substitutions

    [x : y : z]  ->  [u^2 x + r z : s u^2 x + u^3 y + t z : z]

acting on points; ``transform`` produces the curve the image points land
on, by solving the five classical coefficient relations for the target
a-invariants.  With this orientation the discriminant scales as
Delta' = u^12 * Delta.
"""

from .bring import unit_ideal_certificate
from .errors import (
    NonUnitDenominator,
    NonUnitDiscriminant,
    NotEverywhereDistinct,
)


class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a common ring."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6")

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1 = a1
        self.a2 = a2
        self.a3 = a3
        self.a4 = a4
        self.a6 = a6

    @property
    def ring_one(self):
        return self.a1.one()

    @property
    def ring_zero(self):
        return self.a1.zero()

    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self):
        a1, a2, a3, a4, a6 = self.a_invariants()
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        # integral form of (b2 b6 - b4^2)/4, valid when 2 is not invertible
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def c_invariants(self):
        b2, b4, b6, _ = self.b_invariants()
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6
        return c4, c6

    def discriminant(self):
        b2, b4, b6, b8 = self.b_invariants()
        return (
            -(b2 * b2 * b8)
            - 8 * (b4 * b4 * b4)
            - 27 * (b6 * b6)
            + 9 * b2 * b4 * b6
        )

    def j_invariant(self):
        c4, _ = self.c_invariants()
        delta = self.discriminant()
        if not delta.is_unit():
            raise NonUnitDiscriminant(f"discriminant {delta} is not a unit")
        return c4 ** 3 * delta.inverse()

    def invariants(self):
        """(c4, c6, Delta, j); j needs a unit discriminant."""
        c4, c6 = self.c_invariants()
        return c4, c6, self.discriminant(), self.j_invariant()

    def is_elliptic(self):
        return self.discriminant().is_unit()

    # -- evaluation -------------------------------------------------------

    def equation_at(self, x, y, z):
        """The homogeneous cubic F(x, y, z); zero exactly on the curve."""
        a1, a2, a3, a4, a6 = self.a_invariants()
        return (
            y * y * z
            + a1 * x * y * z
            + a3 * y * z * z
            - x * x * x
            - a2 * x * x * z
            - a4 * x * z * z
            - a6 * z * z * z
        )

    def partials_at(self, x, y, z):
        """(F_x, F_y, F_z) at the given coordinates."""
        a1, a2, a3, a4, a6 = self.a_invariants()
        fx = a1 * y * z - 3 * x * x - 2 * a2 * x * z - a4 * z * z
        fy = 2 * y * z + a1 * x * z + a3 * z * z
        fz = (
            y * y
            + a1 * x * y
            + 2 * a3 * y * z
            - a2 * x * x
            - 2 * a4 * x * z
            - 3 * a6 * z * z
        )
        return fx, fy, fz

    def __eq__(self, other):
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self.a_invariants() == other.a_invariants()

    def __hash__(self):
        return hash(self.a_invariants())

    def __repr__(self):
        return (
            f"WeierstrassCurve(a1={self.a1}, a2={self.a2}, a3={self.a3}, "
            f"a4={self.a4}, a6={self.a6})"
        )


class ProjPoint:
    """[x : y : z] up to unit scalars; requires a unit coordinate."""

    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z, check=True):
        self.x = x
        self.y = y
        self.z = z
        if check:
            if x.is_zero() and y.is_zero() and z.is_zero():
                raise ValueError("all projective coordinates are zero")
            if not (x.is_unit() or y.is_unit() or z.is_unit()):
                raise ValueError("no projective coordinate is a unit")

    @classmethod
    def zero_point(cls, one):
        """The group identity O = [0 : 1 : 0]."""
        return cls(one.zero(), one, one.zero(), check=False)

    @classmethod
    def affine(cls, x, y):
        return cls(x, y, x.one(), check=False)

    def is_zero_point(self):
        return self.x.is_zero() and self.z.is_zero() and self.y.is_unit()

    def minors_against(self, other):
        """(m_xy, m_xz, m_yz): the 2x2 minors of the coordinate matrix."""
        return (
            self.x * other.y - self.y * other.x,
            self.x * other.z - self.z * other.x,
            self.y * other.z - self.z * other.y,
        )

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return all(m.is_zero() for m in self.minors_against(other))

    def __hash__(self):
        for c in (self.z, self.y, self.x):
            if c.is_unit():
                inv = c.inverse()
                return hash(
                    ("projpoint", _key(self.x * inv), _key(self.y * inv), _key(self.z * inv))
                )
        raise ValueError("unhashable point without unit coordinate")

    def scaled(self, factor):
        return ProjPoint(
            self.x * factor, self.y * factor, self.z * factor, check=False
        )

    def to_affine(self):
        """(x/z, y/z); the z coordinate must be a unit."""
        if not self.z.is_unit():
            raise NonUnitDenominator("z coordinate is not a unit")
        zi = self.z.inverse()
        return self.x * zi, self.y * zi

    def __repr__(self):
        return f"[{self.x} : {self.y} : {self.z}]"


def _key(elem):
    return hash(elem)


def is_on_curve(curve, point):
    return curve.equation_at(point.x, point.y, point.z).is_zero()


def is_smooth_point(curve, point):
    """True when the partials generate the unit ideal at the point.

    Over a field this is "not all partials vanish".  Over B a unit-ideal
    certificate is constructed, exactly as for section distinctness.
    """
    vals = list(curve.partials_at(point.x, point.y, point.z))
    if all(v.is_zero() for v in vals):
        return False
    if any(v.is_unit() for v in vals):
        return True
    from .bring import BElem

    if isinstance(vals[0], BElem):
        return unit_ideal_certificate(vals) is not None
    return False


def negate(curve, point):
    """-[x : y : z] = [x : -y - a1 x - a3 z : z]."""
    return ProjPoint(
        point.x,
        -point.y - curve.a1 * point.x - curve.a3 * point.z,
        point.z,
        check=False,
    )


def slope_at(curve, point):
    """dy/dx from implicit differentiation at an affine point.

    The denominator 2y + a1 x + a3 must be a unit: geometrically, the
    tangent is nowhere vertical.
    """
    x, y = point.to_affine()
    a1, a2, _, a4, _ = curve.a_invariants()
    numer = 3 * x * x + 2 * a2 * x + a4 - a1 * y
    denom = 2 * y + a1 * x + curve.a3
    if not denom.is_unit():
        raise NonUnitDenominator(f"tangent denominator {denom} is not a unit")
    return numer * denom.inverse()


def add(curve, p, q):
    """Chord-tangent addition with identity O = [0:1:0].

    Case order: either argument O; p = -q; x difference a unit (chord);
    x difference exactly zero (tangent); otherwise the sum is not defined
    uniformly over the base and NonUnitDenominator is raised.
    """
    if p.is_zero_point():
        return q
    if q.is_zero_point():
        return p
    x1, y1 = p.to_affine()
    x2, y2 = q.to_affine()
    dx = x1 - x2
    a1, a2, a3 = curve.a1, curve.a2, curve.a3
    if dx.is_zero():
        # same x: either inverse points or a doubling
        if y2 == -y1 - a1 * x1 - a3:
            return ProjPoint.zero_point(curve.ring_one)
        if y1 != y2:
            raise NonUnitDenominator(
                "points share x but are neither equal nor opposite"
            )
        m = slope_at(curve, p)
    elif dx.is_unit():
        m = (y1 - y2) * dx.inverse()
    else:
        raise NonUnitDenominator(
            f"x difference {dx} is neither zero nor a unit"
        )
    x3 = m * m + a1 * m - a2 - x1 - x2
    y3 = m * (x3 - x1) + y1
    return negate(curve, ProjPoint.affine(x3, y3))


def scalar_mul(curve, n, point):
    if n < 0:
        return scalar_mul(curve, -n, negate(curve, point))
    acc = ProjPoint.zero_point(curve.ring_one)
    base = point
    while n:
        if n & 1:
            acc = add(curve, acc, base)
        if n > 1:
            base = add(curve, base, base)
        n >>= 1
    return acc


def collinear_det(p, q, r):
    """Determinant of the 3x3 coordinate matrix; zero for collinear triples."""
    def row(pt):
        if isinstance(pt, ProjPoint):
            return pt.x, pt.y, pt.z
        return pt

    (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = row(p), row(q), row(r)
    return (
        x1 * (y2 * z3 - z2 * y3)
        - y1 * (x2 * z3 - z2 * x3)
        + z1 * (x2 * y3 - y2 * x3)
    )


def distinctness_certificate(p, q):
    """Cofactors (s_xy, s_xz, s_yz) with s . minors = 1.

    Existence certifies the two sections never meet on any fibre.  Raises
    NotEverywhereDistinct when no certificate is found.
    """
    minors = p.minors_against(q)
    if all(m.is_zero() for m in minors):
        raise NotEverywhereDistinct("all minors vanish: the points coincide")
    if hasattr(minors[0], "den"):  # BElem path with the gcd fallback
        cert = unit_ideal_certificate(minors)
    else:
        cert = None
        for i, m in enumerate(minors):
            if m.is_unit():
                cert = [m.zero()] * 3
                cert[i] = m.inverse()
                break
    if cert is None:
        raise NotEverywhereDistinct(
            "no unit-ideal certificate for the coordinate minors"
        )
    return tuple(cert)


class ModelTransform:
    """The substitution data (u, r, s, t) with u a unit."""

    __slots__ = ("u", "r", "s", "t")

    def __init__(self, u, r, s, t):
        if not u.is_unit():
            raise NonUnitDenominator(f"transform scale u = {u} is not a unit")
        self.u = u
        self.r = r
        self.s = s
        self.t = t

    @classmethod
    def identity(cls, one):
        return cls(one, one.zero(), one.zero(), one.zero())

    def entries(self):
        return (self.u, self.r, self.s, self.t)

    def matrix(self):
        """The 3x3 matrix acting on column vectors [x, y, z]."""
        u, r, s, t = self.entries()
        zero, one = u.zero(), u.one()
        u2 = u * u
        return (
            (u2, zero, r),
            (s * u2, u2 * u, t),
            (zero, zero, one),
        )

    def compose(self, inner):
        """Matrix product self . inner (inner acts first)."""
        u1, r1, s1, t1 = self.entries()
        u0, r0, s0, t0 = inner.entries()
        return ModelTransform(
            u1 * u0,
            u1 * u1 * r0 + r1,
            s1 + u1 * s0,
            s1 * u1 * u1 * r0 + u1 ** 3 * t0 + t1,
        )

    def inverse(self):
        u, r, s, t = self.entries()
        ui = u.inverse()
        ui2 = ui * ui
        return ModelTransform(
            ui, -r * ui2, -s * ui, (s * r - t) * ui2 * ui
        )

    def __eq__(self, other):
        if not isinstance(other, ModelTransform):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(tuple(_key(e) for e in self.entries()))

    def __repr__(self):
        return f"A(u={self.u}, r={self.r}, s={self.s}, t={self.t})"


def transform_point(m, point):
    """Apply the matrix of m to homogeneous coordinates."""
    u, r, s, t = m.entries()
    u2 = u * u
    x, y, z = point.x, point.y, point.z
    return ProjPoint(
        u2 * x + r * z,
        s * u2 * x + u2 * u * y + t * z,
        z,
        check=False,
    )


def transform(curve, m):
    """The curve that image points of ``curve`` under ``m`` satisfy.

    Solves the five coefficient relations sequentially for the target
    a-invariants.
    """
    u, r, s, t = m.entries()
    a1, a2, a3, a4, a6 = curve.a_invariants()
    u2 = u * u
    b1 = u * a1 - 2 * s
    b2 = u2 * a2 + s * b1 - 3 * r + s * s
    b3 = u2 * u * a3 - r * b1 - 2 * t
    b4 = (
        u2 * u2 * a4
        + s * b3
        - 2 * r * b2
        + (s * r + t) * b1
        - 3 * r * r
        + 2 * s * t
    )
    b6 = (
        u2 * u2 * u2 * a6
        - r * b4
        + t * b3
        - r * r * b2
        + t * r * b1
        - r * r * r
        + t * t
    )
    return WeierstrassCurve(b1, b2, b3, b4, b6)
