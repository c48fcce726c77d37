"""The nine 3-torsion sections of the curve over B and their verification.

The curve is

    C :  y^2 + 3 nu xy + (nu^3 - 1) y = x^3      over B,

and the level-3 structure assigns to each vector (k, l) in F_3 x F_3 a
section of C.  For l != 0 the section is

    [ -(nu - w^a)(nu - w^b) : (nu - w^a)^2 (nu - w^b) : 1 ],
    a = (k-1)l,  b = (k+1)l,

where the exponents are read in {-1, 0, 1} and w^(-1) = wbar; the l = 0
column is [0:1:0], [0:0:1], [0:1-nu^3:1].  ``verify_level_structure``
machine-checks everything the construction claims: the sections lie on the
curve, are pairwise everywhere-distinct with unit-ideal certificates, are
inflection points of exact order three, satisfy the collinearity identity
for zero-sum triples, add according to the group law, and never vanish.
"""

from dataclasses import dataclass, field

from .bring import B_ONE, B_ZERO, BElem, NU, nu_minus
from .eisenstein import EIS_ONE, EisElem, OMEGA, OMEGA_BAR
from .errors import InflectionFailure, NotEverywhereDistinct, ZeroVector
from .weierstrass import (
    ProjPoint,
    WeierstrassCurve,
    add,
    collinear_det,
    distinctness_certificate,
    is_on_curve,
    negate,
    slope_at,
)


def canonical_curve():
    """C over B: a1 = 3 nu, a3 = nu^3 - 1, other coefficients zero."""
    return WeierstrassCurve(
        3 * NU, B_ZERO, NU ** 3 - 1, B_ZERO, B_ZERO
    )


def f3(x):
    """Balanced representative of x mod 3, in {-1, 0, 1}."""
    return (x + 1) % 3 - 1


def f3vec(k, l):
    return (f3(k), f3(l))


ALL_VECTORS = tuple((k, l) for k in (-1, 0, 1) for l in (-1, 0, 1))
NONZERO_VECTORS = tuple(v for v in ALL_VECTORS if v != (0, 0))


def omega_power(a):
    return {0: EIS_ONE, 1: OMEGA, -1: OMEGA_BAR}[f3(a)]


def torsion_point(k, l):
    """The section attached to (k, l), via the compact formula."""
    k, l = f3vec(k, l)
    if l == 0:
        if k == 0:
            return ProjPoint.zero_point(B_ONE)
        if k == 1:
            return ProjPoint(B_ZERO, B_ZERO, B_ONE, check=False)
        return ProjPoint(B_ZERO, 1 - NU ** 3, B_ONE, check=False)
    pa = nu_minus(omega_power((k - 1) * l))
    pb = nu_minus(omega_power((k + 1) * l))
    return ProjPoint(-(pa * pb), pa * pa * pb, B_ONE, check=False)


def torsion_point_table():
    """The nine sections as an explicit row-by-row table.

    Written out literally (rather than through the compact formula) so the
    two constructions can be compared as independent descriptions.
    """
    w, wb = OMEGA, OMEGA_BAR
    one = EIS_ONE

    def pt(alpha, beta):
        a, b = nu_minus(alpha), nu_minus(beta)
        return ProjPoint(-(a * b), a * a * b, B_ONE, check=False)

    return {
        (0, 0): ProjPoint.zero_point(B_ONE),
        (1, 0): ProjPoint(B_ZERO, B_ZERO, B_ONE, check=False),
        (-1, 0): ProjPoint(B_ZERO, 1 - NU ** 3, B_ONE, check=False),
        (0, 1): pt(wb, w),
        (1, 1): pt(one, wb),
        (-1, 1): pt(w, one),
        (0, -1): pt(w, wb),
        (1, -1): pt(one, w),
        (-1, -1): pt(wb, one),
    }


def torsion_slope(k, l):
    """The tangent slope at the section attached to (k, l) != 0.

    Compact form (w^(-l) - 1)(nu - w^((k-1)l)) for l != 0; the l = 0 values
    are 0 and -3 nu.
    """
    k, l = f3vec(k, l)
    if (k, l) == (0, 0):
        raise ZeroVector("the zero section has no slope entry")
    if l == 0:
        return B_ZERO if k == 1 else -3 * NU
    return BElem.const(omega_power(-l) - EIS_ONE) * nu_minus(
        omega_power((k - 1) * l)
    )


def inflection_coefficients(curve, point, slope):
    """Coefficients of t^0, t^1, t^2 in f(x0 + t, y0 + slope*t).

    Vanishing of all three says the line through the point with the given
    slope meets the curve to order three there.
    """
    x0, y0 = point.to_affine()
    a1, a2, a3, a4, a6 = curve.a_invariants()
    m = slope
    c0 = (
        y0 * y0
        + a1 * x0 * y0
        + a3 * y0
        - x0 ** 3
        - a2 * x0 * x0
        - a4 * x0
        - a6
    )
    c1 = (
        2 * y0 * m
        + a1 * (y0 + m * x0)
        + a3 * m
        - 3 * x0 * x0
        - 2 * a2 * x0
        - a4
    )
    c2 = m * m + a1 * m - 3 * x0 - a2
    return c0, c1, c2


def verify_inflection(v, curve=None, point=None, slope=None):
    """Check the order-three tangency at the section for v != 0.

    Returns the three vanishing coefficients; raises InflectionFailure
    naming the first offending coefficient otherwise.
    """
    if v == (0, 0):
        raise ZeroVector("no inflection data at the zero vector")
    if curve is None:
        curve = canonical_curve()
    if point is None:
        point = torsion_point(*v)
    if slope is None:
        slope = torsion_slope(*v)
    coeffs = inflection_coefficients(curve, point, slope)
    for i, c in enumerate(coeffs):
        if not c.is_zero():
            raise InflectionFailure(
                f"t^{i} coefficient nonzero at {v}", details={"power": i, "value": str(c)}
            )
    return {"vector": v, "coefficients": [str(c) for c in coeffs]}


@dataclass
class LevelStructureReport:
    passed: bool = True
    checks: list = field(default_factory=list)
    first_failure: str = ""

    def record(self, name, ok, detail=""):
        self.checks.append((name, bool(ok), detail))
        if not ok and self.passed:
            self.passed = False
            self.first_failure = name


def verify_level_structure(curve=None, table=None, slopes=None):
    """Run the full battery of checks on a level-3 structure.

    Defaults to the canonical structure over B; a specialised curve and
    point table (e.g. a special fibre) can be supplied instead.  Slopes are
    recomputed from the curve when not given.
    """
    if curve is None:
        curve = canonical_curve()
    if table is None:
        table = {v: torsion_point(*v) for v in ALL_VECTORS}
    report = LevelStructureReport()

    zero_pt = table[(0, 0)]
    report.record("zero_section_is_identity", zero_pt.is_zero_point())

    for v in ALL_VECTORS:
        report.record(f"on_curve{v}", is_on_curve(curve, table[v]))

    vectors = list(ALL_VECTORS)
    for i, a in enumerate(vectors):
        for b in vectors[i + 1:]:
            try:
                cert = distinctness_certificate(table[a], table[b])
                minors = table[a].minors_against(table[b])
                total = sum(
                    (s * m for s, m in zip(cert, minors)),
                    start=minors[0].zero(),
                )
                ok = total == minors[0].one()
            except NotEverywhereDistinct:
                ok = False
            report.record(f"distinct{a}{b}", ok)

    for v in NONZERO_VECTORS:
        slope = slopes[v] if slopes is not None else slope_at(curve, table[v])
        try:
            verify_inflection(v, curve, table[v], slope)
            report.record(f"inflection{v}", True)
        except InflectionFailure as exc:
            report.record(f"inflection{v}", False, str(exc))

    for i, a in enumerate(vectors):
        for j, b in enumerate(vectors):
            if j <= i:
                continue
            c = (f3(-a[0] - b[0]), f3(-a[1] - b[1]))
            if c == a or c == b:
                continue
            det = collinear_det(table[a], table[b], table[c])
            report.record(f"collinear{a}{b}{c}", det.is_zero())

    for a in ALL_VECTORS:
        for b in ALL_VECTORS:
            s = (f3(a[0] + b[0]), f3(a[1] + b[1]))
            total = add(curve, table[a], table[b])
            report.record(f"group_law{a}{b}", total == table[s])

    for v in NONZERO_VECTORS:
        try:
            distinctness_certificate(table[v], zero_pt)
            report.record(f"nowhere_zero{v}", True)
        except NotEverywhereDistinct:
            report.record(f"nowhere_zero{v}", False)

    return report


def negation_consistency():
    """phi(-v) = -phi(v) for all v; exact projective equality."""
    curve = canonical_curve()
    out = []
    for v in ALL_VECTORS:
        neg_v = (f3(-v[0]), f3(-v[1]))
        out.append(torsion_point(*neg_v) == negate(curve, torsion_point(*v)))
    return all(out)
