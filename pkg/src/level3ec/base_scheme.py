"""The base S, its boundary set, valuations, and automorphisms.

S is the product of the scheme of primitive cube roots of unity with the
nu-line punctured at the cube roots of unity; its coordinate ring is B.
The four missing points Omega = {1, w, wbar, infinity} each carry a
discrete valuation on B (trivial on A), and every ring automorphism of B
permutes these valuations.  The induced map

    pi : Aut(S) -> Perm(Omega)

is an isomorphism; this module constructs the three generators, computes
pi from valuation data, and enumerates the full 24-element group by
closure.

Composition convention: ``compose(b1, b0)`` is the automorphism "apply b0
to points first", whose ring map is b0* after b1*.
"""

import enum
from functools import lru_cache

from .bring import (
    B_OMEGA,
    BElem,
    NU,
    factor_nu_linear,
    invert,
    nu_minus,
)
from .eisenstein import EIS_ONE, EisElem, OMEGA, OMEGA_BAR
from .errors import (
    ClosureExceeded,
    NoConsistentPermutation,
    NonUnitDenominator,
    ZeroInput,
)


class OmegaPoint(enum.Enum):
    ONE = "1"
    OMEGA = "w"
    OMEGA_BAR = "wbar"
    INFINITY = "inf"


_FINITE = (OmegaPoint.ONE, OmegaPoint.OMEGA, OmegaPoint.OMEGA_BAR)
_ORDER = _FINITE + (OmegaPoint.INFINITY,)
_ROOT_OF = {
    OmegaPoint.ONE: EIS_ONE,
    OmegaPoint.OMEGA: OMEGA,
    OmegaPoint.OMEGA_BAR: OMEGA_BAR,
}


def valuation(f, alpha):
    """v_alpha(f): the exponent of (nu - alpha) in f, or minus the total
    degree at infinity."""
    if f.is_zero():
        raise ZeroInput("valuation of zero")
    fac = factor_nu_linear(f)
    if alpha == OmegaPoint.INFINITY:
        return -f.nu_degree()
    return {
        OmegaPoint.ONE: fac.n1,
        OmegaPoint.OMEGA: fac.n_omega,
        OmegaPoint.OMEGA_BAR: fac.n_omega_bar,
    }[alpha]


class OmegaPerm:
    """A permutation of the four boundary points."""

    __slots__ = ("mapping",)

    def __init__(self, mapping):
        self.mapping = dict(mapping)
        if set(self.mapping) != set(_ORDER) or set(
            self.mapping.values()
        ) != set(_ORDER):
            raise ValueError("not a bijection of Omega")

    @classmethod
    def identity(cls):
        return cls({a: a for a in _ORDER})

    @classmethod
    def from_cycles(cls, *cycles):
        mapping = {a: a for a in _ORDER}
        for cycle in cycles:
            for i, a in enumerate(cycle):
                mapping[a] = cycle[(i + 1) % len(cycle)]
        return cls(mapping)

    def __call__(self, a):
        return self.mapping[a]

    def compose(self, other):
        """self after other."""
        return OmegaPerm({a: self.mapping[other.mapping[a]] for a in _ORDER})

    def __eq__(self, other):
        if not isinstance(other, OmegaPerm):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self):
        return hash(tuple(self.mapping[a] for a in _ORDER))

    def __repr__(self):
        seen, cycles = set(), []
        for a in _ORDER:
            if a in seen or self.mapping[a] == a:
                continue
            cycle, x = [], a
            while x not in seen:
                seen.add(x)
                cycle.append(x.value)
                x = self.mapping[x]
            cycles.append("(" + " ".join(cycle) + ")")
        return "".join(cycles) if cycles else "id"

    @staticmethod
    def all_permutations():
        import itertools

        out = []
        for perm in itertools.permutations(_ORDER):
            out.append(OmegaPerm(dict(zip(_ORDER, perm))))
        return out


class BaseAut:
    """An automorphism of S, stored by the images of the two coordinates.

    ``conj`` records whether w maps to wbar; ``nu_image`` is the image of
    nu, an element of B of Moebius shape whose denominator data was a unit
    at construction time.  Equality of canonical images is equality of
    automorphisms, which is what makes group closure terminate.
    """

    __slots__ = ("conj", "nu_image", "_den_inv_pows")

    def __init__(self, conj, nu_image):
        self.conj = bool(conj)
        self.nu_image = nu_image
        self._den_inv_pows = None

    @classmethod
    def identity(cls):
        return cls(False, NU)

    @classmethod
    def from_mobius(cls, conj, p, q, r, s):
        """nu -> (p nu + q)/(r nu + s) with EisElem entries.

        The denominator and the Moebius determinant must be units wherever
        they matter; together with the invertibility of the image of
        nu^3 - 1 this is exactly the condition for the substitution to be a
        ring automorphism of B.
        """
        p, q, r, s = (
            EisElem(x) if isinstance(x, int) else x for x in (p, q, r, s)
        )
        det = p * s - q * r
        if not det.is_unit():
            raise NonUnitDenominator(f"Moebius determinant {det} not a unit of A")
        denom = BElem.const(r) * NU + s
        if not denom.is_unit():
            raise NonUnitDenominator(f"Moebius denominator {denom} not a unit of B")
        image = (BElem.const(p) * NU + q) * invert(denom)
        aut = cls(conj, image)
        if not aut._image_of_d().is_unit():
            raise NonUnitDenominator("image of nu^3 - 1 is not a unit of B")
        return aut

    def _image_of_d(self):
        return self.nu_image ** 3 - 1

    @property
    def omega_image(self):
        return OMEGA_BAR if self.conj else OMEGA

    def apply(self, f):
        """The ring map B -> B determined by the coordinate images."""
        coeffs = [c.conj() for c in f.coeffs] if self.conj else list(f.coeffs)
        acc = BElem(())
        for c in reversed(coeffs):
            acc = acc * self.nu_image + c
        if f.den:
            if self._den_inv_pows is None:
                self._den_inv_pows = {1: invert(self._image_of_d())}
            pows = self._den_inv_pows
            if f.den not in pows:
                base = pows[1]
                acc_pow = pows[max(pows)]
                for k in range(max(pows) + 1, f.den + 1):
                    acc_pow = acc_pow * base
                    pows[k] = acc_pow
            acc = acc * pows[f.den]
        return acc

    def compose(self, other):
        """self after other (on points)."""
        return BaseAut(
            self.conj ^ other.conj, other.apply(self.nu_image)
        )

    def inverse(self):
        """Finite order: iterate until the identity reappears."""
        ident = BaseAut.identity()
        power = self
        prev = ident
        for _ in range(30):
            if power == ident:
                return prev
            prev = power
            power = power.compose(self)
        raise ClosureExceeded("automorphism order exceeded bound 30")

    def __eq__(self, other):
        if not isinstance(other, BaseAut):
            return NotImplemented
        return self.conj == other.conj and self.nu_image == other.nu_image

    def __hash__(self):
        return hash((self.conj, self.nu_image))

    def __repr__(self):
        w = "wbar" if self.conj else "w"
        return f"BaseAut(w->{w}, nu->{self.nu_image})"


def pi_perm(beta):
    """The permutation of Omega induced by beta, from valuation data.

    v_alpha(beta*(f)) = v_{pi(alpha)}(f); probing with f = nu - alpha'
    makes each row of the valuation table read off one value of pi.
    """
    images = {a: beta.apply(nu_minus(_ROOT_OF[a])) for a in _FINITE}
    mapping = {}
    for a in _ORDER:
        row = [valuation(images[ap], a) for ap in _FINITE]
        if row == [-1, -1, -1]:
            mapping[a] = OmegaPoint.INFINITY
        elif row.count(1) == 1 and row.count(0) == 2:
            mapping[a] = _FINITE[row.index(1)]
        else:
            raise NoConsistentPermutation(
                f"valuation row {row} at {a} fits no permutation"
            )
    try:
        return OmegaPerm(mapping)
    except ValueError as exc:
        raise NoConsistentPermutation(str(exc)) from exc


# -- generators and enumeration -------------------------------------------------


def gen_omega_conj():
    """w -> wbar, nu -> nu; permutation (w wbar)."""
    return BaseAut(True, NU)


def gen_nu_scale():
    """w -> w, nu -> w*nu; permutation (1 w wbar)."""
    return BaseAut(False, B_OMEGA * NU)


def gen_nu_mobius():
    """w -> w, nu -> (nu+2)/(nu-1); permutation (1 inf)(w wbar)."""
    return BaseAut.from_mobius(False, 1, 2, 1, -1)


def generators():
    return gen_omega_conj(), gen_nu_scale(), gen_nu_mobius()


@lru_cache(maxsize=None)
def enumerate_aut_s():
    """Closure of the three generators under composition: all 24 elements."""
    gens = generators()
    seen = {BaseAut.identity()}
    frontier = list(seen)
    while frontier:
        new = []
        for g in gens:
            for h in frontier:
                c = g.compose(h)
                if c not in seen:
                    seen.add(c)
                    new.append(c)
                    if len(seen) > 30:
                        raise ClosureExceeded(
                            "Aut(S) closure exceeded 30 elements"
                        )
        frontier = new
    return tuple(sorted(seen, key=lambda b: (b.conj, hash(b))))
