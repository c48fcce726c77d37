"""Truncated series, finite fields, and nilpotent quotient rings."""

import pytest

from level3ec.series import TruncSeries
from level3ec.finitefield import FiniteField
from level3ec.quotientring import (
    cuspidal_nu,
    cuspidal_omega,
    cuspidal_ring,
)
from level3ec.errors import NonUnitConstantTerm, NonzeroInnerConstant


F4 = FiniteField.quadratic(2)


def doubling_exponent_series(prec, base=3):
    """sum_k x^(base * 2^k) over F4, truncated."""
    one = F4.one()
    terms = {}
    e = base
    while e < prec:
        terms[e] = one
        e *= 2
    return TruncSeries.from_terms(terms, prec, F4.zero())


class TestSeries:
    def test_mul_identity(self):
        x = TruncSeries.identity(10, F4.one())
        one = TruncSeries.from_terms({0: F4.one()}, 10, F4.zero())
        assert x * one == x

    def test_invert_one_plus_z(self):
        # x / (1 + z) should start x + x^4 for z = x^3 + x^6 + ...
        prec = 12
        z = doubling_exponent_series(prec)
        onepz = TruncSeries.from_terms({0: F4.one()}, prec, F4.zero()) + z
        inv = onepz.invert()
        assert (onepz * inv).support() == [0]
        x = TruncSeries.identity(prec, F4.one())
        neg = x * inv
        assert neg.coefficient(1) == F4.one()
        assert neg.coefficient(2).is_zero()
        assert neg.coefficient(3).is_zero()
        assert neg.coefficient(4) == F4.one()

    def test_invert_requires_unit(self):
        z = doubling_exponent_series(8)
        with pytest.raises(NonUnitConstantTerm):
            z.invert()

    def test_compose_doubling_exponents(self):
        prec = 50
        z = doubling_exponent_series(prec)
        x2 = TruncSeries.from_terms({2: F4.one()}, prec, F4.zero())
        composed = z.compose(x2)
        assert composed == doubling_exponent_series(prec, base=6)

    def test_compose_requires_zero_constant(self):
        z = doubling_exponent_series(8)
        one = TruncSeries.from_terms({0: F4.one()}, 8, F4.zero())
        with pytest.raises(NonzeroInnerConstant):
            z.compose(one)

    def test_min_precision(self):
        a = TruncSeries.identity(10, F4.one())
        b = TruncSeries.identity(6, F4.one())
        assert (a * b).prec == 6
        assert (a + b).prec == 6


class TestFiniteField:
    def test_f4_structure(self):
        assert F4.q == 4
        roots = F4.primitive_cube_roots()
        assert len(roots) == 2
        w = F4.omega()
        assert w * w == w + 1  # w^2 = w + 1 over F2 means 1 + w + w^2 = 0
        assert (F4.one() + w + w * w).is_zero()

    def test_prime_field_inverse(self):
        F7 = FiniteField.prime(7)
        for a in F7.elements():
            if not a.is_zero():
                assert a * a.inverse() == F7.one()

    def test_quadratic_choice(self):
        # 7 = 1 mod 3: cube roots already present, modulus is t^2 - n
        F49 = FiniteField.quadratic(7)
        assert len(F49.cube_roots_of_unity()) == 3
        F25 = FiniteField.quadratic(5)
        assert F25.modulus == (1, 1, 1)
        assert F25.omega() is not None

    def test_cubic_f8(self):
        F8 = FiniteField.cubic(2)
        assert F8.q == 8
        # every nonzero cube is ... x^3=1 only for x=1 in F8
        assert len(F8.cube_roots_of_unity()) == 1
        for a in F8.elements():
            if not a.is_zero():
                assert a * a.inverse() == F8.one()

    def test_element_count(self):
        assert len(list(F4.elements())) == 4
        assert len(list(FiniteField.cubic(2).elements())) == 8


class TestCuspidalRing:
    def test_presentation(self):
        R = cuspidal_ring()
        w = cuspidal_omega(R)
        nu = cuspidal_nu(R)
        # the defining relation of B holds: 1 + w + w^2 = (w-1)^2 mod 3 = 0
        assert (R.one() + w + w * w).is_zero()
        assert (nu ** 3 - R.one()).is_zero()
        # 3 = 0 here
        assert R.from_int(3).is_zero()

    def test_nilpotence(self):
        R = cuspidal_ring()
        eps, dlt = R.gen(0), R.gen(1)
        assert (eps * eps).is_zero()
        assert (dlt ** 3).is_zero()
        assert not (dlt * dlt).is_zero()
        x = dlt * dlt
        assert x.is_nilpotent()
        assert x.nilpotency_index() == 2
        assert (eps + dlt).is_nilpotent()
        assert not (1 + eps).is_nilpotent()

    def test_inverse(self):
        R = cuspidal_ring()
        u = R.from_int(2) + R.gen(0) + R.gen(1) * R.gen(1)
        assert u.is_unit()
        assert u * u.inverse() == R.one()
