"""Base automorphisms, valuations, and the permutation isomorphism."""

import pytest

from level3ec.base_scheme import (
    BaseAut,
    OmegaPerm,
    OmegaPoint,
    enumerate_aut_s,
    gen_nu_mobius,
    gen_nu_scale,
    gen_omega_conj,
    pi_perm,
    valuation,
)
from level3ec.bring import B_OMEGA, NU, invert, nu_minus
from level3ec.eisenstein import OMEGA, OMEGA_BAR
from level3ec.errors import NonUnitDenominator, ZeroInput

from conftest import rand_belem_nonzero

ONE, W, WB, INF = (
    OmegaPoint.ONE,
    OmegaPoint.OMEGA,
    OmegaPoint.OMEGA_BAR,
    OmegaPoint.INFINITY,
)
D = NU ** 3 - 1


class TestValuation:
    def test_pinned_values(self):
        assert valuation(nu_minus(1), ONE) == 1
        assert valuation(D, INF) == -3
        # 3(nu-w)^2/(nu^3-1): exponents (0,2,0) - (1,1,1)
        f = 3 * nu_minus(OMEGA) ** 2 * invert(D)
        assert valuation(f, W) == 1
        assert valuation(f, ONE) == -1
        assert valuation(f, WB) == -1
        assert valuation(f, INF) == 1

    def test_zero_raises(self):
        with pytest.raises(ZeroInput):
            valuation(NU - NU, ONE)

    def test_additive_on_products(self, rng):
        for _ in range(40):
            f = rand_belem_nonzero(rng, deg=3, den=1)
            g = rand_belem_nonzero(rng, deg=3, den=1)
            for a in (ONE, W, WB, INF):
                assert valuation(f * g, a) == valuation(f, a) + valuation(g, a)


class TestApply:
    def test_scale_generator_on_nu_minus_omega(self):
        b1 = gen_nu_scale()
        # w*nu - w = w*(nu - 1)
        assert b1.apply(nu_minus(OMEGA)) == B_OMEGA * nu_minus(1)

    def test_identity(self, rng):
        ident = BaseAut.identity()
        for _ in range(20):
            f = rand_belem_nonzero(rng)
            assert ident.apply(f) == f

    def test_mobius_involution(self):
        b2 = gen_nu_mobius()
        assert b2.apply(b2.apply(NU)) == NU
        assert b2.compose(b2) == BaseAut.identity()

    def test_multiplicative(self, rng):
        for beta in (gen_omega_conj(), gen_nu_scale(), gen_nu_mobius()):
            for _ in range(25):
                f = rand_belem_nonzero(rng, deg=3, den=1)
                g = rand_belem_nonzero(rng, deg=3, den=1)
                assert beta.apply(f * g) == beta.apply(f) * beta.apply(g)
                assert beta.apply(f + g) == beta.apply(f) + beta.apply(g)

    def test_non_unit_mobius_rejected(self):
        with pytest.raises(NonUnitDenominator):
            BaseAut.from_mobius(False, 1, 0, 1, 1)  # denominator nu + 1

    def test_sends_units_to_units(self, rng):
        for beta in (gen_nu_scale(), gen_nu_mobius()):
            count = 0
            while count < 20:
                f = rand_belem_nonzero(rng, deg=2, den=1)
                if f.is_unit():
                    assert beta.apply(f).is_unit()
                count += 1


class TestPiPerm:
    def test_generator_permutations(self):
        assert pi_perm(gen_omega_conj()) == OmegaPerm.from_cycles([W, WB])
        assert pi_perm(gen_nu_scale()) == OmegaPerm.from_cycles([ONE, W, WB])
        assert pi_perm(gen_nu_mobius()) == OmegaPerm.from_cycles(
            [ONE, INF], [W, WB]
        )

    def test_identity(self):
        assert pi_perm(BaseAut.identity()) == OmegaPerm.identity()

    def test_composition_order_regression(self):
        # the fixed convention: compose(b,b') acts with b' first, and
        # pi is a homomorphism for that order
        b0, b1 = gen_omega_conj(), gen_nu_scale()
        assert pi_perm(b0.compose(b1)) == pi_perm(b0).compose(pi_perm(b1))
        assert pi_perm(b1.compose(b0)) == pi_perm(b1).compose(pi_perm(b0))


class TestEnumeration:
    def test_exactly_24(self):
        assert len(enumerate_aut_s()) == 24

    def test_involution(self):
        b0 = gen_omega_conj()
        assert b0.compose(b0) == BaseAut.identity()

    def test_pi_bijective_onto_perm_omega(self):
        perms = {pi_perm(b) for b in enumerate_aut_s()}
        assert len(perms) == 24
        assert perms == set(OmegaPerm.all_permutations())

    def test_pi_homomorphism_all_pairs(self):
        auts = enumerate_aut_s()
        table = {b: pi_perm(b) for b in auts}
        for b in auts:
            for c in auts:
                assert table[b].compose(table[c]) == pi_perm(b.compose(c))

    def test_inverse(self):
        for b in enumerate_aut_s()[:8]:
            assert b.compose(b.inverse()) == BaseAut.identity()
