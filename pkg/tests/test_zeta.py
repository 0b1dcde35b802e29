import math
import random
from fractions import Fraction

import pytest

from fwezeta.algebra import HomogeneousPoly, UniPoly
from fwezeta.fwe import W8, W12, build_extremal
from fwezeta.zeta import (EnumeratorContext, ZetaPolynomial, ZetaSolveSystem,
                          _series_term_polys, compute_zeta,
                          functional_equation_sign, genus,
                          macwilliams_transform, zeta_oracle)

F = Fraction

# expanded form of the degree-12 fixture (2T^2-1)(2T^2+1)(2T^2+2T+1)/15
P12 = UniPoly([F(-1, 15), F(-2, 15), F(-2, 15), 0, F(4, 15), F(8, 15), F(8, 15)])


def random_context(rng, max_degree=16):
    n = rng.randint(2, max_degree)
    d = rng.randint(1, n)
    coeffs = [F(0)] * (n + 1)
    coeffs[0] = F(1)
    coeffs[d] = F(rng.randint(1, 9), rng.randint(1, 9)) * rng.choice([1, -1])
    for i in range(d + 1, n + 1):
        if rng.random() < 0.5:
            coeffs[i] = F(rng.randint(-9, 9), rng.randint(1, 9))
    q = rng.choice([2, 3, 4])
    return EnumeratorContext(HomogeneousPoly(n, coeffs), q)


class TestContext:
    def test_infers_d(self):
        ctx = EnumeratorContext(W12, 2)
        assert (ctx.n, ctx.d, ctx.q) == (12, 4, 2)

    def test_rejects_x_power_alone(self):
        with pytest.raises(ValueError):
            EnumeratorContext(HomogeneousPoly(3, [1, 0, 0, 0]), 2)

    def test_rejects_non_monic(self):
        with pytest.raises(ValueError):
            EnumeratorContext(HomogeneousPoly(2, [2, 0, 1]), 2)

    def test_rejects_small_q(self):
        with pytest.raises(ValueError):
            EnumeratorContext(W12, 1)


class TestComputeZeta:
    @pytest.mark.parametrize("n,q", [(4, 3), (7, 2), (10, 5)])
    def test_d_equals_n_gives_one(self, n, q):
        W = HomogeneousPoly.from_sparse(n, {0: 1, n: q - 1})
        Z = compute_zeta(EnumeratorContext(W, q))
        assert Z.P == UniPoly([1])

    def test_w12_fixture(self):
        Z = compute_zeta(EnumeratorContext(W12, 2))
        assert Z.P == P12

    def test_w8_fixture(self):
        Z = compute_zeta(EnumeratorContext(W8, 2))
        assert Z.P == UniPoly([F(1, 5), F(2, 5), F(2, 5)])

    def test_degree_bound(self):
        rng = random.Random(41)
        for _ in range(20):
            ctx = random_context(rng)
            Z = compute_zeta(ctx)
            assert Z.P.degree <= ctx.n - ctx.d

    def test_defining_property_replay(self):
        rng = random.Random(43)
        contexts = [EnumeratorContext(W12, 2)] + [random_context(rng, 10) for _ in range(5)]
        for ctx in contexts:
            Z = compute_zeta(ctx)
            nd = ctx.n - ctx.d
            terms = _series_term_polys(ctx)
            acc = HomogeneousPoly.zero(ctx.n)
            for k in range(nd + 1):
                acc = acc + terms[nd - k] * Z.P.coefficient(k)
            target = (ctx.W - HomogeneousPoly.from_sparse(ctx.n, {0: 1})) \
                * F(1, ctx.q - 1)
            assert acc == target


class TestSolveSystem:
    def test_series_values(self):
        sys_ = ZetaSolveSystem.build(EnumeratorContext(W12, 2))
        assert list(sys_.series) == [(2 ** (k + 1) - 1) for k in range(9)]
        assert all(c > 0 for c in sys_.series)

    def test_triangular_diagonal_is_binomial(self):
        ctx = EnumeratorContext(W12, 3)
        sys_ = ZetaSolveSystem.build(ctx)
        assert list(sys_.diagonal()) == [math.comb(12, m) for m in range(9)]


class TestOracle:
    def test_agrees_on_w12(self):
        ctx = EnumeratorContext(W12, 2)
        assert zeta_oracle(ctx).P == compute_zeta(ctx).P

    def test_trivial_d_equals_n(self):
        # at d = n the answer is the constant A_n/(q-1), so 1 exactly when
        # the y^n coefficient is q - 1
        W = HomogeneousPoly(4, [1, 0, 0, 0, 3])
        assert zeta_oracle(EnumeratorContext(W, 4)).P == UniPoly([1])
        ctx3 = EnumeratorContext(W, 3)
        assert zeta_oracle(ctx3).P == compute_zeta(ctx3).P == UniPoly([F(3, 2)])

    def test_agrees_on_randomized_enumerators(self):
        rng = random.Random(47)
        for _ in range(50):
            ctx = random_context(rng)
            assert zeta_oracle(ctx).P == compute_zeta(ctx).P


class TestGenus:
    def test_values(self):
        assert genus(12, 4) == 3
        assert genus(8, 4) == 1
        assert genus(36, 8) == 11

    def test_odd_degree_rejected(self):
        with pytest.raises(ValueError):
            genus(7, 2)

    def test_extremal_36_zeta_degree_is_2g(self):
        comb = build_extremal(36)
        Z = compute_zeta(EnumeratorContext(comb.expanded, 2))
        assert Z.P.degree == 22 == 2 * genus(36, 8)


class TestMacWilliams:
    def test_w8_fixed(self):
        assert macwilliams_transform(W8, 2) == W8

    def test_w12_negated(self):
        assert macwilliams_transform(W12, 2) == -W12

    def test_small_identity(self):
        p = HomogeneousPoly(2, [1, 0, 1])
        assert macwilliams_transform(p, 2) == p

    def test_involution(self):
        rng = random.Random(53)
        for _ in range(15):
            n = rng.randrange(2, 13, 2)
            W = HomogeneousPoly(n, [F(rng.randint(-9, 9), rng.randint(1, 5))
                                    for _ in range(n + 1)])
            q = rng.choice([2, 3, 4])
            assert macwilliams_transform(macwilliams_transform(W, q), q) == W

    def test_odd_degree_rejected(self):
        with pytest.raises(ValueError):
            macwilliams_transform(HomogeneousPoly(3, [1, 0, 0, 1]), 2)


class TestFunctionalEquationSign:
    def test_w12_is_minus_one(self):
        Z = compute_zeta(EnumeratorContext(W12, 2))
        assert functional_equation_sign(Z) == -1

    def test_w8_is_plus_one(self):
        Z = compute_zeta(EnumeratorContext(W8, 2))
        assert functional_equation_sign(Z) == 1

    def test_asymmetric_is_none(self):
        ctx = EnumeratorContext(HomogeneousPoly(4, [1, 0, 1, 0, 0]), 2)
        assert functional_equation_sign(ZetaPolynomial(UniPoly([1, 1]), ctx)) is None
        assert functional_equation_sign(ZetaPolynomial(UniPoly([1, 1, 1]), ctx)) is None

    def test_fwe_dichotomy(self):
        for s, expected in ((1, 1), (2, 1), (3, 1)):
            Z = compute_zeta(EnumeratorContext(W8 ** s, 2))
            assert functional_equation_sign(Z) == expected
        for s in (1, 2):
            Z = compute_zeta(EnumeratorContext(W8 ** s * W12, 2))
            assert functional_equation_sign(Z) == -1
            assert Z.P.degree == 2 * Z.g
