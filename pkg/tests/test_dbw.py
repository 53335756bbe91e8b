"""De Branges / Weinstein systems: closed forms, series, identities, scans."""

from fractions import Fraction

import pytest

from debranges import lowner
from debranges.exact import Poly
from debranges.dbw import (
    debranges_generating_series,
    debranges_poly,
    debranges_slope_at_zero,
    debranges_system_residual,
    explicit_generating_check,
    jacobi_decomposition_check,
    milin_functional,
    positivity_scan,
    weinstein_coeff,
    weinstein_poly,
    weinstein_series,
)
from debranges.exact import binomial
from debranges.series import ZSeries, koebe, koebe_chain, time_derivative


class TestWeinsteinCoefficients:
    def test_lowest_index_value(self):
        for n in range(1, 10):
            for k in range(1, n + 1):
                assert weinstein_coeff(n, k, k) == binomial(n + k + 1, n - k)

    def test_top_corner_is_one(self):
        for n in range(1, 12):
            assert weinstein_coeff(n, n, n) == 1

    def test_series_derived_value(self):
        assert weinstein_coeff(3, 1, 2) == -24

    def test_sign_pattern(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                for j in range(k, n + 1):
                    value = weinstein_coeff(n, k, j)
                    assert value != 0
                    assert (value > 0) == ((k + j) % 2 == 0)

    def test_triangle_validation(self):
        with pytest.raises(ValueError):
            weinstein_coeff(3, 2, 1)


class TestWeinsteinPoly:
    def test_frozen_small_cases(self):
        assert weinstein_poly(2, 1) == Poly([0, 4, -4], "y")
        assert weinstein_poly(3, 1) == Poly([0, 10, -24, 15], "y")

    def test_top_is_pure_power(self):
        for n in range(1, 12):
            assert weinstein_poly(n, n) == Poly.monomial(1, n, "y")

    def test_value_at_time_zero_parity(self):
        for n in range(1, 15):
            for k in range(1, n + 1):
                expected = 1 if (n - k) % 2 == 0 else 0
                assert weinstein_poly(n, k)(1) == expected


class TestWeinsteinSeries:
    def test_taylor_coefficient_example(self):
        assert weinstein_series(1, 5).coefficient(3) == Poly([0, 4, -4], "y")

    def test_lowest_series_coefficient(self):
        # z^(k+1) coefficient starts with y^k
        for k in range(1, 5):
            poly = weinstein_series(k, 7).coefficient(k + 1)
            assert poly.coeff(k) == 1
            assert all(poly.coeff(i) == 0 for i in range(k))

    def test_matches_closed_form(self):
        for k in range(1, 7):
            zs = weinstein_series(k, 12)
            for n in range(k, 12):
                assert zs.coefficient(n + 1) == weinstein_poly(n, k)

    def test_shift_recursion(self):
        # W_{k+1} = w W_k
        order = 10
        w = koebe_chain(order)
        for k in range(1, 4):
            assert weinstein_series(k + 1, order) == (
                w * weinstein_series(k, order)
            )

    def test_first_series_is_minus_k_wdot(self):
        # W_1 = -K(z) dw/dt
        order = 10
        w = koebe_chain(order)
        assert weinstein_series(1, order) == -(koebe(order) * w.tdot())

    def test_coupled_series_relation(self):
        # dW_k/dt + dW_{k+1}/dt = (k+1) W_{k+1} - k W_k
        order = 9
        for k in range(1, 4):
            w_k = weinstein_series(k, order)
            w_next = weinstein_series(k + 1, order)
            lhs = w_k.tdot() + w_next.tdot()
            rhs = (k + 1) * w_next - k * w_k
            assert lhs == rhs

    def test_order_validation(self):
        with pytest.raises(ValueError):
            weinstein_series(3, 3)


class TestDeBrangesPoly:
    def test_frozen_small_case(self):
        assert debranges_poly(2, 1) == Poly([0, 4, -2], "y")

    def test_vanishes_above_triangle(self):
        for n in range(1, 8):
            assert debranges_poly(n, n + 1).is_zero()

    def test_shape_of_triangle(self):
        # degree at most n, no powers of y below y^k
        for n in range(1, 12):
            for k in range(1, n + 1):
                tau = debranges_poly(n, k)
                assert tau.degree <= n
                assert all(tau.coeff(i) == 0 for i in range(k))
                assert tau.coeff(k) != 0

    def test_initial_values(self):
        for n in range(1, 15):
            for k in range(1, n + 2):
                assert debranges_poly(n, k)(1) == n + 1 - k

    def test_generating_series_oracle(self):
        # tau(2, 1) is the z^3 coefficient of K(z) w(z, t)
        product = koebe(6) * koebe_chain(6)
        assert product.coefficient(3) == debranges_poly(2, 1)

    def test_slope_is_weinstein(self):
        for n in range(1, 15):
            for k in range(1, n + 1):
                assert time_derivative(debranges_poly(n, k)) == -k * weinstein_poly(n, k)

    def test_system_residual_zero(self):
        for n in range(1, 12):
            for k in range(1, n + 1):
                assert debranges_system_residual(n, k).is_zero()

    def test_system_detector(self):
        # corrupting tau(2,1) must break the coupled equation (a y^2 bump;
        # a plain y bump would solve the homogeneous part and stay invisible)
        tau_1 = debranges_poly(2, 1) + Poly([0, 0, 1], "y")
        tau_2 = debranges_poly(2, 2)
        residual = (
            tau_2
            - tau_1
            - time_derivative(tau_1)
            - time_derivative(tau_2) * Fraction(1, 2)
        )
        assert not residual.is_zero()


class TestSlopeAtZero:
    def test_parity_rule(self):
        assert debranges_slope_at_zero(2, 1) == 0
        assert debranges_slope_at_zero(3, 1) == -1
        assert debranges_slope_at_zero(5, 5) == -5
        for n in range(1, 15):
            for k in range(1, n + 1):
                expected = -k if (n - k) % 2 == 0 else 0
                assert debranges_slope_at_zero(n, k) == expected

    def test_top_slope_polynomial(self):
        # d tau(n,n)/dt = -n y^n identically
        for n in range(1, 10):
            slope = time_derivative(debranges_poly(n, n))
            assert slope == Poly.monomial(-n, n, "y")


class TestGeneratingSeries:
    def test_coefficients_are_debranges(self):
        for k in range(1, 6):
            gen = debranges_generating_series(k, 12)
            for n in range(k, 12):
                assert gen.coefficient(n + 1) == debranges_poly(n, k)

    def test_leading_zeros(self):
        gen = debranges_generating_series(3, 8)
        for m in range(4):
            assert gen.coefficient(m).is_zero()

    def test_collapse_at_time_zero(self):
        # at y = 1 the series is z^(k+1)/(1-z)^2, coefficients n+1-k
        k = 2
        values = debranges_generating_series(k, 10).eval_inner(1)
        for n in range(k, 10):
            assert values[n + 1] == n + 1 - k

    def test_second_coefficient_example(self):
        assert debranges_generating_series(2, 5).coefficient(3) == Poly.monomial(
            1, 2, "y"
        )


class TestExplicitGeneratingExpansion:
    def test_small_orders(self):
        assert explicit_generating_check(1, 6, 3)
        assert explicit_generating_check(2, 8, 4)

    def test_coefficient_identity_instance(self):
        # the expansion rewrites the y^j weight (k/j) C(2j, j-k) as
        # (2k/(j+k)) C(2j-1, j-k); spot check at (j, k) = (3, 1)
        j, k = 3, 1
        assert Fraction(k, j) * binomial(2 * j, j - k) == Fraction(
            2 * k, j + k
        ) * binomial(2 * j - 1, j - k)

    def test_j_max_validation(self):
        with pytest.raises(ValueError):
            explicit_generating_check(1, 4, 5)


class TestJacobiDecomposition:
    def test_small_orders(self):
        assert jacobi_decomposition_check(1, 5)
        assert jacobi_decomposition_check(2, 6)

    def test_wrong_parameter_detected(self):
        # replacing the Jacobi parameter 2k by 2k+1 must break the identity
        from debranges import orthopoly

        k, order = 1, 5
        inner = order - (k + 1)
        jac = Poly.zero("y")
        geg = Poly.zero("y")
        jac_coeffs, geg_coeffs = [], []
        for n in range(inner + 1):
            jac = jac + orthopoly.to_y(orthopoly.jacobi_poly(n, 2 * k + 1))
            geg = geg + orthopoly.to_y(orthopoly.gegenbauer_minus_half(n))
            jac_coeffs.append(jac)
            geg_coeffs.append(geg)
        rhs = (ZSeries(jac_coeffs) * ZSeries(geg_coeffs)) * Poly.monomial(1, k, "y")
        assert rhs.shift_up(k + 1) != debranges_generating_series(k, order)


class TestBridgeToChainCoefficients:
    def test_weinstein_from_chain_derivatives(self):
        # L(n, 1) = -sum_{l=1..n} (n+1-l) dB_l/dt
        for n in range(1, 31):
            total = Poly.zero("y")
            for l in range(1, n + 1):
                total = total + (n + 1 - l) * time_derivative(lowner.chain_poly(l))
            assert -total == weinstein_poly(n, 1)


class TestMilinFunctional:
    def test_koebe_logarithmic_coefficients(self):
        for n in (1, 2, 5, 10, 25):
            d = [Fraction(2, k) for k in range(1, n + 1)]
            assert milin_functional(d, n) == 0

    def test_half_plane_map(self):
        d = [Fraction(1, 1), Fraction(1, 2)]
        assert milin_functional(d, 2) == Fraction(-15, 2)

    def test_zero_coefficients(self):
        assert milin_functional([0, 0, 0], 3) == Fraction(-52, 3)

    def test_length_validation(self):
        with pytest.raises(ValueError):
            milin_functional([1], 2)


class TestPositivityScan:
    def test_no_violations_small(self):
        grid = [Fraction(i, 10) for i in range(1, 10)]
        assert positivity_scan(10, grid) == []

    def test_sample_values(self):
        assert weinstein_poly(3, 1)(Fraction(1, 2)) == Fraction(7, 8)
        assert debranges_poly(2, 2)(Fraction(1, 2)) == Fraction(1, 4)

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            positivity_scan(3, [Fraction(0)])
        with pytest.raises(ValueError):
            positivity_scan(3, [Fraction(1)])
