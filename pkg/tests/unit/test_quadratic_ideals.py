"""
Unit тесты арифметики квадратичных порядков и дробных идеалов
"""
from fractions import Fraction

import pytest

from src.domain.entities.ring import QuadraticElement
from src.domain.exceptions import InvalidElementError, RingSpecError
from src.domain.services import ideals
from src.domain.services import quadratic as q
from tests.fixtures.factories import fake, random_ideal


class TestQuadraticArithmetic:
    """Тесты элементов x + yω"""

    @pytest.mark.parametrize("discriminant,expected", [
        (-3, True),
        (-4, True),
        (-20, True),
        (-23, True),
        (-12, False),
        (-16, False),
        (-27, False),
    ])
    def test_fundamental_discriminants(self, discriminant, expected):
        assert q.is_fundamental_discriminant(discriminant) is expected

    @pytest.mark.parametrize("discriminant", [5, 0, -12])
    def test_validate_discriminant(self, discriminant):
        with pytest.raises(RingSpecError):
            q.validate_discriminant(discriminant)

    def test_omega_polynomial(self):
        """ω² − tω + n = 0"""
        assert q.omega_polynomial(-20) == (0, 5)
        assert q.omega_polynomial(-23) == (1, 6)
        assert q.omega_polynomial(-3) == (1, 1)

    def test_norm_trace_conjugate(self):
        omega = QuadraticElement.of(0, 1)
        assert q.q_norm(-23, omega) == 6
        assert q.q_trace(-23, omega) == 1
        assert q.q_conj(-23, omega) == QuadraticElement.of(1, -1)
        assert q.q_mul(-23, omega, q.q_conj(-23, omega)) == QuadraticElement.of(6)

    def test_inverse(self):
        x = QuadraticElement.of(1, 1)
        product = q.q_mul(-20, x, q.q_inv(-20, x))
        assert product == QuadraticElement.of(1)
        assert q.q_inv(-20, x) == QuadraticElement(Fraction(1, 6), Fraction(-1, 6))

    def test_inverse_of_zero(self):
        with pytest.raises(InvalidElementError):
            q.q_inv(-20, QuadraticElement.of(0))

    def test_negative_power(self):
        x = QuadraticElement.of(2, 1)
        assert q.q_mul(-20, q.q_pow(-20, x, 3), q.q_pow(-20, x, -3)) == QuadraticElement.of(1)

    def test_render(self):
        assert q.render_quadratic(QuadraticElement(Fraction(1, 2), Fraction(-3))) == "(1/2, -3)"
        assert q.q_denominator(QuadraticElement(Fraction(1, 2), Fraction(1, 3))) == 6


class TestFractionalIdeals:
    """Тесты HNF-представления и арифметики идеалов"""

    def test_from_hnf_checks_divisibility(self):
        p2 = ideals.from_hnf(-20, 2, 1)
        assert (p2.a, p2.b, p2.content) == (2, 1, Fraction(1))
        assert str(p2) == "ideal(2, 1)"
        with pytest.raises(InvalidElementError):
            ideals.from_hnf(-20, 3, 0)

    def test_ramified_prime_squares_to_principal(self):
        """P₂² = (2) в O(−20)"""
        p2 = ideals.from_hnf(-20, 2, 1)
        square = ideals.ideal_mul(p2, p2)
        assert square == ideals.principal_ideal(-20, QuadraticElement.of(2))
        assert square.content == 2
        assert square.norm == 4

    def test_inverse(self):
        p2 = ideals.from_hnf(-20, 2, 1)
        inverse = ideals.ideal_inv(p2)
        assert ideals.ideal_mul(p2, inverse) == ideals.unit_ideal(-20)
        assert inverse.content == Fraction(1, 2)
        assert str(inverse).startswith("1/2*ideal(")

    def test_power(self):
        p3 = ideals.primes_above(-23, 3)[0].ideal
        assert ideals.ideal_mul(ideals.ideal_pow(p3, 2), ideals.ideal_pow(p3, -2)) == ideals.unit_ideal(-23)

    def test_normalization_is_canonical(self):
        """Разные наборы образующих одного идеала дают одну тройку"""
        two = QuadraticElement.of(2)
        one_plus_omega = QuadraticElement.of(1, 1)
        left = ideals.ideal_normalize(-20, [two, one_plus_omega])
        right = ideals.ideal_normalize(-20, [one_plus_omega, two, QuadraticElement.of(4, 2)])
        assert left == right == ideals.from_hnf(-20, 2, 1)

    def test_prime_norms(self):
        assert ideals.primes_above(-20, 3)[0].ideal.norm == 3
        assert ideals.primes_above(-20, 11)[0].ideal.norm == 121
        assert ideals.ideal_norm(ideals.ideal_inv(ideals.from_hnf(-20, 2, 1))) == Fraction(1, 2)

    @pytest.mark.parametrize("discriminant", [-20, -23, -84])
    def test_norm_is_multiplicative(self, discriminant):
        """N(IJ) = N(I)·N(J) на случайных произведениях простых идеалов"""
        for _ in range(15):
            left, right = random_ideal(discriminant), random_ideal(discriminant)
            product = ideals.ideal_mul(left, right)
            assert ideals.ideal_norm(product) == ideals.ideal_norm(left) * ideals.ideal_norm(right)

    def test_principal_norm_is_element_norm(self):
        """N((x)) = |N(x)|"""
        for _ in range(20):
            x = QuadraticElement.of(fake.random_int(min=-30, max=30), fake.random_int(min=1, max=30))
            assert ideals.principal_ideal(-23, x).norm == abs(q.q_norm(-23, x))

    def test_zero_module_rejected(self):
        with pytest.raises(InvalidElementError):
            ideals.ideal_normalize(-20, [QuadraticElement.of(0)])

    def test_membership(self):
        p2 = ideals.from_hnf(-20, 2, 1)
        assert ideals.contains(p2, QuadraticElement.of(2))
        assert ideals.contains(p2, QuadraticElement.of(1, 1))
        assert not ideals.contains(p2, QuadraticElement.of(1))
        assert ideals.is_subset(ideals.principal_ideal(-20, QuadraticElement.of(2)), p2)

    def test_different_orders(self):
        with pytest.raises(InvalidElementError):
            ideals.ideal_mul(ideals.unit_ideal(-20), ideals.unit_ideal(-23))


class TestPrimesAndValuations:
    """Тесты простых идеалов, нормирований и главности"""

    @pytest.mark.parametrize("p,count,splitting", [
        (2, 1, ideals.Splitting.RAMIFIED),
        (5, 1, ideals.Splitting.RAMIFIED),
        (3, 2, ideals.Splitting.SPLIT),
        (7, 2, ideals.Splitting.SPLIT),
        (11, 1, ideals.Splitting.INERT),
    ])
    def test_splitting_in_o20(self, p, count, splitting):
        primes = ideals.primes_above(-20, p)
        assert len(primes) == count
        assert all(prime.splitting is splitting for prime in primes)

    def test_inert_prime_is_principal(self):
        inert = ideals.primes_above(-20, 11)[0]
        assert inert.ideal == ideals.principal_ideal(-20, QuadraticElement.of(11))

    def test_valuations(self):
        p2 = ideals.primes_above(-20, 2)[0]
        assert ideals.element_valuation(p2, QuadraticElement.of(2)) == 2
        assert ideals.element_valuation(p2, QuadraticElement.of(1, 1)) == 1
        assert ideals.valuation(p2, ideals.ideal_inv(p2.ideal)) == -1
        for prime in ideals.primes_above(-20, 3):
            assert ideals.element_valuation(prime, QuadraticElement.of(3)) == 1

    def test_valuation_of_zero(self):
        p2 = ideals.primes_above(-20, 2)[0]
        with pytest.raises(InvalidElementError):
            ideals.element_valuation(p2, QuadraticElement.of(0))

    def test_principal_generator(self):
        ideal = ideals.principal_ideal(-20, QuadraticElement.of(1, 1))
        generator = ideals.is_principal(ideal)
        assert generator is not None
        assert ideals.principal_ideal(-20, generator) == ideal

    def test_non_principal(self):
        assert ideals.is_principal(ideals.from_hnf(-20, 2, 1)) is None

    def test_scaled_principal(self):
        ideal = ideals.principal_ideal(-20, QuadraticElement.of(2))
        assert ideals.is_principal(ideal) == QuadraticElement.of(2)

    def test_same_localization(self):
        p2 = ideals.from_hnf(-20, 2, 1)
        unit = ideals.unit_ideal(-20)
        assert ideals.same_localization(p2, unit, ideals.primes_over(-20, [3]))
        assert not ideals.same_localization(p2, unit, ideals.primes_over(-20, [2]))
