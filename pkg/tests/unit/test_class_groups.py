"""
Unit тесты бинарных квадратичных форм и групп классов
"""
import pytest

from src.config.settings import reset_settings
from src.domain.entities.ideal import QuadForm
from src.domain.exceptions import InvalidElementError, ReductionError, RingSpecError
from src.domain.services import class_groups, finite_groups, ideals
from tests.fixtures.factories import ReducedFormFactory, fake, random_ideal


def scramble(form: QuadForm, shifts: list[int]) -> QuadForm:
    """Обратные шаги редукции: обмен (a, b, c) -> (c, −b, a), затем сдвиг b на 2ak"""
    a, b, c = form.a, form.b, form.c
    for k in shifts:
        a, b, c = c, -b, a
        b, c = b + 2 * a * k, a * k * k + b * k + c
    return QuadForm(a, b, c)


class TestReduction:
    """Тесты редукции форм"""

    def test_reduces_to_principal_form(self):
        """(5, −4, 1) приводится к (1, 0, 1)"""
        reduced, steps = class_groups.reduce_with_steps(QuadForm(5, -4, 1))
        assert reduced == QuadForm(1, 0, 1)
        assert steps <= class_groups.reduction_step_bound(QuadForm(5, -4, 1))

    def test_reduced_forms_are_fixed_points(self):
        for _ in range(10):
            form = ReducedFormFactory()
            assert form.is_reduced
            assert class_groups.form_reduce(form) == form

    def test_step_count_within_bound(self):
        """Число шагов редукции не больше 2·log₂(max(|a|, |c|)) + 4"""
        for _ in range(30):
            form = ReducedFormFactory()
            shifts = [fake.random_int(min=2, max=4) for _ in range(fake.random_int(min=1, max=6))]
            scrambled = scramble(form, shifts)
            reduced, steps = class_groups.reduce_with_steps(scrambled)
            assert reduced == form
            assert steps <= class_groups.reduction_step_bound(scrambled)

    def test_boundary_sign_convention(self):
        """При |b| = a или a = c берётся b ≥ 0"""
        assert class_groups.form_reduce(QuadForm(2, -2, 3)) == QuadForm(2, 2, 3)
        assert class_groups.form_reduce(QuadForm(2, -1, 2)) == QuadForm(2, 1, 2)

    def test_iteration_cap(self, monkeypatch):
        monkeypatch.setenv("RINGK0_REDUCTION_ITERATION_CAP", "1")
        reset_settings()
        with pytest.raises(ReductionError):
            class_groups.reduce_with_steps(QuadForm(1000, 1999, 1000))

    def test_validate_form(self):
        class_groups.validate_form(QuadForm(2, 1, 3), -23)
        with pytest.raises(InvalidElementError):
            class_groups.validate_form(QuadForm(2, 2, 2), -12)
        with pytest.raises(InvalidElementError):
            class_groups.validate_form(QuadForm(2, 1, 3), -20)
        with pytest.raises(InvalidElementError):
            class_groups.validate_form(QuadForm(-2, 1, -3), -23)


class TestClassGroups:
    """Тесты перечисления Cl(D) и композиции"""

    @pytest.mark.parametrize("discriminant,forms", [
        (-3, [QuadForm(1, 1, 1)]),
        (-4, [QuadForm(1, 0, 1)]),
        (-20, [QuadForm(1, 0, 5), QuadForm(2, 2, 3)]),
        (-23, [QuadForm(1, 1, 6), QuadForm(2, -1, 3), QuadForm(2, 1, 3)]),
    ])
    def test_reduced_forms(self, discriminant, forms):
        assert class_groups.reduced_forms(discriminant) == forms

    @pytest.mark.parametrize("discriminant,class_number,divisors", [
        (-3, 1, ()),
        (-4, 1, ()),
        (-20, 2, (2,)),
        (-23, 3, (3,)),
        (-47, 5, (5,)),
        (-56, 4, (4,)),
        (-84, 4, (2, 2)),
    ])
    def test_class_group_structure(self, discriminant, class_number, divisors):
        group = class_groups.class_group(discriminant)
        assert group.class_number == class_number
        assert group.elementary_divisors == divisors
        assert group.identity == class_groups.principal_form(discriminant)

    def test_not_fundamental(self):
        with pytest.raises(RingSpecError):
            class_groups.class_group(-12)

    def test_composition_of_order_three(self):
        f = QuadForm(2, 1, 3)
        square = class_groups.compose_forms(f, f)
        assert square == QuadForm(2, -1, 3)
        assert class_groups.compose_forms(square, f) == QuadForm(1, 1, 6)
        assert class_groups.inverse_form(f) == square
        assert class_groups.form_power(f, -1) == square
        assert class_groups.form_power(f, 3) == QuadForm(1, 1, 6)

    def test_group_power_wraps_around(self):
        group = class_groups.class_group(-47)
        f = QuadForm(2, 1, 6)
        assert group.power(f, 5) == group.identity
        assert group.power(f, -1) == group.inverse(f)
        assert group.compose(group.power(f, 2), group.power(f, 3)) == group.identity

    def test_group_axioms_on_table(self):
        group = class_groups.class_group(-84).group
        finite_groups.check_group_axioms(group.table, group.identity)


class TestFormIdealCorrespondence:
    """Тесты перехода форма ↔ идеал"""

    def test_prime_over_two(self):
        """P₂ = (2, 1 + ω) соответствует форме (2, 2, 3)"""
        p2 = ideals.from_hnf(-20, 2, 1)
        assert class_groups.ideal_to_form(p2) == QuadForm(2, 2, 3)
        assert class_groups.ideal_class(ideals.ideal_mul(p2, p2)) == QuadForm(1, 0, 5)

    @pytest.mark.parametrize("discriminant", [-20, -23, -47, -84])
    def test_roundtrip_over_reduced_forms(self, discriminant):
        for form in class_groups.reduced_forms(discriminant):
            ideal = class_groups.form_to_ideal(form)
            assert ideal.a == form.a
            assert class_groups.ideal_to_form(ideal) == form

    @pytest.mark.parametrize("discriminant", [-23, -84])
    def test_class_map_is_homomorphism(self, discriminant):
        """[IJ] = [I]·[J] для случайных произведений простых идеалов"""
        for _ in range(15):
            left, right = random_ideal(discriminant), random_ideal(discriminant)
            product = class_groups.ideal_class(ideals.ideal_mul(left, right))
            composed = class_groups.compose_forms(class_groups.ideal_class(left), class_groups.ideal_class(right))
            assert product == composed
            assert product in class_groups.reduced_forms(discriminant)

    def test_inverse_ideal_has_inverse_class(self):
        for _ in range(10):
            ideal = random_ideal(-23)
            expected = class_groups.inverse_form(class_groups.ideal_class(ideal))
            assert class_groups.ideal_class(ideals.ideal_inv(ideal)) == expected

    def test_content_does_not_change_class(self):
        p2 = ideals.from_hnf(-20, 2, 1)
        scaled = ideals.ideal_inv(p2)
        assert class_groups.ideal_class(scaled) == QuadForm(2, 2, 3)

    def test_principal_ideal_has_trivial_class(self):
        for generator in ideals.primes_above(-23, 2):
            principal = ideals.ideal_mul(generator.ideal, ideals.ideal_conjugate(generator.ideal))
            assert class_groups.ideal_class(principal) == QuadForm(1, 1, 6)
