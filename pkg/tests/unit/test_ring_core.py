"""
Unit тесты ядра колец: разбор, элементы, идемпотенты, морфизмы
"""
from fractions import Fraction

import pytest

from src.config.settings import reset_settings
from src.domain.entities.ring import QuadraticElement, ResidueElement, RingKind, RingMorphism
from src.domain.exceptions import AxiomViolationError, InvalidElementError, RingSpecError
from src.domain.services import ring_core


class TestRingParsing:
    """Тесты разбора и печати колец"""

    def test_composite_modulus_splits_into_local_factors(self, z12):
        """ℤ/12 раскладывается в ℤ/4 × ℤ/3"""
        assert z12.kind is RingKind.FINITE_PRODUCT
        assert [str(f) for f in z12.factors] == ["Z/4", "Z/3"]
        assert z12.order == 12
        assert z12.component_count == 2
        assert str(z12) == "Z/4 x Z/3"

    def test_product_spec_with_spaces(self):
        """Пробелы вокруг лексем игнорируются"""
        ring = ring_core.parse_ring("  Z/2 x  Z/9 ")
        assert ring.moduli == (2, 9)
        assert ring == ring_core.parse_ring("Z/9xZ/2")

    def test_zero_ring(self):
        """Пустое произведение - нулевое кольцо"""
        ring = ring_core.parse_ring("0")
        assert ring.is_zero
        assert ring.component_count == 0
        assert str(ring) == "0"

    def test_quadratic_orders(self, o20, o20_loc):
        """O(D) и полулокальный порядок"""
        assert o20.kind is RingKind.QUAD_ORDER
        assert o20.discriminant == -20
        assert o20.component_count == 1
        assert o20_loc.kind is RingKind.SEMILOCAL_QUAD_ORDER
        assert o20_loc.localized_primes == frozenset({2, 3})
        assert str(o20_loc) == "O(-20) loc {2,3}"

    @pytest.mark.parametrize("spec", [
        "",
        "Z/1",
        "Z/-5",
        "Q",
        "Z/6 x",
        "O(-12)",
        "O(5)",
        "O(-20) loc {4}",
        "O(-20) loc {}",
    ])
    def test_invalid_specs(self, spec):
        """Некорректные записи отклоняются с RingSpecError"""
        with pytest.raises(RingSpecError):
            ring_core.parse_ring(spec)


class TestElements:
    """Тесты арифметики и литералов элементов"""

    def test_integer_literal_goes_through_crt(self, z12):
        """Целое число раскладывается по факторам и печатается обратно"""
        x = ring_core.parse_element(z12, "5")
        assert x == ResidueElement((1, 2))
        assert ring_core.render_element(z12, x) == "5"

    def test_residue_tuple_literal(self, z12):
        """Литерал (r1, r2) задаёт остатки по факторам"""
        x = ring_core.parse_element(z12, "(1, 0)")
        assert ring_core.render_element(z12, x) == "9"

    def test_residue_tuple_wrong_length(self, z12):
        with pytest.raises(InvalidElementError):
            ring_core.parse_element(z12, "(1, 0, 1)")

    def test_arithmetic_in_finite_ring(self, z12):
        """4·4 = 4, 4 + 9 = 1, −1 = 11 в ℤ/12"""
        four = ring_core.from_integer(z12, 4)
        nine = ring_core.from_integer(z12, 9)
        assert ring_core.element_arith(z12, "mul", four, four) == four
        assert ring_core.element_arith(z12, "add", four, nine) == ring_core.from_integer(z12, 13)
        assert ring_core.element_arith(z12, "neg", ring_core.one(z12)) == ring_core.from_integer(z12, 11)

    def test_unknown_operation(self, z12):
        x = ring_core.one(z12)
        with pytest.raises(RingSpecError):
            ring_core.element_arith(z12, "div", x, x)

    def test_quadratic_multiplication(self, o20):
        """ω² = −5 в O(−20)"""
        omega = ring_core.parse_element(o20, "(0, 1)")
        assert ring_core.mul(o20, omega, omega) == QuadraticElement.of(-5)

    def test_order_rejects_fractions(self, o20):
        with pytest.raises(InvalidElementError):
            ring_core.parse_element(o20, "(1/2, 0)")

    def test_semilocal_denominators(self, o20_loc):
        """В S⁻¹O допустимы знаменатели, взаимно простые с S"""
        x = ring_core.parse_element(o20_loc, "(1/7, 1)")
        assert x.x == Fraction(1, 7)
        with pytest.raises(InvalidElementError):
            ring_core.parse_element(o20_loc, "(1/6, 0)")

    def test_malformed_literal(self, z12):
        with pytest.raises(RingSpecError):
            ring_core.parse_element(z12, "abc")

    def test_units(self, z12, o20, o20_loc):
        """Обратимость в конечном кольце, в порядке и в полулокализации"""
        assert ring_core.is_unit(z12, ring_core.from_integer(z12, 5))
        assert not ring_core.is_unit(z12, ring_core.from_integer(z12, 4))
        assert ring_core.is_unit(o20, QuadraticElement.of(-1))
        assert not ring_core.is_unit(o20, QuadraticElement.of(2))
        assert ring_core.is_unit(o20_loc, QuadraticElement.of(7))
        assert not ring_core.is_unit(o20_loc, QuadraticElement.of(3))


class TestIdempotents:
    """Тесты перечисления идемпотентов"""

    def test_z12_idempotents(self, z12):
        """Идемпотенты ℤ/12 - это 0, 1, 4, 9"""
        rendered = {ring_core.render_element(z12, e) for e in ring_core.idempotents(z12)}
        assert rendered == {"0", "1", "4", "9"}

    def test_count_is_power_of_two(self, z30, z2310):
        assert len(ring_core.idempotents(z30)) == 8
        assert len(ring_core.idempotents(z2310)) == 32

    def test_domain_has_trivial_idempotents(self, o23):
        assert ring_core.idempotents(o23) == [ring_core.zero(o23), ring_core.one(o23)]

    def test_every_listed_element_is_idempotent(self, z30):
        for e in ring_core.idempotents(z30):
            assert ring_core.is_idempotent(z30, e)

    def test_require_idempotent_rejects(self, z12):
        with pytest.raises(InvalidElementError):
            ring_core.require_idempotent(z12, ring_core.from_integer(z12, 2))

    def test_total_ring_of_fractions(self, z12, z30):
        """В конечном кольце неделители нуля обратимы"""
        assert ring_core.nonzerodivisors_are_units(z12)
        assert ring_core.nonzerodivisors_are_units(z30)


class TestMorphisms:
    """Тесты разбора, композиции и проверки морфизмов"""

    def test_diagonal(self):
        morphism = ring_core.parse_morphism("diag: Z/2 -> Z/2 x Z/2")
        assert morphism.assignment == (0, 0)
        image = ring_core.apply_morphism(morphism, ring_core.one(morphism.source))
        assert image == ResidueElement((1, 1))

    def test_reduction(self, z12):
        morphism = ring_core.parse_morphism("red: Z/12 -> Z/2 x Z/3")
        assert morphism == ring_core.reduction(z12)
        assert ring_core.apply_morphism(morphism, ring_core.from_integer(z12, 7)) == ResidueElement((1, 1))

    def test_reduction_target_mismatch(self):
        with pytest.raises(RingSpecError):
            ring_core.parse_morphism("red: Z/12 -> Z/4 x Z/3")

    def test_projection_needs_equal_exponents(self, z30):
        proj = ring_core.make_morphism("proj", z30, ring_core.parse_ring("Z/5"))
        assert proj.assignment == (2,)
        with pytest.raises(RingSpecError):
            ring_core.make_morphism("proj", ring_core.parse_ring("Z/4"), ring_core.parse_ring("Z/2"))

    def test_explicit_map(self):
        morphism = ring_core.parse_morphism("map[0,0]: Z/4 -> Z/2 x Z/2")
        assert morphism.assignment == (0, 0)
        assert ring_core.check_morphism_laws(morphism) == 16

    @pytest.mark.parametrize("text", [
        "map[0]: Z/3 -> Z/2",
        "map[1]: Z/2 -> Z/2",
        "diag: Z/2 -> Z/3",
        "nonsense",
    ])
    def test_invalid_morphisms(self, text):
        with pytest.raises(RingSpecError):
            ring_core.parse_morphism(text)

    def test_compose(self):
        diag = ring_core.parse_morphism("diag: Z/2 -> Z/2 x Z/2")
        proj = ring_core.make_morphism("proj", diag.target, diag.source)
        composite = ring_core.compose(proj, diag)
        assert composite.source == diag.source
        assert composite.target == diag.source
        assert composite.assignment == (0,)

    def test_compose_mismatch(self, z12, z30):
        with pytest.raises(RingSpecError):
            ring_core.compose(ring_core.identity(z12), ring_core.identity(z30))

    def test_morphism_laws_exhaustive(self, z12):
        assert ring_core.check_morphism_laws(ring_core.identity(z12)) == 144

    def test_morphism_laws_sample_above_pair_limit(self):
        """id на (ℤ/30)²: 900² пар больше лимита, проверяется выборка 316²"""
        square = ring_core.parse_morphism("diag: Z/30 -> Z/30 x Z/30").target
        assert ring_core.check_morphism_laws(ring_core.identity(square)) == 316 * 316

    def test_morphism_pair_limit_from_environment(self, monkeypatch):
        monkeypatch.setenv("RINGK0_MORPHISM_PAIR_LIMIT", "100")
        reset_settings()
        diag = ring_core.parse_morphism("diag: Z/30 -> Z/30 x Z/30")
        assert ring_core.check_morphism_laws(diag) == 100
        assert ring_core.check_morphism_laws(ring_core.identity(diag.target)) == 100

    def test_morphism_laws_detect_bad_assignment(self):
        """Ручной морфизм в чужой фактор нарушает f(1) = 1 или аддитивность"""
        source = ring_core.parse_ring("Z/4")
        target = ring_core.parse_ring("Z/2")
        bogus = RingMorphism(source, target, (0,), label="map")
        assert ring_core.check_morphism_laws(bogus) == 16
        zero_target = ring_core.parse_ring("Z/3")
        broken = RingMorphism(zero_target, target, (0,), label="map")
        with pytest.raises(AxiomViolationError):
            ring_core.check_morphism_laws(broken)
