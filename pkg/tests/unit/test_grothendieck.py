"""
Unit тесты движка пополнения Гротендика
"""
import pytest

from src.config.settings import reset_settings
from src.domain.entities.monoid import FiniteMonoid, FiniteSemiring, GrothElement
from src.domain.exceptions import AxiomViolationError, UnsupportedOperationError
from src.domain.services import grothendieck, k0, modules, ring_core, semirings
from tests.fixtures.factories import cyclic_monoid, truncated_naturals


def boolean_semiring() -> FiniteSemiring:
    return FiniteSemiring("boolean", ("0", "1"), ((0, 1), (1, 1)), 0, mul=((0, 0), (0, 1)), one=1)


def z6_semiring() -> FiniteSemiring:
    add = tuple(tuple((i + j) % 6 for j in range(6)) for i in range(6))
    mul = tuple(tuple((i * j) % 6 for j in range(6)) for i in range(6))
    return FiniteSemiring("Z6", tuple(str(i) for i in range(6)), add, 0, mul=mul, one=1)


class TestValidation:
    """Тесты проверки аксиом по таблицам"""

    def test_valid_tables_pass(self):
        grothendieck.validate_monoid(cyclic_monoid(5))
        grothendieck.validate_semiring(z6_semiring())

    def test_non_associative_witness(self):
        broken = FiniteMonoid("broken", ("0", "1", "2"), ((0, 1, 2), (1, 2, 2), (2, 2, 1)), 0)
        with pytest.raises(AxiomViolationError) as exc_info:
            grothendieck.validate_monoid(broken)
        assert exc_info.value.witness == (1, 1, 2)

    def test_non_commutative_witness(self):
        table = ((0, 1), (0, 1))
        with pytest.raises(AxiomViolationError) as exc_info:
            grothendieck.validate_monoid(FiniteMonoid("left", ("0", "1"), table, 0))
        assert exc_info.value.witness == (0, 1)

    def test_wrong_identity(self):
        with pytest.raises(AxiomViolationError):
            grothendieck.validate_monoid(FiniteMonoid("shifted", ("0", "1"), ((1, 0), (0, 1)), 0))

    def test_entries_out_of_range(self):
        with pytest.raises(AxiomViolationError):
            grothendieck.validate_monoid(FiniteMonoid("big", ("0", "1"), ((0, 1), (1, 7)), 0))

    def test_annihilation_by_zero(self):
        """x·0 = 0 обязательно"""
        semiring = FiniteSemiring("bad", ("0", "1"), ((0, 1), (1, 0)), 0, mul=((1, 0), (0, 1)), one=1)
        with pytest.raises(AxiomViolationError):
            grothendieck.validate_semiring(semiring)

    def test_size_limit(self, monkeypatch):
        monkeypatch.setenv("RINGK0_MAX_MONOID_SIZE", "4")
        reset_settings()
        with pytest.raises(AxiomViolationError):
            grothendieck.groth_completion(cyclic_monoid(5))


class TestFiniteCompletion:
    """Тесты конечного режима"""

    @pytest.mark.parametrize("m", [1, 2, 5, 6])
    def test_group_completion_is_identity(self, m):
        completion = grothendieck.groth_completion(cyclic_monoid(m))
        assert completion.order == m

    def test_normal_form_is_lexicographically_least(self):
        """[1, 0] в ℤ/5 записывается как [0, 4]"""
        completion = grothendieck.groth_completion(cyclic_monoid(5))
        gamma = completion.gamma(1)
        assert gamma == GrothElement(0, 4)
        assert completion.render(gamma) == "[0, 4]"

    def test_negation_and_addition(self):
        completion = grothendieck.groth_completion(cyclic_monoid(6))
        x = completion.gamma(2)
        assert completion.add(x, completion.neg(x)) == completion.gamma(0)

    def test_absorbing_element_kills_everything(self):
        completion = grothendieck.groth_completion(truncated_naturals(3))
        assert completion.order == 1
        assert not completion.is_zero_ring

    def test_boolean_semiring_completes_to_zero_ring(self):
        """1 + 1 = 1 влечёт 1 = 0 в G(S)"""
        completion = grothendieck.groth_ring(boolean_semiring())
        assert completion.is_zero_ring
        assert completion.one == completion.gamma(0)

    def test_ring_completion_of_z6(self):
        completion = grothendieck.groth_ring(z6_semiring())
        assert completion.order == 6
        two, three = completion.gamma(2), completion.gamma(3)
        assert completion.mul(two, three) == completion.gamma(0)
        assert completion.mul(completion.one, two) == two

    def test_monoid_has_no_multiplication(self):
        completion = grothendieck.groth_completion(cyclic_monoid(3))
        with pytest.raises(AxiomViolationError):
            completion.mul(completion.gamma(1), completion.gamma(1))


class TestCancellativeCompletion:
    """Тесты режима сокращения"""

    def test_naturals_complete_to_integers(self):
        completion = grothendieck.cancellative_ring(semirings.NaturalNumbers())
        x = GrothElement(2, 5)
        y = GrothElement(3, 1)
        assert completion.equal(x, GrothElement(0, 3))
        assert completion.equal(completion.mul(x, y), GrothElement(0, 6))
        assert completion.equal(completion.add(x, completion.neg(x)), completion.zero)

    def test_monoid_mode_has_no_one(self):
        completion = grothendieck.cancellative_completion(semirings.NaturalNumbers())
        assert completion.name == "G(N)"
        assert completion.equal(completion.gamma(4), GrothElement(5, 1))

    def test_projective_semirings_pass_sample_axioms(self, z12, o23):
        grothendieck.check_semiring_sample(semirings.projective_class_semiring(z12), 4)
        grothendieck.check_semiring_sample(semirings.projective_class_semiring(o23), 3)

    def test_rank_vectors_need_finite_ring(self, o23):
        with pytest.raises(UnsupportedOperationError):
            semirings.RankVectorSemiring(o23)
        with pytest.raises(UnsupportedOperationError):
            semirings.SteinitzSemiring(ring_core.parse_ring("Z/6"))


class TestUniversalProperty:
    """Тесты продолжения φ: S → R до θ: G(S) → R"""

    def test_naturals_into_integers(self):
        theta = grothendieck.universal_extend(semirings.NaturalNumbers(), semirings.IntegerRing(), lambda a: a)
        assert theta(GrothElement(2, 7)) == -5

    def test_phi_must_preserve_one(self):
        with pytest.raises(AxiomViolationError):
            grothendieck.universal_extend(semirings.NaturalNumbers(), semirings.IntegerRing(), lambda a: 2 * a)

    def test_finite_semiring_into_z3(self):
        target = semirings.ConcreteRingTarget(ring_core.parse_ring("Z/3"))
        semiring = z6_semiring()
        completion = grothendieck.groth_ring(semiring)
        theta = grothendieck.universal_extend_finite(
            completion, target, lambda i: target.from_integer(int(semiring.elements[i]))
        )
        assert theta(completion.gamma(5)) == target.from_integer(2)
        witness = grothendieck.check_ring_morphism(
            completion.group.elements, completion.add, completion.mul, theta, target
        )
        assert witness is None

    def test_boolean_semiring_maps_only_to_zero_ring(self):
        completion = grothendieck.groth_ring(boolean_semiring())
        zero_ring = semirings.ConcreteRingTarget(ring_core.parse_ring("0"))
        grothendieck.universal_extend_finite(completion, zero_ring, lambda i: zero_ring.zero)
        z2 = semirings.ConcreteRingTarget(ring_core.parse_ring("Z/2"))
        with pytest.raises(AxiomViolationError):
            grothendieck.universal_extend_finite(completion, z2, lambda i: z2.from_integer(i))

    def test_rank_map_into_h0(self, z12):
        theta = grothendieck.universal_extend(
            semirings.RankVectorSemiring(z12), semirings.H0Target(z12), modules.rank_map, bound=3
        )
        element = GrothElement(modules.make_module(z12, (2, 1)), modules.make_module(z12, (0, 3)))
        assert theta(element).values == (2, -2)

    def test_class_map_into_k0(self, o23):
        k0_ring = k0.k0_of_ring(o23)
        target = semirings.K0Target(k0_ring)
        theta = grothendieck.universal_extend(
            semirings.SteinitzSemiring(o23), target, lambda m: k0.class_of(k0_ring, m), bound=3
        )
        line = modules.make_module(o23, (1,), k0_ring.class_group.forms[1])
        assert theta(GrothElement(line, modules.free(o23, 1))).h0 == (0,)
