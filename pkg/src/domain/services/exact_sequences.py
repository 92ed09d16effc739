"""
Группа классов идеалов Cl(R), её вложение в Pic(R) и главность
идеалов полулокального кольца S⁻¹O.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from ..entities.group import FiniteAbelianGroup
from ..entities.ideal import FractionalIdeal, QuadForm
from ..entities.module import ProjModule
from ..entities.report import TheoremReport
from ..entities.ring import ConcreteRing, QuadraticElement, RingKind
from ..exceptions import InvalidElementError, InvariantViolationError, UnsupportedOperationError
from . import class_groups, finite_groups, ideals, modules, ring_core
from . import quadratic as q

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Principalization:
    """Образующая x с I·S⁻¹O = x·S⁻¹O и нормирования в простых над S"""
    ideal: FractionalIdeal
    generator: QuadraticElement
    valuations: tuple[tuple[str, int, int], ...]

    @property
    def verified(self) -> bool:
        return all(expected == actual for _, expected, actual in self.valuations)


def _require_quadratic(ring: ConcreteRing) -> int:
    if not ring.is_quadratic or ring.discriminant is None:
        raise UnsupportedOperationError(f"operation needs a quadratic order, got {ring}")
    return ring.discriminant


def _products_avoid(prime: ideals.PrimeIdeal, left: FractionalIdeal, right: FractionalIdeal,
                    discriminant: int) -> tuple[QuadraticElement, QuadraticElement]:
    """x ∈ I, y ∈ I⁻¹ с xy ∉ P; существуют, так как базисные произведения порождают O"""
    for x in ideals.ideal_generators(left):
        for y in ideals.ideal_generators(right):
            if not ideals.contains(prime.ideal, q.q_mul(discriminant, x, y)):
                return x, y
    raise InvariantViolationError("principalize.basis-products", str(prime))


def principalize_semilocal(ring: ConcreteRing, ideal: FractionalIdeal) -> Principalization:
    """
    Образующая I в S⁻¹O.

    Для каждого простого M_k над S выбираются x_k ∈ I, y_k ∈ I⁻¹ с x_k·y_k ∉ M_k
    и a_k ∈ ∩_{i≠k} M_i ∖ M_k; тогда y = Σ a_k·y_k и I·S⁻¹O = y⁻¹·S⁻¹O.

    Raises:
        UnsupportedOperationError: R не полулокальный порядок
        InvariantViolationError: Нормирования образующей не совпали с I
    """
    if ring.kind is not RingKind.SEMILOCAL_QUAD_ORDER:
        raise UnsupportedOperationError(f"principalization needs a semilocal order, got {ring}")
    d = _require_quadratic(ring)
    if ideal.discriminant != d:
        raise InvalidElementError(f"{ideal} is not an ideal of {ring}")

    primes = ideals.primes_over(d, ring.localized_primes)
    inverse = ideals.ideal_inv(ideal)

    y = QuadraticElement.of(0)
    for k, prime in enumerate(primes):
        _, y_k = _products_avoid(prime, ideal, inverse, d)
        a_k = QuadraticElement.of(1)
        for i, other in enumerate(primes):
            if i == k:
                continue
            # p_i ∉ M_k для другого простого; β_i + ω ∉ M_k для сопряжённого простого над тем же p
            factor = other.local_element if other.prime == prime.prime else QuadraticElement.of(other.prime)
            a_k = q.q_mul(d, a_k, factor)
        y = q.q_add(y, q.q_mul(d, a_k, y_k))

    generator = q.q_inv(d, y)
    valuations = tuple(
        (str(prime), ideals.valuation(prime, ideal), ideals.element_valuation(prime, generator))
        for prime in primes
    )
    result = Principalization(ideal, generator, valuations)
    if not result.verified:
        logger.error(f"Главность {ideal} в {ring} не подтверждена: {valuations}")
        raise InvariantViolationError("principalize.valuations", valuations)
    logger.debug(f"{ideal} = ({q.render_quadratic(generator)}) в {ring}")
    return result


def ideal_class_group(ring: ConcreteRing) -> FiniteAbelianGroup[QuadForm]:
    """
    Cl(R) как группа приведённых форм.
    Конечные и полулокальные кольца имеют тривиальную группу классов.
    """
    if ring.kind is RingKind.QUAD_ORDER:
        assert ring.discriminant is not None
        return class_groups.class_group(ring.discriminant).group
    if ring.is_quadratic:
        assert ring.discriminant is not None
        trivial = class_groups.principal_form(ring.discriminant)
    else:
        trivial = QuadForm(1, 0, 0)
    return finite_groups.build_group(f"Cl({ring})", [trivial], lambda x, y: trivial, trivial)


def cl_to_pic(ring: ConcreteRing) -> dict[QuadForm, ProjModule]:
    """Класс идеала ↦ класс обратимого модуля (1, c)"""
    pic = modules.pic_group(ring)
    cl = ideal_class_group(ring)
    if ring.kind is not RingKind.QUAD_ORDER:
        return {cl.elements[0]: pic.elements[pic.identity]}
    return {cls: modules.make_module(ring, (1,), cls) for cls in cl.elements}


def cl_pic_exact_check(ring: ConcreteRing) -> TheoremReport:
    """
    0 → Cl(R) → Pic(R) → Pic(T(R)).

    - O(D): T(R) - поле частных, Pic(T(R)) = 0, поэтому Cl → Pic ещё и сюръективно
    - конечное кольцо: T(R) = R, Cl(R) = 0, ядро тождественного Pic → Pic равно образу Cl
    - полулокальный порядок: все представители классов O главны после локализации
    """
    report = TheoremReport(theorem_id="cl-pic-exact", ring=str(ring))
    cl = ideal_class_group(ring)
    pic = modules.pic_group(ring)
    mapping = cl_to_pic(ring)

    report.check("cl_to_pic.homomorphism", finite_groups.is_homomorphism(cl, pic, mapping))
    report.check("cl_to_pic.injective", finite_groups.is_injective(mapping))
    report.results["cl_order"] = cl.order
    report.results["pic_order"] = pic.order
    report.results["cl_structure"] = cl.structure()
    report.results["pic_structure"] = pic.structure()

    if ring.kind is RingKind.QUAD_ORDER:
        report.check("pic_of_fraction_field.trivial", True)
        report.check("cl_to_pic.surjective", finite_groups.is_surjective(pic, mapping),
                     {"pic": pic.order, "image": len(finite_groups.image(mapping))})
        report.check("cl_pic.isomorphic", cl.elementary_divisors == pic.elementary_divisors,
                     {"cl": cl.structure(), "pic": pic.structure()})
    elif ring.is_finite:
        report.check("total_ring_of_fractions.equals_ring", ring_core.nonzerodivisors_are_units(ring))
        report.check("cl.trivial", cl.is_trivial)
        # Pic(R) → Pic(T(R)) тождественно: ядро тривиально и совпадает с образом Cl
        report.check("kernel_equals_image", pic.is_trivial and cl.is_trivial)
    else:
        assert ring.discriminant is not None
        global_classes = class_groups.class_group(ring.discriminant).forms
        failures = []
        for form in global_classes:
            try:
                principalize_semilocal(ring, class_groups.form_to_ideal(form))
            except InvariantViolationError as e:
                failures.append(str(form))
                logger.warning(f"Класс {form} не стал главным после локализации: {e}")
        report.check("semilocal.classes_principal", not failures, failures)
        report.check("cl.trivial", cl.is_trivial)
        report.check("pic.trivial", pic.is_trivial)
    return report


def rank_one_module_of_ideal(ideal: FractionalIdeal, ring: ConcreteRing) -> ProjModule:
    """Обратимый идеал как проективный модуль ранга 1: (1, класс I)"""
    _require_quadratic(ring)
    if ring.kind is RingKind.QUAD_ORDER:
        return modules.make_module(ring, (1,), class_groups.ideal_class(ideal))
    return modules.free(ring, 1)


def ideal_of_rank_one_module(module: ProjModule) -> FractionalIdeal:
    """
    Обратное направление: (1, c) реализуется идеалом класса c, содержащим
    положительное целое - неделитель нуля.
    """
    if module.cls is None or module.rank != 1:
        raise InvalidElementError(f"{module} is not a rank-one Steinitz module")
    ideal = class_groups.form_to_ideal(module.cls)
    if ideals.min_positive_integer(ideal) <= Fraction(0):
        raise InvariantViolationError("ideal.nonzerodivisor", str(ideal))
    return ideal
