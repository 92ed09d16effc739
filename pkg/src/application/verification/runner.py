"""
Наборы проверок утверждений о B(R), Pic(R), Cl(R), K₀(R) и H₀(R).
Каждый идентификатор соответствует одной проверке уровня модулей domain.services.
"""
import itertools
import logging
import random
from dataclasses import dataclass
from typing import Callable, Optional

from ...config.settings import get_settings
from ...domain.entities.module import ProjModule
from ...domain.entities.report import TheoremReport
from ...domain.entities.ring import ConcreteRing, RingKind, RingMorphism
from ...domain.exceptions import AxiomViolationError, InvariantViolationError, RingSpecError, UnsupportedOperationError
from ...domain.services import (
    boolean_ring,
    class_groups,
    exact_sequences,
    k0,
    modules,
    ring_core,
    spectrum,
)
from ...domain.services import quadratic as q


@dataclass(frozen=True)
class Suite:
    theorem_id: str
    description: str
    needs_morphism: bool = False
    finite_only: bool = False
    semilocal_only: bool = False

    def applies_to(self, ring: ConcreteRing) -> bool:
        if self.semilocal_only:
            return ring.kind is RingKind.SEMILOCAL_QUAD_ORDER
        if self.finite_only or self.needs_morphism:
            return ring.is_finite
        return True


SUITES: tuple[Suite, ...] = (
    Suite("b-h0-units", "B(R) ≅ H₀(R)*"),
    Suite("idem-formula", "формула прямой суммы для идемпотентов"),
    Suite("proj-decomp", "ортогональное разложение по рангам"),
    Suite("cl-pic-exact", "0 → Cl(R) → Pic(R) → Pic(T(R))"),
    Suite("principalize", "главность идеалов полулокального порядка", semilocal_only=True),
    Suite("k0red-h0", "K₀(R)_red ≅ H₀(R)"),
    Suite("b-k0", "B(R) ≅ B(K₀(R))"),
    Suite("units-split", "K₀(R)* ≅ Pic(R) ⊕ B(R)"),
    Suite("lift", "подъём идемпотентов на уровне колец и K₀", needs_morphism=True),
    Suite("char-zero", "ℤ → K₀(R) инъективно"),
    Suite("nil-quotient", "факторы по нильпотентным идеалам", needs_morphism=True),
    Suite("functoriality", "функториальность K₀", needs_morphism=True),
    Suite("oracle", "пополнение полукольца модулей против замкнутой формы"),
)

THEOREM_IDS: tuple[str, ...] = tuple(suite.theorem_id for suite in SUITES) + ("all",)


class TheoremSuiteRunner:
    """Запускает наборы проверок и собирает отчёты"""

    def __init__(self) -> None:
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")
        self.settings = get_settings()
        self._handlers: dict[str, Callable[[ConcreteRing, Optional[RingMorphism]], list[TheoremReport]]] = {
            "b-h0-units": self.check_b_h0_units,
            "idem-formula": self.check_idempotent_formula,
            "proj-decomp": self.check_projective_decomposition,
            "cl-pic-exact": lambda ring, _: [exact_sequences.cl_pic_exact_check(ring)],
            "principalize": self.check_principalization,
            "k0red-h0": lambda ring, _: [k0.k0_red_check(ring)],
            "b-k0": lambda ring, _: [k0.b_k0_check(ring)],
            "units-split": lambda ring, _: [k0.units_split_check(ring)],
            "lift": self.check_lift,
            "char-zero": lambda ring, _: [k0.char_zero_check(ring)],
            "nil-quotient": self.check_nil_quotient,
            "functoriality": self.check_functoriality,
            "oracle": lambda ring, _: [k0.oracle_equivalence(ring)],
        }

    def run(self, theorem_id: str, ring: Optional[ConcreteRing] = None,
            morphism: Optional[RingMorphism] = None) -> list[TheoremReport]:
        """
        Args:
            theorem_id: Идентификатор из THEOREM_IDS
            ring: Кольцо (для проверок морфизмов берётся источник morphism)
            morphism: Морфизм для lift, nil-quotient и functoriality

        Raises:
            RingSpecError: Неизвестный идентификатор или нет кольца
            UnsupportedOperationError: Проверка не определена для кольца
        """
        if theorem_id not in THEOREM_IDS:
            raise RingSpecError(f"unknown theorem id {theorem_id!r}; expected one of {', '.join(THEOREM_IDS)}")
        if ring is None:
            if morphism is None:
                raise RingSpecError(f"{theorem_id} needs a ring spec or a morphism")
            ring = morphism.source

        if theorem_id == "all":
            reports: list[TheoremReport] = []
            for suite in SUITES:
                if suite.applies_to(ring):
                    reports.extend(self._run_one(suite, ring, morphism))
            return reports

        suite = next(s for s in SUITES if s.theorem_id == theorem_id)
        if not suite.applies_to(ring) and morphism is None:
            raise UnsupportedOperationError(f"{theorem_id} is not defined for {ring}")
        return self._run_one(suite, ring, morphism)

    def _run_one(self, suite: Suite, ring: ConcreteRing, morphism: Optional[RingMorphism]) -> list[TheoremReport]:
        self.logger.info(f"Проверка {suite.theorem_id} ({suite.description}) для {ring}")
        try:
            reports = self._handlers[suite.theorem_id](ring, morphism)
        except InvariantViolationError as e:
            self.logger.error(f"{suite.theorem_id}: {e}")
            report = TheoremReport(theorem_id=suite.theorem_id, ring=str(ring))
            report.check(e.check, False, e.witness)
            reports = [report]
        for report in reports:
            status = "PASSED" if report.passed else "FAILED"
            self.logger.info(f"{report.theorem_id} [{report.ring}]: {status}")
        return reports

    # ------------------------------------------------------------------------
    # Зарегистрированные морфизмы
    # ------------------------------------------------------------------------

    def registered_morphisms(self, ring: ConcreteRing) -> list[RingMorphism]:
        """id, R → R_red, проекция на первый фактор и диагональ R → R × R"""
        result = [ring_core.identity(ring), ring_core.reduction(ring)]
        if ring.factors:
            first = ring_core.finite_product([ring.factors[0].modulus])
            result.append(ring_core.make_morphism("proj", ring, first))
            doubled = ring_core.finite_product(list(ring.moduli) * 2)
            result.append(ring_core.make_morphism("diag", ring, doubled))
        return result

    def _morphisms(self, ring: ConcreteRing, morphism: Optional[RingMorphism]) -> list[RingMorphism]:
        return [morphism] if morphism is not None else self.registered_morphisms(ring)

    # ------------------------------------------------------------------------
    # Наборы
    # ------------------------------------------------------------------------

    def check_b_h0_units(self, ring: ConcreteRing, _: Optional[RingMorphism] = None) -> list[TheoremReport]:
        report = TheoremReport(theorem_id="b-h0-units", ring=str(ring))
        boolean = boolean_ring.boolean_ring_of(ring)
        try:
            boolean_ring.check_boolean_axioms(boolean)
            report.check("boolean.axioms", True)
        except AxiomViolationError as e:
            report.check("boolean.axioms", False, str(e))
        iso = boolean_ring.b_iso_h0units(ring)
        witness = boolean_ring.bijection_witness(iso, spectrum.h0_units(ring))
        report.check("phi.bijective", witness is None, witness)
        report.check("b.order_is_2_power_c", boolean.order == 2 ** ring.component_count,
                     {"b": boolean.order, "c": ring.component_count})
        bad = [
            ring_core.render_element(ring, e) for e in boolean.elements
            if boolean_ring.involution_square(ring, e) != ring_core.one(ring)
        ]
        report.check("one_minus_2e.involution", not bad, bad)
        report.results.update({"b_order": boolean.order, "h0_units": len(iso.pairs)})
        return [report]

    def check_idempotent_formula(self, ring: ConcreteRing, _: Optional[RingMorphism] = None) -> list[TheoremReport]:
        report = TheoremReport(theorem_id="idem-formula", ring=str(ring))
        idempotents = ring_core.idempotents(ring)
        failures: dict[str, list[tuple[str, str]]] = {"idem-formula": [], "split": [], "orthogonal-sum": []}
        pairs = 0
        for e, f in itertools.product(idempotents, repeat=2):
            pairs += 1
            identities = [
                boolean_ring.idempotent_formula_check(ring, e, f),
                boolean_ring.split_check(ring, e, f),
            ]
            if ring_core.is_zero(ring_core.mul(ring, e, f)):
                identities.append(boolean_ring.orthogonal_sum_check(ring, e, f))
            for identity in identities:
                if not identity.holds:
                    failures[identity.name].append(
                        (ring_core.render_element(ring, e), ring_core.render_element(ring, f))
                    )
        for name, bad in failures.items():
            report.check(name, not bad, bad[:5])
        report.results["pairs"] = pairs
        return [report]

    def generated_modules(self, ring: ConcreteRing) -> list[ProjModule]:
        """Детерминированная партия модулей с рангами 0..4"""
        rng = random.Random(self.settings.random_seed)
        count = self.settings.generated_module_count
        result = []
        forms = class_groups.class_group(ring.discriminant).forms if ring.kind is RingKind.QUAD_ORDER else None
        for _ in range(count):
            ranks = tuple(rng.randrange(5) for _ in range(ring.component_count))
            cls = rng.choice(forms) if forms else None
            result.append(modules.make_module(ring, ranks, cls))
        self.logger.debug(f"Сгенерировано {len(result)} модулей над {ring}")
        return result

    def check_projective_decomposition(self, ring: ConcreteRing,
                                       _: Optional[RingMorphism] = None) -> list[TheoremReport]:
        report = TheoremReport(theorem_id="proj-decomp", ring=str(ring))
        one = ring_core.one(ring)
        sum_failures, orthogonality_failures, trace_failures = [], [], []
        chain_failures: list[dict] = []
        batch = self.generated_modules(ring)
        for module in batch:
            decomposition = modules.orthogonal_decomposition(module)
            total = ring_core.zero(ring)
            for e in decomposition.idems:
                total = ring_core.add(ring, total, e)
            if total != one:
                sum_failures.append(str(module))
            for e, f in itertools.combinations(decomposition.idems, 2):
                if not ring_core.is_zero(ring_core.mul(ring, e, f)):
                    orthogonality_failures.append(str(module))
                    break
            if ring_core.sub(ring, one, decomposition.idems[0]) != modules.trace_ideal(module):
                trace_failures.append(str(module))
            broken = modules.annihilator_chain_failures(decomposition)
            if broken:
                chain_failures.append({"module": str(module), "k": broken})
        report.check("idempotents.sum_to_one", not sum_failures, sum_failures[:5])
        report.check("idempotents.orthogonal", not orthogonality_failures, orthogonality_failures[:5])
        report.check("annihilator_chain", not chain_failures, chain_failures[:5])
        report.check("trace_ideal.support", not trace_failures, trace_failures[:5])
        report.results["modules"] = len(batch)
        return [report]

    def check_principalization(self, ring: ConcreteRing, _: Optional[RingMorphism] = None) -> list[TheoremReport]:
        if ring.kind is not RingKind.SEMILOCAL_QUAD_ORDER:
            raise UnsupportedOperationError(f"principalize needs a semilocal order, got {ring}")
        assert ring.discriminant is not None
        report = TheoremReport(theorem_id="principalize", ring=str(ring))
        generators = {}
        for form in class_groups.class_group(ring.discriminant).forms:
            ideal = class_groups.form_to_ideal(form)
            result = exact_sequences.principalize_semilocal(ring, ideal)
            report.check(f"valuations[{form}]", result.verified, list(result.valuations))
            generators[str(ideal)] = q.render_quadratic(result.generator)
        report.results["generators"] = generators
        return [report]

    def check_lift(self, ring: ConcreteRing, morphism: Optional[RingMorphism] = None) -> list[TheoremReport]:
        return [k0.lift_check(f) for f in self._morphisms(ring, morphism)]

    def check_nil_quotient(self, ring: ConcreteRing, morphism: Optional[RingMorphism] = None) -> list[TheoremReport]:
        if morphism is not None:
            return [k0.nil_quotient_check(morphism)]
        return [k0.nil_quotient_check(ring_core.reduction(ring))]

    def check_functoriality(self, ring: ConcreteRing,
                            morphism: Optional[RingMorphism] = None) -> list[TheoremReport]:
        if morphism is not None:
            return [k0.functoriality_check(morphism)]
        reports = []
        for f in self.registered_morphisms(ring):
            g = ring_core.reduction(f.target)
            reports.append(k0.functoriality_check(f, g))
        return reports
