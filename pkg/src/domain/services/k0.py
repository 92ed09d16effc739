"""
K₀(R) в замкнутой форме и проверки его свойств: отображение в H₀(R),
нильрадикал, группа единиц с отображениями f, g, h, идемпотенты,
индуцированные морфизмы и сверка с общим движком пополнения.
"""
import itertools
import logging
import random
from typing import Any, Optional

import numpy as np

from ...config.settings import get_settings
from ..entities.group import FiniteAbelianGroup, format_structure
from ..entities.k0 import K0Element, K0Ring, K0Shape
from ..entities.module import ProjModule
from ..entities.report import TheoremReport
from ..entities.ring import ConcreteRing, RingElement, RingKind, RingMorphism
from ..entities.spectrum import H0Element
from ..exceptions import AxiomViolationError, InvalidElementError, UnsupportedOperationError
from . import boolean_ring, class_groups, finite_groups, grothendieck, modules, ring_core, semirings, spectrum

logger = logging.getLogger(__name__)


# ============================================================================
# Замкнутая форма
# ============================================================================

def k0_of_ring(ring: ConcreteRing) -> K0Ring:
    """
    FiniteProduct → ℤ^c, O(D) → ℤ ⊕ Cl(D), S⁻¹O → ℤ.
    Нулевое кольцо даёт ℤ^0 = 0.
    """
    if ring.kind is RingKind.QUAD_ORDER:
        assert ring.discriminant is not None
        return K0Ring(ring, K0Shape.Z_PLUS_CL, 1, class_groups.class_group(ring.discriminant))
    return K0Ring(ring, K0Shape.FREE_ABELIAN, ring.component_count)


def class_of(k0: K0Ring, module: ProjModule) -> K0Element:
    """[M, 0]"""
    if module.ring != k0.base:
        raise InvalidElementError(f"{module} is not a module over {k0.base}")
    return k0.element(module.ranks, module.cls)


def k0_to_h0(k0: K0Ring, x: K0Element) -> H0Element:
    """[M, N] ↦ r_M − r_N; у ZPlusCl класс забывается"""
    return H0Element(x.h0)


def h0_section(k0: K0Ring, value: H0Element) -> K0Element:
    """Сечение H₀ → K₀: вектор рангов с тривиальным классом"""
    return k0.element(value.values)


def sample_elements(k0: K0Ring, bound: Optional[int] = None) -> list[K0Element]:
    """
    Конечная выборка K₀: все элементы с |r| ≤ bound, если компонент не больше двух,
    иначе константы, ±единичные векторы и 4c случайных векторов (seed из настроек).
    """
    settings = get_settings()
    bound = bound if bound is not None else settings.k0_sample_rank_bound
    values = range(-bound, bound + 1)
    if k0.shape is K0Shape.Z_PLUS_CL:
        assert k0.class_group is not None
        return [k0.element((r,), cls) for r in values for cls in k0.class_group.forms]
    c = k0.components
    if c <= 2:
        return [k0.element(vector) for vector in itertools.product(values, repeat=c)]
    result = [k0.constant(n) for n in values]
    for i in range(c):
        for sign in (1, -1):
            result.append(k0.element(tuple(sign if j == i else 0 for j in range(c))))
    rng = random.Random(settings.random_seed)
    for _ in range(4 * c):
        result.append(k0.element(tuple(rng.choice(values) for _ in range(c))))
    return result


def check_k0_ring_axioms(k0: K0Ring, bound: Optional[int] = None) -> None:
    """
    Аксиомы коммутативного кольца на выборке.

    Raises:
        AxiomViolationError: Свидетель - тройка элементов
    """
    items = sample_elements(k0, bound)
    triples = items if len(items) <= 16 else items[:16]
    for x in items:
        if k0.add(x, k0.zero) != x or k0.mul(x, k0.one) != x or k0.add(x, k0.neg(x)) != k0.zero:
            raise AxiomViolationError(f"K0({k0.base}): identity or inverse fails", (str(x),))
    for x, y in itertools.product(items, repeat=2):
        if k0.add(x, y) != k0.add(y, x) or k0.mul(x, y) != k0.mul(y, x):
            raise AxiomViolationError(f"K0({k0.base}) is not commutative", (str(x), str(y)))
    for x, y, z in itertools.product(triples, repeat=3):
        if k0.mul(x, k0.add(y, z)) != k0.add(k0.mul(x, y), k0.mul(x, z)):
            raise AxiomViolationError(f"K0({k0.base}) is not distributive", (str(x), str(y), str(z)))
        if k0.mul(k0.mul(x, y), z) != k0.mul(x, k0.mul(y, z)):
            raise AxiomViolationError(f"K0({k0.base}) multiplication is not associative", (str(x), str(y), str(z)))


def _is_nilpotent(k0: K0Ring, x: K0Element, max_power: int = 4) -> bool:
    power = x
    for _ in range(max_power):
        if power == k0.zero:
            return True
        power = k0.mul(power, x)
    return power == k0.zero


def k0_nilradical(k0: K0Ring) -> list[K0Element]:
    """Ядро K₀ → H₀: {0} для ℤ^c и {0} × Cl для ZPlusCl"""
    if k0.shape is K0Shape.Z_PLUS_CL:
        assert k0.class_group is not None
        return [k0.element((0,), cls) for cls in k0.class_group.forms]
    return [k0.zero]


# ============================================================================
# Единицы и отображения f, g, h
# ============================================================================

def k0_units(k0: K0Ring) -> FiniteAbelianGroup[K0Element]:
    """{±1}^c для ℤ^c и {(±1, c)} ≅ ℤ/2 × Cl для ZPlusCl"""
    signs = list(itertools.product((1, -1), repeat=k0.components))
    if k0.shape is K0Shape.Z_PLUS_CL:
        assert k0.class_group is not None
        units = [k0.element(s, cls) for s in signs for cls in k0.class_group.forms]
    else:
        units = [k0.element(s) for s in signs]
    return finite_groups.build_group(f"K0({k0.base})*", units, k0.mul, k0.one)


def map_f(k0: K0Ring, line_bundle: ProjModule) -> K0Element:
    """f: Pic(R) → K₀(R)*, L ↦ [L, 0]"""
    return class_of(k0, line_bundle)


def map_g(k0: K0Ring, unit: K0Element) -> RingElement:
    """g: K₀(R)* → B(R): идемпотент e с V(e) = {r_M − r_N = 1}"""
    return spectrum.phi_inverse(k0.base, k0_to_h0(k0, unit))


def map_h(k0: K0Ring, e: RingElement) -> K0Element:
    """h: B(R) → K₀(R)*, e ↦ [R, Re ⊕ Re] = 1 − 2[Re]"""
    summand = class_of(k0, modules.principal_summand(k0.base, e))
    return k0.sub(k0.one, k0.add(summand, summand))


def units_split_check(ring: ConcreteRing) -> TheoremReport:
    """
    Расщеплённая точная последовательность 0 → Pic(R) → K₀(R)* → B(R) → 0
    с сечением h; свойство линейных расслоений M ≅ R^d ⊕ Λ^{d+1}(M) проверяется
    на всех модулях постоянного ранга до k0_sample_rank_bound.
    """
    report = TheoremReport(theorem_id="units-split", ring=str(ring))
    k0 = k0_of_ring(ring)
    units = k0_units(k0)
    pic = modules.pic_group(ring)
    boolean = boolean_ring.boolean_ring_of(ring)
    b_group = finite_groups.build_group(f"B({ring})", list(boolean.elements), boolean.plus, ring_core.zero(ring))

    f = {line: map_f(k0, line) for line in pic.elements}
    g = {unit: map_g(k0, unit) for unit in units.elements}
    h = {e: map_h(k0, e) for e in b_group.elements}

    report.check("f.lands_in_units", all(value in units.elements for value in f.values()))
    report.check("h.lands_in_units", all(value in units.elements for value in h.values()))
    report.check("f.homomorphism", finite_groups.is_homomorphism(pic, units, f))
    report.check("g.homomorphism", finite_groups.is_homomorphism(units, b_group, g))
    report.check("h.homomorphism", finite_groups.is_homomorphism(b_group, units, h))
    report.check("f.injective", finite_groups.is_injective(f))
    report.check("h.injective", finite_groups.is_injective(h))
    report.check("g.surjective", finite_groups.is_surjective(b_group, g))

    bad_gh = [str(e) for e in b_group.elements if g[h[e]] != e]
    report.check("g_after_h.identity", not bad_gh, bad_gh)
    zero_idem = ring_core.zero(ring)
    bad_gf = [str(line) for line in pic.elements if g[f[line]] != zero_idem]
    report.check("g_after_f.zero", not bad_gf, bad_gf)

    kernel = set(finite_groups.kernel(b_group, g))
    image = finite_groups.image(f)
    not_invertible = [str(line) for line in pic.elements if modules.end_module(line) != modules.free(ring, 1)]
    report.check("pic.end_is_trivial", not not_invertible, not_invertible)
    bad_bundles = modules.line_bundle_failures(ring, get_settings().k0_sample_rank_bound)
    report.check("line_bundle_property", not bad_bundles, bad_bundles)
    report.check("ker_g.equals_im_f", kernel == image,
                 {"kernel": sorted(str(x) for x in kernel), "image": sorted(str(x) for x in image)})

    def split_op(x: tuple[ProjModule, RingElement], y: tuple[ProjModule, RingElement]) -> tuple[ProjModule, RingElement]:
        return modules.tensor(x[0], y[0]), boolean.plus(x[1], y[1])

    split = finite_groups.build_group(
        f"Pic({ring}) + B({ring})",
        [(line, e) for line in pic.elements for e in b_group.elements],
        split_op,
        (pic.elements[pic.identity], zero_idem),
    )
    report.check("units.isomorphic_to_pic_plus_b", units.elementary_divisors == split.elementary_divisors,
                 {"units": units.structure(), "pic_plus_b": split.structure()})

    c = ring.component_count
    report.results.update({
        "k0": str(k0),
        "units_order": units.order,
        "units_structure": units.structure(),
        "pic_structure": pic.structure(),
        "b_order": b_group.order,
        "pic_plus_z2_power": format_structure(split.elementary_divisors),
        "components": c,
    })
    return report


# ============================================================================
# K₀(R)_red ≅ H₀(R)
# ============================================================================

def k0_red_check(ring: ConcreteRing) -> TheoremReport:
    """
    Нильрадикал K₀(R) совпадает с ядром K₀ → H₀, фактор изоморфен H₀(R),
    единицы по модулю нильрадикала соответствуют B(R).
    """
    report = TheoremReport(theorem_id="k0red-h0", ring=str(ring))
    k0 = k0_of_ring(ring)
    h0 = semirings.H0Target(ring)
    nilradical = k0_nilradical(k0)
    sample = sample_elements(k0)

    kernel_ok = all(k0_to_h0(k0, x) == h0.zero for x in nilradical)
    report.check("nilradical.in_kernel", kernel_ok)
    squares = [str(x) for x in nilradical if k0.mul(x, x) != k0.zero]
    report.check("nilradical.squares_to_zero", not squares, squares)
    stray = [str(x) for x in sample if _is_nilpotent(k0, x) != (k0_to_h0(k0, x) == h0.zero)]
    report.check("nilpotents.equal_kernel", not stray, stray)

    witness = grothendieck.check_ring_morphism(sample, k0.add, k0.mul, lambda x: k0_to_h0(k0, x), h0)
    report.check("k0_to_h0.ring_morphism", witness is None, witness and [str(v) for v in witness])
    report.check("k0_to_h0.unital", k0_to_h0(k0, k0.one) == h0.one)

    generators = [spectrum.constant(ring, 1)] + [
        H0Element(tuple(1 if j == i else 0 for j in range(ring.component_count)))
        for i in range(ring.component_count)
    ]
    missing = [str(v) for v in generators if k0_to_h0(k0, h0_section(k0, v)) != v]
    report.check("k0_to_h0.surjective", not missing, missing)

    units = k0_units(k0)
    unit_images = {k0_to_h0(k0, u) for u in units.elements}
    h0_units = set(spectrum.h0_units(ring))
    report.check("units.surjective_onto_h0_units", unit_images == h0_units)
    iso = boolean_ring.b_iso_h0units(ring)
    report.check("units_mod_nil.match_b", frozenset(unit_images) == iso.image,
                 {"units_mod_nil": sorted(str(u) for u in unit_images), "phi_b": sorted(str(u) for u in iso.image)})

    report.results.update({
        "k0": str(k0),
        "nilradical_order": len(nilradical),
        "reduced": len(nilradical) == 1,
        "h0_rank": ring.component_count,
    })
    return report


# ============================================================================
# Идемпотенты K₀
# ============================================================================

def k0_idempotents(k0: K0Ring) -> list[K0Element]:
    """0/1-векторы для ℤ^c; (0, 1) и (1, 1) для ZPlusCl, так как c = 2c влечёт c = 1"""
    if k0.shape is K0Shape.Z_PLUS_CL:
        return [k0.zero, k0.one]
    return [k0.element(bits) for bits in itertools.product((0, 1), repeat=k0.components)]


def b_of_k0(ring: ConcreteRing) -> dict[RingElement, K0Element]:
    """e ↦ [Re, 0]"""
    k0 = k0_of_ring(ring)
    return {e: class_of(k0, modules.principal_summand(ring, e)) for e in ring_core.idempotents(ring)}


def b_k0_check(ring: ConcreteRing) -> TheoremReport:
    """B(R) ≅ B(K₀(R)) через e ↦ [Re, 0]"""
    report = TheoremReport(theorem_id="b-k0", ring=str(ring))
    k0 = k0_of_ring(ring)
    mapping = b_of_k0(ring)
    idempotents = k0_idempotents(k0)

    solved = [x for x in sample_elements(k0, 2) if k0.mul(x, x) == x]
    report.check("k0_idempotents.closed_form", set(solved) <= set(idempotents),
                 sorted(str(x) for x in set(solved) - set(idempotents)))
    report.check("map.injective", finite_groups.is_injective(mapping))
    report.check("map.onto_idempotents", set(mapping.values()) == set(idempotents))
    report.check("one_maps_to_unit", mapping[ring_core.one(ring)] == k0.one)

    bad = []
    for e, f in itertools.combinations(mapping, 2):
        if not ring_core.is_zero(ring_core.mul(ring, e, f)):
            continue
        # Re ⊕ Re′ ≅ R(e + e′) для ортогональных идемпотентов
        if mapping[ring_core.add(ring, e, f)] != k0.add(mapping[e], mapping[f]):
            bad.append((ring_core.render_element(ring, e), ring_core.render_element(ring, f)))
    report.check("map.additive_on_orthogonal", not bad, bad)
    report.results.update({"b_order": len(mapping), "k0_idempotents": [str(x) for x in idempotents]})
    return report


# ============================================================================
# Индуцированные морфизмы
# ============================================================================

def induced_matrix(morphism: RingMorphism) -> np.ndarray:
    """K₀(f): ℤ^c → ℤ^{c′}, A[j, s(j)] = 1 (r_{M⊗R′} = r_M∘f*)"""
    ring_core.validate_morphism(morphism)
    matrix = np.zeros((len(morphism.target.factors), len(morphism.source.factors)), dtype=np.int64)
    for j, i in enumerate(morphism.assignment):
        matrix[j, i] = 1
    return matrix


def k0_map(morphism: RingMorphism, x: K0Element) -> K0Element:
    return K0Element(tuple(int(v) for v in induced_matrix(morphism) @ np.array(x.h0, dtype=np.int64)))


def lifts_idempotents(morphism: RingMorphism) -> tuple[bool, bool]:
    """
    Returns:
        (ответ на уровне колец, ответ на уровне K₀)
    """
    source, target = morphism.source, morphism.target
    images = {ring_core.apply_morphism(morphism, e) for e in ring_core.idempotents(source)}
    ring_level = all(e in images for e in ring_core.idempotents(target))

    source_k0, target_k0 = k0_of_ring(source), k0_of_ring(target)
    k0_images = {k0_map(morphism, x) for x in k0_idempotents(source_k0)}
    k0_level = all(x in k0_images for x in k0_idempotents(target_k0))
    logger.debug(f"{morphism}: подъём идемпотентов кольца={ring_level}, K0={k0_level}")
    return ring_level, k0_level


def k0_surjectivity_check(morphism: RingMorphism) -> TheoremReport:
    """
    Если f поднимает идемпотенты (K₀(R′) = ℤ^{c′} приведено), K₀(f) сюръективно.
    Без подъёма сюръективность не утверждается: отчёт фиксирует образ.
    """
    report = TheoremReport(theorem_id="k0-surjective", ring=str(morphism))
    matrix = induced_matrix(morphism)
    ring_level, _ = lifts_idempotents(morphism)
    surjective = finite_groups.integer_map_is_surjective(matrix)
    report.results.update({
        "lifts_idempotents": ring_level,
        "image_generators": [list(int(v) for v in column) for column in matrix.T],
        "k0_map_surjective": surjective,
    })
    if ring_level:
        report.check("k0_map.surjective", surjective, {"matrix": matrix.tolist()})
    else:
        report.results["precondition"] = "f does not lift idempotents; surjectivity not claimed"
    return report


def lift_check(morphism: RingMorphism) -> TheoremReport:
    report = TheoremReport(theorem_id="lift", ring=str(morphism))
    ring_core.check_morphism_laws(morphism)
    ring_level, k0_level = lifts_idempotents(morphism)
    report.check("ring_and_k0_agree", ring_level == k0_level, {"ring": ring_level, "k0": k0_level})
    surjectivity = k0_surjectivity_check(morphism)
    report.checks.extend(surjectivity.checks)
    report.results.update(surjectivity.results)
    report.results.update({"lifts_ring": ring_level, "lifts_k0": k0_level})
    return report


def functoriality_check(f: RingMorphism, g: Optional[RingMorphism] = None) -> TheoremReport:
    """K₀(g∘f) = K₀(g)∘K₀(f), K₀(id) = id и согласованность с H₀(f)"""
    g = g if g is not None else ring_core.identity(f.target)
    report = TheoremReport(theorem_id="functoriality", ring=f"{g} o {f}")
    for morphism in (f, g):
        ring_core.check_morphism_laws(morphism)
    composite = ring_core.compose(g, f)
    lhs = induced_matrix(composite)
    rhs = induced_matrix(g) @ induced_matrix(f)
    report.check("k0.composition", np.array_equal(lhs, rhs), {"lhs": lhs.tolist(), "rhs": rhs.tolist()})
    for ring in (f.source, f.target):
        ident = induced_matrix(ring_core.identity(ring))
        report.check(f"k0.identity[{ring}]", np.array_equal(ident, np.eye(len(ring.factors), dtype=np.int64)))

    source_k0 = k0_of_ring(f.source)
    mismatched = []
    for x in sample_elements(source_k0):
        pulled = spectrum.h0_pullback(f, k0_to_h0(source_k0, x))
        if pulled != k0_to_h0(k0_of_ring(f.target), k0_map(f, x)):
            mismatched.append(str(x))
    report.check("h0.naturality", not mismatched, mismatched)
    return report


# ============================================================================
# Характеристика, нильпотентные факторы, сверка с движком
# ============================================================================

def char_zero_check(ring: ConcreteRing) -> TheoremReport:
    """ℤ → K₀(R) и ℤ → H₀(R) инъективны при R ≠ 0; K₀(R) = 0 ⇔ R = 0"""
    report = TheoremReport(theorem_id="char-zero", ring=str(ring))
    bound = get_settings().char_zero_bound
    k0 = k0_of_ring(ring)
    k0_constants = {k0.constant(n) for n in range(-bound, bound + 1)}
    h0_constants = {spectrum.constant(ring, n) for n in range(-bound, bound + 1)}
    expected = 1 if ring.is_zero else 2 * bound + 1

    report.check("k0_zero.iff_ring_zero", k0.is_zero_ring == ring.is_zero,
                 {"k0_zero": k0.is_zero_ring, "ring_zero": ring.is_zero})
    report.check("z_to_k0.injective" if not ring.is_zero else "z_to_k0.zero", len(k0_constants) == expected)
    report.check("z_to_h0.injective" if not ring.is_zero else "z_to_h0.zero", len(h0_constants) == expected)
    report.results.update({"bound": bound, "distinct_constants": len(k0_constants)})
    return report


def _is_nil_quotient(morphism: RingMorphism) -> bool:
    return sorted(morphism.assignment) == list(range(len(morphism.source.factors)))


def nil_quotient_check(morphism: RingMorphism) -> TheoremReport:
    """
    R → R/I с I в нильрадикале: Pic и K₀ не меняются, идемпотенты поднимаются.

    Raises:
        UnsupportedOperationError: Ядро f не нильпотентно
    """
    if not _is_nil_quotient(morphism):
        raise UnsupportedOperationError(f"{morphism} is not a quotient by a nilpotent ideal")
    report = TheoremReport(theorem_id="nil-quotient", ring=str(morphism))
    ring_core.check_morphism_laws(morphism)
    source, target = morphism.source, morphism.target

    settings = get_settings()
    if (source.order or 0) <= settings.exhaustive_pair_limit:
        exponent = max((factor.exponent for factor in source.factors), default=1)
        zero_t = ring_core.zero(target)
        stray = []
        for x in ring_core.elements(source):
            if ring_core.apply_morphism(morphism, x) != zero_t:
                continue
            power = x
            for _ in range(exponent - 1):
                power = ring_core.mul(source, power, x)
            if not ring_core.is_zero(power):
                stray.append(x.residues)
        report.check("kernel.nilpotent", not stray, stray[:5])

    pic_s, pic_t = modules.pic_group(source), modules.pic_group(target)
    report.check("pic.isomorphic", pic_s.elementary_divisors == pic_t.elementary_divisors)
    matrix = induced_matrix(morphism)
    square = matrix.shape[0] == matrix.shape[1]
    report.check("k0_map.isomorphism", square and finite_groups.integer_map_is_surjective(matrix),
                 {"matrix": matrix.tolist()})
    ring_level, k0_level = lifts_idempotents(morphism)
    report.check("lifts_idempotents", ring_level and k0_level)
    report.results.update({"pic": pic_s.structure(), "k0": str(k0_of_ring(source))})
    return report


def oracle_equivalence(ring: ConcreteRing) -> TheoremReport:
    """
    Общее пополнение полукольца классов проективных модулей против замкнутой формы:
    θ([M, N]) = [M] − [N] - кольцевой морфизм, инъективный и сюръективный на выборке.
    """
    report = TheoremReport(theorem_id="oracle", ring=str(ring))
    k0 = k0_of_ring(ring)
    semiring = semirings.projective_class_semiring(ring)
    completion = grothendieck.cancellative_ring(semiring)
    bound = get_settings().k0_sample_rank_bound + 1
    target = semirings.K0Target(k0)
    theta = grothendieck.universal_extend(semiring, target, lambda m: class_of(k0, m), bound)

    pairs = completion.sample_pairs(bound)
    witness = grothendieck.check_ring_morphism(pairs[:64], completion.add, completion.mul, theta, target)
    report.check("theta.ring_morphism", witness is None, witness and [str(v) for v in witness])

    non_injective = []
    for x, y in itertools.combinations(pairs, 2):
        if (theta(x) == theta(y)) != completion.equal(x, y):
            non_injective.append((str(x), str(y)))
            break
    report.check("theta.injective", not non_injective, non_injective)

    images = {theta(x) for x in pairs}
    generators = _k0_generators(k0)
    missing = [str(x) for x in generators if x not in images]
    report.check("theta.hits_generators", not missing, missing)
    check_k0_ring_axioms(k0)
    report.check("closed_form.ring_axioms", True)
    report.results.update({"k0": str(k0), "pairs_checked": len(pairs)})
    return report


def _k0_generators(k0: K0Ring) -> list[K0Element]:
    if k0.shape is K0Shape.Z_PLUS_CL:
        assert k0.class_group is not None
        return [k0.one] + [k0.element((0,), cls) for cls in k0.class_group.forms]
    c = k0.components
    return [k0.element(tuple(1 if j == i else 0 for j in range(c))) for i in range(c)]


def k0_summary(ring: ConcreteRing) -> dict[str, Any]:
    """Форма K₀, порядок нильрадикала и структура группы единиц"""
    k0 = k0_of_ring(ring)
    units = k0_units(k0)
    return {
        "ring": str(ring),
        "shape": k0.shape.value,
        "k0": str(k0),
        "components": k0.components,
        "class_number": k0.class_group.class_number if k0.class_group is not None else 1,
        "nilradical_order": len(k0_nilradical(k0)),
        "units_order": units.order,
        "units_structure": units.structure(),
        "units_divisors": list(units.elementary_divisors),
        "idempotents": [str(x) for x in k0_idempotents(k0)],
    }