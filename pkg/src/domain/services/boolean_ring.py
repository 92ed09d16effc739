"""
Булево кольцо B(R): e ⊕ e′ = e + e′ − 2ee′, изоморфизм B(R) ≅ H₀(R)* и
ранговая проверка формулы прямой суммы для идемпотентов.
"""
import logging
from typing import Any, Iterable, Optional

import numpy as np

from ..entities.boolean import BooleanIsomorphism, BooleanRing, RankIdentity
from ..entities.ring import ConcreteRing, RingElement
from ..entities.spectrum import H0Element
from ..exceptions import AxiomViolationError, InvalidElementError, InvariantViolationError
from . import ring_core, spectrum

logger = logging.getLogger(__name__)


def boolean_add(ring: ConcreteRing, e: RingElement, f: RingElement) -> RingElement:
    """e ⊕ f = e + f − 2ef"""
    two_ef = ring_core.mul(ring, ring_core.from_integer(ring, 2), ring_core.mul(ring, e, f))
    return ring_core.sub(ring, ring_core.add(ring, e, f), two_ef)


def boolean_ring_of(ring: ConcreteRing) -> BooleanRing:
    """Полные таблицы ⊕ и · над idempotents(R)"""
    elements = tuple(ring_core.idempotents(ring))
    index = {e: i for i, e in enumerate(elements)}
    size = len(elements)
    add_table = np.zeros((size, size), dtype=np.int64)
    mul_table = np.zeros((size, size), dtype=np.int64)
    for i, e in enumerate(elements):
        for j, f in enumerate(elements):
            add_table[i, j] = index[boolean_add(ring, e, f)]
            mul_table[i, j] = index[ring_core.mul(ring, e, f)]
    logger.debug(f"B({ring}): {size} идемпотентов")
    return BooleanRing(ring, elements, add_table, mul_table)


def check_boolean_axioms(boolean: BooleanRing) -> None:
    """
    Проверяет аксиомы булева кольца на таблицах.

    Raises:
        AxiomViolationError: Свидетель - тройка индексов или пара
    """
    add_t, mul_t = boolean.add, boolean.mul
    zero = boolean.index(ring_core.zero(boolean.ring))
    one = boolean.index(ring_core.one(boolean.ring))
    size = boolean.order

    if not np.array_equal(add_t, add_t.T):
        raise AxiomViolationError("B(R): ⊕ is not commutative")
    if not np.array_equal(mul_t, mul_t.T):
        raise AxiomViolationError("B(R): · is not commutative")
    if not np.array_equal(add_t[zero], np.arange(size)):
        raise AxiomViolationError("B(R): 0 is not the ⊕ identity")
    if not np.array_equal(mul_t[one], np.arange(size)):
        raise AxiomViolationError("B(R): 1 is not the · identity")
    diagonal = np.arange(size)
    if not np.all(add_t[diagonal, diagonal] == zero):
        raise AxiomViolationError("B(R): e ⊕ e != 0")
    if not np.all(mul_t[diagonal, diagonal] == diagonal):
        raise AxiomViolationError("B(R): e·e != e")

    for i in range(size):
        for j in range(size):
            for k in range(size):
                if add_t[add_t[i, j], k] != add_t[i, add_t[j, k]]:
                    raise AxiomViolationError("B(R): ⊕ is not associative", (i, j, k))
                if mul_t[mul_t[i, j], k] != mul_t[i, mul_t[j, k]]:
                    raise AxiomViolationError("B(R): · is not associative", (i, j, k))
                if mul_t[i, add_t[j, k]] != add_t[mul_t[i, j], mul_t[i, k]]:
                    raise AxiomViolationError("B(R): not distributive", (i, j, k))


def b_iso_h0units(ring: ConcreteRing) -> BooleanIsomorphism:
    """
    e ↦ φ_e вместе с проверенным обратным отображением.

    Raises:
        InvariantViolationError: Отображение не биекция или не гомоморфизм
    """
    boolean = boolean_ring_of(ring)
    iso = BooleanIsomorphism(ring, tuple((e, spectrum.phi_e(ring, e)) for e in boolean.elements))
    witness = bijection_witness(iso, spectrum.h0_units(ring))
    if witness is not None:
        logger.error(f"φ: B({ring}) -> H0* не биекция: {witness}")
        raise InvariantViolationError("b-h0-units.bijective", witness)

    for e in boolean.elements:
        if spectrum.phi_inverse(ring, iso.forward(e)) != e:
            raise InvariantViolationError("b-h0-units.inverse", ring_core.render_element(ring, e))
        for f in boolean.elements:
            if iso.forward(boolean.plus(e, f)) != iso.forward(e) * iso.forward(f):
                raise InvariantViolationError(
                    "b-h0-units.homomorphism",
                    (ring_core.render_element(ring, e), ring_core.render_element(ring, f)),
                )
    return iso


def bijection_witness(iso: BooleanIsomorphism, units: Iterable[H0Element]) -> Optional[dict[str, Any]]:
    """
    Проверка φ как биекции на H₀(R)*.

    Returns:
        None, если φ инъективно и его образ равен units; иначе недостающие,
        лишние единицы и число склеек
    """
    target = frozenset(units)
    if iso.is_injective and iso.image == target:
        return None
    return {
        "missing": sorted(str(u) for u in target - iso.image),
        "extra": sorted(str(u) for u in iso.image - target),
        "collisions": len(iso.pairs) - len(iso.image),
    }


def _rank(ring: ConcreteRing, e: RingElement) -> tuple[int, ...]:
    """Вектор рангов модуля Re"""
    return spectrum.support(ring, e)


def _quotient_rank(ring: ConcreteRing, e: RingElement, f: RingElement) -> tuple[int, ...]:
    """Ранги Re/Re(1−f) = rank(Re) − rank(Re(1−f))"""
    complement = ring_core.sub(ring, ring_core.one(ring), f)
    sub_module = ring_core.mul(ring, e, complement)
    return tuple(a - b for a, b in zip(_rank(ring, e), _rank(ring, sub_module)))


def _vector_sum(*vectors: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(values) for values in zip(*vectors))


def idempotent_formula_check(ring: ConcreteRing, e: RingElement, f: RingElement) -> RankIdentity:
    """
    Re ⊕ Re′ ≅ Re/Re(1−e′) ⊕ Re′/Re′(1−e) ⊕ R(e ⊕ e′) на уровне векторов рангов.
    Над произведением локальных колец равенство рангов означает изоморфизм.
    """
    ring_core.require_idempotent(ring, e)
    ring_core.require_idempotent(ring, f)
    lhs = _vector_sum(_rank(ring, e), _rank(ring, f))
    rhs = _vector_sum(
        _quotient_rank(ring, e, f),
        _quotient_rank(ring, f, e),
        _rank(ring, boolean_add(ring, e, f)),
    )
    return RankIdentity("idem-formula", lhs, rhs)


def split_check(ring: ConcreteRing, e: RingElement, f: RingElement) -> RankIdentity:
    """Re ≅ Re(1−e′) ⊕ Re/Re(1−e′)"""
    ring_core.require_idempotent(ring, e)
    ring_core.require_idempotent(ring, f)
    complement = ring_core.sub(ring, ring_core.one(ring), f)
    rhs = _vector_sum(_rank(ring, ring_core.mul(ring, e, complement)), _quotient_rank(ring, e, f))
    return RankIdentity("split", _rank(ring, e), rhs)


def orthogonal_sum_check(ring: ConcreteRing, e: RingElement, f: RingElement) -> RankIdentity:
    """
    R(e + e′) ≅ Re ⊕ Re′ для ортогональных идемпотентов.

    Raises:
        InvalidElementError: e·e′ ≠ 0
    """
    ring_core.require_idempotent(ring, e)
    ring_core.require_idempotent(ring, f)
    if not ring_core.is_zero(ring_core.mul(ring, e, f)):
        raise InvalidElementError("idempotents are not orthogonal")
    lhs = _rank(ring, ring_core.add(ring, e, f))
    return RankIdentity("orthogonal-sum", lhs, _vector_sum(_rank(ring, e), _rank(ring, f)))


def involution_square(ring: ConcreteRing, e: RingElement) -> RingElement:
    """(1 − 2e)²; для идемпотента равно 1"""
    u = ring_core.sub(ring, ring_core.one(ring), ring_core.mul(ring, ring_core.from_integer(ring, 2), e))
    return ring_core.mul(ring, u, u)
