"""
Компоненты связности Spec(R) и кольцо H₀(R) ≅ ℤ^c.
"""
import itertools
import logging

from ..entities.ring import ConcreteRing, ResidueElement, RingElement, RingMorphism
from ..entities.spectrum import ComponentDecomposition, H0Element
from ..exceptions import InvalidElementError, RingSpecError
from . import ring_core

logger = logging.getLogger(__name__)


def component_decomposition(ring: ConcreteRing) -> ComponentDecomposition:
    """
    Примитивные идемпотенты в порядке локальных факторов.
    Над квадратичным порядком спектр связен: единственная компонента [1].
    """
    if not ring.is_finite:
        return ComponentDecomposition(ring, (ring_core.one(ring),))
    c = len(ring.factors)
    components = tuple(
        ResidueElement(tuple(1 if i == j else 0 for j in range(c)))
        for i in range(c)
    )
    return ComponentDecomposition(ring, components)


def support(ring: ConcreteRing, e: RingElement) -> tuple[int, ...]:
    """0/1-вектор компонент, на которых e ≠ 0"""
    ring_core.validate_element(ring, e)
    decomposition = component_decomposition(ring)
    return tuple(
        0 if ring_core.is_zero(ring_core.mul(ring, e, component)) else 1
        for component in decomposition.components
    )


def from_support(ring: ConcreteRing, bits: tuple[int, ...]) -> RingElement:
    """Идемпотент, равный 1 ровно на отмеченных компонентах"""
    decomposition = component_decomposition(ring)
    if len(bits) != len(decomposition):
        raise InvalidElementError(f"support vector {bits} has wrong length for {ring}")
    result = ring_core.zero(ring)
    for bit, component in zip(bits, decomposition.components):
        if bit:
            result = ring_core.add(ring, result, component)
    return result


def constant(ring: ConcreteRing, n: int) -> H0Element:
    return H0Element((n,) * ring.component_count)


def h0_arith(ring: ConcreteRing, op: str, f: H0Element, g: H0Element) -> H0Element:
    """
    Поточечная арифметика H₀(R): op ∈ {add, mul, neg}.

    Raises:
        InvalidElementError: Длины векторов не совпадают с числом компонент
    """
    c = ring.component_count
    for value in (f, g):
        if len(value) != c:
            raise InvalidElementError(f"H0 element {value} has {len(value)} values, {ring} has {c} components")
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "neg":
        return -f
    raise RingSpecError(f"unknown H0 operation {op!r}")


def h0_units(ring: ConcreteRing) -> list[H0Element]:
    """Все {±1}-векторы: 2^c единиц"""
    return [
        H0Element(values)
        for values in itertools.product((1, -1), repeat=ring.component_count)
    ]


def phi_e(ring: ConcreteRing, e: RingElement) -> H0Element:
    """
    φ_e(p) = 1, если e ∈ p, и −1 иначе; на компоненте i это значит e·eᵢ = 0.

    Raises:
        InvalidElementError: e не идемпотент
    """
    ring_core.require_idempotent(ring, e)
    return H0Element(tuple(-1 if bit else 1 for bit in support(ring, e)))


def phi_inverse(ring: ConcreteRing, unit: H0Element) -> RingElement:
    """Обратное к φ: идемпотент, обращающийся в ноль ровно там, где значение 1"""
    if not unit.is_unit or len(unit) != ring.component_count:
        raise InvalidElementError(f"{unit} is not a unit of H0({ring})")
    return from_support(ring, tuple(1 if v == -1 else 0 for v in unit.values))


def h0_pullback(morphism: RingMorphism, value: H0Element) -> H0Element:
    """
    H₀(f): H₀(R) → H₀(R′), v ↦ v∘f*.
    Компонента j кольца R′ лежит над компонентой assignment[j] кольца R.
    """
    if len(value) != morphism.source.component_count:
        raise InvalidElementError(f"{value} is not an element of H0({morphism.source})")
    return H0Element(tuple(value.values[i] for i in morphism.assignment))
