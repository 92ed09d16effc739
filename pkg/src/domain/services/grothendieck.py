"""
Пополнение Гротендика коммутативных моноидов и полуколец.

Два режима:
- конечный перебор: [p, q] ~ [p′, q′] ⇔ ∃s: p + q′ + s = p′ + q + s
- сокращение: [p, q] ~ [p′, q′] ⇔ p + q′ = p′ + q (бесконечные моноиды с разрешимым равенством)
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Any, Callable, Generic, Iterable, Optional, Sequence, TypeVar

import numpy as np

from ...config.settings import get_settings
from ..entities.group import FiniteAbelianGroup
from ..entities.monoid import FiniteMonoid, FiniteSemiring, GrothElement
from ..exceptions import AxiomViolationError
from ..interfaces.algebra import CancellativeMonoidProtocol, CancellativeSemiringProtocol, TargetRingProtocol
from . import finite_groups

logger = logging.getLogger(__name__)

T = TypeVar("T")
V = TypeVar("V")


# ============================================================================
# Проверка таблиц
# ============================================================================

def _check_table_shape(name: str, table: np.ndarray, size: int) -> None:
    if table.shape != (size, size):
        raise AxiomViolationError(f"{name} table must be {size}x{size}, got {table.shape}")
    if size and (table.min() < 0 or table.max() >= size):
        raise AxiomViolationError(f"{name} table has entries outside 0..{size - 1}")


def _check_commutative_monoid(name: str, table: np.ndarray, unit: int) -> None:
    size = table.shape[0]
    if not np.array_equal(table, table.T):
        i, j = (int(v) for v in np.argwhere(table != table.T)[0])
        raise AxiomViolationError(f"{name} is not commutative", (i, j))
    if not np.array_equal(table[unit], np.arange(size)):
        j = int(np.argwhere(table[unit] != np.arange(size))[0][0])
        raise AxiomViolationError(f"{name} identity fails", (unit, j))
    idx = np.arange(size)
    left = table[table[:, :, None], idx[None, None, :]]
    right = table[idx[:, None, None], table[None, :, :]]
    if not np.array_equal(left, right):
        i, j, k = (int(v) for v in np.argwhere(left != right)[0])
        raise AxiomViolationError(f"{name} is not associative", (i, j, k))


def validate_monoid(monoid: FiniteMonoid) -> None:
    """
    Raises:
        AxiomViolationError: Свидетель - нарушающая тройка индексов
    """
    add = np.asarray(monoid.add, dtype=np.int64)
    _check_table_shape("add", add, monoid.size)
    _check_commutative_monoid("addition", add, monoid.zero)


def validate_semiring(semiring: FiniteSemiring) -> None:
    """Аксиомы полукольца: дистрибутивность и x·0 = 0 вдобавок к моноидам"""
    validate_monoid(semiring)
    add = np.asarray(semiring.add, dtype=np.int64)
    mul = np.asarray(semiring.mul, dtype=np.int64)
    _check_table_shape("mul", mul, semiring.size)
    _check_commutative_monoid("multiplication", mul, semiring.one)
    if not np.all(mul[:, semiring.zero] == semiring.zero):
        i = int(np.argwhere(mul[:, semiring.zero] != semiring.zero)[0][0])
        raise AxiomViolationError("x*0 != 0", (i, semiring.zero))
    idx = np.arange(semiring.size)
    lhs = mul[idx[:, None, None], add[None, :, :]]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    if not np.array_equal(lhs, rhs):
        i, j, k = (int(v) for v in np.argwhere(lhs != rhs)[0])
        raise AxiomViolationError("multiplication does not distribute over addition", (i, j, k))


# ============================================================================
# Конечный режим
# ============================================================================

@dataclass
class FiniteCompletion:
    """
    G(M) конечного моноида: нормальная форма пары - лексикографически
    наименьшая эквивалентная пара индексов.
    """
    monoid: FiniteMonoid
    normal_forms: dict[tuple[int, int], tuple[int, int]]
    group: FiniteAbelianGroup[GrothElement[int]]
    mul_table: Optional[np.ndarray] = None

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def is_zero_ring(self) -> bool:
        return self.mul_table is not None and self.group.order == 1

    def cls(self, p: int, q: int) -> GrothElement[int]:
        return GrothElement(*self.normal_forms[(p, q)])

    def gamma(self, a: int) -> GrothElement[int]:
        """γ: M → G(M), a ↦ [a, 0]"""
        return self.cls(a, self.monoid.zero)

    def add(self, x: GrothElement[int], y: GrothElement[int]) -> GrothElement[int]:
        m = self.monoid
        return self.cls(m.plus(x.p, y.p), m.plus(x.q, y.q))

    def neg(self, x: GrothElement[int]) -> GrothElement[int]:
        return self.cls(x.q, x.p)

    def mul(self, x: GrothElement[int], y: GrothElement[int]) -> GrothElement[int]:
        """[a, b]·[c, d] = [ac + bd, ad + bc]"""
        if self.mul_table is None:
            raise AxiomViolationError(f"{self.monoid.name} has no multiplication")
        return _pair_product(self.monoid, self.mul_table, self.normal_forms, x.p, x.q, y.p, y.q)

    @property
    def one(self) -> GrothElement[int]:
        assert isinstance(self.monoid, FiniteSemiring)
        return self.gamma(self.monoid.one)

    def render(self, x: GrothElement[int]) -> str:
        names = self.monoid.elements
        return f"[{names[x.p]}, {names[x.q]}]"


def _pair_product(monoid: FiniteMonoid, mul: np.ndarray, normal_forms: dict[tuple[int, int], tuple[int, int]],
                  a: int, b: int, c: int, d: int) -> GrothElement[int]:
    p = monoid.plus(int(mul[a, c]), int(mul[b, d]))
    q = monoid.plus(int(mul[a, d]), int(mul[b, c]))
    return GrothElement(*normal_forms[(p, q)])


def _normal_forms(monoid: FiniteMonoid) -> dict[tuple[int, int], tuple[int, int]]:
    """
    Для каждой пары (p, q) ищется первая в лексикографическом порядке пара (p′, q′)
    с p + q′ + s = p′ + q + s для некоторого s; перебор векторизован по (p′, q′, s).
    """
    add = np.asarray(monoid.add, dtype=np.int64)
    size = monoid.size
    result: dict[tuple[int, int], tuple[int, int]] = {}
    for p, q in itertools.product(range(size), repeat=2):
        # left[q′, s] = p + q′ + s, right[p′, s] = p′ + q + s
        left = add[add[p, :], :]
        right = add[add[:, q], :]
        equivalent = (right[:, None, :] == left[None, :, :]).any(axis=2)
        flat = int(np.argmax(equivalent))
        result[(p, q)] = divmod(flat, size)
    return result


def groth_completion(monoid: FiniteMonoid) -> FiniteCompletion:
    """
    Группа Гротендика конечного моноида.

    Raises:
        AxiomViolationError: Таблица нарушает аксиомы моноида или слишком велика
    """
    limit = get_settings().max_monoid_size
    if monoid.size > limit:
        raise AxiomViolationError(f"monoid has {monoid.size} elements, limit is {limit}")
    validate_monoid(monoid)
    normal_forms = _normal_forms(monoid)
    classes = sorted(set(normal_forms.values()))
    elements = [GrothElement(p, q) for p, q in classes]
    zero = GrothElement(*normal_forms[(monoid.zero, monoid.zero)])

    def op(x: GrothElement[int], y: GrothElement[int]) -> GrothElement[int]:
        return GrothElement(*normal_forms[(monoid.plus(x.p, y.p), monoid.plus(x.q, y.q))])

    group = finite_groups.build_group(f"G({monoid.name})", elements, op, zero)
    logger.info(f"G({monoid.name}): {monoid.size} элементов -> группа порядка {group.order}")
    return FiniteCompletion(monoid, normal_forms, group)


def groth_ring(semiring: FiniteSemiring) -> FiniteCompletion:
    """
    Кольцо Гротендика конечного полукольца; корректность умножения
    проверяется на всех представителях классов.

    Raises:
        AxiomViolationError: Нарушены аксиомы полукольца или умножение некорректно
    """
    validate_semiring(semiring)
    completion = groth_completion(semiring)
    mul = np.asarray(semiring.mul, dtype=np.int64)
    normal_forms = completion.normal_forms

    representatives: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for pair, nf in normal_forms.items():
        representatives.setdefault(nf, []).append(pair)

    for x_nf, y_nf in itertools.product(representatives, repeat=2):
        expected = _pair_product(semiring, mul, normal_forms, *x_nf, *y_nf)
        for (a, b), (c, d) in itertools.product(representatives[x_nf], representatives[y_nf]):
            actual = _pair_product(semiring, mul, normal_forms, a, b, c, d)
            if actual != expected:
                raise AxiomViolationError("multiplication is not well defined on classes", ((a, b), (c, d)))

    completion.mul_table = mul
    return completion


# ============================================================================
# Режим сокращения
# ============================================================================

class CancellativeCompletion(Generic[T]):
    """
    G(S) моноида или полукольца с сокращением; элементы - пары [p, q],
    равенство p + q′ = p′ + q.
    """

    def __init__(self, monoid: CancellativeMonoidProtocol[T]):
        self.monoid = monoid
        self.name = f"G({monoid.name})"

    @property
    def zero(self) -> GrothElement[T]:
        return GrothElement(self.monoid.zero, self.monoid.zero)

    @property
    def one(self) -> GrothElement[T]:
        return GrothElement(self._semiring.one, self.monoid.zero)

    @property
    def _semiring(self) -> CancellativeSemiringProtocol[T]:
        if not hasattr(self.monoid, "mul"):
            raise AxiomViolationError(f"{self.monoid.name} has no multiplication")
        return self.monoid  # type: ignore[return-value]

    def gamma(self, a: T) -> GrothElement[T]:
        return GrothElement(a, self.monoid.zero)

    def add(self, x: GrothElement[T], y: GrothElement[T]) -> GrothElement[T]:
        m = self.monoid
        return GrothElement(m.add(x.p, y.p), m.add(x.q, y.q))

    def neg(self, x: GrothElement[T]) -> GrothElement[T]:
        return GrothElement(x.q, x.p)

    def mul(self, x: GrothElement[T], y: GrothElement[T]) -> GrothElement[T]:
        """[a, b]·[c, d] = [ac + bd, ad + bc]"""
        s = self._semiring
        return GrothElement(
            s.add(s.mul(x.p, y.p), s.mul(x.q, y.q)),
            s.add(s.mul(x.p, y.q), s.mul(x.q, y.p)),
        )

    def equal(self, x: GrothElement[T], y: GrothElement[T]) -> bool:
        m = self.monoid
        return m.equal(m.add(x.p, y.q), m.add(y.p, x.q))

    def sample_pairs(self, bound: int) -> list[GrothElement[T]]:
        items = list(self.monoid.sample(bound))
        return [GrothElement(p, q) for p in items for q in items]


def check_semiring_sample(semiring: CancellativeSemiringProtocol[T], bound: int) -> None:
    """
    Аксиомы полукольца на конечной выборке.

    Raises:
        AxiomViolationError: Свидетель - тройка элементов
    """
    items = list(semiring.sample(bound))
    eq = semiring.equal
    for a in items:
        if not eq(semiring.add(a, semiring.zero), a) or not eq(semiring.mul(a, semiring.one), a):
            raise AxiomViolationError("identity fails", (a,))
        if not eq(semiring.mul(a, semiring.zero), semiring.zero):
            raise AxiomViolationError("x*0 != 0", (a,))
    for a, b in itertools.product(items, repeat=2):
        if not eq(semiring.add(a, b), semiring.add(b, a)) or not eq(semiring.mul(a, b), semiring.mul(b, a)):
            raise AxiomViolationError("not commutative", (a, b))
    for a, b, c in itertools.product(items[:8], repeat=3):
        if not eq(semiring.mul(a, semiring.add(b, c)), semiring.add(semiring.mul(a, b), semiring.mul(a, c))):
            raise AxiomViolationError("not distributive", (a, b, c))
        if not eq(semiring.add(semiring.add(a, b), c), semiring.add(a, semiring.add(b, c))):
            raise AxiomViolationError("addition not associative", (a, b, c))
        if not eq(semiring.mul(semiring.mul(a, b), c), semiring.mul(a, semiring.mul(b, c))):
            raise AxiomViolationError("multiplication not associative", (a, b, c))


def cancellative_completion(monoid: CancellativeMonoidProtocol[T]) -> CancellativeCompletion[T]:
    return CancellativeCompletion(monoid)


def cancellative_ring(semiring: CancellativeSemiringProtocol[T]) -> CancellativeCompletion[T]:
    """
    Кольцо Гротендика полукольца с сокращением; аксиомы и корректность
    умножения проверяются на выборке.
    """
    bound = get_settings().semiring_sample_bound
    check_semiring_sample(semiring, bound)
    completion = CancellativeCompletion(semiring)
    pairs = completion.sample_pairs(min(bound, 4))
    for x, x2 in itertools.product(pairs, repeat=2):
        if not completion.equal(x, x2):
            continue
        for y in pairs[:16]:
            if not completion.equal(completion.mul(x, y), completion.mul(x2, y)):
                raise AxiomViolationError("multiplication is not well defined on classes", (x, x2, y))
    return completion


# ============================================================================
# Универсальное свойство
# ============================================================================

@dataclass
class UniversalExtension(Generic[T, V]):
    """θ: G(S) → R с θ∘γ = φ"""
    target: TargetRingProtocol[V]
    phi: Callable[[T], V]

    def __call__(self, element: GrothElement[T]) -> V:
        return self.target.add(self.phi(element.p), self.target.neg(self.phi(element.q)))


def _check_phi(elements: Sequence[T], zero: T, one: Optional[T], add: Callable[[T, T], T],
               mul: Optional[Callable[[T, T], T]], target: TargetRingProtocol[V],
               phi: Callable[[T], V]) -> None:
    if not target.equal(phi(zero), target.zero):
        raise AxiomViolationError("phi(0) != 0", (zero,))
    if one is not None and not target.equal(phi(one), target.one):
        raise AxiomViolationError("phi(1) != 1", (one,))
    for a, b in itertools.product(elements, repeat=2):
        if not target.equal(phi(add(a, b)), target.add(phi(a), phi(b))):
            raise AxiomViolationError("phi is not additive", (a, b))
        if mul is not None and not target.equal(phi(mul(a, b)), target.mul(phi(a), phi(b))):
            raise AxiomViolationError("phi is not multiplicative", (a, b))


def universal_extend_finite(completion: FiniteCompletion, target: TargetRingProtocol[V],
                            phi: Callable[[int], V]) -> UniversalExtension[int, V]:
    """
    θ([a, b]) = φ(a) − φ(b) для конечного полукольца.

    Raises:
        AxiomViolationError: φ не морфизм полуколец или θ не согласован с классами
    """
    monoid = completion.monoid
    one = monoid.one if isinstance(monoid, FiniteSemiring) else None
    mul = monoid.times if isinstance(monoid, FiniteSemiring) and monoid.mul else None
    _check_phi(list(range(monoid.size)), monoid.zero, one, monoid.plus, mul, target, phi)

    theta: UniversalExtension[int, V] = UniversalExtension(target, phi)
    for (p, q), (a, b) in completion.normal_forms.items():
        if not target.equal(theta(GrothElement(p, q)), theta(GrothElement(a, b))):
            raise AxiomViolationError("theta is not constant on classes", ((p, q), (a, b)))
    for a in range(monoid.size):
        if not target.equal(theta(completion.gamma(a)), phi(a)):
            raise AxiomViolationError("theta∘gamma != phi", (a,))
    return theta


def universal_extend(semiring: CancellativeSemiringProtocol[T], target: TargetRingProtocol[V],
                     phi: Callable[[T], V], bound: Optional[int] = None) -> UniversalExtension[T, V]:
    """
    θ([a, b]) = φ(a) − φ(b) для полукольца с сокращением; проверки на выборке.
    """
    bound = bound if bound is not None else get_settings().semiring_sample_bound
    elements = list(semiring.sample(bound))
    _check_phi(elements, semiring.zero, semiring.one, semiring.add, semiring.mul, target, phi)

    theta: UniversalExtension[T, V] = UniversalExtension(target, phi)
    completion = CancellativeCompletion(semiring)
    for a in elements:
        if not target.equal(theta(completion.gamma(a)), phi(a)):
            raise AxiomViolationError("theta∘gamma != phi", (a,))
    return theta


def check_ring_morphism(pairs: Iterable[Any], add: Callable[[Any, Any], Any], mul: Callable[[Any, Any], Any],
                        image: Callable[[Any], Any], target: TargetRingProtocol[V]) -> Optional[tuple[Any, Any]]:
    """Первая пара, на которой image не аддитивно или не мультипликативно (или None)"""
    items = list(pairs)
    for x, y in itertools.product(items, repeat=2):
        if not target.equal(image(add(x, y)), target.add(image(x), image(y))):
            return x, y
        if not target.equal(image(mul(x, y)), target.mul(image(x), image(y))):
            return x, y
    return None
