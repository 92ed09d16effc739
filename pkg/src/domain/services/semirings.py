"""
Конкретные полукольца с сокращением и кольца-приёмники для движка Гротендика.

- NaturalNumbers: (ℕ, +, ·)
- RankVectorSemiring / SteinitzSemiring: классы проективных модулей по ⊕ и ⊗
- IntegerRing, ConcreteRingTarget, K0Target, H0Target: приёмники универсального свойства
"""
import itertools
import logging
import random
from typing import Iterable

from ...config.settings import get_settings
from ..entities.k0 import K0Element, K0Ring
from ..entities.module import ProjModule
from ..entities.ring import ConcreteRing, RingElement, RingKind
from ..entities.spectrum import H0Element
from ..exceptions import UnsupportedOperationError
from . import class_groups, modules, ring_core, spectrum

logger = logging.getLogger(__name__)


class NaturalNumbers:
    """Полукольцо (ℕ, +, ·)"""

    name = "N"
    cancellative = True

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, left: int, right: int) -> int:
        return left + right

    def mul(self, left: int, right: int) -> int:
        return left * right

    def equal(self, left: int, right: int) -> bool:
        return left == right

    def sample(self, bound: int) -> Iterable[int]:
        return range(bound + 1)


class ProjectiveClassSemiring:
    """
    S(R): классы изоморфизма конечно порождённых проективных модулей.
    Сокращение выполняется: оба семейства классифицируются полными инвариантами.
    """

    cancellative = True

    def __init__(self, ring: ConcreteRing):
        self.ring = ring
        self.name = f"S({ring})"
        self.logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    @property
    def zero(self) -> ProjModule:
        return modules.zero_module(self.ring)

    @property
    def one(self) -> ProjModule:
        return modules.free(self.ring, 1)

    def add(self, left: ProjModule, right: ProjModule) -> ProjModule:
        return modules.direct_sum(left, right)

    def mul(self, left: ProjModule, right: ProjModule) -> ProjModule:
        return modules.tensor(left, right)

    def equal(self, left: ProjModule, right: ProjModule) -> bool:
        return left == right

    def sample(self, bound: int) -> Iterable[ProjModule]:
        raise NotImplementedError


class RankVectorSemiring(ProjectiveClassSemiring):
    """Векторы рангов над конечным произведением: S(R) ≅ ℕ^c"""

    def __init__(self, ring: ConcreteRing):
        if ring.kind is RingKind.QUAD_ORDER:
            raise UnsupportedOperationError(f"{ring} needs Steinitz classes, not bare rank vectors")
        super().__init__(ring)

    def sample(self, bound: int) -> list[ProjModule]:
        """
        Все векторы с координатами < bound, если их не больше лимита,
        иначе 0, 1, единичные векторы и детерминированная случайная добавка.
        """
        settings = get_settings()
        c = self.ring.component_count
        limit = settings.semiring_sample_bound
        if bound ** c <= limit:
            return [modules.make_module(self.ring, ranks) for ranks in itertools.product(range(bound), repeat=c)]

        chosen: list[tuple[int, ...]] = [(0,) * c, (1,) * c]
        chosen += [tuple(1 if i == j else 0 for j in range(c)) for i in range(c)]
        rng = random.Random(settings.random_seed)
        while len(chosen) < limit:
            candidate = tuple(rng.randrange(bound) for _ in range(c))
            if candidate not in chosen:
                chosen.append(candidate)
        self.logger.debug(f"Выборка из {len(chosen)} векторов рангов для {self.ring}")
        return [modules.make_module(self.ring, ranks) for ranks in chosen[:limit]]


class SteinitzSemiring(ProjectiveClassSemiring):
    """Пары Штейница (n, c) над O(D)"""

    def __init__(self, ring: ConcreteRing):
        if ring.kind is not RingKind.QUAD_ORDER:
            raise UnsupportedOperationError(f"Steinitz semiring needs a quadratic order, got {ring}")
        super().__init__(ring)

    def sample(self, bound: int) -> list[ProjModule]:
        assert self.ring.discriminant is not None
        forms = class_groups.class_group(self.ring.discriminant).forms
        result = [self.zero]
        for n in range(1, bound):
            result.extend(modules.make_module(self.ring, (n,), cls) for cls in forms)
        return result


def projective_class_semiring(ring: ConcreteRing) -> ProjectiveClassSemiring:
    if ring.kind is RingKind.QUAD_ORDER:
        return SteinitzSemiring(ring)
    return RankVectorSemiring(ring)


# ============================================================================
# Приёмники
# ============================================================================

class IntegerRing:
    name = "Z"

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def add(self, left: int, right: int) -> int:
        return left + right

    def neg(self, value: int) -> int:
        return -value

    def mul(self, left: int, right: int) -> int:
        return left * right

    def equal(self, left: int, right: int) -> bool:
        return left == right


class ConcreteRingTarget:
    """Кольцо из ring_core как приёмник; нулевое кольцо - пустое произведение"""

    def __init__(self, ring: ConcreteRing):
        self.ring = ring
        self.name = str(ring)

    @property
    def zero(self) -> RingElement:
        return ring_core.zero(self.ring)

    @property
    def one(self) -> RingElement:
        return ring_core.one(self.ring)

    def add(self, left: RingElement, right: RingElement) -> RingElement:
        return ring_core.add(self.ring, left, right)

    def neg(self, value: RingElement) -> RingElement:
        return ring_core.neg(self.ring, value)

    def mul(self, left: RingElement, right: RingElement) -> RingElement:
        return ring_core.mul(self.ring, left, right)

    def equal(self, left: RingElement, right: RingElement) -> bool:
        return left == right

    def from_integer(self, value: int) -> RingElement:
        return ring_core.from_integer(self.ring, value)


class K0Target:
    """Замкнутая форма K₀(R) как кольцо-приёмник"""

    def __init__(self, k0: K0Ring):
        self.k0 = k0
        self.name = f"K0({k0.base})"

    @property
    def zero(self) -> K0Element:
        return self.k0.zero

    @property
    def one(self) -> K0Element:
        return self.k0.one

    def add(self, left: K0Element, right: K0Element) -> K0Element:
        return self.k0.add(left, right)

    def neg(self, value: K0Element) -> K0Element:
        return self.k0.neg(value)

    def mul(self, left: K0Element, right: K0Element) -> K0Element:
        return self.k0.mul(left, right)

    def equal(self, left: K0Element, right: K0Element) -> bool:
        return left == right


class H0Target:
    """H₀(R) ≅ ℤ^c с поточечными операциями"""

    def __init__(self, ring: ConcreteRing):
        self.ring = ring
        self.name = f"H0({ring})"

    @property
    def zero(self) -> H0Element:
        return spectrum.constant(self.ring, 0)

    @property
    def one(self) -> H0Element:
        return spectrum.constant(self.ring, 1)

    def add(self, left: H0Element, right: H0Element) -> H0Element:
        return left + right

    def neg(self, value: H0Element) -> H0Element:
        return -value

    def mul(self, left: H0Element, right: H0Element) -> H0Element:
        return left * right

    def equal(self, left: H0Element, right: H0Element) -> bool:
        return left == right
