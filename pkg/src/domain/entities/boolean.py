"""
Булево кольцо идемпотентов B(R) и ранговые тождества для модулей вида Re.
"""
from dataclasses import dataclass

import numpy as np

from .ring import ConcreteRing, RingElement
from .spectrum import H0Element


@dataclass(frozen=True, eq=False)
class BooleanRing:
    """
    B(R) с таблицами Кэли по индексам elements:
    add[i, j] - индекс eᵢ ⊕ eⱼ, mul[i, j] - индекс eᵢ·eⱼ.
    """
    ring: ConcreteRing
    elements: tuple[RingElement, ...]
    add: np.ndarray
    mul: np.ndarray

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, e: RingElement) -> int:
        return self.elements.index(e)

    def plus(self, e: RingElement, f: RingElement) -> RingElement:
        return self.elements[int(self.add[self.index(e), self.index(f)])]

    def times(self, e: RingElement, f: RingElement) -> RingElement:
        return self.elements[int(self.mul[self.index(e), self.index(f)])]


@dataclass(frozen=True)
class BooleanIsomorphism:
    """Пары (e, φ_e), проверенные на биективность и перенос групповой операции"""
    ring: ConcreteRing
    pairs: tuple[tuple[RingElement, H0Element], ...]

    @property
    def image(self) -> frozenset[H0Element]:
        return frozenset(unit for _, unit in self.pairs)

    @property
    def is_injective(self) -> bool:
        """Разные идемпотенты переходят в разные единицы"""
        domain = {element for element, _ in self.pairs}
        return len(domain) == len(self.pairs) == len(self.image)

    def forward(self, e: RingElement) -> H0Element:
        for element, unit in self.pairs:
            if element == e:
                return unit
        raise KeyError(e)

    def backward(self, unit: H0Element) -> RingElement:
        for element, value in self.pairs:
            if value == unit:
                return element
        raise KeyError(unit)


@dataclass(frozen=True)
class RankIdentity:
    """Две стороны изоморфизма модулей в виде векторов рангов"""
    name: str
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs
