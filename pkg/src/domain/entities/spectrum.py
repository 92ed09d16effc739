"""
Компоненты связности Spec(R) и элементы кольца H₀(R) = непрерывные функции Spec(R) → ℤ.
"""
from dataclasses import dataclass

from ..exceptions import InvalidElementError
from .ring import ConcreteRing, RingElement


@dataclass(frozen=True)
class ComponentDecomposition:
    """Примитивные идемпотенты e₁..e_c в порядке локальных факторов"""
    ring: ConcreteRing
    components: tuple[RingElement, ...]

    def __len__(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class H0Element:
    """Локально постоянная функция Spec(R) → ℤ: значение на каждой компоненте"""
    values: tuple[int, ...]

    def __add__(self, other: "H0Element") -> "H0Element":
        _check_length(self, other)
        return H0Element(tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, other: "H0Element") -> "H0Element":
        _check_length(self, other)
        return H0Element(tuple(a * b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "H0Element":
        return H0Element(tuple(-a for a in self.values))

    def __sub__(self, other: "H0Element") -> "H0Element":
        return self + (-other)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def is_unit(self) -> bool:
        return all(v in (1, -1) for v in self.values)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def _check_length(left: H0Element, right: H0Element) -> None:
    if len(left) != len(right):
        raise InvalidElementError(
            f"H0 elements over different decompositions: {left} vs {right}"
        )
