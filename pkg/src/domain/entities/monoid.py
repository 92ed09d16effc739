"""
Конечные коммутативные моноиды и полукольца, заданные таблицами,
и элементы их пополнения Гротендика.
"""
from dataclasses import dataclass
from typing import Any, Generic, Optional, TypeVar

T = TypeVar("T")


@dataclass(frozen=True)
class FiniteMonoid:
    """
    Моноид (elements, +) с таблицей add[i][j] по индексам.
    Порядок elements задаёт лексикографический порядок нормальных форм.
    """
    name: str
    elements: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    zero: int

    @property
    def size(self) -> int:
        return len(self.elements)

    def index(self, name: str) -> int:
        return self.elements.index(name)

    def plus(self, i: int, j: int) -> int:
        return self.add[i][j]


@dataclass(frozen=True)
class FiniteSemiring(FiniteMonoid):
    mul: tuple[tuple[int, ...], ...] = ()
    one: int = 0

    def times(self, i: int, j: int) -> int:
        return self.mul[i][j]


@dataclass(frozen=True)
class GrothElement(Generic[T]):
    """Формальная разность [p, q] = p − q"""
    p: T
    q: T

    def __str__(self) -> str:
        return f"[{self.p}, {self.q}]"


@dataclass(frozen=True)
class MonoidDocument:
    """Содержимое файла моноида после валидации"""
    structure: FiniteMonoid
    cancellative: bool = False
    target: Optional[str] = None
    phi: Optional[tuple[Any, ...]] = None

    @property
    def is_semiring(self) -> bool:
        return isinstance(self.structure, FiniteSemiring)
