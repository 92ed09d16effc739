"""
Конечная абелева группа, заданная таблицей Кэли.
Используется для Cl(R), Pic(R), K₀(R)*, B(R) и пополнений конечных моноидов.
"""
from dataclasses import dataclass
from typing import Generic, Hashable, Sequence, TypeVar

T = TypeVar("T", bound=Hashable)


@dataclass(frozen=True)
class FiniteAbelianGroup(Generic[T]):
    """
    Группа элементов с таблицей операции по индексам.

    elements[identity] - нейтральный элемент; table[i][j] - индекс произведения.
    elementary_divisors - инвариантные множители d₁ | d₂ | ... (пусто для тривиальной).
    """
    name: str
    elements: tuple[T, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int
    elementary_divisors: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def index(self, element: T) -> int:
        return self.elements.index(element)

    def op(self, left: T, right: T) -> T:
        return self.elements[self.table[self.index(left)][self.index(right)]]

    def inverse(self, element: T) -> T:
        i = self.index(element)
        for j, product in enumerate(self.table[i]):
            if product == self.identity:
                return self.elements[j]
        raise ValueError(f"element {element!r} has no inverse")

    def structure(self) -> str:
        """Запись вида ℤ/2 × ℤ/4 (или 0)"""
        return format_structure(self.elementary_divisors)


def format_structure(divisors: Sequence[int]) -> str:
    if not divisors:
        return "0"
    return " x ".join(f"Z/{d}" for d in divisors)
