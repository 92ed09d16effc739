"""
Протоколы алгебраических структур для движка пополнения Гротендика.
Бесконечные моноиды (ℕ, векторы рангов, пары Штейница) подключаются через них
в режиме сокращения: [p, q] = [p′, q′] ⇔ p + q′ = p′ + q.
"""
from typing import Iterable, Protocol, TypeVar

T = TypeVar("T")
V = TypeVar("V")


class CancellativeMonoidProtocol(Protocol[T]):
    """
    Коммутативный моноид с сокращением и разрешимым равенством.
    """

    name: str

    @property
    def zero(self) -> T:
        ...

    def add(self, left: T, right: T) -> T:
        ...

    def equal(self, left: T, right: T) -> bool:
        ...

    def sample(self, bound: int) -> Iterable[T]:
        """
        Конечная выборка элементов для проверки аксиом.

        Args:
            bound: Граница «размера» элементов выборки

        Returns:
            Детерминированный список элементов
        """
        ...


class CancellativeSemiringProtocol(CancellativeMonoidProtocol[T], Protocol[T]):
    """Полукольцо с сокращением по сложению"""

    @property
    def one(self) -> T:
        ...

    def mul(self, left: T, right: T) -> T:
        ...


class TargetRingProtocol(Protocol[V]):
    """
    Кольцо-приёмник для универсального свойства: θ: G(S) → R.
    """

    name: str

    @property
    def zero(self) -> V:
        ...

    @property
    def one(self) -> V:
        ...

    def add(self, left: V, right: V) -> V:
        ...

    def neg(self, value: V) -> V:
        ...

    def mul(self, left: V, right: V) -> V:
        ...

    def equal(self, left: V, right: V) -> bool:
        ...
