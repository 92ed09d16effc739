"""
Сущности колец: конечные произведения ℤ/p^k и мнимые квадратичные порядки.
Все значения неизменяемы после создания.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Union


class RingKind(Enum):
    """Семейства поддерживаемых колец"""
    FINITE_PRODUCT = "FiniteProduct"
    QUAD_ORDER = "QuadOrder"
    SEMILOCAL_QUAD_ORDER = "SemilocalQuadOrder"


@dataclass(frozen=True, order=True)
class LocalFactor:
    """Локальный фактор ℤ/p^k"""
    prime: int
    exponent: int

    @property
    def modulus(self) -> int:
        return self.prime ** self.exponent

    def __str__(self) -> str:
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class ConcreteRing:
    """
    Кольцо R, над которым идут все вычисления.

    - FiniteProduct: отсортированный кортеж локальных факторов (пустой - нулевое кольцо)
    - QuadOrder: фундаментальный дискриминант D < 0
    - SemilocalQuadOrder: D и непустое множество простых S
    """
    kind: RingKind
    factors: tuple[LocalFactor, ...] = ()
    discriminant: Optional[int] = None
    localized_primes: frozenset[int] = field(default_factory=frozenset)

    @property
    def is_finite(self) -> bool:
        return self.kind is RingKind.FINITE_PRODUCT

    @property
    def is_quadratic(self) -> bool:
        return self.kind in (RingKind.QUAD_ORDER, RingKind.SEMILOCAL_QUAD_ORDER)

    @property
    def is_zero(self) -> bool:
        """Нулевое кольцо - пустое произведение"""
        return self.is_finite and not self.factors

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(f.modulus for f in self.factors)

    @property
    def order(self) -> Optional[int]:
        """Число элементов (None для бесконечных колец)"""
        if not self.is_finite:
            return None
        result = 1
        for modulus in self.moduli:
            result *= modulus
        return result

    @property
    def component_count(self) -> int:
        """Число компонент связности Spec(R)"""
        return len(self.factors) if self.is_finite else 1

    def __str__(self) -> str:
        if self.is_finite:
            return " x ".join(str(f) for f in self.factors) if self.factors else "0"
        text = f"O({self.discriminant})"
        if self.kind is RingKind.SEMILOCAL_QUAD_ORDER:
            primes = ",".join(str(p) for p in sorted(self.localized_primes))
            text += f" loc {{{primes}}}"
        return text


@dataclass(frozen=True)
class ResidueElement:
    """Элемент конечного произведения: вычет по каждому фактору"""
    residues: tuple[int, ...]


@dataclass(frozen=True)
class QuadraticElement:
    """Элемент x + yω квадратичного порядка (или его полулокализации)"""
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Union[int, Fraction], y: Union[int, Fraction] = 0) -> "QuadraticElement":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    @property
    def is_integral(self) -> bool:
        return self.x.denominator == 1 and self.y.denominator == 1


RingElement = Union[ResidueElement, QuadraticElement]


@dataclass(frozen=True)
class RingMorphism:
    """
    Морфизм конечных произведений.

    assignment[j] - индекс фактора источника, на который «схлопывается»
    j-й фактор цели (то же простое, показатель цели не больше).
    """
    source: ConcreteRing
    target: ConcreteRing
    assignment: tuple[int, ...]
    label: str = "map"

    def __str__(self) -> str:
        return f"{self.label}: {self.source} -> {self.target}"
