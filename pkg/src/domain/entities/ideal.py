"""
Дробные идеалы мнимых квадратичных порядков и приведённые бинарные квадратичные формы.
"""
from dataclasses import dataclass
from fractions import Fraction

from .group import FiniteAbelianGroup


@dataclass(frozen=True)
class FractionalIdeal:
    """
    Дробный идеал content · (aℤ + (b + ω)ℤ) в нормальной форме Эрмита.

    Инварианты: a > 0, 0 ≤ b < a, a | N(b + ω), content > 0.
    """
    discriminant: int
    a: int
    b: int
    content: Fraction = Fraction(1)

    @property
    def denominator(self) -> int:
        return self.content.denominator

    @property
    def norm(self) -> Fraction:
        return self.content * self.content * self.a

    @property
    def is_integral(self) -> bool:
        return self.content.denominator == 1

    def __str__(self) -> str:
        text = f"ideal({self.a}, {self.b})"
        if self.content != 1:
            text = f"{self.content}*{text}"
        return text


@dataclass(frozen=True, order=True)
class QuadForm:
    """Примитивная положительно определённая форма ax² + bxy + cy²"""
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_reduced(self) -> bool:
        if not abs(self.b) <= self.a <= self.c:
            return False
        if abs(self.b) == self.a or self.a == self.c:
            return self.b >= 0
        return True

    def __str__(self) -> str:
        return f"form({self.a},{self.b},{self.c})"


# Класс идеалов представляется приведённой формой
IdealClass = QuadForm


@dataclass(frozen=True)
class ClassGroup:
    """Cl(D): приведённые формы и таблица композиции"""
    discriminant: int
    group: FiniteAbelianGroup[QuadForm]

    @property
    def forms(self) -> tuple[QuadForm, ...]:
        return self.group.elements

    @property
    def class_number(self) -> int:
        return self.group.order

    @property
    def elementary_divisors(self) -> tuple[int, ...]:
        return self.group.elementary_divisors

    @property
    def identity(self) -> QuadForm:
        return self.group.elements[self.group.identity]

    def compose(self, left: QuadForm, right: QuadForm) -> QuadForm:
        return self.group.op(left, right)

    def inverse(self, form: QuadForm) -> QuadForm:
        return self.group.inverse(form)

    def power(self, form: QuadForm, exponent: int) -> QuadForm:
        """form^exponent (отрицательная степень через обратный элемент)"""
        base = form if exponent >= 0 else self.inverse(form)
        result = self.identity
        for _ in range(abs(exponent) % self.class_number if self.class_number else 0):
            result = self.compose(result, base)
        return result
