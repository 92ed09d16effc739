"""
Арифметика мнимого квадратичного порядка O_D в базисе {1, ω}.

Минимальный многочлен ω: x² − t·x + n, где
- D ≡ 0 (mod 4): t = 0, n = −D/4      (ω = √(D/4))
- D ≡ 1 (mod 4): t = 1, n = (1 − D)/4 (ω = (1 + √D)/2)
"""
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Union

from sympy import factorint

from ..entities.ring import QuadraticElement
from ..exceptions import InvalidElementError, RingSpecError

Rational = Union[int, Fraction]


def is_fundamental_discriminant(discriminant: int) -> bool:
    """Фундаментальный дискриминант (включая положительные - проверка знака отдельно)"""
    if discriminant in (0, 1):
        return False
    if discriminant % 4 == 1:
        return _is_squarefree(discriminant)
    if discriminant % 4 == 0:
        m = discriminant // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


def _is_squarefree(value: int) -> bool:
    return all(exponent == 1 for exponent in factorint(abs(value)).values())


def validate_discriminant(discriminant: int) -> None:
    if discriminant >= 0:
        raise RingSpecError(f"discriminant must be negative, got {discriminant}")
    if not is_fundamental_discriminant(discriminant):
        raise RingSpecError(f"{discriminant} is not a fundamental discriminant")


@lru_cache(maxsize=None)
def omega_polynomial(discriminant: int) -> tuple[int, int]:
    """Коэффициенты (t, n) многочлена x² − t·x + n"""
    t = discriminant % 2
    return t, (t - discriminant) // 4


def q_add(x: QuadraticElement, y: QuadraticElement) -> QuadraticElement:
    return QuadraticElement(x.x + y.x, x.y + y.y)


def q_neg(x: QuadraticElement) -> QuadraticElement:
    return QuadraticElement(-x.x, -x.y)


def q_sub(x: QuadraticElement, y: QuadraticElement) -> QuadraticElement:
    return QuadraticElement(x.x - y.x, x.y - y.y)


def q_scale(x: QuadraticElement, k: Rational) -> QuadraticElement:
    return QuadraticElement(x.x * k, x.y * k)


def q_mul(discriminant: int, x: QuadraticElement, y: QuadraticElement) -> QuadraticElement:
    """(a + bω)(c + dω) = (ac − n·bd) + (ad + bc + t·bd)ω"""
    t, n = omega_polynomial(discriminant)
    bd = x.y * y.y
    return QuadraticElement(x.x * y.x - n * bd, x.x * y.y + x.y * y.x + t * bd)


def q_conj(discriminant: int, x: QuadraticElement) -> QuadraticElement:
    """Сопряжение: ω ↦ t − ω"""
    t, _ = omega_polynomial(discriminant)
    return QuadraticElement(x.x + t * x.y, -x.y)


def q_norm(discriminant: int, x: QuadraticElement) -> Fraction:
    t, n = omega_polynomial(discriminant)
    return x.x * x.x + t * x.x * x.y + n * x.y * x.y


def q_trace(discriminant: int, x: QuadraticElement) -> Fraction:
    t, _ = omega_polynomial(discriminant)
    return 2 * x.x + t * x.y


def q_inv(discriminant: int, x: QuadraticElement) -> QuadraticElement:
    if x.is_zero:
        raise InvalidElementError("zero is not invertible")
    return q_scale(q_conj(discriminant, x), Fraction(1) / q_norm(discriminant, x))


def q_pow(discriminant: int, x: QuadraticElement, exponent: int) -> QuadraticElement:
    if exponent < 0:
        return q_pow(discriminant, q_inv(discriminant, x), -exponent)
    result = QuadraticElement.of(1)
    for _ in range(exponent):
        result = q_mul(discriminant, result, x)
    return result


def q_denominator(x: QuadraticElement) -> int:
    """Общий знаменатель координат"""
    return lcm(x.x.denominator, x.y.denominator)


def render_quadratic(x: QuadraticElement) -> str:
    return f"({x.x}, {x.y})"
