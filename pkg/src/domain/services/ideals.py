"""
Дробные идеалы мнимого квадратичного порядка в нормальной форме Эрмита.

Идеал хранится как content · (aℤ + (b + ω)ℤ). Нормализация строит матрицу
координат образующих g и g·ω и берёт её HNF (sympy).
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, Optional, Sequence

from sympy import Matrix, mod_inverse, sqrt_mod
from sympy.matrices.normalforms import hermite_normal_form

from ..entities.ideal import FractionalIdeal
from ..entities.ring import QuadraticElement
from ..exceptions import InvalidElementError
from . import quadratic as q

logger = logging.getLogger(__name__)


class Splitting(Enum):
    SPLIT = "split"
    RAMIFIED = "ramified"
    INERT = "inert"


@dataclass(frozen=True)
class PrimeIdeal:
    """
    Простой идеал над рациональным простым p.
    local_element - элемент P, не лежащий в остальных простых над p (β + ω или p).
    """
    ideal: FractionalIdeal
    prime: int
    splitting: Splitting
    local_element: QuadraticElement

    def __str__(self) -> str:
        return f"P({self.prime}; {self.ideal})"


# ============================================================================
# Построение и нормализация
# ============================================================================

def ideal_normalize(discriminant: int, generators: Iterable[QuadraticElement]) -> FractionalIdeal:
    """
    Единственная HNF-тройка для O-модуля, порождённого элементами.

    Raises:
        InvalidElementError: Все образующие нулевые
    """
    gens = [g for g in generators if not g.is_zero]
    if not gens:
        raise InvalidElementError("zero module is not a fractional ideal")

    scale = 1
    for g in gens:
        scale = lcm(scale, q.q_denominator(g))
    omega = QuadraticElement.of(0, 1)

    columns: list[list[int]] = []
    for g in gens:
        integral = q.q_scale(g, scale)
        for element in (integral, q.q_mul(discriminant, integral, omega)):
            columns.append([int(element.x), int(element.y)])

    matrix = Matrix(2, len(columns), lambda i, j: columns[j][i])
    hnf = hermite_normal_form(matrix)
    hnf = hnf[:, hnf.cols - 2:]
    big_a, r, d = int(hnf[0, 0]), int(hnf[0, 1]), int(hnf[1, 1])
    if hnf[1, 0] != 0 or big_a <= 0 or d <= 0:
        # HNF решётки ранга 2 верхнетреугольна: столбцы (A, 0) и (r, d)
        raise InvalidElementError(f"unexpected HNF shape {hnf.tolist()}")

    a = big_a // d
    b = (r // d) % a
    return FractionalIdeal(discriminant, a, b, Fraction(d, scale))


def unit_ideal(discriminant: int) -> FractionalIdeal:
    return FractionalIdeal(discriminant, 1, 0, Fraction(1))


def principal_ideal(discriminant: int, x: QuadraticElement) -> FractionalIdeal:
    return ideal_normalize(discriminant, [x])


def ideal_generators(ideal: FractionalIdeal) -> tuple[QuadraticElement, QuadraticElement]:
    """ℤ-базис: content·a и content·(b + ω)"""
    c = ideal.content
    return QuadraticElement(c * ideal.a, Fraction(0)), QuadraticElement(c * ideal.b, c)


def from_hnf(discriminant: int, a: int, b: int, content: Fraction = Fraction(1)) -> FractionalIdeal:
    """
    Идеал из HNF-тройки с проверкой a | N(b + ω).

    Raises:
        InvalidElementError: Тройка не задаёт идеал порядка
    """
    if a <= 0 or content <= 0:
        raise InvalidElementError(f"ideal({a}, {b}) needs a > 0 and positive content")
    norm = q.q_norm(discriminant, QuadraticElement.of(b, 1))
    if norm % a != 0:
        raise InvalidElementError(f"ideal({a}, {b}) is not an ideal of O({discriminant}): {a} does not divide {norm}")
    return FractionalIdeal(discriminant, a, b % a, Fraction(content))


# ============================================================================
# Арифметика
# ============================================================================

def ideal_mul(left: FractionalIdeal, right: FractionalIdeal) -> FractionalIdeal:
    _check_same_order(left, right)
    d = left.discriminant
    products = [q.q_mul(d, x, y) for x in ideal_generators(left) for y in ideal_generators(right)]
    return ideal_normalize(d, products)


def ideal_conjugate(ideal: FractionalIdeal) -> FractionalIdeal:
    d = ideal.discriminant
    return ideal_normalize(d, [q.q_conj(d, g) for g in ideal_generators(ideal)])


def ideal_inv(ideal: FractionalIdeal) -> FractionalIdeal:
    """(c·P)⁻¹ = P̄ / (c·a), так как P·P̄ = aO"""
    d = ideal.discriminant
    scale = Fraction(1) / (ideal.content * ideal.a)
    conjugate = ideal_conjugate(FractionalIdeal(d, ideal.a, ideal.b))
    return FractionalIdeal(d, conjugate.a, conjugate.b, conjugate.content * scale)


def ideal_pow(ideal: FractionalIdeal, exponent: int) -> FractionalIdeal:
    base = ideal if exponent >= 0 else ideal_inv(ideal)
    result = unit_ideal(ideal.discriminant)
    for _ in range(abs(exponent)):
        result = ideal_mul(result, base)
    return result


def ideal_scale(ideal: FractionalIdeal, factor: Fraction) -> FractionalIdeal:
    """factor·I для положительного рационального factor"""
    return FractionalIdeal(ideal.discriminant, ideal.a, ideal.b, ideal.content * factor)


def ideal_norm(ideal: FractionalIdeal) -> Fraction:
    return ideal.norm


def min_positive_integer(ideal: FractionalIdeal) -> Fraction:
    """Положительная образующая I ∩ ℚ; для целого идеала - неделитель нуля из I"""
    return ideal.content * ideal.a


def contains(ideal: FractionalIdeal, x: QuadraticElement) -> bool:
    """x ∈ c·(aℤ + (b+ω)ℤ) ⇔ x/c = u + vω с v ∈ ℤ и a | u − v·b"""
    u, v = x.x / ideal.content, x.y / ideal.content
    if v.denominator != 1 or u.denominator != 1:
        return False
    return (int(u) - int(v) * ideal.b) % ideal.a == 0


def is_subset(inner: FractionalIdeal, outer: FractionalIdeal) -> bool:
    return all(contains(outer, g) for g in ideal_generators(inner))


def _check_same_order(left: FractionalIdeal, right: FractionalIdeal) -> None:
    if left.discriminant != right.discriminant:
        raise InvalidElementError(
            f"ideals of different orders: O({left.discriminant}) and O({right.discriminant})"
        )


# ============================================================================
# Простые идеалы и нормирования
# ============================================================================

def primes_above(discriminant: int, p: int) -> list[PrimeIdeal]:
    """
    Простые идеалы над p: корни β многочлена β² + tβ + n по модулю p
    дают P = (p, β + ω); при отсутствии корней p инертно и P = pO.
    """
    t, n = q.omega_polynomial(discriminant)
    if p == 2:
        roots = sorted({beta for beta in range(2) if (beta * beta + t * beta + n) % 2 == 0})
    else:
        square_roots = sqrt_mod(discriminant % p, p, all_roots=True) or []
        half = mod_inverse(2, p)
        roots = sorted({int((s - t) * half) % p for s in square_roots})

    if not roots:
        inert = ideal_normalize(discriminant, [QuadraticElement.of(p)])
        return [PrimeIdeal(inert, p, Splitting.INERT, QuadraticElement.of(p))]

    splitting = Splitting.RAMIFIED if len(roots) == 1 else Splitting.SPLIT
    return [
        PrimeIdeal(
            from_hnf(discriminant, p, beta),
            p,
            splitting,
            QuadraticElement.of(beta, 1),
        )
        for beta in roots
    ]


def _integral_valuation(prime: PrimeIdeal, ideal: FractionalIdeal) -> int:
    inverse = ideal_inv(prime.ideal)
    valuation = 0
    current = ideal
    while is_subset(current, prime.ideal):
        current = ideal_mul(current, inverse)
        valuation += 1
    return valuation


def valuation(prime: PrimeIdeal, ideal: FractionalIdeal) -> int:
    """
    v_P(I): I домножается на целое m так, чтобы mI был целым,
    затем v_P(I) = v_P(mI) − v_P(m).
    """
    m = ideal.content.denominator
    scaled = ideal_scale(ideal, Fraction(m))
    correction = _integral_valuation(prime, principal_ideal(ideal.discriminant, QuadraticElement.of(m)))
    return _integral_valuation(prime, scaled) - correction


def element_valuation(prime: PrimeIdeal, x: QuadraticElement) -> int:
    if x.is_zero:
        raise InvalidElementError("valuation of zero is undefined")
    return valuation(prime, principal_ideal(prime.ideal.discriminant, x))


def primes_over(discriminant: int, rational_primes: Iterable[int]) -> list[PrimeIdeal]:
    result: list[PrimeIdeal] = []
    for p in sorted(rational_primes):
        result.extend(primes_above(discriminant, p))
    return result


# ============================================================================
# Главность
# ============================================================================

def is_principal(ideal: FractionalIdeal) -> Optional[QuadraticElement]:
    """
    Образующая x с I = Ox или None.

    Ищется α ∈ aℤ + (b+ω)ℤ нормы a: (2x + ty)² + |D|y² = 4a, откуда |y| ≤ 2√(a/|D|).
    """
    d = ideal.discriminant
    t, _ = q.omega_polynomial(d)
    a, b = ideal.a, ideal.b
    y_bound = isqrt(4 * a // abs(d)) + 1
    for y in range(-y_bound, y_bound + 1):
        rest = 4 * a - abs(d) * y * y
        if rest < 0:
            continue
        s = isqrt(rest)
        if s * s != rest:
            continue
        for sign in (1, -1):
            twice_x = sign * s - t * y
            if twice_x % 2:
                continue
            x = twice_x // 2
            if (x - y * b) % a == 0:
                return q.q_scale(QuadraticElement.of(x, y), ideal.content)
    return None


def same_localization(left: FractionalIdeal, right: FractionalIdeal, primes: Sequence[PrimeIdeal]) -> bool:
    """Равенство после локализации: совпадают нормирования во всех простых над S"""
    return all(valuation(p, left) == valuation(p, right) for p in primes)
