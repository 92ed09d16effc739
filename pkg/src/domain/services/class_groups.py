"""
Бинарные квадратичные формы и группа классов Cl(D).

Форма (a, b, c) соответствует идеалу aℤ + ((−b + √D)/2)ℤ; в базисе {1, ω}
это aℤ + (β + ω)ℤ с β = −(b + t)/2. Композиция классов идёт через умножение
идеалов и редукцию формы результата.
"""
import logging
from functools import lru_cache
from math import gcd, isqrt

from ...config.settings import get_settings
from ..entities.ideal import ClassGroup, FractionalIdeal, QuadForm
from ..exceptions import InvalidElementError, ReductionError
from . import finite_groups
from . import ideals
from . import quadratic as q

logger = logging.getLogger(__name__)


def validate_form(form: QuadForm, discriminant: int) -> None:
    """
    Raises:
        InvalidElementError: Неверный дискриминант, a ≤ 0 или форма не примитивна
    """
    if form.discriminant != discriminant:
        raise InvalidElementError(f"{form} has discriminant {form.discriminant}, expected {discriminant}")
    if form.a <= 0:
        raise InvalidElementError(f"{form} is not positive definite")
    if gcd(gcd(form.a, form.b), form.c) != 1:
        raise InvalidElementError(f"{form} is not primitive")


def reduce_with_steps(form: QuadForm) -> tuple[QuadForm, int]:
    """
    Редукция Гаусса: сдвиг b в (−a, a], обмен при a > c,
    в конце b ≥ 0 при a = c.

    Raises:
        ReductionError: Превышен лимит итераций
    """
    cap = get_settings().reduction_iteration_cap
    d = form.discriminant
    a, b, c = form.a, form.b, form.c
    steps = 0
    while True:
        if steps > cap:
            raise ReductionError(f"reduction of {form} exceeded {cap} steps")
        if not -a < b <= a:
            k = (a - b) // (2 * a)
            b = b + 2 * a * k
            c = (b * b - d) // (4 * a)
            steps += 1
        if a > c:
            a, c = c, a
            b = -b
            steps += 1
            continue
        break
    if a == c and b < 0:
        b = -b
    return QuadForm(a, b, c), steps


def form_reduce(form: QuadForm) -> QuadForm:
    return reduce_with_steps(form)[0]


def reduction_step_bound(form: QuadForm) -> int:
    """2·log₂(max(|a|, |c|)) + 4"""
    largest = max(abs(form.a), abs(form.c), 1)
    return 2 * largest.bit_length() + 4


def form_to_ideal(form: QuadForm) -> FractionalIdeal:
    d = form.discriminant
    t, _ = q.omega_polynomial(d)
    beta = -(form.b + t) // 2
    return ideals.from_hnf(d, form.a, beta)


def ideal_to_form(ideal: FractionalIdeal) -> QuadForm:
    """Приведённая форма, представляющая класс идеала (содержание не влияет)"""
    d = ideal.discriminant
    t, _ = q.omega_polynomial(d)
    b = -(2 * ideal.b + t)
    c = (b * b - d) // (4 * ideal.a)
    return form_reduce(QuadForm(ideal.a, b, c))


def principal_form(discriminant: int) -> QuadForm:
    t, n = q.omega_polynomial(discriminant)
    return QuadForm(1, t, n)


def reduced_forms(discriminant: int) -> list[QuadForm]:
    """Все приведённые примитивные формы: |b| ≤ a ≤ √(|D|/3)"""
    q.validate_discriminant(discriminant)
    a_bound = isqrt(abs(discriminant) // 3)
    forms = []
    for a in range(1, a_bound + 1):
        for b in range(-a + 1, a + 1):
            if (b - discriminant) % 2:
                continue
            numerator = b * b - discriminant
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            form = QuadForm(a, b, c)
            if c >= a and form.is_reduced and gcd(gcd(a, b), c) == 1:
                forms.append(form)
    return sorted(forms)


def compose_forms(left: QuadForm, right: QuadForm) -> QuadForm:
    product = ideals.ideal_mul(form_to_ideal(left), form_to_ideal(right))
    return ideal_to_form(product)


def inverse_form(form: QuadForm) -> QuadForm:
    return form_reduce(QuadForm(form.a, -form.b, form.c))


def form_power(form: QuadForm, exponent: int) -> QuadForm:
    base = form if exponent >= 0 else inverse_form(form)
    result = principal_form(form.discriminant)
    for _ in range(abs(exponent)):
        result = compose_forms(result, base)
    return result


@lru_cache(maxsize=256)
def class_group(discriminant: int) -> ClassGroup:
    """
    Cl(D) перебором приведённых форм.

    Raises:
        RingSpecError: D не фундаментальный или D ≥ 0
        AxiomViolationError: Таблица композиции не групповая
    """
    forms = reduced_forms(discriminant)
    logger.info(f"Cl({discriminant}): {len(forms)} приведённых форм")
    group = finite_groups.build_group(
        f"Cl({discriminant})",
        forms,
        compose_forms,
        principal_form(discriminant),
    )
    return ClassGroup(discriminant, group)


def ideal_class(ideal: FractionalIdeal) -> QuadForm:
    return ideal_to_form(ideal)
