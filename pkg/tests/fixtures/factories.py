"""
Фабрики для создания тестовых данных с помощью factory_boy
"""
import factory
from factory.random import reseed_random
from faker import Faker as FakerInstance

from src.domain.entities.ideal import FractionalIdeal, QuadForm
from src.domain.entities.module import ProjModule
from src.domain.entities.monoid import FiniteMonoid
from src.domain.services import class_groups, ideals, modules, ring_core

# Детерминированный Faker для LazyFunction
fake = FakerInstance()
FakerInstance.seed(20240501)
reseed_random(20240501)

PRIME_POOL = (2, 3, 5, 7, 11, 13)


class RankVectorModuleFactory(factory.Factory):
    """Модули над конечным произведением со случайными рангами"""
    class Meta:
        model = ProjModule

    ring = factory.LazyFunction(lambda: ring_core.parse_ring("Z/2310"))
    ranks = factory.LazyAttribute(
        lambda obj: tuple(fake.random_int(min=0, max=4) for _ in range(obj.ring.component_count))
    )

    @classmethod
    def _create(cls, model_class, ring, ranks):
        return modules.make_module(ring, ranks)

    @classmethod
    def _build(cls, model_class, ring, ranks):
        return modules.make_module(ring, ranks)


class SteinitzModuleFactory(factory.Factory):
    """Модули (n, c) над O(D) со случайным рангом и классом"""
    class Meta:
        model = ProjModule
        exclude = ("rank",)

    ring = factory.LazyFunction(lambda: ring_core.parse_ring("O(-23)"))
    rank = factory.LazyFunction(lambda: fake.random_int(min=1, max=5))
    ranks = factory.LazyAttribute(lambda obj: (obj.rank,))
    steinitz_class = factory.LazyAttribute(
        lambda obj: fake.random_element(class_groups.class_group(obj.ring.discriminant).forms)
    )

    @classmethod
    def _create(cls, model_class, ring, ranks, steinitz_class):
        return modules.make_module(ring, ranks, steinitz_class)

    @classmethod
    def _build(cls, model_class, ring, ranks, steinitz_class):
        return modules.make_module(ring, ranks, steinitz_class)


class ReducedFormFactory(factory.Factory):
    """Случайная приведённая форма дискриминанта D"""
    class Meta:
        model = QuadForm
        exclude = ("discriminant", "form")

    discriminant = -47
    form = factory.LazyAttribute(lambda obj: fake.random_element(class_groups.reduced_forms(obj.discriminant)))
    a = factory.LazyAttribute(lambda obj: obj.form.a)
    b = factory.LazyAttribute(lambda obj: obj.form.b)
    c = factory.LazyAttribute(lambda obj: obj.form.c)


def cyclic_monoid(m: int) -> FiniteMonoid:
    """(ℤ/m, +) как конечный моноид"""
    return FiniteMonoid(
        f"Z/{m}",
        tuple(str(i) for i in range(m)),
        tuple(tuple((i + j) % m for j in range(m)) for i in range(m)),
        0,
    )


def truncated_naturals(n: int) -> FiniteMonoid:
    """{0, 1, ..., n} со сложением, обрезанным на n: без сокращения, пополнение тривиально"""
    return FiniteMonoid(
        f"N<={n}",
        tuple(str(i) for i in range(n + 1)),
        tuple(tuple(min(i + j, n) for j in range(n + 1)) for i in range(n + 1)),
        0,
    )


def random_ideal(discriminant: int) -> FractionalIdeal:
    """Произведение 1-3 случайных простых идеалов или их обратных"""
    result = ideals.unit_ideal(discriminant)
    for _ in range(fake.random_int(min=1, max=3)):
        prime = fake.random_element(ideals.primes_above(discriminant, fake.random_element(PRIME_POOL))).ideal
        if fake.boolean():
            prime = ideals.ideal_inv(prime)
        result = ideals.ideal_mul(result, prime)
    return result
