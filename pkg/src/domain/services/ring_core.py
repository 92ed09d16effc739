"""
Ядро колец: разбор и печать колец, арифметика элементов, идемпотенты, морфизмы.

Конечные кольца канонизируются в произведение локальных факторов ℤ/p^k,
составные модули раскладываются по китайской теореме об остатках.
"""
import itertools
import logging
import random
import re
from fractions import Fraction
from math import gcd
from typing import Iterator, Optional, Sequence

from sympy import factorint, isprime
from sympy.ntheory.modular import crt

from ...config.settings import get_settings
from ..entities.ring import (
    ConcreteRing,
    LocalFactor,
    QuadraticElement,
    ResidueElement,
    RingElement,
    RingKind,
    RingMorphism,
)
from ..exceptions import AxiomViolationError, InvalidElementError, RingSpecError, UnsupportedOperationError
from . import quadratic as q

logger = logging.getLogger(__name__)

_FACTOR_RE = re.compile(r"^Z/(-?\d+)$")
_QUAD_RE = re.compile(r"^O\((-?\d+)\)(?:loc\{([0-9,]*)\})?$")
_MORPHISM_RE = re.compile(r"^(id|quot|proj|diag|crt|red|map\[[0-9,]*\])\s*:\s*(.+?)\s*->\s*(.+)$")


# ============================================================================
# Кольца
# ============================================================================

def finite_product(moduli: Sequence[int]) -> ConcreteRing:
    """Каноническое конечное произведение ℤ/m₁ × ... × ℤ/m_r"""
    factors: list[LocalFactor] = []
    for modulus in moduli:
        if modulus < 2:
            raise RingSpecError(f"modulus must be >= 2, got {modulus}")
        for prime, exponent in factorint(modulus).items():
            factors.append(LocalFactor(int(prime), int(exponent)))
    return ConcreteRing(RingKind.FINITE_PRODUCT, tuple(sorted(factors)))


def quad_order(discriminant: int, localized_primes: Optional[Sequence[int]] = None) -> ConcreteRing:
    q.validate_discriminant(discriminant)
    if localized_primes is None:
        return ConcreteRing(RingKind.QUAD_ORDER, discriminant=discriminant)
    primes = frozenset(int(p) for p in localized_primes)
    if not primes:
        raise RingSpecError("semilocal prime set must be nonempty")
    for p in primes:
        if not isprime(p):
            raise RingSpecError(f"localized prime {p} is not prime")
    return ConcreteRing(RingKind.SEMILOCAL_QUAD_ORDER, discriminant=discriminant, localized_primes=primes)


ZERO_RING = ConcreteRing(RingKind.FINITE_PRODUCT, ())


def parse_ring(spec: str) -> ConcreteRing:
    """
    Разбирает запись кольца.

    Грамматика: `Z/n`, `Z/n x Z/m x ...`, `O(D)`, `O(D) loc {p1,p2,...}`, `0`.
    Пробелы вокруг лексем игнорируются.

    Raises:
        RingSpecError: Некорректная запись, нефундаментальный D, D ≥ 0, непростое p
    """
    compact = re.sub(r"\s+", "", spec or "")
    if not compact:
        raise RingSpecError("empty ring spec")
    if compact == "0":
        return ZERO_RING

    quad = _QUAD_RE.match(compact)
    if quad:
        discriminant = int(quad.group(1))
        if quad.group(2) is None:
            return quad_order(discriminant)
        primes = [int(p) for p in quad.group(2).split(",") if p]
        return quad_order(discriminant, primes)

    moduli = []
    # Разделитель произведения - буква x между факторами
    for token in compact.split("x"):
        match = _FACTOR_RE.match(token)
        if not match:
            raise RingSpecError(f"malformed ring spec: {spec!r}")
        moduli.append(int(match.group(1)))
    ring = finite_product(moduli)
    logger.debug(f"Разобрано кольцо {spec!r} -> {ring}")
    return ring


def render_ring(ring: ConcreteRing) -> str:
    return str(ring)


def reduction(ring: ConcreteRing) -> RingMorphism:
    """R → R_red: каждый фактор ℤ/p^k → ℤ/p"""
    _require_finite(ring, "reduction")
    target = ConcreteRing(
        RingKind.FINITE_PRODUCT,
        tuple(LocalFactor(f.prime, 1) for f in ring.factors),
    )
    return RingMorphism(ring, target, tuple(range(len(ring.factors))), label="red")


def _require_finite(ring: ConcreteRing, operation: str) -> None:
    if not ring.is_finite:
        raise UnsupportedOperationError(f"{operation} is only defined for finite product rings, got {ring}")


# ============================================================================
# Элементы
# ============================================================================

def zero(ring: ConcreteRing) -> RingElement:
    if ring.is_finite:
        return ResidueElement((0,) * len(ring.factors))
    return QuadraticElement.of(0)


def one(ring: ConcreteRing) -> RingElement:
    if ring.is_finite:
        return ResidueElement(tuple(1 % m for m in ring.moduli))
    return QuadraticElement.of(1)


def from_integer(ring: ConcreteRing, value: int) -> RingElement:
    if ring.is_finite:
        return ResidueElement(tuple(value % m for m in ring.moduli))
    return QuadraticElement.of(value)


def validate_element(ring: ConcreteRing, x: RingElement) -> None:
    """
    Raises:
        InvalidElementError: Элемент не лежит в кольце
    """
    if ring.is_finite:
        if not isinstance(x, ResidueElement) or len(x.residues) != len(ring.factors):
            raise InvalidElementError(f"{x!r} is not an element of {ring}")
        for residue, modulus in zip(x.residues, ring.moduli):
            if not 0 <= residue < modulus:
                raise InvalidElementError(f"residue {residue} out of range [0, {modulus})")
        return

    if not isinstance(x, QuadraticElement):
        raise InvalidElementError(f"{x!r} is not an element of {ring}")
    denominator = q.q_denominator(x)
    if ring.kind is RingKind.QUAD_ORDER and denominator != 1:
        raise InvalidElementError(f"{q.render_quadratic(x)} has non-integral coordinates in {ring}")
    if ring.kind is RingKind.SEMILOCAL_QUAD_ORDER:
        bad = [p for p in ring.localized_primes if denominator % p == 0]
        if bad:
            raise InvalidElementError(
                f"{q.render_quadratic(x)} has denominator divisible by localized primes {sorted(bad)}"
            )


def add(ring: ConcreteRing, x: RingElement, y: RingElement) -> RingElement:
    if isinstance(x, ResidueElement) and isinstance(y, ResidueElement):
        return ResidueElement(tuple((a + b) % m for a, b, m in zip(x.residues, y.residues, ring.moduli)))
    assert isinstance(x, QuadraticElement) and isinstance(y, QuadraticElement)
    return q.q_add(x, y)


def neg(ring: ConcreteRing, x: RingElement) -> RingElement:
    if isinstance(x, ResidueElement):
        return ResidueElement(tuple((-a) % m for a, m in zip(x.residues, ring.moduli)))
    return q.q_neg(x)


def sub(ring: ConcreteRing, x: RingElement, y: RingElement) -> RingElement:
    return add(ring, x, neg(ring, y))


def mul(ring: ConcreteRing, x: RingElement, y: RingElement) -> RingElement:
    if isinstance(x, ResidueElement) and isinstance(y, ResidueElement):
        return ResidueElement(tuple((a * b) % m for a, b, m in zip(x.residues, y.residues, ring.moduli)))
    assert isinstance(x, QuadraticElement) and isinstance(y, QuadraticElement)
    assert ring.discriminant is not None
    return q.q_mul(ring.discriminant, x, y)


def element_arith(ring: ConcreteRing, op: str, x: RingElement, y: Optional[RingElement] = None) -> RingElement:
    """
    Арифметика элементов: op ∈ {add, mul, neg, sub}.

    Raises:
        InvalidElementError: Операнд не является элементом R
        RingSpecError: Неизвестная операция
    """
    validate_element(ring, x)
    if op == "neg":
        return neg(ring, x)
    if y is None:
        raise RingSpecError(f"operation {op!r} needs two operands")
    validate_element(ring, y)
    operations = {"add": add, "mul": mul, "sub": sub}
    if op not in operations:
        raise RingSpecError(f"unknown ring operation {op!r}")
    return operations[op](ring, x, y)


def is_zero(x: RingElement) -> bool:
    if isinstance(x, ResidueElement):
        return not any(x.residues)
    return x.is_zero


def is_idempotent(ring: ConcreteRing, e: RingElement) -> bool:
    return mul(ring, e, e) == e


def require_idempotent(ring: ConcreteRing, e: RingElement) -> None:
    validate_element(ring, e)
    if not is_idempotent(ring, e):
        raise InvalidElementError(f"{render_element(ring, e)} is not idempotent in {ring}")


def idempotents(ring: ConcreteRing) -> list[RingElement]:
    """
    Все решения e² = e.

    Локальное кольцо ℤ/p^k содержит только 0 и 1, поэтому над произведением
    идемпотенты - векторы из 0/1 (2^c штук); над областью целостности - {0, 1}.
    """
    if not ring.is_finite:
        return [zero(ring), one(ring)]
    return [ResidueElement(bits) for bits in itertools.product((0, 1), repeat=len(ring.factors))]


def is_unit(ring: ConcreteRing, x: RingElement) -> bool:
    if isinstance(x, ResidueElement):
        return all(r % f.prime != 0 for r, f in zip(x.residues, ring.factors))
    assert ring.discriminant is not None
    if x.is_zero:
        return False
    inverse = q.q_inv(ring.discriminant, x)
    try:
        validate_element(ring, inverse)
    except InvalidElementError:
        return False
    return True


def elements(ring: ConcreteRing) -> Iterator[ResidueElement]:
    """Все элементы конечного кольца в порядке остатков"""
    _require_finite(ring, "element enumeration")
    for residues in itertools.product(*(range(m) for m in ring.moduli)):
        yield ResidueElement(tuple(residues))


def nonzerodivisors_are_units(ring: ConcreteRing) -> bool:
    """
    Проверяет T(R) = R для конечного кольца: каждый неделитель нуля обратим.

    Делитель нуля произведения - элемент, у которого делитель нуля в каком-то факторе,
    поэтому достаточно перебора внутри каждого локального фактора.
    """
    _require_finite(ring, "total ring of fractions check")
    for factor in ring.factors:
        m = factor.modulus
        for x in range(m):
            zero_divisor = any(x * y % m == 0 for y in range(1, m))
            unit = gcd(x, m) == 1
            if zero_divisor == unit:
                logger.error(f"В Z/{m} элемент {x}: делитель нуля={zero_divisor}, обратим={unit}")
                return False
    return True


# ============================================================================
# Разбор и печать элементов
# ============================================================================

def parse_element(ring: ConcreteRing, text: str) -> RingElement:
    """
    Литералы элементов: целое число (по КТО во все факторы), `(r1, r2, ...)` для
    остатков и `(x, y)` для x + yω (в полулокальном случае допускаются дроби).

    Raises:
        RingSpecError: Неразборчивый литерал
        InvalidElementError: Элемент вне кольца
    """
    compact = re.sub(r"\s+", "", text or "")
    try:
        if compact.startswith("(") and compact.endswith(")"):
            parts = [p for p in compact[1:-1].split(",") if p]
            if ring.is_finite:
                if len(parts) != len(ring.factors):
                    raise InvalidElementError(f"{text!r} needs {len(ring.factors)} residues for {ring}")
                element: RingElement = ResidueElement(
                    tuple(int(p) % m for p, m in zip(parts, ring.moduli))
                )
            else:
                if len(parts) != 2:
                    raise RingSpecError(f"quadratic element literal must be (x, y), got {text!r}")
                element = QuadraticElement(Fraction(parts[0]), Fraction(parts[1]))
        elif ring.is_finite:
            element = from_integer(ring, int(compact))
        else:
            element = QuadraticElement(Fraction(compact), Fraction(0))
    except (ValueError, ZeroDivisionError) as e:
        if isinstance(e, (InvalidElementError, RingSpecError)):
            raise
        raise RingSpecError(f"malformed element literal {text!r}: {e}") from e
    validate_element(ring, element)
    return element


def crt_integer(ring: ConcreteRing, x: ResidueElement) -> Optional[int]:
    """Целое по КТО, если простые факторов попарно различны"""
    primes = [f.prime for f in ring.factors]
    if len(set(primes)) != len(primes):
        return None
    if not primes:
        return 0
    solution = crt(list(ring.moduli), list(x.residues))
    return int(solution[0]) if solution is not None else None


def render_element(ring: ConcreteRing, x: RingElement) -> str:
    if isinstance(x, QuadraticElement):
        return q.render_quadratic(x)
    value = crt_integer(ring, x)
    if value is not None:
        return str(value)
    return "(" + ", ".join(str(r) for r in x.residues) + ")"


# ============================================================================
# Морфизмы
# ============================================================================

def validate_morphism(morphism: RingMorphism) -> None:
    """
    Морфизм конечных произведений задаётся выбором фактора источника для каждого
    фактора цели; ℤ/p^k → ℤ/q^l существует только при q = p и l ≤ k.

    Raises:
        RingSpecError: Назначение не задаёт морфизм колец
    """
    source, target = morphism.source, morphism.target
    _require_finite(source, "ring morphism")
    _require_finite(target, "ring morphism")
    if len(morphism.assignment) != len(target.factors):
        raise RingSpecError(f"{morphism}: assignment length must equal number of target factors")
    for j, i in enumerate(morphism.assignment):
        if not 0 <= i < len(source.factors):
            raise RingSpecError(f"{morphism}: source factor index {i} out of range")
        s, t = source.factors[i], target.factors[j]
        if s.prime != t.prime or t.exponent > s.exponent:
            raise RingSpecError(f"{morphism}: no ring map {s} -> {t}")


def identity(ring: ConcreteRing) -> RingMorphism:
    _require_finite(ring, "identity morphism")
    return RingMorphism(ring, ring, tuple(range(len(ring.factors))), label="id")


def auto_assignment(source: ConcreteRing, target: ConcreteRing, reuse: bool) -> tuple[int, ...]:
    """
    Жадно сопоставляет каждому фактору цели фактор источника того же простого
    с не меньшим показателем; без reuse каждый фактор источника берётся один раз.
    """
    used: set[int] = set()
    assignment = []
    for t in target.factors:
        candidates = [
            i for i, s in enumerate(source.factors)
            if s.prime == t.prime and s.exponent >= t.exponent
        ]
        fresh = [i for i in candidates if i not in used]
        if fresh:
            choice = min(fresh, key=lambda i: (source.factors[i].exponent != t.exponent, i))
        elif reuse and candidates:
            choice = candidates[0]
        else:
            raise RingSpecError(f"no factor of {source} maps onto {t}")
        used.add(choice)
        assignment.append(choice)
    return tuple(assignment)


def make_morphism(kind: str, source: ConcreteRing, target: ConcreteRing,
                  assignment: Optional[Sequence[int]] = None) -> RingMorphism:
    """
    Строит структурный морфизм: id, quot, proj, diag, crt, red или map[...].

    Raises:
        RingSpecError: Морфизм данного вида между этими кольцами не существует
    """
    _require_finite(source, "ring morphism")
    _require_finite(target, "ring morphism")
    if kind == "map":
        if assignment is None:
            raise RingSpecError("map morphism needs an explicit assignment")
        morphism = RingMorphism(source, target, tuple(assignment), label="map")
        validate_morphism(morphism)
        return morphism

    if kind in ("id", "crt"):
        if source != target:
            raise RingSpecError(f"{kind}: {source} and {target} are not the same ring")
        return RingMorphism(source, target, tuple(range(len(source.factors))), label=kind)
    if kind == "red":
        expected = reduction(source)
        if expected.target != target:
            raise RingSpecError(f"red: reduction of {source} is {expected.target}, not {target}")
        return expected

    morphism = RingMorphism(source, target, auto_assignment(source, target, reuse=(kind == "diag")), label=kind)
    validate_morphism(morphism)
    s = morphism.assignment
    if kind == "proj" and any(
        source.factors[i].exponent != target.factors[j].exponent for j, i in enumerate(s)
    ):
        raise RingSpecError(f"proj: {target} is not a product of factors of {source}")
    if kind == "diag" and (
        set(s) != set(range(len(source.factors)))
        or any(source.factors[i].exponent != target.factors[j].exponent for j, i in enumerate(s))
    ):
        raise RingSpecError(f"diag: {target} is not a diagonal power of {source}")
    return morphism


def parse_morphism(text: str) -> RingMorphism:
    """
    `<kind>: <source> -> <target>`, например `diag: Z/2 -> Z/2 x Z/2` или
    `map[0,0]: Z/4 -> Z/2 x Z/2`.
    """
    match = _MORPHISM_RE.match((text or "").strip())
    if not match:
        raise RingSpecError(f"malformed morphism spec: {text!r}")
    kind, source_text, target_text = match.groups()
    source, target = parse_ring(source_text), parse_ring(target_text)
    if kind.startswith("map"):
        indices = [int(i) for i in kind[4:-1].split(",") if i]
        return make_morphism("map", source, target, indices)
    return make_morphism(kind, source, target)


def apply_morphism(morphism: RingMorphism, x: RingElement) -> RingElement:
    validate_element(morphism.source, x)
    assert isinstance(x, ResidueElement)
    return ResidueElement(tuple(
        x.residues[i] % t.modulus
        for i, t in zip(morphism.assignment, morphism.target.factors)
    ))


def compose(g: RingMorphism, f: RingMorphism) -> RingMorphism:
    """g∘f: R → R′ → R″"""
    if f.target != g.source:
        raise RingSpecError(f"cannot compose {g} after {f}")
    return RingMorphism(
        f.source,
        g.target,
        tuple(f.assignment[k] for k in g.assignment),
        label=f"{g.label}*{f.label}",
    )


def check_morphism_laws(morphism: RingMorphism) -> int:
    """
    Проверяет f(0)=0, f(1)=1, аддитивность и мультипликативность.
    Перебор полный, если число пар не превышает лимит, иначе детерминированная выборка.

    Returns:
        Число проверенных пар

    Raises:
        AxiomViolationError: Нарушение с парой-свидетелем
    """
    source, target = morphism.source, morphism.target
    if apply_morphism(morphism, zero(source)) != zero(target):
        raise AxiomViolationError(f"{morphism}: f(0) != 0")
    if apply_morphism(morphism, one(source)) != one(target):
        raise AxiomViolationError(f"{morphism}: f(1) != 1")

    settings = get_settings()
    size = source.order or 0
    if size * size <= settings.morphism_pair_limit:
        pairs: Iterator[tuple[ResidueElement, ResidueElement]] = itertools.product(
            elements(source), elements(source)
        )
    else:
        rng = random.Random(settings.random_seed)
        sample_size = int(settings.morphism_pair_limit ** 0.5)
        sample = [
            ResidueElement(tuple(rng.randrange(m) for m in source.moduli))
            for _ in range(sample_size)
        ]
        pairs = itertools.product(sample, sample)
        logger.info(f"{morphism}: выборочная проверка {sample_size}² пар")

    checked = 0
    for x, y in pairs:
        fx, fy = apply_morphism(morphism, x), apply_morphism(morphism, y)
        if apply_morphism(morphism, add(source, x, y)) != add(target, fx, fy):
            raise AxiomViolationError(f"{morphism}: not additive", (x.residues, y.residues))
        if apply_morphism(morphism, mul(source, x, y)) != mul(target, fx, fy):
            raise AxiomViolationError(f"{morphism}: not multiplicative", (x.residues, y.residues))
        checked += 1
    return checked
