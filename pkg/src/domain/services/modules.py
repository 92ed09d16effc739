"""
Исчисление классов проективных модулей: ранги, ⊕, ⊗, двойственный модуль,
внешние степени, след, ортогональное разложение и группа Пикара.

Над конечным произведением модуль определяется вектором рангов,
над дедекиндовым порядком - парой Штейница (ранг, класс).
"""
import logging
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from ..entities.group import FiniteAbelianGroup
from ..entities.ideal import QuadForm
from ..entities.module import OrthogonalDecomposition, ProjModule
from ..entities.ring import ConcreteRing, RingElement, RingKind
from ..entities.spectrum import H0Element
from ..exceptions import InvalidElementError, UnsupportedOperationError
from . import class_groups, finite_groups, ring_core, spectrum

logger = logging.getLogger(__name__)


# ============================================================================
# Конструкторы
# ============================================================================

def _uses_steinitz(ring: ConcreteRing) -> bool:
    return ring.kind is RingKind.QUAD_ORDER


def _trivial_class(ring: ConcreteRing) -> QuadForm:
    assert ring.discriminant is not None
    return class_groups.principal_form(ring.discriminant)


def make_module(ring: ConcreteRing, ranks: Sequence[int], cls: Optional[QuadForm] = None) -> ProjModule:
    """
    Raises:
        InvalidElementError: Отрицательный ранг, неверная длина или чужой класс
    """
    ranks = tuple(int(r) for r in ranks)
    if any(r < 0 for r in ranks):
        raise InvalidElementError(f"ranks must be nonnegative, got {ranks}")
    if len(ranks) != ring.component_count:
        raise InvalidElementError(f"{ring} has {ring.component_count} components, got ranks {ranks}")

    if not _uses_steinitz(ring):
        if cls is not None:
            raise InvalidElementError(f"modules over {ring} carry no Steinitz class")
        return ProjModule(ring, ranks)

    group = class_groups.class_group(ring.discriminant)
    cls = cls if cls is not None else group.identity
    if cls not in group.forms:
        class_groups.validate_form(cls, group.discriminant)
        cls = class_groups.form_reduce(cls)
    if ranks[0] == 0:
        cls = group.identity
    return ProjModule(ring, ranks, cls)


def free(ring: ConcreteRing, n: int) -> ProjModule:
    return make_module(ring, (n,) * ring.component_count)


def zero_module(ring: ConcreteRing) -> ProjModule:
    return free(ring, 0)


def steinitz(ring: ConcreteRing, rank: int, cls: QuadForm) -> ProjModule:
    if not _uses_steinitz(ring):
        raise UnsupportedOperationError(f"Steinitz pairs are defined over quadratic orders, not {ring}")
    return make_module(ring, (rank,), cls)


def principal_summand(ring: ConcreteRing, e: RingElement) -> ProjModule:
    """Модуль Re для идемпотента e"""
    ring_core.require_idempotent(ring, e)
    return make_module(ring, spectrum.support(ring, e))


def _same_base(left: ProjModule, right: ProjModule) -> None:
    if left.ring != right.ring:
        raise InvalidElementError(f"modules over different rings: {left.ring} and {right.ring}")


# ============================================================================
# Операции
# ============================================================================

def rank_map(module: ProjModule) -> H0Element:
    return H0Element(module.ranks)


def direct_sum(left: ProjModule, right: ProjModule) -> ProjModule:
    """r_{M⊕N} = r_M + r_N; классы Штейница перемножаются"""
    _same_base(left, right)
    ranks = tuple(a + b for a, b in zip(left.ranks, right.ranks))
    if left.cls is None or right.cls is None:
        return ProjModule(left.ring, ranks)
    group = class_groups.class_group(left.ring.discriminant)
    return make_module(left.ring, ranks, group.compose(left.cls, right.cls))


def tensor(left: ProjModule, right: ProjModule) -> ProjModule:
    """(n₁, c₁) ⊗ (n₂, c₂) = (n₁n₂, c₁^{n₂}·c₂^{n₁})"""
    _same_base(left, right)
    ranks = tuple(a * b for a, b in zip(left.ranks, right.ranks))
    if left.cls is None or right.cls is None:
        return ProjModule(left.ring, ranks)
    group = class_groups.class_group(left.ring.discriminant)
    cls = group.compose(group.power(left.cls, right.rank), group.power(right.cls, left.rank))
    return make_module(left.ring, ranks, cls)


def dual(module: ProjModule) -> ProjModule:
    if module.cls is None:
        return module
    group = class_groups.class_group(module.ring.discriminant)
    return make_module(module.ring, module.ranks, group.inverse(module.cls))


def end_module(module: ProjModule) -> ProjModule:
    """End(M) ≅ M ⊗ M*"""
    return tensor(module, dual(module))


def exterior_power(module: ProjModule, k: int) -> ProjModule:
    """
    Λᵏ(M): над произведением ранги C(rᵢ, k); над порядком поддерживаются
    k = 0, k = 1, k = rank (класс определителя) и k > rank.

    Raises:
        UnsupportedOperationError: 1 < k < rank над квадратичным порядком
    """
    if k < 0:
        raise InvalidElementError(f"exterior power index must be nonnegative, got {k}")
    ring = module.ring
    if k == 0:
        return free(ring, 1)
    if module.cls is None:
        return ProjModule(ring, tuple(comb(r, k) for r in module.ranks))

    n = module.rank
    if k == 1:
        return module
    if k > n:
        return zero_module(ring)
    if k == n:
        return make_module(ring, (1,), module.cls)
    raise UnsupportedOperationError(f"Λ^{k} of a rank-{n} module over {ring} is not supported")


def is_invertible(module: ProjModule) -> bool:
    """M ⊗ M* ≅ R"""
    return end_module(module) == free(module.ring, 1)


def trace_ideal(module: ProjModule) -> RingElement:
    """Идемпотент e с tr(M) = Re: единица ровно на носителе M"""
    return spectrum.from_support(module.ring, tuple(1 if r > 0 else 0 for r in module.ranks))


def annihilator(module: ProjModule) -> RingElement:
    """Ann(M) = R(1 − e)"""
    ring = module.ring
    return ring_core.sub(ring, ring_core.one(ring), trace_ideal(module))


def _exterior_ranks(module: ProjModule, k: int) -> tuple[int, ...]:
    return tuple(comb(r, k) for r in module.ranks)


def orthogonal_decomposition(module: ProjModule) -> OrthogonalDecomposition:
    """
    e_k - сумма примитивных идемпотентов компонент ранга k; вместе с ними
    идемпотенты Ann(Λᵏ M), k = 1..n+1, вычисленные по рангам внешних степеней.
    Сверка цепочки с Σ_{i<k} e_i - annihilator_chain_failures.
    """
    ring = module.ring
    n = module.rank
    idems = tuple(
        spectrum.from_support(ring, tuple(1 if r == k else 0 for r in module.ranks))
        for k in range(n + 1)
    )
    annihilators = tuple(
        ring_core.sub(ring, ring_core.one(ring), spectrum.from_support(
            ring, tuple(1 if r > 0 else 0 for r in _exterior_ranks(module, k))
        ))
        for k in range(1, n + 2)
    )
    return OrthogonalDecomposition(module, idems, annihilators)


def annihilator_chain_failures(decomposition: OrthogonalDecomposition) -> list[int]:
    """
    Индексы k, для которых Ann(Λᵏ M) ≠ R(e₀ + ... + e_{k−1}).
    k = n+1 попадает в список и тогда, когда последний аннулятор не равен 1.
    """
    ring = decomposition.module.ring
    failures = []
    partial = ring_core.zero(ring)
    for k, ann in enumerate(decomposition.annihilators, start=1):
        partial = ring_core.add(ring, partial, decomposition.idems[k - 1])
        if ann != partial:
            logger.warning(f"Ann(Λ^{k} {decomposition.module}) = {ann}, ожидалось {partial}")
            failures.append(k)
    last = len(decomposition.annihilators)
    if decomposition.annihilators[-1] != ring_core.one(ring) and last not in failures:
        failures.append(last)
    return failures


def constant_rank_modules(ring: ConcreteRing, rank: int) -> list[ProjModule]:
    """Все классы модулей постоянного ранга: свободный модуль или (rank, c) для c ∈ Cl(D)"""
    if not _uses_steinitz(ring):
        return [free(ring, rank)]
    return [make_module(ring, (rank,), cls) for cls in class_groups.class_group(ring.discriminant).forms]


def line_bundle_failures(ring: ConcreteRing, max_rank: int) -> list[str]:
    """
    Модули M постоянного ранга d+1 ≤ max_rank, для которых M ≇ R^d ⊕ Λ^{d+1}(M).
    """
    failures = []
    for rank in range(1, max_rank + 1):
        for module in constant_rank_modules(ring, rank):
            split = direct_sum(free(ring, rank - 1), exterior_power(module, rank))
            if split != module:
                failures.append(str(module))
    return failures


def pic_group(ring: ConcreteRing) -> FiniteAbelianGroup[ProjModule]:
    """
    Pic(R) как группа классов обратимых модулей по ⊗.
    Конечные и полулокальные кольца дают тривиальную группу, порядок O(D) - Cl(D).
    """
    unit = free(ring, 1)
    if not _uses_steinitz(ring):
        return finite_groups.build_group(f"Pic({ring})", [unit], tensor, unit)
    group = class_groups.class_group(ring.discriminant)
    line_bundles = [make_module(ring, (1,), cls) for cls in group.forms]
    return finite_groups.build_group(f"Pic({ring})", line_bundles, tensor, unit)


# ============================================================================
# Перебор по разложению O^{n−1} ⊕ I_c
# ============================================================================

def _line_bundles(module: ProjModule) -> list[QuadForm]:
    """Классы слагаемых разложения (n, c) = O ⊕ ... ⊕ O ⊕ I_c"""
    assert module.cls is not None
    n = module.rank
    if n == 0:
        return []
    trivial = _trivial_class(module.ring)
    return [trivial] * (n - 1) + [module.cls]


def _collect(ring: ConcreteRing, classes: Iterable[QuadForm]) -> ProjModule:
    group = class_groups.class_group(ring.discriminant)
    items = list(classes)
    product = group.identity
    for cls in items:
        product = group.compose(product, cls)
    return make_module(ring, (len(items),), product)


def oracle_direct_sum(left: ProjModule, right: ProjModule) -> ProjModule:
    _same_base(left, right)
    return _collect(left.ring, _line_bundles(left) + _line_bundles(right))


def oracle_tensor(left: ProjModule, right: ProjModule) -> ProjModule:
    """(⊕Aᵢ) ⊗ (⊕Bⱼ) = ⊕ Aᵢ ⊗ Bⱼ"""
    _same_base(left, right)
    group = class_groups.class_group(left.ring.discriminant)
    return _collect(
        left.ring,
        [group.compose(a, b) for a in _line_bundles(left) for b in _line_bundles(right)],
    )


def oracle_exterior_power(module: ProjModule, k: int) -> ProjModule:
    """Λᵏ(⊕Lᵢ) = ⊕_{|S|=k} ⊗_{i∈S} Lᵢ; класс - произведение по всем k-подмножествам"""
    group = class_groups.class_group(module.ring.discriminant)
    summands = []
    for subset in combinations(_line_bundles(module), k):
        cls = group.identity
        for item in subset:
            cls = group.compose(cls, item)
        summands.append(cls)
    return _collect(module.ring, summands)
