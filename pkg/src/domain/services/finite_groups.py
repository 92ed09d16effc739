"""
Конечные абелевы группы по таблицам: аксиомы, структура через нормальную
форму Смита (sympy), свойства гомоморфизмов.
"""
import logging
from typing import Callable, Hashable, Mapping, Sequence, TypeVar

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from ..entities.group import FiniteAbelianGroup
from ..exceptions import AxiomViolationError

logger = logging.getLogger(__name__)

T = TypeVar("T", bound=Hashable)
U = TypeVar("U", bound=Hashable)


def check_group_axioms(table: Sequence[Sequence[int]], identity: int) -> None:
    """
    Ассоциативность, коммутативность, нейтральный и обратные элементы.

    Raises:
        AxiomViolationError: Свидетель - нарушающая пара или тройка индексов
    """
    cayley = np.asarray(table, dtype=np.int64)
    size = cayley.shape[0]
    if not np.array_equal(cayley, cayley.T):
        i, j = (int(v) for v in np.argwhere(cayley != cayley.T)[0])
        raise AxiomViolationError("operation is not commutative", (i, j))
    if not np.array_equal(cayley[identity], np.arange(size)):
        raise AxiomViolationError("identity element does not act trivially", (identity,))
    for i in range(size):
        if identity not in cayley[i]:
            raise AxiomViolationError("element has no inverse", (i,))
    # (i·j)·k и i·(j·k) одновременно для всех троек
    left = cayley[cayley[:, :, None], np.arange(size)[None, None, :]]
    right = cayley[np.arange(size)[:, None, None], cayley[None, :, :]]
    if not np.array_equal(left, right):
        i, j, k = (int(v) for v in np.argwhere(left != right)[0])
        raise AxiomViolationError("operation is not associative", (i, j, k))


def _generators(table: np.ndarray, identity: int) -> list[int]:
    """Жадный набор порождающих: добавляем элементы вне текущей подгруппы"""
    size = table.shape[0]
    subgroup = {identity}
    gens: list[int] = []
    for candidate in range(size):
        if candidate in subgroup:
            continue
        gens.append(candidate)
        frontier = list(subgroup)
        while frontier:
            element = frontier.pop()
            for g in gens:
                product = int(table[element, g])
                if product not in subgroup:
                    subgroup.add(product)
                    frontier.append(product)
    return gens


def elementary_divisors(table: Sequence[Sequence[int]], identity: int) -> tuple[int, ...]:
    """
    Инвариантные множители d₁ | d₂ | ... группы.

    Матрица соотношений - граф Кэли по порождающим: eₓ + e_g − e_{xg} для всех x
    и порождающих g, плюс e_identity; её нормальная форма Смита даёт структуру.
    """
    cayley = np.asarray(table, dtype=np.int64)
    size = cayley.shape[0]
    if size == 1:
        return ()
    gens = _generators(cayley, identity)
    rows: list[list[int]] = []
    for x in range(size):
        for g in gens:
            row = [0] * size
            row[x] += 1
            row[g] += 1
            row[int(cayley[x, g])] -= 1
            rows.append(row)
    unit_row = [0] * size
    unit_row[identity] = 1
    rows.append(unit_row)

    factors = invariant_factors(Matrix(rows), domain=ZZ)
    divisors = tuple(int(abs(d)) for d in factors if abs(int(d)) != 1)
    product = 1
    for d in divisors:
        product *= d
    if product != size or len(factors) != size:
        raise AxiomViolationError("relation matrix does not present the group", {"divisors": divisors, "order": size})
    return divisors


def build_group(name: str, elements: Sequence[T], op: Callable[[T, T], T], identity: T) -> FiniteAbelianGroup[T]:
    """
    Таблица Кэли по операции, проверка аксиом и структура.

    Raises:
        AxiomViolationError: Операция выводит из множества или нарушает аксиомы
    """
    members = tuple(elements)
    index = {element: i for i, element in enumerate(members)}
    table: list[tuple[int, ...]] = []
    for x in members:
        row = []
        for y in members:
            product = op(x, y)
            if product not in index:
                raise AxiomViolationError(f"{name}: operation leaves the set", (x, y, product))
            row.append(index[product])
        table.append(tuple(row))
    identity_index = index[identity]
    check_group_axioms(table, identity_index)
    divisors = elementary_divisors(table, identity_index)
    logger.debug(f"Группа {name}: порядок {len(members)}, структура {divisors}")
    return FiniteAbelianGroup(name, members, tuple(table), identity_index, divisors)


def is_homomorphism(source: FiniteAbelianGroup[T], target: FiniteAbelianGroup[U], mapping: Mapping[T, U]) -> bool:
    return all(
        mapping[source.op(x, y)] == target.op(mapping[x], mapping[y])
        for x in source.elements
        for y in source.elements
    )


def is_injective(mapping: Mapping[T, U]) -> bool:
    return len(set(mapping.values())) == len(mapping)


def is_surjective(target: FiniteAbelianGroup[U], mapping: Mapping[T, U]) -> bool:
    return set(mapping.values()) == set(target.elements)


def kernel(target: FiniteAbelianGroup[U], mapping: Mapping[T, U]) -> list[T]:
    unit = target.elements[target.identity]
    return [x for x, y in mapping.items() if y == unit]


def image(mapping: Mapping[T, U]) -> set[U]:
    return set(mapping.values())


def integer_map_is_surjective(matrix: np.ndarray) -> bool:
    """Сюръективность ℤ^n → ℤ^m, заданного матрицей m×n: все инвариантные множители равны 1"""
    rows, cols = matrix.shape
    if rows == 0:
        return True
    if cols == 0:
        return False
    factors = invariant_factors(Matrix(matrix.tolist()), domain=ZZ)
    return len(factors) == rows and all(abs(int(d)) == 1 for d in factors)
