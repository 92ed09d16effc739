"""
Классы изоморфизма конечно порождённых проективных модулей.
"""
from dataclasses import dataclass
from typing import Optional

from .ideal import QuadForm
from .ring import ConcreteRing, RingElement


@dataclass(frozen=True)
class ProjModule:
    """
    Проективный модуль с точностью до изоморфизма.

    - над конечным произведением и полулокальным порядком: ranks - ранг на каждой компоненте
    - над QuadOrder: ranks = (n,) и cls - класс Штейница (приведённая форма)

    Нулевой модуль над QuadOrder всегда несёт тривиальный класс.
    """
    ring: ConcreteRing
    ranks: tuple[int, ...]
    cls: Optional[QuadForm] = None

    @property
    def is_steinitz(self) -> bool:
        return self.cls is not None

    @property
    def rank(self) -> int:
        """Ранг модуля постоянного ранга (максимум рангов в общем случае)"""
        return max(self.ranks, default=0)

    @property
    def has_constant_rank(self) -> bool:
        return len(set(self.ranks)) <= 1

    def __str__(self) -> str:
        if self.cls is not None:
            return f"steinitz({self.ranks[0]}; {self.cls})"
        return "ranks(" + ",".join(str(r) for r in self.ranks) + ")"


@dataclass(frozen=True)
class OrthogonalDecomposition:
    """
    e₀..e_n: D(e_k) - множество, где ранг M равен k.

    annihilators[k-1] - идемпотент, порождающий Ann(Λᵏ M), k = 1..n+1.
    """
    module: ProjModule
    idems: tuple[RingElement, ...]
    annihilators: tuple[RingElement, ...]

    @property
    def max_rank(self) -> int:
        return len(self.idems) - 1
