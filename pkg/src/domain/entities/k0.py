"""
Кольцо Гротендика K₀(R) в замкнутой форме.

FreeAbelian(c): K₀ ≅ ℤ^c через векторы рангов, умножение покомпонентное.
ZPlusCl(D): пары (r, c) ∈ ℤ × Cl(D); в мультипликативной записи класса
(r₁, c₁)·(r₂, c₂) = (r₁r₂, c₁^{r₂}·c₂^{r₁}), (r₁, c₁) + (r₂, c₂) = (r₁ + r₂, c₁c₂).
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..exceptions import InvalidElementError
from .ideal import ClassGroup, QuadForm
from .ring import ConcreteRing


class K0Shape(Enum):
    FREE_ABELIAN = "FreeAbelian"
    Z_PLUS_CL = "ZPlusCl"


@dataclass(frozen=True)
class K0Element:
    """Элемент [M, N] в нормальной форме: (r_M − r_N, класс)"""
    h0: tuple[int, ...]
    cls: Optional[QuadForm] = None

    def __str__(self) -> str:
        ranks = "(" + ", ".join(str(v) for v in self.h0) + ")"
        if self.cls is None:
            return ranks
        return f"({self.h0[0]}, {self.cls})"


@dataclass(frozen=True)
class K0Ring:
    base: ConcreteRing
    shape: K0Shape
    components: int
    class_group: Optional[ClassGroup] = None

    @property
    def is_zero_ring(self) -> bool:
        return self.components == 0

    def _trivial_class(self) -> Optional[QuadForm]:
        return self.class_group.identity if self.class_group is not None else None

    def element(self, h0: tuple[int, ...], cls: Optional[QuadForm] = None) -> K0Element:
        if len(h0) != self.components:
            raise InvalidElementError(f"K0 element {h0} has wrong length for {self.base}")
        if self.shape is K0Shape.Z_PLUS_CL:
            assert self.class_group is not None
            cls = cls if cls is not None else self.class_group.identity
            if cls not in self.class_group.forms:
                raise InvalidElementError(f"{cls} is not a reduced form of D={self.class_group.discriminant}")
            return K0Element(h0, cls)
        if cls is not None:
            raise InvalidElementError(f"K0({self.base}) has no class part")
        return K0Element(h0)

    def constant(self, n: int) -> K0Element:
        """n·[R, 0]"""
        return self.element((n,) * self.components, self._trivial_class())

    @property
    def zero(self) -> K0Element:
        return self.constant(0)

    @property
    def one(self) -> K0Element:
        return self.constant(1)

    def add(self, x: K0Element, y: K0Element) -> K0Element:
        h0 = tuple(a + b for a, b in zip(x.h0, y.h0))
        if self.class_group is None:
            return K0Element(h0)
        assert x.cls is not None and y.cls is not None
        return K0Element(h0, self.class_group.compose(x.cls, y.cls))

    def neg(self, x: K0Element) -> K0Element:
        h0 = tuple(-a for a in x.h0)
        if self.class_group is None:
            return K0Element(h0)
        assert x.cls is not None
        return K0Element(h0, self.class_group.inverse(x.cls))

    def sub(self, x: K0Element, y: K0Element) -> K0Element:
        return self.add(x, self.neg(y))

    def mul(self, x: K0Element, y: K0Element) -> K0Element:
        h0 = tuple(a * b for a, b in zip(x.h0, y.h0))
        if self.class_group is None:
            return K0Element(h0)
        assert x.cls is not None and y.cls is not None
        group = self.class_group
        cls = group.compose(group.power(x.cls, y.h0[0]), group.power(y.cls, x.h0[0]))
        return K0Element(h0, cls)

    def __str__(self) -> str:
        if self.shape is K0Shape.FREE_ABELIAN:
            return "0" if self.components == 0 else "Z^" + str(self.components)
        assert self.class_group is not None
        return f"Z + Cl({self.class_group.discriminant})"
