# Domain entities - frozen dataclasses for rings, modules, ideals and groups
from .boolean import BooleanIsomorphism, BooleanRing, RankIdentity
from .group import FiniteAbelianGroup, format_structure
from .ideal import ClassGroup, FractionalIdeal, IdealClass, QuadForm
from .k0 import K0Element, K0Ring, K0Shape
from .module import OrthogonalDecomposition, ProjModule
from .monoid import FiniteMonoid, FiniteSemiring, GrothElement, MonoidDocument
from .report import CheckResult, CommandReport, TheoremReport
from .ring import (
    ConcreteRing,
    LocalFactor,
    QuadraticElement,
    ResidueElement,
    RingElement,
    RingKind,
    RingMorphism,
)
from .spectrum import ComponentDecomposition, H0Element

__all__ = [
    "BooleanIsomorphism",
    "BooleanRing",
    "RankIdentity",
    "FiniteAbelianGroup",
    "format_structure",
    "ClassGroup",
    "FractionalIdeal",
    "IdealClass",
    "QuadForm",
    "K0Element",
    "K0Ring",
    "K0Shape",
    "OrthogonalDecomposition",
    "ProjModule",
    "FiniteMonoid",
    "FiniteSemiring",
    "GrothElement",
    "MonoidDocument",
    "CheckResult",
    "CommandReport",
    "TheoremReport",
    "ConcreteRing",
    "LocalFactor",
    "QuadraticElement",
    "ResidueElement",
    "RingElement",
    "RingKind",
    "RingMorphism",
    "ComponentDecomposition",
    "H0Element",
]
