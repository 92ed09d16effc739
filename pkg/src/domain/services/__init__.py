"""
Domain services - алгебра без ввода-вывода.
Кольца и спектр, булево кольцо, модули, идеалы и формы, группы, пополнение Гротендика и K₀.
"""
from . import (
    boolean_ring,
    class_groups,
    exact_sequences,
    finite_groups,
    grothendieck,
    ideals,
    k0,
    modules,
    quadratic,
    ring_core,
    semirings,
    spectrum,
)

__all__ = [
    "boolean_ring",
    "class_groups",
    "exact_sequences",
    "finite_groups",
    "grothendieck",
    "ideals",
    "k0",
    "modules",
    "quadratic",
    "ring_core",
    "semirings",
    "spectrum",
]
