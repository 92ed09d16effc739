"""
Разбор литералов командной строки: идеалы, формы и классы модулей.

    ideal(a, b)          aℤ + (b + ω)ℤ
    1/2*ideal(a, b)      то же с содержанием 1/2 (так идеал печатается)
    ideal(a, b)/den      то же с содержанием 1/den
    (x, y)               главный идеал (x + yω)
    form(a, b, c)        бинарная квадратичная форма
    ranks(r1, ..., rc)   модуль над конечным произведением
    steinitz(n; form(a, b, c))   модуль ранга n с классом Штейница
    n                    свободный модуль ранга n
"""
import re
from fractions import Fraction

from ...domain.entities.ideal import FractionalIdeal, QuadForm
from ...domain.entities.module import ProjModule
from ...domain.entities.ring import ConcreteRing, QuadraticElement
from ...domain.exceptions import InvalidElementError, RingSpecError
from ...domain.services import class_groups, ideals, modules

_IDEAL_RE = re.compile(r"^(?:(\d+(?:/\d+)?)\*)?ideal\((-?\d+),(-?\d+)\)(?:/(\d+))?$")
_ELEMENT_RE = re.compile(r"^\((-?\d+(?:/\d+)?),(-?\d+(?:/\d+)?)\)$")
_FORM_RE = re.compile(r"^form\((-?\d+),(-?\d+),(-?\d+)\)$")
_RANKS_RE = re.compile(r"^ranks\(([0-9,]*)\)$")
_STEINITZ_RE = re.compile(r"^steinitz\((\d+);(form\(-?\d+,-?\d+,-?\d+\))\)$")


def _compact(text: str) -> str:
    return re.sub(r"\s+", "", text or "")


def parse_form(text: str) -> QuadForm:
    match = _FORM_RE.match(_compact(text))
    if not match:
        raise RingSpecError(f"malformed form literal: {text!r}")
    return QuadForm(*(int(v) for v in match.groups()))


def parse_ideal(discriminant: int, text: str) -> FractionalIdeal:
    """
    Raises:
        RingSpecError: Литерал не разобран
        InvalidElementError: Тройка не задаёт идеал O(D)
    """
    compact = _compact(text)
    match = _IDEAL_RE.match(compact)
    if match:
        prefix, a, b, den = match.groups()
        content = Fraction(prefix) if prefix else Fraction(1)
        if den is not None:
            if int(den) == 0:
                raise RingSpecError(f"zero denominator in {text!r}")
            content /= int(den)
        return ideals.from_hnf(discriminant, int(a), int(b), content)

    element = _ELEMENT_RE.match(compact)
    if element:
        x = QuadraticElement(Fraction(element.group(1)), Fraction(element.group(2)))
        if x.is_zero:
            raise InvalidElementError("the zero ideal is not invertible")
        return ideals.principal_ideal(discriminant, x)

    form = _FORM_RE.match(compact)
    if form:
        parsed = parse_form(compact)
        class_groups.validate_form(parsed, discriminant)
        return class_groups.form_to_ideal(parsed)
    raise RingSpecError(f"malformed ideal literal: {text!r}")


def parse_module(ring: ConcreteRing, text: str) -> ProjModule:
    """
    Raises:
        RingSpecError: Литерал не разобран
        InvalidElementError: Ранги или класс не подходят кольцу
    """
    compact = _compact(text)
    if compact.isdigit():
        return modules.free(ring, int(compact))

    ranks = _RANKS_RE.match(compact)
    if ranks:
        values = tuple(int(v) for v in ranks.group(1).split(",") if v)
        return modules.make_module(ring, values)

    steinitz = _STEINITZ_RE.match(compact)
    if steinitz:
        return modules.steinitz(ring, int(steinitz.group(1)), parse_form(steinitz.group(2)))
    raise RingSpecError(f"malformed module literal: {text!r}")
