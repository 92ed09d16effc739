"""
Командная строка ringk0: вычисления с кольцами, идеалами, модулями и K₀,
наборы проверок и пополнение конечных моноидов.

Коды выхода: 0 - все проверки прошли, 1 - проверка не прошла,
2 - ошибка использования или разбора.
"""
import functools
import json
import logging
from typing import Any, Callable, Optional

import click

from ...config.settings import get_settings
from ...domain.entities.group import format_structure
from ...domain.entities.monoid import FiniteSemiring
from ...domain.entities.report import CheckResult, CommandReport, TheoremReport
from ...domain.entities.ring import ConcreteRing, RingKind
from ...domain.exceptions import AxiomViolationError, InvariantViolationError, RingK0Error, RingSpecError
from ...domain.services import (
    boolean_ring,
    class_groups,
    exact_sequences,
    grothendieck,
    ideals,
    k0,
    modules,
    ring_core,
    semirings,
    spectrum,
)
from ...domain.services import quadratic as q
from ...infrastructure.loaders import load_monoid_file
from ...infrastructure.logging import setup_logging
from ...infrastructure.parsing import parse_form, parse_ideal, parse_module
from ..verification import THEOREM_IDS, TheoremSuiteRunner

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


# ============================================================================
# Вывод
# ============================================================================

def _format_value(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(str(v) for v in value) if value else "-"
    if isinstance(value, dict):
        return "; ".join(f"{k}: {v}" for k, v in value.items())
    return str(value)


def emit(ctx: click.Context, command: str, results: dict[str, Any],
         checks: Optional[list[CheckResult]] = None) -> None:
    """Печатает отчёт и завершает команду с кодом 0 или 1"""
    settings = get_settings()
    checks = checks or []
    status = "pass" if all(c.passed for c in checks) else "fail"
    report = CommandReport(
        schema_version=settings.schema_version,
        command=command,
        results=results,
        checks=checks,
        status=status,
    )
    if ctx.obj.get("json"):
        click.echo(json.dumps(report.model_dump(), sort_keys=True, indent=settings.json_indent,
                              ensure_ascii=False, default=str))
    else:
        click.echo(f"Команда: {command}")
        for key, value in results.items():
            click.echo(f"  {key}: {_format_value(value)}")
        if checks:
            click.echo("Проверки:")
            for check in checks:
                mark = "✅" if check.passed else "❌"
                line = f"  {mark} {check.name}"
                if not check.passed and check.witness is not None:
                    line += f" (свидетель: {check.witness})"
                click.echo(line)
        click.echo(f"Итог: {'PASS' if status == 'pass' else 'FAIL'}")
    ctx.exit(EXIT_OK if status == "pass" else EXIT_CHECK_FAILED)


def _prefixed(report: TheoremReport) -> list[CheckResult]:
    return [
        CheckResult(name=f"{report.theorem_id}:{check.name}", passed=check.passed, witness=check.witness)
        for check in report.checks
    ]


def handle_errors(func: Callable[..., None]) -> Callable[..., None]:
    """RingK0Error → сообщение в stderr и код 2 (нарушение инварианта → код 1)"""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            func(*args, **kwargs)
        except InvariantViolationError as e:
            logger.error(f"Нарушен инвариант: {e}")
            click.echo(f"error: {e}", err=True)
            raise SystemExit(EXIT_CHECK_FAILED)
        except RingK0Error as e:
            logger.debug(f"Ошибка выполнения команды: {e}")
            click.echo(f"error: {e}", err=True)
            raise SystemExit(EXIT_USAGE)

    return wrapper


def _quadratic_ring(spec: str) -> ConcreteRing:
    ring = ring_core.parse_ring(spec)
    if not ring.is_quadratic:
        raise RingSpecError(f"{ring} is not a quadratic order")
    return ring


# ============================================================================
# Группа команд
# ============================================================================

@click.group()
@click.option("--json", "as_json", is_flag=True, help="Машинный вывод: один JSON-документ")
@click.option("-v", "--verbose", is_flag=True, help="Подробное логирование в stderr")
@click.pass_context
def cli(ctx: click.Context, as_json: bool, verbose: bool) -> None:
    """Вычисления K₀, Pic, Cl, B и H₀ для конечных колец и мнимых квадратичных порядков."""
    setup_logging("DEBUG" if verbose else None)
    ctx.ensure_object(dict)
    ctx.obj["json"] = as_json


# ----------------------------------------------------------------------------
# ring
# ----------------------------------------------------------------------------

@cli.group()
def ring() -> None:
    """Кольца: разложение, идемпотенты, B(R), H₀(R)."""


@ring.command("info")
@click.argument("spec")
@click.pass_context
@handle_errors
def ring_info(ctx: click.Context, spec: str) -> None:
    base = ring_core.parse_ring(spec)
    render = functools.partial(ring_core.render_element, base)
    idempotents = ring_core.idempotents(base)
    decomposition = spectrum.component_decomposition(base)
    boolean = boolean_ring.boolean_ring_of(base)

    results: dict[str, Any] = {"ring": str(base), "kind": base.kind.value}
    if base.is_finite:
        results["factors"] = [str(f) for f in base.factors]
        results["order"] = base.order
        results["field"] = len(base.factors) == 1 and base.factors[0].exponent == 1
    else:
        results["discriminant"] = base.discriminant
        results["localized_primes"] = sorted(base.localized_primes)
    results.update({
        "components": base.component_count,
        "connected": base.component_count == 1,
        "idempotents": [render(e) for e in idempotents],
        "primitive_idempotents": [render(e) for e in decomposition.components],
        "b_order": boolean.order,
        "h0_rank": base.component_count,
        "h0_units": len(spectrum.h0_units(base)),
    })
    if boolean.order <= 16:
        results["b_add"] = [[render(boolean.elements[int(j)]) for j in row] for row in boolean.add]
        results["b_mul"] = [[render(boolean.elements[int(j)]) for j in row] for row in boolean.mul]

    checks = []
    try:
        boolean_ring.check_boolean_axioms(boolean)
        checks.append(CheckResult(name="boolean.axioms", passed=True))
    except AxiomViolationError as e:
        checks.append(CheckResult(name="boolean.axioms", passed=False, witness=str(e)))
    iso = boolean_ring.b_iso_h0units(base)
    witness = boolean_ring.bijection_witness(iso, spectrum.h0_units(base))
    checks.append(CheckResult(name="b_iso_h0_units", passed=witness is None, witness=witness))
    emit(ctx, f"ring info {spec}", results, checks)


# ----------------------------------------------------------------------------
# classgroup
# ----------------------------------------------------------------------------

@cli.command("classgroup", context_settings={"ignore_unknown_options": True})
@click.argument("discriminant", type=int, required=False)
@click.option("--range", "bounds", type=(int, int), default=None, help="Перебор D между двумя границами")
@click.pass_context
@handle_errors
def classgroup(ctx: click.Context, discriminant: Optional[int], bounds: Optional[tuple[int, int]]) -> None:
    """Приведённые формы, h(D) и элементарные делители Cl(D)."""
    if bounds is None:
        if discriminant is None:
            raise RingSpecError("give a discriminant or --range LO HI")
        group = class_groups.class_group(discriminant)
        results = {
            "discriminant": discriminant,
            "forms": [str(f) for f in group.forms],
            "class_number": group.class_number,
            "elementary_divisors": list(group.elementary_divisors),
            "structure": group.group.structure(),
        }
        emit(ctx, f"classgroup {discriminant}", results)
        return

    high, low = max(bounds), min(bounds)
    table, skipped = [], []
    for d in range(high, low - 1, -1):
        if d >= 0 or not q.is_fundamental_discriminant(d):
            skipped.append(d)
            continue
        group = class_groups.class_group(d)
        table.append({"D": d, "h": group.class_number, "structure": group.group.structure()})
    if not table:
        raise RingSpecError(f"no fundamental negative discriminant between {low} and {high}")
    emit(ctx, f"classgroup --range {bounds[0]} {bounds[1]}",
         {"table": table, "skipped": len(skipped)})


# ----------------------------------------------------------------------------
# ideal
# ----------------------------------------------------------------------------

@cli.group()
def ideal() -> None:
    """Дробные идеалы O(D): умножение, обращение, классы, главность."""


@ideal.command("mul")
@click.argument("spec")
@click.argument("left")
@click.argument("right")
@click.pass_context
@handle_errors
def ideal_mul(ctx: click.Context, spec: str, left: str, right: str) -> None:
    base = _quadratic_ring(spec)
    d = base.discriminant
    product = ideals.ideal_mul(parse_ideal(d, left), parse_ideal(d, right))
    emit(ctx, f"ideal mul {spec} {left} {right}", {
        "product": str(product),
        "norm": str(product.norm),
        "class": str(class_groups.ideal_class(product)),
    })


@ideal.command("inv")
@click.argument("spec")
@click.argument("value")
@click.pass_context
@handle_errors
def ideal_inv(ctx: click.Context, spec: str, value: str) -> None:
    base = _quadratic_ring(spec)
    parsed = parse_ideal(base.discriminant, value)
    inverse = ideals.ideal_inv(parsed)
    unit = ideals.unit_ideal(base.discriminant)
    checks = [CheckResult(name="ideal_times_inverse.unit", passed=ideals.ideal_mul(parsed, inverse) == unit)]
    emit(ctx, f"ideal inv {spec} {value}", {"inverse": str(inverse), "norm": str(inverse.norm)}, checks)


@ideal.command("reduce")
@click.argument("form")
@click.pass_context
@handle_errors
def ideal_reduce(ctx: click.Context, form: str) -> None:
    """Редукция формы form(a,b,c)."""
    parsed = parse_form(form)
    class_groups.validate_form(parsed, parsed.discriminant)
    reduced, steps = class_groups.reduce_with_steps(parsed)
    bound = class_groups.reduction_step_bound(parsed)
    checks = [
        CheckResult(name="result.reduced", passed=reduced.is_reduced),
        CheckResult(name="steps.within_bound", passed=steps <= bound, witness={"steps": steps, "bound": bound}),
    ]
    emit(ctx, f"ideal reduce {form}", {
        "reduced": str(reduced),
        "discriminant": parsed.discriminant,
        "steps": steps,
    }, checks)


@ideal.command("class")
@click.argument("spec")
@click.argument("value")
@click.pass_context
@handle_errors
def ideal_class(ctx: click.Context, spec: str, value: str) -> None:
    base = _quadratic_ring(spec)
    parsed = parse_ideal(base.discriminant, value)
    cls = class_groups.ideal_class(parsed)
    group = class_groups.class_group(base.discriminant)
    emit(ctx, f"ideal class {spec} {value}", {
        "ideal": str(parsed),
        "class": str(cls),
        "trivial": cls == group.identity,
        "class_number": group.class_number,
    })


@ideal.command("principal")
@click.argument("spec")
@click.argument("value")
@click.pass_context
@handle_errors
def ideal_principal(ctx: click.Context, spec: str, value: str) -> None:
    base = _quadratic_ring(spec)
    parsed = parse_ideal(base.discriminant, value)
    if base.kind is RingKind.SEMILOCAL_QUAD_ORDER:
        result = exact_sequences.principalize_semilocal(base, parsed)
        generator: Optional[str] = q.render_quadratic(result.generator)
    else:
        found = ideals.is_principal(parsed)
        generator = q.render_quadratic(found) if found is not None else None
    emit(ctx, f"ideal principal {spec} {value}", {
        "ideal": str(parsed),
        "principal": generator is not None,
        "generator": generator if generator is not None else "-",
    })


# ----------------------------------------------------------------------------
# module
# ----------------------------------------------------------------------------

@cli.group()
def module() -> None:
    """Классы проективных модулей: ранги, ⊕, ⊗, двойственный, внешние степени."""


@module.command("info")
@click.argument("spec")
@click.argument("value")
@click.pass_context
@handle_errors
def module_info(ctx: click.Context, spec: str, value: str) -> None:
    base = ring_core.parse_ring(spec)
    parsed = parse_module(base, value)
    render = functools.partial(ring_core.render_element, base)
    decomposition = modules.orthogonal_decomposition(parsed)
    results: dict[str, Any] = {
        "module": str(parsed),
        "rank_map": list(modules.rank_map(parsed).values),
        "constant_rank": parsed.has_constant_rank,
        "dual": str(modules.dual(parsed)),
        "invertible": modules.is_invertible(parsed),
        "trace_idempotent": render(modules.trace_ideal(parsed)),
        "annihilator_idempotent": render(modules.annihilator(parsed)),
        "rank_idempotents": [render(e) for e in decomposition.idems],
    }
    powers = {}
    for k in range(parsed.rank + 2):
        try:
            powers[str(k)] = str(modules.exterior_power(parsed, k))
        except RingK0Error:
            powers[str(k)] = "-"
    results["exterior_powers"] = powers
    emit(ctx, f"module info {spec} {value}", results)


def _module_binary(ctx: click.Context, op: str, spec: str, left: str, right: str) -> None:
    base = ring_core.parse_ring(spec)
    a, b = parse_module(base, left), parse_module(base, right)
    if op == "sum":
        result, oracle = modules.direct_sum(a, b), modules.oracle_direct_sum
    else:
        result, oracle = modules.tensor(a, b), modules.oracle_tensor
    checks = []
    if result.is_steinitz:
        expected = oracle(a, b)
        checks.append(CheckResult(name=f"{op}.matches_decomposition", passed=expected == result,
                                  witness=str(expected)))
    emit(ctx, f"module {op} {spec} {left} {right}", {"result": str(result)}, checks)


@module.command("sum")
@click.argument("spec")
@click.argument("left")
@click.argument("right")
@click.pass_context
@handle_errors
def module_sum(ctx: click.Context, spec: str, left: str, right: str) -> None:
    _module_binary(ctx, "sum", spec, left, right)


@module.command("tensor")
@click.argument("spec")
@click.argument("left")
@click.argument("right")
@click.pass_context
@handle_errors
def module_tensor(ctx: click.Context, spec: str, left: str, right: str) -> None:
    _module_binary(ctx, "tensor", spec, left, right)


# ----------------------------------------------------------------------------
# k0, verify, groth, principalize
# ----------------------------------------------------------------------------

@cli.command("k0")
@click.argument("spec")
@click.pass_context
@handle_errors
def k0_command(ctx: click.Context, spec: str) -> None:
    """Замкнутая форма K₀(R), нильрадикал и группа единиц."""
    base = ring_core.parse_ring(spec)
    summary = k0.k0_summary(base)
    checks = []
    try:
        k0.check_k0_ring_axioms(k0.k0_of_ring(base))
        checks.append(CheckResult(name="k0.ring_axioms", passed=True))
    except AxiomViolationError as e:
        checks.append(CheckResult(name="k0.ring_axioms", passed=False, witness=e.witness))
    emit(ctx, f"k0 {spec}", summary, checks)


@cli.command("verify")
@click.argument("theorem_id", type=click.Choice(THEOREM_IDS))
@click.argument("spec", required=False)
@click.option("--morphism", "morphism_text", default=None, help="Например \"diag: Z/2 -> Z/2 x Z/2\"")
@click.pass_context
@handle_errors
def verify(ctx: click.Context, theorem_id: str, spec: Optional[str], morphism_text: Optional[str]) -> None:
    """Запуск набора проверок по идентификатору."""
    base = ring_core.parse_ring(spec) if spec else None
    morphism = ring_core.parse_morphism(morphism_text) if morphism_text else None
    reports = TheoremSuiteRunner().run(theorem_id, base, morphism)

    results: dict[str, Any] = {}
    checks: list[CheckResult] = []
    for report in reports:
        key = report.theorem_id if report.theorem_id not in results else f"{report.theorem_id}[{report.ring}]"
        results[key] = report.results
        checks.extend(_prefixed(report))
    command = f"verify {theorem_id}" + (f" {spec}" if spec else "") + (f" --morphism {morphism_text}" if morphism_text else "")
    emit(ctx, command, results, checks)


@cli.command("groth")
@click.argument("path", type=click.Path())
@click.option("--target", default=None, help="Кольцо для универсального свойства")
@click.pass_context
@handle_errors
def groth(ctx: click.Context, path: str, target: Optional[str]) -> None:
    """Пополнение Гротендика моноида или полукольца из YAML-файла."""
    document = load_monoid_file(path)
    structure = document.structure
    completion = (
        grothendieck.groth_ring(structure) if isinstance(structure, FiniteSemiring)
        else grothendieck.groth_completion(structure)
    )
    results: dict[str, Any] = {
        "structure": structure.name,
        "kind": "semiring" if document.is_semiring else "monoid",
        "size": structure.size,
        "order": completion.order,
        "group_structure": completion.group.structure(),
        "classes": [completion.render(x) for x in completion.group.elements],
        "gamma": {name: completion.render(completion.gamma(i)) for i, name in enumerate(structure.elements)},
    }
    if document.is_semiring:
        results["zero_ring"] = completion.is_zero_ring
        if completion.is_zero_ring:
            results["note"] = "completion is the zero ring"

    checks: list[CheckResult] = []
    if document.cancellative:
        witness = _cancellation_failure(completion)
        checks.append(CheckResult(name="cancellative", passed=witness is None, witness=witness))

    target_spec = target or document.target
    if target_spec is not None:
        target_ring = ring_core.parse_ring(target_spec)
        ring_target = semirings.ConcreteRingTarget(target_ring)
        images = document.phi or structure.elements
        values = [ring_core.parse_element(target_ring, text) for text in images]
        try:
            theta = grothendieck.universal_extend_finite(completion, ring_target, lambda i: values[i])
            results["target"] = str(target_ring)
            results["theta"] = {
                completion.render(x): ring_core.render_element(target_ring, theta(x))
                for x in completion.group.elements
            }
            checks.append(CheckResult(name="universal.theta_after_gamma_is_phi", passed=True))
        except AxiomViolationError as e:
            results["target"] = str(target_ring)
            checks.append(CheckResult(name="universal.phi_is_morphism", passed=False, witness=str(e)))
    emit(ctx, f"groth {path}" + (f" --target {target}" if target else ""), results, checks)


def _cancellation_failure(completion: grothendieck.FiniteCompletion) -> Optional[tuple[str, str, str]]:
    """a + c = b + c при a ≠ b"""
    m = completion.monoid
    for a in range(m.size):
        for b in range(a + 1, m.size):
            for c in range(m.size):
                if m.plus(a, c) == m.plus(b, c):
                    return m.elements[a], m.elements[b], m.elements[c]
    return None


@cli.command("principalize")
@click.argument("spec")
@click.argument("value")
@click.pass_context
@handle_errors
def principalize(ctx: click.Context, spec: str, value: str) -> None:
    """Образующая идеала в полулокальном порядке O(D) loc {p, ...}."""
    base = _quadratic_ring(spec)
    parsed = parse_ideal(base.discriminant, value)
    result = exact_sequences.principalize_semilocal(base, parsed)
    checks = [
        CheckResult(name=f"valuation[{prime}]", passed=expected == actual,
                    witness={"expected": expected, "actual": actual})
        for prime, expected, actual in result.valuations
    ]
    emit(ctx, f"principalize {spec} {value}", {
        "ideal": str(parsed),
        "generator": q.render_quadratic(result.generator),
        "primes": [prime for prime, _, _ in result.valuations],
        "class_number_before_localization": class_groups.class_group(base.discriminant).class_number,
        "cl_after_localization": format_structure(exact_sequences.ideal_class_group(base).elementary_divisors),
    }, checks)
