"""
Модели отчётов проверок: используются и библиотекой, и машинным выводом CLI.
"""
from typing import Any, Optional

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """Результат одной проверки"""
    name: str = Field(..., description="Имя проверки")
    passed: bool = Field(..., description="Пройдена ли проверка")
    witness: Optional[Any] = Field(None, description="Свидетель нарушения или пояснение")


class TheoremReport(BaseModel):
    """Отчёт набора проверок для одного утверждения"""
    theorem_id: str
    ring: Optional[str] = None
    results: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def check(self, name: str, passed: bool, witness: Any = None) -> bool:
        """Добавляет проверку и возвращает её результат"""
        self.checks.append(CheckResult(name=name, passed=bool(passed), witness=None if passed else witness))
        return bool(passed)


class CommandReport(BaseModel):
    """Один JSON-документ на вызов CLI"""
    schema_version: int
    command: str
    results: dict[str, Any] = Field(default_factory=dict)
    checks: list[CheckResult] = Field(default_factory=list)
    status: str = "pass"
