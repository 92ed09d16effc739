"""
Иерархия исключений домена.
Все ошибки вычислений наследуются от RingK0Error.
"""
from typing import Any, Optional


class RingK0Error(Exception):
    """Базовое исключение для всех операций библиотеки"""
    pass


class RingSpecError(RingK0Error, ValueError):
    """Некорректная текстовая запись кольца, морфизма или литерала"""
    pass


class InvalidElementError(RingK0Error, ValueError):
    """Элемент не принадлежит кольцу (или не идемпотент, где это требуется)"""
    pass


class UnsupportedOperationError(RingK0Error):
    """Операция не определена для данного семейства колец"""
    pass


class AxiomViolationError(RingK0Error):
    """Нарушена аксиома моноида, полукольца или морфизма"""

    def __init__(self, message: str, witness: Optional[Any] = None):
        self.witness = witness
        suffix = f" (witness: {witness!r})" if witness is not None else ""
        super().__init__(f"{message}{suffix}")


class InvariantViolationError(RingK0Error):
    """Проверка теоремы не прошла - признак ошибки в реализации"""

    def __init__(self, check: str, witness: Optional[Any] = None):
        self.check = check
        self.witness = witness
        super().__init__(f"[{check}] invariant violated: {witness!r}")


class ReductionError(RingK0Error):
    """Превышен лимит итераций редукции формы"""
    pass


class MonoidFileError(RingK0Error):
    """Файл моноида не читается или не соответствует схеме"""
    pass
