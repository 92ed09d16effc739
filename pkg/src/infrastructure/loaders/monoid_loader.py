"""
Загрузка конечных моноидов и полуколец из YAML-файлов.

Формат файла:
    name: boolean                 # необязательно, по умолчанию имя файла
    elements: ["0", "1"]          # имена элементов; порядок задаёт нормальные формы
    add: [[0, 1], [1, 1]]         # таблица сложения по индексам
    mul: [[0, 0], [0, 1]]         # необязательно: таблица умножения
    zero: "0"                     # необязательно, по умолчанию elements[0]
    one: "1"                      # необязательно, по умолчанию elements[1]
    cancellative: false
    target: "Z/5"                 # необязательно: кольцо для универсального свойства
    phi: ["0", "1"]               # образы элементов в target
"""
import logging
from pathlib import Path
from typing import Optional, Union

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from ...domain.entities.monoid import FiniteMonoid, FiniteSemiring, MonoidDocument
from ...domain.exceptions import MonoidFileError
from ...domain.services import grothendieck

logger = logging.getLogger(__name__)


class MonoidFileSchema(BaseModel):
    """Схема содержимого файла моноида"""
    name: Optional[str] = None
    elements: list[str] = Field(..., min_length=1)
    add: list[list[int]]
    mul: Optional[list[list[int]]] = None
    zero: Optional[str] = None
    one: Optional[str] = None
    cancellative: bool = False
    target: Optional[str] = None
    phi: Optional[list[Union[str, int]]] = None

    @field_validator("elements")
    @classmethod
    def unique_names(cls, value: list[str]) -> list[str]:
        if len(set(value)) != len(value):
            raise ValueError("element names must be unique")
        return value

    @model_validator(mode="after")
    def tables_match(self) -> "MonoidFileSchema":
        size = len(self.elements)
        for label, table in (("add", self.add), ("mul", self.mul)):
            if table is None:
                continue
            if len(table) != size or any(len(row) != size for row in table):
                raise ValueError(f"{label} table must be {size}x{size}")
            if any(not 0 <= v < size for row in table for v in row):
                raise ValueError(f"{label} table entries must be indices 0..{size - 1}")
        for label, name in (("zero", self.zero), ("one", self.one)):
            if name is not None and name not in self.elements:
                raise ValueError(f"{label} element {name!r} is not listed in elements")
        if self.phi is not None:
            if self.target is None:
                raise ValueError("phi requires a target ring")
            if len(self.phi) != size:
                raise ValueError(f"phi must list {size} images")
        return self


class MonoidFileLoader:
    """
    Читает YAML, проверяет схему через pydantic и аксиомы через движок пополнения.
    """

    def __init__(self) -> None:
        self._logger = logging.getLogger(f"{__name__}.{self.__class__.__name__}")

    def load(self, path: Union[str, Path]) -> MonoidDocument:
        """
        Args:
            path: Путь к YAML-файлу

        Returns:
            Проверенный документ моноида или полукольца

        Raises:
            MonoidFileError: Файл не найден, не YAML или не проходит схему
            AxiomViolationError: Таблицы нарушают аксиомы (свидетель - тройка)
        """
        file_path = Path(path)
        if not file_path.exists():
            raise MonoidFileError(f"monoid file not found: {file_path}")
        try:
            raw = yaml.safe_load(file_path.read_text(encoding="utf-8"))
        except yaml.YAMLError as e:
            self._logger.error(f"Ошибка разбора YAML {file_path}: {e}")
            raise MonoidFileError(f"{file_path}: not a valid YAML document: {e}") from e
        if not isinstance(raw, dict):
            raise MonoidFileError(f"{file_path}: expected a mapping at top level")

        try:
            schema = MonoidFileSchema.model_validate(raw)
        except ValidationError as e:
            self._logger.error(f"Файл {file_path} не соответствует схеме")
            raise MonoidFileError(f"{file_path}: {e}") from e

        document = self.to_document(schema, default_name=file_path.stem)
        self._logger.info(
            f"Загружен {'полукольцо' if document.is_semiring else 'моноид'} "
            f"{document.structure.name} из {document.structure.size} элементов"
        )
        return document

    def to_document(self, schema: MonoidFileSchema, default_name: str = "M") -> MonoidDocument:
        name = schema.name or default_name
        elements = tuple(schema.elements)
        add = tuple(tuple(row) for row in schema.add)
        zero = elements.index(schema.zero) if schema.zero is not None else 0

        structure: FiniteMonoid
        if schema.mul is not None:
            if schema.one is not None:
                one = elements.index(schema.one)
            elif len(elements) > 1:
                one = 1
            else:
                one = 0
            structure = FiniteSemiring(name, elements, add, zero, tuple(tuple(row) for row in schema.mul), one)
            grothendieck.validate_semiring(structure)
        else:
            structure = FiniteMonoid(name, elements, add, zero)
            grothendieck.validate_monoid(structure)

        phi = tuple(str(v) for v in schema.phi) if schema.phi is not None else None
        return MonoidDocument(structure, schema.cancellative, schema.target, phi)


def load_monoid_file(path: Union[str, Path]) -> MonoidDocument:
    return MonoidFileLoader().load(path)
