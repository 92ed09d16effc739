"""
Общие fixtures для всех тестов
"""
import os
from pathlib import Path

import pytest

from src.config.settings import reset_settings
from src.domain.entities.ring import ConcreteRing
from src.domain.services import ring_core

DATA_DIR = Path(__file__).parent / "fixtures" / "data"

# Стандартный набор колец для наборов проверок
STANDARD_RING_SPECS = [
    "Z/12",
    "Z/30",
    "Z/7",
    "O(-4)",
    "O(-20)",
    "O(-23)",
    "O(-20) loc {2,3}",
]


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Каждый тест видит настройки по умолчанию без переменных окружения RINGK0_*"""
    for key in list(os.environ):
        if key.startswith("RINGK0_"):
            monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def z12() -> ConcreteRing:
    return ring_core.parse_ring("Z/12")


@pytest.fixture
def z30() -> ConcreteRing:
    return ring_core.parse_ring("Z/30")


@pytest.fixture
def z7() -> ConcreteRing:
    return ring_core.parse_ring("Z/7")


@pytest.fixture
def z2310() -> ConcreteRing:
    return ring_core.parse_ring("Z/2310")


@pytest.fixture
def o4() -> ConcreteRing:
    return ring_core.parse_ring("O(-4)")


@pytest.fixture
def o20() -> ConcreteRing:
    return ring_core.parse_ring("O(-20)")


@pytest.fixture
def o23() -> ConcreteRing:
    return ring_core.parse_ring("O(-23)")


@pytest.fixture
def o20_loc() -> ConcreteRing:
    return ring_core.parse_ring("O(-20) loc {2,3}")


@pytest.fixture(params=STANDARD_RING_SPECS)
def standard_ring(request) -> ConcreteRing:
    return ring_core.parse_ring(request.param)


def pytest_collection_modifyitems(config, items):
    """Автоматически применяет маркеры к тестам"""
    for item in items:
        # Определяем тип теста по пути к файлу
        path = str(item.fspath)
        if "unit" in path:
            item.add_marker(pytest.mark.unit)
        elif "integration" in path:
            item.add_marker(pytest.mark.integration)
        elif "e2e" in path:
            item.add_marker(pytest.mark.e2e)
            item.add_marker(pytest.mark.cli)
            item.add_marker(pytest.mark.slow)

        # Добавляем специфичные маркеры
        if "ring" in path or "boolean" in path or "spectrum" in path:
            item.add_marker(pytest.mark.rings)
        if "ideal" in path or "class_group" in path or "quadratic" in path:
            item.add_marker(pytest.mark.ideals)
        if "k0" in path or "grothendieck" in path:
            item.add_marker(pytest.mark.k0)
