"""
Настройки приложения через переменные окружения
"""
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Основные настройки вычислений и вывода"""

    model_config = SettingsConfigDict(
        env_prefix="RINGK0_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Основные
    log_level: str = Field("WARNING", description="Уровень логирования")

    # Лимиты перебора
    exhaustive_pair_limit: int = Field(
        1_000_000, ge=1, description="Максимум пар элементов для полного перебора"
    )
    reduction_iteration_cap: int = Field(
        10_000, ge=1, description="Жёсткий лимит шагов редукции Гаусса"
    )
    morphism_pair_limit: int = Field(
        100_000, ge=1, description="Максимум пар при полной проверке законов морфизма"
    )
    max_monoid_size: int = Field(24, ge=1, description="Максимальный размер конечного моноида")

    # Выборки для проверок
    k0_sample_rank_bound: int = Field(3, ge=1, description="Граница |r| в выборках K0")
    char_zero_bound: int = Field(20, ge=1, description="Граница |n| в проверке характеристики")
    semiring_sample_bound: int = Field(20, ge=1, description="Диапазон проверки для ℕ")
    generated_module_count: int = Field(200, ge=1, description="Число случайных модулей")
    random_seed: int = Field(20240501, description="Seed генерации модулей")

    # Вывод
    json_indent: Optional[int] = Field(2, description="Отступ JSON (None - в одну строку)")
    schema_version: int = Field(1, description="Версия схемы машинного вывода")


# Глобальный экземпляр настроек (lazy initialization)
_settings_instance: Optional[Settings] = None


def get_settings() -> Settings:
    """Получить экземпляр настроек (создается при первом обращении)"""
    global _settings_instance
    if _settings_instance is None:
        _settings_instance = Settings()
    return _settings_instance


def reset_settings() -> None:
    """Сбросить кэш настроек (для тестов и смены окружения)"""
    global _settings_instance
    _settings_instance = None
